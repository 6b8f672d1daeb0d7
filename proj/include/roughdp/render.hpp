#ifndef ROUGHDP_RENDER_HPP
#define ROUGHDP_RENDER_HPP

#include <string>
#include <vector>

#include "roughdp/approx.hpp"
#include "roughdp/oracle.hpp"

// Deterministic text output for the CLI: aligned tables for humans and
// canonical JSON for machines. Identical inputs render identical bytes.

namespace roughdp {

enum class Format { Table, Json };

/// "{u1,u3}" in ascending index order; "{}" when empty.
std::string format_set(const Universe& universe, const ElementSet& s);

struct AccuracyRow {
    ElementSet subject;
    Rational tau;
    Rational pre;
    Rational deltap;
};

/// One row per nonempty proper subset, ordered by cardinality then
/// lexicographic index sequence. paper_rows restricts to subsets of at
/// most three elements.
std::vector<AccuracyRow> accuracy_table(const ApproximationSpace& space, bool paper_rows,
                                        int enum_cap = kDefaultEnumCap);

std::string render_topology(const ApproximationSpace& space, Format format);
std::string render_families(const ApproximationSpace& space, const std::string& kind,
                            Format format);
std::string render_approx(const ApproximationSpace& space, const ElementSet& s,
                          const std::vector<Tier>& tiers, Format format);
std::string render_accuracy_table(const ApproximationSpace& space,
                                  const std::vector<AccuracyRow>& rows, Format format);
std::string render_regions(const ApproximationSpace& space, const RegionReport& report,
                           Format format);
std::string render_classify(const ApproximationSpace& space, const ElementSet& s, Format format);
std::string render_inclusion(const ApproximationSpace& space, const ElementSet& s,
                             const ElementSet& n, const std::vector<Tier>& tiers, Format format);
std::string render_partition(const ApproximationSpace& space, const SetFamily& blocks,
                             Format format);
std::string render_audit_report(const AuditReport& report, Format format);

}  // namespace roughdp

#endif
