#ifndef ROUGHDP_ORACLE_HPP
#define ROUGHDP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "roughdp/sets.hpp"

// Definition-level brute-force operators and the property-audit harness.
// Nothing here shares code with the fast paths it checks: approximations
// are literal scans over fully materialized families, and laws are
// evaluated instance by instance over generated spaces.

namespace roughdp {

struct ApproximationSpace;  // approx.hpp
class BinaryRelation;
class Universe;

/// True iff the family contains {} and X and is closed under pairwise
/// union and pairwise intersection (A1-A3 on a finite carrier).
bool axiom_check(const SetFamily& family);

/// Literal union of open-family members contained in S.
ElementSet enum_lower(const SetFamily& open_family, const ElementSet& s);
/// Literal intersection of closed-family members containing S.
ElementSet enum_upper(const SetFamily& closed_family, const ElementSet& s);

/// The raw neighborhood operators: lower = { x : xR <= S },
/// upper = { x : xR meets S }. Exposed for comparison with the
/// topological tau tier; on relation-generated topologies the two can
/// differ.
std::pair<ElementSet, ElementSet> pawlak_neighborhood_ops(const Universe& universe,
                                                          const BinaryRelation& relation,
                                                          const ElementSet& s);

/// One law violation (guaranteed tier) or observation (audited tier).
/// Replaying n + relation + witnesses reproduces lhs/rhs bit for bit.
struct AuditFinding {
    std::string property_id;
    std::uint64_t seed = 0;  // 0 for exhaustive mode
    int n = 0;
    std::vector<std::pair<int, int>> relation;
    std::uint64_t subject_bits = 0;
    std::optional<std::uint64_t> other_bits;  // second witness, when the law is binary
    std::uint64_t lhs_bits = 0;
    std::uint64_t rhs_bits = 0;
};

std::string finding_to_json(const AuditFinding& finding);

struct AuditConfig {
    enum class Mode { Exhaustive, Sample };
    Mode mode = Mode::Exhaustive;
    int n = 3;                  // universe size (max size in sample mode)
    std::uint64_t seed = 0;     // sample mode
    int space_count = 0;        // sample mode
    int enum_cap = kDefaultEnumCap;
    std::vector<std::string> laws;  // empty selects every law
};

struct AuditReport {
    long spaces_checked = 0;
    long instances_checked = 0;
    std::vector<AuditFinding> guaranteed_violations;
    std::vector<AuditFinding> audited_findings;  // Theorems 2-3
};

/// Law identifiers understood by the audit. Guaranteed laws must never
/// produce a finding; the two theorem audits may.
const std::vector<std::string>& guaranteed_law_ids();
const std::vector<std::string>& audited_law_ids();

/// Exhaustive mode walks all 2^(n*n) relations on n elements (n <= 4);
/// sample mode draws space_count relations with edge probability cycling
/// through {0.2, 0.5, 0.8} from the seeded generator. Every law is
/// evaluated on every subset (and subset pair) of every space.
AuditReport audit(const AuditConfig& config);

/// Checks every selected law against one prebuilt space, appending
/// findings. Returns the number of law instances evaluated.
long audit_space(const ApproximationSpace& space, const AuditConfig& config,
                 std::uint64_t seed, AuditReport& report);

}  // namespace roughdp

#endif
