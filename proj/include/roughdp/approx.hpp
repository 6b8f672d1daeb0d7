#ifndef ROUGHDP_APPROX_HPP
#define ROUGHDP_APPROX_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "roughdp/open_families.hpp"
#include "roughdp/rational.hpp"
#include "roughdp/sets.hpp"
#include "roughdp/topology.hpp"

// The three-tier approximation calculus. Each tier induces a lower/upper
// operator pair: the union of tier-open subsets of S and the intersection
// of tier-closed supersets of S. The tiers are totally ordered by family
// inclusion, tau <= PO(X) <= dPO(X), which drives every chain law here.

namespace roughdp {

enum class Tier { Tau = 0, Pre = 1, DeltaPre = 2 };

inline constexpr std::array<Tier, 3> kAllTiers{Tier::Tau, Tier::Pre, Tier::DeltaPre};

const char* tier_name(Tier tier);  // "tau", "p", "dp"

/// A generated topology plus its derived open-set families.
struct ApproximationSpace {
    TopologySpace topo;
    OpenFamilies families;

    static ApproximationSpace build(Universe universe, BinaryRelation relation,
                                    int enum_cap = kDefaultEnumCap);

    int width() const { return topo.width(); }
    const Universe& universe() const { return topo.universe(); }
};

ElementSet lower(const ApproximationSpace& space, const ElementSet& s, Tier tier);
ElementSet upper(const ApproximationSpace& space, const ElementSet& s, Tier tier);

/// |lower| / |upper| as an exact rational. Throws EmptySubject for S = {}.
Rational accuracy(const ApproximationSpace& space, const ElementSet& s, Tier tier);

struct TierApproximation {
    Tier tier;
    ElementSet subject;
    ElementSet lower;
    ElementSet upper;
    std::optional<Rational> accuracy;  // nullopt iff subject is empty
};

TierApproximation approximate(const ApproximationSpace& space, const ElementSet& s, Tier tier);

struct PositiveNegativeBoundary {
    ElementSet positive;  // lower
    ElementSet negative;  // complement of upper
    ElementSet boundary;  // upper minus lower
};

PositiveNegativeBoundary pos_neg_boundary(const ApproximationSpace& space, const ElementSet& s,
                                          Tier tier);

/// The 24 named areas carved out of the universe by the six approximation
/// values of a subject set. Areas 1-12 follow the named formulas
/// (internal/external edges, boundaries, exteriors per tier); areas 13-24
/// are the pairwise differences of approximation values.
struct RegionReport {
    ElementSet subject;
    std::array<ElementSet, 24> areas;
};

/// Key for area i (1-based), e.g. "internal_edge_tau",
/// "upper_tau_minus_lower_p".
const char* region_name(int area);

RegionReport regions(const ApproximationSpace& space, const ElementSet& s);

enum class MembershipMode { Strong, Weak };

/// Strong membership is membership in the lower approximation, weak in
/// the upper.
bool membership(const ApproximationSpace& space, int x, const ElementSet& s, Tier tier,
                MembershipMode mode);

struct RoughInclusion {
    bool bottom;  // lower(S) <= lower(N)
    bool top;     // upper(S) <= upper(N)
    bool full;    // both
};

RoughInclusion rough_inclusion(const ApproximationSpace& space, const ElementSet& s,
                               const ElementSet& n, Tier tier);

enum class DefinabilityCategory {
    RoughlyDefinable = 0,      // lower != {} and upper != X
    InternallyUndefinable,     // lower == {} and upper != X
    ExternallyUndefinable,     // lower != {} and upper == X
    TotallyUndefinable,        // lower == {} and upper == X
};

const char* category_name(DefinabilityCategory cat);  // "RD", "IUD", "EUD", "TUD"

struct DefinabilityClass {
    Tier tier;
    DefinabilityCategory category;
    bool exact;  // lower == upper
};

DefinabilityClass classify(const ApproximationSpace& space, const ElementSet& s, Tier tier);

/// Per-tier, per-category subset counts over the whole powerset, plus the
/// subsets (if any) violating the cross-tier chains: the definable class
/// grows with the tier, the three undefinable classes shrink.
struct ClassInclusionReport {
    std::array<std::array<long, 4>, 3> counts{};  // [tier][category]
    std::vector<ElementSet> violations;

    bool ok() const { return violations.empty(); }
};

ClassInclusionReport class_inclusion_report(const ApproximationSpace& space,
                                            int enum_cap = kDefaultEnumCap);

/// Distinct deltaP-upper approximations of singletons, valid as a
/// partition only when every deltaP-open set is also deltaP-closed.
/// Throws PreconditionFailed otherwise.
SetFamily point_closure_partition(const ApproximationSpace& space);

}  // namespace roughdp

#endif
