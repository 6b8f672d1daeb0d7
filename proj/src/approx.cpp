#include "roughdp/approx.hpp"

namespace roughdp {

const char* tier_name(Tier tier) {
    switch (tier) {
        case Tier::Tau: return "tau";
        case Tier::Pre: return "p";
        case Tier::DeltaPre: return "dp";
    }
    return "?";
}

const char* category_name(DefinabilityCategory cat) {
    switch (cat) {
        case DefinabilityCategory::RoughlyDefinable: return "RD";
        case DefinabilityCategory::InternallyUndefinable: return "IUD";
        case DefinabilityCategory::ExternallyUndefinable: return "EUD";
        case DefinabilityCategory::TotallyUndefinable: return "TUD";
    }
    return "?";
}

ApproximationSpace ApproximationSpace::build(Universe universe, BinaryRelation relation,
                                             int enum_cap) {
    auto topo = TopologySpace::from_relation(std::move(universe), std::move(relation), enum_cap);
    auto families = build_families(topo, enum_cap);
    return ApproximationSpace{std::move(topo), std::move(families)};
}

namespace {

ElementSet family_lower(const SetFamily& open_family, const ElementSet& s) {
    std::uint64_t acc = 0;
    for (const auto& v : open_family) {
        if ((v.bits() & ~s.bits()) == 0) acc |= v.bits();
    }
    return ElementSet(acc, s.width());
}

ElementSet family_upper(const SetFamily& closed_family, const ElementSet& s) {
    std::uint64_t acc = ElementSet::mask_for(s.width());
    for (const auto& w : closed_family) {
        if ((s.bits() & ~w.bits()) == 0) acc &= w.bits();
    }
    return ElementSet(acc, s.width());
}

}  // namespace

ElementSet lower(const ApproximationSpace& space, const ElementSet& s, Tier tier) {
    switch (tier) {
        case Tier::Tau: return space.topo.interior(s);
        case Tier::Pre: return family_lower(space.families.preopen, s);
        case Tier::DeltaPre:
            // Closed-form fast path; the oracle suite keeps it honest
            // against the definitional family scan.
            return p_interior_delta(space.topo, s);
    }
    throw Error("bad tier");
}

ElementSet upper(const ApproximationSpace& space, const ElementSet& s, Tier tier) {
    switch (tier) {
        case Tier::Tau: return space.topo.closure(s);
        case Tier::Pre: return family_upper(space.families.preclosed, s);
        case Tier::DeltaPre: return p_closure_delta(space.topo, s);
    }
    throw Error("bad tier");
}

Rational accuracy(const ApproximationSpace& space, const ElementSet& s, Tier tier) {
    if (s.empty()) {
        throw EmptySubject("accuracy is undefined for the empty set");
    }
    return Rational(lower(space, s, tier).count(), upper(space, s, tier).count());
}

TierApproximation approximate(const ApproximationSpace& space, const ElementSet& s, Tier tier) {
    TierApproximation out{tier, s, lower(space, s, tier), upper(space, s, tier), std::nullopt};
    if (!s.empty()) {
        out.accuracy = Rational(out.lower.count(), out.upper.count());
    }
    return out;
}

PositiveNegativeBoundary pos_neg_boundary(const ApproximationSpace& space, const ElementSet& s,
                                          Tier tier) {
    ElementSet lo = lower(space, s, tier);
    ElementSet up = upper(space, s, tier);
    return PositiveNegativeBoundary{lo, up.complement(), up.difference(lo)};
}

const char* region_name(int area) {
    static const char* names[24] = {
        "internal_edge_tau", "internal_edge_p",  "internal_edge_dp",
        "external_edge_tau", "external_edge_p",  "external_edge_dp",
        "boundary_tau",      "boundary_p",       "boundary_dp",
        "exterior_tau",      "exterior_p",       "exterior_dp",
        "upper_tau_minus_lower_p",  "upper_tau_minus_lower_dp", "upper_tau_minus_upper_dp",
        "upper_p_minus_lower_tau",  "upper_p_minus_lower_dp",   "upper_p_minus_upper_dp",
        "lower_p_minus_lower_tau",  "upper_dp_minus_lower_p",   "upper_dp_minus_lower_tau",
        "lower_dp_minus_lower_p",   "lower_dp_minus_lower_tau", "upper_tau_minus_upper_p",
    };
    if (area < 1 || area > 24) throw Error("region area out of range");
    return names[area - 1];
}

RegionReport regions(const ApproximationSpace& space, const ElementSet& s) {
    const ElementSet lt = lower(space, s, Tier::Tau);
    const ElementSet lp = lower(space, s, Tier::Pre);
    const ElementSet ld = lower(space, s, Tier::DeltaPre);
    const ElementSet ut = upper(space, s, Tier::Tau);
    const ElementSet up = upper(space, s, Tier::Pre);
    const ElementSet ud = upper(space, s, Tier::DeltaPre);

    RegionReport r{s, {
        s.difference(lt),  s.difference(lp),  s.difference(ld),   // internal edges
        ut.difference(s),  up.difference(s),  ud.difference(s),   // external edges
        ut.difference(lt), up.difference(lp), ud.difference(ld),  // boundaries
        ut.complement(),   up.complement(),   ud.complement(),    // exteriors
        ut.difference(lp), ut.difference(ld), ut.difference(ud),
        up.difference(lt), up.difference(ld), up.difference(ud),
        lp.difference(lt), ud.difference(lp), ud.difference(lt),
        ld.difference(lp), ld.difference(lt), ut.difference(up),
    }};
    return r;
}

bool membership(const ApproximationSpace& space, int x, const ElementSet& s, Tier tier,
                MembershipMode mode) {
    if (x < 0 || x >= space.width()) throw Error("element index out of range");
    const ElementSet approx_set =
        mode == MembershipMode::Strong ? lower(space, s, tier) : upper(space, s, tier);
    return approx_set.contains(x);
}

RoughInclusion rough_inclusion(const ApproximationSpace& space, const ElementSet& s,
                               const ElementSet& n, Tier tier) {
    bool bottom = lower(space, s, tier).is_subset_of(lower(space, n, tier));
    bool top = upper(space, s, tier).is_subset_of(upper(space, n, tier));
    return RoughInclusion{bottom, top, bottom && top};
}

DefinabilityClass classify(const ApproximationSpace& space, const ElementSet& s, Tier tier) {
    const ElementSet lo = lower(space, s, tier);
    const ElementSet up = upper(space, s, tier);
    DefinabilityCategory cat;
    if (!lo.empty() && !up.is_full()) {
        cat = DefinabilityCategory::RoughlyDefinable;
    } else if (lo.empty() && !up.is_full()) {
        cat = DefinabilityCategory::InternallyUndefinable;
    } else if (!lo.empty() && up.is_full()) {
        cat = DefinabilityCategory::ExternallyUndefinable;
    } else {
        cat = DefinabilityCategory::TotallyUndefinable;
    }
    return DefinabilityClass{tier, cat, lo == up};
}

ClassInclusionReport class_inclusion_report(const ApproximationSpace& space, int enum_cap) {
    const int n = space.width();
    if (n > enum_cap) {
        throw CapExceeded("class report enumeration over " + std::to_string(n) +
                          " elements exceeds the cap of " + std::to_string(enum_cap));
    }
    ClassInclusionReport report;
    for (std::uint64_t m = 0; m <= ElementSet::mask_for(n); ++m) {
        ElementSet s(m, n);
        std::array<DefinabilityCategory, 3> cats{};
        for (Tier t : kAllTiers) {
            auto c = classify(space, s, t);
            cats[static_cast<size_t>(t)] = c.category;
            ++report.counts[static_cast<size_t>(t)][static_cast<size_t>(c.category)];
        }
        // RD grows with the tier; IUD/EUD/TUD shrink.
        bool ok = true;
        for (int i = 0; i < 2 && ok; ++i) {
            auto low_tier = cats[static_cast<size_t>(i)];
            auto high_tier = cats[static_cast<size_t>(i + 1)];
            if (low_tier == DefinabilityCategory::RoughlyDefinable &&
                high_tier != DefinabilityCategory::RoughlyDefinable) {
                ok = false;
            }
            if (high_tier != DefinabilityCategory::RoughlyDefinable && high_tier != low_tier) {
                ok = false;
            }
        }
        if (!ok) report.violations.push_back(s);
    }
    return report;
}

SetFamily point_closure_partition(const ApproximationSpace& space) {
    for (const auto& v : space.families.deltap_open) {
        if (!space.families.deltap_open.contains(v.complement())) {
            throw PreconditionFailed("deltaP-open set is not deltaP-closed; "
                                     "point closures do not partition the universe");
        }
    }
    std::vector<ElementSet> blocks;
    for (int x = 0; x < space.width(); ++x) {
        blocks.push_back(upper(space, space.topo.empty_set().with(x), Tier::DeltaPre));
    }
    return SetFamily::canonical(std::move(blocks), space.width());
}

}  // namespace roughdp
