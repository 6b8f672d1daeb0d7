#include "roughdp/open_families.hpp"

namespace roughdp {

bool is_preopen(const TopologySpace& space, const ElementSet& s) {
    return s.is_subset_of(space.interior(space.closure(s)));
}

ElementSet delta_closure(const TopologySpace& space, const ElementSet& s) {
    // x is excluded exactly when some base member containing x has
    // int(cl(.)) disjoint from S, so the result is the complement of the
    // union of those base members.
    std::uint64_t excluded = 0;
    for (const auto& a : space.base()) {
        ElementSet int_cl = space.interior(space.closure(a));
        if (!int_cl.intersects(s)) excluded |= a.bits();
    }
    return ElementSet(~excluded & ElementSet::mask_for(space.width()), space.width());
}

ElementSet delta_interior(const TopologySpace& space, const ElementSet& s) {
    return delta_closure(space, s.complement()).complement();
}

bool is_deltap_open(const TopologySpace& space, const ElementSet& s) {
    return s.is_subset_of(space.interior(delta_closure(space, s)));
}

OpenFamilies build_families(const TopologySpace& space, int enum_cap) {
    const int n = space.width();
    if (n > enum_cap) {
        throw CapExceeded("family enumeration over " + std::to_string(n) +
                          " elements exceeds the cap of " + std::to_string(enum_cap));
    }
    std::vector<std::uint64_t> pre, dpre;
    for (std::uint64_t m = 0; m <= ElementSet::mask_for(n); ++m) {
        ElementSet s(m, n);
        if (is_preopen(space, s)) pre.push_back(m);
        if (is_deltap_open(space, s)) dpre.push_back(m);
    }
    auto preopen = SetFamily::of_masks(pre, n);
    auto deltap_open = SetFamily::of_masks(dpre, n);
    auto preclosed = preopen.complements();
    auto deltap_closed = deltap_open.complements();
    return OpenFamilies{std::move(preopen), std::move(preclosed), std::move(deltap_open),
                        std::move(deltap_closed)};
}

ElementSet p_closure_delta(const TopologySpace& space, const ElementSet& s) {
    return s.unite(space.closure(delta_interior(space, s)));
}

ElementSet p_interior_delta(const TopologySpace& space, const ElementSet& s) {
    return s.intersect(space.interior(delta_closure(space, s)));
}

}  // namespace roughdp
