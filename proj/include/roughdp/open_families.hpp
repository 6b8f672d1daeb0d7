#ifndef ROUGHDP_OPEN_FAMILIES_HPP
#define ROUGHDP_OPEN_FAMILIES_HPP

#include "roughdp/sets.hpp"
#include "roughdp/topology.hpp"

// Generalized open-set families. A set is preopen when S <= int(cl(S));
// it is deltaP-open when S <= int(cl_delta(S)), where cl_delta is the
// delta-closure: x belongs to cl_delta(S) iff every open set containing x
// has int(cl(.)) meeting S.

namespace roughdp {

struct OpenFamilies {
    SetFamily preopen;        // PO(X)
    SetFamily preclosed;      // PC(X)
    SetFamily deltap_open;    // dPO(X)
    SetFamily deltap_closed;  // dPC(X)
};

bool is_preopen(const TopologySpace& space, const ElementSet& s);

/// Quantification runs over base members only; every open set containing
/// a point contains a base member containing it, and int(cl(.)) is
/// monotone, so the restriction is exact. The equivalence is exercised by
/// the oracle tests.
ElementSet delta_closure(const TopologySpace& space, const ElementSet& s);
ElementSet delta_interior(const TopologySpace& space, const ElementSet& s);

bool is_deltap_open(const TopologySpace& space, const ElementSet& s);

/// Enumerates all 2^n subsets. Throws CapExceeded above enum_cap.
OpenFamilies build_families(const TopologySpace& space, int enum_cap = kDefaultEnumCap);

// Closed forms for the deltaP closure/interior operators:
//   Pcl_delta(S)  = S u cl(int_delta(S))
//   Pint_delta(S) = S n int(cl_delta(S))
// They must coincide with the definitional scans over dPC/dPO; the oracle
// suite enforces that agreement rather than assuming it.
ElementSet p_closure_delta(const TopologySpace& space, const ElementSet& s);
ElementSet p_interior_delta(const TopologySpace& space, const ElementSet& s);

}  // namespace roughdp

#endif
