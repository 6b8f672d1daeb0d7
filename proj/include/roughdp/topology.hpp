#ifndef ROUGHDP_TOPOLOGY_HPP
#define ROUGHDP_TOPOLOGY_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "roughdp/sets.hpp"

// Topology generation from a binary relation: right neighborhoods form a
// subbase, finite intersections the base, unions the open sets. No
// reflexivity, symmetry or transitivity is assumed of the relation.

namespace roughdp {

class BinaryRelation {
public:
    /// Pairs are (from, to) index pairs; duplicates are collapsed.
    BinaryRelation(std::vector<std::pair<int, int>> pairs, int width);

    static BinaryRelation identity(int width);

    int width() const { return width_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

private:
    std::vector<std::pair<int, int>> pairs_;  // sorted, unique
    int width_;
};

/// Right neighborhood of every element: entry x = { y : (x,y) in relation }.
/// Empty neighborhoods are kept.
std::vector<ElementSet> right_neighborhoods(const Universe& universe,
                                            const BinaryRelation& relation);

class TopologySpace {
public:
    /// Neighborhoods-as-subbase pipeline. Throws CapExceeded when the
    /// universe is wider than enum_cap.
    static TopologySpace from_relation(Universe universe, BinaryRelation relation,
                                       int enum_cap = kDefaultEnumCap);
    static TopologySpace from_subbase(Universe universe, BinaryRelation relation,
                                      SetFamily subbase, int enum_cap = kDefaultEnumCap);

    const Universe& universe() const { return universe_; }
    const BinaryRelation& relation() const { return relation_; }
    const SetFamily& subbase() const { return subbase_; }
    const SetFamily& base() const { return base_; }
    const SetFamily& opens() const { return opens_; }
    const SetFamily& closeds() const { return closeds_; }

    int width() const { return universe_.size(); }
    ElementSet empty_set() const { return ElementSet::empty_set(width()); }
    ElementSet full_set() const { return ElementSet::full_set(width()); }

    /// Union of all open sets contained in S. Memoized.
    ElementSet interior(const ElementSet& s) const;
    /// Intersection of all closed sets containing S. Memoized.
    ElementSet closure(const ElementSet& s) const;
    ElementSet boundary(const ElementSet& s) const;
    bool is_exact(const ElementSet& s) const { return boundary(s).empty(); }

private:
    TopologySpace(Universe universe, BinaryRelation relation, SetFamily subbase,
                  SetFamily base, SetFamily opens);

    Universe universe_;
    BinaryRelation relation_;
    SetFamily subbase_;
    SetFamily base_;
    SetFamily opens_;
    SetFamily closeds_;

    struct Cache {
        std::mutex mutex;
        std::unordered_map<std::uint64_t, std::uint64_t> interior;
        std::unordered_map<std::uint64_t, std::uint64_t> closure;
    };
    // Behind unique_ptr so the space stays movable.
    std::unique_ptr<Cache> cache_;
};

}  // namespace roughdp

#endif
