#include "roughdp/topology.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "roughdp/oracle.hpp"

namespace roughdp {

BinaryRelation::BinaryRelation(std::vector<std::pair<int, int>> pairs, int width)
    : pairs_(std::move(pairs)), width_(width) {
    if (width < 1 || width > kMaxWidth) {
        throw Error("invalid relation width " + std::to_string(width));
    }
    for (auto [a, b] : pairs_) {
        if (a < 0 || a >= width || b < 0 || b >= width) {
            throw Error("relation pair index out of range");
        }
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

BinaryRelation BinaryRelation::identity(int width) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(width));
    for (int i = 0; i < width; ++i) pairs.emplace_back(i, i);
    return BinaryRelation(std::move(pairs), width);
}

std::vector<ElementSet> right_neighborhoods(const Universe& universe,
                                            const BinaryRelation& relation) {
    if (relation.width() != universe.size()) {
        throw WidthMismatch("relation width does not match universe size");
    }
    std::vector<std::uint64_t> masks(static_cast<size_t>(universe.size()), 0);
    for (auto [x, y] : relation.pairs()) {
        masks[static_cast<size_t>(x)] |= std::uint64_t{1} << y;
    }
    std::vector<ElementSet> out;
    out.reserve(masks.size());
    for (auto m : masks) out.emplace_back(m, universe.size());
    return out;
}

namespace {

// Fixed-point closure of a mask set under a binary mask operation.
template <typename Op>
std::vector<std::uint64_t> close_under(std::vector<std::uint64_t> seed, Op op) {
    std::unordered_set<std::uint64_t> have(seed.begin(), seed.end());
    std::vector<std::uint64_t> work(have.begin(), have.end());
    std::vector<std::uint64_t> all(work);
    while (!work.empty()) {
        std::vector<std::uint64_t> added;
        for (auto a : work) {
            for (auto b : all) {
                std::uint64_t c = op(a, b);
                if (have.insert(c).second) added.push_back(c);
            }
        }
        for (auto c : added) all.push_back(c);
        work = std::move(added);
    }
    return all;
}

}  // namespace

TopologySpace TopologySpace::from_relation(Universe universe, BinaryRelation relation,
                                           int enum_cap) {
    auto nbrs = right_neighborhoods(universe, relation);
    auto subbase = SetFamily::canonical(std::move(nbrs), universe.size());
    return from_subbase(std::move(universe), std::move(relation), std::move(subbase), enum_cap);
}

TopologySpace TopologySpace::from_subbase(Universe universe, BinaryRelation relation,
                                          SetFamily subbase, int enum_cap) {
    if (universe.size() > enum_cap) {
        throw CapExceeded("universe size " + std::to_string(universe.size()) +
                          " exceeds the enumeration cap of " + std::to_string(enum_cap) +
                          "; raise --max-enum to override");
    }
    if (subbase.width() != universe.size()) {
        throw WidthMismatch("subbase width does not match universe size");
    }
    const std::uint64_t full = ElementSet::mask_for(universe.size());

    // Base: all finite intersections of subbase members; the empty
    // intersection contributes the whole universe.
    std::vector<std::uint64_t> seed{full};
    for (const auto& s : subbase) seed.push_back(s.bits());
    auto base_masks = close_under(std::move(seed),
                                  [](std::uint64_t a, std::uint64_t b) { return a & b; });

    // Opens: all unions of base members; the empty union contributes the
    // empty set.
    auto open_masks = base_masks;
    open_masks.push_back(0);
    open_masks = close_under(std::move(open_masks),
                             [](std::uint64_t a, std::uint64_t b) { return a | b; });

    auto base = SetFamily::of_masks(base_masks, universe.size());
    auto opens = SetFamily::of_masks(open_masks, universe.size());
    assert(axiom_check(opens));
    return TopologySpace(std::move(universe), std::move(relation), std::move(subbase),
                         std::move(base), std::move(opens));
}

TopologySpace::TopologySpace(Universe universe, BinaryRelation relation, SetFamily subbase,
                             SetFamily base, SetFamily opens)
    : universe_(std::move(universe)),
      relation_(std::move(relation)),
      subbase_(std::move(subbase)),
      base_(std::move(base)),
      opens_(std::move(opens)),
      closeds_(opens_.complements()),
      cache_(std::make_unique<Cache>()) {}

ElementSet TopologySpace::interior(const ElementSet& s) const {
    if (s.width() != width()) throw WidthMismatch("subset width does not match space");
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->interior.find(s.bits());
        if (it != cache_->interior.end()) return ElementSet(it->second, width());
    }
    std::uint64_t acc = 0;
    for (const auto& v : opens_) {
        if ((v.bits() & ~s.bits()) == 0) acc |= v.bits();
    }
    std::lock_guard lock(cache_->mutex);
    cache_->interior.emplace(s.bits(), acc);
    return ElementSet(acc, width());
}

ElementSet TopologySpace::closure(const ElementSet& s) const {
    if (s.width() != width()) throw WidthMismatch("subset width does not match space");
    {
        std::lock_guard lock(cache_->mutex);
        auto it = cache_->closure.find(s.bits());
        if (it != cache_->closure.end()) return ElementSet(it->second, width());
    }
    std::uint64_t acc = ElementSet::mask_for(width());
    for (const auto& c : closeds_) {
        if ((s.bits() & ~c.bits()) == 0) acc &= c.bits();
    }
    std::lock_guard lock(cache_->mutex);
    cache_->closure.emplace(s.bits(), acc);
    return ElementSet(acc, width());
}

ElementSet TopologySpace::boundary(const ElementSet& s) const {
    return closure(s).difference(interior(s));
}

}  // namespace roughdp
