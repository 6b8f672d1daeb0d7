#include "roughdp/sets.hpp"

#include <algorithm>

namespace roughdp {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw Error("universe needs at least one element");
    }
    if (static_cast<int>(labels_.size()) > kMaxWidth) {
        throw CapExceeded("universe size " + std::to_string(labels_.size()) +
                          " exceeds the absolute cap of " + std::to_string(kMaxWidth));
    }
    for (size_t i = 0; i < labels_.size(); ++i) {
        auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
        if (!inserted) {
            throw DuplicateLabel("duplicate label '" + labels_[i] + "'");
        }
    }
}

int Universe::index(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        throw UnknownLabel("unknown label '" + std::string(label) + "'");
    }
    return it->second;
}

bool Universe::has_label(std::string_view label) const {
    return index_.find(std::string(label)) != index_.end();
}

ElementSet::ElementSet(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 1 || width > kMaxWidth) {
        throw Error("invalid set width " + std::to_string(width));
    }
    if (bits & ~mask_for(width)) {
        throw Error("set has bits outside universe width");
    }
}

void ElementSet::check_width(const ElementSet& o) const {
    if (width_ != o.width_) {
        throw WidthMismatch("set widths differ: " + std::to_string(width_) + " vs " +
                            std::to_string(o.width_));
    }
}

ElementSet ElementSet::unite(const ElementSet& o) const {
    check_width(o);
    return ElementSet(bits_ | o.bits_, width_);
}

ElementSet ElementSet::intersect(const ElementSet& o) const {
    check_width(o);
    return ElementSet(bits_ & o.bits_, width_);
}

ElementSet ElementSet::difference(const ElementSet& o) const {
    check_width(o);
    return ElementSet(bits_ & ~o.bits_, width_);
}

bool ElementSet::is_subset_of(const ElementSet& o) const {
    check_width(o);
    return (bits_ & ~o.bits_) == 0;
}

bool ElementSet::intersects(const ElementSet& o) const {
    check_width(o);
    return (bits_ & o.bits_) != 0;
}

std::vector<int> ElementSet::indices() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

ElementSet set_of(const Universe& u, const std::vector<std::string>& labels) {
    std::uint64_t bits = 0;
    for (const auto& l : labels) {
        bits |= std::uint64_t{1} << u.index(l);
    }
    return ElementSet(bits, u.size());
}

SetFamily SetFamily::canonical(std::vector<ElementSet> raw, int width) {
    for (const auto& s : raw) {
        if (s.width() != width) {
            throw WidthMismatch("family member width " + std::to_string(s.width()) +
                                " does not match family width " + std::to_string(width));
        }
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return SetFamily(std::move(raw), width);
}

SetFamily SetFamily::of_masks(const std::vector<std::uint64_t>& masks, int width) {
    std::vector<ElementSet> members;
    members.reserve(masks.size());
    for (auto m : masks) members.emplace_back(m, width);
    return canonical(std::move(members), width);
}

bool SetFamily::contains(const ElementSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

SetFamily SetFamily::complements() const {
    std::vector<ElementSet> out;
    out.reserve(members_.size());
    for (const auto& s : members_) out.push_back(s.complement());
    return canonical(std::move(out), width_);
}

}  // namespace roughdp
