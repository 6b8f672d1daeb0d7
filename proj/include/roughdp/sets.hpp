#ifndef ROUGHDP_SETS_HPP
#define ROUGHDP_SETS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

// Finite universes, subsets as single-word bitmasks, and canonically
// ordered families of subsets. Everything else in the library is built
// on these three types; all of them are immutable after construction.

namespace roughdp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateLabel : public Error { public: using Error::Error; };
class UnknownLabel   : public Error { public: using Error::Error; };
class WidthMismatch  : public Error { public: using Error::Error; };
class CapExceeded    : public Error { public: using Error::Error; };
class EmptySubject   : public Error { public: using Error::Error; };
class PreconditionFailed : public Error { public: using Error::Error; };
class ParseError     : public Error { public: using Error::Error; };

// Hard cap: one machine word. Operations that enumerate the powerset
// additionally refuse widths above a configurable cap (default 20).
inline constexpr int kMaxWidth = 64;
inline constexpr int kDefaultEnumCap = 20;

class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }

    // Throws UnknownLabel.
    int index(std::string_view label) const;
    bool has_label(std::string_view label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
};

/// A subset of a universe, represented as a membership mask.
class ElementSet {
public:
    ElementSet(std::uint64_t bits, int width);

    static ElementSet empty_set(int width) { return ElementSet(0, width); }
    static ElementSet full_set(int width) { return ElementSet(mask_for(width), width); }

    std::uint64_t bits() const { return bits_; }
    int width() const { return width_; }

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    int count() const { return __builtin_popcountll(bits_); }
    bool empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == mask_for(width_); }

    ElementSet unite(const ElementSet& o) const;
    ElementSet intersect(const ElementSet& o) const;
    ElementSet difference(const ElementSet& o) const;
    ElementSet complement() const { return ElementSet(~bits_ & mask_for(width_), width_); }

    bool is_subset_of(const ElementSet& o) const;
    bool intersects(const ElementSet& o) const;

    ElementSet with(int i) const { return ElementSet(bits_ | (std::uint64_t{1} << i), width_); }

    bool operator==(const ElementSet& o) const { return bits_ == o.bits_ && width_ == o.width_; }
    bool operator!=(const ElementSet& o) const { return !(*this == o); }
    // Canonical order: ascending numeric mask value.
    bool operator<(const ElementSet& o) const { return bits_ < o.bits_; }

    /// Member indices in ascending order.
    std::vector<int> indices() const;

    static std::uint64_t mask_for(int width) {
        return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    }

private:
    std::uint64_t bits_;
    int width_;

    void check_width(const ElementSet& o) const;
};

ElementSet set_of(const Universe& u, const std::vector<std::string>& labels);

/// A deduplicated family of subsets, sorted ascending by mask value.
class SetFamily {
public:
    /// Dedupe and sort; all members must share one width.
    static SetFamily canonical(std::vector<ElementSet> raw, int width);
    static SetFamily of_masks(const std::vector<std::uint64_t>& masks, int width);

    int width() const { return width_; }
    size_t size() const { return members_.size(); }
    const ElementSet& operator[](size_t i) const { return members_[i]; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool contains(const ElementSet& s) const;

    /// Family of complements of every member.
    SetFamily complements() const;

    bool operator==(const SetFamily& o) const {
        return width_ == o.width_ && members_ == o.members_;
    }
    bool operator!=(const SetFamily& o) const { return !(*this == o); }

private:
    SetFamily(std::vector<ElementSet> members, int width)
        : members_(std::move(members)), width_(width) {}

    std::vector<ElementSet> members_;
    int width_;
};

}  // namespace roughdp

#endif
