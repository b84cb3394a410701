#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace icemine {

using ItemId = std::uint32_t;

// Canonical itemset: strictly ascending dense item ids. The empty set is valid.
// operator< is the lexicographic word order used everywhere downstream
// (a proper prefix precedes its extensions).
class Itemset {
public:
    Itemset() = default;
    Itemset(std::initializer_list<ItemId> ids) : ids_(ids) { canonicalize(); }
    explicit Itemset(std::vector<ItemId> ids) : ids_(std::move(ids)) { canonicalize(); }

    static Itemset singleton(ItemId id) {
        Itemset s;
        s.ids_.push_back(id);
        return s;
    }

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    ItemId operator[](std::size_t i) const { return ids_[i]; }
    const std::vector<ItemId>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool contains(ItemId id) const {
        return std::binary_search(ids_.begin(), ids_.end(), id);
    }

    bool is_subset_of(const Itemset& other) const {
        return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
    }

    Itemset union_with(const Itemset& other) const {
        Itemset out;
        out.ids_.reserve(ids_.size() + other.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                       std::back_inserter(out.ids_));
        return out;
    }

    Itemset difference(const Itemset& other) const {
        Itemset out;
        std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                            std::back_inserter(out.ids_));
        return out;
    }

    Itemset intersection(const Itemset& other) const {
        Itemset out;
        std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                              std::back_inserter(out.ids_));
        return out;
    }

    Itemset with(ItemId id) const {
        Itemset out = *this;
        auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), id);
        if (pos == out.ids_.end() || *pos != id) out.ids_.insert(pos, id);
        return out;
    }

    Itemset without_index(std::size_t index) const {
        Itemset out = *this;
        out.ids_.erase(out.ids_.begin() + static_cast<std::ptrdiff_t>(index));
        return out;
    }

    friend bool operator==(const Itemset& a, const Itemset& b) { return a.ids_ == b.ids_; }
    friend bool operator!=(const Itemset& a, const Itemset& b) { return a.ids_ != b.ids_; }
    friend bool operator<(const Itemset& a, const Itemset& b) {
        return std::lexicographical_compare(a.ids_.begin(), a.ids_.end(),
                                            b.ids_.begin(), b.ids_.end());
    }

private:
    void canonicalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<ItemId> ids_;
};

} // namespace icemine
