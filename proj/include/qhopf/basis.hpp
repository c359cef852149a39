#pragma once

#include "qhopf/graded.hpp"

#include <utility>
#include <vector>

namespace qhopf {

/// Slot-major global enumeration of a graded object's basis, with lookup of
/// each vector's degree and its position inside the per-degree block.
class BasisIndexer {
public:
    explicit BasisIndexer(const GradedObject& x) : object_(&x) {
        for (std::size_t s = 0; s < x.slots.size(); ++s)
            for (int i = 0; i < x.slots[s].dim; ++i) entries_.emplace_back(static_cast<int>(s), i);
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int slot(int g) const { return entries_[static_cast<std::size_t>(g)].first; }
    int index(int g) const { return entries_[static_cast<std::size_t>(g)].second; }
    int degree(int g) const { return object_->slots[static_cast<std::size_t>(slot(g))].degree; }
    int pos_in_degree(int g) const { return slot_offset_in_degree(*object_, slot(g)) + index(g); }

    /// Global index from (slot, i).
    int global(int slot_index, int i) const {
        int g = 0;
        for (int s = 0; s < slot_index; ++s) g += object_->slots[static_cast<std::size_t>(s)].dim;
        return g + i;
    }

private:
    const GradedObject* object_;
    std::vector<std::pair<int, int>> entries_;
};

/// Position bookkeeping for basis pairs of X (x) Y.
class PairIndexer {
public:
    PairIndexer(const GradedObject& x, const GradedObject& y)
        : x_(&x), y_(&y), bx_(x), by_(y), n_(x.params.n) {}

    int degree(int gx, int gy) const { return (bx_.degree(gx) + by_.degree(gy)) % n_; }

    int pos_in_degree(int gx, int gy) const {
        int sx = bx_.slot(gx), sy = by_.slot(gy);
        for (const auto& seg : pair_segments(*x_, *y_, degree(gx, gy)))
            if (seg.xslot == sx && seg.yslot == sy)
                return seg.offset + bx_.index(gx) * seg.dim2 + by_.index(gy);
        throw std::logic_error("PairIndexer: segment not found");
    }

    const BasisIndexer& left() const { return bx_; }
    const BasisIndexer& right() const { return by_; }

private:
    const GradedObject* x_;
    const GradedObject* y_;
    BasisIndexer bx_, by_;
    int n_;
};

} // namespace qhopf
