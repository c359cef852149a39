#pragma once

#include "qhopf/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <vector>

namespace qhopf {

struct param_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ambient category data: Z/n grading, braiding root q = zeta_n^e, and the
/// mirror flag selecting the reversed braiding. Morphism data is never
/// rewritten for the mirror category; only braiding evaluation consults it.
struct CategoryParams {
    int n = 1;
    int e = 0;
    bool mirrored = false;

    FieldElement q() const { return FieldElement::root_power(n, e); }

    CategoryParams mirror() const { return CategoryParams{n, e, !mirrored}; }

    friend bool operator==(const CategoryParams& a, const CategoryParams& b) {
        return a.n == b.n && a.e == b.e && a.mirrored == b.mirrored;
    }
    friend bool operator!=(const CategoryParams& a, const CategoryParams& b) { return !(a == b); }
};

inline CategoryParams make_params(int n, int e, bool mirrored = false) {
    if (n < 1) throw std::invalid_argument("CategoryParams: n must be positive");
    CategoryParams p{n, ((e % n) + n) % n, mirrored};
    if (n == 1) p.e = 0;
    if (n > 1 && (p.e == 0 || std::gcd(p.e, n) != 1))
        throw std::invalid_argument("CategoryParams: q = zeta^e must be a primitive n-th root");
    return p;
}

/// Homogeneous chunk of a graded object's basis.
struct Slot {
    int degree = 0;
    int dim = 0;
    friend bool operator==(const Slot& a, const Slot& b) { return a.degree == b.degree && a.dim == b.dim; }
    friend bool operator!=(const Slot& a, const Slot& b) { return !(a == b); }
};

/// Z/n-graded finite-dimensional vector space. The basis is an ordered list
/// of homogeneous slots; tensor products pair slots lexicographically, which
/// makes the monoidal structure strictly associative and strictly unital.
struct GradedObject {
    CategoryParams params;
    std::vector<Slot> slots;

    GradedObject() = default;
    GradedObject(CategoryParams p, const std::map<int, int>& dims) : params(p) {
        for (auto [deg, dim] : dims) {
            if (dim < 0) throw std::invalid_argument("GradedObject: negative dimension");
            if (dim == 0) continue;
            slots.push_back(Slot{((deg % p.n) + p.n) % p.n, dim});
        }
    }
    GradedObject(CategoryParams p, std::vector<Slot> s) : params(p), slots(std::move(s)) {}

    int dim(int degree) const {
        int r = ((degree % params.n) + params.n) % params.n;
        int t = 0;
        for (const Slot& s : slots)
            if (s.degree == r) t += s.dim;
        return t;
    }
    int total_dim() const {
        int t = 0;
        for (const Slot& s : slots) t += s.dim;
        return t;
    }
    bool is_zero_object() const { return total_dim() == 0; }

    std::map<int, int> dims_map() const {
        std::map<int, int> out;
        for (const Slot& s : slots)
            if (s.dim > 0) out[s.degree] += s.dim;
        return out;
    }

    friend bool operator==(const GradedObject& a, const GradedObject& b) {
        return a.params == b.params && a.slots == b.slots;
    }
    friend bool operator!=(const GradedObject& a, const GradedObject& b) { return !(a == b); }
};

inline GradedObject unit_object(CategoryParams p) { return GradedObject(p, std::map<int, int>{{0, 1}}); }

inline GradedObject zero_object(CategoryParams p) { return GradedObject(p, std::map<int, int>{}); }

inline void check_same_params(const CategoryParams& a, const CategoryParams& b, const char* where) {
    if (!(a == b)) throw param_mismatch(std::string(where) + ": category parameter mismatch");
}

inline GradedObject tensor(const GradedObject& x, const GradedObject& y) {
    check_same_params(x.params, y.params, "tensor");
    std::vector<Slot> slots;
    slots.reserve(x.slots.size() * y.slots.size());
    for (const Slot& a : x.slots)
        for (const Slot& b : y.slots)
            slots.push_back(Slot{(a.degree + b.degree) % x.params.n, a.dim * b.dim});
    return GradedObject(x.params, std::move(slots));
}

/// Underlying object of both duals: slotwise negated degrees, same order.
inline GradedObject dual_object(const GradedObject& x) {
    std::vector<Slot> slots = x.slots;
    for (Slot& s : slots) s.degree = ((-s.degree % x.params.n) + x.params.n) % x.params.n;
    return GradedObject(x.params, std::move(slots));
}

/// Placement of one slot inside the degree block it belongs to.
struct SlotRange {
    int slot = 0;   // index into GradedObject::slots
    int offset = 0; // offset within the degree block
    int dim = 0;
};

inline std::vector<SlotRange> degree_layout(const GradedObject& x, int degree) {
    int r = ((degree % x.params.n) + x.params.n) % x.params.n;
    std::vector<SlotRange> out;
    int off = 0;
    for (std::size_t i = 0; i < x.slots.size(); ++i) {
        if (x.slots[i].degree != r || x.slots[i].dim == 0) continue;
        out.push_back(SlotRange{static_cast<int>(i), off, x.slots[i].dim});
        off += x.slots[i].dim;
    }
    return out;
}

inline int slot_offset_in_degree(const GradedObject& x, int slot_index) {
    int off = 0;
    for (int i = 0; i < slot_index; ++i)
        if (x.slots[static_cast<std::size_t>(i)].degree == x.slots[static_cast<std::size_t>(slot_index)].degree)
            off += x.slots[static_cast<std::size_t>(i)].dim;
    return off;
}

/// One slot pair of (X (x) Y) restricted to a fixed total degree.
struct PairSegment {
    int xslot = 0;
    int yslot = 0;
    int d1 = 0;
    int d2 = 0;
    int dim1 = 0;
    int dim2 = 0;
    int offset = 0; // offset within the total-degree block of X (x) Y
};

inline std::vector<PairSegment> pair_segments(const GradedObject& x, const GradedObject& y, int degree) {
    const int n = x.params.n;
    int r = ((degree % n) + n) % n;
    std::vector<PairSegment> out;
    int off = 0;
    for (std::size_t a = 0; a < x.slots.size(); ++a)
        for (std::size_t b = 0; b < y.slots.size(); ++b) {
            const Slot& sa = x.slots[a];
            const Slot& sb = y.slots[b];
            if ((sa.degree + sb.degree) % n != r || sa.dim == 0 || sb.dim == 0) continue;
            out.push_back(PairSegment{static_cast<int>(a), static_cast<int>(b), sa.degree, sb.degree,
                                      sa.dim, sb.dim, off});
            off += sa.dim * sb.dim;
        }
    return out;
}

} // namespace qhopf
