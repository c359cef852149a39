#pragma once

#include "qhopf/graded.hpp"
#include "qhopf/matrix.hpp"

#include <map>
#include <optional>

namespace qhopf {

/// Degree-preserving linear map between graded objects, one exact matrix per
/// degree present on both sides. Absent blocks are zero.
struct Morphism {
    GradedObject source;
    GradedObject target;
    std::map<int, Mat> blocks;

    Morphism() = default;
    Morphism(GradedObject src, GradedObject tgt) : source(std::move(src)), target(std::move(tgt)) {
        check_same_params(source.params, target.params, "Morphism");
        for (int d = 0; d < source.params.n; ++d) {
            int ms = source.dim(d), mt = target.dim(d);
            if (ms > 0 && mt > 0) blocks.emplace(d, Mat(mt, ms, source.params.n));
        }
    }

    int order() const { return source.params.n; }

    Mat& block(int degree) {
        auto it = blocks.find(((degree % order()) + order()) % order());
        if (it == blocks.end()) throw shape_mismatch("Morphism::block: degree absent");
        return it->second;
    }
    const Mat& block(int degree) const {
        auto it = blocks.find(((degree % order()) + order()) % order());
        if (it == blocks.end()) throw shape_mismatch("Morphism::block: degree absent");
        return it->second;
    }
    bool has_block(int degree) const {
        return blocks.count(((degree % order()) + order()) % order()) > 0;
    }

    bool is_zero() const {
        for (const auto& [d, m] : blocks)
            if (!m.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Morphism& f, const Morphism& g) {
        return f.source == g.source && f.target == g.target && f.blocks == g.blocks;
    }
    friend bool operator!=(const Morphism& f, const Morphism& g) { return !(f == g); }
};

inline Morphism identity_morphism(const GradedObject& x) {
    Morphism m(x, x);
    for (auto& [d, blk] : m.blocks) blk = Mat::identity(x.dim(d), x.params.n);
    return m;
}

inline Morphism zero_morphism(const GradedObject& src, const GradedObject& tgt) { return Morphism(src, tgt); }

inline Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw shape_mismatch("compose: target/source mismatch");
    Morphism out(f.source, g.target);
    for (auto& [d, blk] : out.blocks) {
        if (!f.has_block(d) || !g.has_block(d)) {
            blk = Mat(g.target.dim(d), f.source.dim(d), f.order());
            continue;
        }
        blk = g.block(d) * f.block(d);
    }
    return out;
}

inline Morphism operator+(const Morphism& f, const Morphism& g) {
    if (!(f.source == g.source) || !(f.target == g.target)) throw shape_mismatch("Morphism add: shape mismatch");
    Morphism out = f;
    for (auto& [d, blk] : out.blocks) blk = blk + g.block(d);
    return out;
}

inline Morphism operator-(const Morphism& f, const Morphism& g) {
    if (!(f.source == g.source) || !(f.target == g.target)) throw shape_mismatch("Morphism sub: shape mismatch");
    Morphism out = f;
    for (auto& [d, blk] : out.blocks) blk = blk - g.block(d);
    return out;
}

inline Morphism operator*(const FieldElement& s, const Morphism& f) {
    Morphism out = f;
    for (auto& [d, blk] : out.blocks) blk = s * blk;
    return out;
}

inline Morphism operator*(const Rational& s, const Morphism& f) {
    return FieldElement::from_rational(f.order(), s) * f;
}

/// Tensor product of morphisms in the lexicographic slot-pair layout.
inline Morphism tensor(const Morphism& f, const Morphism& g) {
    check_same_params(f.source.params, g.source.params, "tensor(Morphism)");
    GradedObject src = tensor(f.source, g.source);
    GradedObject tgt = tensor(f.target, g.target);
    Morphism out(src, tgt);
    for (auto& [d, blk] : out.blocks) {
        auto src_pairs = pair_segments(f.source, g.source, d);
        auto tgt_pairs = pair_segments(f.target, g.target, d);
        for (const auto& sp : src_pairs) {
            if (!f.has_block(sp.d1) || !g.has_block(sp.d2)) continue;
            const Mat& fb = f.block(sp.d1);
            const Mat& gb = g.block(sp.d2);
            int f_col = slot_offset_in_degree(f.source, sp.xslot);
            int g_col = slot_offset_in_degree(g.source, sp.yslot);
            for (const auto& tp : tgt_pairs) {
                if (tp.d1 != sp.d1 || tp.d2 != sp.d2) continue;
                int f_row = slot_offset_in_degree(f.target, tp.xslot);
                int g_row = slot_offset_in_degree(g.target, tp.yslot);
                for (int i2 = 0; i2 < tp.dim1; ++i2)
                    for (int i1 = 0; i1 < sp.dim1; ++i1) {
                        const FieldElement& fe = fb.at(f_row + i2, f_col + i1);
                        if (fe.is_zero()) continue;
                        for (int j2 = 0; j2 < tp.dim2; ++j2)
                            for (int j1 = 0; j1 < sp.dim2; ++j1) {
                                const FieldElement& ge = gb.at(g_row + j2, g_col + j1);
                                if (ge.is_zero()) continue;
                                blk.at(tp.offset + i2 * tp.dim2 + j2, sp.offset + i1 * sp.dim2 + j1) = fe * ge;
                            }
                    }
            }
        }
    }
    return out;
}

inline Morphism compose(const Morphism& h, const Morphism& g, const Morphism& f) {
    return compose(h, compose(g, f));
}
inline Morphism compose(const Morphism& k, const Morphism& h, const Morphism& g, const Morphism& f) {
    return compose(k, compose(h, compose(g, f)));
}

inline Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h) {
    return tensor(tensor(f, g), h);
}
inline Morphism tensor(const Morphism& f, const Morphism& g, const Morphism& h, const Morphism& k) {
    return tensor(tensor(tensor(f, g), h), k);
}

/// First entry where two equal-shaped morphisms differ.
struct EntryWitness {
    int degree = 0;
    int row = 0;
    int col = 0;
    FieldElement lhs;
    FieldElement rhs;
};

inline std::optional<EntryWitness> first_difference(const Morphism& f, const Morphism& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        return EntryWitness{-1, -1, -1, FieldElement::zero(f.order()), FieldElement::zero(g.order())};
    for (const auto& [d, blk] : f.blocks) {
        const Mat& other = g.block(d);
        for (int r = 0; r < blk.rows(); ++r)
            for (int c = 0; c < blk.cols(); ++c)
                if (!(blk.at(r, c) == other.at(r, c)))
                    return EntryWitness{d, r, c, blk.at(r, c), other.at(r, c)};
    }
    return std::nullopt;
}

inline bool is_invertible(const Morphism& f) {
    std::map<int, int> sd, td;
    for (const Slot& s : f.source.slots) sd[s.degree] += s.dim;
    for (const Slot& s : f.target.slots) td[s.degree] += s.dim;
    if (sd != td) return false;
    for (const auto& [d, blk] : f.blocks)
        if (!try_inverse(blk)) return false;
    return true;
}

inline Morphism inverse(const Morphism& f) {
    Morphism out(f.target, f.source);
    for (auto& [d, blk] : out.blocks) blk = inverse(f.block(d));
    return out;
}

} // namespace qhopf
