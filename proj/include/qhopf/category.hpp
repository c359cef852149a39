#pragma once

#include "qhopf/morphism.hpp"

namespace qhopf {

struct not_endomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_invertible_object : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_factorizable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { left, right };

/// Braiding Psi_{X,Y}: X(x)Y -> Y(x)X, x_i (x) y_j -> q^(ij) y_j (x) x_i,
/// exponents taken from the canonical degree representatives. `inverse`
/// selects the reversed crossing (Psi_{Y,X})^{-1}; the mirror flag on the
/// shared CategoryParams swaps the two conventions.
inline Morphism braiding(const GradedObject& x, const GradedObject& y, bool inverse = false) {
    check_same_params(x.params, y.params, "braiding");
    const bool negated = inverse != x.params.mirrored;
    const FieldElement q = x.params.q();
    Morphism out(tensor(x, y), tensor(y, x));
    for (auto& [d, blk] : out.blocks) {
        auto src = pair_segments(x, y, d);
        auto tgt = pair_segments(y, x, d);
        for (const auto& s : src) {
            const PairSegment* t = nullptr;
            for (const auto& cand : tgt)
                if (cand.xslot == s.yslot && cand.yslot == s.xslot) { t = &cand; break; }
            if (!t) continue;
            long expo = static_cast<long>(s.d1) * static_cast<long>(s.d2);
            FieldElement factor = q.pow(negated ? -expo : expo);
            for (int i = 0; i < s.dim1; ++i)
                for (int j = 0; j < s.dim2; ++j)
                    blk.at(t->offset + j * t->dim2 + i, s.offset + i * s.dim2 + j) = factor;
        }
    }
    return out;
}

/// Dual pair data. side == right gives (X^v, ev: X(x)X^v -> 1, coev: 1 -> X^v(x)X);
/// side == left gives (^vX, ev: ^vX(x)X -> 1, coev: 1 -> X(x)^vX).
struct DualData {
    GradedObject dual;
    Morphism ev;
    Morphism coev;
    Side side = Side::right;
};

inline DualData dual_data(const GradedObject& x, Side side) {
    GradedObject dual = dual_object(x);
    GradedObject one = unit_object(x.params);
    DualData out;
    out.dual = dual;
    out.side = side;
    const GradedObject& first = side == Side::right ? x : dual;
    const GradedObject& second = side == Side::right ? dual : x;
    Morphism ev(tensor(first, second), one);
    if (ev.has_block(0)) {
        Mat& blk = ev.block(0);
        for (const auto& s : pair_segments(first, second, 0)) {
            if (s.xslot != s.yslot) continue; // only matching slots pair
            for (int i = 0; i < s.dim1; ++i)
                blk.at(0, s.offset + i * s.dim2 + i) = FieldElement::one(x.params.n);
        }
    }
    Morphism coev(one, tensor(second, first));
    if (coev.has_block(0)) {
        Mat& blk = coev.block(0);
        for (const auto& s : pair_segments(second, first, 0)) {
            if (s.xslot != s.yslot) continue;
            for (int i = 0; i < s.dim1; ++i)
                blk.at(s.offset + i * s.dim2 + i, 0) = FieldElement::one(x.params.n);
        }
    }
    out.ev = std::move(ev);
    out.coev = std::move(coev);
    return out;
}

/// Transpose against either dual pair. In this concrete category both
/// transposes act as the plain matrix transpose placed at the negated degree.
inline Morphism transpose(const Morphism& f, Side side = Side::right) {
    (void)side;
    Morphism out(dual_object(f.target), dual_object(f.source));
    const int n = f.order();
    for (auto& [d, blk] : out.blocks) {
        int orig = ((-d % n) + n) % n;
        if (!f.has_block(orig)) continue;
        blk = f.block(orig).transposed();
    }
    return out;
}

inline FieldElement scalar_of(const Morphism& endo_of_unit) {
    if (!endo_of_unit.has_block(0)) return FieldElement::zero(endo_of_unit.order());
    return endo_of_unit.block(0).at(0, 0);
}

inline Morphism scalar_morphism(const CategoryParams& p, const FieldElement& s) {
    Morphism m(unit_object(p), unit_object(p));
    m.block(0).at(0, 0) = s;
    return m;
}

/// Diagrammatic trace of Fig-u: close f off with coev, one crossing and ev.
inline FieldElement trace8(const Morphism& f) {
    if (!(f.source == f.target)) throw not_endomorphism("trace8: source != target");
    const GradedObject& x = f.source;
    DualData d = dual_data(x, Side::left);
    Morphism diagram =
        compose(d.ev, braiding(x, d.dual), compose(tensor(f, identity_morphism(d.dual)), d.coev));
    return scalar_of(diagram);
}

inline FieldElement dim8(const GradedObject& x) { return trace8(identity_morphism(x)); }

/// The natural automorphism u^0_{-2} (inverse double twist) as an explicit
/// composite of coevaluation, two crossings and evaluation; multiplies the
/// degree-d component by q^(-2 d^2).
inline Morphism u0_minus2(const GradedObject& x) {
    DualData d = dual_data(x, Side::left);
    Morphism idx = identity_morphism(x);
    Morphism iddual = identity_morphism(d.dual);
    return compose(tensor(idx, d.ev),
                   compose(tensor(idx, braiding(x, d.dual)),
                           compose(tensor(braiding(x, x, true), iddual), tensor(idx, d.coev))));
}

inline void require_invertible_object(const GradedObject& k, const char* where) {
    if (k.total_dim() != 1) throw not_invertible_object(std::string(where) + ": object is not invertible");
}

inline int invertible_degree(const GradedObject& k) {
    require_invertible_object(k, "invertible_degree");
    for (const Slot& s : k.slots)
        if (s.dim == 1) return s.degree;
    throw not_invertible_object("invertible_degree");
}

/// Unique f with f (x) id_K = g for invertible K.
inline Morphism solve_tensor_factor(const Morphism& g, const GradedObject& k) {
    require_invertible_object(k, "solve_tensor_factor");
    const int n = k.params.n;
    const int dk = invertible_degree(k);
    auto unshift = [&](const GradedObject& xy) {
        std::vector<Slot> slots;
        for (const Slot& s : xy.slots)
            slots.push_back(Slot{((s.degree - dk) % n + n) % n, s.dim});
        return GradedObject(k.params, std::move(slots));
    };
    GradedObject x = unshift(g.source), y = unshift(g.target);
    if (!(tensor(x, k) == g.source) || !(tensor(y, k) == g.target))
        throw not_factorizable("solve_tensor_factor: shape is not X(x)K -> Y(x)K");
    Morphism f(x, y);
    for (auto& [d, blk] : f.blocks) blk = g.block((d + dk) % n);
    return f;
}

/// Monodromy of an invertible object K on X: Psi_{K,X} Psi_{X,K} = Omega (x) id_K.
inline Morphism monodromy(const GradedObject& k, const GradedObject& x) {
    require_invertible_object(k, "monodromy");
    Morphism square = compose(braiding(k, x), braiding(x, k));
    return solve_tensor_factor(square, k);
}

/// Read a: 1 -> X off a morphism K -> K (x) X with invertible K.
inline Morphism strip_invertible_left(const Morphism& m, const GradedObject& k) {
    require_invertible_object(k, "strip_invertible_left");
    const int dk = invertible_degree(k);
    const int n = k.params.n;
    std::vector<Slot> xslots;
    for (const Slot& s : m.target.slots)
        xslots.push_back(Slot{((s.degree - dk) % n + n) % n, s.dim});
    GradedObject x(k.params, std::move(xslots));
    if (!(tensor(k, x) == m.target))
        throw not_factorizable("strip_invertible_left: target is not K (x) X");
    Morphism out(unit_object(k.params), x);
    if (out.has_block(0)) out.block(0) = m.block(dk);
    return out;
}

/// Read alpha: X -> 1 off a morphism K (x) X -> K with invertible K.
inline Morphism strip_invertible_functional(const Morphism& m, const GradedObject& k) {
    require_invertible_object(k, "strip_invertible_functional");
    const int dk = invertible_degree(k);
    const int n = k.params.n;
    std::vector<Slot> xslots;
    for (const Slot& s : m.source.slots)
        xslots.push_back(Slot{((s.degree - dk) % n + n) % n, s.dim});
    GradedObject x(k.params, std::move(xslots));
    if (!(tensor(k, x) == m.source))
        throw not_factorizable("strip_invertible_functional: source is not K (x) X");
    Morphism out(x, unit_object(k.params));
    if (out.has_block(0)) out.block(0) = m.block(dk);
    return out;
}

} // namespace qhopf
