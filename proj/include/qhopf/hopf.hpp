#pragma once

#include "qhopf/basis.hpp"
#include "qhopf/category.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Hopf algebra in the graded category: carrier object plus the six structure
/// morphisms. The ambient braiding orientation is the carrier's mirror flag.
struct HopfAlgebra {
    GradedObject object;
    Morphism mul;          // H (x) H -> H
    Morphism unit;         // 1 -> H
    Morphism comul;        // H -> H (x) H
    Morphism counit;       // H -> 1
    Morphism antipode;     // H -> H
    Morphism antipode_inv; // H -> H

    bool mirrored() const { return object.params.mirrored; }
    int order() const { return object.params.n; }
};

inline void require_hopf_shapes(const HopfAlgebra& h) {
    const GradedObject& H = h.object;
    GradedObject one = unit_object(H.params);
    GradedObject HH = tensor(H, H);
    auto need = [](bool ok, const char* what) {
        if (!ok) throw shape_mismatch(std::string("HopfAlgebra: bad shape for ") + what);
    };
    need(h.mul.source == HH && h.mul.target == H, "mul");
    need(h.unit.source == one && h.unit.target == H, "unit");
    need(h.comul.source == H && h.comul.target == HH, "comul");
    need(h.counit.source == H && h.counit.target == one, "counit");
    need(h.antipode.source == H && h.antipode.target == H, "antipode");
    need(h.antipode_inv.source == H && h.antipode_inv.target == H, "antipode_inv");
}

inline Morphism mul3(const HopfAlgebra& h) {
    return compose(h.mul, tensor(h.mul, identity_morphism(h.object)));
}
inline Morphism comul3(const HopfAlgebra& h) {
    return compose(tensor(h.comul, identity_morphism(h.object)), h.comul);
}

/// Full braided Hopf axiom battery. The bialgebra axiom uses the ambient
/// braiding, which the mirror flag reverses.
inline AxiomReport check_hopf(const HopfAlgebra& h) {
    require_hopf_shapes(h);
    const GradedObject& H = h.object;
    Morphism id = identity_morphism(H);
    Morphism idid = identity_morphism(tensor(H, H));
    AxiomReport r;

    r.record("mul-associative", compose(h.mul, tensor(h.mul, id)), compose(h.mul, tensor(id, h.mul)));
    r.record("mul-unit-left", compose(h.mul, tensor(h.unit, id)), id);
    r.record("mul-unit-right", compose(h.mul, tensor(id, h.unit)), id);
    r.record("comul-coassociative", compose(tensor(h.comul, id), h.comul), compose(tensor(id, h.comul), h.comul));
    r.record("counit-left", compose(tensor(h.counit, id), h.comul), id);
    r.record("counit-right", compose(tensor(id, h.counit), h.comul), id);
    r.record("bialgebra",
             compose(h.comul, h.mul),
             compose(tensor(h.mul, h.mul), compose(tensor(id, tensor(braiding(H, H), id)), tensor(h.comul, h.comul))));
    r.record("counit-unit", compose(h.counit, h.unit), identity_morphism(unit_object(H.params)));
    r.record("counit-multiplicative", compose(h.counit, h.mul), tensor(h.counit, h.counit));
    r.record("comul-unit", compose(h.comul, h.unit), tensor(h.unit, h.unit));
    Morphism eta_eps = compose(h.unit, h.counit);
    r.record("antipode-left", compose(h.mul, tensor(h.antipode, id), h.comul), eta_eps);
    r.record("antipode-right", compose(h.mul, tensor(id, h.antipode), h.comul), eta_eps);
    r.record("antipode-inverse-left", compose(h.antipode, h.antipode_inv), id);
    r.record("antipode-inverse-right", compose(h.antipode_inv, h.antipode), id);
    (void)idid;
    return r;
}

namespace detail {

inline GradedObject reflag(const GradedObject& x, const CategoryParams& p) {
    return GradedObject(p, x.slots);
}

inline Morphism reflag(const Morphism& f, const CategoryParams& p) {
    Morphism out;
    out.source = reflag(f.source, p);
    out.target = reflag(f.target, p);
    out.blocks = f.blocks;
    return out;
}

} // namespace detail

enum class OppositeVariant { op_mul, op_comul };

/// H^op (opposite multiplication) or H_op (opposite comultiplication), both
/// living in the mirror category with antipode S^{-1}.
inline HopfAlgebra opposite(const HopfAlgebra& h, OppositeVariant variant) {
    const GradedObject& H = h.object;
    CategoryParams flipped = H.params.mirror();
    HopfAlgebra out;
    out.object = detail::reflag(H, flipped);
    Morphism mul = h.mul, comul = h.comul;
    if (variant == OppositeVariant::op_mul)
        mul = compose(h.mul, braiding(H, H, true));
    else
        comul = compose(braiding(H, H, true), h.comul);
    out.mul = detail::reflag(mul, flipped);
    out.comul = detail::reflag(comul, flipped);
    out.unit = detail::reflag(h.unit, flipped);
    out.counit = detail::reflag(h.counit, flipped);
    out.antipode = detail::reflag(h.antipode_inv, flipped);
    out.antipode_inv = detail::reflag(h.antipode, flipped);
    return out;
}

/// Dual Hopf algebra on the dual object. Multiplication is the transpose of
/// comultiplication under the nested (order-reversing) identification
/// (H (x) H)^v = H^v (x) H^v, and dually for comultiplication.
inline HopfAlgebra dual_hopf(const HopfAlgebra& h, Side side) {
    (void)side; // both duals carry the same matrices in this concrete category
    const GradedObject& H = h.object;
    GradedObject D = dual_object(H);
    GradedObject one = unit_object(H.params);
    BasisIndexer bh(H), bd(D);
    PairIndexer phh(H, H), pdd(D, D);
    const int N = bh.size();

    HopfAlgebra out;
    out.object = D;
    out.mul = Morphism(tensor(D, D), D);
    out.comul = Morphism(D, tensor(D, D));
    out.unit = Morphism(one, D);
    out.counit = Morphism(D, one);
    out.antipode = Morphism(D, D);
    out.antipode_inv = Morphism(D, D);

    auto coeff = [&](const Morphism& f, int deg, int row, int col) -> FieldElement {
        if (!f.has_block(deg)) return FieldElement::zero(H.params.n);
        return f.block(deg).at(row, col);
    };

    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            // <mul_D(xi_a (x) xi_b), e_c> = coefficient of e_b (x) e_a in comul(e_c)
            for (int c = 0; c < N; ++c) {
                if ((bh.degree(a) + bh.degree(b)) % H.params.n != bh.degree(c)) continue;
                FieldElement v = coeff(h.comul, bh.degree(c), phh.pos_in_degree(b, a), bh.pos_in_degree(c));
                if (v.is_zero()) continue;
                int deg = (pdd.degree(a, b));
                out.mul.block(deg).at(bd.pos_in_degree(c), pdd.pos_in_degree(a, b)) = v;
            }
        }
    for (int c = 0; c < N; ++c)
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                if ((bh.degree(a) + bh.degree(b)) % H.params.n != bh.degree(c)) continue;
                // <comul_D(xi_c), e_a (x) e_b (reversed)> = coefficient of e_c in mul(e_b (x) e_a)
                FieldElement v = coeff(h.mul, bh.degree(c), bh.pos_in_degree(c), phh.pos_in_degree(b, a));
                if (v.is_zero()) continue;
                out.comul.block(bd.degree(c)).at(pdd.pos_in_degree(a, b), bd.pos_in_degree(c)) = v;
            }
    // unit_D = counit^t, counit_D = unit^t
    for (int c = 0; c < N; ++c) {
        if (bh.degree(c) == 0) {
            FieldElement v = coeff(h.counit, 0, 0, bh.pos_in_degree(c));
            if (!v.is_zero()) out.unit.block(0).at(bd.pos_in_degree(c), 0) = v;
            FieldElement w = coeff(h.unit, 0, bh.pos_in_degree(c), 0);
            if (!w.is_zero()) out.counit.block(0).at(0, bd.pos_in_degree(c)) = w;
        }
    }
    out.antipode = transpose(h.antipode);
    out.antipode_inv = transpose(h.antipode_inv);
    return out;
}

inline bool is_group_like(const HopfAlgebra& h, const Morphism& a) {
    if (!(a.source == unit_object(h.object.params)) || !(a.target == h.object))
        throw shape_mismatch("is_group_like: a must be 1 -> H");
    bool comul_ok = compose(h.comul, a) == tensor(a, a);
    bool counit_ok = compose(h.counit, a) == identity_morphism(unit_object(h.object.params));
    return comul_ok && counit_ok;
}

inline bool is_mult_functional(const HopfAlgebra& h, const Morphism& alpha) {
    if (!(alpha.source == h.object) || !(alpha.target == unit_object(h.object.params)))
        throw shape_mismatch("is_mult_functional: alpha must be H -> 1");
    bool mul_ok = compose(alpha, h.mul) == tensor(alpha, alpha);
    bool unit_ok = compose(alpha, h.unit) == identity_morphism(unit_object(h.object.params));
    return mul_ok && unit_ok;
}

/// Gaussian binomial [m choose k]_q via the q-Pascal recurrence.
inline FieldElement gaussian_binomial(int m, int k, const FieldElement& q) {
    const int n = q.order();
    if (k < 0 || k > m) return FieldElement::zero(n);
    std::vector<FieldElement> row(1, FieldElement::one(n));
    for (int i = 1; i <= m; ++i) {
        std::vector<FieldElement> next(static_cast<std::size_t>(i) + 1, FieldElement::zero(n));
        for (int j = 0; j <= i; ++j) {
            FieldElement acc = FieldElement::zero(n);
            if (j > 0) acc = acc + row[static_cast<std::size_t>(j - 1)];
            if (j < i) acc = acc + q.pow(j) * row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] = acc;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Trivial Hopf algebra on the unit object.
inline HopfAlgebra build_trivial(CategoryParams params) {
    GradedObject one = unit_object(params);
    HopfAlgebra h;
    h.object = one;
    h.mul = identity_morphism(one);        // 1 (x) 1 == 1 strictly
    h.unit = identity_morphism(one);
    h.comul = identity_morphism(one);
    h.counit = identity_morphism(one);
    h.antipode = identity_morphism(one);
    h.antipode_inv = identity_morphism(one);
    return h;
}

/// The divided-power quotient T(X)/(x^n) on a one-dimensional degree-1 object:
/// basis x^0..x^(n-1) with x^k in degree k, the worked example of the theory.
inline HopfAlgebra build_taft(CategoryParams params) {
    const int n = params.n;
    const FieldElement q = params.q();
    std::map<int, int> dims;
    for (int k = 0; k < n; ++k) dims[k] = 1;
    GradedObject H(params, dims);
    GradedObject one = unit_object(params);
    BasisIndexer b(H);
    PairIndexer p(H, H);

    HopfAlgebra h;
    h.object = H;
    h.mul = Morphism(tensor(H, H), H);
    h.comul = Morphism(H, tensor(H, H));
    h.unit = Morphism(one, H);
    h.counit = Morphism(H, one);
    h.antipode = Morphism(H, H);
    h.antipode_inv = Morphism(H, H);

    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            if (a + c < n)
                h.mul.block((a + c) % n).at(b.pos_in_degree(a + c), p.pos_in_degree(a, c)) =
                    FieldElement::one(n);
        }
    for (int m = 0; m < n; ++m)
        for (int k = 0; k <= m; ++k)
            h.comul.block(m).at(p.pos_in_degree(k, m - k), b.pos_in_degree(m)) = gaussian_binomial(m, k, q);
    h.unit.block(0).at(0, 0) = FieldElement::one(n);
    h.counit.block(0).at(0, 0) = FieldElement::one(n);
    for (int m = 0; m < n; ++m) {
        FieldElement sign = (m % 2 == 0) ? FieldElement::one(n) : -FieldElement::one(n);
        long half = static_cast<long>(m) * (m - 1) / 2;
        h.antipode.block(m).at(0, 0) = sign * q.pow(half);
        h.antipode_inv.block(m).at(0, 0) = sign * q.pow(-half);
    }
    return h;
}

/// Group algebra k[Z/m] in the trivially braided category (n = 1).
inline HopfAlgebra build_group_algebra(int m) {
    CategoryParams params = make_params(1, 0);
    GradedObject H(params, std::map<int, int>{{0, m}});
    GradedObject one = unit_object(params);
    BasisIndexer b(H);
    PairIndexer p(H, H);

    HopfAlgebra h;
    h.object = H;
    h.mul = Morphism(tensor(H, H), H);
    h.comul = Morphism(H, tensor(H, H));
    h.unit = Morphism(one, H);
    h.counit = Morphism(H, one);
    h.antipode = Morphism(H, H);
    h.antipode_inv = Morphism(H, H);

    FieldElement onef = FieldElement::one(1);
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < m; ++c)
            h.mul.block(0).at((a + c) % m, p.pos_in_degree(a, c)) = onef;
    for (int a = 0; a < m; ++a) {
        h.comul.block(0).at(p.pos_in_degree(a, a), a) = onef;
        h.counit.block(0).at(0, a) = onef;
        h.antipode.block(0).at((m - a) % m, a) = onef;
        h.antipode_inv.block(0).at((m - a) % m, a) = onef;
    }
    h.unit.block(0).at(0, 0) = onef;
    (void)b;
    return h;
}

/// Sweedler's four-dimensional Hopf algebra in the n = 1 category,
/// basis (1, g, x, gx) with g^2 = 1, x^2 = 0, xg = -gx.
inline HopfAlgebra build_sweedler() {
    CategoryParams params = make_params(1, 0);
    GradedObject H(params, std::map<int, int>{{0, 4}});
    GradedObject one = unit_object(params);
    PairIndexer p(H, H);

    HopfAlgebra h;
    h.object = H;
    h.mul = Morphism(tensor(H, H), H);
    h.comul = Morphism(H, tensor(H, H));
    h.unit = Morphism(one, H);
    h.counit = Morphism(H, one);
    h.antipode = Morphism(H, H);
    h.antipode_inv = Morphism(H, H);

    FieldElement onef = FieldElement::one(1);
    auto set_mul = [&](int a, int b, int c, int sign) {
        h.mul.block(0).at(c, p.pos_in_degree(a, b)) =
            sign > 0 ? onef : -onef;
    };
    // products against 1
    for (int a = 0; a < 4; ++a) { set_mul(0, a, a, +1); if (a) set_mul(a, 0, a, +1); }
    set_mul(1, 1, 0, +1); // g g = 1
    set_mul(1, 2, 3, +1); // g x = gx
    set_mul(1, 3, 2, +1); // g gx = x
    set_mul(2, 1, 3, -1); // x g = -gx
    set_mul(3, 1, 2, -1); // gx g = -x
    // x x = x gx = gx x = gx gx = 0 (left absent)

    auto set_comul = [&](int c, int a, int b, int sign) {
        h.comul.block(0).at(p.pos_in_degree(a, b), c) = sign > 0 ? onef : -onef;
    };
    set_comul(0, 0, 0, +1);
    set_comul(1, 1, 1, +1);
    set_comul(2, 2, 0, +1); // x (x) 1
    set_comul(2, 1, 2, +1); // g (x) x
    set_comul(3, 3, 1, +1); // gx (x) g
    set_comul(3, 0, 3, +1); // 1 (x) gx

    h.unit.block(0).at(0, 0) = onef;
    h.counit.block(0).at(0, 0) = onef;
    h.counit.block(0).at(0, 1) = onef;

    Mat& S = h.antipode.block(0);
    S.at(0, 0) = onef;
    S.at(1, 1) = onef;
    S.at(3, 2) = -onef; // S(x) = -gx
    S.at(2, 3) = onef;  // S(gx) = x
    Mat& Si = h.antipode_inv.block(0);
    Si.at(0, 0) = onef;
    Si.at(1, 1) = onef;
    Si.at(3, 2) = onef;  // S^{-1}(x) = gx
    Si.at(2, 3) = -onef; // S^{-1}(gx) = -x
    return h;
}

} // namespace qhopf
