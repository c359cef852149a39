#include "qhopf/category.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace qhopf;
using qhopf::testing::random_endo;
using qhopf::testing::random_morphism;
using qhopf::testing::random_object;

namespace {
GradedObject line(CategoryParams p, int degree) {
    return GradedObject(p, std::map<int, int>{{degree, 1}});
}
} // namespace

TEST_CASE("tensor of objects adds degrees mod n") {
    CategoryParams p = make_params(3, 1);
    GradedObject x = line(p, 1), y = line(p, 2);
    GradedObject xy = tensor(x, y);
    CHECK(xy.dim(0) == 1);
    CHECK(xy.total_dim() == 1);
    CHECK(tensor(x, unit_object(p)) == x);
    CHECK(tensor(unit_object(p), x) == x);
}

TEST_CASE("strict associativity of the tensor layout") {
    CategoryParams p = make_params(3, 1);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) {
        GradedObject a = random_object(p, rng), b = random_object(p, rng), c = random_object(p, rng);
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        Morphism f = random_endo(a, rng), g = random_endo(b, rng), h = random_endo(c, rng);
        CHECK(tensor(tensor(f, g), h) == tensor(f, tensor(g, h)));
        CHECK(tensor(f, identity_morphism(unit_object(p))) == f);
    }
}

TEST_CASE("compose matches a direct 2x2 product oracle") {
    CategoryParams p = make_params(1, 0);
    GradedObject x(p, std::map<int, int>{{0, 2}});
    Morphism f(x, x), g(x, x);
    auto q = [](int a, int b) { return FieldElement::from_rational(1, Rational(a, b)); };
    f.block(0).at(0, 0) = q(1, 2);
    f.block(0).at(0, 1) = q(-3, 1);
    f.block(0).at(1, 0) = q(2, 3);
    f.block(0).at(1, 1) = q(0, 1);
    g.block(0).at(0, 0) = q(5, 1);
    g.block(0).at(0, 1) = q(1, 6);
    g.block(0).at(1, 0) = q(-1, 2);
    g.block(0).at(1, 1) = q(4, 1);
    Morphism gf = compose(g, f);
    // oracle: plain row-by-column products
    CHECK(gf.block(0).at(0, 0) == q(5, 1) * q(1, 2) + q(1, 6) * q(2, 3));
    CHECK(gf.block(0).at(0, 1) == q(5, 1) * q(-3, 1));
    CHECK(gf.block(0).at(1, 0) == q(-1, 2) * q(1, 2) + q(4, 1) * q(2, 3));
    CHECK(gf.block(0).at(1, 1) == q(-1, 2) * q(-3, 1));
    CHECK(compose(identity_morphism(x), f) == f);
    CHECK(compose(zero_morphism(x, x), f) == zero_morphism(x, x));
}

TEST_CASE("braiding examples") {
    CategoryParams p = make_params(3, 1);
    FieldElement q = p.q();
    GradedObject x = line(p, 1), y = line(p, 2);
    SUBCASE("deg-1 past deg-2 picks up q^2") {
        Morphism b = braiding(x, y);
        CHECK(b.block(0).at(0, 0) == q.pow(2));
    }
    SUBCASE("unit braids trivially") {
        GradedObject any(p, std::map<int, int>{{0, 2}, {1, 1}});
        CHECK(braiding(unit_object(p), any) == identity_morphism(any));
        CHECK(braiding(any, unit_object(p)) == identity_morphism(any));
    }
    SUBCASE("inverse undoes") {
        std::mt19937_64 rng(11);
        GradedObject a = random_object(p, rng), b = random_object(p, rng);
        CHECK(compose(braiding(b, a, true), braiding(a, b)) == identity_morphism(tensor(a, b)));
        CHECK(compose(braiding(a, b), braiding(b, a, true)) == identity_morphism(tensor(b, a)));
    }
    SUBCASE("mirrored category reverses the exponent") {
        CategoryParams pm = make_params(3, 1, true);
        GradedObject xm = line(pm, 1), ym = line(pm, 2);
        CHECK(braiding(xm, ym).block(0).at(0, 0) == q.pow(-2));
    }
}

TEST_CASE("hexagon and naturality") {
    std::mt19937_64 rng(13);
    for (int n : {2, 3, 4}) {
        CategoryParams p = make_params(n, 1);
        for (int iter = 0; iter < 8; ++iter) {
            GradedObject x = random_object(p, rng), y = random_object(p, rng), z = random_object(p, rng);
            Morphism lhs = braiding(x, tensor(y, z));
            Morphism rhs = compose(tensor(identity_morphism(y), braiding(x, z)),
                                   tensor(braiding(x, y), identity_morphism(z)));
            CHECK(lhs == rhs);
            Morphism f = random_endo(x, rng), g = random_endo(y, rng);
            CHECK(compose(braiding(x, y), tensor(f, g)) == compose(tensor(g, f), braiding(x, y)));
        }
    }
}

TEST_CASE("dual data satisfies all four zig-zags") {
    std::mt19937_64 rng(17);
    for (int n : {1, 3, 4}) {
        CategoryParams p = make_params(n, 1);
        for (int iter = 0; iter < 8; ++iter) {
            GradedObject x = random_object(p, rng);
            Morphism idx = identity_morphism(x);
            DualData r = dual_data(x, Side::right);
            DualData l = dual_data(x, Side::left);
            Morphism idr = identity_morphism(r.dual);
            Morphism idl = identity_morphism(l.dual);
            CHECK(compose(tensor(r.ev, idx), tensor(idx, r.coev)) == idx);
            CHECK(compose(tensor(idx, l.ev), tensor(l.coev, idx)) == idx);
            CHECK(compose(tensor(idr, r.ev), tensor(r.coev, idr)) == idr);
            CHECK(compose(tensor(l.ev, idl), tensor(idl, l.coev)) == idl);
        }
    }
    SUBCASE("dual of unit is unit") {
        CategoryParams p = make_params(3, 1);
        DualData d = dual_data(unit_object(p), Side::right);
        CHECK(d.dual == unit_object(p));
        CHECK(scalar_of(d.ev) == FieldElement::one(3));
        CHECK(scalar_of(d.coev) == FieldElement::one(3));
    }
    SUBCASE("degree negation") {
        CategoryParams p = make_params(3, 1);
        GradedObject x = line(p, 1);
        CHECK(dual_object(x).dim(2) == 1);
    }
}

TEST_CASE("transpose") {
    CategoryParams p = make_params(4, 1);
    std::mt19937_64 rng(19);
    GradedObject x = random_object(p, rng), y = random_object(p, rng), z = random_object(p, rng);
    Morphism f = random_morphism(x, y, rng), g = random_morphism(y, z, rng);
    CHECK(transpose(identity_morphism(x)) == identity_morphism(dual_object(x)));
    CHECK(transpose(compose(g, f)) == compose(transpose(f), transpose(g)));
    CHECK(transpose(transpose(f)) == f);
    SUBCASE("1-dim deg-1 scaling transposes to the same scale") {
        GradedObject v = line(p, 1);
        FieldElement s = p.q() + FieldElement::one(4);
        Morphism m = s * identity_morphism(v);
        Morphism mt = transpose(m);
        CHECK(mt.block(3).at(0, 0) == s);
        // agreement with the ev/coev composite definition
        DualData d = dual_data(v, Side::right);
        Morphism composite = compose(tensor(identity_morphism(d.dual), d.ev),
                                     compose(tensor(identity_morphism(d.dual), tensor(m, identity_morphism(d.dual))),
                                             tensor(d.coev, identity_morphism(d.dual))));
        CHECK(composite == mt);
    }
}

TEST_CASE("trace8 and dim8") {
    SUBCASE("dim8(1) = 1 and zero traces to zero") {
        CategoryParams p = make_params(5, 1);
        CHECK(dim8(unit_object(p)) == FieldElement::one(5));
        GradedObject x = line(p, 2);
        CHECK(trace8(zero_morphism(x, x)).is_zero());
    }
    SUBCASE("1-dim object of degree k has dim8 q^(-k^2)") {
        for (int n : {2, 3, 4, 5, 6}) {
            CategoryParams p = make_params(n, 1);
            for (int k = 0; k < n; ++k) {
                FieldElement expected = p.q().pow(-(static_cast<long>(k) * k));
                CHECK(dim8(line(p, k)) == expected);
            }
        }
    }
    SUBCASE("cyclicity") {
        std::mt19937_64 rng(23);
        CategoryParams p = make_params(4, 1);
        for (int iter = 0; iter < 10; ++iter) {
            GradedObject x = random_object(p, rng), y = random_object(p, rng);
            Morphism f = random_morphism(x, y, rng), g = random_morphism(y, x, rng);
            CHECK(trace8(compose(f, g)) == trace8(compose(g, f)));
        }
    }
    SUBCASE("not an endomorphism") {
        CategoryParams p = make_params(3, 1);
        CHECK_THROWS_AS(trace8(zero_morphism(line(p, 1), line(p, 2))), not_endomorphism);
    }
}

TEST_CASE("u0_minus2") {
    SUBCASE("unit object") {
        CategoryParams p = make_params(3, 1);
        CHECK(u0_minus2(unit_object(p)) == identity_morphism(unit_object(p)));
    }
    SUBCASE("1-dim degree k gives q^(-2k^2)") {
        for (int n : {2, 3, 4, 5, 6}) {
            CategoryParams p = make_params(n, 1);
            for (int k = 0; k < n; ++k) {
                Morphism u = u0_minus2(line(p, k));
                CHECK(u.block(k).at(0, 0) == p.q().pow(-2L * k * k));
            }
        }
    }
    SUBCASE("naturality") {
        std::mt19937_64 rng(29);
        CategoryParams p = make_params(4, 1);
        for (int iter = 0; iter < 10; ++iter) {
            GradedObject x = random_object(p, rng);
            Morphism f = random_endo(x, rng);
            CHECK(compose(u0_minus2(x), f) == compose(f, u0_minus2(x)));
        }
    }
}

TEST_CASE("solve_tensor_factor and monodromy") {
    CategoryParams p = make_params(3, 1);
    std::mt19937_64 rng(31);
    SUBCASE("round trip") {
        GradedObject k = line(p, 2);
        for (int iter = 0; iter < 6; ++iter) {
            GradedObject x = random_object(p, rng), y = random_object(p, rng);
            Morphism f = random_morphism(x, y, rng);
            Morphism g = tensor(f, identity_morphism(k));
            CHECK(solve_tensor_factor(g, k) == f);
        }
    }
    SUBCASE("K = unit gives back g") {
        GradedObject x = random_object(p, rng);
        Morphism f = random_endo(x, rng);
        CHECK(solve_tensor_factor(f, unit_object(p)) == f);
    }
    SUBCASE("monodromy values and the two-braidings oracle") {
        for (int n : {2, 3, 5}) {
            CategoryParams pn = make_params(n, 1);
            for (int d = 0; d < n; ++d) {
                GradedObject k = line(pn, d);
                for (int j = 0; j < n; ++j) {
                    GradedObject x = line(pn, j);
                    Morphism omega = monodromy(k, x);
                    // oracle: the two crossings contribute q^(dj) each
                    CHECK(omega.block(j).at(0, 0) == pn.q().pow(2L * d * j));
                }
            }
            CHECK(monodromy(unit_object(pn), line(pn, 1)) == identity_morphism(line(pn, 1)));
        }
    }
    SUBCASE("monodromy naturality and tensor-multiplicativity") {
        GradedObject k = line(p, 1);
        for (int iter = 0; iter < 6; ++iter) {
            GradedObject x = random_object(p, rng), y = random_object(p, rng);
            Morphism f = random_morphism(x, y, rng);
            CHECK(compose(monodromy(k, y), f) == compose(f, monodromy(k, x)));
            CHECK(monodromy(k, tensor(x, y)) == tensor(monodromy(k, x), monodromy(k, y)));
        }
    }
    SUBCASE("non-invertible object rejected") {
        GradedObject big(p, std::map<int, int>{{0, 2}});
        CHECK_THROWS_AS(monodromy(big, line(p, 1)), not_invertible_object);
    }
}

TEST_CASE("self-braiding of an invertible object is dim8^(-1)") {
    for (int n : {2, 3, 4, 6}) {
        CategoryParams p = make_params(n, 1);
        for (int d = 0; d < n; ++d) {
            GradedObject k = line(p, d);
            Morphism psi = braiding(k, k);
            FieldElement expected = dim8(k).inverse();
            CHECK(psi == expected * identity_morphism(tensor(k, k)));
        }
    }
}
