#include "qhopf/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace qhopf;

namespace {

// Independent oracle: naive polynomial long division of x^n - 1 by a product
// of lower cyclotomics, written directly over mpq without the library's path.
std::vector<Rational> oracle_divide(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> quot(num.size() - den.size() + 1, Rational(0));
    for (int k = static_cast<int>(num.size()) - static_cast<int>(den.size()); k >= 0; --k) {
        Rational c = num[k + den.size() - 1] / den.back();
        quot[static_cast<std::size_t>(k)] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            Rational t = num[k + i] - c * den[i];
            num[k + i] = t;
        }
    }
    for (const Rational& r : num) REQUIRE(r == 0);
    return quot;
}

std::vector<Rational> oracle_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rational t = out[i + j] + a[i] * b[j];
            out[i + j] = t;
        }
    return out;
}

FieldElement random_element(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Rational> c(static_cast<std::size_t>(totient(n)));
    for (auto& x : c) x = Rational(num(rng), den(rng));
    return FieldElement(n, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic polynomials match the division oracle") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});

    // Phi_4 = (x^4 - 1) / (Phi_1 Phi_2)
    std::vector<Rational> x4m1{-1, 0, 0, 0, 1};
    std::vector<Rational> phi1{-1, 1}, phi2{1, 1};
    auto expected4 = oracle_divide(x4m1, oracle_mul(phi1, phi2));
    REQUIRE(expected4.size() == 3);
    CHECK(expected4 == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});

    // Phi_6 = (x^6 - 1) / (Phi_1 Phi_2 Phi_3)
    std::vector<Rational> x6m1{-1, 0, 0, 0, 0, 0, 1};
    std::vector<Rational> phi3{1, 1, 1};
    auto expected6 = oracle_divide(x6m1, oracle_mul(oracle_mul(phi1, phi2), phi3));
    CHECK(expected6 == std::vector<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
}

TEST_CASE("zeta_n is a root of Phi_n") {
    for (int n = 1; n <= 12; ++n) {
        auto phi = cyclotomic_polynomial(n);
        FieldElement z = FieldElement::zeta(n);
        FieldElement acc = FieldElement::zero(n);
        for (std::size_t k = 0; k < phi.size(); ++k)
            acc = acc + FieldElement::from_rational(n, Rational(phi[k])) * z.pow(static_cast<long>(k));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("scalar arithmetic examples") {
    SUBCASE("n=4: zeta * zeta = -1") {
        FieldElement z = FieldElement::zeta(4);
        CHECK(z * z == -FieldElement::one(4));
    }
    SUBCASE("n=3: (1+zeta) + zeta = 1 + 2 zeta") {
        FieldElement z = FieldElement::zeta(3);
        FieldElement lhs = (FieldElement::one(3) + z) + z;
        CHECK(lhs == FieldElement(3, {Rational(1), Rational(2)}));
    }
    SUBCASE("n=3: 1/zeta = zeta^2 = -1 - zeta") {
        FieldElement z = FieldElement::zeta(3);
        FieldElement inv = scalar_arith(FieldElement::one(3), z, ScalarOp::div);
        CHECK(inv == FieldElement(3, {Rational(-1), Rational(-1)}));
        CHECK(inv == z.pow(-1));
        CHECK(inv == z * z);
    }
    SUBCASE("order mismatch raises") {
        CHECK_THROWS_AS(FieldElement::one(3) + FieldElement::one(4), order_mismatch);
    }
    SUBCASE("division by zero raises") {
        CHECK_THROWS_AS(scalar_arith(FieldElement::one(3), FieldElement::zero(3), ScalarOp::div),
                        division_by_zero);
        CHECK_THROWS_AS(FieldElement::zero(5).pow(-1), division_by_zero);
    }
}

TEST_CASE("scalar_pow basics") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 12}) {
        FieldElement z = FieldElement::zeta(n);
        CHECK(z.pow(n) == FieldElement::one(n));
        CHECK(z.pow(0) == FieldElement::one(n));
        for (long k = -7; k <= 7; ++k)
            CHECK(z.pow(k) == z.pow(k + 3L * n)); // depends only on k mod n
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(20240811);
    for (int n : {1, 2, 3, 4, 5, 6, 12}) {
        for (int iter = 0; iter < 25; ++iter) {
            FieldElement a = random_element(n, rng);
            FieldElement b = random_element(n, rng);
            FieldElement c = random_element(n, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == FieldElement::one(n));
                CHECK(a.pow(-2) == (a * a).inverse());
            }
        }
    }
}
