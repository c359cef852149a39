#pragma once

#include "qhopf/rational.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qhopf {

struct order_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int totient(int n) {
    int result = n, m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

/// Dense polynomial, coeffs[i] is the coefficient of x^i.
using IntPoly = std::vector<Integer>;

inline IntPoly trim(IntPoly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

/// Exact division of integer polynomials; remainder must vanish.
inline IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
    IntPoly rem = num;
    IntPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 1, Integer(0));
    const Integer& lead = den.back();
    for (int k = static_cast<int>(rem.size()) - static_cast<int>(den.size()); k >= 0; --k) {
        Integer c = rem[k + den.size() - 1] / lead;
        quot[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            rem[k + i] -= c * den[i];
    }
    for (const Integer& c : rem)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return trim(quot);
}

inline const IntPoly& cyclotomic_cached(int n);

inline IntPoly compute_cyclotomic(int n) {
    // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
    IntPoly num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    IntPoly den{Integer(1)};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntPoly& phi_d = cyclotomic_cached(d);
        IntPoly prod(den.size() + phi_d.size() - 1, Integer(0));
        for (std::size_t i = 0; i < den.size(); ++i)
            for (std::size_t j = 0; j < phi_d.size(); ++j)
                prod[i + j] += den[i] * phi_d[j];
        den = std::move(prod);
    }
    return divide_exact(num, den);
}

inline const IntPoly& cyclotomic_cached(int n) {
    static std::map<int, IntPoly> cache;
    static std::recursive_mutex mutex;
    std::lock_guard<std::recursive_mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

/// Rows k = 0 .. 2*phi-2 of the reduction x^k mod Phi_n, each of length phi.
inline const std::vector<std::vector<Rational>>& reduction_rows(int n) {
    static std::map<int, std::vector<std::vector<Rational>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const IntPoly& phi = cyclotomic_cached(n);
    const int deg = static_cast<int>(phi.size()) - 1;
    std::vector<std::vector<Rational>> rows;
    for (int k = 0; k < deg; ++k) {
        std::vector<Rational> row(deg, Rational(0));
        row[k] = 1;
        rows.push_back(std::move(row));
    }
    for (int k = deg; k <= 2 * deg - 2; ++k) {
        // x^k = x * x^(k-1); reduce the overflow term via x^deg = -(phi_0 + ... ).
        std::vector<Rational> row(deg, Rational(0));
        const std::vector<Rational>& prev = rows[k - 1];
        Rational overflow = prev[deg - 1];
        for (int i = deg - 1; i > 0; --i) row[i] = prev[i - 1];
        row[0] = 0;
        for (int i = 0; i < deg; ++i) {
            Rational t = row[i] - overflow * Rational(phi[i]);
            row[i] = t;
        }
        rows.push_back(std::move(row));
    }
    return cache.emplace(n, std::move(rows)).first->second;
}

} // namespace detail

/// Coefficients of Phi_n, constant term first; monic of degree phi(n).
inline std::vector<Integer> cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    return detail::cyclotomic_cached(n);
}

/// Element of Q(zeta_n) in the basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo Phi_n. Equality is coefficientwise.
class FieldElement {
public:
    FieldElement() : order_(1), coeffs_(1, Rational(0)) {}
    FieldElement(int order, std::vector<Rational> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < 1) throw std::invalid_argument("FieldElement: order must be positive");
        if (static_cast<int>(coeffs_.size()) != totient(order_))
            throw std::invalid_argument("FieldElement: coefficient vector has wrong length");
        for (Rational& c : coeffs_) c.canonicalize(); // exact equality is a vector compare
    }

    static FieldElement zero(int n) { return FieldElement(n, std::vector<Rational>(totient(n), Rational(0))); }
    static FieldElement one(int n) { return from_rational(n, Rational(1)); }
    static FieldElement from_rational(int n, const Rational& r) {
        std::vector<Rational> c(totient(n), Rational(0));
        c[0] = r;
        return FieldElement(n, std::move(c));
    }
    static FieldElement zeta(int n) { return root_power(n, 1); }
    /// zeta_n^e for any integer exponent e.
    static FieldElement root_power(int n, long e) {
        long k = ((e % n) + n) % n;
        std::vector<Rational> raw(static_cast<std::size_t>(k) + 1, Rational(0));
        raw[static_cast<std::size_t>(k)] = 1;
        return reduce_general(n, std::move(raw));
    }

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(order_); }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_orders(a, b);
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
        return FieldElement(a.order_, std::move(c));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_orders(a, b);
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
        return FieldElement(a.order_, std::move(c));
    }
    FieldElement operator-() const {
        std::vector<Rational> c(coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
        return FieldElement(order_, std::move(c));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_orders(a, b);
        const std::size_t deg = a.coeffs_.size();
        std::vector<Rational> raw(2 * deg - 1, Rational(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (b.coeffs_[j] == 0) continue;
                Rational t = raw[i + j] + a.coeffs_[i] * b.coeffs_[j];
                raw[i + j] = t;
            }
        }
        return reduce(a.order_, raw);
    }
    friend FieldElement operator*(const Rational& s, const FieldElement& a) {
        std::vector<Rational> c(a.coeffs_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
        return FieldElement(a.order_, std::move(c));
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    /// Multiplicative inverse via the extended Euclid algorithm against Phi_n.
    FieldElement inverse() const {
        if (is_zero()) throw division_by_zero("FieldElement::inverse of zero");
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d > 0 && p[static_cast<std::size_t>(d)] == 0) --d;
            return (d == 0 && p[0] == 0) ? -1 : d;
        };
        const std::vector<Integer>& phi_int = detail::cyclotomic_cached(order_);
        Poly r0(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        Poly r1 = coeffs_;
        Poly s0(1, Rational(0)), s1(1, Rational(1)); // bezout for this element
        while (deg(r1) > 0) {
            // r0 = q*r1 + r; descend.
            Poly q(static_cast<std::size_t>(deg(r0) - deg(r1) + 1), Rational(0));
            Poly rem = r0;
            int d1 = deg(r1);
            Rational lead = r1[static_cast<std::size_t>(d1)];
            for (int k = deg(rem); k >= d1; --k) {
                Rational c = rem[static_cast<std::size_t>(k)] / lead;
                if (c == 0) continue;
                q[static_cast<std::size_t>(k - d1)] = c;
                for (int i = 0; i <= d1; ++i) {
                    Rational t = rem[static_cast<std::size_t>(k - d1 + i)] - c * r1[static_cast<std::size_t>(i)];
                    rem[static_cast<std::size_t>(k - d1 + i)] = t;
                }
            }
            Poly snew(std::max(s0.size(), q.size() + s1.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) {
                    Rational t = snew[i + j] - q[i] * s1[j];
                    snew[i + j] = t;
                }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(snew);
        }
        if (deg(r1) < 0) throw std::logic_error("FieldElement::inverse: gcd degenerated");
        Rational unit = r1[0];
        Poly scaled(s1.size());
        for (std::size_t i = 0; i < s1.size(); ++i) scaled[i] = s1[i] / unit;
        return reduce_general(order_, scaled);
    }

    FieldElement pow(long k) const {
        if (k == 0) {
            if (is_zero()) throw division_by_zero("FieldElement::pow: 0^0");
            return one(order_);
        }
        FieldElement base = k < 0 ? inverse() : *this;
        unsigned long e = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1 : static_cast<unsigned long>(k);
        FieldElement acc = one(order_);
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Reduce a raw polynomial of degree <= 2*phi-2 modulo Phi_n.
    static FieldElement reduce(int n, const std::vector<Rational>& raw) {
        const auto& rows = detail::reduction_rows(n);
        const std::size_t deg = static_cast<std::size_t>(totient(n));
        std::vector<Rational> out(deg, Rational(0));
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (raw[k] == 0) continue;
            if (k >= rows.size()) throw std::logic_error("FieldElement::reduce: degree too large");
            for (std::size_t i = 0; i < deg; ++i) {
                Rational t = out[i] + raw[k] * rows[k][i];
                out[i] = t;
            }
        }
        return FieldElement(n, std::move(out));
    }

    /// Reduce a polynomial of arbitrary degree modulo Phi_n (long division).
    static FieldElement reduce_general(int n, std::vector<Rational> raw) {
        const std::vector<Integer>& phi = detail::cyclotomic_cached(n);
        const int d = static_cast<int>(phi.size()) - 1;
        for (int k = static_cast<int>(raw.size()) - 1; k >= d; --k) {
            Rational c = raw[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            raw[static_cast<std::size_t>(k)] = 0;
            for (int i = 0; i < d; ++i) {
                Rational t = raw[static_cast<std::size_t>(k - d + i)] - c * Rational(phi[i]);
                raw[static_cast<std::size_t>(k - d + i)] = t;
            }
        }
        raw.resize(static_cast<std::size_t>(totient(n)), Rational(0));
        return FieldElement(n, std::move(raw));
    }

private:
    static void check_orders(const FieldElement& a, const FieldElement& b) {
        if (a.order_ != b.order_)
            throw order_mismatch("FieldElement: mixed cyclotomic orders " + std::to_string(a.order_) +
                                 " and " + std::to_string(b.order_));
    }

    int order_;
    std::vector<Rational> coeffs_;
};

enum class ScalarOp { add, sub, mul, div };

inline FieldElement scalar_arith(const FieldElement& a, const FieldElement& b, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return a + b;
        case ScalarOp::sub: return a - b;
        case ScalarOp::mul: return a * b;
        case ScalarOp::div:
            if (b.is_zero()) throw division_by_zero("scalar_arith: division by zero");
            return a / b;
    }
    throw std::logic_error("scalar_arith: bad op");
}

inline FieldElement scalar_pow(const FieldElement& a, long k) { return a.pow(k); }

inline std::string format_field_element(const FieldElement& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) out += ", ";
        out += format_rational(x.coeffs()[i]);
    }
    out += "]@" + std::to_string(x.order());
    return out;
}

} // namespace qhopf
