#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhopf {

/// Exact rational scalar. GMP keeps the representation canonical
/// (reduced fraction, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw parse_error("empty rational literal");
    mpq_class value;
    if (value.set_str(std::string(text), 10) != 0)
        throw parse_error("invalid rational literal: '" + std::string(text) + "'");
    if (value.get_den() == 0)
        throw parse_error("zero denominator in rational literal: '" + std::string(text) + "'");
    value.canonicalize();
    return value;
}

/// Reduced "p/q" form, "p" when the denominator is 1.
inline std::string format_rational(const Rational& value) {
    return value.get_str();
}

} // namespace qhopf
