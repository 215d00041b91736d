#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ezdop {

// Exact rational scalar. All values are kept canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Arithmetic on canonical operands stays canonical;
// construction from a raw fraction goes through make_rational.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "n" or "n/d" with integer n and positive integer d.
std::optional<Rational> parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace ezdop
