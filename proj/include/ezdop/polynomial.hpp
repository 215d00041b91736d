#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ezdop/monomial.hpp"
#include "ezdop/poly_ring.hpp"
#include "ezdop/rational.hpp"

namespace ezdop {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg), line(line), col(col) {}
    int line = 0;
    int col = 0;
};

struct Term {
    Rational coeff;
    Monomial mono;
};

// Sparse multivariate polynomial over Q attached to an ambient PolyRing.
// Terms are strictly descending in the ring's term order, coefficients
// nonzero, monomials distinct; the empty term list is the zero polynomial.
class Polynomial {
public:
    Polynomial() = default;  // detached placeholder; only assignable

    static Polynomial zero(PolyRingPtr ring);
    static Polynomial constant(PolyRingPtr ring, Rational c);
    static Polynomial variable(PolyRingPtr ring, int index);
    static Polynomial monomial(PolyRingPtr ring, Rational c, Monomial m);
    // Normalizes: merges duplicates, drops zeros, sorts descending.
    static Polynomial from_terms(PolyRingPtr ring, std::vector<Term> terms);

    // Text format: integer or n/d coefficients, '*' products, '^' powers,
    // '+'/'-'; e.g. "x^2+y^2-3/2*z*w". Throws ParseError (column is
    // 1-based within the text).
    static Polynomial parse(PolyRingPtr ring, std::string_view text);

    const PolyRingPtr& ring() const { return ring_; }
    bool attached() const { return ring_ != nullptr; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial mul_term(const Rational& c, const Monomial& m) const;
    Polynomial pow(int e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Weighted degree of the highest-degree monomial; nullopt for zero.
    std::optional<int64_t> total_weighted_degree() const;
    bool is_homogeneous() const;
    // Degree of a homogeneous nonzero polynomial; nullopt for zero.
    std::optional<int64_t> homogeneous_degree() const;

    // Deterministic printing: terms descending in the ring order,
    // coefficient 1 elided except on the constant term.
    std::string str() const;

private:
    Polynomial(PolyRingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}
    void require_same_ring(const Polynomial& other) const;

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace ezdop
