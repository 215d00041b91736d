#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: polynomial arithmetic on coefficient maps, brute-force monomial
// enumeration, and divisibility-based monomial ideal queries.

#include <map>
#include <random>
#include <vector>

#include "ezdop/polynomial.hpp"
#include "ezdop/presented_ring.hpp"

namespace ezdop::oracle {

using CoeffMap = std::map<std::vector<int32_t>, Rational>;

inline CoeffMap to_map(const Polynomial& p) {
    CoeffMap m;
    for (const Term& t : p.terms()) m[t.mono.exponents()] = t.coeff;
    return m;
}

inline Polynomial from_map(const PolyRingPtr& ring, const CoeffMap& m) {
    std::vector<Term> terms;
    for (const auto& [e, c] : m)
        if (c != 0) terms.push_back({c, Monomial(e)});
    return Polynomial::from_terms(ring, std::move(terms));
}

inline Polynomial map_add(const Polynomial& a, const Polynomial& b) {
    CoeffMap m = to_map(a);
    for (const auto& [e, c] : to_map(b)) m[e] += c;
    return from_map(a.ring(), m);
}

inline Polynomial map_mul(const Polynomial& a, const Polynomial& b) {
    CoeffMap m;
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            std::vector<int32_t> e = ta.mono.exponents();
            for (size_t i = 0; i < e.size(); ++i) e[i] += tb.mono.exponents()[i];
            m[e] += ta.coeff * tb.coeff;
        }
    return from_map(a.ring(), m);
}

// All monomials of total degree <= maxdeg (unweighted), in a fixed but
// order-independent enumeration.
inline std::vector<Monomial> all_monomials_up_to(int nvars, int maxdeg) {
    std::vector<Monomial> out;
    std::vector<int32_t> cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            out.emplace_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, maxdeg);
    return out;
}

inline bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const Monomial& g : gens)
        if (g.divides(m)) return true;
    return false;
}

// Minimal generating set of a monomial ideal: drop generators divisible by
// another generator.
inline std::vector<Monomial> minimal_monomial_generators(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i))
                redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

inline Polynomial random_poly(const PolyRingPtr& ring, std::mt19937_64& rng, int maxdeg = 3,
                              int terms = 4) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> expo(0, maxdeg);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<int32_t> e(ring->nvars());
        int budget = maxdeg;
        for (int i = 0; i < ring->nvars(); ++i) {
            int v = expo(rng) % (budget + 1);
            e[i] = v;
            budget -= v;
        }
        int c = coeff(rng);
        if (c != 0) ts.push_back({Rational(c), Monomial(std::move(e))});
    }
    return Polynomial::from_terms(ring, std::move(ts));
}

// Random homogeneous element of a graded quotient ring, possibly zero.
inline RingElem random_homogeneous_elem(const RingPtr& R, int64_t degree,
                                        std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Term> ts;
    for (const Monomial& m : R->graded_basis(degree).monomials) {
        int c = coeff(rng);
        if (c != 0) ts.push_back({Rational(c), m});
    }
    return RingElem(R, Polynomial::from_terms(R->ambient(), std::move(ts)));
}

}  // namespace ezdop::oracle
