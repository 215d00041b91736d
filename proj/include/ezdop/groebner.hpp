#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ezdop/polynomial.hpp"

namespace ezdop {

// Finite generating set of an ideal. Zero generators are dropped and exact
// duplicates removed, preserving first-occurrence order.
struct IdealPresentation {
    PolyRingPtr ring;
    std::vector<Polynomial> generators;

    static IdealPresentation make(PolyRingPtr ring, std::vector<Polynomial> gens);
    bool is_zero_ideal() const { return generators.empty(); }
};

struct NormalFormResult {
    Polynomial remainder;
    // remainder == input - sum_i basis_cofactors[i] * basis.elements()[i]
    std::vector<Polynomial> basis_cofactors;
};

// Reduced Groebner basis with cofactor expressions over the original
// generators: elements()[i] == sum_j cofactors()[i][j] * ideal().generators[j].
class GroebnerBasis {
public:
    const IdealPresentation& ideal() const { return ideal_; }
    const PolyRingPtr& ring() const { return ideal_.ring; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    const std::vector<std::vector<Polynomial>>& cofactors() const { return cofactors_; }

    Polynomial normal_form(const Polynomial& p) const;
    NormalFormResult normal_form_tracked(const Polynomial& p) const;
    // c with p - remainder == sum_j c[j] * ideal().generators[j].
    std::vector<Polynomial> cofactors_over_generators(const NormalFormResult& nf) const;

    bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
    // True when no basis leading monomial divides m.
    bool is_standard_monomial(const Monomial& m) const;

private:
    friend GroebnerBasis buchberger_impl(const IdealPresentation&, bool, uint64_t);
    IdealPresentation ideal_;
    std::vector<Polynomial> elements_;
    std::vector<std::vector<Polynomial>> cofactors_;
};

enum class SelectionStrategy {
    Normal,      // minimal lcm (degree, then term order, then indices)
    Randomized,  // uniformly random pending pair; for cross-checking only
};

// Always terminates; deterministic for fixed input, order and strategy.
// The empty generator list yields the empty basis (zero ideal).
GroebnerBasis buchberger(const IdealPresentation& ideal,
                         SelectionStrategy strategy = SelectionStrategy::Normal,
                         uint64_t seed = 0);

struct MembershipCertificate {
    bool member = false;
    std::vector<Polynomial> generator_cofactors;  // valid when member
};
MembershipCertificate ideal_member(const Polynomial& p, const GroebnerBasis& basis);

// Generators of (I : a) = { p : p*a in I }, via intersection with (a)
// using a tag-variable elimination order, then exact division by a.
IdealPresentation ideal_quotient(const IdealPresentation& ideal, const Polynomial& a);

// Exact single-divisor division in the free polynomial ring; nullopt when
// p is not a polynomial multiple of a.
std::optional<Polynomial> exact_divide_free(const Polynomial& p, const Polynomial& a);

struct DivisionCertificate {
    Polynomial quotient;                   // q with r - a*q in the ideal
    std::vector<Polynomial> ideal_witness; // w with r == a*q + sum_j w[j]*gen[j]
};

// Precomputed tracked basis of (a) + I for repeated division by the same
// divisor. Throws when a == 0 or a lies in I (degenerate divisor).
class DivisionContext {
public:
    DivisionContext(const GroebnerBasis& ideal_basis, Polynomial a);

    // Solves r == a*q (mod I). Deterministic; nullopt when r is not in (a) + I.
    std::optional<DivisionCertificate> divide(const Polynomial& r) const;
    const Polynomial& divisor() const { return divisor_; }

private:
    Polynomial divisor_;
    size_t n_ideal_gens_;
    GroebnerBasis extended_;  // basis of (a) + I, generator 0 = a
};

std::optional<DivisionCertificate> certified_divide(const Polynomial& r, const Polynomial& a,
                                                    const IdealPresentation& ideal);

}  // namespace ezdop
