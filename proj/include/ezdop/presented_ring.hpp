#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ezdop/groebner.hpp"
#include "ezdop/polynomial.hpp"

namespace ezdop {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

// Q-basis of one graded piece of a quotient ring: the standard monomials of
// that weighted degree, descending in the ring order.
struct GradedPieceBasis {
    int64_t degree = 0;
    std::vector<Monomial> monomials;
    int dimension() const { return static_cast<int>(monomials.size()); }
    // Position of m, or -1.
    int index_of(const Monomial& m) const;
};

// Graded polynomial ring modulo an ideal, with a cached reduced Groebner
// basis and canonical normal-form representatives. Immutable; graded piece
// bases are memoized behind a mutex, so all queries are thread-safe.
class PresentedRing : public std::enable_shared_from_this<PresentedRing> {
public:
    static RingPtr make(PolyRingPtr ambient, std::vector<Polynomial> relations,
                        bool graded = true);
    // Convenience: build the ambient ring and parse relation strings.
    static RingPtr make(std::vector<std::string> var_names, std::vector<int> var_degrees,
                        const std::vector<std::string>& relations,
                        TermOrder order = TermOrder::grevlex(), bool graded = true);

    const PolyRingPtr& ambient() const { return ambient_; }
    const IdealPresentation& ideal() const { return ideal_; }
    const GroebnerBasis& basis() const { return basis_; }
    bool graded() const { return graded_; }

    Polynomial normal_form(const Polynomial& p) const { return basis_.normal_form(p); }

    const GradedPieceBasis& graded_basis(int64_t degree) const;
    int64_t graded_dimension(int64_t degree) const;

    // Set when this ring was created by quotient_by.
    RingPtr parent() const { return parent_; }
    const std::optional<Polynomial>& quotient_element() const { return quotient_elem_; }

private:
    PresentedRing() = default;

    PolyRingPtr ambient_;
    IdealPresentation ideal_;
    GroebnerBasis basis_;
    bool graded_ = true;
    RingPtr parent_;
    std::optional<Polynomial> quotient_elem_;

    mutable std::mutex cache_mu_;
    mutable std::map<int64_t, GradedPieceBasis> piece_cache_;

    friend RingPtr quotient_by(const RingPtr&, const class RingElem&);
};

// Element of a presented ring, stored as its canonical normal-form
// representative; two elements are equal iff their representatives are
// identical polynomials.
class RingElem {
public:
    RingElem() = default;
    RingElem(RingPtr ring, const Polynomial& rep);
    static RingElem parse(const RingPtr& ring, std::string_view text);
    static RingElem zero(const RingPtr& ring);
    static RingElem one(const RingPtr& ring);

    const RingPtr& ring() const { return ring_; }
    const Polynomial& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator-() const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator*(const Rational& c) const;
    RingElem pow(int e) const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    // Internal degree of a homogeneous nonzero element.
    std::optional<int64_t> degree() const { return rep_.homogeneous_degree(); }
    std::string str() const { return rep_.str(); }

private:
    RingPtr ring_;
    Polynomial rep_;
};

// R = S/(x), presented over the same ambient polynomial ring by enlarging
// the defining ideal. In graded mode x must be homogeneous.
RingPtr quotient_by(const RingPtr& S, const RingElem& x);

// Normal-form re-reduction S -> R along a quotient presentation.
RingElem project(const RingPtr& R, const RingElem& s);
// Canonical lifting R -> S: read the representative in S.
RingElem lift(const RingPtr& S, const RingElem& r);

// Generators of ann_R(a) as polynomials over the ambient ring, reduced to
// canonical form in R; exact, no degree bound. May be empty (zero ideal).
IdealPresentation annihilator(const RingPtr& R, const RingElem& a);
std::vector<RingElem> annihilator_elems(const RingPtr& R, const RingElem& a);

// True when every p in `gens` lies in (others) + I_R, i.e. the R-ideal
// generated by `gens` is contained in the one generated by `others`.
bool ideal_contained_mod(const RingPtr& R, const std::vector<Polynomial>& gens,
                         const std::vector<Polynomial>& others);

struct ExactPairReport {
    bool ok = false;
    bool product_zero = false;   // x*y == 0 in S  (gives (y) <= ann(x), (x) <= ann(y))
    bool ann_x_in_y = false;     // ann(x) <= (y)
    bool ann_y_in_x = false;     // ann(y) <= (x)
    IdealPresentation ann_x, ann_y;
    std::string summary() const;
};

// Definition check: ann_S(x) = (y) and ann_S(y) = (x), decided by mutual
// generator membership, never by comparing generator lists.
ExactPairReport check_exact_pair(const RingPtr& S, const RingElem& x, const RingElem& y);

}  // namespace ezdop
