#include "ezdop/presented_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ezdop {

int GradedPieceBasis::index_of(const Monomial& m) const {
    for (size_t i = 0; i < monomials.size(); ++i)
        if (monomials[i] == m) return static_cast<int>(i);
    return -1;
}

RingPtr PresentedRing::make(PolyRingPtr ambient, std::vector<Polynomial> relations,
                            bool graded) {
    if (graded) {
        for (const Polynomial& r : relations)
            if (!r.is_zero() && !r.is_homogeneous())
                throw std::invalid_argument("inhomogeneous relation in graded mode: " + r.str());
    }
    auto ring = std::shared_ptr<PresentedRing>(new PresentedRing());
    ring->ambient_ = ambient;
    ring->ideal_ = IdealPresentation::make(ambient, std::move(relations));
    ring->basis_ = buchberger(ring->ideal_);
    ring->graded_ = graded;
    return ring;
}

RingPtr PresentedRing::make(std::vector<std::string> var_names, std::vector<int> var_degrees,
                            const std::vector<std::string>& relations, TermOrder order,
                            bool graded) {
    PolyRingPtr ambient = PolyRing::create(std::move(var_names), std::move(var_degrees),
                                           std::move(order));
    std::vector<Polynomial> rels;
    rels.reserve(relations.size());
    for (const std::string& s : relations) rels.push_back(Polynomial::parse(ambient, s));
    return make(ambient, std::move(rels), graded);
}

const GradedPieceBasis& PresentedRing::graded_basis(int64_t degree) const {
    if (!graded_) throw std::invalid_argument("graded basis requested from ungraded ring");
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = piece_cache_.find(degree);
    if (it != piece_cache_.end()) return it->second;
    GradedPieceBasis piece;
    piece.degree = degree;
    for (Monomial& m : ambient_->monomials_of_degree(degree))
        if (basis_.is_standard_monomial(m)) piece.monomials.push_back(std::move(m));
    return piece_cache_.emplace(degree, std::move(piece)).first->second;
}

int64_t PresentedRing::graded_dimension(int64_t degree) const {
    return graded_basis(degree).dimension();
}

RingElem::RingElem(RingPtr ring, const Polynomial& rep)
    : ring_(std::move(ring)) {
    if (!rep.attached() || !rep.ring()->same_as(*ring_->ambient()))
        throw std::invalid_argument("ring element representative from wrong ambient ring");
    rep_ = ring_->normal_form(rep);
}

RingElem RingElem::parse(const RingPtr& ring, std::string_view text) {
    return RingElem(ring, Polynomial::parse(ring->ambient(), text));
}

RingElem RingElem::zero(const RingPtr& ring) {
    return RingElem(ring, Polynomial::zero(ring->ambient()));
}

RingElem RingElem::one(const RingPtr& ring) {
    return RingElem(ring, Polynomial::constant(ring->ambient(), Rational(1)));
}

namespace {
void require_same(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get())
        throw std::invalid_argument("ring elements belong to different rings");
}
}  // namespace

RingElem RingElem::operator+(const RingElem& o) const {
    require_same(ring_, o.ring_);
    return RingElem(ring_, rep_ + o.rep_);
}

RingElem RingElem::operator-(const RingElem& o) const {
    require_same(ring_, o.ring_);
    return RingElem(ring_, rep_ - o.rep_);
}

RingElem RingElem::operator-() const { return RingElem(ring_, -rep_); }

RingElem RingElem::operator*(const RingElem& o) const {
    require_same(ring_, o.ring_);
    return RingElem(ring_, rep_ * o.rep_);
}

RingElem RingElem::operator*(const Rational& c) const { return RingElem(ring_, rep_ * c); }

RingElem RingElem::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    RingElem acc = RingElem::one(ring_);
    RingElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool RingElem::operator==(const RingElem& o) const {
    return ring_.get() == o.ring_.get() && rep_ == o.rep_;
}

RingPtr quotient_by(const RingPtr& S, const RingElem& x) {
    if (x.ring().get() != S.get())
        throw std::invalid_argument("quotient element must live in the ring being divided");
    if (x.is_zero()) throw std::invalid_argument("quotient by zero element");
    if (S->graded() && !x.rep().is_homogeneous())
        throw std::invalid_argument("quotient by inhomogeneous element in graded mode");
    std::vector<Polynomial> rels = S->ideal().generators;
    rels.push_back(x.rep());
    auto base = PresentedRing::make(S->ambient(), std::move(rels), S->graded());
    // make() returns an immutable ring; record quotient bookkeeping on a copy
    // of the control block before publishing.
    auto mut = std::const_pointer_cast<PresentedRing>(base);
    mut->parent_ = S;
    mut->quotient_elem_ = x.rep();
    return base;
}

RingElem project(const RingPtr& R, const RingElem& s) {
    if (!s.ring()->ambient()->same_as(*R->ambient()))
        throw std::invalid_argument("projection across different ambient rings");
    return RingElem(R, s.rep());
}

RingElem lift(const RingPtr& S, const RingElem& r) {
    if (!r.ring()->ambient()->same_as(*S->ambient()))
        throw std::invalid_argument("lift across different ambient rings");
    return RingElem(S, r.rep());
}

IdealPresentation annihilator(const RingPtr& R, const RingElem& a) {
    if (a.is_zero()) throw std::invalid_argument("annihilator of zero");
    IdealPresentation q = ideal_quotient(R->ideal(), a.rep());
    std::vector<Polynomial> reduced;
    for (const Polynomial& g : q.generators) {
        Polynomial nf = R->normal_form(g);
        if (!nf.is_zero()) reduced.push_back(std::move(nf));
    }
    return IdealPresentation::make(R->ambient(), std::move(reduced));
}

std::vector<RingElem> annihilator_elems(const RingPtr& R, const RingElem& a) {
    IdealPresentation ann = annihilator(R, a);
    std::vector<RingElem> out;
    out.reserve(ann.generators.size());
    for (const Polynomial& g : ann.generators) out.emplace_back(R, g);
    return out;
}

bool ideal_contained_mod(const RingPtr& R, const std::vector<Polynomial>& gens,
                         const std::vector<Polynomial>& others) {
    std::vector<Polynomial> all = R->ideal().generators;
    for (const Polynomial& p : others) all.push_back(p);
    GroebnerBasis basis = buchberger(IdealPresentation::make(R->ambient(), std::move(all)));
    return std::all_of(gens.begin(), gens.end(),
                       [&](const Polynomial& p) { return basis.contains(p); });
}

std::string ExactPairReport::summary() const {
    std::ostringstream os;
    os << (ok ? "exact pair" : "not an exact pair");
    if (!product_zero) os << "; x*y != 0";
    if (!ann_x_in_y) os << "; ann(x) not contained in (y)";
    if (!ann_y_in_x) os << "; ann(y) not contained in (x)";
    return os.str();
}

ExactPairReport check_exact_pair(const RingPtr& S, const RingElem& x, const RingElem& y) {
    if (x.is_zero() || y.is_zero())
        throw std::invalid_argument("exact pair check requires nonzero elements");
    ExactPairReport rep;
    // (y) <= ann(x) and (x) <= ann(y) are both the single identity x*y = 0.
    rep.product_zero = (x * y).is_zero();
    rep.ann_x = annihilator(S, x);
    rep.ann_y = annihilator(S, y);
    rep.ann_x_in_y = ideal_contained_mod(S, rep.ann_x.generators, {y.rep()});
    rep.ann_y_in_x = ideal_contained_mod(S, rep.ann_y.generators, {x.rep()});
    rep.ok = rep.product_zero && rep.ann_x_in_y && rep.ann_y_in_x;
    return rep;
}

}  // namespace ezdop
