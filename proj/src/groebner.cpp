#include "ezdop/groebner.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ezdop {

IdealPresentation IdealPresentation::make(PolyRingPtr ring, std::vector<Polynomial> gens) {
    IdealPresentation out;
    out.ring = std::move(ring);
    for (Polynomial& g : gens) {
        if (!g.attached() || g.is_zero()) continue;
        if (!g.ring()->same_as(*out.ring))
            throw std::invalid_argument("ideal generator from a different ambient ring");
        bool dup = false;
        for (const Polynomial& h : out.generators)
            if (h == g) {
                dup = true;
                break;
            }
        if (!dup) out.generators.push_back(std::move(g));
    }
    return out;
}

namespace {

// Full reduction of p by the list of (nonzero) divisors. Positions above the
// scan index stay irreducible, so the scan never backtracks. When tracking,
// cof[i] accumulates the multiplier applied to divisors[i].
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& divisors,
                       std::vector<Polynomial>* cof) {
    Polynomial work = p;
    size_t idx = 0;
    while (idx < work.terms().size()) {
        const Term& t = work.terms()[idx];
        int hit = -1;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (divisors[i].leading().mono.divides(t.mono)) {
                hit = static_cast<int>(i);
                break;
            }
        }
        if (hit < 0) {
            ++idx;
            continue;
        }
        const Polynomial& d = divisors[hit];
        Rational c = t.coeff / d.leading().coeff;
        Monomial m = t.mono / d.leading().mono;
        work = work - d.mul_term(c, m);
        if (cof) {
            (*cof)[hit] = (*cof)[hit] + Polynomial::monomial(p.ring(), c, m);
        }
    }
    return work;
}

struct Entry {
    Polynomial p;
    std::vector<Polynomial> cof;  // over the original generators
};

struct Pair {
    int i, j;
    Monomial lcm;
};

// Gebauer-Moeller pair update: installs pairs of the new element h against
// basis indices in `alive`, pruning with Buchberger's criteria, and prunes
// superseded old pairs.
void update_pairs(std::vector<Pair>& pairs, const std::vector<Entry>& g,
                  const std::vector<int>& alive, int h) {
    const Monomial& lmh = g[h].p.leading().mono;
    struct Cand {
        int other;
        Monomial lcm;
        bool coprime;
    };
    std::vector<Cand> c;
    c.reserve(alive.size());
    for (int k : alive) {
        const Monomial& lmk = g[k].p.leading().mono;
        c.push_back({k, Monomial::lcm(lmh, lmk), Monomial::coprime(lmh, lmk)});
    }
    std::vector<Cand> d;
    for (size_t a = 0; a < c.size(); ++a) {
        bool keep = c[a].coprime;
        if (!keep) {
            bool dominated = false;
            for (size_t b = a + 1; b < c.size() && !dominated; ++b)
                if (c[b].lcm.divides(c[a].lcm)) dominated = true;
            for (const Cand& k : d)
                if (dominated) break;
                else if (k.lcm.divides(c[a].lcm)) dominated = true;
            keep = !dominated;
        }
        if (keep) d.push_back(c[a]);
    }
    // Prune old pairs whose lcm the new leading monomial strictly refines.
    std::erase_if(pairs, [&](const Pair& pr) {
        if (!lmh.divides(pr.lcm)) return false;
        const Monomial& lmi = g[pr.i].p.leading().mono;
        const Monomial& lmj = g[pr.j].p.leading().mono;
        if (Monomial::lcm(lmi, lmh) == pr.lcm) return false;
        if (Monomial::lcm(lmj, lmh) == pr.lcm) return false;
        return true;
    });
    for (const Cand& k : d) {
        if (k.coprime) continue;  // Buchberger's first criterion
        pairs.push_back({std::min(k.other, h), std::max(k.other, h), k.lcm});
    }
}

}  // namespace

GroebnerBasis buchberger_impl(const IdealPresentation& ideal, bool randomized, uint64_t seed) {
    GroebnerBasis out;
    out.ideal_ = ideal;
    if (ideal.generators.empty()) return out;
    const PolyRingPtr& ring = ideal.ring;
    const TermOrder& ord = ring->order();
    const size_t ngens = ideal.generators.size();

    std::vector<Entry> g;
    std::vector<int> alive;
    std::vector<Pair> pairs;
    std::mt19937_64 rng(seed);

    auto push_element = [&](Polynomial p, std::vector<Polynomial> cof) {
        int h = static_cast<int>(g.size());
        g.push_back({std::move(p), std::move(cof)});
        update_pairs(pairs, g, alive, h);
        alive.push_back(h);
    };

    for (size_t j = 0; j < ngens; ++j) {
        std::vector<Polynomial> cof(ngens, Polynomial::zero(ring));
        cof[j] = Polynomial::constant(ring, Rational(1));
        push_element(ideal.generators[j], std::move(cof));
    }

    auto basis_polys = [&]() {
        std::vector<Polynomial> ps;
        ps.reserve(alive.size());
        for (int k : alive) ps.push_back(g[k].p);
        return ps;
    };

    while (!pairs.empty()) {
        size_t pick = 0;
        if (randomized) {
            pick = std::uniform_int_distribution<size_t>(0, pairs.size() - 1)(rng);
        } else {
            // Normal strategy: minimal lcm degree, then term order, then indices.
            for (size_t k = 1; k < pairs.size(); ++k) {
                const Pair &a = pairs[k], &b = pairs[pick];
                int64_t da = a.lcm.total_degree(), db = b.lcm.total_degree();
                bool better;
                if (da != db) {
                    better = da < db;
                } else {
                    Ordering c = ord.compare(a.lcm, b.lcm);
                    if (c != Ordering::EQ) {
                        better = (c == Ordering::LT);
                    } else {
                        better = std::pair(a.i, a.j) < std::pair(b.i, b.j);
                    }
                }
                if (better) pick = k;
            }
        }
        Pair pr = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<long>(pick));

        const Entry &ei = g[pr.i], &ej = g[pr.j];
        Rational ci = 1 / ei.p.leading().coeff;
        Rational cj = 1 / ej.p.leading().coeff;
        Monomial mi = pr.lcm / ei.p.leading().mono;
        Monomial mj = pr.lcm / ej.p.leading().mono;
        Polynomial s = ei.p.mul_term(ci, mi) - ej.p.mul_term(cj, mj);

        std::vector<Polynomial> divisors = basis_polys();
        std::vector<Polynomial> q(divisors.size(), Polynomial::zero(ring));
        Polynomial r = reduce_full(s, divisors, &q);
        if (r.is_zero()) continue;

        std::vector<Polynomial> cof(ngens, Polynomial::zero(ring));
        for (size_t j = 0; j < ngens; ++j) {
            cof[j] = ei.cof[j].mul_term(ci, mi) - ej.cof[j].mul_term(cj, mj);
            for (size_t k = 0; k < alive.size(); ++k)
                if (!q[k].is_zero()) cof[j] = cof[j] - q[k] * g[alive[k]].cof[j];
        }
        push_element(std::move(r), std::move(cof));
    }

    // Minimal basis: ascending leading monomials, drop elements whose lead is
    // divisible by the lead of a kept one.
    std::vector<int> order_idx = alive;
    std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        Ordering c = ord.compare(g[a].p.leading().mono, g[b].p.leading().mono);
        if (c != Ordering::EQ) return c == Ordering::LT;
        return a < b;
    });
    std::vector<int> kept;
    for (int k : order_idx) {
        bool redundant = false;
        for (int m : kept)
            if (g[m].p.leading().mono.divides(g[k].p.leading().mono)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(k);
    }

    // Tail-reduce each kept element against the others, then scale monic.
    std::vector<Entry> reduced;
    reduced.reserve(kept.size());
    for (size_t a = 0; a < kept.size(); ++a) {
        std::vector<Polynomial> others;
        std::vector<size_t> other_pos;
        for (size_t b = 0; b < kept.size(); ++b)
            if (b != a) {
                others.push_back(b < reduced.size() && b < a ? reduced[b].p : g[kept[b]].p);
                other_pos.push_back(b);
            }
        std::vector<Polynomial> q(others.size(), Polynomial::zero(ring));
        Polynomial r = reduce_full(g[kept[a]].p, others, &q);
        std::vector<Polynomial> cof(ngens, Polynomial::zero(ring));
        for (size_t j = 0; j < ngens; ++j) {
            cof[j] = g[kept[a]].cof[j];
            for (size_t k = 0; k < others.size(); ++k) {
                size_t b = other_pos[k];
                const std::vector<Polynomial>& ocof =
                    (b < reduced.size() && b < a) ? reduced[b].cof : g[kept[b]].cof;
                if (!q[k].is_zero()) cof[j] = cof[j] - q[k] * ocof[j];
            }
        }
        Rational inv = 1 / r.leading().coeff;
        r = r * inv;
        for (Polynomial& c : cof) c = c * inv;
        reduced.push_back({std::move(r), std::move(cof)});
    }

    for (Entry& e : reduced) {
        out.elements_.push_back(std::move(e.p));
        out.cofactors_.push_back(std::move(e.cof));
    }
    return out;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, SelectionStrategy strategy,
                         uint64_t seed) {
    return buchberger_impl(ideal, strategy == SelectionStrategy::Randomized, seed);
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
    if (!p.attached()) throw std::invalid_argument("normal form of detached polynomial");
    if (!p.ring()->same_as(*ideal_.ring))
        throw std::invalid_argument("normal form: incompatible ambient ring");
    if (elements_.empty()) return p;
    return reduce_full(p, elements_, nullptr);
}

NormalFormResult GroebnerBasis::normal_form_tracked(const Polynomial& p) const {
    if (!p.attached() || !p.ring()->same_as(*ideal_.ring))
        throw std::invalid_argument("normal form: incompatible ambient ring");
    NormalFormResult out;
    out.basis_cofactors.assign(elements_.size(), Polynomial::zero(ideal_.ring));
    out.remainder = elements_.empty() ? p : reduce_full(p, elements_, &out.basis_cofactors);
    return out;
}

std::vector<Polynomial> GroebnerBasis::cofactors_over_generators(
    const NormalFormResult& nf) const {
    std::vector<Polynomial> c(ideal_.generators.size(), Polynomial::zero(ideal_.ring));
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (nf.basis_cofactors[i].is_zero()) continue;
        for (size_t j = 0; j < c.size(); ++j)
            if (!cofactors_[i][j].is_zero())
                c[j] = c[j] + nf.basis_cofactors[i] * cofactors_[i][j];
    }
    return c;
}

bool GroebnerBasis::is_standard_monomial(const Monomial& m) const {
    for (const Polynomial& e : elements_)
        if (e.leading().mono.divides(m)) return false;
    return true;
}

MembershipCertificate ideal_member(const Polynomial& p, const GroebnerBasis& basis) {
    NormalFormResult nf = basis.normal_form_tracked(p);
    MembershipCertificate out;
    out.member = nf.remainder.is_zero();
    if (out.member) out.generator_cofactors = basis.cofactors_over_generators(nf);
    return out;
}

std::optional<Polynomial> exact_divide_free(const Polynomial& p, const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial r = p;
    Polynomial q = Polynomial::zero(p.ring());
    while (!r.is_zero()) {
        if (!a.leading().mono.divides(r.leading().mono)) return std::nullopt;
        Rational c = r.leading().coeff / a.leading().coeff;
        Monomial m = r.leading().mono / a.leading().mono;
        q = q + Polynomial::monomial(p.ring(), c, m);
        r = r - a.mul_term(c, m);
    }
    return q;
}

IdealPresentation ideal_quotient(const IdealPresentation& ideal, const Polynomial& a) {
    if (a.is_zero()) throw std::invalid_argument("ideal quotient by zero");
    if (!a.ring()->same_as(*ideal.ring))
        throw std::invalid_argument("ideal quotient: incompatible ring");
    if (ideal.is_zero_ideal()) return IdealPresentation::make(ideal.ring, {});

    // Fresh tag variable, eliminated by a block order:
    // (I : a) = (1/a) * (I intersect (a)),  I intersect (a) = (tag*I + (1-tag)*(a)) cap P.
    std::string tag = "_e";
    while (ideal.ring->var_index(tag) >= 0) tag += "_";
    PolyRingPtr ext = ideal.ring->prepend_variable(tag, 1, TermOrder::elimination_block(1));

    auto extend = [&](const Polynomial& p) {
        std::vector<Term> ts;
        for (const Term& t : p.terms()) {
            std::vector<int32_t> e;
            e.reserve(ext->nvars());
            e.push_back(0);
            e.insert(e.end(), t.mono.exponents().begin(), t.mono.exponents().end());
            ts.push_back({t.coeff, Monomial(std::move(e))});
        }
        return Polynomial::from_terms(ext, std::move(ts));
    };

    Polynomial tagvar = Polynomial::variable(ext, 0);
    Polynomial one = Polynomial::constant(ext, Rational(1));
    std::vector<Polynomial> gens;
    for (const Polynomial& gp : ideal.generators) gens.push_back(tagvar * extend(gp));
    gens.push_back((one - tagvar) * extend(a));

    GroebnerBasis basis = buchberger(IdealPresentation::make(ext, std::move(gens)));

    std::vector<Polynomial> quotients;
    for (const Polynomial& e : basis.elements()) {
        bool has_tag = false;
        for (const Term& t : e.terms())
            if (t.mono[0] != 0) {
                has_tag = true;
                break;
            }
        if (has_tag) continue;
        std::vector<Term> ts;
        for (const Term& t : e.terms()) {
            std::vector<int32_t> ev(t.mono.exponents().begin() + 1, t.mono.exponents().end());
            ts.push_back({t.coeff, Monomial(std::move(ev))});
        }
        Polynomial restricted = Polynomial::from_terms(ideal.ring, std::move(ts));
        std::optional<Polynomial> q = exact_divide_free(restricted, a);
        if (!q) throw std::logic_error("ideal_quotient: intersection element not a multiple");
        quotients.push_back(std::move(*q));
    }
    return IdealPresentation::make(ideal.ring, std::move(quotients));
}

DivisionContext::DivisionContext(const GroebnerBasis& ideal_basis, Polynomial a)
    : divisor_(std::move(a)), n_ideal_gens_(ideal_basis.ideal().generators.size()) {
    if (divisor_.is_zero()) throw std::invalid_argument("certified division by zero");
    if (!divisor_.ring()->same_as(*ideal_basis.ring()))
        throw std::invalid_argument("certified division: incompatible ring");
    if (ideal_basis.contains(divisor_))
        throw std::invalid_argument("certified division: divisor lies in the ideal");
    std::vector<Polynomial> gens;
    gens.push_back(divisor_);
    for (const Polynomial& gp : ideal_basis.ideal().generators) gens.push_back(gp);
    IdealPresentation ext = IdealPresentation::make(ideal_basis.ring(), std::move(gens));
    if (ext.generators.size() != n_ideal_gens_ + 1)
        throw std::logic_error("certified division: generator list collapsed");
    extended_ = buchberger(ext);
}

std::optional<DivisionCertificate> DivisionContext::divide(const Polynomial& r) const {
    NormalFormResult nf = extended_.normal_form_tracked(r);
    if (!nf.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> c = extended_.cofactors_over_generators(nf);
    DivisionCertificate cert;
    cert.quotient = c[0];
    cert.ideal_witness.assign(c.begin() + 1, c.end());
    // Contract check: r == a*q + sum w_j g_j, exactly.
    Polynomial check = r - divisor_ * cert.quotient;
    for (size_t j = 0; j < cert.ideal_witness.size(); ++j)
        check = check - cert.ideal_witness[j] * extended_.ideal().generators[j + 1];
    if (!check.is_zero()) throw std::logic_error("certified division: certificate failed");
    return cert;
}

std::optional<DivisionCertificate> certified_divide(const Polynomial& r, const Polynomial& a,
                                                    const IdealPresentation& ideal) {
    DivisionContext ctx(buchberger(ideal), a);
    return ctx.divide(r);
}

}  // namespace ezdop
