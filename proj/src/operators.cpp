#include "ezdop/operators.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ezdop/groebner.hpp"

namespace ezdop {

namespace {

void require_quotient_setup(const ComplexPtr& F, const RingPtr& S) {
    const RingPtr& R = F->ring();
    if (!R->parent() || R->parent().get() != S.get() || !R->quotient_element())
        throw std::invalid_argument(
            "lift_complex: complex ring is not presented as a quotient of the given ring");
}

Polynomial random_homogeneous(const RingPtr& S, int64_t degree, std::mt19937_64& rng) {
    if (degree < 0) return Polynomial::zero(S->ambient());
    const GradedPieceBasis& piece = S->graded_basis(degree);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::vector<Term> terms;
    for (const Monomial& m : piece.monomials) {
        int c = coeff(rng);
        if (c != 0) terms.push_back({Rational(c), m});
    }
    return Polynomial::from_terms(S->ambient(), std::move(terms));
}

}  // namespace

LiftedComplex lift_complex(const ComplexPtr& F, const RingPtr& S, LiftPolicy policy,
                           uint64_t seed, const std::map<int, FreeModuleMap>* supplied) {
    require_quotient_setup(F, S);
    const RingPtr& R = F->ring();
    const Polynomial& x = *R->quotient_element();

    LiftedComplex L;
    L.base = F;
    L.over = S;
    L.policy = policy;
    L.seed = seed;
    for (int i = F->lo(); i <= F->hi(); ++i)
        L.modules.emplace(i, GradedFreeModule{S, F->module(i).twists});

    int64_t degx = S->graded() ? x.homogeneous_degree().value_or(0) : 0;
    std::mt19937_64 rng(seed);
    for (const auto& [i, d] : F->diffs()) {
        const GradedFreeModule& src = L.modules.at(i);
        const GradedFreeModule& tgt = L.modules.at(i - 1);
        std::vector<Polynomial> entries(static_cast<size_t>(src.rank()) * tgt.rank(),
                                        Polynomial::zero(S->ambient()));
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c) {
                size_t k = static_cast<size_t>(r) * src.rank() + c;
                switch (policy) {
                    case LiftPolicy::Canonical:
                        entries[k] = d.entry(r, c);
                        break;
                    case LiftPolicy::Randomized: {
                        if (!S->graded())
                            throw std::invalid_argument(
                                "randomized lift needs a graded ring");
                        int64_t noise_deg = d.entry_degree(r, c) - degx;
                        entries[k] = d.entry(r, c) + x * random_homogeneous(S, noise_deg, rng);
                        break;
                    }
                    case LiftPolicy::Supplied: {
                        if (!supplied || !supplied->count(i))
                            throw std::invalid_argument(
                                "supplied lift missing differential " + std::to_string(i));
                        entries[k] = supplied->at(i).entry(r, c);
                        break;
                    }
                }
            }
        FreeModuleMap dt(src, tgt, std::move(entries), -1, 0);
        // Projection identity: every lifted entry reduces back to the
        // original R-entry.
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c)
                if (R->normal_form(dt.entry(r, c)) != d.entry(r, c)) {
                    std::ostringstream os;
                    os << "lift of d_" << i << " entry (" << r << "," << c
                       << ") does not project to the base entry";
                    throw std::invalid_argument(os.str());
                }
        if (S->graded()) {
            std::vector<std::string> bad = dt.check_graded();
            if (!bad.empty())
                throw std::invalid_argument("lift of d_" + std::to_string(i) +
                                            " is not homogeneous: " + bad.front());
        }
        L.dtilde.emplace(i, std::move(dt));
    }
    return L;
}

std::map<int, FreeModuleMap> build_psi(const LiftedComplex& L, const RingElem& x) {
    const RingPtr& S = L.over;
    if (x.ring().get() != S.get())
        throw std::invalid_argument("build_psi: x must live in the lifted ring");
    DivisionContext ctx(S->basis(), x.rep());
    int64_t degx = S->graded() ? x.degree().value() : 0;

    std::map<int, FreeModuleMap> psi;
    for (const auto& [i, di] : L.dtilde) {
        if (!L.dtilde.count(i - 1)) continue;
        FreeModuleMap comp = FreeModuleMap::compose(L.dtilde.at(i - 1), di);
        const GradedFreeModule& src = L.modules.at(i);
        const GradedFreeModule& tgt = L.modules.at(i - 2);
        std::vector<Polynomial> entries(static_cast<size_t>(src.rank()) * tgt.rank(),
                                        Polynomial::zero(S->ambient()));
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c) {
                const Polynomial& rhs = comp.entry(r, c);
                std::optional<DivisionCertificate> cert = ctx.divide(rhs);
                if (!cert) {
                    std::ostringstream os;
                    os << "composite differential entry (" << r << "," << c << ") at index "
                       << i << " = " << rhs.str() << " is not divisible by " << x.str()
                       << " modulo the defining ideal; the input is not a complex over the "
                          "quotient or the pair is not exact";
                    throw std::domain_error(os.str());
                }
                entries[static_cast<size_t>(r) * src.rank() + c] =
                    S->normal_form(cert->quotient);
            }
        FreeModuleMap psi_i(src, tgt, std::move(entries), -2, -degx);
        // Contract: x * psi = dtilde^2 mod I_S, entrywise.
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c)
                if (!S->normal_form(x.rep() * psi_i.entry(r, c) - comp.entry(r, c)).is_zero())
                    throw std::logic_error("build_psi: contract violation after division");
        if (S->graded()) {
            std::vector<std::string> bad = psi_i.check_graded();
            if (!bad.empty())
                throw std::logic_error("build_psi: inhomogeneous result: " + bad.front());
        }
        psi.emplace(i, std::move(psi_i));
    }
    return psi;
}

std::map<int, FreeModuleMap> build_phi(const LiftedComplex& L,
                                       const std::map<int, FreeModuleMap>& psi_tilde,
                                       const RingElem& y) {
    const RingPtr& S = L.over;
    if (y.ring().get() != S.get())
        throw std::invalid_argument("build_phi: y must live in the lifted ring");
    DivisionContext ctx(S->basis(), y.rep());
    int64_t degy = S->graded() ? y.degree().value() : 0;

    std::map<int, FreeModuleMap> phi;
    for (const auto& [i, psi_i] : psi_tilde) {
        if (!psi_tilde.count(i - 1) || !L.dtilde.count(i) || !L.dtilde.count(i - 2)) continue;
        FreeModuleMap lhs = FreeModuleMap::compose(L.dtilde.at(i - 2), psi_i) -
                            FreeModuleMap::compose(psi_tilde.at(i - 1), L.dtilde.at(i));
        const GradedFreeModule& src = L.modules.at(i);
        const GradedFreeModule& tgt = L.modules.at(i - 3);
        std::vector<Polynomial> entries(static_cast<size_t>(src.rank()) * tgt.rank(),
                                        Polynomial::zero(S->ambient()));
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c) {
                const Polynomial& rhs = lhs.entry(r, c);
                std::optional<DivisionCertificate> cert = ctx.divide(rhs);
                if (!cert) {
                    std::ostringstream os;
                    os << "(d psi - psi d) entry (" << r << "," << c << ") at index " << i
                       << " = " << rhs.str() << " is not divisible by " << y.str()
                       << " modulo the defining ideal; psi is broken or the pair is not exact";
                    throw std::domain_error(os.str());
                }
                entries[static_cast<size_t>(r) * src.rank() + c] =
                    S->normal_form(cert->quotient);
            }
        FreeModuleMap phi_i(src, tgt, std::move(entries), -3, psi_i.ideg() - degy);
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c)
                if (!S->normal_form(y.rep() * phi_i.entry(r, c) - lhs.entry(r, c)).is_zero())
                    throw std::logic_error("build_phi: contract violation after division");
        phi.emplace(i, std::move(phi_i));
    }
    return phi;
}

namespace {

// Number of indices at which the chain-map equation for a component family
// of homological degree m can be posed on the base complex.
int evaluable_equations(const ComplexPtr& F, const std::map<int, FreeModuleMap>& comps,
                        int m) {
    int n = 0;
    for (const auto& [i, c] : comps)
        if (comps.count(i - 1) && F->has_diff(i) && F->has_diff(i + m)) ++n;
    return n;
}

}  // namespace

OperatorBundle reduce_operators(LiftedComplex L, std::map<int, FreeModuleMap> psi_tilde,
                                std::map<int, FreeModuleMap> phi_tilde, const RingElem& x,
                                const RingElem& y, const std::vector<RingElem>& zs) {
    OperatorBundle B;
    const ComplexPtr& F = L.base;
    const RingPtr& R = F->ring();
    B.x = x;
    B.y = y;

    int64_t degx = R->graded() ? x.degree().value() : 0;
    int64_t degy = R->graded() ? y.degree().value() : 0;

    for (const auto& [i, p] : psi_tilde) {
        std::vector<Polynomial> entries;
        entries.reserve(static_cast<size_t>(p.source().rank()) * p.target().rank());
        for (int r = 0; r < p.target().rank(); ++r)
            for (int c = 0; c < p.source().rank(); ++c) entries.push_back(p.entry(r, c));
        B.psi_reduced.emplace(i, FreeModuleMap(F->module(i), F->module(i - 2),
                                               std::move(entries), -2, -degx));
    }

    const RingElem yR = project(R, y);
    for (const RingElem& z : zs) {
        if (z.ring().get() != R.get())
            throw std::invalid_argument("reduce_operators: z must live in the quotient ring");
        if (!(z * yR).is_zero())
            throw std::invalid_argument("reduce_operators: z = " + z.str() +
                                        " does not annihilate y in the quotient");
        std::map<int, FreeModuleMap> comps;
        for (const auto& [i, p] : B.psi_reduced) comps.emplace(i, p.scale(z));
        int64_t ideg = z.is_zero() ? -degx : (z.degree().value_or(0) - degx);
        ComplexMap psi_z(F, F, -2, ideg, std::move(comps));
        if (evaluable_equations(F, psi_z.components(), -2) > 0) {
            ChainMapCheck chk = is_chain_map(psi_z);
            if (!chk.ok)
                throw std::logic_error("reduce_operators: psi_z fails the chain map identity: " +
                                       chk.detail);
        } else {
            B.notes.push_back("window admits no chain-map equation for psi_z; identity vacuous");
        }
        B.psi_z.emplace_back(z, std::move(psi_z));
    }

    if (!phi_tilde.empty()) {
        std::map<int, FreeModuleMap> comps;
        for (const auto& [i, p] : phi_tilde) {
            std::vector<Polynomial> entries;
            entries.reserve(static_cast<size_t>(p.source().rank()) * p.target().rank());
            for (int r = 0; r < p.target().rank(); ++r)
                for (int c = 0; c < p.source().rank(); ++c) entries.push_back(p.entry(r, c));
            comps.emplace(i, FreeModuleMap(F->module(i), F->module(i - 3), std::move(entries),
                                           -3, -(degx + degy)));
        }
        ComplexMap phi(F, F, -3, -(degx + degy), std::move(comps));
        if (evaluable_equations(F, phi.components(), -3) > 0) {
            ChainMapCheck chk = is_chain_map(phi);
            if (!chk.ok)
                throw std::logic_error("reduce_operators: phi fails the chain map identity: " +
                                       chk.detail);
        } else {
            B.notes.push_back("window admits no chain-map equation for phi; identity vacuous");
        }
        B.phi = std::move(phi);
    }

    B.psi_tilde = std::move(psi_tilde);
    B.phi_tilde = std::move(phi_tilde);
    B.lifted = std::move(L);
    return B;
}

OperatorBundle operator_pipeline(const ComplexPtr& F, const RingPtr& S, const RingElem& x,
                                 const RingElem& y, const std::vector<RingElem>& zs,
                                 LiftPolicy policy, uint64_t seed) {
    ExactPairReport pair = check_exact_pair(S, x, y);
    if (!pair.ok)
        throw std::invalid_argument("operator_pipeline: (x, y) is not an exact pair: " +
                                    pair.summary());
    LiftedComplex L = lift_complex(F, S, policy, seed);
    std::map<int, FreeModuleMap> psi = build_psi(L, x);
    std::map<int, FreeModuleMap> phi = build_phi(L, psi, y);
    OperatorBundle B = reduce_operators(std::move(L), std::move(psi), std::move(phi), x, y, zs);

    const RingPtr& R = F->ring();
    IdealPresentation ann_y = annihilator(R, project(R, y));
    if (ann_y.is_zero_ideal())
        B.notes.push_back(
            "ann_R(y) = 0: every psi_z vanishes and only phi carries information");
    return B;
}

}  // namespace ezdop
