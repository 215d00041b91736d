#pragma once

// Shared test fixtures: small complexes with long windows, used to exercise
// operator identities that need more homological room than a resolution
// window affords.

#include "ezdop/operators.hpp"
#include "ezdop/worked_example.hpp"

namespace ezdop::fixtures {

// Periodic rank-one complex ... -> R(t_i) --[a]--> R(t_{i-1}) --[b]--> ...
// alternating two elements with a*b = 0 (so d^2 = 0), window [0, hi].
// d_i has entry a for odd i and b for even i.
inline ComplexPtr periodic_complex(const RingPtr& R, const RingElem& a, const RingElem& b,
                                   int hi) {
    if (!(a * b).is_zero()) throw std::invalid_argument("periodic complex needs a*b = 0");
    int64_t da = a.degree().value_or(0);
    int64_t db = b.degree().value_or(0);
    std::vector<GradedFreeModule> modules;
    std::vector<int> gen_degree(static_cast<size_t>(hi) + 1, 0);
    for (int i = 1; i <= hi; ++i)
        gen_degree[static_cast<size_t>(i)] =
            gen_degree[static_cast<size_t>(i - 1)] + static_cast<int>(i % 2 == 1 ? da : db);
    for (int i = 0; i <= hi; ++i)
        modules.push_back(GradedFreeModule{R, {-gen_degree[static_cast<size_t>(i)]}});
    std::map<int, FreeModuleMap> diffs;
    for (int i = 1; i <= hi; ++i) {
        const RingElem& e = (i % 2 == 1) ? a : b;
        diffs.emplace(i, FreeModuleMap(modules[static_cast<size_t>(i)],
                                       modules[static_cast<size_t>(i - 1)], {e.rep()}, -1, 0));
    }
    return GradedComplex::create(R, 0, std::move(modules), std::move(diffs));
}

// The worked example's quotient with a periodic complex alternating t and a
// random annihilating partner u = x + alpha*z + beta*w (t*u = 0 in R).
struct PeriodicWorked {
    WorkedExample ex;
    ComplexPtr C;
    RingElem t, u;
};

inline PeriodicWorked periodic_worked(int hi, int alpha, int beta) {
    PeriodicWorked out{make_worked_example(), nullptr, RingElem(), RingElem()};
    out.t = out.ex.t;
    std::string u = "x";
    if (alpha != 0)
        u += (alpha > 0 ? "+" : "-") + std::to_string(std::abs(alpha)) + "*z";
    if (beta != 0)
        u += (beta > 0 ? "+" : "-") + std::to_string(std::abs(beta)) + "*w";
    out.u = RingElem::parse(out.ex.R, u);
    out.C = periodic_complex(out.ex.R, out.t, out.u, hi);
    return out;
}

// Two-variable model: A = Q[u,v]/(uv) with the pair (u, v); the quotient is
// a polynomial ring in v. Complexes over it alternate [v^a] and [0].
struct TwoVarModel {
    RingPtr A;        // Q[u,v]/(uv)
    RingPtr B;        // A/(u), isomorphic to Q[v]
    RingElem u, v;    // in A
    ComplexPtr C;     // over B
};

inline TwoVarModel two_var_model(int hi, int power = 1) {
    TwoVarModel m;
    m.A = PresentedRing::make({"u", "v"}, {1, 1}, {"u*v"});
    m.u = RingElem::parse(m.A, "u");
    m.v = RingElem::parse(m.A, "v");
    m.B = quotient_by(m.A, m.u);
    RingElem vB = RingElem::parse(m.B, "v").pow(power);
    m.C = periodic_complex(m.B, vB, RingElem::zero(m.B), hi);
    return m;
}

}  // namespace ezdop::fixtures
