#include "ezdop/homotopy.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ezdop {

namespace {

// Standard monomials of degree <= bound, ring order within each degree.
std::vector<Monomial> standard_monomials_up_to(const RingPtr& R, int64_t bound) {
    std::vector<Monomial> out;
    for (int64_t d = 0; d <= bound; ++d) {
        for (const Monomial& m : R->ambient()->monomials_of_degree(d))
            if (R->basis().is_standard_monomial(m)) out.push_back(m);
    }
    return out;
}

struct Assembler {
    // Row registry keyed by (equation index, target row, source col, monomial).
    std::map<std::tuple<int, int, int, Monomial>, int> row_ids;
    std::vector<SystemRowLabel> row_labels;
    std::vector<std::map<int, Rational>> rows;  // sparse row -> (col -> value)
    std::vector<Rational> rhs;

    int row(int eq, int tr, int sc, const Monomial& m) {
        auto key = std::make_tuple(eq, tr, sc, m);
        auto it = row_ids.find(key);
        if (it != row_ids.end()) return it->second;
        int id = static_cast<int>(row_labels.size());
        row_ids.emplace(std::move(key), id);
        row_labels.push_back({eq, tr, sc, m});
        rows.emplace_back();
        rhs.emplace_back(0);
        return id;
    }

    void add(int eq, int tr, int sc, const Polynomial& value, int col) {
        for (const Term& t : value.terms()) rows[row(eq, tr, sc, t.mono)][col] += t.coeff;
    }

    void add_rhs(int eq, int tr, int sc, const Polynomial& value) {
        for (const Term& t : value.terms()) {
            int id = row(eq, tr, sc, t.mono);
            rhs[id] += t.coeff;
        }
    }
};

}  // namespace

HomotopyOutcome null_homotopy(const HomotopyProblem& p) {
    const ComplexMap& g = p.g;
    const ComplexPtr& F = g.source();
    const ComplexPtr& G = g.target();
    const RingPtr& R = F->ring();
    const int m = g.hdeg();
    const bool graded = R->graded() && !p.ungraded_bound.has_value();
    if (!R->graded() && !p.ungraded_bound)
        throw std::invalid_argument("null_homotopy on an ungraded ring needs a degree bound");
    if (graded) {
        for (const auto& [i, c] : g.components()) {
            std::vector<std::string> bad = c.check_graded();
            if (!bad.empty())
                throw std::invalid_argument("null_homotopy: g is not homogeneous: " +
                                            bad.front());
        }
    }
    if (p.check_chain_map) {
        try {
            ChainMapCheck chk = is_chain_map(g);
            if (!chk.ok)
                throw std::invalid_argument("null_homotopy: g is not a chain map: " + chk.detail);
        } catch (const std::invalid_argument& e) {
            // A window too small for any chain equation is acceptable here;
            // re-throw genuine failures.
            if (std::string(e.what()).find("window too small") == std::string::npos) throw;
        }
    }

    // Equation indices: all participants must exist.
    std::vector<int> equations;
    for (int i = p.window_lo; i <= p.window_hi; ++i) {
        if (!g.has_component(i)) continue;
        if (!F->has_module(i) || !F->has_module(i - 1)) continue;
        if (!G->has_module(i + m) || !G->has_module(i + m + 1)) continue;
        if (!F->has_diff(i) || !G->has_diff(i + m + 1)) continue;
        equations.push_back(i);
    }
    if (equations.empty())
        throw std::invalid_argument("null_homotopy: window too small to pose any equation");

    // Unknown theta components.
    std::vector<int> theta_indices;
    for (int i : equations) {
        for (int j : {i - 1, i}) {
            if (std::find(theta_indices.begin(), theta_indices.end(), j) == theta_indices.end())
                theta_indices.push_back(j);
        }
    }
    std::sort(theta_indices.begin(), theta_indices.end());

    std::vector<Monomial> bounded_monos;
    if (!graded) bounded_monos = standard_monomials_up_to(R, *p.ungraded_bound);

    // layout[j][r][c] = list of (monomial, unknown id)
    std::map<int, std::vector<std::vector<std::vector<std::pair<Monomial, int>>>>> layout;
    std::vector<SystemColLabel> col_labels;
    for (int j : theta_indices) {
        const GradedFreeModule& src = F->module(j);
        const GradedFreeModule& tgt = G->module(j + m + 1);
        auto& block = layout[j];
        block.assign(tgt.rank(), std::vector<std::vector<std::pair<Monomial, int>>>(src.rank()));
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c) {
                if (graded) {
                    int64_t delta = src.gen_degree(c) + g.ideg() - tgt.gen_degree(r);
                    if (delta < 0) continue;
                    for (const Monomial& mono : R->graded_basis(delta).monomials) {
                        int id = static_cast<int>(col_labels.size());
                        col_labels.push_back({j, r, c, mono});
                        block[r][c].emplace_back(mono, id);
                    }
                } else {
                    for (const Monomial& mono : bounded_monos) {
                        int id = static_cast<int>(col_labels.size());
                        col_labels.push_back({j, r, c, mono});
                        block[r][c].emplace_back(mono, id);
                    }
                }
            }
    }

    // D(theta)_i = d^G_{i+m+1} theta_i + sign * theta_{i-1} d^F_i.
    const Rational sign = [&] {
        bool minus = (p.convention == HomotopyConvention::HomDifferential);
        int parity = ((m + 1) % 2 + 2) % 2;  // (-1)^{m+1}
        Rational s = (parity == 0) ? 1 : -1;
        return minus ? -s : s;
    }();

    Assembler sys;
    for (int i : equations) {
        const FreeModuleMap& dG = G->diff(i + m + 1);
        const FreeModuleMap& dF = F->diff(i);
        const FreeModuleMap& gi = g.component(i);
        const GradedFreeModule& tgt = G->module(i + m);
        const GradedFreeModule& src = F->module(i);
        const auto& theta_i = layout.at(i);
        const auto& theta_prev = layout.at(i - 1);
        for (int rho = 0; rho < tgt.rank(); ++rho) {
            for (int gam = 0; gam < src.rank(); ++gam) {
                for (int r = 0; r < dG.source().rank(); ++r) {
                    const Polynomial& dval = dG.entry(rho, r);
                    if (dval.is_zero()) continue;
                    for (const auto& [mono, id] : theta_i[r][gam])
                        sys.add(i, rho, gam, R->normal_form(dval.mul_term(Rational(1), mono)),
                                id);
                }
                for (int c = 0; c < dF.target().rank(); ++c) {
                    const Polynomial& dval = dF.entry(c, gam);
                    if (dval.is_zero()) continue;
                    for (const auto& [mono, id] : theta_prev[rho][c])
                        sys.add(i, rho, gam,
                                R->normal_form(dval.mul_term(sign, mono)), id);
                }
                sys.add_rhs(i, rho, gam, gi.entry(rho, gam));
            }
        }
    }

    linalg::QMat A(static_cast<int>(sys.rows.size()), static_cast<int>(col_labels.size()));
    for (size_t r = 0; r < sys.rows.size(); ++r)
        for (const auto& [c, v] : sys.rows[r]) A.at(static_cast<int>(r), c) = v;
    linalg::QVec b = sys.rhs;

    linalg::LinearSolve solve = linalg::solve_with_certificate(A, b);
    if (!solve.feasible) {
        InfeasibilityCertificate cert;
        cert.system = std::move(A);
        cert.rhs = std::move(b);
        cert.witness = std::move(solve.witness);
        cert.row_labels = std::move(sys.row_labels);
        cert.col_labels = std::move(col_labels);
        cert.ambient = R->ambient();
        cert.bounded_only = !graded;
        // Witness identities, re-checked exactly.
        for (int c = 0; c < cert.system.cols(); ++c) {
            Rational acc(0);
            for (int r = 0; r < cert.system.rows(); ++r)
                if (cert.witness[r] != 0 && cert.system.at(r, c) != 0)
                    acc += cert.witness[r] * cert.system.at(r, c);
            if (acc != 0) throw std::logic_error("infeasibility witness fails w*A = 0");
        }
        Rational pairing(0);
        for (int r = 0; r < cert.system.rows(); ++r)
            if (cert.witness[r] != 0 && cert.rhs[r] != 0) pairing += cert.witness[r] * cert.rhs[r];
        if (pairing == 0) throw std::logic_error("infeasibility witness pairs to zero");
        return cert;
    }

    // Build theta and re-verify the residual exactly at the polynomial level.
    std::map<int, FreeModuleMap> comps;
    for (int j : theta_indices) {
        const GradedFreeModule& src = F->module(j);
        const GradedFreeModule& tgt = G->module(j + m + 1);
        std::vector<Polynomial> entries(static_cast<size_t>(src.rank()) * tgt.rank(),
                                        Polynomial::zero(R->ambient()));
        const auto& block = layout.at(j);
        for (int r = 0; r < tgt.rank(); ++r)
            for (int c = 0; c < src.rank(); ++c) {
                std::vector<Term> terms;
                for (const auto& [mono, id] : block[r][c])
                    if (solve.solution[id] != 0) terms.push_back({solve.solution[id], mono});
                entries[static_cast<size_t>(r) * src.rank() + c] =
                    Polynomial::from_terms(R->ambient(), std::move(terms));
            }
        comps.emplace(j, FreeModuleMap(src, tgt, std::move(entries), m + 1, g.ideg()));
    }
    HomotopyCertificate cert;
    cert.theta = ComplexMap(F, G, m + 1, g.ideg(), std::move(comps));
    cert.equations = static_cast<int>(equations.size());
    for (int i : equations) {
        FreeModuleMap residual =
            FreeModuleMap::compose(G->diff(i + m + 1), cert.theta.component(i)) +
            FreeModuleMap::compose(cert.theta.component(i - 1), F->diff(i)).scale(sign) -
            g.component(i);
        if (!residual.is_zero())
            throw std::logic_error("homotopy certificate has nonzero residual");
    }
    return cert;
}

HomotopyOutcome homotopic(const ComplexMap& g1, const ComplexMap& g2, int window_lo,
                          int window_hi) {
    if (g1.hdeg() != g2.hdeg() || g1.ideg() != g2.ideg())
        throw std::invalid_argument("homotopic: homological or internal degree mismatch");
    HomotopyProblem p;
    p.g = g1 - g2;
    p.window_lo = window_lo;
    p.window_hi = window_hi;
    return null_homotopy(p);
}

NaturalityReport check_naturality(const ComplexMap& f, const OperatorBundle& bundle_src,
                                  const OperatorBundle& bundle_tgt, int window_lo,
                                  int window_hi) {
    ChainMapCheck fc = is_chain_map(f);
    if (!fc.ok) throw std::invalid_argument("check_naturality: f is not a chain map");
    const int k = f.hdeg();
    NaturalityReport report;

    for (const auto& [z_src, psi_src] : bundle_src.psi_z) {
        for (const auto& [z_tgt, psi_tgt] : bundle_tgt.psi_z) {
            if (!(z_src == z_tgt)) continue;
            ComplexMap lhs = ComplexMap::compose(psi_tgt, f);
            ComplexMap rhs = ComplexMap::compose(f, psi_src);
            NaturalityCheckItem item;
            item.what = "psi_z naturality, z = " + z_src.str();
            item.outcome = homotopic(lhs, rhs, window_lo, window_hi);
            item.homotopic = homotopy_found(item.outcome);
            report.ok = report.ok && item.homotopic;
            report.items.push_back(std::move(item));
        }
    }

    if (bundle_src.phi && bundle_tgt.phi) {
        ComplexMap lhs = ComplexMap::compose(*bundle_tgt.phi, f);
        ComplexMap rhs = ComplexMap::compose(f, *bundle_src.phi)
                             .scale(Rational(k % 2 == 0 ? 1 : -1));
        NaturalityCheckItem item;
        item.what = "phi naturality";
        item.outcome = homotopic(lhs, rhs, window_lo, window_hi);
        item.homotopic = homotopy_found(item.outcome);
        report.ok = report.ok && item.homotopic;
        report.items.push_back(std::move(item));
    }
    return report;
}

ExtClassResult ext_class_nonzero(const ComplexMap& g, int window_lo, int window_hi) {
    HomotopyProblem p;
    p.g = g;
    p.window_lo = window_lo;
    p.window_hi = window_hi;
    ExtClassResult result;
    result.outcome = null_homotopy(p);
    result.nonzero = !homotopy_found(result.outcome);
    return result;
}

}  // namespace ezdop
