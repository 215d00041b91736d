#include "ezdop/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ezdop {

namespace {

// Incremental row-reduced span of Q-vectors; insert returns true when the
// vector enlarges the span.
class SpanBuilder {
public:
    explicit SpanBuilder(size_t dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    bool insert(linalg::QVec v) {
        if (v.size() != dim_) throw std::invalid_argument("span: dimension mismatch");
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational& lead = v[static_cast<size_t>(pivots_[r])];
            if (lead == 0) continue;
            Rational f = lead;  // rows are normalized to pivot 1
            for (size_t k = 0; k < dim_; ++k)
                if (rows_[r][k] != 0) v[k] -= f * rows_[r][k];
        }
        int pivot = -1;
        for (size_t k = 0; k < dim_; ++k)
            if (v[k] != 0) {
                pivot = static_cast<int>(k);
                break;
            }
        if (pivot < 0) return false;
        Rational inv = 1 / v[static_cast<size_t>(pivot)];
        for (size_t k = 0; k < dim_; ++k)
            if (v[k] != 0) v[k] *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

private:
    size_t dim_;
    std::vector<linalg::QVec> rows_;
    std::vector<int> pivots_;
};

struct ChosenGenerator {
    int64_t degree;
    std::vector<Polynomial> column;  // over the step's source module
};

std::vector<Polynomial> scale_column_by_monomial(const RingPtr& R,
                                                 const std::vector<Polynomial>& column,
                                                 const Monomial& mu) {
    std::vector<Polynomial> out;
    out.reserve(column.size());
    for (const Polynomial& p : column)
        out.push_back(R->normal_form(p.mul_term(Rational(1), mu)));
    return out;
}

}  // namespace

ModulePresentation ModulePresentation::cyclic(const RingPtr& R,
                                              const std::vector<RingElem>& ideal_gens) {
    GradedFreeModule g0{R, {0}};
    std::vector<int> twists;
    std::vector<Polynomial> entries;
    for (const RingElem& a : ideal_gens) {
        if (a.is_zero()) continue;
        std::optional<int64_t> d = a.degree();
        if (R->graded() && !d)
            throw std::invalid_argument("cyclic module: inhomogeneous ideal generator");
        twists.push_back(static_cast<int>(-(d ? *d : 0)));
        entries.push_back(a.rep());
    }
    GradedFreeModule g1{R, std::move(twists)};
    FreeModuleMap rel(g1, g0, std::move(entries), -1, 0);
    return ModulePresentation{std::move(g0), std::move(rel)};
}

ResolutionResult minimal_resolution(const RingPtr& R, const ModulePresentation& M, int hmax,
                                    int64_t dmax) {
    if (!R->graded()) throw std::invalid_argument("minimal_resolution requires a graded ring");
    if (hmax < 1) throw std::invalid_argument("minimal_resolution: hmax must be >= 1");
    ResolutionResult result;

    std::vector<GradedFreeModule> modules{M.generators};
    std::map<int, FreeModuleMap> diffs;
    result.betti[0] = M.generators.twists;

    int64_t max_gen_degree = 0;
    for (int j = 0; j < M.generators.rank(); ++j)
        max_gen_degree = std::max(max_gen_degree, M.generators.gen_degree(j));

    for (int step = 1; step <= hmax; ++step) {
        const GradedFreeModule prev = modules.back();
        int64_t bound = dmax - max_gen_degree;
        ResolutionStepInfo info;
        info.certified_degree = bound;

        if (prev.rank() == 0) {
            // Resolution has terminated; remaining modules are zero.
            modules.push_back(GradedFreeModule{R, {}});
            diffs.emplace(step, FreeModuleMap::zero(modules.back(), prev, -1, 0));
            result.betti[step] = {};
            result.steps[step] = info;
            continue;
        }

        int64_t dmin = prev.gen_degree(0);
        for (int j = 0; j < prev.rank(); ++j) dmin = std::min(dmin, prev.gen_degree(j));
        if (step > 1) ++dmin;  // minimality: syzygies sit in strictly higher degree
        if (bound < dmin) {
            std::ostringstream os;
            os << "step " << step << ": dmax=" << dmax
               << " leaves no certified degree (need at least " << dmin + max_gen_degree << ")";
            result.warnings.push_back(os.str());
            result.truncated = true;
            break;
        }

        std::vector<ChosenGenerator> chosen;
        for (int64_t d = dmin; d <= bound; ++d) {
            ModuleBasis basis = module_graded_basis(prev, d);
            if (basis.dimension() == 0) continue;

            // Kernel (or relation image at step 1) as vectors in (prev)_d.
            std::vector<linalg::QVec> space;
            if (step == 1) {
                DegreewisePiece piece = degreewise_matrix(M.relations, d);
                for (int c = 0; c < piece.mat.cols(); ++c) {
                    linalg::QVec v(piece.mat.rows());
                    for (int r = 0; r < piece.mat.rows(); ++r) v[r] = piece.mat.at(r, c);
                    space.push_back(std::move(v));
                }
            } else {
                DegreewisePiece piece = degreewise_matrix(diffs.at(step - 1), d);
                linalg::QMat ns = linalg::nullspace(piece.mat);
                for (int c = 0; c < ns.cols(); ++c) {
                    linalg::QVec v(ns.rows());
                    for (int r = 0; r < ns.rows(); ++r) v[r] = ns.at(r, c);
                    space.push_back(std::move(v));
                }
            }
            if (space.empty()) continue;

            // Span of positive-degree multiples of generators already chosen.
            SpanBuilder span(basis.items.size());
            for (const ChosenGenerator& g : chosen) {
                const GradedPieceBasis& mults = R->graded_basis(d - g.degree);
                for (const Monomial& mu : mults.monomials) {
                    std::vector<Polynomial> col = scale_column_by_monomial(R, g.column, mu);
                    span.insert(module_coordinates(prev, basis, col));
                }
            }
            for (const linalg::QVec& v : space) {
                if (span.insert(v))
                    chosen.push_back({d, module_from_coordinates(prev, basis, v)});
            }
        }

        std::vector<int> twists;
        std::vector<Polynomial> entries(static_cast<size_t>(prev.rank()) * chosen.size(),
                                        Polynomial::zero(R->ambient()));
        for (size_t k = 0; k < chosen.size(); ++k) {
            twists.push_back(static_cast<int>(-chosen[k].degree));
            for (int i = 0; i < prev.rank(); ++i)
                entries[static_cast<size_t>(i) * chosen.size() + k] = chosen[k].column[i];
        }
        GradedFreeModule next{R, std::move(twists)};
        FreeModuleMap d_step(next, prev, std::move(entries), -1, 0);

        if (step >= 2) {
            FreeModuleMap sq = FreeModuleMap::compose(diffs.at(step - 1), d_step);
            if (!sq.is_zero())
                throw std::logic_error("minimal_resolution: syzygy columns not in kernel");
        }

        info.generators_found = next.rank();
        result.steps[step] = info;
        result.betti[step] = next.twists;
        for (int j = 0; j < next.rank(); ++j)
            max_gen_degree = std::max(max_gen_degree, next.gen_degree(j));
        modules.push_back(next);
        diffs.emplace(step, std::move(d_step));
    }

    result.complex = GradedComplex::create(R, 0, std::move(modules), std::move(diffs));
    return result;
}

ResolutionCheck verify_resolution_window(const GradedComplex& F, const ModulePresentation& M,
                                         int64_t dmax) {
    ResolutionCheck check;
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.failures.push_back(std::move(msg));
    };

    ComplexValidation v = validate_complex(F);
    if (!v.ok) {
        check.squares_zero = false;
        for (const std::string& s : v.violations) fail("complex: " + s);
    }

    for (const auto& [i, d] : F.diffs()) {
        for (int r = 0; r < d.target().rank(); ++r)
            for (int c = 0; c < d.source().rank(); ++c) {
                const Polynomial& e = d.entry(r, c);
                for (const Term& t : e.terms())
                    if (t.mono.is_one()) {
                        check.minimal = false;
                        std::ostringstream os;
                        os << "d_" << i << " entry (" << r << "," << c
                           << ") has a unit part: " << e.str();
                        fail(os.str());
                    }
            }
    }

    // Degreewise exactness at interior indices: dim ker(d_i) = rank(d_{i+1}).
    for (const auto& [i, d] : F.diffs()) {
        if (!F.has_diff(i + 1)) continue;
        const FreeModuleMap& dnext = F.diff(i + 1);
        int64_t dmin = 0;
        for (int j = 0; j < d.source().rank(); ++j)
            dmin = std::min(dmin, d.source().gen_degree(j));
        for (int64_t deg = dmin; deg <= dmax; ++deg) {
            ModuleBasis basis = module_graded_basis(d.source(), deg);
            if (basis.dimension() == 0) continue;
            DegreewisePiece a = degreewise_matrix(d, deg);
            DegreewisePiece b = degreewise_matrix(dnext, deg);
            int ker = a.mat.cols() - linalg::rank(a.mat);
            int im = linalg::rank(b.mat);
            if (ker != im) {
                check.exact = false;
                std::ostringstream os;
                os << "exactness fails at index " << i << " in internal degree " << deg
                   << ": dim ker = " << ker << ", dim im = " << im;
                fail(os.str());
            }
        }
    }

    // im(d_1) must agree with the relation image degreewise.
    int first = F.lo() + 1;
    if (F.has_diff(first)) {
        const FreeModuleMap& d1 = F.diff(first);
        if (!(d1.target() == M.generators)) {
            check.resolves_module = false;
            fail("window does not start at the module's generator module");
        } else {
            for (int64_t deg = 0; deg <= dmax; ++deg) {
                ModuleBasis basis = module_graded_basis(M.generators, deg);
                if (basis.dimension() == 0) continue;
                DegreewisePiece a = degreewise_matrix(d1, deg);
                DegreewisePiece b = degreewise_matrix(M.relations, deg);
                int ra = linalg::rank(a.mat);
                int rb = linalg::rank(b.mat);
                linalg::QMat joint(a.mat.rows(), a.mat.cols() + b.mat.cols());
                for (int r = 0; r < a.mat.rows(); ++r) {
                    for (int c = 0; c < a.mat.cols(); ++c) joint.at(r, c) = a.mat.at(r, c);
                    for (int c = 0; c < b.mat.cols(); ++c)
                        joint.at(r, a.mat.cols() + c) = b.mat.at(r, c);
                }
                int rj = linalg::rank(joint);
                if (ra != rb || rb != rj) {
                    check.resolves_module = false;
                    std::ostringstream os;
                    os << "im(d_" << first << ") differs from the relation image in degree "
                       << deg;
                    fail(os.str());
                }
            }
        }
    }

    return check;
}

}  // namespace ezdop
