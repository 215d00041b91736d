#include "ezdop/complexes.hpp"

#include <sstream>
#include <stdexcept>

namespace ezdop {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* what) {
    if (a.get() != b.get()) throw std::invalid_argument(std::string(what) + ": ring mismatch");
}

}  // namespace

FreeModuleMap::FreeModuleMap(GradedFreeModule source, GradedFreeModule target,
                             std::vector<Polynomial> entries_row_major, int homological_degree,
                             int64_t internal_degree)
    : source_(std::move(source)),
      target_(std::move(target)),
      entries_(std::move(entries_row_major)),
      hdeg_(homological_degree),
      ideg_(internal_degree) {
    require_same_ring(source_.ring, target_.ring, "module map");
    if (entries_.size() != static_cast<size_t>(source_.rank()) * target_.rank())
        throw std::invalid_argument("module map: entry count does not match ranks");
    for (Polynomial& p : entries_) {
        if (!p.attached()) {
            p = Polynomial::zero(source_.ring->ambient());
            continue;
        }
        if (!p.ring()->same_as(*source_.ring->ambient()))
            throw std::invalid_argument("module map: entry from wrong ambient ring");
        p = source_.ring->normal_form(p);
    }
}

FreeModuleMap FreeModuleMap::zero(GradedFreeModule source, GradedFreeModule target,
                                  int homological_degree, int64_t internal_degree) {
    std::vector<Polynomial> entries(
        static_cast<size_t>(source.rank()) * target.rank(),
        Polynomial::zero(source.ring->ambient()));
    return FreeModuleMap(std::move(source), std::move(target), std::move(entries),
                         homological_degree, internal_degree);
}

bool FreeModuleMap::is_zero() const {
    for (const Polynomial& p : entries_)
        if (!p.is_zero()) return false;
    return true;
}

std::vector<std::string> FreeModuleMap::check_graded() const {
    std::vector<std::string> out;
    if (!ring()->graded()) return out;
    for (int i = 0; i < target_.rank(); ++i)
        for (int j = 0; j < source_.rank(); ++j) {
            const Polynomial& p = entry(i, j);
            if (p.is_zero()) continue;
            std::optional<int64_t> d = p.homogeneous_degree();
            if (!d) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") = " << p.str() << " is not homogeneous";
                out.push_back(os.str());
            } else if (*d != entry_degree(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << ") = " << p.str() << " has degree " << *d
                   << ", expected " << entry_degree(i, j);
                out.push_back(os.str());
            }
        }
    return out;
}

FreeModuleMap FreeModuleMap::compose(const FreeModuleMap& g, const FreeModuleMap& h) {
    if (!(h.target_ == g.source_))
        throw std::invalid_argument("compose: target of inner map differs from source of outer");
    const RingPtr& R = g.ring();
    std::vector<Polynomial> entries(static_cast<size_t>(h.source_.rank()) * g.target_.rank(),
                                    Polynomial::zero(R->ambient()));
    for (int i = 0; i < g.target_.rank(); ++i)
        for (int j = 0; j < h.source_.rank(); ++j) {
            Polynomial acc = Polynomial::zero(R->ambient());
            for (int k = 0; k < g.source_.rank(); ++k) {
                const Polynomial& a = g.entry(i, k);
                const Polynomial& b = h.entry(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                acc = acc + a * b;
            }
            entries[static_cast<size_t>(i) * h.source_.rank() + j] = R->normal_form(acc);
        }
    return FreeModuleMap(h.source_, g.target_, std::move(entries), g.hdeg_ + h.hdeg_,
                         g.ideg_ + h.ideg_);
}

FreeModuleMap FreeModuleMap::operator+(const FreeModuleMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_) || hdeg_ != o.hdeg_ ||
        ideg_ != o.ideg_)
        throw std::invalid_argument("module map addition: shape or degree mismatch");
    std::vector<Polynomial> entries(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k)
        entries[k] = ring()->normal_form(entries_[k] + o.entries_[k]);
    return FreeModuleMap(source_, target_, std::move(entries), hdeg_, ideg_);
}

FreeModuleMap FreeModuleMap::operator-() const {
    std::vector<Polynomial> entries(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k) entries[k] = -entries_[k];
    return FreeModuleMap(source_, target_, std::move(entries), hdeg_, ideg_);
}

FreeModuleMap FreeModuleMap::operator-(const FreeModuleMap& o) const { return *this + (-o); }

FreeModuleMap FreeModuleMap::scale(const RingElem& z) const {
    require_same_ring(z.ring(), ring(), "module map scale");
    int64_t shift = 0;
    if (ring()->graded() && !z.is_zero()) {
        std::optional<int64_t> d = z.degree();
        if (!d) throw std::invalid_argument("scaling by inhomogeneous element in graded mode");
        shift = *d;
    }
    std::vector<Polynomial> entries(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k)
        entries[k] = ring()->normal_form(entries_[k] * z.rep());
    return FreeModuleMap(source_, target_, std::move(entries), hdeg_, ideg_ + shift);
}

FreeModuleMap FreeModuleMap::scale(const Rational& c) const {
    std::vector<Polynomial> entries(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k) entries[k] = entries_[k] * c;
    return FreeModuleMap(source_, target_, std::move(entries), hdeg_, ideg_);
}

bool FreeModuleMap::equal_entries(const FreeModuleMap& o) const {
    if (!(source_ == o.source_) || !(target_ == o.target_)) return false;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

GradedComplex::GradedComplex(RingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                             std::map<int, FreeModuleMap> differentials)
    : ring_(std::move(ring)), lo_(lo), modules_(std::move(modules)), diffs_(std::move(differentials)) {
    if (modules_.empty()) throw std::invalid_argument("complex: empty window");
    for (const GradedFreeModule& m : modules_)
        require_same_ring(m.ring, ring_, "complex module");
    for (const auto& [i, d] : diffs_) {
        if (i <= lo_ || i > hi()) throw std::invalid_argument("complex: differential outside window");
        if (d.hdeg() != -1) throw std::invalid_argument("complex: differential must have homological degree -1");
        if (d.ideg() != 0) throw std::invalid_argument("complex: differential must have internal degree 0");
        if (!(d.source() == module(i)) || !(d.target() == module(i - 1)))
            throw std::invalid_argument("complex: differential modules do not match window");
    }
}

ComplexPtr GradedComplex::create(RingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                                 std::map<int, FreeModuleMap> differentials) {
    return std::make_shared<const GradedComplex>(std::move(ring), lo, std::move(modules),
                                                 std::move(differentials));
}

bool GradedComplex::structurally_equal(const GradedComplex& o) const {
    if (this == &o) return true;
    if (ring_.get() != o.ring_.get() || lo_ != o.lo_ || modules_.size() != o.modules_.size())
        return false;
    for (size_t k = 0; k < modules_.size(); ++k)
        if (!(modules_[k] == o.modules_[k])) return false;
    if (diffs_.size() != o.diffs_.size()) return false;
    for (const auto& [i, d] : diffs_) {
        auto it = o.diffs_.find(i);
        if (it == o.diffs_.end() || !d.equal_entries(it->second)) return false;
    }
    return true;
}

ComplexValidation validate_complex(const GradedComplex& F) {
    ComplexValidation v;
    for (const auto& [i, d] : F.diffs()) {
        for (std::string& s : d.check_graded()) {
            v.ok = false;
            v.violations.push_back("d_" + std::to_string(i) + ": " + s);
        }
        if (F.has_diff(i - 1)) {
            FreeModuleMap sq = FreeModuleMap::compose(F.diff(i - 1), F.diff(i));
            if (!sq.is_zero()) {
                v.ok = false;
                std::ostringstream os;
                os << "d_" << (i - 1) << " o d_" << i << " != 0";
                for (int r = 0; r < sq.target().rank(); ++r)
                    for (int c = 0; c < sq.source().rank(); ++c)
                        if (!sq.entry(r, c).is_zero()) {
                            os << "; entry (" << r << "," << c << ") = " << sq.entry(r, c).str();
                        }
                v.violations.push_back(os.str());
            }
        }
    }
    return v;
}

ComplexMap::ComplexMap(ComplexPtr source, ComplexPtr target, int hdeg, int64_t ideg,
                       std::map<int, FreeModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), hdeg_(hdeg), ideg_(ideg),
      comps_(std::move(components)) {
    for (const auto& [i, f] : comps_) {
        if (!source_->has_module(i) || !target_->has_module(i + hdeg_))
            throw std::invalid_argument("complex map component outside windows");
        if (!(f.source() == source_->module(i)) || !(f.target() == target_->module(i + hdeg_)))
            throw std::invalid_argument("complex map component has wrong modules");
        if (f.hdeg() != hdeg_ || f.ideg() != ideg_)
            throw std::invalid_argument("complex map component degree mismatch");
    }
}

ComplexMap ComplexMap::identity(const ComplexPtr& F) {
    std::map<int, FreeModuleMap> comps;
    for (int i = F->lo(); i <= F->hi(); ++i) {
        const GradedFreeModule& M = F->module(i);
        std::vector<Polynomial> entries(static_cast<size_t>(M.rank()) * M.rank(),
                                        Polynomial::zero(M.ring->ambient()));
        for (int k = 0; k < M.rank(); ++k)
            entries[static_cast<size_t>(k) * M.rank() + k] =
                Polynomial::constant(M.ring->ambient(), Rational(1));
        comps.emplace(i, FreeModuleMap(M, M, std::move(entries), 0, 0));
    }
    return ComplexMap(F, F, 0, 0, std::move(comps));
}

ComplexMap ComplexMap::compose(const ComplexMap& g, const ComplexMap& h) {
    if (!g.source_->structurally_equal(*h.target_))
        throw std::invalid_argument("complex map composition: middle complexes differ");
    std::map<int, FreeModuleMap> comps;
    for (const auto& [i, hc] : h.comps_) {
        auto it = g.comps_.find(i + h.hdeg_);
        if (it == g.comps_.end()) continue;
        comps.emplace(i, FreeModuleMap::compose(it->second, hc));
    }
    return ComplexMap(h.source_, g.target_, g.hdeg_ + h.hdeg_, g.ideg_ + h.ideg_,
                      std::move(comps));
}

namespace {
// Union of component indices; missing components count as zero blocks.
std::map<int, FreeModuleMap> merge_components(const ComplexMap& a, const ComplexMap& b,
                                              bool subtract) {
    std::map<int, FreeModuleMap> out;
    for (const auto& [i, f] : a.components()) {
        if (b.has_component(i)) {
            out.emplace(i, subtract ? f - b.component(i) : f + b.component(i));
        } else {
            out.emplace(i, f);
        }
    }
    for (const auto& [i, f] : b.components())
        if (!a.has_component(i)) out.emplace(i, subtract ? -f : f);
    return out;
}
}  // namespace

ComplexMap ComplexMap::operator+(const ComplexMap& o) const {
    if (hdeg_ != o.hdeg_ || ideg_ != o.ideg_)
        throw std::invalid_argument("complex map addition: degree mismatch");
    if (!source_->structurally_equal(*o.source_) || !target_->structurally_equal(*o.target_))
        throw std::invalid_argument("complex map addition: complexes differ");
    return ComplexMap(source_, target_, hdeg_, ideg_, merge_components(*this, o, false));
}

ComplexMap ComplexMap::operator-(const ComplexMap& o) const {
    if (hdeg_ != o.hdeg_ || ideg_ != o.ideg_)
        throw std::invalid_argument("complex map subtraction: degree mismatch");
    if (!source_->structurally_equal(*o.source_) || !target_->structurally_equal(*o.target_))
        throw std::invalid_argument("complex map subtraction: complexes differ");
    return ComplexMap(source_, target_, hdeg_, ideg_, merge_components(*this, o, true));
}

ComplexMap ComplexMap::scale(const RingElem& z) const {
    std::map<int, FreeModuleMap> comps;
    int64_t ideg = ideg_;
    for (const auto& [i, f] : comps_) {
        FreeModuleMap s = f.scale(z);
        ideg = s.ideg();
        comps.emplace(i, std::move(s));
    }
    return ComplexMap(source_, target_, hdeg_, ideg, std::move(comps));
}

ComplexMap ComplexMap::scale(const Rational& c) const {
    std::map<int, FreeModuleMap> comps;
    for (const auto& [i, f] : comps_) comps.emplace(i, f.scale(c));
    return ComplexMap(source_, target_, hdeg_, ideg_, std::move(comps));
}

bool ComplexMap::is_zero() const {
    for (const auto& [i, f] : comps_)
        if (!f.is_zero()) return false;
    return true;
}

ChainMapCheck is_chain_map(const ComplexMap& g) {
    const ComplexPtr& F = g.source();
    const ComplexPtr& G = g.target();
    const int m = g.hdeg();
    ChainMapCheck out;
    out.ok = true;
    for (const auto& [i, gi] : g.components()) {
        if (!g.has_component(i - 1)) continue;
        if (!F->has_diff(i) || !G->has_diff(i + m)) continue;
        FreeModuleMap dg = FreeModuleMap::compose(G->diff(i + m), gi);
        FreeModuleMap gd = FreeModuleMap::compose(g.component(i - 1), F->diff(i));
        // Even degree commutes, odd degree anticommutes.
        FreeModuleMap residual = (m % 2 == 0) ? dg - gd : dg + gd;
        ++out.equations_checked;
        if (!residual.is_zero()) {
            out.ok = false;
            std::ostringstream os;
            os << "chain map equation fails at index " << i;
            out.detail = os.str();
        }
    }
    if (out.equations_checked == 0)
        throw std::invalid_argument("chain map check: window too small to evaluate any equation");
    return out;
}

int ModuleBasis::index_of(int summand, const Monomial& m) const {
    for (size_t k = 0; k < items.size(); ++k)
        if (items[k].first == summand && items[k].second == m) return static_cast<int>(k);
    return -1;
}

ModuleBasis module_graded_basis(const GradedFreeModule& M, int64_t degree) {
    ModuleBasis basis;
    basis.degree = degree;
    for (int j = 0; j < M.rank(); ++j) {
        // mu * e_j has degree deg(mu) + gen_degree(j).
        const GradedPieceBasis& piece = M.ring->graded_basis(degree - M.gen_degree(j));
        for (const Monomial& m : piece.monomials) basis.items.emplace_back(j, m);
    }
    return basis;
}

linalg::QVec module_coordinates(const GradedFreeModule& M, const ModuleBasis& basis,
                                const std::vector<Polynomial>& column) {
    if (static_cast<int>(column.size()) != M.rank())
        throw std::invalid_argument("module coordinates: column length mismatch");
    linalg::QVec v(basis.items.size(), Rational(0));
    for (int j = 0; j < M.rank(); ++j) {
        for (const Term& t : column[j].terms()) {
            int k = basis.index_of(j, t.mono);
            if (k < 0)
                throw std::invalid_argument(
                    "module coordinates: monomial outside the graded piece basis");
            v[static_cast<size_t>(k)] = t.coeff;
        }
    }
    return v;
}

std::vector<Polynomial> module_from_coordinates(const GradedFreeModule& M,
                                                const ModuleBasis& basis,
                                                const linalg::QVec& coords) {
    if (coords.size() != basis.items.size())
        throw std::invalid_argument("module coordinates: vector length mismatch");
    std::vector<std::vector<Term>> terms(M.rank());
    for (size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0) continue;
        terms[basis.items[k].first].push_back({coords[k], basis.items[k].second});
    }
    std::vector<Polynomial> column;
    column.reserve(M.rank());
    for (int j = 0; j < M.rank(); ++j)
        column.push_back(Polynomial::from_terms(M.ring->ambient(), std::move(terms[j])));
    return column;
}

DegreewisePiece degreewise_matrix(const FreeModuleMap& g, int64_t source_degree) {
    if (!g.ring()->graded())
        throw std::invalid_argument("degreewise matrix requires a graded ring");
    DegreewisePiece piece;
    piece.source_basis = module_graded_basis(g.source(), source_degree);
    piece.target_basis = module_graded_basis(g.target(), source_degree + g.ideg());
    piece.mat = linalg::QMat(piece.target_basis.dimension(), piece.source_basis.dimension());
    for (int col = 0; col < piece.source_basis.dimension(); ++col) {
        auto [j, mu] = piece.source_basis.items[static_cast<size_t>(col)];
        for (int i = 0; i < g.target().rank(); ++i) {
            const Polynomial& e = g.entry(i, j);
            if (e.is_zero()) continue;
            Polynomial image = g.ring()->normal_form(e.mul_term(Rational(1), mu));
            for (const Term& t : image.terms()) {
                int row = piece.target_basis.index_of(i, t.mono);
                if (row < 0)
                    throw std::invalid_argument(
                        "degreewise matrix: image outside expected graded piece (inhomogeneous map?)");
                piece.mat.at(row, col) = t.coeff;
            }
        }
    }
    return piece;
}

}  // namespace ezdop
