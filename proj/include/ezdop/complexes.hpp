#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ezdop/presented_ring.hpp"
#include "ezdop/qlinalg.hpp"

namespace ezdop {

// Direct sum of twists of the ring: module = (+)_j R(twists[j]).
// The generator of R(t) sits in internal degree -t.
struct GradedFreeModule {
    RingPtr ring;
    std::vector<int> twists;

    int rank() const { return static_cast<int>(twists.size()); }
    int64_t gen_degree(int j) const { return -twists[j]; }
    bool operator==(const GradedFreeModule& o) const {
        return ring.get() == o.ring.get() && twists == o.twists;
    }
};

// Matrix block between two graded free modules over the same ring, acting on
// column vectors. Entries are stored in canonical normal form. In graded
// mode a nonzero entry (i,j) must be homogeneous of internal degree
// gen_degree(source j) + internal_degree - gen_degree(target i); shape is
// enforced at construction, homogeneity is reported by check_graded so that
// supplied data can be validated rather than rejected.
class FreeModuleMap {
public:
    FreeModuleMap() = default;
    FreeModuleMap(GradedFreeModule source, GradedFreeModule target,
                  std::vector<Polynomial> entries_row_major, int homological_degree,
                  int64_t internal_degree);
    static FreeModuleMap zero(GradedFreeModule source, GradedFreeModule target,
                              int homological_degree, int64_t internal_degree);

    const GradedFreeModule& source() const { return source_; }
    const GradedFreeModule& target() const { return target_; }
    const RingPtr& ring() const { return source_.ring; }
    int hdeg() const { return hdeg_; }
    int64_t ideg() const { return ideg_; }

    const Polynomial& entry(int i, int j) const { return entries_[static_cast<size_t>(i) * source_.rank() + j]; }
    RingElem entry_elem(int i, int j) const { return RingElem(source_.ring, entry(i, j)); }
    // Internal degree required of entry (i,j); negative means the entry
    // must vanish in graded mode.
    int64_t entry_degree(int i, int j) const {
        return source_.gen_degree(j) + ideg_ - target_.gen_degree(i);
    }

    bool is_zero() const;
    std::vector<std::string> check_graded() const;  // homogeneity violations

    static FreeModuleMap compose(const FreeModuleMap& g, const FreeModuleMap& h);  // g o h
    FreeModuleMap operator+(const FreeModuleMap& o) const;
    FreeModuleMap operator-(const FreeModuleMap& o) const;
    FreeModuleMap operator-() const;
    FreeModuleMap scale(const RingElem& z) const;     // homogeneous z shifts ideg
    FreeModuleMap scale(const Rational& c) const;
    bool equal_entries(const FreeModuleMap& o) const;

private:
    GradedFreeModule source_, target_;
    std::vector<Polynomial> entries_;
    int hdeg_ = 0;
    int64_t ideg_ = 0;
};

class GradedComplex;
using ComplexPtr = std::shared_ptr<const GradedComplex>;

// Homologically indexed family of graded free modules on a finite window
// [lo, hi] with differentials d_i : F_i -> F_{i-1} of homological degree -1
// and internal degree 0. d^2 = 0 is checked by validate_complex, not here,
// so near-complexes can be represented and reported on.
class GradedComplex {
public:
    GradedComplex(RingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                  std::map<int, FreeModuleMap> differentials);
    static ComplexPtr create(RingPtr ring, int lo, std::vector<GradedFreeModule> modules,
                             std::map<int, FreeModuleMap> differentials);

    const RingPtr& ring() const { return ring_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
    bool has_module(int i) const { return i >= lo() && i <= hi(); }
    const GradedFreeModule& module(int i) const { return modules_[static_cast<size_t>(i - lo_)]; }
    bool has_diff(int i) const { return diffs_.count(i) > 0; }
    const FreeModuleMap& diff(int i) const { return diffs_.at(i); }
    const std::map<int, FreeModuleMap>& diffs() const { return diffs_; }

    bool structurally_equal(const GradedComplex& o) const;

private:
    RingPtr ring_;
    int lo_;
    std::vector<GradedFreeModule> modules_;
    std::map<int, FreeModuleMap> diffs_;
};

struct ComplexValidation {
    bool ok = true;
    std::vector<std::string> violations;
};
// Verifies d_{i-1} o d_i = 0 and, over graded rings, homogeneity and
// internal degree 0 of every differential.
ComplexValidation validate_complex(const GradedComplex& F);

// Chain-map family g_i : F_i -> G_{i + hdeg}, all of one internal degree.
class ComplexMap {
public:
    ComplexMap() = default;
    ComplexMap(ComplexPtr source, ComplexPtr target, int hdeg, int64_t ideg,
               std::map<int, FreeModuleMap> components);
    static ComplexMap identity(const ComplexPtr& F);

    const ComplexPtr& source() const { return source_; }
    const ComplexPtr& target() const { return target_; }
    int hdeg() const { return hdeg_; }
    int64_t ideg() const { return ideg_; }
    bool has_component(int i) const { return comps_.count(i) > 0; }
    const FreeModuleMap& component(int i) const { return comps_.at(i); }
    const std::map<int, FreeModuleMap>& components() const { return comps_; }

    static ComplexMap compose(const ComplexMap& g, const ComplexMap& h);  // g o h
    ComplexMap operator+(const ComplexMap& o) const;
    ComplexMap operator-(const ComplexMap& o) const;
    ComplexMap scale(const RingElem& z) const;
    ComplexMap scale(const Rational& c) const;
    bool is_zero() const;

private:
    ComplexPtr source_, target_;
    int hdeg_ = 0;
    int64_t ideg_ = 0;
    std::map<int, FreeModuleMap> comps_;
};

struct ChainMapCheck {
    bool ok = false;
    int equations_checked = 0;
    std::string detail;
};
// Sign convention: even homological degree commutes (dg - gd = 0), odd
// degree anticommutes (dg + gd = 0). Throws when the window admits no
// equation at all.
ChainMapCheck is_chain_map(const ComplexMap& g);

// Q-basis of the degree-d piece of a graded free module: pairs of summand
// index and standard monomial, summands ascending, monomials in ring order.
struct ModuleBasis {
    int64_t degree = 0;
    std::vector<std::pair<int, Monomial>> items;
    int dimension() const { return static_cast<int>(items.size()); }
    int index_of(int summand, const Monomial& m) const;
};
ModuleBasis module_graded_basis(const GradedFreeModule& M, int64_t degree);

// Coordinates of a polynomial column vector (entries in normal form,
// homogeneous of the basis degree) with respect to a module basis.
linalg::QVec module_coordinates(const GradedFreeModule& M, const ModuleBasis& basis,
                                const std::vector<Polynomial>& column);
std::vector<Polynomial> module_from_coordinates(const GradedFreeModule& M,
                                                const ModuleBasis& basis,
                                                const linalg::QVec& coords);

struct DegreewisePiece {
    ModuleBasis source_basis;  // degree d
    ModuleBasis target_basis;  // degree d + ideg
    linalg::QMat mat;
};
// Exact Q-matrix of the map restricted to the degree-d piece of the source,
// in standard-monomial bases.
DegreewisePiece degreewise_matrix(const FreeModuleMap& g, int64_t source_degree);

}  // namespace ezdop
