#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ezdop/complexes.hpp"
#include "ezdop/operators.hpp"

namespace ezdop {

// Sign convention for the homotopy equation g = D(theta).
//   HomDifferential: D(theta) = d o theta - (-1)^{|theta|} theta o d
//   PlusVariant:     D(theta) = d o theta + (-1)^{|theta|} theta o d
// The substitution theta_i -> (-1)^i theta_i carries solutions of one form
// for g to solutions of the other form for the index-twisted right side
// ((-1)^i g_i). On a single-equation window the twist is absorbed by
// negating one free component, so feasibility verdicts for the same g
// coincide there; longer windows can genuinely disagree.
enum class HomotopyConvention { HomDifferential, PlusVariant };

struct HomotopyProblem {
    ComplexMap g;
    int window_lo = 0;  // equation indices [window_lo, window_hi]
    int window_hi = 0;
    // Graded rings restrict theta entries to the internal degree of g; on
    // ungraded rings (or when set) entries range over all standard
    // monomials of degree <= ungraded_bound and verdicts are only valid up
    // to that bound.
    std::optional<int64_t> ungraded_bound;
    HomotopyConvention convention = HomotopyConvention::HomDifferential;
    bool check_chain_map = true;
};

struct HomotopyCertificate {
    ComplexMap theta;  // homological degree |g|+1, internal degree of g
    int equations = 0;
};

struct SystemRowLabel {
    int equation_index;
    int target_row;
    int source_col;
    Monomial mono;
};
struct SystemColLabel {
    int theta_index;
    int row;
    int col;
    Monomial mono;
};

// The assembled exact linear system together with a left-nullspace witness:
// witness * system == 0 and witness * rhs != 0, so no solution exists. A
// witness on a window rules out any global homotopy, since a global one
// restricts to a window solution.
struct InfeasibilityCertificate {
    linalg::QMat system;
    linalg::QVec rhs;
    linalg::QVec witness;
    std::vector<SystemRowLabel> row_labels;
    std::vector<SystemColLabel> col_labels;
    PolyRingPtr ambient;  // for printing the label monomials
    bool bounded_only = false;
};

using HomotopyOutcome = std::variant<HomotopyCertificate, InfeasibilityCertificate>;

inline bool homotopy_found(const HomotopyOutcome& o) {
    return std::holds_alternative<HomotopyCertificate>(o);
}

// Decides g = D(theta) on the window by exact linear algebra over the
// graded pieces. Certificates are re-verified before being returned:
// a found theta has exactly zero residual at every posed equation, and an
// infeasibility witness satisfies its defining identities exactly.
HomotopyOutcome null_homotopy(const HomotopyProblem& p);

// null_homotopy applied to g1 - g2 (degrees must match).
HomotopyOutcome homotopic(const ComplexMap& g1, const ComplexMap& g2, int window_lo,
                          int window_hi);

struct NaturalityCheckItem {
    std::string what;
    bool homotopic = false;
    HomotopyOutcome outcome;
};
struct NaturalityReport {
    bool ok = true;
    std::vector<NaturalityCheckItem> items;
};

// For a chain map f : F -> G of homological degree k and operator bundles
// on both complexes, checks psi'_z o f ~ f o psi_z for each matching z and
// phi' o f ~ (-1)^k f o phi, on the given equation window.
NaturalityReport check_naturality(const ComplexMap& f, const OperatorBundle& bundle_src,
                                  const OperatorBundle& bundle_tgt, int window_lo,
                                  int window_hi);

struct ExtClassResult {
    // True when no homotopy exists on the window, which is sound for
    // nonvanishing of the class. A feasible window only means "zero on
    // window", not a global vanishing claim.
    bool nonzero = false;
    HomotopyOutcome outcome;
};
ExtClassResult ext_class_nonzero(const ComplexMap& g, int window_lo, int window_hi);

}  // namespace ezdop
