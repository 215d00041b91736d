#pragma once

#include <map>
#include <string>
#include <vector>

#include "ezdop/complexes.hpp"

namespace ezdop {

// Module given as the cokernel of a relation map into a graded free module.
struct ModulePresentation {
    GradedFreeModule generators;  // G0
    FreeModuleMap relations;      // G1 -> G0, internal degree 0

    // R/(a_1,...,a_k): G0 = R, relations the row [a_1 ... a_k].
    static ModulePresentation cyclic(const RingPtr& R, const std::vector<RingElem>& ideal_gens);
};

struct ResolutionStepInfo {
    int64_t certified_degree = 0;  // betti numbers certified for degrees <= this
    int generators_found = 0;
};

struct ResolutionResult {
    ComplexPtr complex;                    // window [0, steps computed]
    std::map<int, std::vector<int>> betti; // homological index -> twist multiset (ascending degree)
    std::map<int, ResolutionStepInfo> steps;
    std::vector<std::string> warnings;
    bool truncated = false;  // dmax too small to certify some requested step
};

// Minimal graded free resolution computed degreewise by exact linear algebra:
// each syzygy step takes the kernel of the previous differential degree by
// degree, keeps the kernel vectors that are not positive-degree multiples of
// generators already chosen (exact rank test, earlier basis vectors
// preferred), and emits a new free module with those twists. A step starting
// from maximum generator degree m certifies degrees <= dmax - m only.
ResolutionResult minimal_resolution(const RingPtr& R, const ModulePresentation& M, int hmax,
                                    int64_t dmax);

struct ResolutionCheck {
    bool ok = true;
    bool squares_zero = true;
    bool minimal = true;
    bool exact = true;
    bool resolves_module = true;
    std::vector<std::string> failures;
};

// Checks d^2 = 0, minimality (no unit entries: every entry lies in the
// irrelevant maximal ideal), degreewise exactness at each interior index for
// internal degrees <= dmax, and agreement of im(d_1) with the module's
// relation image.
ResolutionCheck verify_resolution_window(const GradedComplex& F, const ModulePresentation& M,
                                         int64_t dmax);

}  // namespace ezdop
