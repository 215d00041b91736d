#pragma once

#include <map>

#include "ezdop/complexes.hpp"
#include "ezdop/resolution.hpp"

namespace ezdop {

// Self-contained data for the shipped worked example: a graded ring with an
// exact pair of zero divisors, the quotient by one member, the start of the
// minimal resolution of R/(y) with its published differentials, and
// reference choices for the lifted operators.
struct WorkedExample {
    RingPtr S;      // Q[x,y,z,w,t] modulo ten monomial relations
    RingPtr R;      // S/(f)
    RingElem f, g;  // the exact pair in S
    RingElem y;     // in R; the resolved module is R/(y)
    RingElem t;     // in R; lies in ann_R(g)
    ComplexPtr F;   // window [0,3] with the reference differentials
    ModulePresentation M;

    // Reference operator choices over S (homological indices 2, 3 and 3).
    std::map<int, FreeModuleMap> psi_reference;
    std::map<int, FreeModuleMap> phi_reference;

    // Monomials spanning the degree-2 piece of R in the reference write-up.
    std::vector<Polynomial> r2_reference_span;

    // Expected resolution data.
    std::map<int, std::vector<int>> expected_betti;  // steps 1..3
};

WorkedExample make_worked_example();

// Job-format encoding of the same data, as shipped in jobs/.
const char* worked_example_job_text();

}  // namespace ezdop
