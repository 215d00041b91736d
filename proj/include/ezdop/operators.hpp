#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ezdop/complexes.hpp"

namespace ezdop {

enum class LiftPolicy { Canonical, Supplied, Randomized };

// A complex over R = S/(x) together with a lifting of its differentials to
// S. The lifted maps need not square to zero; the only requirement is that
// each lifted entry projects back to the original one.
struct LiftedComplex {
    ComplexPtr base;   // over R
    RingPtr over;      // S
    std::map<int, GradedFreeModule> modules;  // S-modules, same twists as base
    std::map<int, FreeModuleMap> dtilde;      // internal degree 0 over S
    LiftPolicy policy = LiftPolicy::Canonical;
    uint64_t seed = 0;
};

// policy Canonical: normal-form representatives read in S.
// policy Randomized: canonical entries plus seeded random multiples of x
//   (homogeneous of the right degree), for choice-independence tests.
// policy Supplied: explicit S-matrices, validated against the projection
//   identity and homogeneity.
LiftedComplex lift_complex(const ComplexPtr& F, const RingPtr& S, LiftPolicy policy,
                           uint64_t seed = 0,
                           const std::map<int, FreeModuleMap>* supplied = nullptr);

// psi_tilde_i with x * psi_tilde_i = (dtilde_{i-1} o dtilde_i) mod I_S,
// entrywise by certified division; homological degree -2, internal degree
// -deg(x). Defined for every index where both differentials exist. Throws
// when an entry is not divisible (the input was not a complex over R, or
// the pair is not exact).
std::map<int, FreeModuleMap> build_psi(const LiftedComplex& L, const RingElem& x);

// phi_tilde with y * phi_tilde = dtilde psi - psi dtilde mod I_S; homological
// degree -3, internal degree -(deg x + deg y).
std::map<int, FreeModuleMap> build_phi(const LiftedComplex& L,
                                       const std::map<int, FreeModuleMap>& psi_tilde,
                                       const RingElem& y);

struct OperatorBundle {
    LiftedComplex lifted;
    std::map<int, FreeModuleMap> psi_tilde;  // over S
    std::map<int, FreeModuleMap> phi_tilde;  // over S
    // psi_tilde tensored down to R; not itself a chain map, but every
    // z * psi_reduced with z in ann_R(y) is.
    std::map<int, FreeModuleMap> psi_reduced;
    std::vector<std::pair<RingElem, ComplexMap>> psi_z;  // verified chain maps
    std::optional<ComplexMap> phi;                       // verified chain map
    RingElem x, y;  // the exact pair in S
    std::vector<std::string> notes;
};

// Tensors the lifted operators down to R, forms psi_z = z * (psi (x) R) for
// each z (validated to lie in ann_R(y)) and phi = phi_tilde (x) R, and
// verifies the chain-map identities wherever the window admits an equation.
OperatorBundle reduce_operators(LiftedComplex L, std::map<int, FreeModuleMap> psi_tilde,
                                std::map<int, FreeModuleMap> phi_tilde, const RingElem& x,
                                const RingElem& y, const std::vector<RingElem>& zs);

// lift -> build_psi -> build_phi -> reduce, with the exact-pair hypothesis
// checked up front.
OperatorBundle operator_pipeline(const ComplexPtr& F, const RingPtr& S, const RingElem& x,
                                 const RingElem& y, const std::vector<RingElem>& zs,
                                 LiftPolicy policy, uint64_t seed = 0);

}  // namespace ezdop
