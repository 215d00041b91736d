#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ezdop/monomial.hpp"
#include "ezdop/term_order.hpp"

namespace ezdop {

class PolyRing;
using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Ambient free polynomial ring: named variables with positive integer
// degrees and a term order. Immutable; shared by every polynomial.
class PolyRing {
public:
    static PolyRingPtr create(std::vector<std::string> names,
                              std::vector<int> degrees,
                              TermOrder order = TermOrder::grevlex());
    // All variables of degree 1.
    static PolyRingPtr create(std::vector<std::string> names,
                              TermOrder order = TermOrder::grevlex());

    int nvars() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const TermOrder& order() const { return order_; }

    int64_t degree(const Monomial& m) const;  // weighted by variable degrees
    int var_index(const std::string& name) const;  // -1 when absent

    bool same_as(const PolyRing& other) const;

    // All monomials of exact weighted degree d, sorted descending in the
    // ring order. Finite because the grading is positive.
    std::vector<Monomial> monomials_of_degree(int64_t d) const;

    // Ring with one fresh variable prepended (used for elimination).
    // Returns the new ring; old variable i becomes variable i+1.
    PolyRingPtr prepend_variable(const std::string& name, int degree,
                                 TermOrder order) const;

private:
    PolyRing(std::vector<std::string> names, std::vector<int> degrees, TermOrder order);

    std::vector<std::string> names_;
    std::vector<int> degrees_;
    TermOrder order_;
};

}  // namespace ezdop
