#pragma once

#include <vector>

#include "ezdop/monomial.hpp"

namespace ezdop {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

// Total multiplicative well-order on monomials of a fixed ambient ring.
// Kinds:
//   grevlex  - graded reverse lexicographic (default everywhere)
//   lex      - pure lexicographic
//   block(k) - eliminates the first k variables: grevlex on the first block,
//              ties broken by grevlex on the rest
// An optional variable permutation is applied before comparison: slot i of
// the compared vector is exponent of variable perm[i].
class TermOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0); }
    static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
    static TermOrder elimination_block(int first_block_vars) {
        return TermOrder(Kind::Block, first_block_vars);
    }

    TermOrder with_permutation(std::vector<int> perm) const;

    Kind kind() const { return kind_; }
    int block_size() const { return block_; }
    const std::vector<int>& permutation() const { return perm_; }

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::LT;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::GT;
    }
    bool equal_order(const TermOrder& other) const;

private:
    TermOrder(Kind k, int block) : kind_(k), block_(block) {}

    Kind kind_;
    int block_;
    std::vector<int> perm_;  // empty = identity
};

}  // namespace ezdop
