#include "ezdop/term_order.hpp"

#include <numeric>
#include <stdexcept>

namespace ezdop {

namespace {

int32_t exp_at(const Monomial& m, const std::vector<int>& perm, int i) {
    return perm.empty() ? m[i] : m[perm[i]];
}

// grevlex on the slot range [lo, hi): higher total degree wins; on equal
// degree the monomial with the smaller exponent in the last differing slot
// wins.
Ordering grevlex_range(const Monomial& a, const Monomial& b,
                       const std::vector<int>& perm, int lo, int hi) {
    int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += exp_at(a, perm, i);
        db += exp_at(b, perm, i);
    }
    if (da != db) return da < db ? Ordering::LT : Ordering::GT;
    for (int i = hi - 1; i >= lo; --i) {
        int32_t d = exp_at(a, perm, i) - exp_at(b, perm, i);
        if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

Ordering lex_range(const Monomial& a, const Monomial& b,
                   const std::vector<int>& perm, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
        int32_t d = exp_at(a, perm, i) - exp_at(b, perm, i);
        if (d != 0) return d < 0 ? Ordering::LT : Ordering::GT;
    }
    return Ordering::EQ;
}

}  // namespace

TermOrder TermOrder::with_permutation(std::vector<int> perm) const {
    TermOrder t = *this;
    t.perm_ = std::move(perm);
    return t;
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("term order: monomial length mismatch");
    const int n = a.nvars();
    switch (kind_) {
        case Kind::Grevlex:
            return grevlex_range(a, b, perm_, 0, n);
        case Kind::Lex:
            return lex_range(a, b, perm_, 0, n);
        case Kind::Block: {
            if (block_ < 0 || block_ > n)
                throw std::invalid_argument("term order: block size out of range");
            Ordering first = grevlex_range(a, b, perm_, 0, block_);
            if (first != Ordering::EQ) return first;
            return grevlex_range(a, b, perm_, block_, n);
        }
    }
    return Ordering::EQ;
}

bool TermOrder::equal_order(const TermOrder& other) const {
    return kind_ == other.kind_ && block_ == other.block_ && perm_ == other.perm_;
}

}  // namespace ezdop
