#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ezdop {

// Exponent vector of fixed length (one slot per ambient variable).
// Comparison operators are structural (vector equality / lexicographic on
// exponents); term-order semantics live in TermOrder.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int32_t> exps) : e_(std::move(exps)) {}

    static Monomial one(int nvars) { return Monomial(std::vector<int32_t>(nvars, 0)); }
    static Monomial var(int nvars, int index, int32_t power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int32_t operator[](int i) const { return e_[i]; }
    const std::vector<int32_t>& exponents() const { return e_; }

    int64_t total_degree() const;
    int64_t weighted_degree(std::span<const int> weights) const;
    bool is_one() const;

    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    // Exact division; caller guarantees divides(*this) by other.
    Monomial operator/(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    auto operator<=>(const Monomial&) const = default;

private:
    std::vector<int32_t> e_;
};

}  // namespace ezdop
