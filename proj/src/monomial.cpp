#include "ezdop/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ezdop {

Monomial Monomial::var(int nvars, int index, int32_t power) {
    std::vector<int32_t> e(nvars, 0);
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    e[index] = power;
    return Monomial(std::move(e));
}

int64_t Monomial::total_degree() const {
    int64_t d = 0;
    for (int32_t x : e_) d += x;
    return d;
}

int64_t Monomial::weighted_degree(std::span<const int> weights) const {
    int64_t d = 0;
    for (size_t i = 0; i < e_.size(); ++i) d += static_cast<int64_t>(e_[i]) * weights[i];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    if (e_.size() != other.e_.size()) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<int32_t> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + other.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& other) const {
    std::vector<int32_t> e(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
        e[i] = e_[i] - other.e_[i];
        if (e[i] < 0) throw std::invalid_argument("monomial division with negative exponent");
    }
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<int32_t> e(a.e_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.e_[i], b.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
}

}  // namespace ezdop
