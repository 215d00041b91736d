#include "ezdop/poly_ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace ezdop {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

PolyRing::PolyRing(std::vector<std::string> names, std::vector<int> degrees, TermOrder order)
    : names_(std::move(names)), degrees_(std::move(degrees)), order_(std::move(order)) {}

PolyRingPtr PolyRing::create(std::vector<std::string> names, std::vector<int> degrees,
                             TermOrder order) {
    if (names.size() != degrees.size())
        throw std::invalid_argument("ring: name/degree count mismatch");
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (!valid_identifier(n)) throw std::invalid_argument("ring: invalid variable name '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("ring: duplicate variable '" + n + "'");
    }
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("ring: variable degrees must be positive");
    return PolyRingPtr(new PolyRing(std::move(names), std::move(degrees), std::move(order)));
}

PolyRingPtr PolyRing::create(std::vector<std::string> names, TermOrder order) {
    std::vector<int> degs(names.size(), 1);
    return create(std::move(names), std::move(degs), std::move(order));
}

int64_t PolyRing::degree(const Monomial& m) const {
    return m.weighted_degree(degrees_);
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_as(const PolyRing& other) const {
    return names_ == other.names_ && degrees_ == other.degrees_ &&
           order_.equal_order(other.order_);
}

std::vector<Monomial> PolyRing::monomials_of_degree(int64_t d) const {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int32_t> cur(nvars(), 0);
    // Depth-first over variables; positive weights keep this finite.
    auto rec = [&](auto&& self, int var, int64_t remaining) -> void {
        if (var == nvars()) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        if (var == nvars() - 1) {
            if (remaining % degrees_[var] == 0) {
                cur[var] = static_cast<int32_t>(remaining / degrees_[var]);
                out.emplace_back(cur);
                cur[var] = 0;
            }
            return;
        }
        for (int64_t e = 0; e * degrees_[var] <= remaining; ++e) {
            cur[var] = static_cast<int32_t>(e);
            self(self, var + 1, remaining - e * degrees_[var]);
        }
        cur[var] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [this](const Monomial& a, const Monomial& b) { return order_.greater(a, b); });
    return out;
}

PolyRingPtr PolyRing::prepend_variable(const std::string& name, int degree,
                                       TermOrder order) const {
    std::vector<std::string> names;
    names.reserve(names_.size() + 1);
    names.push_back(name);
    names.insert(names.end(), names_.begin(), names_.end());
    std::vector<int> degs;
    degs.reserve(degrees_.size() + 1);
    degs.push_back(degree);
    degs.insert(degs.end(), degrees_.begin(), degrees_.end());
    return create(std::move(names), std::move(degs), std::move(order));
}

}  // namespace ezdop
