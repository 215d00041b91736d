#include "ezdop/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ezdop {

std::optional<Rational> parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) return std::nullopt;
    if (q.get_den() <= 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

void Polynomial::require_same_ring(const Polynomial& other) const {
    if (!ring_ || !other.ring_ || !ring_->same_as(*other.ring_))
        throw std::invalid_argument("polynomial: ambient ring mismatch");
}

Polynomial Polynomial::zero(PolyRingPtr ring) {
    return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(PolyRingPtr ring, Rational c) {
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), Monomial::one(ring->nvars())});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(PolyRingPtr ring, int index) {
    Monomial m = Monomial::var(ring->nvars(), index);
    return Polynomial(ring, {{Rational(1), std::move(m)}});
}

Polynomial Polynomial::monomial(PolyRingPtr ring, Rational c, Monomial m) {
    if (m.nvars() != ring->nvars())
        throw std::invalid_argument("monomial length does not match ring");
    std::vector<Term> t;
    if (c != 0) t.push_back({std::move(c), std::move(m)});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    const TermOrder& ord = ring->order();
    for (const Term& t : terms)
        if (t.mono.nvars() != ring->nvars())
            throw std::invalid_argument("term monomial length does not match ring");
    std::sort(terms.begin(), terms.end(), [&ord](const Term& a, const Term& b) {
        return ord.greater(a.mono, b.mono);
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    require_same_ring(other);
    const TermOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        Ordering c = ord.compare(terms_[i].mono, other.terms_[j].mono);
        if (c == Ordering::GT) {
            out.push_back(terms_[i++]);
        } else if (c == Ordering::LT) {
            out.push_back(other.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + other.terms_[j].coeff;
            if (s != 0) out.push_back({std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) out.push_back(other.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = -t.coeff;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.coeff * c, t.mono * m});
    // Multiplying by a fixed monomial preserves strict descending order.
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_ring(other);
    if (is_zero() || other.is_zero()) return zero(ring_);
    // Merge the shorter operand's term-shifts of the longer one.
    const Polynomial& big = terms_.size() >= other.terms_.size() ? *this : other;
    const Polynomial& small = terms_.size() >= other.terms_.size() ? other : *this;
    Polynomial acc = zero(ring_);
    for (const Term& t : small.terms_) acc = acc + big.mul_term(t.coeff, t.mono);
    return acc;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff *= c;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial acc = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!ring_ || !other.ring_) return terms_.empty() && other.terms_.empty();
    if (!ring_->same_as(*other.ring_)) return false;
    if (terms_.size() != other.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

std::optional<int64_t> Polynomial::total_weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    int64_t d = ring_->degree(terms_[0].mono);
    for (const Term& t : terms_) d = std::max(d, ring_->degree(t.mono));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int64_t d = ring_->degree(terms_[0].mono);
    for (const Term& t : terms_)
        if (ring_->degree(t.mono) != d) return false;
    return true;
}

std::optional<int64_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    if (!is_homogeneous()) return std::nullopt;
    return ring_->degree(terms_[0].mono);
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_monomial(std::ostream& os, const PolyRing& ring, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (int i = 0; i < ring.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << ring.names()[i];
        if (m[i] != 1) os << '^' << m[i];
    }
}

}  // namespace

std::string Polynomial::str() const {
    if (!ring_) return "0";
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? '-' : '+');
            if (c < 0) c = -c;
        }
        first = false;
        if (t.mono.is_one()) {
            os << to_string(c);
        } else if (c == 1) {
            print_monomial(os, *ring_, t.mono, false);
        } else {
            os << to_string(c);
            print_monomial(os, *ring_, t.mono, true);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT ['/' INT] | VAR ['^' INT]

namespace {

struct PolyParser {
    PolyRingPtr ring;
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string read_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::string(text.substr(start, pos - start));
    }

    Polynomial parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of polynomial");
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = read_int();
            Rational q(num);
            if (eat('/')) {
                std::string den = read_int();
                Rational d(den);
                if (d == 0) fail("zero denominator");
                q /= d;
            }
            q.canonicalize();
            return Polynomial::constant(ring, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            int idx = ring->var_index(name);
            if (idx < 0) {
                pos = start;
                fail("unknown variable '" + name + "'");
            }
            int e = 1;
            if (eat('^')) {
                std::string es = read_int();
                e = std::stoi(es);
            }
            return Polynomial::monomial(ring, Rational(1), Monomial::var(ring->nvars(), idx, e));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (eat('*')) p = p * parse_factor();
        return p;
    }

    Polynomial parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return acc;
    }
};

}  // namespace

Polynomial Polynomial::parse(PolyRingPtr ring, std::string_view text) {
    PolyParser p{std::move(ring), text};
    p.skip_ws();
    if (p.pos >= text.size()) throw ParseError("empty polynomial", 1, 1);
    // "0" parses to the zero polynomial via the constant path.
    return p.parse_expr();
}

}  // namespace ezdop
