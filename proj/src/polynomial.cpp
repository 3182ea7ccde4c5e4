#include "hyperflow/polynomial.hpp"

#include <cassert>
#include <stdexcept>

namespace hyperflow {

void Assignment::set(Coordinate c, Rational value) {
    if (value.is_zero()) {
        values_.erase(c);
    } else {
        values_.insert_or_assign(c, std::move(value));
    }
}

Rational Assignment::get(Coordinate c) const {
    const auto it = values_.find(c);
    return it == values_.end() ? Rational() : it->second;
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(Monomial(), std::move(c));
    return p;
}

Polynomial Polynomial::coordinate(Coordinate c) {
    Polynomial p;
    p.terms_.emplace(Monomial::coordinate(c), Rational(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

int Polynomial::max_index() const {
    int m = 0;
    for (const auto& [mono, coeff] : terms_) m = std::max(m, mono.max_index());
    return m;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    const auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    assert(is_canonical());
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    assert(is_canonical());
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    assert(out.is_canonical());
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

Rational Polynomial::evaluate(const Assignment& at) const {
    Rational total;
    for (const auto& [m, coeff] : terms_) {
        Rational value = coeff;
        for (const auto& [c, e] : m.factors()) {
            const Rational x = at.get(c);
            if (x.is_zero()) {
                value = Rational();
                break;
            }
            value *= x.pow(static_cast<unsigned>(e));
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::derive(const std::function<Polynomial(const Coordinate&)>& image) const {
    Polynomial out;
    for (const auto& [m, coeff] : terms_) {
        for (const auto& [c, e] : m.factors()) {
            const Polynomial dc = image(c);
            if (dc.is_zero()) continue;
            const Monomial rest = m.divided_by_one(c);
            const Rational factor = coeff * Rational(e);
            for (const auto& [dm, dcoeff] : dc.terms()) {
                out.add_term(rest.times(dm), dcoeff * factor);
            }
        }
    }
    assert(out.is_canonical());
    return out;
}

Homogeneity Polynomial::homogeneity() const {
    if (terms_.empty()) return Homogeneity{Homogeneity::Kind::zero, 0};
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_) {
        if (m.weight() != w) return Homogeneity{Homogeneity::Kind::inhomogeneous, 0};
    }
    return Homogeneity{Homogeneity::Kind::graded, w};
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational a = c.abs();
        if (m.is_unit()) {
            out += a.str();
        } else if (a.is_one()) {
            out += m.str();
        } else {
            out += a.str() + "*" + m.str();
        }
    }
    return out;
}

bool Polynomial::is_canonical() const {
    for (const auto& [m, c] : terms_) {
        if (c.is_zero() || !c.is_canonical()) return false;
    }
    return true;
}

}  // namespace hyperflow
