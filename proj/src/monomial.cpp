#include "hyperflow/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperflow {

Monomial Monomial::coordinate(Coordinate c, int exponent) {
    if (exponent <= 0) throw std::invalid_argument("Monomial: exponent must be positive");
    Monomial m;
    m.factors_.emplace_back(c, exponent);
    m.weight_ = exponent * c.weight();
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [c, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(Coordinate c) const {
    const auto it = std::lower_bound(
        factors_.begin(), factors_.end(), c,
        [](const Factor& f, const Coordinate& key) { return f.first < key; });
    return (it != factors_.end() && it->first == c) ? it->second : 0;
}

int Monomial::max_index() const {
    int m = 0;
    for (const auto& [c, e] : factors_) m = std::max(m, c.index);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    out.weight_ = weight_ + other.weight_;
    return out;
}

Monomial Monomial::divided_by_one(Coordinate c) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    bool found = false;
    for (const auto& f : factors_) {
        if (!found && f.first == c) {
            found = true;
            if (f.second > 1) out.factors_.emplace_back(f.first, f.second - 1);
        } else {
            out.factors_.push_back(f);
        }
    }
    if (!found) throw std::invalid_argument("Monomial: coordinate not present in divided_by_one");
    out.weight_ = weight_ - c.weight();
    return out;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [c, e] : factors_) {
        if (!out.empty()) out += "*";
        out += c.str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    auto ia = a.factors().rbegin();
    auto ib = b.factors().rbegin();
    const auto ea = a.factors().rend();
    const auto eb = b.factors().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (ia->first != ib->first) return ib->first < ia->first;
        if (ia->second != ib->second) return ia->second > ib->second;
    }
    // equal weight rules out one factor list being a strict prefix of the other
    return ia != ea;
}

}  // namespace hyperflow
