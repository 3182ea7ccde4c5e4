#include "hyperflow/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperflow {

namespace {

const Polynomial& zero_polynomial() {
    static const Polynomial zero;
    return zero;
}

std::optional<int> min_high(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace

LaurentSeries LaurentSeries::zero_truncated(int low, int high) {
    if (high < low) throw std::domain_error("LaurentSeries: empty validity window");
    return LaurentSeries(low, high);
}

LaurentSeries LaurentSeries::exact_zero() { return LaurentSeries(0, std::nullopt); }

LaurentSeries LaurentSeries::exact_term(int exponent, Polynomial coeff) {
    LaurentSeries s(exponent, std::nullopt);
    if (!coeff.is_zero()) s.coeff_.emplace(exponent, std::move(coeff));
    return s;
}

const Polynomial& LaurentSeries::at(int n) const {
    if (high_ && n > *high_) {
        throw std::out_of_range("LaurentSeries: coefficient of xi^" + std::to_string(n) +
                                " lies beyond the truncation order " + std::to_string(*high_));
    }
    const auto it = coeff_.find(n);
    return it == coeff_.end() ? zero_polynomial() : it->second;
}

LaurentSeries& LaurentSeries::set(int exponent, Polynomial coeff) {
    if (high_ && exponent > *high_) {
        throw std::out_of_range("LaurentSeries: exponent beyond the truncation order");
    }
    low_ = std::min(low_, exponent);
    if (coeff.is_zero()) {
        coeff_.erase(exponent);
    } else {
        coeff_.insert_or_assign(exponent, std::move(coeff));
    }
    return *this;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries out(std::min(a.low_, b.low_), min_high(a.high_, b.high_));
    for (const auto& [n, c] : a.coeff_) {
        if (out.high_ && n > *out.high_) continue;
        out.coeff_.emplace(n, c);
    }
    for (const auto& [n, c] : b.coeff_) {
        if (out.high_ && n > *out.high_) continue;
        const auto [it, inserted] = out.coeff_.try_emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.coeff_.erase(it);
        }
    }
    return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    std::optional<int> high;
    if (a.high_ && b.high_) {
        high = std::min(*a.high_ + b.low_, *b.high_ + a.low_);
    } else if (a.high_) {
        high = *a.high_ + b.low_;
    } else if (b.high_) {
        high = *b.high_ + a.low_;
    }
    const int low = a.low_ + b.low_;
    if (high && *high < low) {
        throw std::domain_error("LaurentSeries: product has an empty validity window");
    }
    LaurentSeries out(low, high);
    for (const auto& [na, ca] : a.coeff_) {
        for (const auto& [nb, cb] : b.coeff_) {
            const int n = na + nb;
            if (out.high_ && n > *out.high_) continue;
            Polynomial prod = ca * cb;
            const auto it = out.coeff_.find(n);
            if (it == out.coeff_.end()) {
                out.coeff_.emplace(n, std::move(prod));
            } else {
                it->second += prod;
                if (it->second.is_zero()) out.coeff_.erase(it);
            }
        }
    }
    return out;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries out(low_, high_);
    for (const auto& [n, c] : coeff_) out.coeff_.emplace(n, -c);
    return out;
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries out(low_, high_);
    if (c.is_zero()) return out;
    for (const auto& [n, p] : coeff_) out.coeff_.emplace(n, p.scaled(c));
    return out;
}

LaurentSeries LaurentSeries::shifted(int d) const {
    LaurentSeries out(low_ + d, high_ ? std::optional<int>(*high_ + d) : std::nullopt);
    for (const auto& [n, c] : coeff_) out.coeff_.emplace(n + d, c);
    return out;
}

LaurentSeries b_series(int row, int order) {
    if (row < 1 || row > 3) throw std::invalid_argument("b_series: row must be 1, 2 or 3");
    if (order < 1) throw std::invalid_argument("b_series: order must be >= 1");
    LaurentSeries s = LaurentSeries::zero_truncated(1, order);
    for (int j = 1; j <= order; ++j) {
        s.set(j, Polynomial::coordinate(Coordinate(row, 2 * j - 1)));
    }
    return s;
}

LaurentSeries apply_derivation_series(const Derivation& d, const LaurentSeries& s) {
    LaurentSeries out =
        s.high() ? LaurentSeries::zero_truncated(s.low(), *s.high()) : LaurentSeries::exact_zero();
    for (const auto& [n, c] : s.coefficients()) {
        Polynomial img = d.apply(c);
        if (!img.is_zero()) out.set(n, std::move(img));
    }
    return out;
}

SeriesComparison compare_series(const LaurentSeries& a, const LaurentSeries& b) {
    SeriesComparison result;
    result.from = std::min(a.low(), b.low());
    const std::optional<int> high = min_high(a.high(), b.high());
    if (high) {
        result.to = *high;
    } else {
        // both exact: compare everything either side stores
        int to = result.from - 1;
        if (!a.coefficients().empty()) to = std::max(to, a.coefficients().rbegin()->first);
        if (!b.coefficients().empty()) to = std::max(to, b.coefficients().rbegin()->first);
        result.to = to;
    }
    for (int n = result.from; n <= result.to; ++n) {
        Polynomial diff = a.at(n) - b.at(n);
        if (!diff.is_zero()) result.mismatches.push_back({n, std::move(diff)});
    }
    return result;
}

}  // namespace hyperflow
