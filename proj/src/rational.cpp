#include "hyperflow/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hyperflow {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer(num)) {
        throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
    }
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(std::string(num));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!valid_integer(den)) {
            throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
        }
        v = mpq_class(std::string(text));
        if (sgn(v.get_den()) == 0) {
            throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
        }
        v.canonicalize();
    }
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    mpq_class r = -v_;
    return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned exponent) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), exponent);
    return Rational(std::move(r));  // powers of a canonical fraction stay canonical
}

Rational Rational::abs() const {
    mpq_class r = ::abs(v_);
    return Rational(std::move(r));
}

bool Rational::is_canonical() const {
    if (sgn(v_.get_den()) <= 0) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return g == 1;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hyperflow
