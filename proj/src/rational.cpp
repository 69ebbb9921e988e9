#include "sqcolor/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace sqc {

namespace {

void canonicalize(BigInt& num, BigInt& den) {
    if (den == 0) {
        throw BadInput("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (num == 0) {
        den = 1;
    }
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize(num_, den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize(num_, den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize(num_, den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize(num_, den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw BadInput("rational division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize(num_, den_);
    return *this;
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
    auto parse_part = [&text](const std::string& part) {
        // cpp_int accepts "" (as 0) and hex prefixes; restrict to plain
        // decimal integers with an optional sign.
        size_t digits_from = part.size() > 0 && (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (part.size() == digits_from) {
            throw BadInput("cannot parse rational '" + text + "'");
        }
        for (size_t i = digits_from; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                throw BadInput("cannot parse rational '" + text + "'");
            }
        }
        return BigInt(part);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_part(text), 1);
    }
    return Rational(parse_part(text.substr(0, slash)),
                    parse_part(text.substr(slash + 1)));
}

}  // namespace sqc
