#include "gitnef/rational.hpp"

#include <cctype>
#include <ostream>

namespace gitnef {

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

namespace {

BigInt parse_digits(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("Rational: empty number");
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Rational: bad character in number");
    }
    return BigInt(std::string(s));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("Rational: empty input");
    bool neg = false;
    if (text.front() == '-') {
        neg = true;
        text.remove_prefix(1);
    }
    BigInt num, den = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        num = parse_digits(text);
    } else {
        num = parse_digits(text.substr(0, slash));
        den = parse_digits(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
    }
    if (neg)
        num = -num;
    return Rational(std::move(num), std::move(den));
}

}  // namespace gitnef
