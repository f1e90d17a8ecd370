#include "definetti/rational.hpp"

#include <cctype>
#include <numeric>

namespace definetti {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact: r is a product of i+1 consecutive integers over (i+1)!
    }
    return r;
}

Int multinomial(unsigned n, const std::vector<int>& parts) {
    unsigned rem = n;
    Int r = 1;
    for (int p : parts) {
        if (p < 0 || static_cast<unsigned>(p) > rem)
            throw std::invalid_argument("multinomial: parts must be nonnegative and sum to n");
        r *= binomial(rem, static_cast<unsigned>(p));
        rem -= static_cast<unsigned>(p);
    }
    if (rem != 0) throw std::invalid_argument("multinomial: parts must sum to n");
    return r;
}

Int int_pow(const Int& base, unsigned exp) {
    Int r = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1u) r *= b;
        exp >>= 1u;
        if (exp != 0) b *= b;
    }
    return r;
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) -> Int {
        if (s.empty()) throw std::invalid_argument("empty integer literal");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("sign without digits: '" + s + "'");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("invalid integer literal: '" + s + "'");
        return Int(s);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rat(num, den);
}

std::string rat_to_string(const Rat& value) {
    Int num = numerator(value);
    Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double rat_to_double(const Rat& value) {
    return value.convert_to<double>();
}

} // namespace definetti
