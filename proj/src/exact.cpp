#include "permcodes/exact.hpp"

#include <cctype>
#include <cstdlib>

#include "permcodes/errors.hpp"

namespace permcodes {

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt floor(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt ceil(const Rational& x) {
    return -floor(-x);
}

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    return Rational(num, den);
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    const BigInt den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

std::string format_significant(const Rational& x, int digits) {
    if (digits < 1) digits = 1;
    if (x == 0) return "0";
    const bool negative = x < 0;
    const Rational a = negative ? Rational(-x) : x;

    const BigInt num = boost::multiprecision::numerator(a);
    const BigInt den = boost::multiprecision::denominator(a);
    int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
    auto pow10 = [](int k) -> Rational {
        if (k >= 0) return Rational(ipow(BigInt(10), static_cast<unsigned>(k)));
        return Rational(BigInt(1), ipow(BigInt(10), static_cast<unsigned>(-k)));
    };
    while (pow10(e) > a) --e;
    while (pow10(e + 1) <= a) ++e;

    BigInt scaled = floor(a * pow10(digits - 1 - e) + Rational(1, 2));
    if (scaled == ipow(BigInt(10), static_cast<unsigned>(digits))) {
        scaled /= 10;
        ++e;
    }
    const std::string s = scaled.str();

    std::string out;
    if (e >= -5 && e < 15) {
        if (e >= digits - 1) {
            out = s + std::string(static_cast<std::size_t>(e - digits + 1), '0');
        } else if (e >= 0) {
            out = s.substr(0, static_cast<std::size_t>(e) + 1) + "." +
                  s.substr(static_cast<std::size_t>(e) + 1);
        } else {
            out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
        }
    } else {
        out = s.substr(0, 1);
        if (s.size() > 1) out += "." + s.substr(1);
        const int mag = e < 0 ? -e : e;
        out += std::string("e") + (e < 0 ? "-" : "+") + (mag < 10 ? "0" : "") + std::to_string(mag);
    }
    return negative ? "-" + out : out;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&text]() { return ParameterError("not a rational number: '" + text + "'"); };
    auto parse_int = [&](const std::string& s) -> BigInt {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw bad();
        BigInt v(s.substr(i));
        return s[0] == '-' ? BigInt(-v) : v;
    };
    if (text.empty()) throw bad();
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw bad();
        return make_rational(parse_int(text.substr(0, slash)), den);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        std::string whole = text.substr(0, dot);
        const bool negative = !whole.empty() && whole[0] == '-';
        if (whole.empty() || whole == "-" || whole == "+") whole += "0";
        if (frac.empty()) throw bad();
        BigInt w = parse_int(whole);
        if (w < 0) w = -w;
        const BigInt f = parse_int(frac);
        if (f < 0) throw bad();
        const BigInt scale = ipow(BigInt(10), static_cast<unsigned>(frac.size()));
        Rational r = make_rational(w * scale + f, scale);
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_int(text));
}

} // namespace permcodes
