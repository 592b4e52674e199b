#include "xray/bigint.hpp"

#include <cctype>
#include <cstddef>

#include "xray/errors.hpp"

namespace xray {

BigInt binomial(long long n, long long k) {
    if (n < 0) fail(Errc::parse_error, "binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

BigInt factorial(long long n) {
    if (n < 0) fail(Errc::parse_error, "factorial requires n >= 0");
    BigInt result = 1;
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt ipow(const BigInt& base, unsigned long long exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

namespace {

bool parse_integer_token(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = BigInt(s);
    return true;
}

}  // namespace

Rational parse_rational(const std::string& token) {
    std::size_t slash = token.find('/');
    if (slash == std::string::npos) {
        BigInt p;
        if (!parse_integer_token(token, p))
            fail(Errc::parse_error, "expected integer or p/q, got '" + token + "'");
        return Rational(p);
    }
    BigInt p, q;
    if (!parse_integer_token(token.substr(0, slash), p) ||
        !parse_integer_token(token.substr(slash + 1), q))
        fail(Errc::parse_error, "expected integer or p/q, got '" + token + "'");
    if (q == 0) fail(Errc::parse_error, "zero denominator in '" + token + "'");
    return Rational(p, q);
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace xray
