#include "hurwitz/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace hurwitz {

std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

namespace {

BigInt parse_integer(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer");
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("malformed integer: " + std::string(text));
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("malformed integer: " + std::string(text));
    return BigInt(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(num, den);
}

BigInt factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i)
        result *= i;
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt multinomial(int n, std::span<const int> parts) {
    if (n < 0)
        return 0;
    long long total = 0;
    for (int p : parts) {
        if (p < 0)
            return 0;
        total += p;
    }
    if (total != n)
        return 0;
    BigInt result = factorial(n);
    for (int p : parts)
        result /= factorial(p);
    return result;
}

BigInt power(const BigInt& base, int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    BigInt result = 1;
    for (int i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

}  // namespace hurwitz
