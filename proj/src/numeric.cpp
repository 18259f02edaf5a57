#include "divisor_series/numeric.hpp"

#include "divisor_series/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace divisor_series {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step
    }
    return result;
}

Int int_nth_root(const Int& a, int n) {
    if (a < 0) throw invalid_input_error("int_nth_root: negative radicand");
    if (n <= 0) throw invalid_input_error("int_nth_root: order must be positive");
    if (n == 1 || a <= 1) return a;
    Int lo = 0, hi = a;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(n)) <= a)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::optional<Rat> rational_nth_root(const Rat& q, int n) {
    if (n <= 0) throw invalid_input_error("rational_nth_root: order must be positive");
    if (q == 0) return Rat(0);
    bool negative = q < 0;
    if (negative && n % 2 == 0) return std::nullopt;
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    if (negative) num = -num;
    Int rn = int_nth_root(num, n);
    Int rd = int_nth_root(den, n);
    if (boost::multiprecision::pow(rn, static_cast<unsigned>(n)) != num) return std::nullopt;
    if (boost::multiprecision::pow(rd, static_cast<unsigned>(n)) != den) return std::nullopt;
    Rat root(rn, rd);
    return negative ? -root : root;
}

Rat parse_rational(const std::string& text) {
    auto fail = [&]() -> Rat {
        throw invalid_input_error("cannot parse rational from \"" + text + "\"");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos >= text.size()) return fail();

    auto read_digits = [&](std::string& out) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out.push_back(text[pos++]);
    };

    std::string whole;
    read_digits(whole);
    if (whole.empty()) return fail();

    Rat value;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string den;
        read_digits(den);
        if (den.empty() || pos != text.size()) return fail();
        Int d{den};
        if (d == 0) return fail();
        value = Rat(Int(whole), d);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac;
        read_digits(frac);
        if (frac.empty() || pos != text.size()) return fail();
        Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(frac.size()));
        value = Rat(Int(whole) * scale + Int(frac), scale);
    } else {
        if (pos != text.size()) return fail();
        value = Rat(Int(whole));
    }
    return negative ? -value : value;
}

std::string format_rational(const Rat& q) {
    Int num = boost::multiprecision::numerator(q);
    Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace divisor_series
