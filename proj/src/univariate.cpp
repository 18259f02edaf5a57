#include "divisor_series/univariate.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>

namespace divisor_series {

Poly1::Poly1(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly1 Poly1::constant(const Rat& c) { return Poly1({c}); }

void Poly1::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly1::leading() const {
    if (coeffs_.empty()) throw invalid_input_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

void Poly1::set_coeff(std::size_t i, const Rat& c) {
    if (i >= coeffs_.size()) {
        if (c == 0) return;
        coeffs_.resize(i + 1, Rat(0));
    }
    coeffs_[i] = c;
    normalize();
}

Poly1 Poly1::operator+(const Poly1& other) const {
    std::vector<Rat> r(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r[i] += other.coeffs_[i];
    return Poly1(std::move(r));
}

Poly1 Poly1::operator-(const Poly1& other) const {
    std::vector<Rat> r(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r[i] -= other.coeffs_[i];
    return Poly1(std::move(r));
}

Poly1 Poly1::operator*(const Poly1& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return Poly1();
    std::vector<Rat> r(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
    return Poly1(std::move(r));
}

Rat Poly1::eval(const Rat& w) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

Poly1 Poly1::derivative() const {
    if (coeffs_.size() <= 1) return Poly1();
    std::vector<Rat> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Rat(static_cast<long long>(i));
    return Poly1(std::move(r));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& divisor) const {
    if (divisor.is_zero()) throw invalid_input_error("polynomial division by zero");
    Poly1 rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly1(), rem};
    std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rat(0));
    const Rat lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        long long shift = rem.degree() - divisor.degree();
        Rat factor = rem.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rat> sub(rem.coeffs_);
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            sub[i + static_cast<std::size_t>(shift)] -= factor * divisor.coeffs_[i];
        rem = Poly1(std::move(sub));
    }
    return {Poly1(std::move(q)), rem};
}

std::optional<Poly1> Poly1::divide_exact(const Poly1& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly1 Poly1::gcd(Poly1 a, Poly1 b) {
    while (!b.is_zero()) {
        Poly1 r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rat lead = a.leading();
        std::vector<Rat> c = a.coeffs_;
        for (auto& x : c) x /= lead;
        a = Poly1(std::move(c));
    }
    return a;
}

bool Poly1::is_squarefree() const {
    if (is_zero()) return false;
    if (degree() == 0) return true;
    return gcd(*this, derivative()).degree() == 0;
}

namespace {

std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace

std::vector<std::pair<Rat, int>> Poly1::rational_roots() const {
    if (is_zero()) throw invalid_input_error("rational_roots of zero polynomial");
    std::vector<std::pair<Rat, int>> roots;

    Poly1 p = *this;
    // strip a power of w: w = 0 roots
    std::size_t zero_mult = 0;
    while (!p.coeffs_.empty() && p.coeffs_.front() == 0) {
        p.coeffs_.erase(p.coeffs_.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rat(0), static_cast<int>(zero_mult));
    if (p.degree() <= 0) return roots;

    // integer model: p scaled by the lcm of denominators has the same roots
    Int den_lcm = 1;
    for (const auto& c : p.coeffs_)
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    std::vector<Int> ic(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        Rat scaled = p.coeffs_[i] * Rat(den_lcm);
        ic[i] = boost::multiprecision::numerator(scaled);
    }

    std::vector<Rat> candidates;
    for (const Int& num : positive_divisors(ic.front()))
        for (const Int& den : positive_divisors(ic.back())) {
            Rat c(num, den);
            candidates.push_back(c);
            candidates.push_back(-c);
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rat& cand : candidates) {
        int mult = 0;
        while (!p.is_zero() && p.degree() >= 1 && p.eval(cand) == 0) {
            Poly1 lin({-cand, Rat(1)});
            p = *p.divide_exact(lin);
            ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
    }
    return roots;
}

} // namespace divisor_series
