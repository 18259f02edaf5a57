#include "divisor_series/series.hpp"

#include "divisor_series/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace divisor_series {

bool GradedLexVec::operator()(const ExpVec& a, const ExpVec& b) const {
    long long da = std::accumulate(a.begin(), a.end(), 0LL);
    long long db = std::accumulate(b.begin(), b.end(), 0LL);
    if (da != db) return da < db;
    return a < b;
}

namespace {

void check_exponent(const ExpVec& m, int arity) {
    if (static_cast<int>(m.size()) != arity)
        throw invalid_input_error("product form: exponent vector arity mismatch");
    bool all_zero = true;
    for (long long v : m) {
        if (v < 0) throw invalid_input_error("product form: negative exponent component");
        if (v != 0) all_zero = false;
    }
    if (all_zero) throw invalid_input_error("product form: zero exponent vector factor");
}

std::string exponent_string(const ExpVec& e) {
    std::ostringstream out;
    bool printed = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) out << "*";
        out << "t" << (e.size() > 1 ? std::to_string(i + 1) : "");
        if (e[i] != 1) out << "^" << e[i];
        printed = true;
    }
    if (!printed) out << "1";
    return out.str();
}

} // namespace

void ProductForm::push(const ExpVec& m, long long e) {
    check_exponent(m, arity_);
    if (e == 0) return;
    auto [it, inserted] = factors_.emplace(m, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

std::string ProductForm::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, e] : factors_) {
        if (!first) out << " * ";
        first = false;
        out << "(1 - " << exponent_string(m) << ")";
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

TruncatedSeries TruncatedSeries::one(int arity, long long bound) {
    TruncatedSeries s(arity, bound);
    s.add(ExpVec(static_cast<std::size_t>(arity), 0), 1);
    return s;
}

Int TruncatedSeries::coeff(const ExpVec& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add(const ExpVec& e, const Int& c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != arity_)
        throw invalid_input_error("series: exponent arity mismatch");
    for (long long v : e)
        if (v < 0 || v > bound_) return;
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

std::string TruncatedSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        Int a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool constant = std::all_of(e.begin(), e.end(), [](long long v) { return v == 0; });
        if (a != 1 || constant) {
            out << a.str();
            if (!constant) out << "*";
        }
        if (!constant) out << exponent_string(e);
    }
    return out.str();
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.arity() != b.arity()) throw invalid_input_error("series multiply: arity mismatch");
    TruncatedSeries r(a.arity(), std::min(a.bound(), b.bound()));
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) {
            ExpVec e(ea.size());
            bool inside = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > r.bound()) {
                    inside = false;
                    break;
                }
            }
            if (inside) r.add(e, ca * cb);
        }
    return r;
}

TruncatedSeries expand(const ProductForm& form, long long bound) {
    TruncatedSeries result = TruncatedSeries::one(form.arity(), bound);
    for (const auto& [m, e] : form.factors()) {
        long long max_k = std::numeric_limits<long long>::max();
        for (long long v : m)
            if (v > 0) max_k = std::min(max_k, bound / v);

        TruncatedSeries factor(form.arity(), bound);
        if (e < 0) {
            // (1 - u)^{-s} = sum C(k+s-1, s-1) u^k
            long long s = -e;
            for (long long k = 0; k <= max_k; ++k) {
                ExpVec exp(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) exp[i] = k * m[i];
                factor.add(exp, binomial(k + s - 1, s - 1));
            }
        } else {
            for (long long k = 0; k <= std::min(e, max_k); ++k) {
                ExpVec exp(m.size());
                for (std::size_t i = 0; i < m.size(); ++i) exp[i] = k * m[i];
                Int c = binomial(e, k);
                factor.add(exp, k % 2 == 0 ? c : -c);
            }
        }
        result = multiply(result, factor);
    }
    return result;
}

bool equal_in_box(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.arity() != b.arity()) throw invalid_input_error("equal_in_box: arity mismatch");
    long long bound = std::min(a.bound(), b.bound());
    auto in_box = [bound](const ExpVec& e) {
        return std::all_of(e.begin(), e.end(), [bound](long long v) { return v <= bound; });
    };
    for (const auto& [e, c] : a.coeffs())
        if (in_box(e) && b.coeff(e) != c) return false;
    for (const auto& [e, c] : b.coeffs())
        if (in_box(e) && a.coeff(e) != c) return false;
    return true;
}

TruncatedSeries grid_sum_identity(const ExpVec& m, int s, long long bound) {
    if (s < 1) throw invalid_input_error("grid_sum_identity: s must be >= 1");
    check_exponent(m, static_cast<int>(m.size()));

    long long max_sum = std::numeric_limits<long long>::max();
    for (long long v : m)
        if (v > 0) max_sum = std::min(max_sum, bound / v);

    TruncatedSeries result(static_cast<int>(m.size()), bound);
    std::vector<long long> tuple(static_cast<std::size_t>(s), 0);
    std::function<void(std::size_t, long long)> enumerate = [&](std::size_t pos, long long sum) {
        if (pos == tuple.size()) {
            if (std::all_of(tuple.begin(), tuple.end(), [](long long l) { return l > 0; })) return;
            ExpVec e(m.size());
            for (std::size_t i = 0; i < m.size(); ++i) e[i] = sum * m[i];
            result.add(e, 1);
            return;
        }
        for (long long l = 0; sum + l <= max_sum; ++l) {
            tuple[pos] = l;
            enumerate(pos + 1, sum + l);
        }
    };
    enumerate(0, 0);
    return result;
}

} // namespace divisor_series
