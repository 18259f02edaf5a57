#include "divisor_series/laurent.hpp"

#include <sstream>

namespace divisor_series {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exp2, Rat>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Exp2 e, const Rat& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

Rat LaurentPoly::coeff(Exp2 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(Exp2 e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e.x < 0 || e.y < 0) return false;
    return true;
}

long long LaurentPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // graded-lex map: last key has the maximal grade
    auto last = std::prev(terms_.end());
    return last->first.x + last->first.y;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::derivative_y() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.y == 0) continue;
        r.add_term({e.x, e.y - 1}, c * Rat(e.y));
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
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
        bool has_vars = e.x != 0 || e.y != 0;
        if (a != 1 || !has_vars) {
            out << format_rational(a);
            if (has_vars) out << "*";
        }
        if (e.x != 0) {
            out << "x";
            if (e.x != 1) out << "^" << e.x;
        }
        if (e.y != 0) {
            if (e.x != 0) out << "*";
            out << "y";
            if (e.y != 1) out << "^" << e.y;
        }
    }
    return out.str();
}

} // namespace divisor_series
