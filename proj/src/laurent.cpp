#include "vknot/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace vknot {

void LaurentPoly::add_term(int exponent, const Coeff& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, Coeff>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int exponent, Coeff coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(int k) {
    LaurentPoly p;
    p.add_term(k, 1);
    p.add_term(0, -1);
    return p;
}

Coeff LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Coeff(0) : it->second;
}

std::optional<int> LaurentPoly::min_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly p(*this);
    p += rhs;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    LaurentPoly p(*this);
    p -= rhs;
    return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly p;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : rhs.terms_) {
            long long e = static_cast<long long>(e1) + e2;
            if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
                throw std::overflow_error("LaurentPoly: exponent overflow in multiplication");
            p.add_term(static_cast<int>(e), c1 * c2);
        }
    }
    return p;
}

LaurentPoly LaurentPoly::scaled(const Coeff& c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (const auto& [e, a] : terms_) p.terms_.emplace(e, a * c);
    return p;
}

LaurentPoly LaurentPoly::invert_var() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

bool LaurentPoly::is_reciprocal() const {
    return invert_var() == *this;
}

Coeff LaurentPoly::derivative_at_one(int order) const {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative_at_one: order must be 1 or 2");
    Coeff sum = 0;
    for (const auto& [e, c] : terms_) {
        Coeff k = e;
        sum += (order == 1 ? k : k * (k - 1)) * c;
    }
    return sum;
}

Coeff LaurentPoly::eval_at_one() const {
    Coeff sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

namespace {

std::string coeff_str(const Coeff& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Coeff c = it->second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0) {
            os << coeff_str(c);
        } else {
            if (c != 1) os << coeff_str(c) << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Coeff c = it->second;
        if (c < 0) {
            os << "-";
            c = -c;
        } else if (!first) {
            os << "+";
        }
        if (e == 0) {
            os << coeff_str(c);
        } else {
            if (c != 1) os << coeff_str(c);
            os << "t";
            if (e != 1) os << "^{" << e << "}";
        }
        first = false;
    }
    return os.str();
}

}  // namespace vknot
