#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

using Coeff = boost::multiprecision::cpp_int;

/// An integer Laurent polynomial in one variable t, kept in canonical
/// sparse form: no stored coefficient is zero, so operator== is
/// structural equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<int, Coeff>> terms);

    static LaurentPoly from_terms(const std::vector<std::pair<int, Coeff>>& terms);
    static LaurentPoly monomial(int exponent, Coeff coeff);
    /// t^k - 1, the summand every invariant is built from.
    static LaurentPoly t_power_minus_one(int k);
    static LaurentPoly one() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Coeff>& terms() const { return terms_; }
    Coeff coeff(int exponent) const;

    std::optional<int> min_exponent() const;
    std::optional<int> max_exponent() const;

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly scaled(const Coeff& c) const;

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return terms_ != rhs.terms_; }

    /// Substitution t -> t^-1.
    LaurentPoly invert_var() const;
    /// True iff p(t^-1) == p(t).
    bool is_reciprocal() const;

    /// Value of the first (order 1) or second (order 2) derivative at t = 1:
    /// sum k*a_k resp. sum k(k-1)*a_k. Throws std::invalid_argument for any
    /// other order.
    Coeff derivative_at_one(int order) const;

    /// Sum of all coefficients, i.e. p(1).
    Coeff eval_at_one() const;

    /// Plain-text form, terms in descending exponent, e.g. "t^2 - 2*t + 1".
    std::string str() const;
    /// LaTeX form, e.g. "t^{2}-2t+1".
    std::string latex() const;

private:
    void add_term(int exponent, const Coeff& coeff);

    std::map<int, Coeff> terms_;
};

}  // namespace vknot
