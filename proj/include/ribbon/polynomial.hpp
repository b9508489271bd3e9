#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/bigint.hpp"

namespace ribbon {

// Dense univariate polynomial with exact integer coefficients,
// index = exponent, trailing zeros trimmed. Zero = empty sequence.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Int coeff(int exponent) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

    // Quotient of an exact division; throws std::domain_error on a
    // nonzero remainder or a zero divisor.
    IntPoly exact_div(const IntPoly& divisor) const;

    // Division with remainder by a monic divisor.
    std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& divisor) const;

    IntPoly truncated(int max_exponent) const;  // drop exponents above the bound
    IntPoly shifted(int by) const;              // multiply by x^by

    // "t^4 - 2*t^3 + t^2"; compact form omits the spaces around +/-.
    std::string to_string(const std::string& var, bool compact = false) const;

    friend auto operator<=>(const IntPoly&, const IntPoly&) = default;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

// Sparse bivariate polynomial over exact integers; keys are
// (q-exponent, t-exponent), zero coefficients never stored.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly constant(Int c);
    static BiPoly monomial(Int c, int q_exp, int t_exp);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int q_exp, int t_exp) const;
    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }
    void add_term(const Int& c, int q_exp, int t_exp);

    int t_degree() const;  // -1 for zero

    // Coefficient of t^t_exp as a polynomial in q.
    IntPoly q_coeff(int t_exp) const;
    // All occurring t-exponents, ascending.
    std::vector<int> t_exponents() const;

    BiPoly& operator+=(const BiPoly& rhs);
    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);

    BiPoly truncated_t(int max_t_exponent) const;

    Int eval(const Int& q, const Int& t) const;

    // "q^12*t^4 + (q^10+q^9+q^8)*t^3 + q^6*t^2": groups by t-exponent,
    // descending, q-terms descending within a group.
    std::string to_string() const;

    friend auto operator<=>(const BiPoly&, const BiPoly&) = default;

  private:
    std::map<std::pair<int, int>, Int> terms_;
};

// Binomial coefficient as an exact integer.
Int binomial(int n, int r);

// Multiplies `series` by the expansion of 1/(1-t^k)^power, truncated.
IntPoly series_div_one_minus_tk(const IntPoly& series, int k, int power, int t_order);

}  // namespace ribbon
