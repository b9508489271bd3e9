#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "ribbon/polynomial.hpp"

namespace ribbon {

// The k-th cyclotomic polynomial, by iterated exact division of x^k - 1
// by the cyclotomic polynomials of the proper divisors of k.
IntPoly cyclotomic_poly(int k);

// Euler totient; equals the degree of the k-th cyclotomic polynomial.
int euler_phi(int k);

// An element of Z[q]/(Phi_k), i.e. an exact representation of an integer
// polynomial evaluated at a primitive k-th root of unity. The residue is
// kept reduced to degree < phi(k).
class CycElem {
  public:
    explicit CycElem(int k) : k_(k) {}
    CycElem(int k, const IntPoly& value);

    static CycElem from_int(int k, Int value);
    // residue class of q^exponent
    static CycElem root_power(int k, int exponent);

    int order() const { return k_; }
    const IntPoly& residue() const { return residue_; }
    bool is_zero() const { return residue_.is_zero(); }

    // Present iff the residue is a constant polynomial.
    std::optional<Int> as_integer() const;

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    CycElem& operator+=(const CycElem& rhs) { return *this = *this + rhs; }
    CycElem& operator*=(const CycElem& rhs) { return *this = *this * rhs; }

    friend bool operator==(const CycElem&, const CycElem&) = default;

  private:
    int k_;
    IntPoly residue_;
};

// Polynomial in t with coefficients in Z[q]/(Phi_k).
class CycPolyT {
  public:
    explicit CycPolyT(int k) : k_(k) {}

    int order() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, CycElem>& coeffs() const { return coeffs_; }

    CycElem coeff(int t_exp) const;
    void add_term(const CycElem& c, int t_exp);

    friend CycPolyT operator+(const CycPolyT& a, const CycPolyT& b);
    friend CycPolyT operator*(const CycPolyT& a, const CycPolyT& b);

    friend bool operator==(const CycPolyT&, const CycPolyT&) = default;

  private:
    int k_;
    std::map<int, CycElem> coeffs_;  // t-exponent -> nonzero coefficient
};

// Substitutes a primitive k-th root of unity for q, exactly.
CycPolyT eval_at_root(const BiPoly& f, int k);

// Reduction of a univariate polynomial in q.
CycElem reduce_mod_cyclotomic(const IntPoly& f, int k);

// Present iff every coefficient is an integer; then the polynomial in t.
std::optional<IntPoly> as_integer_poly(const CycPolyT& p);

// (1-t)(1-t^k)^{n/k} -- the Pochhammer product (t;q)_{n+1} at a primitive
// k-th root of unity. Throws std::invalid_argument unless k divides n.
IntPoly pochhammer(int k, int n);

}  // namespace ribbon
