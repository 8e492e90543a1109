#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adeq/errors.hpp"
#include "adeq/numeric.hpp"

namespace adeq {

/// Univariate polynomial with integer coefficients, ascending degree
/// (coeffs[i] multiplies x^i). Trailing zeros are stripped; the zero
/// polynomial has an empty coefficient vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int degree);
    /// x - r shape from a rational r = p/q, cleared to q*x - p.
    static IntPoly linear_from_root(const Rat &r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Int> &coeffs() const { return c_; }
    const Int &operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Int leading() const { return is_zero() ? Int(0) : c_.back(); }
    Int coeff_or_zero(int i) const {
        return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : Int(0);
    }

    bool operator==(const IntPoly &o) const { return c_ == o.c_; }

    Rat eval(const Rat &x) const;
    Int eval_int(const Int &x) const;
    /// Sign of P(p/q) for q > 0, computed without rational arithmetic.
    int sign_at(const Rat &x) const;

    friend IntPoly operator+(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator-(const IntPoly &a, const IntPoly &b);
    friend IntPoly operator*(const IntPoly &a, const IntPoly &b);
    IntPoly operator-() const;
    IntPoly scaled(const Int &k) const;

    Int content() const;            // gcd of coefficients, >= 0; 0 for zero poly
    IntPoly primitive_part() const; // sign-preserving
    IntPoly normalized() const;     // primitive with positive leading coefficient

    std::string str() const;

  private:
    std::vector<Int> c_;
    void strip();
};

/// Open interval with rational endpoints, lo < hi.
struct RatInterval {
    Rat lo, hi;
    RatInterval(Rat lo_, Rat hi_);
    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat &x) const { return lo < x && x < hi; }
    bool operator==(const RatInterval &o) const = default;
    std::string str() const;
};

IntPoly derivative(const IntPoly &p);

/// Product of the distinct irreducible factors of p, primitive with positive
/// leading coefficient. Throws std::domain_error on the zero polynomial.
IntPoly squarefree_part(const IntPoly &p);

/// gcd over Z[x], normalized (primitive, positive leading coefficient).
IntPoly poly_gcd(const IntPoly &a, const IntPoly &b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
IntPoly exact_divide(const IntPoly &a, const IntPoly &b);

/// Sturm chain of p (pseudo-remainders with primitive-part reduction).
std::vector<IntPoly> sturm_chain(const IntPoly &p);

/// Exact number of distinct real roots of p in the open interval.
/// Throws std::domain_error on the zero polynomial or an endpoint root.
int sturm_count(const IntPoly &p, const RatInterval &iv);
int sturm_count(const std::vector<IntPoly> &chain, const RatInterval &iv);

/// Rational B with every real root of p inside (-B, B).
Rat cauchy_bound(const IntPoly &p);

// Composition helpers, all cleared to integer coefficients.
IntPoly compose_shift(const IntPoly &p, const Rat &q);  // p(x + q)
IntPoly compose_scale(const IntPoly &p, const Rat &q);  // p(q * x), q != 0
IntPoly compose_negate(const IntPoly &p);               // p(-x)
IntPoly compose_power(const IntPoly &p, int d);         // p(x^d), d >= 1
IntPoly reverse_coeffs(const IntPoly &p);               // x^deg * p(1/x), trailing zeros of p trimmed first

/// Resultant-based annihilators: a polynomial vanishing on every sum
/// (respectively product) of a root of a with a root of b.
IntPoly annihilator_sum(const IntPoly &a, const IntPoly &b);
IntPoly annihilator_product(const IntPoly &a, const IntPoly &b);

/// Res_y of a(y) and the bivariate b given as y-power -> coefficient in x.
IntPoly resultant_y(const IntPoly &a, const std::vector<IntPoly> &b_ycoeffs);

/// Determinant of an integer matrix (Bareiss, exact).
Int int_det(std::vector<std::vector<Int>> m);

}  // namespace adeq
