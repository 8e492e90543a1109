#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adeq/polyarith.hpp"

namespace adeq {

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact real algebraic number: a squarefree integer polynomial together
/// with an open rational isolating interval holding exactly one of its
/// roots. Rational values keep a degree-1 defining polynomial and an exact
/// value for fast arithmetic. Immutable after construction.
class RealAlg {
  public:
    /// Isolate the unique root of p in iv, refining as needed.
    /// Throws std::domain_error (no root) or budget_error (cannot isolate).
    static RealAlg make(const IntPoly &p, const RatInterval &iv);
    static RealAlg from_rat(const Rat &q);
    static RealAlg zero() { return from_rat(0); }
    static RealAlg one() { return from_rat(1); }

    const IntPoly &defining() const { return poly_; }
    const RatInterval &interval() const { return iv_; }
    bool is_rational() const { return rat_.has_value(); }
    const Rat &rat_value() const;  // requires is_rational()
    bool is_zero() const { return rat_ && *rat_ == 0; }

    /// Interval of width <= w around the value (bisection refinement).
    RatInterval refined(const Rat &w) const;

    std::string str() const;

  private:
    IntPoly poly_;       // squarefree, nonzero at interval endpoints
    RatInterval iv_;
    std::optional<Rat> rat_;
    RealAlg(IntPoly p, RatInterval iv, std::optional<Rat> r)
        : poly_(std::move(p)), iv_(std::move(iv)), rat_(std::move(r)) {}
    friend RealAlg ra_arith(const RealAlg &, const RealAlg &, ArithOp);
    friend RealAlg ra_nthroot(const RealAlg &, int);
};

RealAlg ra_arith(const RealAlg &a, const RealAlg &b, ArithOp op);
inline RealAlg operator+(const RealAlg &a, const RealAlg &b) { return ra_arith(a, b, ArithOp::Add); }
inline RealAlg operator-(const RealAlg &a, const RealAlg &b) { return ra_arith(a, b, ArithOp::Sub); }
inline RealAlg operator*(const RealAlg &a, const RealAlg &b) { return ra_arith(a, b, ArithOp::Mul); }
inline RealAlg operator/(const RealAlg &a, const RealAlg &b) { return ra_arith(a, b, ArithOp::Div); }
RealAlg ra_neg(const RealAlg &a);

/// Nonnegative square root; throws std::domain_error on negative input.
RealAlg ra_sqrt(const RealAlg &a);
/// d-th root: for even d requires a >= 0 and returns the nonnegative root;
/// for odd d returns the unique real root.
RealAlg ra_nthroot(const RealAlg &a, int d);

/// Exact three-way comparison: -1, 0, +1.
int ra_compare(const RealAlg &a, const RealAlg &b);
inline bool ra_equal(const RealAlg &a, const RealAlg &b) { return ra_compare(a, b) == 0; }

/// Exact sign of p at the point a: -1, 0, +1.
int ra_sign_at(const IntPoly &p, const RealAlg &a);

inline bool adeq_is_zero(const RealAlg &a) { return a.is_zero(); }
inline RealAlg operator-(const RealAlg &a) { return ra_neg(a); }

/// All real roots of p in ascending order (squarefree reduction applied).
std::vector<RealAlg> isolate_real_roots(const IntPoly &p);

}  // namespace adeq
