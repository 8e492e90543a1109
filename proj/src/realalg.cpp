#include "adeq/realalg.hpp"

#include <algorithm>
#include <sstream>

namespace adeq {

namespace {

constexpr int kRefineBudget = 256;
constexpr int kIsolateDepth = 512;

// Interval Horner evaluation: encloses p([lo, hi]).
std::pair<Rat, Rat> interval_eval(const IntPoly &p, const Rat &lo, const Rat &hi) {
    Rat mlo(0), mhi(0);
    for (int i = p.degree(); i >= 0; --i) {
        // [mlo, mhi] * [lo, hi]
        if (!(mlo == 0 && mhi == 0)) {
            Rat a = mlo * lo, b = mlo * hi, c = mhi * lo, d = mhi * hi;
            mlo = std::min(std::min(a, b), std::min(c, d));
            mhi = std::max(std::max(a, b), std::max(c, d));
        }
        mlo += Rat(p[i]);
        mhi += Rat(p[i]);
    }
    return {mlo, mhi};
}

struct RootLoc {
    std::optional<Rat> exact;
    std::optional<RatInterval> iv;  // endpoints nonzero, exactly one root inside
};

void isolate_rec(const IntPoly &s, const std::vector<IntPoly> &chain, const Rat &lo,
                 const Rat &hi, int depth, std::vector<RootLoc> &out) {
    if (depth > kIsolateDepth) throw budget_error("root isolation depth exceeded");
    int n = sturm_count(chain, RatInterval(lo, hi));
    if (n == 0) return;
    if (n == 1) {
        out.push_back(RootLoc{std::nullopt, RatInterval(lo, hi)});
        return;
    }
    Rat m = (lo + hi) / 2;
    if (s.sign_at(m) == 0) {
        Rat delta = (hi - lo) / 4;
        while (s.sign_at(m - delta) == 0 || s.sign_at(m + delta) == 0 ||
               sturm_count(chain, RatInterval(m - delta, m + delta)) != 1)
            delta /= 2;
        isolate_rec(s, chain, lo, m - delta, depth + 1, out);
        out.push_back(RootLoc{m, RatInterval(m - delta, m + delta)});
        isolate_rec(s, chain, m + delta, hi, depth + 1, out);
    } else {
        isolate_rec(s, chain, lo, m, depth + 1, out);
        isolate_rec(s, chain, m, hi, depth + 1, out);
    }
}

std::vector<RootLoc> isolate_locs(const IntPoly &squarefree) {
    std::vector<RootLoc> out;
    if (squarefree.degree() < 1) return out;
    Rat b = cauchy_bound(squarefree);
    auto chain = sturm_chain(squarefree);
    isolate_rec(squarefree, chain, -b, b, 0, out);
    return out;
}

// Shrinks (lo, hi) around the single root inside; assumes a sign change.
void bisect_step(const IntPoly &p, Rat &lo, Rat &hi) {
    Rat m = (lo + hi) / 2;
    int sm = p.sign_at(m);
    if (sm == 0) {
        // the root is exactly m; keep a thin band around it
        Rat d = (hi - lo) / 4;
        while (p.sign_at(m - d) == 0 || p.sign_at(m + d) == 0) d /= 2;
        lo = m - d;
        hi = m + d;
        return;
    }
    if (p.sign_at(lo) == sm)
        lo = m;
    else
        hi = m;
}

// Given an enclosure J of a value known to be a root of r, grow J minimally
// past endpoint roots and test isolation. Returns the isolating interval or
// nullopt when more than one root of r is inside.
std::optional<RatInterval> try_isolate_in(const IntPoly &r, const std::vector<IntPoly> &chain,
                                          Rat jlo, Rat jhi) {
    Rat eps = (jhi - jlo) / 16;
    int guard = 0;
    while (r.sign_at(jlo) == 0) {
        jlo -= eps;
        eps /= 2;
        if (++guard > kRefineBudget) throw budget_error("endpoint adjustment budget");
    }
    eps = (jhi - jlo) / 16;
    while (r.sign_at(jhi) == 0) {
        jhi += eps;
        eps /= 2;
        if (++guard > kRefineBudget) throw budget_error("endpoint adjustment budget");
    }
    int n = sturm_count(chain, RatInterval(jlo, jhi));
    if (n == 1) return RatInterval(jlo, jhi);
    if (n == 0) throw std::logic_error("isolation lost the enclosed root");
    return std::nullopt;
}

Rat sqrt_upper(const Rat &h) {
    // Newton from above: t >= sqrt(h)
    Rat t = std::max(Rat(1), h);
    for (int i = 0; i < 8; ++i) t = (t + h / t) / 2;
    return t;
}

bool int_nth_root(const Int &x, int d, Int &out) {
    if (x < 0) return false;
    if (x == 0 || x == 1) {
        out = x;
        return true;
    }
    Int lo = 1, hi = x;
    while (lo < hi) {
        Int mid = (lo + hi + 1) / 2;
        if (ipow(mid, static_cast<unsigned long>(d)) <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    out = lo;
    return ipow(lo, static_cast<unsigned long>(d)) == x;
}

}  // namespace

RealAlg RealAlg::from_rat(const Rat &q) {
    return RealAlg(IntPoly::linear_from_root(q), RatInterval(q - 1, q + 1), q);
}

const Rat &RealAlg::rat_value() const {
    if (!rat_) throw std::logic_error("RealAlg: not a rational value");
    return *rat_;
}

RealAlg RealAlg::make(const IntPoly &p, const RatInterval &iv) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no isolated root");
    IntPoly s = squarefree_part(p);
    if (s.degree() == 1) {
        Rat root(-s[0], s[1]);
        if (!iv.contains(root)) throw std::domain_error("no root in interval");
        return from_rat(root);
    }
    if (s.degree() < 1) throw std::domain_error("no root in interval");
    auto locs = isolate_locs(s);
    std::optional<RootLoc> found;
    int inside = 0;
    for (auto &loc : locs) {
        if (loc.exact) {
            if (iv.contains(*loc.exact)) {
                ++inside;
                found = loc;
            }
            continue;
        }
        // exclude roots equal to an endpoint of iv
        RatInterval r = *loc.iv;
        if (s.sign_at(iv.lo) == 0 && r.contains(iv.lo)) continue;
        if (s.sign_at(iv.hi) == 0 && r.contains(iv.hi)) continue;
        int steps = 0;
        for (;;) {
            if (r.lo >= iv.lo && r.hi <= iv.hi) {
                ++inside;
                found = RootLoc{std::nullopt, r};
                break;
            }
            if (r.hi <= iv.lo || r.lo >= iv.hi) break;  // disjoint
            bisect_step(s, r.lo, r.hi);
            if (++steps > kRefineBudget)
                throw budget_error("interval refinement budget exceeded");
        }
    }
    if (inside == 0) throw std::domain_error("no root in interval");
    if (inside > 1)
        throw std::domain_error("interval does not isolate: " + std::to_string(inside) +
                                " roots inside");
    if (found->exact) {
        Rat m = *found->exact;
        return RealAlg(s, *found->iv, m);
    }
    return RealAlg(s, *found->iv, std::nullopt);
}

RatInterval RealAlg::refined(const Rat &w) const {
    if (rat_) {
        Rat d = w / 2;
        // stay strictly inside the stored interval
        d = std::min(d, std::min((*rat_ - iv_.lo) / 2, (iv_.hi - *rat_) / 2));
        return RatInterval(*rat_ - d, *rat_ + d);
    }
    Rat lo = iv_.lo, hi = iv_.hi;
    while (hi - lo > w) bisect_step(poly_, lo, hi);
    return RatInterval(lo, hi);
}

int ra_compare(const RealAlg &a, const RealAlg &b) {
    if (a.is_rational() && b.is_rational()) {
        const Rat &x = a.rat_value(), &y = b.rat_value();
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    if (a.is_rational()) return -ra_compare(b, a);
    if (b.is_rational()) {
        const Rat &q = b.rat_value();
        if (a.defining().sign_at(q) == 0 && a.interval().contains(q)) return 0;
        Rat lo = a.interval().lo, hi = a.interval().hi;
        int steps = 0;
        while (lo < q && q < hi) {
            bisect_step(a.defining(), lo, hi);
            if (++steps > kRefineBudget) throw budget_error("comparison refinement budget");
        }
        return hi <= q ? -1 : 1;
    }
    // equality via gcd
    Rat alo = a.interval().lo, ahi = a.interval().hi;
    Rat blo = b.interval().lo, bhi = b.interval().hi;
    if (std::max(alo, blo) < std::min(ahi, bhi)) {
        IntPoly g = poly_gcd(a.defining(), b.defining());
        if (g.degree() >= 1) {
            RatInterval j(std::max(alo, blo), std::min(ahi, bhi));
            if (sturm_count(g, j) == 1) return 0;
        }
    }
    int steps = 0;
    for (;;) {
        if (ahi <= blo) return -1;
        if (bhi <= alo) return 1;
        bisect_step(a.defining(), alo, ahi);
        bisect_step(b.defining(), blo, bhi);
        if (++steps > kRefineBudget) throw budget_error("comparison refinement budget");
    }
}

int ra_sign_at(const IntPoly &p, const RealAlg &a) {
    if (p.is_zero()) return 0;
    if (a.is_rational()) return p.sign_at(a.rat_value());
    IntPoly g = poly_gcd(p, a.defining());
    if (g.degree() >= 1 && sturm_count(g, a.interval()) == 1) return 0;
    Rat lo = a.interval().lo, hi = a.interval().hi;
    int steps = 0;
    for (;;) {
        auto [mlo, mhi] = interval_eval(p, lo, hi);
        if (mlo > 0) return 1;
        if (mhi < 0) return -1;
        bisect_step(a.defining(), lo, hi);
        if (++steps > kRefineBudget) throw budget_error("sign refinement budget");
    }
}

RealAlg ra_neg(const RealAlg &a) {
    if (a.is_rational()) return RealAlg::from_rat(-a.rat_value());
    return RealAlg::make(compose_negate(a.defining()),
                         RatInterval(-a.interval().hi, -a.interval().lo));
}

namespace {

RealAlg inverse(const RealAlg &b) {
    if (b.is_rational()) {
        if (b.rat_value() == 0) throw std::domain_error("division by zero");
        return RealAlg::from_rat(Rat(1) / b.rat_value());
    }
    IntPoly q = reverse_coeffs(b.defining());
    Rat lo = b.interval().lo, hi = b.interval().hi;
    int steps = 0;
    while (lo <= 0 && 0 <= hi) {
        bisect_step(b.defining(), lo, hi);
        if (++steps > kRefineBudget) throw budget_error("refinement budget in inverse");
    }
    // for an interval on one side of zero, x -> 1/x maps (lo,hi) to (1/hi,1/lo)
    return RealAlg::make(q, RatInterval(1 / hi, 1 / lo));
}

// Combine operand enclosures under op.
RatInterval combine_iv(ArithOp op, const RatInterval &x, const RatInterval &y) {
    switch (op) {
        case ArithOp::Add:
            return RatInterval(x.lo + y.lo, x.hi + y.hi);
        case ArithOp::Sub:
            return RatInterval(x.lo - y.hi, x.hi - y.lo);
        case ArithOp::Mul: {
            Rat a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
            Rat lo = std::min(std::min(a, b), std::min(c, d));
            Rat hi = std::max(std::max(a, b), std::max(c, d));
            if (lo == hi) {  // degenerate (both exact zero-width cannot happen; be safe)
                lo -= 1;
                hi += 1;
            }
            return RatInterval(lo, hi);
        }
        default:
            throw std::logic_error("combine_iv: unsupported op");
    }
}

RealAlg arith_alg(const RealAlg &a, const RealAlg &b, ArithOp op) {
    IntPoly r = (op == ArithOp::Add) ? annihilator_sum(a.defining(), b.defining())
                                     : annihilator_product(a.defining(), b.defining());
    r = squarefree_part(r);
    auto chain = sturm_chain(r);
    Rat w = std::min(a.interval().width(), b.interval().width());
    RatInterval ia = a.interval(), ib = b.interval();
    for (int step = 0; step <= kRefineBudget; ++step) {
        RatInterval j = combine_iv(op, ia, ib);
        auto iso = try_isolate_in(r, chain, j.lo, j.hi);
        if (iso) return RealAlg::make(r, *iso);
        w /= 2;
        ia = a.refined(w);
        ib = b.refined(w);
    }
    throw budget_error("arithmetic refinement budget exceeded");
}

}  // namespace

RealAlg ra_arith(const RealAlg &a, const RealAlg &b, ArithOp op) {
    if (a.is_rational() && b.is_rational()) {
        const Rat &x = a.rat_value(), &y = b.rat_value();
        switch (op) {
            case ArithOp::Add: return RealAlg::from_rat(x + y);
            case ArithOp::Sub: return RealAlg::from_rat(x - y);
            case ArithOp::Mul: return RealAlg::from_rat(x * y);
            case ArithOp::Div:
                if (y == 0) throw std::domain_error("division by zero");
                return RealAlg::from_rat(x / y);
        }
    }
    switch (op) {
        case ArithOp::Sub: return ra_arith(a, ra_neg(b), ArithOp::Add);
        case ArithOp::Div: return ra_arith(a, inverse(b), ArithOp::Mul);
        default: break;
    }
    // one rational operand: exact polynomial transforms, no refinement
    if (a.is_rational() || b.is_rational()) {
        const RealAlg &alg = a.is_rational() ? b : a;
        const Rat &q = (a.is_rational() ? a : b).rat_value();
        const IntPoly &p = alg.defining();
        const RatInterval &iv = alg.interval();
        if (op == ArithOp::Add)
            return RealAlg(compose_shift(p, -q), RatInterval(iv.lo + q, iv.hi + q),
                           std::nullopt);
        // Mul
        if (q == 0) return RealAlg::from_rat(0);
        IntPoly sp = compose_scale(p, Rat(1) / q);
        RatInterval siv = q > 0 ? RatInterval(iv.lo * q, iv.hi * q)
                                : RatInterval(iv.hi * q, iv.lo * q);
        return RealAlg(sp, siv, std::nullopt);
    }
    return arith_alg(a, b, op);
}

RealAlg ra_sqrt(const RealAlg &a) { return ra_nthroot(a, 2); }

RealAlg ra_nthroot(const RealAlg &a, int d) {
    if (d < 1) throw std::invalid_argument("nthroot requires d >= 1");
    if (d == 1) return a;
    if (a.is_rational()) {
        const Rat &q = a.rat_value();
        if (q == 0) return RealAlg::from_rat(0);
        if (q < 0) {
            if (d % 2 == 0) throw std::domain_error("even root of negative value");
            return ra_neg(ra_nthroot(RealAlg::from_rat(-q), d));
        }
        Int rn, rd;
        if (int_nth_root(num(q), d, rn) && int_nth_root(den(q), d, rd))
            return RealAlg::from_rat(Rat(rn, rd));
        IntPoly pol = compose_power(IntPoly::linear_from_root(q), d);
        Rat hi = std::max(Rat(1), q) + 1;
        return RealAlg::make(pol, RatInterval(0, hi));
    }
    int sgn = ra_compare(a, RealAlg::zero());
    if (sgn == 0) return RealAlg::from_rat(0);
    if (sgn < 0) {
        if (d % 2 == 0) throw std::domain_error("even root of negative value");
        return ra_neg(ra_nthroot(ra_neg(a), d));
    }
    IntPoly q = squarefree_part(compose_power(a.defining(), d));
    auto chain = sturm_chain(q);
    Rat w = a.interval().width();
    for (int step = 0; step <= kRefineBudget; ++step) {
        RatInterval ia = a.refined(w);
        if (ia.lo > 0) {
            Rat t = d == 2 ? sqrt_upper(ia.hi) : std::max(Rat(1), ia.hi);
            Rat u = ia.lo;
            for (int i = 1; i < d; ++i) u /= t;
            auto iso = try_isolate_in(q, chain, u, t);
            if (iso) return RealAlg::make(q, *iso);
        }
        w /= 2;
    }
    throw budget_error("nthroot refinement budget exceeded");
}

std::vector<RealAlg> isolate_real_roots(const IntPoly &p) {
    if (p.is_zero()) throw std::domain_error("root isolation of zero polynomial");
    IntPoly s = squarefree_part(p);
    std::vector<RealAlg> out;
    if (s.degree() == 1) {
        out.push_back(RealAlg::from_rat(Rat(-s[0], s[1])));
        return out;
    }
    for (auto &loc : isolate_locs(s)) {
        if (loc.exact)
            out.push_back(RealAlg::from_rat(*loc.exact));
        else
            out.push_back(RealAlg::make(s, *loc.iv));
    }
    return out;
}

std::string RealAlg::str() const {
    std::ostringstream os;
    if (rat_) {
        os << "rat{" << *rat_ << "}";
    } else {
        os << "alg{poly=" << poly_.str() << "; interval=(" << iv_.lo << ", " << iv_.hi
           << ")}";
    }
    return os.str();
}

}  // namespace adeq
