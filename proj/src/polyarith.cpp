#include "adeq/polyarith.hpp"

#include <algorithm>
#include <sstream>

namespace adeq {

void IntPoly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { strip(); }

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.c_.back() = std::move(c);
    }
    return p;
}

IntPoly IntPoly::linear_from_root(const Rat &r) {
    return IntPoly({-num(r), den(r)});
}

Rat IntPoly::eval(const Rat &x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::eval_int(const Int &x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rat &x) const {
    if (is_zero()) return 0;
    const Int &p = num(x), &q = den(x);
    // sum c_i p^i q^(n-i); q > 0 so the sign matches p(x).
    Int acc = 0, qpow = 1;
    std::vector<Int> terms(c_.size());
    Int ppow = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        terms[i] = c_[i] * ppow;
        ppow *= p;
    }
    for (size_t i = c_.size(); i-- > 0;) {
        acc += terms[i] * qpow;
        qpow *= q;
    }
    return acc.sign();
}

IntPoly operator+(const IntPoly &a, const IntPoly &b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly &a, const IntPoly &b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_);
    for (auto &x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scaled(const Int &k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> r(c_);
    for (auto &x : r) x *= k;
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto &x : c_) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    std::vector<Int> r(c_);
    for (auto &x : r) x /= g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::normalized() const {
    IntPoly p = primitive_part();
    if (!p.is_zero() && p.leading() < 0) p = -p;
    return p;
}

std::string IntPoly::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    if (c_.empty()) os << "0";
    os << "]";
    return os.str();
}

RatInterval::RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!(lo < hi)) throw std::invalid_argument("interval requires lo < hi");
}

std::string RatInterval::str() const {
    std::ostringstream os;
    os << "(" << lo << ", " << hi << ")";
    return os.str();
}

IntPoly derivative(const IntPoly &p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<Int> r(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) r[static_cast<size_t>(i - 1)] = p[i] * i;
    return IntPoly(std::move(r));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + r; returns r. Requires deg a >= deg b.
IntPoly pseudo_rem(const IntPoly &a, const IntPoly &b) {
    int da = a.degree(), db = b.degree();
    std::vector<Int> r(a.coeffs());
    const Int lcb = b.leading();
    for (int k = da; k >= db; --k) {
        // scale the remaining part, then eliminate coefficient k
        Int top = r[static_cast<size_t>(k)];
        for (int i = 0; i < k; ++i) r[static_cast<size_t>(i)] *= lcb;
        for (int i = 0; i < db; ++i)
            r[static_cast<size_t>(k - db + i)] -= top * b[i];
        r[static_cast<size_t>(k)] = 0;
    }
    r.resize(static_cast<size_t>(db));
    return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    Int cg = gcd(a.content(), b.content());
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    IntPoly g = u.normalized();
    return g.scaled(cg);
}

IntPoly exact_divide(const IntPoly &a, const IntPoly &b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::domain_error("inexact polynomial division");
    // long division over Q, then require integrality
    std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rat> q(static_cast<size_t>(da - db) + 1, Rat(0));
    Rat lcb(b.leading());
    for (int k = da; k >= db; --k) {
        Rat f = rem[static_cast<size_t>(k)] / lcb;
        q[static_cast<size_t>(k - db)] = f;
        if (f == 0) continue;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k - db + i)] -= f * Rat(b[i]);
    }
    for (const auto &r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    std::vector<Int> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        if (den(q[i]) != 1) throw std::domain_error("inexact polynomial division");
        qi[i] = num(q[i]);
    }
    return IntPoly(std::move(qi));
}

IntPoly squarefree_part(const IntPoly &p) {
    if (p.is_zero()) throw std::domain_error("squarefree part of zero polynomial");
    if (p.degree() == 0) return IntPoly::constant(1);
    IntPoly g = poly_gcd(p, derivative(p));
    if (g.degree() == 0) return p.normalized();
    return exact_divide(p.primitive_part(), g).normalized();
}

std::vector<IntPoly> sturm_chain(const IntPoly &p) {
    if (p.is_zero()) throw std::domain_error("sturm chain of zero polynomial");
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    if (p.degree() == 0) return chain;
    chain.push_back(derivative(chain[0]).primitive_part());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const IntPoly &s0 = chain[chain.size() - 2];
        const IntPoly &s1 = chain.back();
        IntPoly r = pseudo_rem(s0, s1);
        if (r.is_zero()) break;
        // pseudo_rem scales s0 by lc(s1)^(d+1); keep the Sturm sign convention
        int d = s0.degree() - s1.degree() + 1;
        bool mult_neg = s1.leading() < 0 && (d & 1);
        chain.push_back(mult_neg ? r.primitive_part() : (-r).primitive_part());
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<IntPoly> &chain, const Rat &x) {
    int last = 0, var = 0;
    for (const auto &s : chain) {
        int sg = s.sign_at(x);
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++var;
        last = sg;
    }
    return var;
}

}  // namespace

int sturm_count(const std::vector<IntPoly> &chain, const RatInterval &iv) {
    if (chain.empty() || chain[0].is_zero())
        throw std::domain_error("sturm count of zero polynomial");
    if (chain[0].sign_at(iv.lo) == 0 || chain[0].sign_at(iv.hi) == 0)
        throw std::domain_error("sturm count: root at interval endpoint");
    return sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
}

int sturm_count(const IntPoly &p, const RatInterval &iv) {
    return sturm_count(sturm_chain(p), iv);
}

Rat cauchy_bound(const IntPoly &p) {
    if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
    Int mx = 0;
    for (int i = 0; i < p.degree(); ++i) mx = std::max(mx, Int(abs(p[i])));
    return Rat(1) + Rat(mx, Int(abs(p.leading())));
}

IntPoly compose_shift(const IntPoly &p, const Rat &q) {
    if (p.is_zero()) return p;
    // Horner: result = (((c_n)(x+q) + c_{n-1})(x+q) + ...) over Q, then clear.
    const Int &pn = num(q), &pd = den(q);
    // work with integer polys scaled by pd^k progressively: maintain acc over Q
    // via pair (poly over Z, denominator power). acc_true = acc / pd^e.
    IntPoly acc;  // zero
    int e = 0;
    IntPoly xq({pn, pd});  // pd*x + pn  == pd*(x+q)
    for (int i = p.degree(); i >= 0; --i) {
        // acc = acc*(x+q) + c_i  ==> acc/pd^e * (pd*x+pn)/pd + c_i
        acc = acc * xq;
        ++e;
        acc = acc + IntPoly::constant(p[i] * ipow(pd, static_cast<unsigned long>(e)));
    }
    return acc.primitive_part();
}

IntPoly compose_scale(const IntPoly &p, const Rat &q) {
    if (q == 0) throw std::domain_error("compose_scale by zero");
    if (p.is_zero()) return p;
    const Int &pn = num(q), &pd = den(q);
    int n = p.degree();
    std::vector<Int> r(p.coeffs());
    // c_i * (pn/pd)^i, cleared by pd^n
    for (int i = 0; i <= n; ++i)
        r[static_cast<size_t>(i)] *= ipow(pn, static_cast<unsigned long>(i)) *
                                      ipow(pd, static_cast<unsigned long>(n - i));
    return IntPoly(std::move(r)).primitive_part();
}

IntPoly compose_negate(const IntPoly &p) {
    std::vector<Int> r(p.coeffs());
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

IntPoly compose_power(const IntPoly &p, int d) {
    if (d < 1) throw std::invalid_argument("compose_power requires d >= 1");
    if (p.is_zero() || d == 1) return p;
    std::vector<Int> r(static_cast<size_t>(p.degree()) * d + 1, Int(0));
    for (int i = 0; i <= p.degree(); ++i) r[static_cast<size_t>(i) * d] = p[i];
    return IntPoly(std::move(r));
}

IntPoly reverse_coeffs(const IntPoly &p) {
    if (p.is_zero()) return p;
    std::vector<Int> c(p.coeffs());
    size_t k = 0;
    while (k < c.size() && c[k] == 0) ++k;  // drop x^k factor
    std::vector<Int> r(c.begin() + static_cast<long>(k), c.end());
    std::reverse(r.begin(), r.end());
    return IntPoly(std::move(r));
}

Int int_det(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sgn = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sgn > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

// Resultant of two integer univariate polynomials via the Sylvester matrix.
Int resultant_int(const IntPoly &a, const IntPoly &b) {
    int m = a.degree(), n = b.degree();
    if (a.is_zero() || b.is_zero()) return 0;
    if (m == 0) return ipow(a.leading(), static_cast<unsigned long>(n));
    if (n == 0) return ipow(b.leading(), static_cast<unsigned long>(m));
    size_t sz = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> s(sz, std::vector<Int>(sz, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            s[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = b[n - i];
    return int_det(std::move(s));
}

// Exact polynomial interpolation through (x_i, y_i), Newton form over Q.
IntPoly interpolate(const std::vector<Int> &xs, const std::vector<Int> &ys) {
    size_t n = xs.size();
    std::vector<Rat> coef(n);
    for (size_t i = 0; i < n; ++i) coef[i] = Rat(ys[i]);
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / Rat(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    // expand Newton form
    std::vector<Rat> poly{coef[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // poly = poly*(x - xs[i]) + coef[i]
        std::vector<Rat> nxt(poly.size() + 1, Rat(0));
        for (size_t k = 0; k < poly.size(); ++k) {
            nxt[k + 1] += poly[k];
            nxt[k] -= poly[k] * Rat(xs[i]);
        }
        nxt[0] += coef[i];
        poly = std::move(nxt);
    }
    std::vector<Int> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (den(poly[i]) != 1)
            throw std::logic_error("resultant interpolation produced non-integer");
        out[i] = num(poly[i]);
    }
    return IntPoly(std::move(out));
}

}  // namespace

IntPoly resultant_y(const IntPoly &a, const std::vector<IntPoly> &b_ycoeffs) {
    if (a.is_zero()) throw std::domain_error("resultant of zero polynomial");
    std::vector<IntPoly> b(b_ycoeffs);
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    if (b.empty()) throw std::domain_error("resultant of zero polynomial");
    int degx = 0;
    for (const auto &c : b) degx = std::max(degx, c.degree());
    int bound = a.degree() * (static_cast<int>(b.size()) - 1) + degx * a.degree() + 1;
    std::vector<Int> xs, ys;
    Int x0 = 0;
    for (int i = 0; i < bound + 1; ++i) {
        xs.push_back(x0);
        std::vector<Int> bc(b.size());
        for (size_t j = 0; j < b.size(); ++j) bc[j] = b[j].eval_int(x0);
        ys.push_back(resultant_int(a, IntPoly(std::move(bc))));
        x0 = (x0 > 0) ? Int(-x0) : Int(-x0 + 1);  // 0, 1, -1, 2, -2, ...
    }
    return interpolate(xs, ys);
}

IntPoly annihilator_sum(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("annihilator of zero polynomial");
    // Res_y(a(y), b(x - y)): expand b(x-y) by powers of y
    int n = b.degree();
    std::vector<IntPoly> byc(static_cast<size_t>(n) + 1);
    // b(x-y) = sum_i b_i (x-y)^i; (x-y)^i = sum_k C(i,k) x^(i-k) (-y)^k
    std::vector<std::vector<Int>> binom(static_cast<size_t>(n) + 1,
                                        std::vector<Int>(static_cast<size_t>(n) + 1, Int(0)));
    for (int i = 0; i <= n; ++i) {
        binom[static_cast<size_t>(i)][0] = 1;
        for (int k = 1; k <= i; ++k)
            binom[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(k - 1)] +
                binom[static_cast<size_t>(i - 1)][static_cast<size_t>(k)];
    }
    for (int k = 0; k <= n; ++k) {
        std::vector<Int> cx;  // coefficient of y^k as polynomial in x
        for (int i = k; i <= n; ++i) {
            size_t deg = static_cast<size_t>(i - k);
            if (cx.size() <= deg) cx.resize(deg + 1, Int(0));
            Int term = b[i] * binom[static_cast<size_t>(i)][static_cast<size_t>(k)];
            cx[deg] += (k & 1) ? -term : term;
        }
        byc[static_cast<size_t>(k)] = IntPoly(std::move(cx));
    }
    return resultant_y(a, byc);
}

IntPoly annihilator_product(const IntPoly &a, const IntPoly &b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("annihilator of zero polynomial");
    // strip x^k from b; products with the root 0 contribute the factor x
    std::vector<Int> bc(b.coeffs());
    size_t ord = 0;
    while (ord < bc.size() && bc[ord] == 0) ++ord;
    std::vector<Int> q(bc.begin() + static_cast<long>(ord), bc.end());
    int nq = static_cast<int>(q.size()) - 1;
    // homogenize: coefficient of y^(nq-i) is q_i x^i
    std::vector<IntPoly> byc(static_cast<size_t>(nq) + 1);
    for (int i = 0; i <= nq; ++i)
        byc[static_cast<size_t>(nq - i)] = IntPoly::monomial(q[static_cast<size_t>(i)], i);
    IntPoly res = resultant_y(a, byc);
    if (ord > 0) res = res * IntPoly({Int(0), Int(1)});
    return res;
}

}  // namespace adeq
