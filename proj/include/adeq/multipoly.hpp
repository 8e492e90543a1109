#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "adeq/errors.hpp"
#include "adeq/numeric.hpp"
#include "adeq/polyarith.hpp"

namespace adeq {

inline bool adeq_is_zero(const Rat &q) { return q == 0; }
inline bool adeq_is_zero(const Int &i) { return i == 0; }

/// Sparse multivariate polynomial over named symbols (ids), coefficients in
/// an exact ring type. No zero coefficients stored; monomials kept in
/// canonical (symbol-id sorted) order.
template <class Coeff>
class MultiPoly {
  public:
    // (symbol id, exponent>0) pairs sorted by id
    using Monomial = std::vector<std::pair<int, int>>;

    MultiPoly() = default;

    static MultiPoly constant(Coeff c) {
        MultiPoly p;
        if (!adeq_is_zero(c)) p.t_.emplace(Monomial{}, std::move(c));
        return p;
    }

    static MultiPoly symbol(int id, Coeff one) {
        MultiPoly p;
        p.t_.emplace(Monomial{{id, 1}}, std::move(one));
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

    Coeff constant_value(const Coeff &zero) const {
        if (t_.empty()) return zero;
        if (!is_constant()) throw std::logic_error("MultiPoly: not a constant");
        return t_.begin()->second;
    }

    const std::map<Monomial, Coeff> &terms() const { return t_; }

    std::set<int> symbols() const {
        std::set<int> s;
        for (const auto &[m, c] : t_)
            for (const auto &[id, e] : m) s.insert(id);
        return s;
    }

    int total_degree() const {
        int d = 0;
        for (const auto &[m, c] : t_) {
            int td = 0;
            for (const auto &[id, e] : m) td += e;
            d = std::max(d, td);
        }
        return d;
    }

    int degree_in(int sym) const {
        int d = 0;
        for (const auto &[m, c] : t_)
            for (const auto &[id, e] : m)
                if (id == sym) d = std::max(d, e);
        return d;
    }

    friend MultiPoly operator+(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly r = a;
        for (const auto &[m, c] : b.t_) r.add_term(m, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly r = a;
        for (const auto &[m, c] : b.t_) r.add_term(m, -c);
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (const auto &[m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
        MultiPoly r;
        for (const auto &[ma, ca] : a.t_)
            for (const auto &[mb, cb] : b.t_) r.add_term(mul_mono(ma, mb), ca * cb);
        return r;
    }

    bool operator==(const MultiPoly &o) const { return t_ == o.t_; }

    /// Replace one symbol by a constant value.
    MultiPoly substitute(int sym, const Coeff &v) const {
        MultiPoly r;
        for (const auto &[m, c] : t_) {
            Monomial rest;
            int e = 0;
            for (const auto &pr : m) {
                if (pr.first == sym)
                    e = pr.second;
                else
                    rest.push_back(pr);
            }
            if (e == 0) {
                r.add_term(m, c);
            } else {
                Coeff f = c * coeff_pow(v, e);
                r.add_term(rest, f);
            }
        }
        return r;
    }

    /// Coefficient vector in `sym` (ascending); requires every term to be
    /// free of other symbols.
    std::vector<Coeff> univariate(int sym, const Coeff &zero) const {
        std::vector<Coeff> out(static_cast<size_t>(degree_in(sym)) + 1, zero);
        for (const auto &[m, c] : t_) {
            if (m.empty()) {
                out[0] = out[0] + c;
            } else if (m.size() == 1 && m[0].first == sym) {
                size_t e = static_cast<size_t>(m[0].second);
                out[e] = out[e] + c;
            } else {
                throw std::logic_error("MultiPoly: univariate extraction with foreign symbols");
            }
        }
        return out;
    }

    std::string str(const std::function<std::string(int)> &sym_name,
                    const std::function<std::string(const Coeff &)> &coeff_str) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(c);
            for (const auto &[id, e] : m) {
                os << "*" << sym_name(id);
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

  private:
    std::map<Monomial, Coeff> t_;

    void add_term(const Monomial &m, Coeff c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!adeq_is_zero(c)) t_.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
            if (adeq_is_zero(it->second)) t_.erase(it);
        }
    }

    static Monomial mul_mono(const Monomial &a, const Monomial &b) {
        Monomial r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, a[i].second + b[j].second);
                ++i, ++j;
            }
        }
        return r;
    }

    static Coeff coeff_pow(const Coeff &v, int e) {
        Coeff r = v;
        for (int i = 1; i < e; ++i) r = r * v;
        return r;
    }
};

/// Symbolic polynomial over rational coefficients; the verifier's and the
/// Theorem-5 combiner's working representation.
using SymPoly = MultiPoly<Rat>;

struct SymBudget {
    int max_symbols = 4;
    int max_total_degree = 32;
};

/// Enforces the symbol/degree budget; returns its (already canonical) input.
inline const SymPoly &sym_normalize(const SymPoly &p, const SymBudget &b = {}) {
    if (static_cast<int>(p.symbols().size()) > b.max_symbols)
        throw budget_error("symbolic polynomial exceeds symbol budget");
    if (p.total_degree() > b.max_total_degree)
        throw budget_error("symbolic polynomial exceeds degree budget");
    return p;
}

template <class Coeff>
MultiPoly<Coeff> checked_mul(const MultiPoly<Coeff> &a, const MultiPoly<Coeff> &b,
                             const SymBudget &bud) {
    MultiPoly<Coeff> r = a * b;
    if (static_cast<int>(r.symbols().size()) > bud.max_symbols)
        throw budget_error("symbolic polynomial exceeds symbol budget");
    if (r.total_degree() > bud.max_total_degree)
        throw budget_error("symbolic polynomial exceeds degree budget");
    return r;
}

/// When exactly one symbol remains, clear denominators into an IntPoly.
/// Returns the symbol id alongside; nullopt when 0 or >= 2 symbols occur.
inline std::optional<std::pair<IntPoly, int>> sym_extract_univariate(const SymPoly &p) {
    auto syms = p.symbols();
    if (syms.size() != 1) return std::nullopt;
    int sym = *syms.begin();
    std::vector<Rat> cs = p.univariate(sym, Rat(0));
    Int lcm = 1;
    for (const auto &q : cs) lcm = lcm / gcd(lcm, den(q)) * den(q);
    std::vector<Int> ic(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) ic[i] = num(cs[i]) * (lcm / den(cs[i]));
    return std::make_pair(IntPoly(std::move(ic)), sym);
}

}  // namespace adeq
