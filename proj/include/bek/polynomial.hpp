#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bek/rational.hpp"
#include "bek/ring.hpp"

namespace bek {

struct Term {
    Monomial mono;
    Rational coeff;
};

// Canonical sorted term list: strictly descending in lex, no duplicate
// monomials, no zero coefficients. The zero polynomial is the empty list.
// Canonicalized on construction, immutable afterwards.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial from_terms(std::vector<Term> ts) {
        Polynomial p;
        p.terms_ = canonicalize(std::move(ts));
        return p;
    }
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const RingContext& ctx, const Rational& c) {
        if (bek::is_zero(c)) return Polynomial();
        return from_terms({{Monomial::one(ctx), c}});
    }
    static Polynomial monomial(Monomial m, Rational c = 1) {
        if (bek::is_zero(c)) return Polynomial();
        return from_terms({{std::move(m), std::move(c)}});
    }
    static Polynomial variable(const RingContext& ctx, int idx) {
        return monomial(Monomial::var(ctx, idx));
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const {
        if (terms_.empty()) throw input_error("leading term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading().mono; }
    const Rational& leading_coeff() const { return leading().coeff; }

    // Max total degree over terms; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }
    int nvars() const { return terms_.empty() ? -1 : terms_.front().mono.nvars(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator-(const Polynomial& f) {
        Polynomial r = f;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero()) return g;
        if (g.is_zero()) return f;
        check_same_ring(f.terms_.front().mono, g.terms_.front().mono);
        std::vector<Term> out;
        out.reserve(f.terms_.size() + g.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < f.terms_.size() && j < g.terms_.size()) {
            switch (lex_compare(f.terms_[i].mono, g.terms_[j].mono)) {
                case Ordering::Greater: out.push_back(f.terms_[i++]); break;
                case Ordering::Less: out.push_back(g.terms_[j++]); break;
                case Ordering::Equal: {
                    Rational c = f.terms_[i].coeff + g.terms_[j].coeff;
                    if (!bek::is_zero(c)) out.push_back({f.terms_[i].mono, std::move(c)});
                    ++i, ++j;
                    break;
                }
            }
        }
        for (; i < f.terms_.size(); ++i) out.push_back(f.terms_[i]);
        for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
        Polynomial r;
        r.terms_ = std::move(out);  // merge of canonical inputs stays canonical
        return r;
    }

    friend Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

    friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
        if (f.is_zero() || g.is_zero()) return Polynomial();
        check_same_ring(f.terms_.front().mono, g.terms_.front().mono);
        std::vector<Term> acc;
        acc.reserve(f.terms_.size() * g.terms_.size());
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
        return from_terms(std::move(acc));
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        if (bek::is_zero(c)) return Polynomial();
        Polynomial r = f;
        for (auto& t : r.terms_) t.coeff = c * t.coeff;
        return r;
    }

    // f scaled by a single term c*m.
    Polynomial times_term(const Monomial& m, const Rational& c) const {
        if (bek::is_zero(c) || is_zero()) return Polynomial();
        Polynomial r = *this;
        const bool plus_one = bek::is_one(c), minus_one = bek::is_minus_one(c);
        for (auto& t : r.terms_) {
            t.mono = t.mono * m;  // multiplicativity keeps descending order
            if (minus_one)
                t.coeff = -t.coeff;
            else if (!plus_one)
                t.coeff = c * t.coeff;
        }
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return Rational(1) / leading_coeff() * *this;
    }

private:
    static std::vector<Term> canonicalize(std::vector<Term> ts) {
        ts.erase(std::remove_if(ts.begin(), ts.end(),
                                [](const Term& t) { return bek::is_zero(t.coeff); }),
                 ts.end());
        for (const auto& t : ts) check_same_ring(t.mono, ts.front().mono);
        std::sort(ts.begin(), ts.end(),
                  [](const Term& a, const Term& b) { return lex_greater(a.mono, b.mono); });
        std::vector<Term> out;
        out.reserve(ts.size());
        for (auto& t : ts) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
            if (!out.empty() && bek::is_zero(out.back().coeff)) out.pop_back();
        }
        return out;
    }

    std::vector<Term> terms_;
};

// The 2-minor f_ij = x_i*y_j - x_j*y_i of the generic 2xn matrix, i < j.
// Its lex leading term is x_i*y_j with coefficient +1.
inline Polynomial make_minor(const RingContext& ctx, int i, int j) {
    require(1 <= i && i < j && j <= ctx.n, "make_minor: need 1 <= i < j <= n");
    Monomial a = Monomial::var(ctx, ctx.x_index(i)) * Monomial::var(ctx, ctx.y_index(j));
    Monomial b = Monomial::var(ctx, ctx.x_index(j)) * Monomial::var(ctx, ctx.y_index(i));
    return Polynomial::from_terms({{std::move(a), 1}, {std::move(b), -1}});
}

// "x1*y2 - x2*y1"; terms in descending lex; "0" for the zero polynomial.
inline std::string render(const RingContext& ctx, const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        Rational c = t.coeff;
        if (first) {
            if (is_negative(c)) s += "-";
        } else {
            s += is_negative(c) ? " - " : " + ";
        }
        Rational a = is_negative(c) ? Rational(-c) : c;
        std::string ms = render(ctx, t.mono);
        if (bek::is_one(a))
            s += ms;
        else if (t.mono.is_one())
            s += render(a);
        else
            s += render(a) + "*" + ms;
        first = false;
    }
    return s;
}

}  // namespace bek
