#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "bek/monomial_ideal.hpp"
#include "bek/polynomial.hpp"

namespace bek {

// Resource guards for Buchberger runs. Exceeding a limit throws bound_error;
// a completed run is always a correct answer.
struct GBLimits {
    std::size_t max_basis = 5000;
    int max_degree = 40;
};

namespace detail {

struct BasisEl {
    Polynomial p;  // monic
    Monomial lm;
    std::uint64_t lead_mask;
};

inline BasisEl make_basis_el(Polynomial p) {
    BasisEl el;
    el.p = p.monic();
    el.lm = el.p.leading_monomial();
    el.lead_mask = el.lm.support_mask();
    return el;
}

// Deterministic division: repeatedly reduce the greatest reducible term by
// the first eligible divisor in basis order. Terms skipped as irreducible
// are final (every later monomial is lex-smaller).
inline Polynomial normal_form_impl(const Polynomial& f, const std::vector<BasisEl>& basis,
                                   int skip, const GBLimits& limits) {
    std::vector<Term> remainder;
    Polynomial h = f;
    unsigned step = 0;
    while (!h.is_zero()) {
        // resource guard: leads every step, the full tail every 64th
        if (h.leading_monomial().degree() > limits.max_degree ||
            (++step % 64 == 0 && h.degree() > limits.max_degree))
            throw bound_error("normal form: degree limit exceeded");
        const Term& lt = h.leading();
        std::uint64_t mask = lt.mono.support_mask();
        const BasisEl* divisor = nullptr;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (static_cast<int>(i) == skip) continue;
            if ((basis[i].lead_mask & ~mask) != 0) continue;
            if (divides(basis[i].lm, lt.mono)) {
                divisor = &basis[i];
                break;
            }
        }
        if (divisor) {
            // basis elements are monic here, so the quotient coefficient is
            // the leading coefficient itself
            const Rational& lc = divisor->p.leading_coeff();
            h = h - divisor->p.times_term(quotient(lt.mono, divisor->lm),
                                          bek::is_one(lc) ? lt.coeff : Rational(lt.coeff / lc));
        } else {
            remainder.push_back(lt);
            h = h - Polynomial::monomial(lt.mono, lt.coeff);
        }
    }
    return Polynomial::from_terms(std::move(remainder));
}

}  // namespace detail

// Remainder of f on division by `basis`: f - result lies in (basis) and no
// term of the result is divisible by any basis leading monomial.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const GBLimits& limits = {}) {
    if (f.is_zero()) return f;
    std::vector<detail::BasisEl> B;
    B.reserve(basis.size());
    for (const auto& g : basis) {
        require(!g.is_zero(), "normal_form: zero basis element");
        check_same_ring(g.leading_monomial(), f.leading_monomial());
        B.push_back(detail::make_basis_el(g));
    }
    return detail::normal_form_impl(f, B, -1, limits);
}

inline Polynomial spoly(const Polynomial& f, const Polynomial& g) {
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    return f.times_term(quotient(l, f.leading_monomial()), Rational(1) / f.leading_coeff()) -
           g.times_term(quotient(l, g.leading_monomial()), Rational(1) / g.leading_coeff());
}

namespace detail {

struct Pair {
    int i, j;      // i < j, indices into the basis
    Monomial l;    // lcm of the leading monomials
    std::uint64_t mask;
    int deg;
};

// lcm(a, b) == c, without allocating
inline bool lcm_equals(const Monomial& a, const Monomial& b, const Monomial& c) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (std::max(a.e[k], b.e[k]) != c.e[k]) return false;
    return true;
}

// Normal selection: minimal lcm degree first, ties by lex on the lcm.
struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        switch (lex_compare(a.l, b.l)) {
            case Ordering::Less: return true;
            case Ordering::Greater: return false;
            case Ordering::Equal: break;
        }
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

inline bool coprime_leads(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.e.size(); ++k)
        if (a.e[k] && b.e[k]) return false;
    return true;
}

class Buchberger {
public:
    explicit Buchberger(const GBLimits& limits) : limits_(limits) {}

    // Reduced Groebner basis: monic, mutually reduced, ascending by lead.
    std::vector<Polynomial> run(const std::vector<Polynomial>& gens) {
        for (const auto& g : gens) {
            require(!g.is_zero(), "buchberger: zero generator");
            Polynomial r = normal_form_impl(g, basis_, -1, limits_);
            if (!r.is_zero()) add(r);  // pre-reducing inputs dedupes cheaply
        }
        while (!pairs_.empty()) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            Polynomial s = spoly(basis_[static_cast<std::size_t>(p.i)].p,
                                 basis_[static_cast<std::size_t>(p.j)].p);
            if (s.is_zero()) continue;
            if (s.degree() > limits_.max_degree)
                throw bound_error("buchberger: degree limit exceeded");
            Polynomial r = normal_form_impl(s, basis_, -1, limits_);
            if (!r.is_zero()) add(r);
        }
        return finalize();
    }

private:
    void add(const Polynomial& r) {
        BasisEl el = make_basis_el(r);
        const int t = static_cast<int>(basis_.size());
        const Monomial& lmt = el.lm;
        const std::uint64_t tmask = el.lead_mask;

        // chain criterion against pending pairs
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if ((tmask & ~it->mask) == 0 && divides(lmt, it->l) &&
                !lcm_equals(basis_[static_cast<std::size_t>(it->i)].lm, lmt, it->l) &&
                !lcm_equals(basis_[static_cast<std::size_t>(it->j)].lm, lmt, it->l))
                it = pairs_.erase(it);
            else
                ++it;
        }

        // new pairs, Gebauer-Moller pruned; sorted by (deg, lex, i) so that
        // equal lcms are adjacent and strict divisors live strictly earlier
        std::vector<Pair> fresh;
        fresh.reserve(basis_.size());
        for (int i = 0; i < t; ++i) {
            Monomial l = lcm(basis_[static_cast<std::size_t>(i)].lm, lmt);
            fresh.push_back(Pair{i, t, std::move(l), 0, 0});
            fresh.back().mask = fresh.back().l.support_mask();
            fresh.back().deg = fresh.back().l.degree();
        }
        std::vector<std::uint32_t> ord(fresh.size());
        std::iota(ord.begin(), ord.end(), 0u);
        std::sort(ord.begin(), ord.end(), [&](std::uint32_t x, std::uint32_t y) {
            const Pair &a = fresh[x], &b = fresh[y];
            if (a.deg != b.deg) return a.deg < b.deg;
            switch (lex_compare(a.l, b.l)) {
                case Ordering::Less: return true;
                case Ordering::Greater: return false;
                case Ordering::Equal: return a.i < b.i;
            }
            return false;
        });
        std::vector<bool> dead(ord.size(), false);
        for (std::size_t a = 0; a < ord.size(); ++a) {
            const Pair& pa = fresh[ord[a]];
            // a strict divisor of the lcm has strictly smaller degree
            for (std::size_t b = 0; b < a && fresh[ord[b]].deg < pa.deg; ++b) {
                const Pair& pb = fresh[ord[b]];
                if ((pb.mask & ~pa.mask) != 0) continue;
                if (divides(pb.l, pa.l)) {
                    dead[a] = true;
                    break;
                }
            }
        }
        for (std::size_t g = 0; g < ord.size();) {
            std::size_t h = g;
            bool coprime = false;
            while (h < ord.size() && fresh[ord[h]].deg == fresh[ord[g]].deg &&
                   fresh[ord[h]].l == fresh[ord[g]].l) {
                coprime = coprime || coprime_leads(
                                         basis_[static_cast<std::size_t>(fresh[ord[h]].i)].lm,
                                         lmt);
                ++h;
            }
            // drop whole groups with a coprime member; otherwise keep the
            // smallest-index representative
            if (!coprime && !dead[g]) pairs_.insert(std::move(fresh[ord[g]]));
            g = h;
        }

        basis_.push_back(std::move(el));
        if (basis_.size() > limits_.max_basis)
            throw bound_error("buchberger: basis size limit exceeded");
    }

    std::vector<Polynomial> finalize() {
        // minimalize: drop elements whose lead another lead divides
        std::vector<std::size_t> order(basis_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            switch (lex_compare(basis_[a].lm, basis_[b].lm)) {
                case Ordering::Less: return true;
                case Ordering::Greater: return false;
                case Ordering::Equal: return a < b;
            }
            return false;
        });
        std::vector<BasisEl> minimal;
        for (auto idx : order) {
            bool redundant = false;
            for (const auto& kept : minimal) {
                if ((kept.lead_mask & ~basis_[idx].lm.support_mask()) != 0) continue;
                if (divides(kept.lm, basis_[idx].lm)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) minimal.push_back(basis_[idx]);
        }
        // interreduce tails; leads are already pairwise non-divisible
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            Polynomial r =
                normal_form_impl(minimal[i].p, minimal, static_cast<int>(i), limits_);
            minimal[i].p = r.monic();
        }
        std::vector<Polynomial> out;
        out.reserve(minimal.size());
        for (auto& el : minimal) out.push_back(std::move(el.p));
        return out;
    }

    GBLimits limits_;
    std::vector<BasisEl> basis_;
    std::set<Pair, PairLess> pairs_;
};

}  // namespace detail

// Unique reduced Groebner basis under the library's lex order: every
// S-polynomial reduces to zero, no term of any element is divisible by
// another element's lead, all leads monic, sorted ascending by lead.
struct ReducedGB {
    std::vector<Polynomial> basis;
    MonomialOrder order;

    friend bool operator==(const ReducedGB& a, const ReducedGB& b) {
        return a.basis == b.basis;
    }
};

inline ReducedGB buchberger(const std::vector<Polynomial>& gens, const GBLimits& limits = {}) {
    require(!gens.empty(), "buchberger: no generators");
    return ReducedGB{detail::Buchberger(limits).run(gens), {}};
}

// Generator list with a cached reduced Groebner basis. Values are cheap to
// copy; copies made after the basis is computed share it.
class Ideal {
public:
    Ideal(RingContext ctx, std::vector<Polynomial> gens)
        : ctx_(std::move(ctx)), gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            require(!g.is_zero(), "Ideal: zero generator");
            require(g.nvars() == ctx_.vars(), "Ideal: generator from a different ring");
        }
    }

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    const ReducedGB& groebner(const GBLimits& limits = {}) const {
        if (!gb_) gb_ = std::make_shared<ReducedGB>(buchberger(gens_, limits));
        return *gb_;
    }
    bool has_cached_basis() const { return gb_ != nullptr; }
    void set_cached_basis(ReducedGB gb) const { gb_ = std::make_shared<ReducedGB>(std::move(gb)); }

private:
    RingContext ctx_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<ReducedGB> gb_;
};

inline bool ideal_member(const Polynomial& f, const Ideal& I, const GBLimits& limits = {}) {
    if (f.is_zero()) return true;
    require(f.nvars() == I.ctx().vars(), "ideal_member: ring mismatch");
    return normal_form(f, I.groebner(limits).basis, limits).is_zero();
}

// Uniqueness of the reduced basis makes equality a list comparison.
inline bool ideal_equal(const Ideal& A, const Ideal& B, const GBLimits& limits = {}) {
    require(A.ctx() == B.ctx(), "ideal_equal: ring mismatch");
    return A.groebner(limits) == B.groebner(limits);
}

inline MonomialIdeal initial_ideal(const Ideal& I, const GBLimits& limits = {}) {
    std::vector<Monomial> lms;
    for (const auto& g : I.groebner(limits).basis) lms.push_back(g.leading_monomial());
    return MonomialIdeal::from_generators(I.ctx(), std::move(lms));
}

// All products of k generators with repetition.
inline Ideal ideal_power(const Ideal& I, int k) {
    require(k >= 1, "ideal_power: k must be >= 1");
    require(!I.is_zero(), "ideal_power: zero ideal");
    if (k == 1) return I;
    const auto& g = I.gens();
    std::vector<Polynomial> prods;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        Polynomial p = g[idx[0]];
        for (int t = 1; t < k; ++t) p = p * g[idx[static_cast<std::size_t>(t)]];
        prods.push_back(std::move(p));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g.size() - 1) --pos;
        if (pos < 0) break;
        auto next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int t = pos; t < k; ++t) idx[static_cast<std::size_t>(t)] = next;
    }
    return Ideal(I.ctx(), std::move(prods));
}

// A cap B by elimination: the t-free part of a lex Groebner basis of
// t*A + (1-t)*B, t ranked above every main variable. Inputs are replaced by
// their reduced bases first, which also seeds the fold with cached work.
inline Ideal ideal_intersection(const Ideal& A, const Ideal& B, const GBLimits& limits = {}) {
    require(A.ctx() == B.ctx(), "ideal_intersection: ring mismatch");
    require(A.ctx().aux == 0, "ideal_intersection: inputs must live in the main ring");
    require(!A.is_zero() && !B.is_zero(), "ideal_intersection: zero ideal");

    const RingContext ext(A.ctx().n, A.ctx().aux + 1);
    auto lift = [&](const Polynomial& f) {
        std::vector<Term> ts;
        ts.reserve(f.terms().size());
        for (const auto& t : f.terms()) {
            Monomial m(ext.vars());
            std::copy(t.mono.e.begin(), t.mono.e.end(), m.e.begin() + 1);
            ts.push_back({std::move(m), t.coeff});
        }
        return Polynomial::from_terms(std::move(ts));
    };
    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& a : A.groebner(limits).basis) gens.push_back(t * lift(a));
    for (const auto& b : B.groebner(limits).basis) gens.push_back(one_minus_t * lift(b));

    ReducedGB ext_gb = buchberger(gens, limits);

    // under lex with t greatest, a t-free lead means a t-free polynomial
    std::vector<Polynomial> result;
    for (const auto& g : ext_gb.basis) {
        if (g.leading_monomial().e[0] != 0) continue;
        std::vector<Term> ts;
        for (const auto& term : g.terms()) {
            if (term.mono.e[0] != 0)
                throw internal_error("ideal_intersection: t survived below a t-free lead");
            Monomial m(A.ctx().vars());
            std::copy(term.mono.e.begin() + 1, term.mono.e.end(), m.e.begin());
            ts.push_back({std::move(m), term.coeff});
        }
        result.push_back(Polynomial::from_terms(std::move(ts)));
    }
    Ideal out(A.ctx(), result);
    // the t-free slice of a reduced elimination basis is itself reduced
    out.set_cached_basis(ReducedGB{std::move(result), {}});
    return out;
}

// Left fold in the given (canonical) order.
inline Ideal intersect_all(std::vector<Ideal> ideals, const GBLimits& limits = {}) {
    require(!ideals.empty(), "intersect_all: empty list");
    Ideal acc = std::move(ideals.front());
    for (std::size_t i = 1; i < ideals.size(); ++i)
        acc = ideal_intersection(acc, ideals[i], limits);
    return acc;
}

}  // namespace bek
