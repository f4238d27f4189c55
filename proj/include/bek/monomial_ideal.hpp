#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bek/ring.hpp"

namespace bek {

// Monomial ideal in canonical form: the unique minimal generating set,
// sorted descending in lex. Equality is a list comparison.
class MonomialIdeal {
public:
    explicit MonomialIdeal(RingContext ctx) : ctx_(std::move(ctx)) {}

    static MonomialIdeal from_generators(const RingContext& ctx, std::vector<Monomial> ms) {
        for (const auto& m : ms)
            require(m.nvars() == ctx.vars(), "monomial does not match ring");
        MonomialIdeal I(ctx);
        I.gens_ = minimalize(std::move(ms));
        return I;
    }

    const RingContext& ctx() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& m) { return m.is_squarefree(); });
    }

    // Membership is divisibility by some generator.
    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return divides(g, m); });
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    // Divisibility-minimal subset in canonical descending order.
    static std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
        // ascending (degree, lex) so every potential divisor precedes its multiples
        std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
            int da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            return lex_less(a, b);
        });
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        std::vector<Monomial> kept;
        std::vector<std::uint64_t> masks;
        for (auto& m : ms) {
            std::uint64_t sm = m.support_mask();
            bool redundant = false;
            for (std::size_t i = 0; i < kept.size(); ++i) {
                if ((masks[i] & ~sm) != 0) continue;
                if (divides(kept[i], m)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) {
                masks.push_back(sm);
                kept.push_back(std::move(m));
            }
        }
        std::sort(kept.begin(), kept.end(), lex_greater);
        return kept;
    }

private:
    RingContext ctx_;
    std::vector<Monomial> gens_;
};

// The prime ideal generated by a set of variables.
struct VariablePrime {
    std::vector<int> vars;  // sorted ascending variable indices, nonempty

    friend bool operator==(const VariablePrime&, const VariablePrime&) = default;
};

inline MonomialIdeal mono_intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
    require(A.ctx() == B.ctx(), "mono_intersect: ring mismatch");
    if (A.is_zero() || B.is_zero()) return MonomialIdeal(A.ctx());
    std::vector<Monomial> acc;
    acc.reserve(A.gens().size() * B.gens().size());
    for (const auto& a : A.gens())
        for (const auto& b : B.gens()) acc.push_back(lcm(a, b));
    return MonomialIdeal::from_generators(A.ctx(), std::move(acc));
}

inline MonomialIdeal mono_power(const MonomialIdeal& I, int k) {
    require(k >= 1, "mono_power: k must be >= 1");
    if (k == 1 || I.is_zero()) return I;
    const auto& g = I.gens();
    std::vector<Monomial> acc;
    // products over multisets of k generators
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        Monomial m = g[idx[0]];
        for (int t = 1; t < k; ++t) m = m * g[idx[static_cast<std::size_t>(t)]];
        acc.push_back(std::move(m));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == g.size() - 1) --pos;
        if (pos < 0) break;
        auto next = idx[static_cast<std::size_t>(pos)] + 1;
        for (int t = pos; t < k; ++t) idx[static_cast<std::size_t>(t)] = next;
    }
    return MonomialIdeal::from_generators(I.ctx(), std::move(acc));
}

// Minimal primes of a squarefree monomial ideal: the minimal vertex covers
// (minimal transversals) of the hypergraph of generator supports.
inline std::vector<VariablePrime> minimal_primes_squarefree(const MonomialIdeal& I) {
    require(!I.is_zero(), "minimal_primes_squarefree: zero ideal");
    require(I.is_squarefree(), "minimal_primes_squarefree: non-squarefree generator");
    std::vector<std::uint64_t> edges;
    for (const auto& g : I.gens()) edges.push_back(g.support_mask());

    std::vector<std::uint64_t> covers;
    std::set<std::uint64_t> seen;
    // branch on the vertices of the first unhit edge; dedupe revisited states
    auto recurse = [&](auto&& self, std::uint64_t cover) -> void {
        if (!seen.insert(cover).second) return;
        const std::uint64_t* unhit = nullptr;
        for (const auto& e : edges) {
            if ((e & cover) == 0) {
                unhit = &e;
                break;
            }
        }
        if (!unhit) {
            covers.push_back(cover);
            return;
        }
        for (std::uint64_t rest = *unhit; rest;) {
            std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            self(self, cover | bit);
        }
    };
    recurse(recurse, 0);

    // keep only inclusion-minimal covers
    std::vector<std::uint64_t> minimal;
    for (auto c : covers) {
        bool ok = true;
        for (auto d : covers)
            if (d != c && (d & ~c) == 0) {
                ok = false;
                break;
            }
        if (ok) minimal.push_back(c);
    }
    std::vector<VariablePrime> out;
    for (auto c : minimal) {
        VariablePrime p;
        for (int v = 0; v < I.ctx().vars(); ++v)
            if (c & (1ull << v)) p.vars.push_back(v);
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const VariablePrime& a, const VariablePrime& b) {
        if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
        return a.vars < b.vars;
    });
    return out;
}

// All degree-k monomials in the prime's variables.
inline MonomialIdeal prime_power(const RingContext& ctx, const VariablePrime& p, int k) {
    require(k >= 1, "prime_power: k must be >= 1");
    require(!p.vars.empty(), "prime_power: empty prime");
    std::vector<Monomial> acc;
    Monomial work(ctx.vars());
    auto recurse = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos + 1 == p.vars.size()) {
            work.e[static_cast<std::size_t>(p.vars[pos])] = static_cast<std::uint32_t>(left);
            acc.push_back(work);
            work.e[static_cast<std::size_t>(p.vars[pos])] = 0;
            return;
        }
        for (int take = 0; take <= left; ++take) {
            work.e[static_cast<std::size_t>(p.vars[pos])] = static_cast<std::uint32_t>(take);
            self(self, pos + 1, left - take);
        }
        work.e[static_cast<std::size_t>(p.vars[pos])] = 0;
    };
    recurse(recurse, 0, k);
    return MonomialIdeal::from_generators(ctx, std::move(acc));
}

// I^(k) = intersection of p^k over the minimal primes of the squarefree ideal I.
inline MonomialIdeal symbolic_power_squarefree(const MonomialIdeal& I, int k) {
    require(k >= 1, "symbolic_power_squarefree: k must be >= 1");
    require(I.is_squarefree(), "symbolic_power_squarefree: non-squarefree input");
    if (k == 1 || I.is_zero()) return I;
    auto primes = minimal_primes_squarefree(I);
    MonomialIdeal acc = prime_power(I.ctx(), primes.front(), k);
    for (std::size_t i = 1; i < primes.size(); ++i)
        acc = mono_intersect(acc, prime_power(I.ctx(), primes[i], k));
    return acc;
}

// Bounded probe for normal torsion-freeness: compare I^k with I^(k) for
// k = 2..kmax. Evidence only; equality beyond kmax is not certified.
struct NtfReport {
    int kmax = 0;
    std::optional<int> violation_k;
    std::optional<Monomial> witness;  // lex-smallest minimal generator of I^(k) \ I^k
    std::string note;
};

inline NtfReport ntf_probe(const MonomialIdeal& I, int kmax) {
    require(kmax >= 2, "ntf_probe: kmax must be >= 2");
    require(I.is_squarefree(), "ntf_probe: non-squarefree input");
    NtfReport rep;
    rep.kmax = kmax;
    rep.note = "probe checks k <= " + std::to_string(kmax) +
               " only; normal torsion-freeness beyond that is not certified";
    for (int k = 2; k <= kmax; ++k) {
        MonomialIdeal ordinary = mono_power(I, k);
        MonomialIdeal symbolic = symbolic_power_squarefree(I, k);
        if (ordinary == symbolic) continue;
        rep.violation_k = k;
        // gens are sorted descending, so scan backwards for the lex-smallest
        for (auto it = symbolic.gens().rbegin(); it != symbolic.gens().rend(); ++it) {
            if (!ordinary.contains(*it)) {
                rep.witness = *it;
                break;
            }
        }
        if (!rep.witness)
            throw internal_error("ntf_probe: ideals differ but no witness found");
        break;
    }
    return rep;
}

inline std::string render(const RingContext& ctx, const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string s;
    for (const auto& m : I.gens()) {
        if (!s.empty()) s += ", ";
        s += render(ctx, m);
    }
    return s;
}

inline std::string render(const RingContext& ctx, const VariablePrime& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        if (i) s += ", ";
        s += ctx.var_name(p.vars[i]);
    }
    return s + ")";
}

}  // namespace bek
