#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bek/graph.hpp"
#include "bek/groebner.hpp"

namespace bek {

// Desk-scale guards for the binomial-side pipeline.
struct Bounds {
    int max_n = 8;        // vertices, for full power comparisons
    int max_power = 3;    // k and t in power comparisons
    int max_enum_n = 16;  // cut-set enumeration (2^n scan)
    GBLimits gb{};
};

// J_G = (x_i y_j - x_j y_i : {i,j} an edge of G), one generator per edge.
inline Ideal binomial_edge_ideal(const Graph& g) {
    require(!g.edges().empty(), "binomial_edge_ideal: graph has no edges");
    RingContext ctx(g.n());
    std::vector<Polynomial> gens;
    gens.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) gens.push_back(make_minor(ctx, i, j));
    return Ideal(ctx, std::move(gens));
}

// P_S(G): the variables {x_i, y_i : i in S} plus the binomial edge ideal of
// the complete graph on each connected component of G minus S. Prime by
// construction. `minimal` records whether S satisfies the cut-set criterion
// (only those index Min(J_G)).
struct MinimalPrime {
    CutSet cut;
    Ideal ideal;
    bool minimal = false;
};

inline MinimalPrime minimal_prime_ideal(const Graph& g, std::vector<int> s) {
    RingContext ctx(g.n());
    CutSet cut = components_without(g, std::move(s));
    std::vector<Polynomial> gens;
    for (int i : cut.s) {
        gens.push_back(Polynomial::variable(ctx, ctx.x_index(i)));
        gens.push_back(Polynomial::variable(ctx, ctx.y_index(i)));
    }
    for (const auto& klass : cut.components)
        for (std::size_t a = 0; a < klass.size(); ++a)
            for (std::size_t b = a + 1; b < klass.size(); ++b)
                gens.push_back(make_minor(ctx, klass[a], klass[b]));
    bool minimal = true;
    if (!cut.s.empty()) {
        for (int i : cut.s) {
            std::vector<int> smaller;
            for (int v : cut.s)
                if (v != i) smaller.push_back(v);
            if (components_without(g, std::move(smaller)).c >= cut.c) {
                minimal = false;
                break;
            }
        }
    }
    return MinimalPrime{std::move(cut), Ideal(ctx, std::move(gens)), minimal};
}

// One prime per S in C(G), in canonical (|S|, lex) order.
inline std::vector<MinimalPrime> minimal_primes(const Graph& g, const Bounds& bounds = {}) {
    std::vector<MinimalPrime> out;
    for (const auto& cs : cut_sets(g, bounds.max_enum_n)) out.push_back(minimal_prime_ideal(g, cs.s));
    return out;
}

// J_G = intersection of all P_S(G) over C(G) (the radical decomposition).
inline bool check_radical_decomposition(const Graph& g, const Bounds& bounds = {}) {
    Ideal j = binomial_edge_ideal(g);
    std::vector<Ideal> primes;
    for (auto& p : minimal_primes(g, bounds)) primes.push_back(std::move(p.ideal));
    return ideal_equal(j, intersect_all(std::move(primes), bounds.gb), bounds.gb);
}

namespace detail {

inline void check_pipeline_bounds(const Graph& g, int k, const Bounds& bounds,
                                  const char* who) {
    if (g.n() > bounds.max_n)
        throw bound_error(std::string(who) + ": n = " + std::to_string(g.n()) +
                          " exceeds bound " + std::to_string(bounds.max_n));
    if (k > bounds.max_power)
        throw bound_error(std::string(who) + ": power " + std::to_string(k) +
                          " exceeds bound " + std::to_string(bounds.max_power));
}

}  // namespace detail

// J_G^(k), computed as the intersection of P_S(G)^k over C(G). Valid because
// J_G is radical, so its primary components are the minimal primes, and the
// symbolic power of each determinantal prime P_S equals its ordinary power.
inline Ideal symbolic_power(const Graph& g, int k, const Bounds& bounds = {}) {
    require(k >= 1, "symbolic_power: k must be >= 1");
    require(!g.edges().empty(), "symbolic_power: graph has no edges");
    detail::check_pipeline_bounds(g, k, bounds, "symbolic_power");
    std::vector<Ideal> powers;
    for (auto& p : minimal_primes(g, bounds)) powers.push_back(ideal_power(p.ideal, k));
    return intersect_all(std::move(powers), bounds.gb);
}

struct PowerComparison {
    enum class Verdict { Equal, StrictlyContained };

    PowerComparison(Graph g, int k_) : graph(std::move(g)), k(k_) {}

    Graph graph;
    int k;
    Verdict verdict = Verdict::Equal;
    std::optional<Polynomial> witness;  // element of J^(k) \ J^k
    std::optional<ReducedGB> ordinary_gb;
    std::optional<ReducedGB> symbolic_gb;
};

namespace detail {

inline PowerComparison compare_powers_direct(const Graph& g, int k, const Bounds& bounds) {
    Ideal ordinary = ideal_power(binomial_edge_ideal(g), k);
    Ideal symbolic = bek::symbolic_power(g, k, bounds);
    PowerComparison cmp{g, k};
    cmp.ordinary_gb = ordinary.groebner(bounds.gb);
    cmp.symbolic_gb = symbolic.groebner(bounds.gb);
    if (*cmp.ordinary_gb == *cmp.symbolic_gb) {
        cmp.verdict = PowerComparison::Verdict::Equal;
        return cmp;
    }
    cmp.verdict = PowerComparison::Verdict::StrictlyContained;
    // deterministic witness: lex-smallest reduced-basis element of J^(k)
    // that is not a member of J^k
    for (const auto& cand : cmp.symbolic_gb->basis) {
        if (!ideal_member(cand, ordinary, bounds.gb)) {
            cmp.witness = cand;
            break;
        }
    }
    if (!cmp.witness)
        throw internal_error("compare_powers: bases differ but no witness found");
    if (ideal_member(*cmp.witness, ordinary, bounds.gb) ||
        !ideal_member(*cmp.witness, symbolic, bounds.gb))
        throw internal_error("compare_powers: witness failed its membership re-check");
    return cmp;
}

inline Graph component_subgraph(const Graph& g, const std::vector<int>& klass) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (std::binary_search(klass.begin(), klass.end(), u)) edges.emplace_back(u, v);
    return Graph(g.n(), std::move(edges));
}

}  // namespace detail

// Verdict on J_G^k vs J_G^(k). Disconnected graphs are compared component by
// component (the binomial symbolic-power expansion makes the equality at k
// equivalent to per-component equalities at every t <= k); the full ideals
// are only assembled when a witness has to be produced.
inline PowerComparison compare_powers(const Graph& g, int k, const Bounds& bounds = {}) {
    require(k >= 1, "compare_powers: k must be >= 1");
    detail::check_pipeline_bounds(g, k, bounds, "compare_powers");
    require(!g.edges().empty(), "compare_powers: graph has no edges");

    std::vector<std::vector<int>> parts;
    for (const auto& klass : components_without(g, {}).components)
        if (klass.size() >= 2) parts.push_back(klass);

    if (parts.size() <= 1 || k == 1) return detail::compare_powers_direct(g, k, bounds);

    bool all_equal = true;
    for (const auto& klass : parts) {
        Graph sub = detail::component_subgraph(g, klass);
        for (int t = 2; t <= k && all_equal; ++t) {
            if (detail::compare_powers_direct(sub, t, bounds).verdict !=
                PowerComparison::Verdict::Equal)
                all_equal = false;
        }
        if (!all_equal) break;
    }
    if (all_equal) {
        PowerComparison cmp{g, k};
        cmp.verdict = PowerComparison::Verdict::Equal;
        return cmp;
    }
    return detail::compare_powers_direct(g, k, bounds);
}

// ini(J_G) equals the intersection of ini(P_S(G)) over C(G). Both sides are
// computed by independent pipelines (Buchberger vs the monomial lcm fold),
// so a mismatch signals an engine bug.
inline bool check_ini_intersection(const Graph& g, const Bounds& bounds = {}) {
    MonomialIdeal lhs = initial_ideal(binomial_edge_ideal(g), bounds.gb);
    auto primes = minimal_primes(g, bounds);
    require(!primes.empty(), "check_ini_intersection: no minimal primes");
    std::optional<MonomialIdeal> rhs;
    for (auto& p : primes) {
        MonomialIdeal ini_p = initial_ideal(p.ideal, bounds.gb);
        rhs = rhs ? mono_intersect(*rhs, ini_p) : ini_p;
    }
    return lhs == *rhs;
}

// Instance check of the commuting identity ini(P_S^t) = (ini P_S)^t.
inline bool check_ini_power_commutes(const Graph& g, std::vector<int> s, int t,
                                     const Bounds& bounds = {}) {
    require(t >= 1, "check_ini_power_commutes: t must be >= 1");
    detail::check_pipeline_bounds(g, t, bounds, "check_ini_power_commutes");
    MinimalPrime p = minimal_prime_ideal(g, std::move(s));
    require(!p.ideal.is_zero(), "check_ini_power_commutes: P_S is the zero ideal");
    MonomialIdeal lhs = initial_ideal(ideal_power(p.ideal, t), bounds.gb);
    MonomialIdeal rhs = mono_power(initial_ideal(p.ideal, bounds.gb), t);
    return lhs == rhs;
}

// Checklist for the transfer lemma at power t. conclusion = true entitles the
// caller to assert J_G^(t) = J_G^t without computing either side.
struct CertificateReport {
    CertificateReport(Graph g, int t_) : graph(std::move(g)), t(t_) {}

    Graph graph;
    int t;
    bool ini_intersection = false;                        // hypothesis (i)
    std::vector<std::pair<CutSet, bool>> ini_power_commutes;  // hypothesis (ii.b), per prime
    bool monomial_symbolic_equal = false;                 // hypothesis (ii.c)
    // hypothesis (ii.a) is the determinantal-prime equality; it is a theorem
    // and is recorded rather than checked
    std::string hypothesis_a = "P_S^(t) = P_S^t holds for every S (theorem, not checked)";
    bool conclusion = false;
    std::optional<PowerComparison::Verdict> cross_check;
};

inline CertificateReport lemma_certificate(const Graph& g, int t, const Bounds& bounds = {},
                                           bool cross_check = false) {
    require(t >= 2, "lemma_certificate: t must be >= 2");
    detail::check_pipeline_bounds(g, t, bounds, "lemma_certificate");
    CertificateReport rep{g, t};
    rep.ini_intersection = check_ini_intersection(g, bounds);
    bool all_commute = true;
    for (const auto& cs : cut_sets(g, bounds.max_enum_n)) {
        bool ok = check_ini_power_commutes(g, cs.s, t, bounds);
        all_commute = all_commute && ok;
        rep.ini_power_commutes.emplace_back(cs, ok);
    }
    MonomialIdeal ini = initial_ideal(binomial_edge_ideal(g), bounds.gb);
    rep.monomial_symbolic_equal = mono_power(ini, t) == symbolic_power_squarefree(ini, t);
    rep.conclusion = rep.ini_intersection && all_commute && rep.monomial_symbolic_equal;
    if (cross_check) rep.cross_check = compare_powers(g, t, bounds).verdict;
    return rep;
}

// Binomial expansion of the symbolic power over variable-disjoint parts:
// sum over compositions i_1 + ... + i_c = k of the products of the parts'
// symbolic powers (0-th power contributing the unit ideal).
inline Ideal symbolic_power_disjoint(const std::vector<Graph>& parts, int k,
                                     const Bounds& bounds = {}) {
    require(!parts.empty(), "symbolic_power_disjoint: no parts");
    require(k >= 1, "symbolic_power_disjoint: k must be >= 1");
    const int n = parts.front().n();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const auto& part : parts) {
        require(part.n() == n, "symbolic_power_disjoint: parts on different vertex sets");
        require(!part.edges().empty(), "symbolic_power_disjoint: edgeless part");
        for (auto [u, v] : part.edges()) {
            if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
                throw input_error("symbolic_power_disjoint: parts share variables");
        }
        for (auto [u, v] : part.edges())
            used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
    }

    RingContext ctx(n);
    const std::size_t c = parts.size();
    // per part, the symbolic powers for exponents 1..k
    std::vector<std::vector<Ideal>> sym(c);
    for (std::size_t m = 0; m < c; ++m)
        for (int e = 1; e <= k; ++e) sym[m].push_back(symbolic_power(parts[m], e, bounds));

    std::vector<Polynomial> gens;
    std::vector<int> comp(c, 0);
    auto emit = [&]() {
        std::vector<Polynomial> acc{Polynomial::constant(ctx, 1)};
        for (std::size_t m = 0; m < c; ++m) {
            if (comp[m] == 0) continue;
            const auto& factor = sym[m][static_cast<std::size_t>(comp[m] - 1)].gens();
            std::vector<Polynomial> next;
            next.reserve(acc.size() * factor.size());
            for (const auto& a : acc)
                for (const auto& f : factor) next.push_back(a * f);
            acc = std::move(next);
        }
        for (auto& p : acc) gens.push_back(std::move(p));
    };
    auto recurse = [&](auto&& self, std::size_t m, int left) -> void {
        if (m + 1 == c) {
            comp[m] = left;
            emit();
            return;
        }
        for (int take = 0; take <= left; ++take) {
            comp[m] = take;
            self(self, m + 1, left - take);
        }
    };
    recurse(recurse, 0, k);
    return Ideal(ctx, std::move(gens));
}

}  // namespace bek
