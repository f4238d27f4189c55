#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bek/groebner.hpp"

using namespace bek;

namespace {

// Test-side division oracle, independent of normal_form: repeatedly rewrite
// any term divisible by a basis lead until none is left.
Polynomial oracle_reduce(Polynomial f, const std::vector<Polynomial>& basis) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : f.terms()) {
            for (const auto& g : basis) {
                if (divides(g.leading_monomial(), t.mono)) {
                    f = f - g.times_term(quotient(t.mono, g.leading_monomial()),
                                         t.coeff / g.leading_coeff());
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return f;
}

Monomial mono(const RingContext& ctx, std::initializer_list<std::pair<int, int>> powers) {
    Monomial m = Monomial::one(ctx);
    for (auto [idx, k] : powers) m.e[static_cast<std::size_t>(idx)] += static_cast<std::uint32_t>(k);
    return m;
}

Ideal cycle_ideal(int n) {
    RingContext ctx(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i < n; ++i) gens.push_back(make_minor(ctx, i, i + 1));
    gens.push_back(make_minor(ctx, 1, n));
    return Ideal(ctx, std::move(gens));
}

Ideal path_ideal(int n) {
    RingContext ctx(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i < n; ++i) gens.push_back(make_minor(ctx, i, i + 1));
    return Ideal(ctx, std::move(gens));
}

Ideal complete_ideal(int n) {
    RingContext ctx(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(make_minor(ctx, i, j));
    return Ideal(ctx, std::move(gens));
}

void check_reduced_gb_invariants(const ReducedGB& gb) {
    const auto& basis = gb.basis;
    REQUIRE(!basis.empty());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].leading_coeff() == 1);
        if (i + 1 < basis.size())
            CHECK(lex_less(basis[i].leading_monomial(), basis[i + 1].leading_monomial()));
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : basis[i].terms())
                CHECK(!divides(basis[j].leading_monomial(), t.mono));
        }
    }
    // Buchberger postcondition, exhaustively
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            CHECK(normal_form(spoly(basis[i], basis[j]), basis).is_zero());
}

}  // namespace

TEST_CASE("normal form basics") {
    RingContext ctx(3);
    Polynomial f12 = make_minor(ctx, 1, 2);
    CHECK(normal_form(f12, {f12}).is_zero());

    Polynomial x1x2 = Polynomial::monomial(
        mono(ctx, {{ctx.x_index(1), 1}, {ctx.x_index(2), 1}}));
    CHECK(normal_form(x1x2, {f12}) == x1x2);  // no term divisible by x1*y2

    Polynomial x3 = Polynomial::variable(ctx, ctx.x_index(3));
    CHECK(normal_form(x3 * f12, {f12}).is_zero());

    // f - r lies in the ideal and r has no reducible term
    Polynomial f = f12 * f12 + x1x2;
    Polynomial r = normal_form(f, {f12});
    CHECK(oracle_reduce(f - r, {f12}).is_zero());
    for (const auto& t : r.terms()) CHECK(!divides(f12.leading_monomial(), t.mono));
}

TEST_CASE("single binomial is its own reduced basis") {
    Ideal j = path_ideal(2);
    const auto& basis = j.groebner().basis;
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == make_minor(j.ctx(), 1, 2));
    check_reduced_gb_invariants(j.groebner());
}

TEST_CASE("path 1-2-3: the two minors already form the reduced basis") {
    Ideal j = path_ideal(3);
    const auto& basis = j.groebner().basis;
    REQUIRE(basis.size() == 2);
    Polynomial f12 = make_minor(j.ctx(), 1, 2), f23 = make_minor(j.ctx(), 2, 3);
    CHECK(std::count(basis.begin(), basis.end(), f12) == 1);
    CHECK(std::count(basis.begin(), basis.end(), f23) == 1);
    // oracle run: the one S-pair reduces to zero by plain division
    CHECK(oracle_reduce(spoly(f12, f23), {f12, f23}).is_zero());
    check_reduced_gb_invariants(j.groebner());
}

TEST_CASE("C_4 initial ideal matches the known leading monomials") {
    Ideal j = cycle_ideal(4);
    const RingContext& ctx = j.ctx();
    auto X = [&](int i) { return std::pair<int, int>{ctx.x_index(i), 1}; };
    auto Y = [&](int i) { return std::pair<int, int>{ctx.y_index(i), 1}; };
    std::vector<Monomial> expected = {
        mono(ctx, {X(1), X(4), Y(3)}), mono(ctx, {X(1), Y(2)}),
        mono(ctx, {X(1), Y(4)}),       mono(ctx, {X(2), Y(1), Y(4)}),
        mono(ctx, {X(2), Y(3)}),       mono(ctx, {X(3), Y(4)}),
    };
    CHECK(initial_ideal(j) == MonomialIdeal::from_generators(ctx, expected));
    check_reduced_gb_invariants(j.groebner());
    for (const auto& g : j.groebner().basis) CHECK(g.is_homogeneous());
}

TEST_CASE("closed graphs keep their quadratic generators as the basis") {
    // path with the natural labeling: ini = (x_i y_{i+1})
    Ideal j = path_ideal(4);
    MonomialIdeal ini = initial_ideal(j);
    std::vector<Monomial> expected;
    for (int i = 1; i < 4; ++i)
        expected.push_back(mono(j.ctx(), {{j.ctx().x_index(i), 1}, {j.ctx().y_index(i + 1), 1}}));
    CHECK(ini == MonomialIdeal::from_generators(j.ctx(), expected));

    Ideal k4 = complete_ideal(4);
    CHECK(initial_ideal(k4).gens().size() == 6);  // one x_i*y_j per edge
    check_reduced_gb_invariants(k4.groebner());
}

TEST_CASE("reduced basis is unique under generator shuffles") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        Ideal original = cycle_ideal(4);
        std::vector<Polynomial> gens = original.gens();
        std::shuffle(gens.begin(), gens.end(), rng);
        std::vector<Polynomial> scaled;
        for (const auto& g : gens) scaled.push_back(Rational(trial + 2) * g);
        Ideal shuffled(original.ctx(), std::move(scaled));
        CHECK(original.groebner() == shuffled.groebner());
    }
}

TEST_CASE("ideal_equal via reduced bases") {
    RingContext ctx(2);
    Polynomial f12 = make_minor(ctx, 1, 2);
    CHECK(ideal_equal(Ideal(ctx, {f12}), Ideal(ctx, {Rational(-3) * f12})));
    Polynomial x1 = Polynomial::variable(ctx, ctx.x_index(1));
    Polynomial y1 = Polynomial::variable(ctx, ctx.y_index(1));
    CHECK_FALSE(ideal_equal(Ideal(ctx, {x1}), Ideal(ctx, {x1, y1})));
    CHECK_THROWS_AS(ideal_equal(Ideal(ctx, {x1}), path_ideal(3)), input_error);
}

TEST_CASE("ideal_power expands generator products") {
    RingContext ctx(2);
    Polynomial f12 = make_minor(ctx, 1, 2);
    Ideal p2 = ideal_power(Ideal(ctx, {f12}), 2);
    REQUIRE(p2.gens().size() == 1);
    CHECK(p2.gens()[0] == f12 * f12);

    Polynomial x = Polynomial::variable(ctx, ctx.x_index(1));
    Polynomial y = Polynomial::variable(ctx, ctx.y_index(1));
    Ideal sq = ideal_power(Ideal(ctx, {x, y}), 2);
    REQUIRE(sq.gens().size() == 3);
    CHECK(ideal_equal(sq, Ideal(ctx, {x * x, x * y, y * y})));

    CHECK(ideal_power(cycle_ideal(5), 2).gens().size() == 15);  // C(6,2) products
    CHECK(ideal_power(cycle_ideal(5), 1).gens().size() == 5);
    CHECK_THROWS_AS(ideal_power(cycle_ideal(5), 0), input_error);
}

TEST_CASE("intersection by elimination") {
    RingContext ctx(2);
    Polynomial x1 = Polynomial::variable(ctx, ctx.x_index(1));
    Polynomial y1 = Polynomial::variable(ctx, ctx.y_index(1));
    Ideal xi(ctx, {x1}), yi(ctx, {y1});
    Ideal meet = ideal_intersection(xi, yi);
    CHECK(ideal_equal(meet, Ideal(ctx, {x1 * y1})));

    // idempotence
    Ideal j = cycle_ideal(4);
    CHECK(ideal_equal(ideal_intersection(j, j), j));
}

TEST_CASE("K_3 meet (x2, y2) is the path ideal: the radical decomposition instance") {
    Ideal k3 = complete_ideal(3);
    const RingContext& ctx = k3.ctx();
    Ideal vars(ctx, {Polynomial::variable(ctx, ctx.x_index(2)),
                     Polynomial::variable(ctx, ctx.y_index(2))});
    Ideal meet = ideal_intersection(k3, vars);
    CHECK(ideal_equal(meet, path_ideal(3)));
    check_reduced_gb_invariants(meet.groebner());
}

TEST_CASE("membership") {
    Ideal c4 = cycle_ideal(4);
    CHECK(ideal_member(make_minor(c4.ctx(), 1, 2), c4));
    Ideal k2 = path_ideal(2);
    CHECK_FALSE(ideal_member(Polynomial::variable(k2.ctx(), k2.ctx().x_index(1)), k2));

    // f13 is irreducible against the path basis; the oracle agrees
    Ideal p3 = path_ideal(3);
    Polynomial f13 = make_minor(p3.ctx(), 1, 3);
    CHECK_FALSE(ideal_member(f13, p3));
    CHECK(oracle_reduce(f13, p3.groebner().basis) == f13);
    CHECK(ideal_member(Polynomial::zero(), p3));
}

TEST_CASE("membership is consistent with intersection on random elements") {
    Ideal k3 = complete_ideal(3);
    const RingContext& ctx = k3.ctx();
    Ideal vars(ctx, {Polynomial::variable(ctx, ctx.x_index(2)),
                     Polynomial::variable(ctx, ctx.y_index(2))});
    Ideal meet = ideal_intersection(k3, vars);

    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pick(0, 2), coeff(-2, 2), exp(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        // random small combination of generators of one side, sometimes both
        Polynomial f = Polynomial::zero();
        for (int s = 0; s < 2; ++s) {
            const Ideal& side = (s == 0) ? k3 : vars;
            if (pick(rng) == 0) continue;
            const auto& gs = side.gens();
            Polynomial g = gs[static_cast<std::size_t>(pick(rng)) % gs.size()];
            Monomial m = Monomial::one(ctx);
            m.e[static_cast<std::size_t>(ctx.x_index(1))] = static_cast<std::uint32_t>(exp(rng));
            int c = coeff(rng);
            if (c == 0) c = 1;
            f = f + g.times_term(m, Rational(c));
        }
        bool in_meet = ideal_member(f, meet);
        CHECK(in_meet == (ideal_member(f, k3) && ideal_member(f, vars)));
    }
}

TEST_CASE("homogeneous inputs give homogeneous bases") {
    for (const Ideal& j : {cycle_ideal(5), complete_ideal(4), path_ideal(4)})
        for (const auto& g : j.groebner().basis) CHECK(g.is_homogeneous());
}

TEST_CASE("cached reduced basis generates the same ideal") {
    for (const Ideal& I : {cycle_ideal(4), complete_ideal(4)}) {
        const ReducedGB& gb = I.groebner();
        for (const auto& g : I.gens()) CHECK(normal_form(g, gb.basis).is_zero());
        CHECK(ideal_equal(I, Ideal(I.ctx(), gb.basis)));
    }
    // intersection results arrive with a pre-seeded cache; it must agree
    Ideal j = cycle_ideal(4);
    Ideal meet = ideal_intersection(j, j);
    REQUIRE(meet.has_cached_basis());
    for (const auto& g : meet.gens()) CHECK(normal_form(g, meet.groebner().basis).is_zero());
}

TEST_CASE("resource limits are reported, never silently wrong") {
    GBLimits tiny;
    tiny.max_basis = 2;
    CHECK_THROWS_AS(cycle_ideal(4).groebner(tiny), bound_error);
    GBLimits lowdeg;
    lowdeg.max_degree = 1;
    CHECK_THROWS_AS(cycle_ideal(4).groebner(lowdeg), bound_error);
    CHECK_THROWS_AS(buchberger({}), input_error);
    RingContext ctx(2);
    CHECK_THROWS_AS(Ideal(ctx, {Polynomial::zero()}), input_error);
}
