#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bek/errors.hpp"

namespace bek {

// Ambient polynomial ring descriptor. A graph on [n] lives in the 2n main
// variables x_1..x_n, y_1..y_n; `aux` extra elimination variables rank
// strictly above every main variable. Variable precedence, highest first:
//   t_1 > ... > t_aux > x_1 > ... > x_n > y_1 > ... > y_n
// Variable indices follow that precedence: index 0 is t_1 (or x_1 when
// aux = 0) and index aux + 2n - 1 is y_n.
struct RingContext {
    int n = 1;
    int aux = 0;

    RingContext() = default;
    RingContext(int n_, int aux_ = 0) : n(n_), aux(aux_) {
        require(n >= 1, "RingContext: vertex count must be >= 1");
        require(aux >= 0, "RingContext: elimination variable count must be >= 0");
    }

    int vars() const { return aux + 2 * n; }
    int x_index(int i) const {
        require(1 <= i && i <= n, "x index out of range");
        return aux + (i - 1);
    }
    int y_index(int i) const {
        require(1 <= i && i <= n, "y index out of range");
        return aux + n + (i - 1);
    }
    int t_index(int j) const {
        require(1 <= j && j <= aux, "t index out of range");
        return j - 1;
    }

    std::string var_name(int idx) const {
        require(0 <= idx && idx < vars(), "variable index out of range");
        if (idx < aux) return "t" + std::to_string(idx + 1);
        if (idx < aux + n) return "x" + std::to_string(idx - aux + 1);
        return "y" + std::to_string(idx - aux - n + 1);
    }

    friend bool operator==(const RingContext&, const RingContext&) = default;
};

// Dense exponent vector, length ctx.vars(), in variable precedence order.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(static_cast<std::size_t>(nvars), 0u) {}

    static Monomial one(const RingContext& ctx) { return Monomial(ctx.vars()); }
    static Monomial var(const RingContext& ctx, int idx, std::uint32_t k = 1) {
        require(0 <= idx && idx < ctx.vars(), "variable index out of range");
        Monomial m(ctx.vars());
        m.e[static_cast<std::size_t>(idx)] = k;
        return m;
    }

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        for (auto v : e)
            if (v) return false;
        return true;
    }
    bool is_squarefree() const {
        for (auto v : e)
            if (v > 1) return false;
        return true;
    }
    // Bit i set iff variable i occurs. Rings here never exceed 64 variables.
    std::uint64_t support_mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) m |= (1ull << i);
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline void check_same_ring(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw input_error("monomials from different rings");
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

// b / a; requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    check_same_ring(a, b);
    Monomial r = b;
    for (std::size_t i = 0; i < r.e.size(); ++i) {
        if (a.e[i] > r.e[i]) throw input_error("monomial quotient: not divisible");
        r.e[i] -= a.e[i];
    }
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same_ring(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
}

enum class Ordering { Less, Equal, Greater };

// Pure lexicographic order over the fixed variable precedence. It is total,
// multiplicative, and a well-order, which is all Buchberger needs.
struct MonomialOrder {
    Ordering compare(const Monomial& a, const Monomial& b) const {
        check_same_ring(a, b);
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] != b.e[i])
                return a.e[i] > b.e[i] ? Ordering::Greater : Ordering::Less;
        }
        return Ordering::Equal;
    }
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::Greater;
    }
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == Ordering::Less;
    }
};

inline Ordering lex_compare(const Monomial& a, const Monomial& b) {
    return MonomialOrder{}.compare(a, b);
}
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    return lex_compare(a, b) == Ordering::Greater;
}
inline bool lex_less(const Monomial& a, const Monomial& b) {
    return lex_compare(a, b) == Ordering::Less;
}

// "x1^2*x4*y3", exponent 1 omitted, "1" for the constant monomial.
inline std::string render(const RingContext& ctx, const Monomial& m) {
    require(m.nvars() == ctx.vars(), "monomial does not match ring");
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        auto k = m.e[static_cast<std::size_t>(i)];
        if (!k) continue;
        if (!s.empty()) s += "*";
        s += ctx.var_name(i);
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s.empty() ? "1" : s;
}

}  // namespace bek
