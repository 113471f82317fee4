#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace vsym {

// Exponent vector; length is fixed by the ambient variable count.
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    std::uint64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // o / *this; requires divides(o)
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != 0 && b.e[i] != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    // Storage order only (plain lexicographic on the exponent vector);
    // not a monomial order. Use MonomialOrder for algebraic comparisons.
    bool operator<(const Monomial& o) const { return e < o.e; }
};

// Total, multiplicative monomial order with 1 minimal.
struct MonomialOrder {
    enum class Kind { degrevlex, lex };

    Kind kind = Kind::degrevlex;
    // Optional variable reordering: position i compares variable perm[i].
    // Empty means the declared variable order.
    std::vector<std::size_t> perm;

    static MonomialOrder degrevlex() { return {Kind::degrevlex, {}}; }
    static MonomialOrder lex() { return {Kind::lex, {}}; }

    std::uint32_t exp(const Monomial& m, std::size_t i) const {
        return m.e[perm.empty() ? i : perm[i]];
    }

    // true iff a < b in this order
    bool less(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::lex) {
            for (std::size_t i = 0; i < a.nvars(); ++i) {
                if (exp(a, i) != exp(b, i)) return exp(a, i) < exp(b, i);
            }
            return false;
        }
        // degrevlex
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (exp(a, i) != exp(b, i)) return exp(a, i) > exp(b, i);
        }
        return false;
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && perm == o.perm;
    }
};

}  // namespace vsym
