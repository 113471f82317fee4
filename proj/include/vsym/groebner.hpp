#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "vsym/errors.hpp"
#include "vsym/polynomial.hpp"

namespace vsym {

inline constexpr std::int64_t kDefaultBudget = 1'000'000;

// Shared reduction-step counter. Throws instead of ever returning a
// truncated answer.
struct Budget {
    std::int64_t remaining = kDefaultBudget;
    void tick() {
        if (--remaining < 0) throw BudgetExceeded();
    }
};

/// Reduced Groebner basis, optionally carrying the representation of each
/// generator as a combination of the original input polynomials.
struct GroebnerBasis {
    std::vector<Polynomial> generators;
    MonomialOrder order;
    bool reduced = false;

    // Tracking data (present iff buchberger ran with track = true):
    // generators[k] == sum_i reps[k][i] * originals[i]
    std::vector<Polynomial> originals;
    std::vector<std::vector<Polynomial>> reps;

    bool tracked() const { return !originals.empty(); }

    bool contains_one() const {
        return generators.size() == 1 && generators.front().is_one();
    }
};

inline Polynomial spolynomial(const Polynomial& f, const Polynomial& g,
                              const MonomialOrder& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("spolynomial: zero input");
    auto [lmf, lcf] = f.leading_term(ord);
    auto [lmg, lcg] = g.leading_term(ord);
    Monomial l = lcm(lmf, lmg);
    Polynomial s = f * (Rational(1) / lcf);
    Polynomial t = g * (Rational(1) / lcg);
    Polynomial uf = Polynomial::term(f.vars(), lmf.divide_into(l), 1);
    Polynomial ug = Polynomial::term(g.vars(), lmg.divide_into(l), 1);
    return uf * s - ug * t;
}

namespace detail {

// Basis element with its representation over the originals.
struct Tracked {
    Polynomial p;
    std::vector<Polynomial> rep;  // empty when tracking is off
    Monomial lm;
    Rational lc;

    void refresh(const MonomialOrder& ord) {
        if (!p.is_zero()) std::tie(lm, lc) = p.leading_term(ord);
    }
};

// Top-reduction loop: reduces t fully (every term) against basis.
// Maintains t.rep so that t.p == original combination at all times.
inline void reduce_full(Tracked& t, const std::vector<Tracked>& basis,
                        const MonomialOrder& ord, Budget& budget) {
    Polynomial remainder(t.p.vars());
    Polynomial work = std::move(t.p);
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(ord);
        bool hit = false;
        for (const auto& b : basis) {
            if (b.p.is_zero() || !b.lm.divides(lm)) continue;
            budget.tick();
            Rational q = lc / b.lc;
            Monomial qm = b.lm.divide_into(lm);
            work.sub_scaled(q, qm, b.p);
            if (!t.rep.empty()) {
                Polynomial qpoly = Polynomial::term(remainder.vars(), qm, q);
                for (std::size_t i = 0; i < t.rep.size(); ++i)
                    t.rep[i] = t.rep[i] - qpoly * b.rep[i];
            }
            hit = true;
            break;
        }
        if (!hit) {
            // move the irreducible leading term to the remainder
            remainder = remainder + Polynomial::term(remainder.vars(), lm, lc);
            work.sub_scaled(lc, Monomial(lm.nvars()), Polynomial::term(work.vars(), lm, 1));
        }
    }
    t.p = std::move(remainder);
    t.refresh(ord);
}

}  // namespace detail

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// two classical pair-elimination criteria. Returns the reduced basis
/// (monic generators, fully inter-reduced, canonical for the ideal).
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input,
                                const MonomialOrder& ord, bool track = false,
                                std::int64_t budget_steps = kDefaultBudget) {
    using detail::Tracked;
    Budget budget{budget_steps};

    std::vector<Polynomial> originals;
    for (const auto& p : input)
        if (!p.is_zero()) originals.push_back(p);

    std::vector<Tracked> basis;
    for (std::size_t i = 0; i < originals.size(); ++i) {
        Tracked t;
        t.p = originals[i];
        if (track) {
            VarListPtr vars = originals[i].vars();
            for (std::size_t j = 0; j < originals.size(); ++j)
                t.rep.push_back(Polynomial::constant(vars, j == i ? 1 : 0));
        }
        t.refresh(ord);
        basis.push_back(std::move(t));
    }

    struct Pair {
        std::size_t i, j;
        Monomial l;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.l.degree() != b.l.degree()) return a.l.degree() < b.l.degree();
        return a.l < b.l;
    };

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            pairs.push_back({i, k, lcm(basis[i].lm, basis[k].lm)});
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    auto chain_criterion = [&](const Pair& pr) {
        // Buchberger's second criterion: some l with lm_l | lcm(i,j) and both
        // (i,l), (l,j) pairs already processed (approximated: not pending).
        for (std::size_t l = 0; l < basis.size(); ++l) {
            if (l == pr.i || l == pr.j) continue;
            if (!basis[l].lm.divides(pr.l)) continue;
            bool pending = false;
            for (const auto& q : pairs) {
                if ((q.i == std::min(pr.i, l) && q.j == std::max(pr.i, l)) ||
                    (q.i == std::min(pr.j, l) && q.j == std::max(pr.j, l))) {
                    pending = true;
                    break;
                }
            }
            if (!pending) return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);

        // first criterion: coprime leading monomials reduce to zero
        if (coprime(basis[pr.i].lm, basis[pr.j].lm)) continue;
        if (chain_criterion(pr)) continue;

        Tracked s;
        {
            const Tracked& f = basis[pr.i];
            const Tracked& g = basis[pr.j];
            Polynomial uf = Polynomial::term(f.p.vars(), f.lm.divide_into(pr.l),
                                             Rational(1) / f.lc);
            Polynomial ug = Polynomial::term(g.p.vars(), g.lm.divide_into(pr.l),
                                             Rational(1) / g.lc);
            s.p = uf * f.p - ug * g.p;
            if (track) {
                for (std::size_t i = 0; i < originals.size(); ++i)
                    s.rep.push_back(uf * f.rep[i] - ug * g.rep[i]);
            }
        }
        if (s.p.is_zero()) continue;
        s.refresh(ord);
        detail::reduce_full(s, basis, ord, budget);
        if (s.p.is_zero()) continue;

        basis.push_back(std::move(s));
        push_pairs_for(basis.size() - 1);
    }

    // Inter-reduce to the unique reduced basis, keeping representations.
    // 1. discard generators whose leading monomial is divisible by another's
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].p.is_zero()) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || basis[j].p.is_zero()) continue;
            if (basis[j].lm.divides(basis[i].lm)) {
                basis[i].p = Polynomial(basis[i].p.vars());
                break;
            }
        }
    }
    std::erase_if(basis, [](const Tracked& t) { return t.p.is_zero(); });

    // 2. reduce every generator's tail against the others
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Tracked t = std::move(basis[i]);
        basis[i].p = Polynomial(t.p.vars());  // exclude self from reduction
        detail::reduce_full(t, basis, ord, budget);
        basis[i] = std::move(t);
    }

    // 3. make monic
    for (auto& t : basis) {
        Rational inv = Rational(1) / t.lc;
        t.p = t.p * inv;
        for (auto& r : t.rep) r = r * inv;
        t.refresh(ord);
    }

    std::sort(basis.begin(), basis.end(), [&](const Tracked& a, const Tracked& b) {
        return ord.less(a.lm, b.lm);
    });

    GroebnerBasis gb;
    gb.order = ord;
    gb.reduced = true;
    if (track) gb.originals = originals;
    for (auto& t : basis) {
        gb.generators.push_back(std::move(t.p));
        if (track) gb.reps.push_back(std::move(t.rep));
    }
    return gb;
}

/// Unique remainder of f under multivariate division by the (reduced) basis.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                              std::int64_t budget_steps = kDefaultBudget) {
    Budget budget{budget_steps};
    detail::Tracked t;
    t.p = f;
    if (!t.p.is_zero()) t.refresh(gb.order);

    std::vector<detail::Tracked> basis;
    for (const auto& g : gb.generators) {
        detail::Tracked b;
        b.p = g;
        b.refresh(gb.order);
        basis.push_back(std::move(b));
    }
    detail::reduce_full(t, basis, gb.order, budget);
    return t.p;
}

/// Division with quotient extraction mapped through the basis representations:
/// returns (r, c) with f == r + sum_i c[i] * gb.originals[i], exactly.
inline std::pair<Polynomial, std::vector<Polynomial>> normal_form_with_cofactors(
    const Polynomial& f, const GroebnerBasis& gb,
    std::int64_t budget_steps = kDefaultBudget) {
    if (!gb.tracked())
        throw std::logic_error("normal_form_with_cofactors: basis has no tracking data");
    Budget budget{budget_steps};

    // Track the quotients directly: divide by the basis and push each
    // quotient through the generator representations.
    VarListPtr vars = f.vars() ? f.vars() : gb.originals.front().vars();
    std::vector<Polynomial> cof(gb.originals.size(), Polynomial::constant(vars, 0));

    Polynomial remainder(vars);
    Polynomial work = f;
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term(gb.order);
        bool hit = false;
        for (std::size_t k = 0; k < gb.generators.size(); ++k) {
            const Polynomial& g = gb.generators[k];
            auto [glm, glc] = g.leading_term(gb.order);
            if (!glm.divides(lm)) continue;
            budget.tick();
            Rational q = lc / glc;
            Monomial qm = glm.divide_into(lm);
            work.sub_scaled(q, qm, g);
            Polynomial qpoly = Polynomial::term(vars, qm, q);
            for (std::size_t i = 0; i < cof.size(); ++i)
                cof[i] = cof[i] + qpoly * gb.reps[k][i];
            hit = true;
            break;
        }
        if (!hit) {
            remainder = remainder + Polynomial::term(vars, lm, lc);
            work.sub_scaled(lc, Monomial(lm.nvars()), Polynomial::term(vars, lm, 1));
        }
    }
    return {remainder, cof};
}

}  // namespace vsym
