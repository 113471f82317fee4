#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vsym/groebner.hpp"
#include "vsym/parse.hpp"
#include "vsym/polynomial.hpp"

namespace vsym {

/// Finitely presented Q-algebra Q[x_1..x_n]/I with a cached reduced
/// Groebner basis. Immutable after construction.
class QuotientRing {
public:
    QuotientRing(VarListPtr vars, std::vector<Polynomial> relations,
                 MonomialOrder order = MonomialOrder::degrevlex(),
                 std::int64_t budget = kDefaultBudget)
        : vars_(std::move(vars)), relations_(std::move(relations)), order_(order) {
        gb_ = buchberger(relations_, order_, /*track=*/false, budget);
    }

    const VarListPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_->size(); }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const GroebnerBasis& gb() const { return gb_; }
    const MonomialOrder& order() const { return order_; }

    // 1 is in the relation ideal, i.e. the ring collapsed to zero
    bool is_trivial() const { return gb_.contains_one(); }

    bool is_free() const { return relations_.empty(); }

    Polynomial reduce(const Polynomial& p) const { return normal_form(p, gb_); }

private:
    VarListPtr vars_;
    std::vector<Polynomial> relations_;
    MonomialOrder order_;
    GroebnerBasis gb_;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

inline RingPtr ring_make(VarListPtr vars, std::vector<Polynomial> relations,
                         MonomialOrder order = MonomialOrder::degrevlex()) {
    return std::make_shared<const QuotientRing>(std::move(vars), std::move(relations), order);
}

inline RingPtr ring_make(const std::vector<std::string>& var_names,
                         const std::vector<std::string>& relation_texts,
                         MonomialOrder order = MonomialOrder::degrevlex()) {
    VarListPtr vars = make_vars(var_names);
    std::vector<Polynomial> rels;
    for (const auto& t : relation_texts) rels.push_back(poly_parse(t, vars));
    return ring_make(vars, std::move(rels), order);
}

/// Element of a quotient ring, stored as the canonical normal form of its
/// representative, so equality is representative equality.
class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, const Polynomial& rep)
        : ring_(std::move(ring)), rep_(ring_->reduce(rep)) {}

    const RingPtr& ring() const { return ring_; }
    const Polynomial& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }

    RingElement operator+(const RingElement& o) const { return make(rep_ + o.rep_); }
    RingElement operator-(const RingElement& o) const { return make(rep_ - o.rep_); }
    RingElement operator-() const { return make(-rep_); }
    RingElement operator*(const RingElement& o) const { return make(rep_ * o.rep_); }
    RingElement operator*(const Rational& c) const { return make(rep_ * c); }

    bool operator==(const RingElement& o) const { return rep_ == o.rep_; }
    bool operator!=(const RingElement& o) const { return rep_ != o.rep_; }

    std::string str() const { return rep_.str(ring_->order()); }

private:
    RingElement make(const Polynomial& p) const {
        RingElement e;
        e.ring_ = ring_;
        e.rep_ = ring_->reduce(p);
        return e;
    }

    RingPtr ring_;
    Polynomial rep_;
};

inline RingElement elem(const RingPtr& ring, const Polynomial& p) {
    return RingElement(ring, p);
}

inline RingElement elem(const RingPtr& ring, const std::string& text) {
    return RingElement(ring, poly_parse(text, ring->vars()));
}

inline RingElement elem(const RingPtr& ring, const Rational& c) {
    return RingElement(ring, Polynomial::constant(ring->vars(), c));
}

/// If 1 lies in <elements> + I, returns cofactors (c_1..c_n) with
/// sum c_i * elements[i] == 1 in the ring; the identity is re-verified by
/// reduction before returning. Returns nullopt when 1 is provably not in
/// the ideal; throws BudgetExceeded when the search ran out of steps.
inline std::optional<std::vector<RingElement>> express_one(
    const RingPtr& ring, const std::vector<RingElement>& elements,
    std::int64_t budget = kDefaultBudget) {
    if (elements.empty())
        throw std::invalid_argument("express_one: empty element list");
    if (ring->is_trivial())
        throw std::invalid_argument("express_one: trivial ring refused");

    std::vector<Polynomial> gens = ring->relations();
    const std::size_t nrel = gens.size();
    for (const auto& e : elements) gens.push_back(e.rep());

    GroebnerBasis gb = buchberger(gens, ring->order(), /*track=*/true, budget);
    Polynomial one = Polynomial::constant(ring->vars(), 1);
    auto [rem, cof] = normal_form_with_cofactors(one, gb, budget);
    if (!rem.is_zero()) return std::nullopt;

    // Dropped zero generators shift indices: map cofactors back by position
    // among the nonzero originals.
    std::vector<RingElement> cert;
    std::size_t orig_idx = 0;
    for (std::size_t i = 0; i < nrel; ++i)
        if (!ring->relations()[i].is_zero()) ++orig_idx;
    for (const auto& e : elements) {
        if (e.rep().is_zero()) {
            cert.push_back(elem(ring, Rational(0)));
        } else {
            cert.push_back(elem(ring, cof[orig_idx]));
            ++orig_idx;
        }
    }

    RingElement check = elem(ring, Rational(0));
    for (std::size_t i = 0; i < elements.size(); ++i)
        check = check + cert[i] * elements[i];
    if (!check.is_one())
        throw std::logic_error("express_one: certificate failed re-verification");
    return cert;
}

}  // namespace vsym
