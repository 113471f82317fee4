#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vsym/errors.hpp"
#include "vsym/monomial.hpp"
#include "vsym/rational.hpp"

namespace vsym {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

inline VarListPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarList>(std::move(names));
}

// "x1".."xn" style generated names
inline VarListPtr make_vars(const std::string& stem, std::size_t n) {
    VarList v;
    v.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return make_vars(std::move(v));
}

/// Exact multivariate polynomial over Q. Immutable in spirit: all operations
/// return new values. Zero coefficients are never stored, so equality is
/// term-map equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    explicit Polynomial(VarListPtr vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarListPtr vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[Monomial(p.nvars())] = c;
        return p;
    }

    static Polynomial variable(VarListPtr vars, std::size_t index) {
        Polynomial p(vars);
        Monomial m(p.nvars());
        m.e[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial term(VarListPtr vars, Monomial m, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    const VarListPtr& vars() const { return vars_; }
    std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Monomial(nvars()));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    std::int64_t degree() const {  // -1 for the zero polynomial
        std::int64_t d = -1;
        for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, static_cast<std::int64_t>(m.degree()));
        return d;
    }

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
            if (ord.less(best->first, it->first)) best = it;
        }
        return {best->first, best->second};
    }

    Polynomial operator+(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_compatible(o);
        Polynomial r(vars_ ? vars_ : o.vars_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial operator*(const Rational& c) const {
        Polynomial r(vars_);
        if (c == 0) return r;
        r.terms_ = terms_;
        for (auto& [m, coef] : r.terms_) coef *= c;
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

    Polynomial pow(std::uint32_t n) const {
        Polynomial r = constant(vars_, 1);
        Polynomial base(*this);
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    // subtract c * m * o, in place; the division algorithm's workhorse
    void sub_scaled(const Rational& c, const Monomial& m, const Polynomial& o) {
        for (const auto& [mo, co] : o.terms_) add_term(m * mo, -c * co);
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(vars_);
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Monomial d = m;
            d.e[var] -= 1;
            r.add_term(d, c * m.e[var]);
        }
        return r;
    }

    // full substitution: args[i] replaces variable i (any coefficient ring
    // realized as Polynomial over a possibly different variable set)
    Polynomial substitute(const std::vector<Polynomial>& args) const {
        if (args.size() != nvars())
            throw VariableMismatch("substitute: argument count mismatch");
        VarListPtr tv = args.empty() ? vars_ : args.front().vars();
        Polynomial r(tv);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(tv, c);
            for (std::size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i]) t = t * args[i].pow(m.e[i]);
            r = r + t;
        }
        return r;
    }

    double evaluate(const std::vector<double>& x) const {
        if (x.size() != nvars()) throw DimensionError("evaluate: point dimension mismatch");
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = to_double(c);
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    Rational evaluate_exact(const std::vector<Rational>& x) const {
        if (x.size() != nvars()) throw DimensionError("evaluate_exact: point dimension mismatch");
        Rational acc = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.e.size(); ++i)
                for (std::uint32_t k = 0; k < m.e[i]; ++k) t *= x[i];
            acc += t;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }

    /// Deterministic printing: terms in descending order (degrevlex by default).
    std::string str(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Rational>*> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(),
                  [&](auto* a, auto* b) { return ord.greater(a->first, b->first); });
        std::ostringstream os;
        bool first = true;
        for (auto* t : ts) {
            Rational c = t->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            std::string mono = monomial_str(t->first);
            if (mono.empty()) {
                os << rational_str(c);
            } else {
                if (c != 1) os << rational_str(c) << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    void check_compatible(const Polynomial& o) const {
        if (!vars_ || !o.vars_) return;  // default-constructed zero is compatible with anything
        if (vars_ != o.vars_ && *vars_ != *o.vars_)
            throw VariableMismatch("polynomials over different variable sets");
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << (*vars_)[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
        return os.str();
    }

    VarListPtr vars_;
    TermMap terms_;
};

}  // namespace vsym
