#pragma once

#include <array>
#include <string>
#include <vector>

#include "vsym/witt.hpp"

namespace vsym {

/// Affine quadric Q_{2n-1} (relation sum x_i y_i - 1) or Q_{2n}
/// (relation sum x_i y_i - z(1-z)), as a symbolic membership predicate.
struct QuadricSpec {
    bool even = false;  // false: Q_{2n-1}, true: Q_{2n}
    std::size_t n = 0;
    VarListPtr vars;      // x1..xn, y1..yn [, z]
    Polynomial relation;  // vanishes exactly on the quadric
};

inline QuadricSpec quadric_odd(std::size_t n) {
    VarList names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    VarListPtr vars = make_vars(std::move(names));
    Polynomial rel = Polynomial::constant(vars, -1);
    for (std::size_t i = 0; i < n; ++i)
        rel = rel + Polynomial::variable(vars, i) * Polynomial::variable(vars, n + i);
    return {false, n, vars, rel};
}

inline QuadricSpec quadric_even(std::size_t n) {
    VarList names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("z");
    VarListPtr vars = make_vars(std::move(names));
    Polynomial z = Polynomial::variable(vars, 2 * n);
    Polynomial rel = -(z * (Polynomial::constant(vars, 1) - z));
    for (std::size_t i = 0; i < n; ++i)
        rel = rel + Polynomial::variable(vars, i) * Polynomial::variable(vars, n + i);
    return {true, n, vars, rel};
}

/// Polynomial map between quadrics / affine spaces, with a stored symbolic
/// well-definedness witness when the target is a quadric.
struct PolyMap {
    std::string name;
    std::vector<Polynomial> components;
    std::size_t source_dim = 0, target_dim = 0;
};

inline bool quadric_member(const QuadricSpec& spec, const std::vector<Rational>& point) {
    if (point.size() != spec.vars->size())
        throw DimensionError("quadric_member: arity mismatch");
    return spec.relation.evaluate_exact(point) == 0;
}

inline bool quadric_member(const QuadricSpec& spec, const std::vector<RingElement>& point) {
    if (point.size() != spec.vars->size())
        throw DimensionError("quadric_member: arity mismatch");
    if (point.empty()) return false;
    const RingPtr& ring = point.front().ring();
    std::vector<Polynomial> args;
    for (const auto& e : point) args.push_back(e.rep());
    return elem(ring, spec.relation.substitute(args)).is_zero();
}

/// Coordinate ring of the real 3-sphere, Q[x1..x4]/<sum x_i^2 - 1>.
inline RingPtr sphere3_ring(MonomialOrder order = MonomialOrder::degrevlex()) {
    VarListPtr vars = make_vars("x", 4);
    Polynomial rel = Polynomial::constant(vars, -1);
    for (std::size_t i = 0; i < 4; ++i)
        rel = rel + Polynomial::variable(vars, i).pow(2);
    return ring_make(vars, {rel}, order);
}

/// A certified length-4 row (a,b) as a pair of 2x2 matrices
/// M = [[a1,a2],[-b2,b1]], N = [[a3,a4],[-b4,b3]] with det M + det N = 1
/// (the regrouped certificate identity, asserted).
inline std::pair<Matrix, Matrix> matrix_encoding(const UnimodularRow& row) {
    if (row.size() != 4)
        throw std::invalid_argument("matrix_encoding: row length must be 4");
    const auto& a = row.entries;
    const auto& b = row.certificate;
    Matrix M(row.ring, 2, 2), N(row.ring, 2, 2);
    M.at(0, 0) = a[0]; M.at(0, 1) = a[1]; M.at(1, 0) = -b[1]; M.at(1, 1) = b[0];
    N.at(0, 0) = a[2]; N.at(0, 1) = a[3]; N.at(1, 0) = -b[3]; N.at(1, 1) = b[2];
    if (!(M.det2() + N.det2()).is_one())
        throw std::logic_error("matrix_encoding: det M + det N != 1");
    return {std::move(M), std::move(N)};
}

/// The morphism f : Q7 -> Q4, (M,N) |-> (MN, det M), in coordinates
/// (a_1..a_4, b_1..b_4) |->
///   (a1 a3 - a2 b4, a1 a4 + a2 b3, -a4 b2 + b1 b3, a3 b2 + b1 b4, a1 b1 + a2 b2).
/// Asserts both Q4 membership and agreement with the matrix route.
inline std::vector<RingElement> map_f(const UnimodularRow& row) {
    if (row.size() != 4)
        throw std::invalid_argument("map_f: row length must be 4");
    const auto& a = row.entries;
    const auto& b = row.certificate;
    std::vector<RingElement> out = {
        a[0] * a[2] - a[1] * b[3],
        a[0] * a[3] + a[1] * b[2],
        -(a[3] * b[1]) + b[0] * b[2],
        a[2] * b[1] + b[0] * b[3],
        a[0] * b[0] + a[1] * b[1],
    };
    // agreement with (MN, det M): x1 = P00, x2 = P01, y1 = P11, y2 = -P10
    auto [M, N] = matrix_encoding(row);
    Matrix P = M * N;
    if (out[0] != P.at(0, 0) || out[1] != P.at(0, 1) || out[2] != P.at(1, 1) ||
        out[3] != -P.at(1, 0) || out[4] != M.det2())
        throw std::logic_error("map_f: coordinate formula disagrees with matrix form");
    // Q4 membership: x1 y1 + x2 y2 - z(1-z) reduces to 0
    RingElement one = elem(row.ring, Rational(1));
    RingElement lhs = out[0] * out[2] + out[1] * out[3] - out[4] * (one - out[4]);
    if (!lhs.is_zero())
        throw std::logic_error("map_f: image fails the Q4 relation");
    return out;
}

/// g : Q4 ^ Gm -> A^3 \ 0, (x1,x2,y1,y2,z,alpha) |-> (2x1, 2x2, (alpha-1)z+1).
/// A constant alpha must be a nonzero rational (a unit of Q).
inline std::vector<RingElement> map_g(const std::vector<RingElement>& q4_point,
                                      const RingElement& alpha) {
    if (q4_point.size() != 5)
        throw std::invalid_argument("map_g: expected a 5-component Q4 point");
    if (alpha.rep().is_constant() && alpha.is_zero())
        throw std::invalid_argument("map_g: alpha must be a unit");
    const RingPtr& ring = q4_point.front().ring();
    RingElement two = elem(ring, Rational(2));
    RingElement one = elem(ring, Rational(1));
    return {two * q4_point[0], two * q4_point[1],
            (alpha - one) * q4_point[4] + one};
}

/// The composite H = g o [-1] o f : Q7 -> A^3 \ 0. The output row
/// (2x1, 2x2, 1-2z) carries the derived certificate (2y1, 2y2, 1-2z);
/// the pairing 4 x1 y1 + 4 x2 y2 + (1-2z)^2 = 1 follows from the Q4
/// relation, so certificate verification doubles as a correctness check.
inline UnimodularRow compose_H(const UnimodularRow& row) {
    std::vector<RingElement> q4 = map_f(row);
    RingElement alpha = elem(row.ring, Rational(-1));
    std::vector<RingElement> out = map_g(q4, alpha);
    RingElement one = elem(row.ring, Rational(1));
    RingElement two = elem(row.ring, Rational(2));
    std::vector<RingElement> cert = {two * q4[2], two * q4[3], one - two * q4[4]};
    return row_make(row.ring, std::move(out), std::move(cert));
}

/// h : S^3 -> Q7, (x1..x4) |-> (x1..x4, x1..x4): the row (x1..x4) with
/// itself as certificate, valid in any ring containing sum x_i^2 - 1.
inline UnimodularRow map_h(const RingPtr& ring) {
    if (ring->nvars() < 4)
        throw std::invalid_argument("map_h: ring needs at least 4 variables");
    std::vector<RingElement> xs;
    for (std::size_t i = 0; i < 4; ++i)
        xs.push_back(elem(ring, Polynomial::variable(ring->vars(), i)));
    std::vector<RingElement> cert = xs;
    return row_make(ring, std::move(xs), std::move(cert));  // BadCertificate if relation absent
}

/// The kernel map alpha : Um_4 -> Um_3. Default semantics is the composite H
/// (works for any certificate). Symmetric mode applies the literal formula
///   (2 a1 a3 - 2 a2 a4, 2 a1 a4 + 2 a2 a3, a3^2 + a4^2 - a1^2 - a2^2)
/// which is the specialization certificate = entries, and is refused
/// otherwise: the two semantics agree only when b = a.
inline UnimodularRow map_alpha(const UnimodularRow& row, bool symmetric = false) {
    if (row.size() != 4)
        throw std::invalid_argument("map_alpha: row length must be 4");
    if (!symmetric) return compose_H(row);
    if (row.certificate != row.entries)
        throw std::invalid_argument(
            "map_alpha: symmetric mode requires certificate == entries "
            "(the literal orbit formula is the specialization b = a); "
            "use the default mode for a general certificate");
    const auto& a = row.entries;
    RingElement two = elem(row.ring, Rational(2));
    std::vector<RingElement> out = {
        two * (a[0] * a[2] - a[1] * a[3]),
        two * (a[0] * a[3] + a[1] * a[2]),
        a[2] * a[2] + a[3] * a[3] - a[0] * a[0] - a[1] * a[1],
    };
    std::vector<RingElement> cert = out;
    return row_make(row.ring, std::move(out), std::move(cert));
}

// ---------------------------------------------------------------------------
// Symbolic identity battery. Each check runs in the free polynomial ring
// modulo only the stated source relation, so the identities hold at the
// level of the schemes themselves, not just one quotient.

/// The Hopf-map polynomials over Q[x1..x4].
inline std::vector<Polynomial> hopf_polynomials(const VarListPtr& vars) {
    auto x = [&](std::size_t i) { return Polynomial::variable(vars, i); };
    Polynomial two = Polynomial::constant(vars, 2);
    return {two * (x(0) * x(2) - x(1) * x(3)),
            two * (x(0) * x(3) + x(1) * x(2)),
            x(2) * x(2) + x(3) * x(3) - x(0) * x(0) - x(1) * x(1)};
}

/// Q4-relation(f(a,b)) reduces to 0 modulo <sum a_i b_i - 1> in the free
/// ring on a1..a4, b1..b4.
inline bool verify_f_membership() {
    VarList names;
    for (int i = 1; i <= 4; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) names.push_back("b" + std::to_string(i));
    VarListPtr vars = make_vars(std::move(names));
    auto a = [&](std::size_t i) { return Polynomial::variable(vars, i); };
    auto b = [&](std::size_t i) { return Polynomial::variable(vars, 4 + i); };
    Polynomial one = Polynomial::constant(vars, 1);

    Polynomial x1 = a(0) * a(2) - a(1) * b(3);
    Polynomial x2 = a(0) * a(3) + a(1) * b(2);
    Polynomial y1 = -(a(3) * b(1)) + b(0) * b(2);
    Polynomial y2 = a(2) * b(1) + b(0) * b(3);
    Polynomial z = a(0) * b(0) + a(1) * b(1);
    Polynomial relation = x1 * y1 + x2 * y2 - z * (one - z);

    Polynomial ab = a(0) * b(0) + a(1) * b(1) + a(2) * b(2) + a(3) * b(3) - one;
    GroebnerBasis gb = buchberger({ab}, MonomialOrder::degrevlex());
    return normal_form(relation, gb).is_zero();
}

/// The five-component formula agrees with (MN, det M) as free polynomials.
inline bool verify_f_matrix_agreement() {
    VarList names;
    for (int i = 1; i <= 4; ++i) names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 4; ++i) names.push_back("b" + std::to_string(i));
    VarListPtr vars = make_vars(std::move(names));
    auto a = [&](std::size_t i) { return Polynomial::variable(vars, i); };
    auto b = [&](std::size_t i) { return Polynomial::variable(vars, 4 + i); };

    // M = [[a1,a2],[-b2,b1]], N = [[a3,a4],[-b4,b3]], P = MN
    Polynomial P00 = a(0) * a(2) + a(1) * (-b(3));
    Polynomial P01 = a(0) * a(3) + a(1) * b(2);
    Polynomial P10 = (-b(1)) * a(2) + b(0) * (-b(3));
    Polynomial P11 = (-b(1)) * a(3) + b(0) * b(2);
    Polynomial detM = a(0) * b(0) - a(1) * (-b(1));

    Polynomial x1 = a(0) * a(2) - a(1) * b(3);
    Polynomial x2 = a(0) * a(3) + a(1) * b(2);
    Polynomial y1 = -(a(3) * b(1)) + b(0) * b(2);
    Polynomial y2 = a(2) * b(1) + b(0) * b(3);
    Polynomial z = a(0) * b(0) + a(1) * b(1);

    return x1 == P00 && x2 == P01 && y1 == P11 && y2 == -P10 && z == detM;
}

/// compose_H(map_h) over the 3-sphere ring reduces to the Hopf triple.
inline bool verify_proposition_formula() {
    RingPtr ring = sphere3_ring();
    UnimodularRow hopf = compose_H(map_h(ring));
    std::vector<Polynomial> expected = hopf_polynomials(ring->vars());
    for (std::size_t i = 0; i < 3; ++i)
        if (hopf.entries[i] != elem(ring, expected[i])) return false;
    return true;
}

/// sum alpha_i(x)^2 == (sum x_i^2)^2 by pure expansion, no ideal.
inline bool verify_hopf_norm_identity() {
    VarListPtr vars = make_vars("x", 4);
    std::vector<Polynomial> h = hopf_polynomials(vars);
    Polynomial lhs(vars), norm(vars);
    for (const auto& c : h) lhs = lhs + c * c;
    for (std::size_t i = 0; i < 4; ++i)
        norm = norm + Polynomial::variable(vars, i).pow(2);
    return lhs == norm * norm;
}

/// Substituting alpha = -1 into the symbolic g equals applying g with the
/// constant -1: the two evaluation orders produce identical polynomials.
inline bool verify_minus_one_naturality() {
    VarListPtr vars = make_vars({"x1", "x2", "y1", "y2", "z", "alpha"});
    auto v = [&](std::size_t i) { return Polynomial::variable(vars, i); };
    Polynomial one = Polynomial::constant(vars, 1);
    Polynomial two = Polynomial::constant(vars, 2);
    std::vector<Polynomial> symbolic = {two * v(0), two * v(1),
                                        (v(5) - one) * v(4) + one};
    // route 1: substitute alpha := -1 afterwards
    std::vector<Polynomial> args;
    for (std::size_t i = 0; i < 5; ++i) args.push_back(v(i));
    args.push_back(Polynomial::constant(vars, -1));
    // route 2: apply g with the constant -1 directly
    std::vector<Polynomial> direct = {two * v(0), two * v(1),
                                      (Polynomial::constant(vars, -1) - one) * v(4) + one};
    for (std::size_t i = 0; i < 3; ++i)
        if (symbolic[i].substitute(args) != direct[i]) return false;
    return true;
}

}  // namespace vsym
