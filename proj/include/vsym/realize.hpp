#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "vsym/errors.hpp"
#include "vsym/polynomial.hpp"
#include "vsym/quotient.hpp"

namespace vsym {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

namespace vec {

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
template <typename V>
inline double norm(const V& a) { return std::sqrt(dot(a, a)); }
template <typename V>
inline V sub(const V& a, const V& b) {
    V r;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
template <typename V>
inline V add(const V& a, const V& b) {
    V r;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
template <typename V>
inline V scale(const V& a, double s) {
    V r;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}
template <typename V>
inline V normalize(const V& a) { return scale(a, 1.0 / norm(a)); }

}  // namespace vec

/// Polynomial map evaluated in double precision. The rational coefficients
/// are exact; only the evaluation rounds.
struct NumericMap {
    std::vector<Polynomial> components;
    std::size_t source_dim = 0, target_dim = 0;

    static NumericMap from_polys(std::vector<Polynomial> comps, std::size_t src) {
        NumericMap m;
        m.target_dim = comps.size();
        m.source_dim = src;
        m.components = std::move(comps);
        return m;
    }

    static NumericMap from_elements(const std::vector<RingElement>& elems,
                                    std::size_t src) {
        std::vector<Polynomial> comps;
        for (const auto& e : elems) comps.push_back(e.rep());
        return from_polys(std::move(comps), src);
    }

    std::vector<double> evaluate(const std::vector<double>& p) const {
        if (p.size() != source_dim)
            throw DimensionError("NumericMap::evaluate: dimension mismatch");
        std::vector<double> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.evaluate(p));
        return out;
    }

    Vec3 evaluate3(const Vec4& p) const {
        auto out = evaluate({p[0], p[1], p[2], p[3]});
        return {out[0], out[1], out[2]};
    }
};

// ---------------------------------------------------------------------------
// Low-discrepancy sphere sampling (deterministic)

namespace detail {

inline double halton(std::uint64_t index, std::uint64_t base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= static_cast<double>(base);
        r += f * static_cast<double>(index % base);
        index /= base;
    }
    return r;
}

// 4D Halton point mapped to S^3 via Box-Muller pairs and normalization
inline Vec4 sphere_point(std::uint64_t index) {
    const double u1 = halton(index + 1, 2), u2 = halton(index + 1, 3);
    const double u3 = halton(index + 1, 5), u4 = halton(index + 1, 7);
    const double two_pi = 2.0 * std::numbers::pi;
    const double r1 = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
    const double r2 = std::sqrt(-2.0 * std::log(std::max(u3, 1e-300)));
    Vec4 g = {r1 * std::cos(two_pi * u2), r1 * std::sin(two_pi * u2),
              r2 * std::cos(two_pi * u4), r2 * std::sin(two_pi * u4)};
    const double n = vec::norm(g);
    return n > 0 ? vec::scale(g, 1.0 / n) : Vec4{1, 0, 0, 0};
}

}  // namespace detail

inline std::vector<Vec4> sphere_samples(std::size_t count) {
    std::vector<Vec4> pts;
    pts.reserve(count);
    for (std::size_t i = 0; i < count; ++i) pts.push_back(detail::sphere_point(i));
    return pts;
}

struct NonvanishingReport {
    double min_norm = 0.0;
    Vec4 argmin{};
};

/// Evaluates the map on a low-discrepancy sample of S^3 and reports the
/// minimal target norm. For a map into A^3 \ 0 this must stay away from 0.
inline NonvanishingReport certify_nonvanishing(const NumericMap& map, std::size_t samples) {
    if (samples < 1000)
        throw std::invalid_argument("certify_nonvanishing: need at least 10^3 samples");
    NonvanishingReport rep;
    rep.min_norm = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        Vec4 x = detail::sphere_point(i);
        double n = vec::norm(map.evaluate3(x));
        if (n < rep.min_norm) {
            rep.min_norm = n;
            rep.argmin = x;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Stereographic chart of S^3

/// Chart R^3 -> S^3 \ {pole}: u maps to ((|u|^2-1) pole + 2 sum u_i e_i)/(|u|^2+1)
/// with {pole, e1, e2, e3} an orthonormal frame.
struct Chart {
    Vec4 pole{};
    std::array<Vec4, 3> frame{};

    explicit Chart(const Vec4& p) : pole(vec::normalize(p)) {
        // Gram-Schmidt the standard basis against the pole
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4 && k < 3; ++i) {
            Vec4 v{};
            v[i] = 1.0;
            v = vec::sub(v, vec::scale(pole, vec::dot(v, pole)));
            for (std::size_t j = 0; j < k; ++j)
                v = vec::sub(v, vec::scale(frame[j], vec::dot(v, frame[j])));
            if (vec::norm(v) > 1e-8) frame[k++] = vec::normalize(v);
        }
    }

    Vec4 to_sphere(const Vec3& u) const {
        const double s = vec::dot(u, u);
        Vec4 x = vec::scale(pole, (s - 1.0) / (s + 1.0));
        for (std::size_t i = 0; i < 3; ++i)
            x = vec::add(x, vec::scale(frame[i], 2.0 * u[i] / (s + 1.0)));
        return x;
    }

    Vec3 from_sphere(const Vec4& x) const {
        const double d = 1.0 - vec::dot(x, pole);
        if (std::abs(d) < 1e-12)
            throw NumericError("stereographic projection: point at the pole");
        return {vec::dot(x, frame[0]) / d, vec::dot(x, frame[1]) / d,
                vec::dot(x, frame[2]) / d};
    }
};

/// Closed polyline approximating a preimage circle, in chart coordinates.
struct LevelCurve {
    std::vector<Vec3> points;  // first == last within closure tolerance
};

namespace detail {

// Two level-set constraints whose joint zero locus (in the chart) contains
// the preimage curve: components of F - v orthogonal to v.
struct CurveSystem {
    const NumericMap& map;
    const Chart& chart;
    Vec3 value;
    Vec3 w1, w2;  // orthonormal complement of value

    CurveSystem(const NumericMap& m, const Chart& c, const Vec3& v)
        : map(m), chart(c), value(v) {
        Vec3 t = std::abs(v[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        w1 = vec::normalize(vec::cross(v, t));
        w2 = vec::normalize(vec::cross(v, w1));
    }

    Vec3 residual3(const Vec3& u) const {
        return vec::sub(map.evaluate3(chart.to_sphere(u)), value);
    }

    std::array<double, 2> g(const Vec3& u) const {
        Vec3 r = residual3(u);
        return {vec::dot(w1, r), vec::dot(w2, r)};
    }

    // 2x3 Jacobian by central differences
    std::array<Vec3, 2> jacobian(const Vec3& u) const {
        const double h = 1e-6;
        std::array<Vec3, 2> J{};
        for (std::size_t i = 0; i < 3; ++i) {
            Vec3 up = u, dn = u;
            up[i] += h;
            dn[i] -= h;
            auto gp = g(up), gd = g(dn);
            J[0][i] = (gp[0] - gd[0]) / (2 * h);
            J[1][i] = (gp[1] - gd[1]) / (2 * h);
        }
        return J;
    }

    // least-norm Newton step onto {g = 0}; returns false on rank collapse
    bool newton(Vec3& u, int iters = 25) const {
        for (int it = 0; it < iters; ++it) {
            auto gv = g(u);
            if (std::abs(gv[0]) < 1e-13 && std::abs(gv[1]) < 1e-13) return true;
            auto J = jacobian(u);
            // solve J J^T y = -g, step = J^T y
            const double A = vec::dot(J[0], J[0]), B = vec::dot(J[0], J[1]),
                         C = vec::dot(J[1], J[1]);
            const double det = A * C - B * B;
            if (std::abs(det) < 1e-14) return false;
            const double y0 = (-gv[0] * C + gv[1] * B) / det;
            const double y1 = (-gv[1] * A + gv[0] * B) / det;
            for (std::size_t i = 0; i < 3; ++i)
                u[i] += y0 * J[0][i] + y1 * J[1][i];
        }
        auto gv = g(u);
        return std::abs(gv[0]) < 1e-9 && std::abs(gv[1]) < 1e-9;
    }

    Vec3 tangent(const Vec3& u) const {
        auto J = jacobian(u);
        Vec3 t = vec::cross(J[0], J[1]);
        const double n = vec::norm(t);
        if (n < 1e-8) throw NumericError("irregular value: Jacobian rank < 2 on curve");
        return vec::scale(t, 1.0 / n);
    }
};

}  // namespace detail

/// Traces the closed curve map^{-1}(value) on S^3 through a stereographic
/// chart by predictor-corrector marching with Newton projection.
/// `grid` controls the nominal number of segments.
inline LevelCurve preimage_curve(const NumericMap& map, const Vec3& value,
                                 std::size_t grid, const Chart& chart,
                                 const Vec4& seed_hint) {
    detail::CurveSystem sys(map, chart, value);

    Vec3 u = chart.from_sphere(seed_hint);
    if (!sys.newton(u)) throw NumericError("irregular value: Newton projection failed at seed");
    {
        Vec3 r = sys.residual3(u);
        if (vec::norm(r) > 1e-6)
            throw NumericError("seed converged to the wrong level set (antipodal fiber?)");
    }

    const double base_step = 2.0 * std::numbers::pi / static_cast<double>(grid);
    const double chart_bound = 50.0;
    const std::size_t max_steps = 100 * grid;

    LevelCurve curve;
    curve.points.push_back(u);
    Vec3 prev_dir = sys.tangent(u);
    Vec3 start = u;

    for (std::size_t step = 0; step < max_steps; ++step) {
        Vec3 t = sys.tangent(u);
        if (vec::dot(t, prev_dir) < 0) t = vec::scale(t, -1.0);
        prev_dir = t;

        // scale the step with local chart magnification so the sampling is
        // roughly uniform on the sphere
        const double mag = (vec::dot(u, u) + 1.0) / 2.0;
        double h = base_step * mag;
        Vec3 next = vec::add(u, vec::scale(t, h));
        if (!sys.newton(next)) throw NumericError("curve tracing lost the level set");
        if (vec::norm(next) > chart_bound)
            throw NumericError("curve escaped the chart");

        curve.points.push_back(next);
        u = next;

        if (step >= 3 && vec::norm(vec::sub(u, start)) < h) {
            curve.points.push_back(start);  // close exactly
            return curve;
        }
    }
    throw NumericError("open curve: tracing budget exhausted before closure");
}

/// Gauss linking number of two closed polylines by the midpoint-rule
/// double sum over segment pairs.
inline double gauss_linking(const LevelCurve& c1, const LevelCurve& c2) {
    double acc = 0.0;
    const auto& p = c1.points;
    const auto& q = c2.points;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Vec3 d1 = vec::sub(p[i + 1], p[i]);
        Vec3 m1 = vec::scale(vec::add(p[i], p[i + 1]), 0.5);
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            Vec3 d2 = vec::sub(q[j + 1], q[j]);
            Vec3 m2 = vec::scale(vec::add(q[j], q[j + 1]), 0.5);
            Vec3 r = vec::sub(m1, m2);
            const double rn = vec::norm(r);
            if (rn < 1e-12) throw NumericError("linking integral: curves touch");
            acc += vec::dot(r, vec::cross(d1, d2)) / (rn * rn * rn);
        }
    }
    return acc / (4.0 * std::numbers::pi);
}

struct HopfResult {
    int linking = 0;
    double residual = 0.0;
    std::size_t grid_used = 0;
};

namespace detail {

// Candidate chart poles, scored by distance to the near-fiber sample set.
inline std::vector<Vec4> candidate_poles() {
    std::vector<Vec4> ps;
    for (std::size_t i = 0; i < 4; ++i) {
        Vec4 v{};
        v[i] = 1.0;
        ps.push_back(v);
        v[i] = -1.0;
        ps.push_back(v);
    }
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                for (int s3 : {-1, 1})
                    ps.push_back(Vec4{0.5 * s0, 0.5 * s1, 0.5 * s2, 0.5 * s3});
    return ps;
}

struct FiberSeeds {
    Vec4 seed1, seed2;
    std::vector<Vec4> near_fibers;
};

inline FiberSeeds find_seeds(const NumericMap& map, const Vec3& v1, const Vec3& v2,
                             std::size_t samples = 8192) {
    FiberSeeds out;
    double best1 = std::numeric_limits<double>::infinity(), best2 = best1;
    for (std::size_t i = 0; i < samples; ++i) {
        Vec4 x = sphere_point(i);
        Vec3 fx = map.evaluate3(x);
        const double d1 = vec::norm(vec::sub(fx, v1));
        const double d2 = vec::norm(vec::sub(fx, v2));
        if (d1 < best1) { best1 = d1; out.seed1 = x; }
        if (d2 < best2) { best2 = d2; out.seed2 = x; }
        if (d1 < 0.25 || d2 < 0.25) out.near_fibers.push_back(x);
    }
    return out;
}

}  // namespace detail

/// Numeric Hopf invariant: linking number of the preimage curves of two
/// regular values. The pole is chosen to maximize distance from both
/// curves; resolution doubles (up to 3 times) until the linking integral
/// is within 0.2 of an integer.
inline HopfResult hopf_invariant(const NumericMap& map, const Vec3& value1,
                                 const Vec3& value2, std::size_t grid) {
    if (vec::norm(vec::sub(value1, value2)) < 1e-9)
        throw std::invalid_argument("hopf_invariant: values must be distinct");

    auto seeds = detail::find_seeds(map, value1, value2);

    // rank poles by min distance to the near-fiber set
    auto poles = detail::candidate_poles();
    std::sort(poles.begin(), poles.end(), [&](const Vec4& a, const Vec4& b) {
        auto score = [&](const Vec4& p) {
            double m = std::numeric_limits<double>::infinity();
            for (const auto& x : seeds.near_fibers)
                m = std::min(m, vec::norm(vec::sub(x, p)));
            return m;
        };
        return score(a) > score(b);
    });

    std::string last_error = "no usable chart pole";
    for (std::size_t doubling = 0; doubling <= 3; ++doubling) {
        const std::size_t g = grid << doubling;
        for (const auto& pole : poles) {
            try {
                Chart chart(pole);
                LevelCurve c1 = preimage_curve(map, value1, g, chart, seeds.seed1);
                LevelCurve c2 = preimage_curve(map, value2, g, chart, seeds.seed2);
                const double L = gauss_linking(c1, c2);
                const double rounded = std::round(L);
                const double residual = std::abs(L - rounded);
                if (residual <= 0.2)
                    return {static_cast<int>(rounded), residual, g};
                last_error = "linking residual too large: " + std::to_string(residual);
                break;  // resolution problem, not a chart problem
            } catch (const NumericError& e) {
                last_error = e.what();
                continue;  // try the next pole
            }
        }
    }
    throw NumericError("hopf_invariant failed: " + last_error);
}

}  // namespace vsym
