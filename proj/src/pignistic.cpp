#include "credal/pignistic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "credal/geometry.hpp"

namespace credal::pignistic {

using geom::Vec2;
using ternary::BaryPoint;

ProbDist betp_finite(const MassFunction& m) {
    if (m.m[0] > kMassNegTol)
        throw std::invalid_argument("betp_finite: mass on the empty set (normalize first)");
    std::vector<double> p(static_cast<std::size_t>(m.frame.size()), 0.0);
    for (std::uint32_t a = 1; a < m.frame.num_subsets(); ++a) {
        if (m(a) == 0.0) continue;
        double share = m(a) / popcount_mask(a);
        for (int i = 0; i < m.frame.size(); ++i)
            if (a & (1u << i)) p[static_cast<std::size_t>(i)] += share;
    }
    return {m.frame, std::move(p)};
}

ProbDist betp_credal(const ternary::CredalSet3& P, const Frame& frame) {
    if (frame.size() != 3) throw std::invalid_argument("betp_credal: frame must have 3 atoms");
    double wsum = 0.0;
    double acc[3] = {0, 0, 0};
    for (const auto& comp : P.components()) {
        double w = 0.0;
        BaryPoint c;
        switch (P.dimension()) {
            case 0:
                w = 1.0;  // counting measure
                c = comp.vertices[0];
                break;
            case 1: {
                Vec2 a = ternary::to_plane(comp.vertices[0]);
                Vec2 b = ternary::to_plane(comp.vertices[1]);
                w = std::hypot(b.x - a.x, b.y - a.y);
                c = BaryPoint((comp.vertices[0].a + comp.vertices[1].a) / 2,
                              (comp.vertices[0].b + comp.vertices[1].b) / 2,
                              (comp.vertices[0].c + comp.vertices[1].c) / 2);
                break;
            }
            default: {
                geom::Polygon poly;
                for (const auto& v : comp.vertices) poly.push_back(ternary::to_plane(v));
                w = geom::polygon_area(poly);
                c = ternary::from_plane(geom::polygon_centroid(poly));
                break;
            }
        }
        acc[0] += w * c.a;
        acc[1] += w * c.b;
        acc[2] += w * c.c;
        wsum += w;
    }
    if (wsum <= 0.0) throw std::invalid_argument("betp_credal: degenerate credal set measure");
    return {frame, {acc[0] / wsum, acc[1] / wsum, acc[2] / wsum}};
}

namespace {

// Affine rank of a vertex set, and (when the vertices form a simplex of that
// rank) its k-dimensional volume via the Gram determinant.
struct SimplexShape {
    int rank = 0;
    bool is_simplex = false;
    double volume = 0.0;  // defined when is_simplex
};

SimplexShape simplex_shape(const std::vector<std::vector<double>>& vs) {
    SimplexShape out;
    const std::size_t k = vs.size() - 1, n = vs[0].size();
    if (k == 0) {
        out.rank = 0;
        out.is_simplex = true;
        out.volume = 1.0;  // counting measure for points
        return out;
    }
    // Modified Gram-Schmidt on the edge vectors.
    std::vector<std::vector<double>> basis;
    for (std::size_t i = 1; i <= k; ++i) {
        std::vector<double> e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = vs[i][j] - vs[0][j];
        for (const auto& b : basis) {
            double d = 0.0;
            for (std::size_t j = 0; j < n; ++j) d += e[j] * b[j];
            for (std::size_t j = 0; j < n; ++j) e[j] -= d * b[j];
        }
        double norm2 = 0.0;
        for (double c : e) norm2 += c * c;
        if (norm2 > 1e-20) {
            double inv = 1.0 / std::sqrt(norm2);
            for (double& c : e) c *= inv;
            basis.push_back(std::move(e));
        }
    }
    out.rank = static_cast<int>(basis.size());
    out.is_simplex = (out.rank == static_cast<int>(k));
    if (out.is_simplex) {
        // Volume = sqrt(det(A^T A)) / k! with A the edge matrix; the product
        // of the Gram-Schmidt norms gives the same value.
        double vol = 1.0;
        std::vector<std::vector<double>> edges;
        for (std::size_t i = 1; i <= k; ++i) {
            std::vector<double> e(n);
            for (std::size_t j = 0; j < n; ++j) e[j] = vs[i][j] - vs[0][j];
            for (const auto& b : edges) {
                double d = 0.0;
                for (std::size_t j = 0; j < n; ++j) d += e[j] * b[j];
                double b2 = 0.0;
                for (double c : b) b2 += c * c;
                for (std::size_t j = 0; j < n; ++j) e[j] -= d / b2 * b[j];
            }
            double norm2 = 0.0;
            for (double c : e) norm2 += c * c;
            vol *= std::sqrt(norm2);
            edges.push_back(e);
        }
        for (std::size_t i = 2; i <= k; ++i) vol /= static_cast<double>(i);
        out.volume = vol;
    }
    return out;
}

}  // namespace

McCentroid betp_credal_mc(const mc::CredalPolytopeSet& P, const mc::MCConfig& cfg) {
    const std::size_t n = static_cast<std::size_t>(P.n);
    std::mt19937_64 rng(mc::mix_seed(cfg.seed, 0));

    std::vector<SimplexShape> shapes;
    bool all_simplex = true;
    int dim = -1;
    for (const auto& comp : P.components) {
        SimplexShape s = simplex_shape(comp);
        if (dim < 0) dim = s.rank;
        if (s.rank != dim)
            throw std::invalid_argument("betp_credal_mc: mixed-dimension credal set");
        all_simplex = all_simplex && s.is_simplex;
        shapes.push_back(s);
    }

    std::vector<double> mult;
    std::vector<std::vector<double>> samples;
    samples.reserve(4096);

    if (all_simplex) {
        // Pick a component by volume, then a uniform point of the simplex by
        // flat Dirichlet weights over its vertices.
        std::vector<double> cum;
        double vtot = 0.0;
        for (const auto& s : shapes) {
            vtot += s.volume;
            cum.push_back(vtot);
        }
        if (vtot <= 0.0)
            throw std::invalid_argument("betp_credal_mc: degenerate credal set measure");
        for (long long i = 0; i < cfg.samples; ++i) {
            double pick = mc::uniform01(rng) * vtot;
            std::size_t c = static_cast<std::size_t>(
                std::lower_bound(cum.begin(), cum.end(), pick) - cum.begin());
            if (c >= shapes.size()) c = shapes.size() - 1;
            const auto& vs = P.components[c];
            std::vector<double> w(vs.size());
            double wsum = 0.0;
            for (double& x : w) {
                x = -std::log1p(-mc::uniform01(rng));
                wsum += x;
            }
            std::vector<double> p(n, 0.0);
            for (std::size_t v = 0; v < vs.size(); ++v)
                for (std::size_t j = 0; j < n; ++j) p[j] += w[v] / wsum * vs[v][j];
            mult.push_back(1.0);
            samples.push_back(std::move(p));
        }
    } else {
        if (dim != P.n - 1)
            throw std::invalid_argument(
                "betp_credal_mc: non-simplex components must be full-dimensional");
        // Rejection from the ambient simplex, weighted by component
        // multiplicity.
        for (long long i = 0; i < cfg.samples; ++i) {
            std::vector<double> q = mc::sample_simplex(rng, P.n);
            int k = 0;
            for (const auto& comp : P.components)
                if (mc::polytope_contains(comp, q)) ++k;
            if (k > 0) {
                mult.push_back(static_cast<double>(k));
                samples.push_back(std::move(q));
            }
        }
        if (samples.empty())
            throw std::runtime_error("betp_credal_mc: no samples hit the credal set");
    }

    McCentroid out;
    out.samples = cfg.samples;
    out.seed = cfg.seed;
    out.probs.assign(n, 0.0);
    out.se.assign(n, 0.0);
    double wsum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        wsum += mult[i];
        for (std::size_t j = 0; j < n; ++j) out.probs[j] += mult[i] * samples[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) out.probs[j] /= wsum;
    // Ratio-estimator standard error per coordinate.
    for (std::size_t j = 0; j < n; ++j) {
        double rss = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) {
            double r = mult[i] * (samples[i][j] - out.probs[j]);
            rss += r * r;
        }
        out.se[j] = std::sqrt(rss) / wsum;
    }
    return out;
}

double betp_bounds_binary(double lower_s, double lower_f) {
    if (lower_s < 0 || lower_f < 0 || lower_s > 1 || lower_f > 1 || lower_s + lower_f > 1.0 + 1e-12)
        throw std::invalid_argument("betp_bounds_binary: inconsistent lower probabilities");
    return 0.5 * (1.0 + lower_s - lower_f);
}

}  // namespace credal::pignistic
