#include "credal/mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace credal::mc {

CredalPolytopeSet::CredalPolytopeSet(int atoms,
                                     std::vector<std::vector<std::vector<double>>> comps)
    : n(atoms), components(std::move(comps)) {
    if (n < 2) throw std::invalid_argument("CredalPolytopeSet: need n >= 2");
    if (components.empty()) throw std::invalid_argument("CredalPolytopeSet: no components");
    for (const auto& comp : components) {
        if (comp.empty()) throw std::invalid_argument("CredalPolytopeSet: empty component");
        for (const auto& v : comp) {
            if (static_cast<int>(v.size()) != n)
                throw std::invalid_argument("CredalPolytopeSet: vertex dimension mismatch");
            double sum = 0.0;
            for (double c : v) {
                if (c < -1e-12) throw std::invalid_argument("CredalPolytopeSet: negative coord");
                sum += c;
            }
            if (std::abs(sum - 1.0) > 1e-9)
                throw std::invalid_argument("CredalPolytopeSet: vertex does not sum to 1");
        }
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t z = seed + (chunk + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_simplex(std::mt19937_64& rng, int n) {
    if (n < 2) throw std::invalid_argument("sample_simplex: need n >= 2");
    std::vector<double> q(static_cast<std::size_t>(n));
    for (;;) {
        double sum = 0.0;
        for (double& c : q) {
            c = -std::log1p(-uniform01(rng));
            sum += c;
        }
        bool interior = sum > 0.0;
        for (double& c : q) {
            c /= sum;
            if (c <= 0.0) interior = false;
        }
        if (interior) return q;
    }
}

bool lp_feasible(const std::vector<std::vector<double>>& ge_rows,
                 const std::vector<std::vector<double>>& eq_rows,
                 const std::vector<double>& eq_rhs) {
    constexpr double kPivotTol = 1e-10;
    const std::size_t nge = ge_rows.size(), neq = eq_rows.size();
    const std::size_t m = nge + neq;
    if (m == 0) return true;
    const std::size_t nv = (nge ? ge_rows[0].size() : eq_rows[0].size());
    // Columns: nv structural, nge surplus, m artificial, then rhs.
    const std::size_t ncols = nv + nge + m + 1;
    std::vector<std::vector<double>> T(m, std::vector<double>(ncols, 0.0));
    std::vector<std::size_t> basis(m);

    for (std::size_t i = 0; i < nge; ++i) {
        for (std::size_t j = 0; j < nv; ++j) T[i][j] = ge_rows[i][j];
        T[i][nv + i] = -1.0;          // surplus
        T[i][nv + nge + i] = 1.0;     // artificial
        T[i][ncols - 1] = 0.0;
        basis[i] = nv + nge + i;
    }
    for (std::size_t k = 0; k < neq; ++k) {
        std::size_t i = nge + k;
        double sign = eq_rhs[k] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < nv; ++j) T[i][j] = sign * eq_rows[k][j];
        T[i][nv + nge + i] = 1.0;
        T[i][ncols - 1] = sign * eq_rhs[k];
        basis[i] = nv + nge + i;
    }

    const std::size_t nonart = nv + nge;
    for (int iter = 0; iter < 2000; ++iter) {
        // Reduced cost of column j for minimizing the artificial sum.
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < nonart; ++j) {
            double d = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= nonart) d += T[i][j];
            if (d > kPivotTol) {  // entering j reduces the artificial sum
                enter = j;
                break;  // Bland: lowest index
            }
        }
        if (enter == ncols) break;
        // Ratio test, Bland tie-break on basis index.
        std::size_t leave = m;
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= kPivotTol) continue;
            double ratio = T[i][ncols - 1] / T[i][enter];
            if (leave == m || ratio < best - 1e-15 ||
                (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen with the simplex row
        double piv = T[leave][enter];
        for (double& c : T[leave]) c /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave) continue;
            double f = T[i][enter];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < ncols; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    double art = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nonart) art += T[i][ncols - 1];
    return art <= 1e-9;
}

bool polytope_contains(const std::vector<std::vector<double>>& vertices,
                       const std::vector<double>& q) {
    const std::size_t n = q.size(), k = vertices.size();
    std::vector<std::vector<double>> eq;
    std::vector<double> rhs;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(k);
        for (std::size_t v = 0; v < k; ++v) row[v] = vertices[v][i];
        eq.push_back(std::move(row));
        rhs.push_back(q[i]);
    }
    eq.push_back(std::vector<double>(k, 1.0));
    rhs.push_back(1.0);
    return lp_feasible({}, eq, rhs);
}

namespace {

bool point_in_region(const std::vector<double>& p, const std::vector<double>& q, int w) {
    for (std::size_t x = 0; x < q.size(); ++x) {
        if (static_cast<int>(x) == w) continue;
        if (p[static_cast<std::size_t>(w)] * q[x] < p[x] * q[static_cast<std::size_t>(w)])
            return false;
    }
    return true;
}

// Does the component's convex hull meet P_w(q)?
bool component_meets_region(const std::vector<std::vector<double>>& vertices,
                            const std::vector<double>& q, int w) {
    for (const auto& v : vertices)
        if (point_in_region(v, q, w)) return true;
    if (vertices.size() == 1) return false;
    // Feasibility in convex weights: sum_v lambda_v (v_w q_x - v_x q_w) >= 0.
    const std::size_t n = q.size(), k = vertices.size();
    std::vector<std::vector<double>> ge;
    for (std::size_t x = 0; x < n; ++x) {
        if (static_cast<int>(x) == w) continue;
        std::vector<double> row(k);
        for (std::size_t v = 0; v < k; ++v)
            row[v] = vertices[v][static_cast<std::size_t>(w)] * q[x] -
                     vertices[v][x] * q[static_cast<std::size_t>(w)];
        ge.push_back(std::move(row));
    }
    std::vector<std::vector<double>> eq = {std::vector<double>(k, 1.0)};
    return lp_feasible(ge, eq, {1.0});
}

}  // namespace

std::uint32_t projection_mask(const std::vector<double>& q, const CredalPolytopeSet& P) {
    if (static_cast<int>(q.size()) != P.n)
        throw std::invalid_argument("projection_mask: dimension mismatch");
    std::uint32_t mask = 0;
    for (int w = 0; w < P.n; ++w) {
        for (const auto& comp : P.components) {
            if (component_meets_region(comp, q, w)) {
                mask |= 1u << w;
                break;
            }
        }
    }
    return mask;
}

MCResult estimate(const CredalPolytopeSet& P, const MCConfig& cfg, const Frame& frame) {
    if (frame.size() != P.n) throw std::invalid_argument("estimate: frame size mismatch");
    std::mt19937_64 rng(mix_seed(cfg.seed, 0));
    std::vector<long long> tally(frame.num_subsets(), 0);
    for (long long i = 0; i < cfg.samples; ++i)
        ++tally[projection_mask(sample_simplex(rng, P.n), P)];

    MCResult out{frame, {}, {}, std::vector<double>(frame.num_subsets(), 0.0), cfg.samples,
                 cfg.seed};
    const double N = static_cast<double>(cfg.samples);
    std::vector<double> mass(frame.num_subsets(), 0.0);
    for (std::uint32_t a = 0; a < frame.num_subsets(); ++a) {
        if (tally[a] == 0) continue;
        double mhat = static_cast<double>(tally[a]) / N;
        mass[a] = mhat;
        out.mass_estimates[a] = mhat;
        out.standard_errors[a] = std::sqrt(mhat * (1.0 - mhat) / N);
    }
    // Zeta transform for the belief estimates.
    std::vector<double> bel = mass;
    bel[0] = 0.0;
    for (int i = 0; i < frame.size(); ++i)
        for (std::uint32_t a = 0; a < frame.num_subsets(); ++a)
            if (a & (1u << i)) bel[a] += bel[a ^ (1u << i)];
    out.belief_estimates = std::move(bel);
    return out;
}

}  // namespace credal::mc
