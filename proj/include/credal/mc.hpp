#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "credal/frame.hpp"
#include "credal/mass.hpp"

namespace credal::mc {

/// A credal set for general n: a finite union of vertex-defined polytopes in
/// the (n-1)-simplex.
struct CredalPolytopeSet {
    int n = 2;
    std::vector<std::vector<std::vector<double>>> components;  // component -> vertex -> coords

    CredalPolytopeSet(int atoms, std::vector<std::vector<std::vector<double>>> comps);
};

struct MCConfig {
    long long samples = 100000;
    std::uint64_t seed = 0;

    MCConfig(long long n, std::uint64_t s) : samples(n), seed(s) {
        if (samples < 1000) throw std::invalid_argument("MCConfig: need at least 1000 samples");
    }
};

struct MCResult {
    Frame frame;
    std::map<std::uint32_t, double> mass_estimates;     // nonzero estimates only
    std::map<std::uint32_t, double> standard_errors;    // per mass estimate
    std::vector<double> belief_estimates;               // dense over all subsets
    long long samples = 0;
    std::uint64_t seed = 0;
};

/// splitmix64 step; used to derive per-chunk seeds from (seed, chunk).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t chunk);

/// Uniform draw on [0, 1) with 53 bits, independent of any library
/// distribution implementation (bit-exact across platforms).
double uniform01(std::mt19937_64& rng);

/// Uniform point of the (n-1)-simplex via normalized exponentials (flat
/// Dirichlet). Boundary hits (a zero coordinate) are resampled.
std::vector<double> sample_simplex(std::mt19937_64& rng, int n);

/// Feasibility of {x >= 0 : ge_rows . x >= 0, eq_rows . x = eq_rhs} by
/// phase-1 simplex pivoting with Bland's rule.
bool lp_feasible(const std::vector<std::vector<double>>& ge_rows,
                 const std::vector<std::vector<double>>& eq_rows,
                 const std::vector<double>& eq_rhs);

/// Whether q lies in the convex hull of the given vertices.
bool polytope_contains(const std::vector<std::vector<double>>& vertices,
                       const std::vector<double>& q);

/// The atoms whose corner region P_w(q) meets the credal set; never empty.
std::uint32_t projection_mask(const std::vector<double>& q, const CredalPolytopeSet& P);

/// Monte Carlo estimate of the induced mass and belief functions: masses are
/// frequencies of the projection mask over uniformly sampled labels q.
MCResult estimate(const CredalPolytopeSet& P, const MCConfig& cfg, const Frame& frame);

}  // namespace credal::mc
