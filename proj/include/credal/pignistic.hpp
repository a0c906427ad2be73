#pragma once

#include <vector>

#include "credal/frame.hpp"
#include "credal/mass.hpp"
#include "credal/mc.hpp"
#include "credal/ternary.hpp"

namespace credal::pignistic {

/// A probability distribution over the atoms of a frame.
struct ProbDist {
    Frame frame;
    std::vector<double> probs;

    double operator()(int atom) const { return probs[static_cast<std::size_t>(atom)]; }
};

/// Finite pignistic transformation BetP(w) = sum over A containing w of
/// m(A)/|A|. For beliefs induced by a credal set this is NOT the right
/// decision distribution (the betting frame is the label space, not the
/// frame itself); use betp_credal for those.
ProbDist betp_finite(const MassFunction& m);

/// Centroid of the credal set under the uniform measure of its dimension:
/// counting measure for point sets, length weights for segments, area
/// weights for polygons.
ProbDist betp_credal(const ternary::CredalSet3& P, const Frame& frame);

struct McCentroid {
    std::vector<double> probs;
    std::vector<double> se;
    long long samples = 0;
    std::uint64_t seed = 0;
};

/// Monte Carlo centroid for general-n polytope sets: uniform simplex samples
/// weighted by component multiplicity, with a ratio-estimator standard error.
McCentroid betp_credal_mc(const mc::CredalPolytopeSet& P, const mc::MCConfig& cfg);

/// Binary closed form: with lower probabilities a on success and b on
/// failure, BetP(S) = (1 + a - b) / 2 (the centroid of [a, 1-b]).
double betp_bounds_binary(double lower_s, double lower_f);

}  // namespace credal::pignistic
