#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "credal/frame.hpp"

namespace credal {

// Numeric tolerances used throughout the finite calculus: strict equality is
// checked at 1e-12, masses recovered by Mobius inversion are accepted as
// nonnegative down to -1e-9 (roundoff across 2^n sums).
inline constexpr double kSumTol = 1e-12;
inline constexpr double kMassNegTol = 1e-9;

/// Basic belief assignment on the subsets of a frame, stored densely by
/// bitmask. Closed-world masses have m(emptyset) = 0; combination and
/// conditioning may produce mass on the empty set (conflict), carried
/// explicitly when the `unnormalized` flag is set.
struct MassFunction {
    Frame frame;
    std::vector<double> m;  // size 2^n, indexed by SubsetMask
    bool unnormalized = false;

    double conflict() const { return m[0]; }
    double operator()(std::uint32_t mask) const { return m[mask]; }

    /// Focal elements (mask, mass) with mass above `tol`, ascending by mask.
    std::vector<std::pair<std::uint32_t, double>> focal(double tol = 0.0) const {
        std::vector<std::pair<std::uint32_t, double>> out;
        for (std::uint32_t a = 0; a < m.size(); ++a)
            if (m[a] > tol) out.emplace_back(a, m[a]);
        return out;
    }
};

enum class SetKind { belief, plausibility, commonality };

/// A set function (bel, pl or q) tabulated over all subsets of the frame.
struct SetFunction {
    Frame frame;
    SetKind kind;
    std::vector<double> values;  // size 2^n

    double operator()(std::uint32_t mask) const { return values[mask]; }
};

MassFunction vacuous_mass(const Frame& frame);
MassFunction categorical_mass(const Frame& frame, std::uint32_t A);
MassFunction bayesian_mass(const Frame& frame, std::span<const double> probs);
MassFunction explicit_mass(const Frame& frame, const std::map<std::uint32_t, double>& masses,
                           bool allow_empty = false);

SetFunction mobius_forward(const MassFunction& m, SetKind kind);

/// Recover the mass function whose belief (or commonality) equals `f`.
/// Throws if any recovered mass falls below -1e-9 (not a belief function).
MassFunction mobius_inverse(const SetFunction& f);

struct CombineResult {
    MassFunction mass;
    double conflict = 0.0;
};

/// TBM conjunctive combination: m12(A) = sum over B,C with B∩C=A of
/// m1(B)m2(C). Unnormalized by default (conflict stays on the empty set);
/// with `normalize` the non-empty masses are rescaled by 1/(1-conflict).
CombineResult conjunctive_combine(const MassFunction& m1, const MassFunction& m2,
                                  bool normalize = false);

/// Dempster's rule of conditioning: each mass m(A) is transferred to A∩E.
CombineResult condition(const MassFunction& m, std::uint32_t E, bool normalize = false);

}  // namespace credal
