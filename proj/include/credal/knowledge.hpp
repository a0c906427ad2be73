#pragma once

#include <vector>

#include "credal/mass.hpp"
#include "credal/ternary.hpp"

namespace credal::knowledge {

struct MixtureItem {
    ternary::CredalSet3 set;
    double mass;
};

struct MixtureResult {
    SetFunction bel;
    MassFunction mass;
};

/// Belief induced by a basic belief assignment over credal sets:
/// bel(X) = sum_i m_i * bel(X | P_i), masses by Mobius inversion.
MixtureResult mixture_bel(const std::vector<MixtureItem>& items, const Frame& frame);

/// Combination of two pieces of knowledge about the same chance: set
/// intersection of the credal sets, not a combination of the induced belief
/// functions (the two pieces share the one underlying probability and are
/// not distinct evidence). Convex single-component sets only; an empty
/// intersection throws ContradictionError.
ternary::CredalSet3 intersect_knowledge(const ternary::CredalSet3& P1,
                                        const ternary::CredalSet3& P2);

}  // namespace credal::knowledge
