#include "credal/knowledge.hpp"

#include <cmath>
#include <stdexcept>

#include "credal/geometry.hpp"

namespace credal::knowledge {

MixtureResult mixture_bel(const std::vector<MixtureItem>& items, const Frame& frame) {
    if (items.empty()) throw std::invalid_argument("mixture_bel: empty mixture");
    double msum = 0.0;
    for (const auto& it : items) {
        if (it.mass < 0.0) throw std::invalid_argument("mixture_bel: negative mass");
        msum += it.mass;
    }
    if (std::abs(msum - 1.0) > 1e-9)
        throw std::invalid_argument("mixture_bel: masses sum to " + std::to_string(msum));

    std::vector<double> bel(frame.num_subsets(), 0.0);
    for (const auto& it : items) {
        SetFunction b = ternary::bel_table(it.set, frame);
        for (std::uint32_t a = 0; a < frame.num_subsets(); ++a) bel[a] += it.mass * b(a);
    }
    SetFunction out{frame, SetKind::belief, std::move(bel)};
    MassFunction mass = mobius_inverse(out);
    return {std::move(out), std::move(mass)};
}

ternary::CredalSet3 intersect_knowledge(const ternary::CredalSet3& P1,
                                        const ternary::CredalSet3& P2) {
    if (P1.components().size() != 1 || P2.components().size() != 1)
        throw std::invalid_argument(
            "intersect_knowledge: only single-component convex sets are supported");
    geom::Polygon a, b;
    for (const auto& v : P1.components()[0].vertices) a.push_back(ternary::to_plane(v));
    for (const auto& v : P2.components()[0].vertices) b.push_back(ternary::to_plane(v));
    geom::Polygon inter = geom::clip_convex(a, b);
    if (inter.empty())
        throw ContradictionError("contradictory knowledge: empty intersection");
    return ternary::credal_from_region(inter);
}

}  // namespace credal::knowledge
