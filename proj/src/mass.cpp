#include "credal/mass.hpp"

#include <cmath>
#include <stdexcept>

namespace credal {

namespace {

void check_distribution(const Frame& frame, const std::vector<double>& m, bool allow_empty) {
    double sum = 0.0;
    for (std::uint32_t a = 0; a < m.size(); ++a) {
        if (m[a] < 0.0)
            throw std::invalid_argument("mass: negative mass on " + frame.name_of(a));
        sum += m[a];
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("mass: masses sum to " + std::to_string(sum) + ", expected 1");
    if (!allow_empty && m[0] != 0.0)
        throw std::invalid_argument("mass: empty-set mass not allowed in closed-world form");
}

}  // namespace

MassFunction vacuous_mass(const Frame& frame) {
    std::vector<double> m(frame.num_subsets(), 0.0);
    m[frame.full_mask()] = 1.0;
    return {frame, std::move(m)};
}

MassFunction categorical_mass(const Frame& frame, std::uint32_t A) {
    if (A == 0) throw std::invalid_argument("categorical_mass: empty focal set");
    if (A > frame.full_mask()) throw std::invalid_argument("categorical_mass: mask out of range");
    std::vector<double> m(frame.num_subsets(), 0.0);
    m[A] = 1.0;
    return {frame, std::move(m)};
}

MassFunction bayesian_mass(const Frame& frame, std::span<const double> probs) {
    if (static_cast<int>(probs.size()) != frame.size())
        throw std::invalid_argument("bayesian_mass: need one probability per atom");
    std::vector<double> m(frame.num_subsets(), 0.0);
    for (int i = 0; i < frame.size(); ++i) m[1u << i] = probs[static_cast<std::size_t>(i)];
    check_distribution(frame, m, false);
    return {frame, std::move(m)};
}

MassFunction explicit_mass(const Frame& frame, const std::map<std::uint32_t, double>& masses,
                           bool allow_empty) {
    std::vector<double> m(frame.num_subsets(), 0.0);
    for (auto [mask, w] : masses) {
        if (mask > frame.full_mask())
            throw std::invalid_argument("explicit_mass: mask out of range");
        m[mask] += w;
    }
    check_distribution(frame, m, allow_empty);
    bool unnorm = allow_empty && m[0] > 0.0;
    return {frame, std::move(m), unnorm};
}

SetFunction mobius_forward(const MassFunction& mf, SetKind kind) {
    const std::uint32_t n = static_cast<std::uint32_t>(mf.frame.size());
    const std::uint32_t size = mf.frame.num_subsets();
    std::vector<double> v = mf.m;

    switch (kind) {
        case SetKind::belief: {
            // Subset-sum zeta transform; bel excludes the empty-set mass.
            v[0] = 0.0;
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t a = 0; a < size; ++a)
                    if (a & (1u << i)) v[a] += v[a ^ (1u << i)];
            break;
        }
        case SetKind::commonality: {
            // Superset-sum zeta transform; q(emptyset) = total mass.
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t a = 0; a < size; ++a)
                    if (!(a & (1u << i))) v[a] += v[a | (1u << i)];
            break;
        }
        case SetKind::plausibility: {
            // pl(A) = bel(Omega) - bel(complement of A).
            SetFunction bel = mobius_forward(mf, SetKind::belief);
            double total = bel.values[mf.frame.full_mask()];
            for (std::uint32_t a = 0; a < size; ++a)
                v[a] = total - bel.values[mf.frame.full_mask() & ~a];
            break;
        }
    }
    return {mf.frame, kind, std::move(v)};
}

MassFunction mobius_inverse(const SetFunction& f) {
    const std::uint32_t n = static_cast<std::uint32_t>(f.frame.size());
    const std::uint32_t size = f.frame.num_subsets();
    std::vector<double> v = f.values;

    switch (f.kind) {
        case SetKind::belief:
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t a = 0; a < size; ++a)
                    if (a & (1u << i)) v[a] -= v[a ^ (1u << i)];
            break;
        case SetKind::commonality:
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t a = 0; a < size; ++a)
                    if (!(a & (1u << i))) v[a] -= v[a | (1u << i)];
            break;
        case SetKind::plausibility:
            throw std::invalid_argument("mobius_inverse: invert belief or commonality, not plausibility");
    }
    for (std::uint32_t a = 0; a < size; ++a) {
        if (v[a] < -kMassNegTol)
            throw std::invalid_argument("mobius_inverse: not a belief function (mass " +
                                        std::to_string(v[a]) + " on " + f.frame.name_of(a) + ")");
        if (v[a] < 0.0) v[a] = 0.0;
    }
    bool unnorm = v[0] > 0.0;
    return {f.frame, std::move(v), unnorm};
}

CombineResult conjunctive_combine(const MassFunction& m1, const MassFunction& m2, bool normalize) {
    if (m1.frame != m2.frame)
        throw std::invalid_argument("conjunctive_combine: frames differ");
    std::vector<double> out(m1.frame.num_subsets(), 0.0);
    // Direct enumeration over focal pairs; the commonality-product route is
    // kept as an independent check in the tests.
    auto f1 = m1.focal();
    auto f2 = m2.focal();
    for (auto [a, wa] : f1)
        for (auto [b, wb] : f2) out[a & b] += wa * wb;

    double conflict = out[0];
    if (normalize) {
        if (1.0 - conflict <= kSumTol)
            throw std::domain_error("conjunctive_combine: total conflict, cannot normalize");
        out[0] = 0.0;
        for (auto& w : out) w /= (1.0 - conflict);
    }
    bool unnorm = !normalize && out[0] > 0.0;
    return {MassFunction{m1.frame, std::move(out), unnorm}, conflict};
}

CombineResult condition(const MassFunction& mf, std::uint32_t E, bool normalize) {
    if (E == 0) throw std::invalid_argument("condition: conditioning set is empty");
    if (E > mf.frame.full_mask()) throw std::invalid_argument("condition: mask out of range");
    std::vector<double> out(mf.frame.num_subsets(), 0.0);
    for (std::uint32_t a = 0; a < out.size(); ++a)
        if (mf.m[a] != 0.0) out[a & E] += mf.m[a];

    double conflict = out[0];
    if (normalize) {
        if (1.0 - conflict <= kSumTol)
            throw std::domain_error("condition: total conflict, cannot normalize");
        out[0] = 0.0;
        for (auto& w : out) w /= (1.0 - conflict);
    }
    bool unnorm = !normalize && out[0] > 0.0;
    return {MassFunction{mf.frame, std::move(out), unnorm}, conflict};
}

}  // namespace credal
