#pragma once

#include <optional>
#include <vector>

#include "credal/frame.hpp"
#include "credal/mass.hpp"

namespace credal::binary {

/// Bernoulli trial counts. Counts are whole trials; real-valued "counts" are
/// rejected by construction.
struct EvidenceCounts {
    long long r = 0, s = 0;
    EvidenceCounts(long long successes, long long failures) : r(successes), s(failures) {
        if (r < 0 || s < 0) throw std::invalid_argument("EvidenceCounts: negative count");
    }
};

/// The agent knows a0 <= P(S) <= b0.
struct IntervalKnowledge {
    double a0 = 0.0, b0 = 1.0;
    IntervalKnowledge(double a, double b) : a0(a), b0(b) {
        if (!(0.0 <= a0 && a0 <= b0 && b0 <= 1.0))
            throw std::invalid_argument("IntervalKnowledge: need 0 <= a0 <= b0 <= 1");
    }
};

/// Polynomial coefficients, ascending powers. Horizontal line densities are
/// polynomials in x; vertical line densities are polynomials in (1-y).
using Poly1 = std::vector<double>;

struct PointComp {
    double x = 0.0, y = 1.0, w = 0.0;
};

struct LineComp {
    bool horizontal = true;  // true: support {(x, level)}; false: {(level, y)}
    double level = 1.0;
    double lo = 0.0, hi = 1.0;  // range of the free coordinate
    Poly1 density;
};

/// One monomial term coef * x^xpow * (1-y)^wpow of an area density.
struct Term {
    double coef = 0.0;
    int xpow = 0, wpow = 0;
};

struct AreaComp {
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;  // box, implicitly cut by x <= y
    std::vector<Term> density;
};

/// Fast-path representation of `scale` times the normalized evidence measure
/// for (r, s) Bernoulli observations; all queries have closed forms in log
/// space, so arbitrarily large counts are fine on this path.
struct EvidenceCore {
    long long r = 0, s = 0;
    double scale = 1.0;
};

/// A belief measure over the intervals [x, y] of [0,1], parameterized by the
/// triangle {0 <= x <= y <= 1}. The point (x, y) stands for the proposition
/// P(S) in [x, y]. Everything reachable from {evidence, knowledge,
/// combination} stays inside the component family above, so queries are
/// computed analytically.
class TriangleMeasure {
public:
    /// Normalized basic belief density after r successes and s failures.
    static TriangleMeasure evidence(EvidenceCounts e);
    /// Point mass at (a0, b0): the single focal interval [a0, b0].
    static TriangleMeasure knowledge(IntervalKnowledge k);
    static TriangleMeasure vacuous() { return evidence(EvidenceCounts(0, 0)); }

    /// Mass carried by the empty set (conflict from combinations).
    double conflict() const { return conflict_; }
    /// Mass carried by non-empty focal intervals.
    double total_mass() const;
    bool is_normalized(double tol = 1e-9) const;

    /// Measure of {(x, y) in support : x0 <= x <= x1, y0 <= y <= y1}.
    double box_measure(double x0, double x1, double y0, double y1) const;
    double bel(double u, double v) const;  // focal intervals inside [u, v]
    double pl(double u, double v) const;   // focal intervals meeting [u, v]
    double q(double u, double v) const;    // focal intervals containing [u, v]

    struct Predictive {
        double success = 0.0, failure = 0.0, residual = 0.0;
    };
    /// Marginal masses on {S, F, S or F}: (E[x], E[1-y], E[y-x]).
    /// Requires a normalized measure.
    Predictive predictive() const;

    /// Rescaled copy with total mass 1 and no conflict; throws on total
    /// conflict.
    TriangleMeasure normalized() const;

    const std::optional<EvidenceCore>& evidence_core() const { return core_; }
    const std::vector<PointComp>& points() const { return points_; }
    const std::vector<LineComp>& lines() const { return lines_; }
    const std::vector<AreaComp>& areas() const { return areas_; }

    friend TriangleMeasure combine_measures(const TriangleMeasure& m1, const TriangleMeasure& m2,
                                            bool normalize);
    friend TriangleMeasure evidence_accumulation(EvidenceCounts e);

private:
    TriangleMeasure() = default;
    void materialize();  // expand an evidence core into components

    std::optional<EvidenceCore> core_;
    std::vector<PointComp> points_;
    std::vector<LineComp> lines_;
    std::vector<AreaComp> areas_;
    double conflict_ = 0.0;
};

/// TBM conjunctive combination on the interval triangle: independent focal
/// pairs intersect, [x1,y1] ^ [x2,y2] -> [max(x1,x2), min(y1,y2)], and empty
/// intersections accumulate as conflict. Evidence combines with evidence in
/// closed form (counts add). With `normalize` the result is rescaled to
/// total mass 1.
TriangleMeasure combine_measures(const TriangleMeasure& m1, const TriangleMeasure& m2,
                                 bool normalize = false);

/// The unnormalized accumulation of r single successes and s single failures
/// (scale 1/C(r+s, r) on the evidence density, remainder as conflict). Its
/// commonality is exactly q([u,v]) = u^r (1-v)^s.
TriangleMeasure evidence_accumulation(EvidenceCounts e);

/// predictive() packaged as a mass function on a 2-atom frame.
MassFunction predictive_mass(const TriangleMeasure& m, const Frame& frame);

}  // namespace credal::binary
