#include "credal/binary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "credal/numerics.hpp"

namespace credal::binary {

namespace {

using num::ipow;
using num::lchoose;
using num::log_diff_exp;
using num::pow_real;

constexpr double kMassEps = 1e-15;  // drop components below this mass
constexpr double kInf = std::numeric_limits<double>::infinity();

// Evidence cores are expanded into explicit components only when combined
// with other component kinds; the density constant Gamma(r+s+1) /
// (Gamma(r) Gamma(s)) must stay representable in a double on that path,
// which caps the counts. Pure evidence queries have log-space closed forms
// and take any counts.
constexpr long long kMaxMaterializeArea = 120;

// ---------------------------------------------------------------------------
// Polynomial helpers. Horizontal densities live in the x-power basis,
// vertical densities in the (1-y)-power basis; no conversion between the
// bases is ever needed.
// ---------------------------------------------------------------------------

Poly1 poly_add(const Poly1& a, const Poly1& b) {
    Poly1 r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly1 poly_mul(const Poly1& a, const Poly1& b) {
    if (a.empty() || b.empty()) return {};
    Poly1 r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly1 poly_scale(Poly1 p, double s) {
    for (double& c : p) c *= s;
    return p;
}

Poly1 poly_shift_up(const Poly1& p) {
    Poly1 r(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i];
    return r;
}

// Integral of a power-basis polynomial over [lo, hi] of its own variable.
double poly_power_int(const Poly1& p, double lo, double hi) {
    if (hi <= lo) return 0.0;
    double r = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k)
        r += p[k] * (ipow(hi, static_cast<int>(k) + 1) - ipow(lo, static_cast<int>(k) + 1)) /
             (static_cast<double>(k) + 1.0);
    return r;
}

double hline_int(const Poly1& p, double lo, double hi) { return poly_power_int(p, lo, hi); }

// Vertical density p(w), w = 1-y, integrated over y in [ylo, yhi].
double vline_int(const Poly1& p, double ylo, double yhi) {
    if (yhi <= ylo) return 0.0;
    return poly_power_int(p, 1.0 - yhi, 1.0 - ylo);
}

// Cumulative mass of a horizontal density from its support start, as an
// x-basis polynomial valid on [lo, hi].
Poly1 hline_cum_poly(const Poly1& p, double lo) {
    Poly1 r(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k + 1] = p[k] / (static_cast<double>(k) + 1.0);
        r[0] -= p[k] * ipow(lo, static_cast<int>(k) + 1) / (static_cast<double>(k) + 1.0);
    }
    return r;
}

// Survivor mass of a vertical density up to its support end, as a
// (1-y)-basis polynomial in t valid on [lo, hi]: S(t) = mass of {y >= t}.
Poly1 vline_surv_poly(const Poly1& p, double hi) {
    Poly1 r(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        r[k + 1] = p[k] / (static_cast<double>(k) + 1.0);
        r[0] -= p[k] * ipow(1.0 - hi, static_cast<int>(k) + 1) / (static_cast<double>(k) + 1.0);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Area term integration over box ^ {x <= y}.
// ---------------------------------------------------------------------------

// integral over [lo, hi] of x^a (1-x)^m dx via the regularized incomplete
// beta function (stable for any integer exponents).
double beta_slice(int a, int m, double lo, double hi) {
    if (hi <= lo) return 0.0;
    double da = a + 1.0, dm = m + 1.0;
    double scale = std::exp(num::lbeta(da, dm));
    return scale * (num::ibeta_reg(da, dm, hi) - num::ibeta_reg(da, dm, lo));
}

double wint(int b, double ylo, double yhi) {
    if (yhi <= ylo) return 0.0;
    return (ipow(1.0 - ylo, b + 1) - ipow(1.0 - yhi, b + 1)) / (b + 1.0);
}

double xint(int a, double lo, double hi) {
    if (hi <= lo) return 0.0;
    return (ipow(hi, a + 1) - ipow(lo, a + 1)) / (a + 1.0);
}

// integral of x^a (1-y)^b over {x in [x0,x1], y in [y0,y1], x <= y}.
double mono_box_tri(int a, int b, double x0, double x1, double y0, double y1) {
    x0 = std::max(x0, 0.0);
    y1 = std::min(y1, 1.0);
    x1 = std::min(x1, y1);
    y0 = std::max(y0, x0);
    if (x1 <= x0 || y1 <= y0) return 0.0;
    double total = 0.0;
    // x below y0: the full y range applies.
    double hi1 = std::min(x1, y0);
    if (hi1 > x0) total += xint(a, x0, hi1) * wint(b, y0, y1);
    // x across [y0, y1]: y runs from x to y1.
    double lo2 = std::max(x0, y0);
    if (x1 > lo2)
        total += (beta_slice(a, b + 1, lo2, x1) - ipow(1.0 - y1, b + 1) * xint(a, lo2, x1)) /
                 (b + 1.0);
    return total;
}

double area_box_tri(const AreaComp& area, double x0, double x1, double y0, double y1) {
    x0 = std::max(x0, area.x0);
    x1 = std::min(x1, area.x1);
    y0 = std::max(y0, area.y0);
    y1 = std::min(y1, area.y1);
    if (x1 <= x0 || y1 <= y0) return 0.0;
    double total = 0.0;
    for (const Term& t : area.density)
        total += t.coef * mono_box_tri(t.xpow, t.wpow, x0, x1, y0, y1);
    return total;
}

double area_mass(const AreaComp& area) {
    return area_box_tri(area, area.x0, area.x1, area.y0, area.y1);
}

double line_mass(const LineComp& l) {
    return l.horizontal ? hline_int(l.density, l.lo, l.hi) : vline_int(l.density, l.lo, l.hi);
}

// ---------------------------------------------------------------------------
// Component accumulator used by the combination driver.
// ---------------------------------------------------------------------------

struct CompBag {
    std::vector<PointComp> pts;
    std::vector<LineComp> lines;
    std::vector<AreaComp> areas;

    void add_point(double x, double y, double w) {
        if (w > kMassEps && x <= y) pts.push_back({x, y, w});
    }
    void add_hline(double level, double lo, double hi, Poly1 dens) {
        hi = std::min(hi, level);  // support stays inside x <= y
        lo = std::max(lo, 0.0);
        if (hi > lo && !dens.empty()) lines.push_back({true, level, lo, hi, std::move(dens)});
    }
    void add_vline(double level, double lo, double hi, Poly1 dens) {
        lo = std::max(lo, level);
        hi = std::min(hi, 1.0);
        if (hi > lo && !dens.empty()) lines.push_back({false, level, lo, hi, std::move(dens)});
    }
    void add_area(double x0, double x1, double y0, double y1, std::vector<Term> dens) {
        x1 = std::min(x1, y1);
        y0 = std::max(y0, x0);
        if (x1 > x0 && y1 > y0 && !dens.empty())
            areas.push_back({x0, x1, y0, y1, std::move(dens)});
    }

    double total() const {
        double t = 0.0;
        for (const auto& p : pts) t += p.w;
        for (const auto& l : lines) t += line_mass(l);
        for (const auto& a : areas) t += area_mass(a);
        return t;
    }
};

std::vector<Term> sep_product(const Poly1& px, const Poly1& pw) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < px.size(); ++i) {
        if (px[i] == 0.0) continue;
        for (std::size_t j = 0; j < pw.size(); ++j) {
            if (pw[j] == 0.0) continue;
            out.push_back({px[i] * pw[j], static_cast<int>(i), static_cast<int>(j)});
        }
    }
    return out;
}

std::vector<Term> terms_scale(std::vector<Term> t, double s) {
    for (Term& x : t) x.coef *= s;
    return t;
}

std::vector<Term> terms_mul_x(const std::vector<Term>& ts, const Poly1& px) {
    std::vector<Term> out;
    for (const Term& t : ts)
        for (std::size_t i = 0; i < px.size(); ++i) {
            if (px[i] == 0.0) continue;
            out.push_back({t.coef * px[i], t.xpow + static_cast<int>(i), t.wpow});
        }
    return out;
}

std::vector<Term> terms_mul_w(const std::vector<Term>& ts, const Poly1& pw) {
    std::vector<Term> out;
    for (const Term& t : ts)
        for (std::size_t j = 0; j < pw.size(); ++j) {
            if (pw[j] == 0.0) continue;
            out.push_back({t.coef * pw[j], t.xpow, t.wpow + static_cast<int>(j)});
        }
    return out;
}

std::vector<Term> terms_mul(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    for (const Term& s : a)
        for (const Term& t : b) out.push_back({s.coef * t.coef, s.xpow + t.xpow, s.wpow + t.wpow});
    return out;
}

// Marginal of an area density in y over [ylo, yhi] (fixed x): x-basis poly.
Poly1 area_margin_y(const AreaComp& a, double ylo, double yhi) {
    ylo = std::max(ylo, a.y0);
    yhi = std::min(yhi, a.y1);
    Poly1 out;
    if (yhi <= ylo) return out;
    for (const Term& t : a.density) {
        double c = t.coef * wint(t.wpow, ylo, yhi);
        if (c == 0.0) continue;
        if (out.size() <= static_cast<std::size_t>(t.xpow)) out.resize(t.xpow + 1, 0.0);
        out[static_cast<std::size_t>(t.xpow)] += c;
    }
    return out;
}

// Marginal of an area density in x over [xlo, xhi] (fixed y): (1-y)-basis poly.
Poly1 area_margin_x(const AreaComp& a, double xlo, double xhi) {
    xlo = std::max(xlo, a.x0);
    xhi = std::min(xhi, a.x1);
    Poly1 out;
    if (xhi <= xlo) return out;
    for (const Term& t : a.density) {
        double c = t.coef * xint(t.xpow, xlo, xhi);
        if (c == 0.0) continue;
        if (out.size() <= static_cast<std::size_t>(t.wpow)) out.resize(t.wpow + 1, 0.0);
        out[static_cast<std::size_t>(t.wpow)] += c;
    }
    return out;
}

// Cumulative-in-x from the box's left edge, as a term list in (X, Y):
// integral over x2 in [a.x0, X] of f(x2, Y); valid for X in [a.x0, a.x1].
std::vector<Term> area_cum_x_terms(const AreaComp& a) {
    std::vector<Term> out;
    for (const Term& t : a.density) {
        double inv = 1.0 / (t.xpow + 1.0);
        out.push_back({t.coef * inv, t.xpow + 1, t.wpow});
        double c0 = -t.coef * inv * ipow(a.x0, t.xpow + 1);
        if (c0 != 0.0) out.push_back({c0, 0, t.wpow});
    }
    return out;
}

// Survivor-in-y up to the box's top edge: integral over y2 in [Y, a.y1] of
// f(X, y2); valid for Y in [a.y0, a.y1].
std::vector<Term> area_surv_y_terms(const AreaComp& a) {
    std::vector<Term> out;
    for (const Term& t : a.density) {
        double inv = 1.0 / (t.wpow + 1.0);
        out.push_back({t.coef * inv, t.xpow, t.wpow + 1});
        double c0 = -t.coef * inv * ipow(1.0 - a.y1, t.wpow + 1);
        if (c0 != 0.0) out.push_back({c0, t.xpow, 0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pairwise combination. Focal intervals intersect:
// [x1,y1] ^ [x2,y2] -> [max(x1,x2), min(y1,y2)]; empty results are conflict,
// recovered globally as (product of totals) - (kept mass). Density formulas
// below only need to be valid on the kept region {X <= Y}, where X <= Y makes
// every diagonal constraint of the inner integrals inactive.
// ---------------------------------------------------------------------------

void combine_pp(const PointComp& p1, const PointComp& p2, CompBag& out) {
    double X = std::max(p1.x, p2.x), Y = std::min(p1.y, p2.y);
    if (X <= Y) out.add_point(X, Y, p1.w * p2.w);
}

void combine_ph(const PointComp& pt, const LineComp& h, CompBag& out) {
    double Y = std::min(h.level, pt.y);
    if (pt.x > Y) return;
    double below = hline_int(h.density, h.lo, std::min(h.hi, pt.x));
    out.add_point(pt.x, Y, pt.w * below);
    out.add_hline(Y, std::max(h.lo, pt.x), std::min(h.hi, Y), poly_scale(h.density, pt.w));
}

void combine_pv(const PointComp& pt, const LineComp& v, CompBag& out) {
    double X = std::max(v.level, pt.x);
    if (X > pt.y) return;
    double above = vline_int(v.density, std::max(v.lo, pt.y), v.hi);
    out.add_point(X, pt.y, pt.w * above);
    out.add_vline(X, std::max(v.lo, X), std::min(v.hi, pt.y), poly_scale(v.density, pt.w));
}

void combine_pa(const PointComp& pt, const AreaComp& a, CompBag& out) {
    // x <= pt.x, y >= pt.y: collapses onto the point.
    out.add_point(pt.x, pt.y, pt.w * area_box_tri(a, a.x0, pt.x, pt.y, a.y1));
    // x > pt.x, y >= pt.y: horizontal line at pt.y.
    Poly1 mh = area_margin_y(a, pt.y, a.y1);
    if (!mh.empty())
        out.add_hline(pt.y, std::max(a.x0, pt.x), std::min(a.x1, pt.y), poly_scale(mh, pt.w));
    // x <= pt.x, y < pt.y: vertical line at pt.x.
    Poly1 mv = area_margin_x(a, a.x0, pt.x);
    if (!mv.empty())
        out.add_vline(pt.x, std::max(a.y0, pt.x), std::min(a.y1, pt.y), poly_scale(mv, pt.w));
    // x > pt.x, y < pt.y: the restricted area itself.
    out.add_area(std::max(a.x0, pt.x), a.x1, a.y0, std::min(a.y1, pt.y),
                 terms_scale(a.density, pt.w));
}

// Description of a 1-D density with its cumulative (or survivor) polynomial.
struct CumDesc {
    double lo, hi;
    Poly1 density;
    Poly1 cum;  // cumulative (max case) or survivor (min case), valid on [lo, hi]
    double total;
};

// Distribution of max over x for two horizontal components:
// h(x) = p1(x) C2(x) + p2(x) C1(x) on pieces between breakpoints.
void emit_max_x(const CumDesc& d1, const CumDesc& d2, double level, CompBag& out) {
    std::vector<double> bs = {d1.lo, d1.hi, d2.lo, d2.hi, level};
    std::sort(bs.begin(), bs.end());
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        double lo = bs[i], hi = std::min(bs[i + 1], level);
        if (hi <= lo) continue;
        Poly1 piece;
        if (lo >= d1.lo && hi <= d1.hi) {
            Poly1 c2 = (lo >= d2.hi) ? Poly1{d2.total} : (hi <= d2.lo ? Poly1{} : d2.cum);
            if (!c2.empty()) piece = poly_add(piece, poly_mul(d1.density, c2));
        }
        if (lo >= d2.lo && hi <= d2.hi) {
            Poly1 c1 = (lo >= d1.hi) ? Poly1{d1.total} : (hi <= d1.lo ? Poly1{} : d1.cum);
            if (!c1.empty()) piece = poly_add(piece, poly_mul(d2.density, c1));
        }
        if (!piece.empty()) out.add_hline(level, lo, hi, std::move(piece));
    }
}

// Distribution of min over y for two vertical components:
// g(y) = p1(y) S2(y) + p2(y) S1(y).
void emit_min_y(const CumDesc& d1, const CumDesc& d2, double level, CompBag& out) {
    std::vector<double> bs = {d1.lo, d1.hi, d2.lo, d2.hi, level, 1.0};
    std::sort(bs.begin(), bs.end());
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        double lo = std::max(bs[i], level), hi = bs[i + 1];
        if (hi <= lo) continue;
        Poly1 piece;
        if (lo >= d1.lo && hi <= d1.hi) {
            Poly1 s2 = (hi <= d2.lo) ? Poly1{d2.total} : (lo >= d2.hi ? Poly1{} : d2.cum);
            if (!s2.empty()) piece = poly_add(piece, poly_mul(d1.density, s2));
        }
        if (lo >= d2.lo && hi <= d2.hi) {
            Poly1 s1 = (hi <= d1.lo) ? Poly1{d1.total} : (lo >= d1.hi ? Poly1{} : d1.cum);
            if (!s1.empty()) piece = poly_add(piece, poly_mul(d2.density, s1));
        }
        if (!piece.empty()) out.add_vline(level, lo, hi, std::move(piece));
    }
}

void combine_hh(const LineComp& h1, const LineComp& h2, CompBag& out) {
    double c = std::min(h1.level, h2.level);
    CumDesc d1{h1.lo, h1.hi, h1.density, hline_cum_poly(h1.density, h1.lo), line_mass(h1)};
    CumDesc d2{h2.lo, h2.hi, h2.density, hline_cum_poly(h2.density, h2.lo), line_mass(h2)};
    emit_max_x(d1, d2, c, out);
}

void combine_vv(const LineComp& v1, const LineComp& v2, CompBag& out) {
    double c = std::max(v1.level, v2.level);
    CumDesc d1{v1.lo, v1.hi, v1.density, vline_surv_poly(v1.density, v1.hi), line_mass(v1)};
    CumDesc d2{v2.lo, v2.hi, v2.density, vline_surv_poly(v2.density, v2.hi), line_mass(v2)};
    emit_min_y(d1, d2, c, out);
}

void combine_hv(const LineComp& h, const LineComp& v, CompBag& out) {
    // Focals [x, h.level] and [v.level, y]: result [max(x, v.level), min(h.level, y)].
    double below = hline_int(h.density, h.lo, std::min(h.hi, v.level));
    double above = vline_int(v.density, std::max(v.lo, h.level), v.hi);
    if (v.level <= h.level) out.add_point(v.level, h.level, below * above);
    if (above > 0.0)
        out.add_hline(h.level, std::max(h.lo, v.level), h.hi, poly_scale(h.density, above));
    if (below > 0.0)
        out.add_vline(v.level, v.lo, std::min(v.hi, h.level), poly_scale(v.density, below));
    out.add_area(std::max(h.lo, v.level), h.hi, v.lo, std::min(v.hi, h.level),
                 sep_product(h.density, v.density));
}

// Emit per-piece horizontal lines density(x) = moving(x) or saturated value,
// multiplied by factor(x); shared by the two [*, c] cases of combine_ha.
void emit_hline_pieces(double level, double flo, double fhi, const Poly1& factor, double mlo,
                       double mhi, const Poly1& moving, double saturated, CompBag& out) {
    std::vector<double> bs = {flo, fhi, mlo, mhi};
    std::sort(bs.begin(), bs.end());
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        double lo = bs[i], hi = std::min(bs[i + 1], level);
        if (hi <= lo || lo < flo || hi > fhi) continue;
        Poly1 g = (lo >= mhi) ? Poly1{saturated} : (hi <= mlo ? Poly1{} : moving);
        if (g.empty()) continue;
        out.add_hline(level, lo, hi, poly_mul(factor, g));
    }
}

void emit_vline_pieces(double level, double flo, double fhi, const Poly1& factor, double mlo,
                       double mhi, const Poly1& moving, double saturated, CompBag& out) {
    // Vertical variant: the saturated side is *below* mlo (survivors).
    std::vector<double> bs = {flo, fhi, mlo, mhi};
    std::sort(bs.begin(), bs.end());
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        double lo = std::max(bs[i], level), hi = bs[i + 1];
        if (hi <= lo || lo < flo || hi > fhi) continue;
        Poly1 g = (hi <= mlo) ? Poly1{saturated} : (lo >= mhi ? Poly1{} : moving);
        if (g.empty()) continue;
        out.add_vline(level, lo, hi, poly_mul(factor, g));
    }
}

void combine_ha(const LineComp& h, const AreaComp& a, CompBag& out) {
    const double c = h.level;
    // Rows of the area with y2 >= c, as a marginal in x2.
    Poly1 upper = area_margin_y(a, c, a.y1);
    if (!upper.empty()) {
        // Line x wins the max -> [x1, c]: line density times the area's
        // cumulative-in-x of the upper rows.
        emit_hline_pieces(c, h.lo, h.hi, h.density, a.x0, a.x1, hline_cum_poly(upper, a.x0),
                          poly_power_int(upper, a.x0, a.x1), out);
        // Area x wins -> [x2, c]: upper-row marginal times line cumulative.
        emit_hline_pieces(c, a.x0, a.x1, upper, h.lo, h.hi, hline_cum_poly(h.density, h.lo),
                          line_mass(h), out);
    }
    // Rows with y2 < c keep the area's own y: results [_, y2].
    //   Line x wins -> (x1, y2): line density times area cumulative-in-x.
    out.add_area(std::max(h.lo, a.x0), std::min(h.hi, a.x1), a.y0, std::min(a.y1, c),
                 terms_mul_x(area_cum_x_terms(a), h.density));
    Poly1 full_col = area_margin_x(a, a.x0, a.x1);
    if (!full_col.empty())
        out.add_area(std::max(h.lo, a.x1), h.hi, a.y0, std::min(a.y1, c),
                     sep_product(h.density, full_col));
    //   Area x wins -> (x2, y2): area density times line cumulative.
    out.add_area(std::max(a.x0, h.lo), std::min(a.x1, h.hi), a.y0, std::min(a.y1, c),
                 terms_mul_x(a.density, hline_cum_poly(h.density, h.lo)));
    out.add_area(std::max(a.x0, h.hi), a.x1, a.y0, std::min(a.y1, c),
                 terms_scale(a.density, line_mass(h)));
}

void combine_va(const LineComp& v, const AreaComp& a, CompBag& out) {
    const double c = v.level;
    // Columns of the area with x2 <= c, as a marginal in y2.
    Poly1 left = area_margin_x(a, a.x0, c);
    if (!left.empty()) {
        // Line y wins the min -> [c, y1]: line density times the area's
        // survivor-in-y of the left columns.
        emit_vline_pieces(c, v.lo, v.hi, v.density, a.y0, a.y1, vline_surv_poly(left, a.y1),
                          vline_int(left, a.y0, a.y1), out);
        // Area y wins -> [c, y2]: left-column marginal times line survivor.
        emit_vline_pieces(c, a.y0, a.y1, left, v.lo, v.hi, vline_surv_poly(v.density, v.hi),
                          line_mass(v), out);
    }
    // Columns with x2 > c keep the area's own x: results [x2, _].
    //   Line y wins -> (x2, y1): area survivor-in-y times line density.
    out.add_area(std::max(a.x0, c), a.x1, std::max(v.lo, a.y0), std::min(v.hi, a.y1),
                 terms_mul_w(area_surv_y_terms(a), v.density));
    Poly1 full_row = area_margin_y(a, a.y0, a.y1);
    if (!full_row.empty())
        out.add_area(std::max(a.x0, c), a.x1, v.lo, std::min(v.hi, a.y0),
                     sep_product(full_row, v.density));
    //   Area y wins -> (x2, y2): area density times line survivor.
    out.add_area(std::max(a.x0, c), a.x1, std::max(a.y0, v.lo), std::min(a.y1, v.hi),
                 terms_mul_w(a.density, vline_surv_poly(v.density, v.hi)));
    out.add_area(std::max(a.x0, c), a.x1, a.y0, std::min(a.y1, v.lo),
                 terms_scale(a.density, line_mass(v)));
}

// Per-term x-part of the cumulative of g: (coef picked up, power) pairs.
struct Factor {
    double coef;
    int pow;
};

// Both max-x and min-y come from f: density f(X,Y) * Q_g(X,Y) with
// Q_g(u,w) = mass of g in {x <= u, y >= w}; Q factors per term of g into an
// x-part (cumulative, saturating above g.x1) and a w-part (survivor,
// saturating below g.y0). Valid on the kept region because u <= w keeps the
// diagonal of g inactive.
void emit_fq(const AreaComp& f, const AreaComp& g, CompBag& out) {
    const double xlo = std::max(f.x0, g.x0);
    const double xmid = std::clamp(g.x1, xlo, f.x1);
    const double ylo = f.y0;
    const double yhi = std::min(f.y1, g.y1);
    const double ymid = std::clamp(g.y0, ylo, yhi);

    for (int xi = 0; xi < 2; ++xi) {
        double bx0 = (xi == 0) ? xlo : xmid;
        double bx1 = (xi == 0) ? xmid : f.x1;
        if (bx1 <= bx0) continue;
        for (int yi = 0; yi < 2; ++yi) {
            double by0 = (yi == 0) ? ylo : ymid;
            double by1 = (yi == 0) ? ymid : yhi;
            if (by1 <= by0) continue;
            std::vector<Term> q_terms;
            for (const Term& t : g.density) {
                Factor xf[2];
                int nx;
                if (xi == 0) {  // moving cumulative in u
                    double inv = 1.0 / (t.xpow + 1.0);
                    xf[0] = {inv, t.xpow + 1};
                    xf[1] = {-inv * ipow(g.x0, t.xpow + 1), 0};
                    nx = 2;
                } else {  // saturated at g.x1
                    xf[0] = {xint(t.xpow, g.x0, g.x1), 0};
                    nx = 1;
                }
                Factor wf[2];
                int nw;
                if (yi == 1) {  // moving survivor in w
                    double inv = 1.0 / (t.wpow + 1.0);
                    wf[0] = {inv, t.wpow + 1};
                    wf[1] = {-inv * ipow(1.0 - g.y1, t.wpow + 1), 0};
                    nw = 2;
                } else {  // saturated below g.y0
                    wf[0] = {wint(t.wpow, g.y0, g.y1), 0};
                    nw = 1;
                }
                for (int ix = 0; ix < nx; ++ix)
                    for (int iw = 0; iw < nw; ++iw) {
                        double cc = t.coef * xf[ix].coef * wf[iw].coef;
                        if (cc != 0.0) q_terms.push_back({cc, xf[ix].pow, wf[iw].pow});
                    }
            }
            if (!q_terms.empty())
                out.add_area(bx0, bx1, by0, by1, terms_mul(f.density, q_terms));
        }
    }
}

// Max-x from f's column, min-y from g's row: (X, Y) = (x1, y2), density
// survY_f(X, Y) * cumX_g(X, Y).
void emit_cross(const AreaComp& f, const AreaComp& g, CompBag& out) {
    const double xlo = std::max(f.x0, g.x0);
    const double xmid = std::clamp(g.x1, xlo, f.x1);
    const double ylo = g.y0;
    const double yhi = std::min(g.y1, f.y1);
    const double ymid = std::clamp(f.y0, ylo, yhi);

    for (int xi = 0; xi < 2; ++xi) {
        double bx0 = (xi == 0) ? xlo : xmid;
        double bx1 = (xi == 0) ? xmid : f.x1;
        if (bx1 <= bx0) continue;
        for (int yi = 0; yi < 2; ++yi) {
            double by0 = (yi == 0) ? ylo : ymid;
            double by1 = (yi == 0) ? ymid : yhi;
            if (by1 <= by0) continue;
            // survY_f: f's x-power stays on X; w-part moving for Y >= f.y0.
            std::vector<Term> sf;
            for (const Term& t : f.density) {
                if (yi == 1) {
                    double inv = 1.0 / (t.wpow + 1.0);
                    sf.push_back({t.coef * inv, t.xpow, t.wpow + 1});
                    double c0 = -t.coef * inv * ipow(1.0 - f.y1, t.wpow + 1);
                    if (c0 != 0.0) sf.push_back({c0, t.xpow, 0});
                } else {
                    double cc = t.coef * wint(t.wpow, f.y0, f.y1);
                    if (cc != 0.0) sf.push_back({cc, t.xpow, 0});
                }
            }
            // cumX_g: g's w-power stays on Y; x-part moving for X <= g.x1.
            std::vector<Term> cg;
            for (const Term& t : g.density) {
                if (xi == 0) {
                    double inv = 1.0 / (t.xpow + 1.0);
                    cg.push_back({t.coef * inv, t.xpow + 1, t.wpow});
                    double c0 = -t.coef * inv * ipow(g.x0, t.xpow + 1);
                    if (c0 != 0.0) cg.push_back({c0, 0, t.wpow});
                } else {
                    double cc = t.coef * xint(t.xpow, g.x0, g.x1);
                    if (cc != 0.0) cg.push_back({cc, 0, t.wpow});
                }
            }
            if (!sf.empty() && !cg.empty())
                out.add_area(bx0, bx1, by0, by1, terms_mul(sf, cg));
        }
    }
}

void combine_aa(const AreaComp& a1, const AreaComp& a2, CompBag& out) {
    emit_fq(a1, a2, out);
    emit_fq(a2, a1, out);
    emit_cross(a1, a2, out);
    emit_cross(a2, a1, out);
}

void combine_pl(const PointComp& p, const LineComp& l, CompBag& out) {
    l.horizontal ? combine_ph(p, l, out) : combine_pv(p, l, out);
}

void combine_ll(const LineComp& l1, const LineComp& l2, CompBag& out) {
    if (l1.horizontal && l2.horizontal)
        combine_hh(l1, l2, out);
    else if (!l1.horizontal && !l2.horizontal)
        combine_vv(l1, l2, out);
    else if (l1.horizontal)
        combine_hv(l1, l2, out);
    else
        combine_hv(l2, l1, out);
}

void combine_la(const LineComp& l, const AreaComp& a, CompBag& out) {
    l.horizontal ? combine_ha(l, a, out) : combine_va(l, a, out);
}

void combine_bags(const CompBag& b1, const CompBag& b2, CompBag& out) {
    for (const auto& p : b1.pts) {
        for (const auto& q : b2.pts) combine_pp(p, q, out);
        for (const auto& l : b2.lines) combine_pl(p, l, out);
        for (const auto& a : b2.areas) combine_pa(p, a, out);
    }
    for (const auto& l : b1.lines) {
        for (const auto& q : b2.pts) combine_pl(q, l, out);
        for (const auto& m : b2.lines) combine_ll(l, m, out);
        for (const auto& a : b2.areas) combine_la(l, a, out);
    }
    for (const auto& a : b1.areas) {
        for (const auto& q : b2.pts) combine_pa(q, a, out);
        for (const auto& l : b2.lines) combine_la(l, a, out);
        for (const auto& b : b2.areas) combine_aa(a, b, out);
    }
}

double core_log_const(long long r, long long s) {
    return std::lgamma(static_cast<double>(r + s + 1)) - std::lgamma(static_cast<double>(r)) -
           std::lgamma(static_cast<double>(s));
}

// Measure of {x in [x0,x1], y in [y0,y1]} for scale * evidence(r, s), all in
// log space so arbitrarily large counts stay finite.
double core_box(const EvidenceCore& e, double x0, double x1, double y0, double y1) {
    if (e.scale <= 0.0) return 0.0;
    const double r = static_cast<double>(e.r), s = static_cast<double>(e.s);
    x0 = std::max(x0, 0.0);
    x1 = std::min(x1, 1.0);
    y0 = std::max(y0, 0.0);
    y1 = std::min(y1, 1.0);
    if (x1 < x0 || y1 < y0) return 0.0;

    if (e.r == 0 && e.s == 0) return (x0 <= 0.0 && y1 >= 1.0) ? e.scale : 0.0;
    if (e.s == 0) {
        // Horizontal line at y = 1 with density scale * r * x^{r-1}.
        if (y1 < 1.0) return 0.0;
        double hi = std::min(x1, 1.0), lo = x0;
        if (hi <= lo) return 0.0;
        return e.scale * (pow_real(hi, r) - pow_real(lo, r));
    }
    if (e.r == 0) {
        // Vertical line at x = 0 with density scale * s * (1-y)^{s-1}.
        if (x0 > 0.0) return 0.0;
        double lo = y0, hi = y1;
        if (hi <= lo) return 0.0;
        return e.scale * (pow_real(1.0 - lo, s) - pow_real(1.0 - hi, s));
    }

    const double logc = core_log_const(e.r, e.s);
    x1 = std::min(x1, y1);
    y0 = std::max(y0, x0);
    if (x1 <= x0 || y1 <= y0) return 0.0;
    double total = 0.0;
    // x below y0: rectangle [x0, min(x1,y0)] x [y0, y1].
    double hi1 = std::min(x1, y0);
    if (hi1 > x0) {
        double lw = log_diff_exp(s * std::log1p(-y0), s * std::log1p(-y1));
        double lx = log_diff_exp(r * std::log(hi1), x0 > 0.0 ? r * std::log(x0) : -kInf);
        total += e.scale * std::exp(logc - std::log(r) - std::log(s) + lw + lx);
    }
    // x across [y0, y1]: y from x up to y1.
    double lo2 = std::max(x0, y0);
    if (x1 > lo2) {
        double ib = num::ibeta_reg(r, s + 1.0, x1) - num::ibeta_reg(r, s + 1.0, lo2);
        double lx = log_diff_exp(r * std::log(x1), lo2 > 0.0 ? r * std::log(lo2) : -kInf);
        double corner = (y1 >= 1.0)
                            ? 0.0
                            : std::exp(logc - std::log(r) - std::log(s) +
                                       s * std::log1p(-y1) + lx);
        total += e.scale * (ib - corner);
    }
    return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// TriangleMeasure
// ---------------------------------------------------------------------------

TriangleMeasure TriangleMeasure::evidence(EvidenceCounts e) {
    TriangleMeasure m;
    m.core_ = EvidenceCore{e.r, e.s, 1.0};
    return m;
}

TriangleMeasure TriangleMeasure::knowledge(IntervalKnowledge k) {
    TriangleMeasure m;
    m.points_.push_back({k.a0, k.b0, 1.0});
    return m;
}

void TriangleMeasure::materialize() {
    if (!core_) return;
    const EvidenceCore e = *core_;
    core_.reset();
    if (e.scale <= 0.0) return;
    if (e.r + e.s > kMaxMaterializeArea)
        throw std::invalid_argument(
            "TriangleMeasure: evidence counts too large to combine with general "
            "components (query the pure evidence measure instead)");
    if (e.r == 0 && e.s == 0) {
        points_.push_back({0.0, 1.0, e.scale});
    } else if (e.s == 0) {
        Poly1 p(static_cast<std::size_t>(e.r), 0.0);
        p.back() = e.scale * static_cast<double>(e.r);
        lines_.push_back({true, 1.0, 0.0, 1.0, std::move(p)});
    } else if (e.r == 0) {
        Poly1 p(static_cast<std::size_t>(e.s), 0.0);
        p.back() = e.scale * static_cast<double>(e.s);
        lines_.push_back({false, 0.0, 0.0, 1.0, std::move(p)});
    } else {
        double coef = e.scale * std::exp(core_log_const(e.r, e.s));
        areas_.push_back({0.0, 1.0, 0.0, 1.0,
                          {Term{coef, static_cast<int>(e.r - 1), static_cast<int>(e.s - 1)}}});
    }
}

double TriangleMeasure::total_mass() const {
    if (core_) return core_->scale;
    double t = 0.0;
    for (const auto& p : points_) t += p.w;
    for (const auto& l : lines_) t += line_mass(l);
    for (const auto& a : areas_) t += area_mass(a);
    return t;
}

bool TriangleMeasure::is_normalized(double tol) const {
    return std::abs(total_mass() - 1.0) <= tol && conflict_ <= tol;
}

double TriangleMeasure::box_measure(double x0, double x1, double y0, double y1) const {
    if (core_) return core_box(*core_, x0, x1, y0, y1);
    double t = 0.0;
    for (const auto& p : points_)
        if (p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1) t += p.w;
    for (const auto& l : lines_) {
        if (l.horizontal) {
            if (l.level >= y0 && l.level <= y1)
                t += hline_int(l.density, std::max(l.lo, x0), std::min(l.hi, x1));
        } else {
            if (l.level >= x0 && l.level <= x1)
                t += vline_int(l.density, std::max(l.lo, y0), std::min(l.hi, y1));
        }
    }
    for (const auto& a : areas_) t += area_box_tri(a, x0, x1, y0, y1);
    return t;
}

double TriangleMeasure::bel(double u, double v) const {
    if (!(0.0 <= u && u <= v && v <= 1.0))
        throw std::invalid_argument("TriangleMeasure::bel: invalid interval");
    return box_measure(u, 1.0, 0.0, v);
}

double TriangleMeasure::pl(double u, double v) const {
    if (!(0.0 <= u && u <= v && v <= 1.0))
        throw std::invalid_argument("TriangleMeasure::pl: invalid interval");
    return box_measure(0.0, v, u, 1.0);
}

double TriangleMeasure::q(double u, double v) const {
    if (!(0.0 <= u && u <= v && v <= 1.0))
        throw std::invalid_argument("TriangleMeasure::q: invalid interval");
    return box_measure(0.0, u, v, 1.0);
}

TriangleMeasure::Predictive TriangleMeasure::predictive() const {
    if (!is_normalized())
        throw std::domain_error("predictive: measure must be normalized (no conflict)");
    if (core_) {
        double denom = static_cast<double>(core_->r + core_->s + 1);
        double ms = core_->scale * static_cast<double>(core_->r) / denom;
        double mf = core_->scale * static_cast<double>(core_->s) / denom;
        return {ms, mf, core_->scale / denom};
    }
    double ex = 0.0, ew = 0.0, tot = 0.0;
    for (const auto& p : points_) {
        ex += p.w * p.x;
        ew += p.w * (1.0 - p.y);
        tot += p.w;
    }
    for (const auto& l : lines_) {
        double mass = line_mass(l);
        tot += mass;
        if (l.horizontal) {
            ex += hline_int(poly_shift_up(l.density), l.lo, l.hi);
            ew += (1.0 - l.level) * mass;
        } else {
            ex += l.level * mass;
            ew += vline_int(poly_shift_up(l.density), l.lo, l.hi);
        }
    }
    for (const auto& a : areas_) {
        tot += area_mass(a);
        for (const Term& t : a.density) {
            ex += t.coef * mono_box_tri(t.xpow + 1, t.wpow, a.x0, a.x1, a.y0, a.y1);
            ew += t.coef * mono_box_tri(t.xpow, t.wpow + 1, a.x0, a.x1, a.y0, a.y1);
        }
    }
    double residual = (tot - ew) - ex;  // E[y] - E[x]
    return {ex, ew, std::max(residual, 0.0)};
}

TriangleMeasure TriangleMeasure::normalized() const {
    double tot = total_mass();
    if (tot <= 1e-12)
        throw std::domain_error("TriangleMeasure: total conflict, cannot normalize");
    TriangleMeasure out = *this;
    out.conflict_ = 0.0;
    double inv = 1.0 / tot;
    if (out.core_) {
        out.core_->scale *= inv;
        return out;
    }
    for (auto& p : out.points_) p.w *= inv;
    for (auto& l : out.lines_)
        for (double& c : l.density) c *= inv;
    for (auto& a : out.areas_)
        for (Term& t : a.density) t.coef *= inv;
    return out;
}

TriangleMeasure combine_measures(const TriangleMeasure& m1, const TriangleMeasure& m2,
                                 bool normalize) {
    const double grand1 = m1.total_mass() + m1.conflict_;
    const double grand2 = m2.total_mass() + m2.conflict_;
    TriangleMeasure out;
    if (m1.core_ && m2.core_) {
        // Evidence combines with evidence in closed form: counts add and the
        // commonality product fixes the surviving scale.
        const EvidenceCore& e1 = *m1.core_;
        const EvidenceCore& e2 = *m2.core_;
        long long R = e1.r + e2.r, S = e1.s + e2.s;
        double scale = 0.0;
        if (e1.scale > 0.0 && e2.scale > 0.0) {
            double ls = std::log(e1.scale) + std::log(e2.scale) +
                        lchoose(static_cast<double>(e1.r + e1.s), static_cast<double>(e1.r)) +
                        lchoose(static_cast<double>(e2.r + e2.s), static_cast<double>(e2.r)) -
                        lchoose(static_cast<double>(R + S), static_cast<double>(R));
            scale = std::exp(ls);
        }
        out.core_ = EvidenceCore{R, S, scale};
    } else {
        TriangleMeasure a = m1, b = m2;
        a.materialize();
        b.materialize();
        CompBag b1{std::move(a.points_), std::move(a.lines_), std::move(a.areas_)};
        CompBag b2{std::move(b.points_), std::move(b.lines_), std::move(b.areas_)};
        CompBag res;
        combine_bags(b1, b2, res);
        out.points_ = std::move(res.pts);
        out.lines_ = std::move(res.lines);
        out.areas_ = std::move(res.areas);
    }
    out.conflict_ = std::max(0.0, grand1 * grand2 - out.total_mass());
    if (normalize) out = out.normalized();
    return out;
}

TriangleMeasure evidence_accumulation(EvidenceCounts e) {
    TriangleMeasure m = TriangleMeasure::evidence(e);
    double scale = std::exp(-lchoose(static_cast<double>(e.r + e.s), static_cast<double>(e.r)));
    m.core_->scale = scale;
    m.conflict_ = 1.0 - scale;
    return m;
}

MassFunction predictive_mass(const TriangleMeasure& m, const Frame& frame) {
    if (frame.size() != 2)
        throw std::invalid_argument("predictive_mass: frame must have 2 atoms");
    auto p = m.predictive();
    std::vector<double> masses(4, 0.0);
    masses[0b01] = p.success;
    masses[0b10] = p.failure;
    masses[0b11] = p.residual;
    return {frame, std::move(masses)};
}

}  // namespace credal::binary
