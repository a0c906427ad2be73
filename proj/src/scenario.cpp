#include "credal/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "credal/knowledge.hpp"
#include "credal/mass.hpp"
#include "credal/pignistic.hpp"

namespace credal::cli {

namespace {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parsing helpers: numbers may be JSON numbers or decimal strings.
// ---------------------------------------------------------------------------

double as_number(const ordered_json& v, const std::string& path) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            std::size_t used = 0;
            double d = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return d;
        } catch (const std::exception&) {
            throw SchemaError(path, "not a decimal number: '" + s + "'");
        }
    }
    throw SchemaError(path, "expected a number or decimal string");
}

long long as_integer(const ordered_json& v, const std::string& path) {
    double d = as_number(v, path);
    long long n = static_cast<long long>(std::llround(d));
    if (std::abs(d - static_cast<double>(n)) > 1e-9)
        throw SchemaError(path, "expected an integer");
    return n;
}

const ordered_json& member(const ordered_json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key))
        throw SchemaError(path + "." + key, "missing required field");
    return obj.at(key);
}

std::vector<double> as_point(const ordered_json& v, int n, const std::string& path) {
    if (!v.is_array() || static_cast<int>(v.size()) != n)
        throw SchemaError(path, "expected an array of " + std::to_string(n) + " numbers");
    std::vector<double> p;
    for (std::size_t i = 0; i < v.size(); ++i)
        p.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
    return p;
}

ternary::BaryPoint as_bary(const ordered_json& v, const std::string& path) {
    auto p = as_point(v, 3, path);
    try {
        return ternary::BaryPoint(p[0], p[1], p[2]);
    } catch (const std::exception& e) {
        throw SchemaError(path, e.what());
    }
}

// ---------------------------------------------------------------------------
// Report building.
// ---------------------------------------------------------------------------

constexpr const char* kExact = "exact";
constexpr const char* kClosed = "closed-form";
constexpr const char* kMC = "monte-carlo";

ordered_json entry(double v, const char* method) {
    return ordered_json{{"value", v}, {"method", method}};
}

ordered_json entry_mc(double v, double se) {
    return ordered_json{{"value", v}, {"method", kMC}, {"se", se}};
}

// Canonical subset table, ascending bitmask.
ordered_json table(const Frame& f, const std::vector<double>& values, const char* method,
                   bool skip_zero, std::uint32_t from = 1) {
    ordered_json out = ordered_json::object();
    for (std::uint32_t a = from; a < f.num_subsets(); ++a) {
        if (skip_zero && values[a] == 0.0) continue;
        out[f.name_of(a)] = entry(values[a], method);
    }
    return out;
}

ordered_json prob_table(const Frame& f, const std::vector<double>& probs, const char* method) {
    ordered_json out = ordered_json::object();
    for (int i = 0; i < f.size(); ++i)
        out[f.atom(i)] = entry(probs[static_cast<std::size_t>(i)], method);
    return out;
}

ordered_json mass_tables(const MassFunction& m, const char* method) {
    ordered_json out = ordered_json::object();
    out["masses"] = table(m.frame, m.m, method, true, 0);
    out["beliefs"] = table(m.frame, mobius_forward(m, SetKind::belief).values, method, false);
    out["plausibilities"] =
        table(m.frame, mobius_forward(m, SetKind::plausibility).values, method, false);
    out["commonalities"] =
        table(m.frame, mobius_forward(m, SetKind::commonality).values, method, false);
    return out;
}

mc::CredalPolytopeSet scenario_polytopes(const Scenario& sc) {
    if (sc.polytopes) return *sc.polytopes;
    if (sc.interval) {
        double a = sc.interval->a0, b = sc.interval->b0;
        if (b - a < 1e-12) return mc::CredalPolytopeSet(2, {{{a, 1 - a}}});
        return mc::CredalPolytopeSet(2, {{{a, 1 - a}, {b, 1 - b}}});
    }
    const ternary::CredalSet3* set = nullptr;
    ternary::CredalSet3 hex = ternary::CredalSet3::full_simplex();
    if (sc.bounds3) {
        hex = ternary::hexagon_polygon(*sc.bounds3);
        set = &hex;
    } else if (sc.components) {
        set = &*sc.components;
    } else {
        throw std::logic_error("scenario_polytopes: no knowledge form");
    }
    std::vector<std::vector<std::vector<double>>> comps;
    for (const auto& comp : set->components()) {
        std::vector<std::vector<double>> vs;
        for (const auto& v : comp.vertices) vs.push_back({v.a, v.b, v.c});
        comps.push_back(std::move(vs));
    }
    return mc::CredalPolytopeSet(3, std::move(comps));
}

ordered_json mc_section(const Scenario& sc, const RunOptions& opt) {
    long long samples = opt.samples.value_or(sc.mc_samples.value_or(200000));
    std::uint64_t seed = opt.seed.value_or(sc.mc_seed.value_or(0));
    mc::CredalPolytopeSet poly = scenario_polytopes(sc);
    mc::MCResult r = mc::estimate(poly, mc::MCConfig(samples, seed), sc.frame);
    ordered_json est = ordered_json::object();
    ordered_json se = ordered_json::object();
    for (const auto& [mask, v] : r.mass_estimates) {
        est[sc.frame.name_of(mask)] = entry_mc(v, r.standard_errors.at(mask));
        se[sc.frame.name_of(mask)] = r.standard_errors.at(mask);
    }
    return ordered_json{
        {"estimates", est}, {"se", se}, {"samples", samples}, {"seed", seed}};
}

// Explicit answers for queried subsets, drawn from an already-built table.
void add_subset_answers(ordered_json& report, const Scenario& sc) {
    if (sc.subset_queries.empty()) return;
    ordered_json out = ordered_json::object();
    for (std::uint32_t mask : sc.subset_queries) {
        std::string name = sc.frame.name_of(mask);
        ordered_json ans = ordered_json::object();
        if (report.contains("beliefs") && report.at("beliefs").contains(name))
            ans["bel"] = report.at("beliefs").at(name);
        if (report.contains("plausibilities") && report.at("plausibilities").contains(name))
            ans["pl"] = report.at("plausibilities").at(name);
        out[name] = ans;
    }
    report["subset_answers"] = out;
}

constexpr const char* kBetpNote =
    "the finite transform on the frame is not the betting distribution for "
    "credal-induced beliefs; decisions should use the centroid";

ordered_json run_binary(const Scenario& sc, const RunOptions& opt) {
    using binary::TriangleMeasure;
    ordered_json report;
    report["scenario"] = sc.echo;

    TriangleMeasure prior = sc.interval ? TriangleMeasure::knowledge(*sc.interval)
                                        : TriangleMeasure::vacuous();
    TriangleMeasure final_measure = prior;
    const char* method = kExact;

    if (sc.evidence) {
        TriangleMeasure ev = TriangleMeasure::evidence(*sc.evidence);
        TriangleMeasure combined = combine_measures(ev, prior, false);
        report["conflict"] = entry(combined.conflict(), kClosed);
        try {
            final_measure = combined.normalized();
        } catch (const std::domain_error&) {
            throw ContradictionError("contradictory knowledge: evidence and interval "
                                     "knowledge are in total conflict");
        }
        method = kClosed;
        MassFunction prior_mass = binary::predictive_mass(prior, sc.frame);
        report["prior"] = mass_tables(prior_mass, kExact);
    }

    MassFunction m = binary::predictive_mass(final_measure, sc.frame);
    ordered_json tables = mass_tables(m, method);
    for (auto& [k, v] : tables.items()) report[k] = v;

    if (!sc.interval_queries.empty()) {
        ordered_json arr = ordered_json::array();
        for (auto [u, v] : sc.interval_queries) {
            arr.push_back(ordered_json{{"interval", {u, v}},
                                       {"bel", entry(final_measure.bel(u, v), method)},
                                       {"pl", entry(final_measure.pl(u, v), method)},
                                       {"q", entry(final_measure.q(u, v), method)}});
        }
        report["interval_answers"] = arr;
    }

    add_subset_answers(report, sc);

    pignistic::ProbDist fin = pignistic::betp_finite(m);
    report["betp"] = ordered_json{{"centroid", prob_table(sc.frame, fin.probs, kClosed)},
                                  {"finite_transform", prob_table(sc.frame, fin.probs, method)},
                                  {"note", kBetpNote}};

    if (sc.mc_samples || opt.samples) report["mc"] = mc_section(sc, opt);
    return report;
}

ordered_json run_ternary(const Scenario& sc, const RunOptions& opt) {
    ordered_json report;
    report["scenario"] = sc.echo;

    MassFunction m = vacuous_mass(sc.frame);
    pignistic::ProbDist centroid{sc.frame, {0, 0, 0}};
    if (!sc.mixture.empty()) {
        std::vector<knowledge::MixtureItem> items;
        for (const auto& [set, mass] : sc.mixture) items.push_back({set, mass});
        knowledge::MixtureResult mix = knowledge::mixture_bel(items, sc.frame);
        m = mix.mass;
        for (const auto& [set, mass] : sc.mixture) {
            pignistic::ProbDist c = pignistic::betp_credal(set, sc.frame);
            for (int i = 0; i < 3; ++i)
                centroid.probs[static_cast<std::size_t>(i)] +=
                    mass * c(i);
        }
    } else {
        ternary::CredalSet3 set = sc.bounds3 ? ternary::hexagon_polygon(*sc.bounds3)
                                             : *sc.components;
        m = ternary::mass_from_credal(set, sc.frame);
        centroid = pignistic::betp_credal(set, sc.frame);
        if (sc.bounds3) {
            SetFunction closed = ternary::bel_from_bounds(*sc.bounds3, sc.frame);
            report["bounds_closed_form_beliefs"] =
                table(sc.frame, closed.values, kClosed, false);
        }
    }

    ordered_json tables = mass_tables(m, kExact);
    for (auto& [k, v] : tables.items()) report[k] = v;

    add_subset_answers(report, sc);

    pignistic::ProbDist fin = pignistic::betp_finite(m);
    report["betp"] = ordered_json{{"centroid", prob_table(sc.frame, centroid.probs, kExact)},
                                  {"finite_transform", prob_table(sc.frame, fin.probs, kExact)},
                                  {"note", kBetpNote}};

    if (sc.mc_samples || opt.samples) report["mc"] = mc_section(sc, opt);
    return report;
}

ordered_json run_polytope(const Scenario& sc, const RunOptions& opt) {
    ordered_json report;
    report["scenario"] = sc.echo;
    long long samples = opt.samples.value_or(sc.mc_samples.value_or(200000));
    std::uint64_t seed = opt.seed.value_or(sc.mc_seed.value_or(0));

    mc::MCResult r = mc::estimate(*sc.polytopes, mc::MCConfig(samples, seed), sc.frame);
    ordered_json masses = ordered_json::object();
    for (const auto& [mask, v] : r.mass_estimates)
        masses[sc.frame.name_of(mask)] = entry_mc(v, r.standard_errors.at(mask));
    report["masses"] = masses;
    ordered_json bel = ordered_json::object();
    for (std::uint32_t a = 1; a < sc.frame.num_subsets(); ++a) {
        if (sc.frame.size() > 4 && r.belief_estimates[a] == 0.0) continue;
        bel[sc.frame.name_of(a)] =
            entry_mc(r.belief_estimates[a],
                     std::sqrt(std::max(r.belief_estimates[a] * (1 - r.belief_estimates[a]),
                                        1e-12) /
                               static_cast<double>(samples)));
    }
    report["beliefs"] = bel;
    add_subset_answers(report, sc);

    pignistic::McCentroid c =
        pignistic::betp_credal_mc(*sc.polytopes, mc::MCConfig(samples, mc::mix_seed(seed, 1)));
    ordered_json cent = ordered_json::object();
    for (int i = 0; i < sc.frame.size(); ++i)
        cent[sc.frame.atom(i)] = entry_mc(c.probs[static_cast<std::size_t>(i)],
                                          c.se[static_cast<std::size_t>(i)]);
    std::map<std::uint32_t, double> est;
    for (const auto& [mask, v] : r.mass_estimates) est[mask] = v;
    MassFunction approx{sc.frame, std::vector<double>(sc.frame.num_subsets(), 0.0)};
    for (const auto& [mask, v] : est) approx.m[mask] = v;
    pignistic::ProbDist fin = pignistic::betp_finite(approx);
    ordered_json fint = ordered_json::object();
    for (int i = 0; i < sc.frame.size(); ++i)
        fint[sc.frame.atom(i)] = entry(fin(i), kMC);
    report["betp"] = ordered_json{{"centroid", cent}, {"finite_transform", fint},
                                  {"note", kBetpNote}};
    report["mc"] = ordered_json{{"samples", samples}, {"seed", seed}};
    return report;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void render_table(std::ostringstream& os, const std::string& title, const ordered_json& tab) {
    os << title << "\n";
    for (const auto& [name, e] : tab.items()) {
        os << "  " << name << " = " << fmt(e.at("value").get<double>()) << "  ["
           << e.at("method").get<std::string>();
        if (e.contains("se")) os << " +-" << fmt(e.at("se").get<double>());
        os << "]\n";
    }
}

}  // namespace

Scenario parse_scenario(const ordered_json& doc) {
    if (!doc.is_object()) throw SchemaError("$", "scenario must be a JSON object");
    if (!doc.contains("schema_version") || !doc.at("schema_version").is_number_integer() ||
        doc.at("schema_version").get<int>() != 1)
        throw SchemaError("schema_version", "must be the integer 1");

    const ordered_json& fr = member(doc, "frame", "$");
    if (!fr.is_array() || fr.size() < 2) throw SchemaError("frame", "need at least 2 atom names");
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < fr.size(); ++i) {
        if (!fr[i].is_string())
            throw SchemaError("frame[" + std::to_string(i) + "]", "atom names are strings");
        atoms.push_back(fr[i].get<std::string>());
    }
    std::optional<Frame> frame;
    try {
        frame.emplace(atoms);
    } catch (const std::exception& e) {
        throw SchemaError("frame", e.what());
    }
    const int n = frame->size();

    static const char* kKnown[] = {"schema_version", "frame", "knowledge", "evidence",
                                   "mixture", "queries", "mc"};
    for (const auto& [key, _] : doc.items()) {
        if (std::find_if(std::begin(kKnown), std::end(kKnown),
                         [&](const char* k) { return key == k; }) == std::end(kKnown))
            throw SchemaError(key, "unknown field");
    }

    Scenario sc{*frame, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};

    auto parse_knowledge_set = [&](const ordered_json& k, const std::string& path)
        -> ternary::CredalSet3 {
        // n = 3 knowledge forms usable inside mixtures: bounds3 or components.
        if (k.contains("bounds3")) {
            const ordered_json& b = k.at("bounds3");
            auto lo = as_point(member(b, "lower", path + ".bounds3"), 3, path + ".bounds3.lower");
            auto up = as_point(member(b, "upper", path + ".bounds3"), 3, path + ".bounds3.upper");
            try {
                return ternary::hexagon_polygon(
                    {{lo[0], lo[1], lo[2]}, {up[0], up[1], up[2]}});
            } catch (const ContradictionError&) {
                throw;
            } catch (const std::exception& e) {
                throw SchemaError(path + ".bounds3", e.what());
            }
        }
        if (k.contains("components")) {
            const ordered_json& cs = k.at("components");
            if (!cs.is_array() || cs.empty())
                throw SchemaError(path + ".components", "need a nonempty array of components");
            std::vector<ternary::CredalComponent> comps;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                std::string cpath = path + ".components[" + std::to_string(i) + "]";
                if (!cs[i].is_array() || cs[i].empty())
                    throw SchemaError(cpath, "component is a nonempty array of points");
                ternary::CredalComponent comp;
                for (std::size_t j = 0; j < cs[i].size(); ++j)
                    comp.vertices.push_back(
                        as_bary(cs[i][j], cpath + "[" + std::to_string(j) + "]"));
                comps.push_back(std::move(comp));
            }
            try {
                return ternary::CredalSet3(std::move(comps));
            } catch (const std::exception& e) {
                throw SchemaError(path + ".components", e.what());
            }
        }
        throw SchemaError(path, "expected bounds3 or components");
    };

    bool has_knowledge = doc.contains("knowledge");
    bool has_mixture = doc.contains("mixture");
    if (has_knowledge == has_mixture)
        throw SchemaError("knowledge", "provide exactly one of 'knowledge' or 'mixture'");

    if (has_knowledge) {
        const ordered_json& k = doc.at("knowledge");
        if (!k.is_object()) throw SchemaError("knowledge", "must be an object");
        int forms = static_cast<int>(k.contains("interval")) + k.contains("bounds3") +
                    k.contains("components") + k.contains("polytopes");
        if (forms != 1)
            throw SchemaError("knowledge",
                              "exactly one of interval, bounds3, components, polytopes");
        if (k.contains("interval")) {
            if (n != 2) throw SchemaError("knowledge.interval", "requires a 2-atom frame");
            const ordered_json& iv = k.at("interval");
            double a0 = as_number(member(iv, "a0", "knowledge.interval"), "knowledge.interval.a0");
            double b0 = as_number(member(iv, "b0", "knowledge.interval"), "knowledge.interval.b0");
            try {
                sc.interval.emplace(a0, b0);
            } catch (const std::exception& e) {
                throw SchemaError("knowledge.interval", e.what());
            }
        } else if (k.contains("bounds3")) {
            if (n != 3) throw SchemaError("knowledge.bounds3", "requires a 3-atom frame");
            const ordered_json& b = k.at("bounds3");
            auto lo = as_point(member(b, "lower", "knowledge.bounds3"), 3,
                               "knowledge.bounds3.lower");
            auto up = as_point(member(b, "upper", "knowledge.bounds3"), 3,
                               "knowledge.bounds3.upper");
            sc.bounds3 = ternary::LowerProbBounds3{{lo[0], lo[1], lo[2]},
                                                   {up[0], up[1], up[2]}};
            for (int i = 0; i < 3; ++i)
                if (lo[static_cast<std::size_t>(i)] < 0 ||
                    up[static_cast<std::size_t>(i)] > 1 ||
                    lo[static_cast<std::size_t>(i)] > up[static_cast<std::size_t>(i)])
                    throw SchemaError("knowledge.bounds3", "need 0 <= lower <= upper <= 1");
        } else if (k.contains("components")) {
            if (n != 3) throw SchemaError("knowledge.components", "requires a 3-atom frame");
            sc.components = parse_knowledge_set(k, "knowledge");
        } else {
            const ordered_json& ps = k.at("polytopes");
            if (!ps.is_array() || ps.empty())
                throw SchemaError("knowledge.polytopes", "need a nonempty array of polytopes");
            std::vector<std::vector<std::vector<double>>> comps;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                std::string ppath = "knowledge.polytopes[" + std::to_string(i) + "]";
                if (!ps[i].is_array() || ps[i].empty())
                    throw SchemaError(ppath, "polytope is a nonempty array of vertices");
                std::vector<std::vector<double>> vs;
                for (std::size_t j = 0; j < ps[i].size(); ++j)
                    vs.push_back(as_point(ps[i][j], n, ppath + "[" + std::to_string(j) + "]"));
                comps.push_back(std::move(vs));
            }
            try {
                sc.polytopes.emplace(n, std::move(comps));
            } catch (const std::exception& e) {
                throw SchemaError("knowledge.polytopes", e.what());
            }
        }
    } else {
        if (n != 3) throw SchemaError("mixture", "requires a 3-atom frame");
        const ordered_json& mix = doc.at("mixture");
        if (!mix.is_array() || mix.empty())
            throw SchemaError("mixture", "need a nonempty array of knowledge items");
        double msum = 0.0;
        for (std::size_t i = 0; i < mix.size(); ++i) {
            std::string mpath = "mixture[" + std::to_string(i) + "]";
            const ordered_json& item = mix[i];
            double mass = as_number(member(item, "mass", mpath), mpath + ".mass");
            if (mass < 0) throw SchemaError(mpath + ".mass", "negative mass");
            msum += mass;
            sc.mixture.emplace_back(
                parse_knowledge_set(member(item, "knowledge", mpath), mpath + ".knowledge"),
                mass);
        }
        if (std::abs(msum - 1.0) > 1e-9)
            throw SchemaError("mixture", "masses must sum to 1");
    }

    if (doc.contains("evidence")) {
        if (n != 2) throw SchemaError("evidence", "requires a 2-atom frame");
        const ordered_json& e = doc.at("evidence");
        long long r = as_integer(member(e, "r", "evidence"), "evidence.r");
        long long s = as_integer(member(e, "s", "evidence"), "evidence.s");
        if (r < 0 || s < 0) throw SchemaError("evidence", "counts must be nonnegative");
        sc.evidence.emplace(r, s);
    }

    if (doc.contains("queries")) {
        const ordered_json& q = doc.at("queries");
        if (!q.is_object()) throw SchemaError("queries", "must be an object");
        if (q.contains("subsets")) {
            for (std::size_t i = 0; i < q.at("subsets").size(); ++i) {
                const ordered_json& sv = q.at("subsets")[i];
                std::string spath = "queries.subsets[" + std::to_string(i) + "]";
                if (!sv.is_string()) throw SchemaError(spath, "subset names are strings");
                try {
                    sc.subset_queries.push_back(sc.frame.mask_of(sv.get<std::string>()));
                } catch (const std::exception& e) {
                    throw SchemaError(spath, e.what());
                }
            }
        }
        if (q.contains("intervals")) {
            if (n != 2 || !sc.interval)
                throw SchemaError("queries.intervals",
                                  "interval queries require interval knowledge on a 2-atom frame");
            for (std::size_t i = 0; i < q.at("intervals").size(); ++i) {
                std::string ipath = "queries.intervals[" + std::to_string(i) + "]";
                auto p = as_point(q.at("intervals")[i], 2, ipath);
                if (!(0 <= p[0] && p[0] <= p[1] && p[1] <= 1))
                    throw SchemaError(ipath, "need 0 <= u <= v <= 1");
                sc.interval_queries.emplace_back(p[0], p[1]);
            }
        }
    }

    if (doc.contains("mc")) {
        if (!sc.mixture.empty())
            throw SchemaError("mc", "Monte Carlo estimation is not supported for mixtures");
        const ordered_json& m = doc.at("mc");
        sc.mc_samples = as_integer(member(m, "samples", "mc"), "mc.samples");
        if (*sc.mc_samples < 1000) throw SchemaError("mc.samples", "need at least 1000 samples");
        sc.mc_seed = static_cast<std::uint64_t>(as_integer(member(m, "seed", "mc"), "mc.seed"));
    }

    sc.echo = doc;
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    ordered_json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
    return parse_scenario(doc);
}

ordered_json run_scenario(const Scenario& sc, const RunOptions& opt) {
    if (sc.polytopes) return run_polytope(sc, opt);
    if (sc.frame.size() == 2) return run_binary(sc, opt);
    return run_ternary(sc, opt);
}

std::string render_text(const ordered_json& report) {
    std::ostringstream os;
    os << "scenario frame:";
    for (const auto& a : report.at("scenario").at("frame")) os << " " << a.get<std::string>();
    os << "\n";
    if (report.contains("conflict"))
        os << "combination conflict = " << fmt(report.at("conflict").at("value").get<double>())
           << "\n";
    if (report.contains("prior")) {
        os << "-- knowledge only --\n";
        render_table(os, "masses", report.at("prior").at("masses"));
        render_table(os, "beliefs", report.at("prior").at("beliefs"));
        render_table(os, "plausibilities", report.at("prior").at("plausibilities"));
        os << "-- after evidence --\n";
    }
    for (const char* key : {"masses", "beliefs", "plausibilities", "commonalities"})
        if (report.contains(key)) render_table(os, key, report.at(key));
    if (report.contains("interval_answers")) {
        os << "interval queries (on P(" << report.at("scenario").at("frame")[0].get<std::string>()
           << "))\n";
        for (const auto& ans : report.at("interval_answers")) {
            os << "  [" << fmt(ans.at("interval")[0].get<double>()) << ", "
               << fmt(ans.at("interval")[1].get<double>())
               << "]: bel = " << fmt(ans.at("bel").at("value").get<double>())
               << ", pl = " << fmt(ans.at("pl").at("value").get<double>())
               << ", q = " << fmt(ans.at("q").at("value").get<double>()) << "\n";
        }
    }
    if (report.contains("betp")) {
        render_table(os, "pignistic (centroid)", report.at("betp").at("centroid"));
        render_table(os, "pignistic (finite transform)",
                     report.at("betp").at("finite_transform"));
        os << "note: " << report.at("betp").at("note").get<std::string>() << "\n";
    }
    if (report.contains("mc")) {
        const ordered_json& m = report.at("mc");
        os << "monte carlo (samples = " << m.at("samples").get<long long>()
           << ", seed = " << m.at("seed").get<std::uint64_t>() << ")\n";
        if (m.contains("estimates")) {
            for (const auto& [name, v] : m.at("estimates").items())
                os << "  m(" << name << ") ~ " << fmt(v.at("value").get<double>()) << " +-"
                   << fmt(v.at("se").get<double>()) << "\n";
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Cross validation: exact engines vs the Monte Carlo engine.
// ---------------------------------------------------------------------------

namespace {

struct CrossCase {
    std::string name;
    Frame frame;
    std::vector<double> exact_bel;  // dense over subsets
    mc::CredalPolytopeSet poly;
};

Frame frame_n(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return Frame(names);
}

std::vector<double> bayesian_bel(int n, const std::vector<double>& p) {
    std::vector<double> bel(1u << n, 0.0);
    for (std::uint32_t a = 0; a < bel.size(); ++a)
        for (int i = 0; i < n; ++i)
            if (a & (1u << i)) bel[a] += p[static_cast<std::size_t>(i)];
    return bel;
}

std::vector<std::vector<std::vector<double>>> set_to_polys(const ternary::CredalSet3& set) {
    std::vector<std::vector<std::vector<double>>> comps;
    for (const auto& comp : set.components()) {
        std::vector<std::vector<double>> vs;
        for (const auto& v : comp.vertices) vs.push_back({v.a, v.b, v.c});
        comps.push_back(std::move(vs));
    }
    return comps;
}

}  // namespace

CrossValidation cross_validate(long long samples, std::uint64_t seed, double tolerance) {
    Frame f3 = frame_n(3);
    std::vector<CrossCase> cases;

    auto add_set = [&](const std::string& name, const ternary::CredalSet3& set) {
        cases.push_back({name, f3, ternary::bel_table(set, f3).values,
                         mc::CredalPolytopeSet(3, set_to_polys(set))});
    };
    add_set("two-point set",
            ternary::CredalSet3::points({ternary::BaryPoint(.5, 0, .5),
                                         ternary::BaryPoint(.5, .5, 0)}));
    add_set("segment set", ternary::CredalSet3({ternary::CredalComponent{
                               {ternary::BaryPoint(.5, 0, .5), ternary::BaryPoint(.5, .5, 0)}}}));
    add_set("half-bounded triangle",
            ternary::CredalSet3({ternary::CredalComponent{{ternary::BaryPoint(.5, .5, 0),
                                                           ternary::BaryPoint(0, .5, .5),
                                                           ternary::BaryPoint(.5, 0, .5)}}}));

    // Bounds-defined hexagons validate the closed forms against sampling.
    auto add_bounds = [&](const std::string& name, const ternary::LowerProbBounds3& b) {
        cases.push_back({name, f3, ternary::bel_from_bounds(b, f3).values,
                         mc::CredalPolytopeSet(3, set_to_polys(ternary::hexagon_polygon(b)))});
    };
    add_bounds("hexagon bounds", {{.2, .1, .05}, {.7, .6, .5}});
    std::mt19937_64 rng(mc::mix_seed(seed, 777));
    for (int i = 0; i < 3; ++i) {
        auto p = mc::sample_simplex(rng, 3);
        ternary::LowerProbBounds3 b;
        for (int j = 0; j < 3; ++j) {
            b.lower[j] = p[static_cast<std::size_t>(j)] * mc::uniform01(rng);
            b.upper[j] = p[static_cast<std::size_t>(j)] +
                         (1 - p[static_cast<std::size_t>(j)]) * mc::uniform01(rng);
        }
        add_bounds("random hexagon " + std::to_string(i + 1), b);
    }

    // Random singletons: the induced belief is the probability itself.
    for (int n : {2, 3, 4, 5}) {
        auto p = mc::sample_simplex(rng, n);
        cases.push_back({"random singleton n=" + std::to_string(n), frame_n(n),
                         bayesian_bel(n, p), mc::CredalPolytopeSet(n, {{p}})});
    }

    // Binary interval knowledge against the exact binary engine.
    {
        binary::TriangleMeasure k = binary::TriangleMeasure::knowledge({.3, .4});
        Frame f2 = frame_n(2);
        MassFunction m = binary::predictive_mass(k, f2);
        cases.push_back({"binary interval [.3,.4]", f2,
                         mobius_forward(m, SetKind::belief).values,
                         mc::CredalPolytopeSet(2, {{{.3, .7}, {.4, .6}}})});
    }

    ordered_json jcases = ordered_json::array();
    bool any_flagged = false;
    std::uint64_t case_seed = seed;
    for (const auto& c : cases) {
        mc::MCResult r = mc::estimate(c.poly, mc::MCConfig(samples, case_seed++), c.frame);
        double maxdiff = 0.0, worst_margin = -1.0;
        for (std::uint32_t a = 1; a < c.frame.num_subsets(); ++a) {
            double b = r.belief_estimates[a];
            double se = std::sqrt(std::max(b * (1 - b), 1e-12) / static_cast<double>(samples));
            double diff = std::abs(b - c.exact_bel[a]);
            maxdiff = std::max(maxdiff, diff);
            worst_margin = std::max(worst_margin, diff - 4 * se - tolerance);
        }
        bool flagged = worst_margin > 0.0;
        any_flagged = any_flagged || flagged;
        jcases.push_back(ordered_json{{"name", c.name},
                                      {"max_abs_diff", maxdiff},
                                      {"worst_margin", worst_margin},
                                      {"flagged", flagged}});
    }
    ordered_json report{{"samples", samples}, {"seed", seed}, {"tolerance", tolerance},
                        {"cases", jcases}, {"flagged", any_flagged}};
    return {report, any_flagged};
}

std::string render_cross_text(const ordered_json& report) {
    std::ostringstream os;
    os << "cross-validation: exact engines vs monte carlo (samples = "
       << report.at("samples").get<long long>() << ", seed = "
       << report.at("seed").get<std::uint64_t>() << ")\n";
    for (const auto& c : report.at("cases")) {
        os << "  " << (c.at("flagged").get<bool>() ? "FLAG" : "ok  ") << "  max|exact-mc| = "
           << fmt(c.at("max_abs_diff").get<double>()) << "  " << c.at("name").get<std::string>()
           << "\n";
    }
    os << (report.at("flagged").get<bool>() ? "RESULT: FLAGGED\n" : "RESULT: all within 4*SE\n");
    return os.str();
}

}  // namespace credal::cli
