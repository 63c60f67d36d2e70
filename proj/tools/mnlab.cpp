// mnlab: numerical laboratory for arc-mean amalgam inequalities, radial
// doubling weights, and analytic paraproducts on weighted mixed-norm spaces.
//
//   mnlab <command> --config <path> [--refine] [--seed N] [--out <path>]
//
// Commands: hl-check, sharpness, weight-audit, paraproduct, carleson.
// Exit codes: 0 success, 1 requested check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iostream>
#include <map>
#include <mutex>

#include "mnlab/carleson.hpp"
#include "mnlab/corpus.hpp"
#include "mnlab/exponents.hpp"
#include "mnlab/means.hpp"
#include "mnlab/mixed_norm.hpp"
#include "mnlab/parallel.hpp"
#include "mnlab/paraproducts.hpp"
#include "mnlab/power_series.hpp"
#include "mnlab/report.hpp"
#include "mnlab/weights.hpp"

using nlohmann::json;
using namespace mnlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

double json_exponent(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw std::invalid_argument("exponent string must be \"inf\"");
    }
    return j.get<double>();
}

std::string exp_str(double v) { return v == kInf ? "inf" : format_double(v); }

struct Grids {
    std::size_t degree = 512;
    int j_max = 6;
    int radial_nodes = 128;
    std::size_t samples_per_arc = 32;
    int sup_grid_points = 64;
    int radial_steps = 40;
    std::size_t test_degree = 2048;
    int sharpness_m_terms = 8;
    int sharpness_k0_max = 12;
    std::size_t sharpness_samples_per_arc = 0;  // 0 = auto from degree

    static Grids from_json(const json& cfg, bool refine) {
        Grids g;
        if (cfg.contains("grids")) {
            const json& gj = cfg["grids"];
            g.degree = gj.value("degree", g.degree);
            g.j_max = gj.value("j_max", g.j_max);
            g.radial_nodes = gj.value("radial_nodes", g.radial_nodes);
            g.samples_per_arc = gj.value("samples_per_arc", g.samples_per_arc);
            g.sup_grid_points = gj.value("sup_grid_points", g.sup_grid_points);
            g.radial_steps = gj.value("radial_steps", g.radial_steps);
            g.test_degree = gj.value("test_degree", g.test_degree);
            g.sharpness_m_terms = gj.value("sharpness_m_terms", g.sharpness_m_terms);
            g.sharpness_k0_max = gj.value("sharpness_k0_max", g.sharpness_k0_max);
            g.sharpness_samples_per_arc =
                gj.value("sharpness_samples_per_arc", g.sharpness_samples_per_arc);
        }
        if (refine) {
            g.radial_nodes *= 2;
            g.samples_per_arc *= 2;
            g.sup_grid_points *= 2;
            g.radial_steps *= 2;
            g.sharpness_k0_max += 2;
            if (g.sharpness_samples_per_arc) g.sharpness_samples_per_arc *= 2;
        }
        return g;
    }
    json to_json() const {
        return json{{"degree", degree},
                    {"j_max", j_max},
                    {"radial_nodes", radial_nodes},
                    {"samples_per_arc", samples_per_arc},
                    {"sup_grid_points", sup_grid_points},
                    {"radial_steps", radial_steps},
                    {"test_degree", test_degree},
                    {"sharpness_m_terms", sharpness_m_terms},
                    {"sharpness_k0_max", sharpness_k0_max},
                    {"sharpness_samples_per_arc", sharpness_samples_per_arc}};
    }
};

RadialWeight weight_from_config(const json& cfg) {
    if (cfg.contains("weight_file"))
        return weight_from_json_text(
            read_text_file(cfg["weight_file"].get<std::string>()));
    if (cfg.contains("weight"))
        return weight_from_json_text(cfg["weight"].dump());
    return RadialWeight::standard(0.0);
}

PowerSeries symbol_from_config(const json& cfg, std::size_t degree) {
    if (!cfg.contains("g")) return PowerSeries::monomial(1);
    const json& gj = cfg["g"];
    if (gj.is_string()) {
        const std::string s = gj.get<std::string>();
        if (s == "z") return PowerSeries::monomial(1);
        if (s == "z2") return PowerSeries::monomial(2);
        if (s == "const") return PowerSeries::constant(1.0);
        if (s == "log_kernel") return log_kernel(degree);
        if (s == "geom") return geometric_kernel(1, degree);
        throw std::invalid_argument("unknown symbol g: " + s);
    }
    if (gj.contains("monomial"))
        return PowerSeries::monomial(gj["monomial"].get<std::size_t>());
    if (gj.contains("coeffs")) {
        std::vector<cplx> c;
        for (const auto& e : gj["coeffs"])
            c.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        return PowerSeries(std::move(c));
    }
    throw std::invalid_argument("config: cannot parse symbol g");
}

std::vector<CorpusEntry> corpus_from_config(const json& cfg,
                                            std::uint64_t seed,
                                            std::size_t degree) {
    auto all = build_corpus(seed, degree);
    if (!cfg.contains("corpus")) return all;
    const auto& sel = cfg["corpus"];
    if (sel.size() == 1 && sel[0] == "all") return all;
    std::vector<CorpusEntry> out;
    for (const auto& want : sel) {
        bool found = false;
        for (auto& e : all)
            if (e.id == want.get<std::string>()) {
                out.push_back(e);
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("config: unknown corpus id " +
                                        want.get<std::string>());
    }
    return out;
}

// ---------------------------------------------------------------------------
// hl-check
// ---------------------------------------------------------------------------

int cmd_hl_check(const json& cfg, bool refine, std::uint64_t seed,
                 const std::string& out_path) {
    const Grids grids = Grids::from_json(cfg, refine);
    std::vector<std::pair<double, double>> pq_pairs;
    for (const auto& p : cfg.value("pq_pairs", json::array(
                             {{1.0, 2.0}, {2.0, 4.0}, {0.5, 1.0}, {2.0, "inf"}})))
        pq_pairs.emplace_back(json_exponent(p[0]), json_exponent(p[1]));
    std::vector<std::pair<double, double>> r_pairs;
    for (const auto& p : cfg.value("radius_pairs",
                                   json::array({{0.0, 0.5},
                                                {0.5, 0.75},
                                                {0.9, 0.95},
                                                {0.9, 1.0}})))
        r_pairs.emplace_back(p[0].get<double>(), p[1].get<double>());

    for (const auto& [p, q] : pq_pairs)
        if (!(p > 0.0) || !(p < q)) {
            std::cerr << "mnlab hl-check: precondition violated: requires 0 < "
                         "p < q (got p="
                      << exp_str(p) << ", q=" << exp_str(q) << ")\n";
            return kExitUsage;
        }

    const auto corpus = corpus_from_config(cfg, seed, grids.degree);

    json resolved = cfg;
    resolved["seed"] = seed;
    resolved["refine"] = refine;
    resolved["grids"] = grids.to_json();
    CsvReport csv("hl-check", resolved,
                  {"row_type", "function", "p", "q", "r", "rho", "lhs",
                   "rhs_classical", "rhs_improved", "const_classical",
                   "const_improved"});

    struct Task {
        std::size_t fi, pqi, ri;
    };
    std::vector<Task> tasks;
    for (std::size_t fi = 0; fi < corpus.size(); ++fi)
        for (std::size_t pi = 0; pi < pq_pairs.size(); ++pi)
            for (std::size_t ri = 0; ri < r_pairs.size(); ++ri)
                tasks.push_back({fi, pi, ri});
    std::vector<HLReport> reports(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t t) {
        const auto& [fi, pi, ri] = tasks[t];
        reports[t] = hl_report(corpus[fi].f, pq_pairs[pi].first,
                               pq_pairs[pi].second, r_pairs[ri].first,
                               r_pairs[ri].second, grids.samples_per_arc);
    });

    std::map<std::pair<double, double>, double> max_c;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        const auto& [fi, pi, ri] = tasks[t];
        const HLReport& rep = reports[t];
        csv.add_row({"data", corpus[fi].id, exp_str(pq_pairs[pi].first),
                     exp_str(pq_pairs[pi].second),
                     format_double(r_pairs[ri].first),
                     format_double(r_pairs[ri].second), format_double(rep.lhs),
                     format_double(rep.rhs_classical),
                     format_double(rep.rhs_improved),
                     format_double(rep.const_classical),
                     format_double(rep.const_improved)});
        auto& c = max_c[pq_pairs[pi]];
        c = std::max(c, rep.const_improved);
    }
    double corpus_max = 0.0;
    for (const auto& [pq, c] : max_c) {
        csv.add_row({"summary", "max_improved_constant", exp_str(pq.first),
                     exp_str(pq.second), "", "", "", "", "", "",
                     format_double(c)});
        corpus_max = std::max(corpus_max, c);
    }
    csv.add_row({"summary", "corpus_max_improved_constant", "", "", "", "", "",
                 "", "", "", format_double(corpus_max)});
    if (!out_path.empty())
        csv.write(out_path);
    else
        std::cout << csv.render();

    if (cfg.contains("assert_max_constant") &&
        corpus_max > cfg["assert_max_constant"].get<double>()) {
        std::cerr << "mnlab hl-check: max improved constant " << corpus_max
                  << " exceeds the configured bound\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sharpness
// ---------------------------------------------------------------------------

int cmd_sharpness(const json& cfg, bool refine, std::uint64_t seed,
                  const std::string& out_path) {
    (void)seed;
    const Grids grids = Grids::from_json(cfg, refine);
    if (cfg.contains("p") && cfg["p"].get<double>() != 2.0) {
        std::cerr << "mnlab sharpness: precondition violated: the lacunary "
                     "sharpness experiment requires p == 2\n";
        return kExitUsage;
    }
    std::vector<double> qs;
    for (const auto& q : cfg.value("q_values", json::array({4.0, "inf"})))
        qs.push_back(json_exponent(q));
    for (double q : qs)
        if (!(q > 2.0)) {
            std::cerr << "mnlab sharpness: precondition violated: requires "
                         "q > 2\n";
            return kExitUsage;
        }
    const int doublings = cfg.value("n_doublings", 6);

    json resolved = cfg;
    resolved["refine"] = refine;
    resolved["grids"] = grids.to_json();
    CsvReport csv("sharpness", resolved,
                  {"row_type", "q", "N", "best_ratio", "best_k0", "cap_hit",
                   "slope", "target"});

    const std::size_t m = static_cast<std::size_t>(grids.sharpness_m_terms);
    const std::vector<cplx> unit(m, cplx{1.0});

    bool all_ok = true;
    for (double q : qs) {
        std::vector<double> logN, logR;
        for (int d = 1; d <= doublings; ++d) {
            const std::size_t N = std::size_t{1} << d;
            double best = 0.0;
            int best_k0 = -1;
            for (int k0 = 0; k0 <= grids.sharpness_k0_max; ++k0) {
                const PowerSeries f = lacunary_series(k0, m, unit);
                const double h2 = std::sqrt(static_cast<double>(m));
                const ArcMeanVector am =
                    arc_means(f, 1.0, 2.0, N, grids.sharpness_samples_per_arc);
                const double ratio = h2 / lq_norm(am, q);
                if (ratio > best) {
                    best = ratio;
                    best_k0 = k0;
                }
            }
            const bool cap_hit = best_k0 == grids.sharpness_k0_max;
            csv.add_row({"data", exp_str(q), std::to_string(N),
                         format_double(best), std::to_string(best_k0),
                         cap_hit ? "yes" : "no", "", ""});
            logN.push_back(std::log(static_cast<double>(N)));
            logR.push_back(std::log(best));
        }
        // least-squares slope
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(logN.size());
        for (std::size_t i = 0; i < logN.size(); ++i) {
            sx += logN[i];
            sy += logR[i];
            sxx += logN[i] * logN[i];
            sxy += logN[i] * logR[i];
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double target = 0.5 - (q == kInf ? 0.0 : 1.0 / q);
        csv.add_row({"summary", exp_str(q), "", "", "", "",
                     format_double(slope), format_double(target)});
        const double tol = cfg.value("assert_slope_tolerance", 0.0);
        if (tol > 0.0 && std::abs(slope - target) > tol) all_ok = false;
    }
    if (!out_path.empty())
        csv.write(out_path);
    else
        std::cout << csv.render();
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// weight-audit
// ---------------------------------------------------------------------------

int cmd_weight_audit(const json& cfg, bool refine, std::uint64_t seed,
                     const std::string& out_path) {
    (void)seed;
    const RadialWeight w = weight_from_config(cfg);
    const int depth = cfg.value("grid_depth", 80) * (refine ? 2 : 1);
    const WeightAudit audit = audit_weight(w, depth);

    json resolved = cfg;
    resolved["refine"] = refine;
    json rep = json_report_skeleton("weight-audit", resolved);
    rep["weight"] = w.describe();
    rep["dhat"] = {{"constant", audit.c_hat}, {"pass", audit.dhat_pass}};
    rep["dcheck"] = {{"K", audit.K},
                     {"constant", audit.c_check},
                     {"pass", audit.dcheck_pass}};
    rep["lemma_a"] = {{"alpha0", audit.alpha0},
                      {"c_alpha", audit.c_alpha},
                      {"lambda", audit.lambda},
                      {"c_lambda", audit.c_lambda}};
    if (audit.in_doubling_class()) {
        const auto grid = audit_grid(depth / 2);
        const Lemma32Check l32 = lemma_3_2_check(w, audit.K, grid);
        rep["lemma_3_2"] = {{"c1", l32.c1},
                            {"c2", l32.c2},
                            {"middle_ok", l32.middle_ok},
                            {"pass", l32.pass}};
    }
    rep["in_doubling_class"] = audit.in_doubling_class();

    const std::string text = rep.dump(2) + "\n";
    if (!out_path.empty())
        write_text_file(out_path, text);
    else
        std::cout << text;

    const bool expect_fail = cfg.value("expect_fail", false);
    if (audit.in_doubling_class() == expect_fail) return kExitCheckFailed;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// paraproduct
// ---------------------------------------------------------------------------

int cmd_paraproduct(const json& cfg, bool refine, std::uint64_t seed,
                    const std::string& out_path) {
    const Grids grids = Grids::from_json(cfg, refine);
    const RadialWeight w = weight_from_config(cfg);
    const ParaproductKind kind = kind_from_name(cfg.value("kind", "T"));
    const json& ej = cfg.at("exponents");
    const ExponentProfile profile(
        json_exponent(ej.at("p")), json_exponent(ej.at("q")),
        json_exponent(ej.at("s")), json_exponent(ej.at("t")));
    const PowerSeries g = symbol_from_config(cfg, grids.degree);

    const WeightAudit audit = audit_weight(w);
    const int K = audit.K > 0 ? audit.K : 2;

    const RhoResult rr =
        rho(g, profile, w, kind, grids.sup_grid_points, grids.radial_nodes);
    const DiscreteSeqResult disc =
        kind == ParaproductKind::T
            ? tg_discrete_seq(g, profile, w, K, grids.j_max)
            : sg_discrete_seq(g, profile, w, K, grids.j_max);
    const DegeneracyReport deg = degeneracy_check(profile, w, kind);

    FamilyCaps caps;
    caps.radial_nodes = grids.radial_nodes;
    caps.test_degree = grids.test_degree;
    caps.atom_j_max = std::min(grids.j_max, 4);
    caps.seed = seed;
    NormEstimate best;
    std::vector<std::string> fam_names =
        cfg.value("families", std::vector<std::string>{"monomials", "atoms"});
    for (const auto& fname : fam_names) {
        TestFamily fam;
        if (fname == "monomials") fam = TestFamily::Monomials;
        else if (fname == "atoms") fam = TestFamily::Atoms;
        else if (fname == "rademacher") fam = TestFamily::Rademacher;
        else if (fname == "kernel_ladder") fam = TestFamily::KernelLadder;
        else throw std::invalid_argument("unknown family: " + fname);
        const NormEstimate e =
            operator_norm_lower_bound(kind, g, profile, w, fam, caps);
        if (e.lower_bound > best.lower_bound) best = e;
    }

    json resolved = cfg;
    resolved["seed"] = seed;
    resolved["refine"] = refine;
    resolved["grids"] = grids.to_json();
    json rep = json_report_skeleton("paraproduct", resolved);
    rep["kind"] = kind_name(kind);
    rep["case"] = ExponentProfile::case_name(profile.case_tag());
    rep["K"] = K;
    rep["rho"] = {{"value", rr.value}, {"divergent", rr.divergent}};
    rep["discrete_norm"] = {{"value", disc.norm},
                            {"tail_flagged", disc.tail_flagged}};
    rep["operator_lower_bound"] = {{"value", best.lower_bound},
                                   {"witness", best.best_witness},
                                   {"family", best.family}};
    const char* verdict =
        deg.verdict == DegeneracyVerdict::Nondegenerate ? "nondegenerate"
        : deg.verdict == DegeneracyVerdict::OnlyConstants
            ? "only_constants_bounded"
            : "only_zero_bounded";
    rep["degeneracy"] = {{"verdict", verdict},
                         {"diagnostic", deg.diagnostic},
                         {"diagnostic_divergent", deg.diagnostic_divergent},
                         {"detail", deg.detail}};
    const auto safe_ratio = [](double a, double b) {
        return b > 0.0 ? a / b : (a > 0.0 ? kInf : 0.0);
    };
    rep["ratios"] = {
        {"rho_over_discrete", safe_ratio(rr.value, disc.norm)},
        {"rho_over_lower_bound", safe_ratio(rr.value, best.lower_bound)},
        {"discrete_over_lower_bound", safe_ratio(disc.norm, best.lower_bound)}};

    const std::string text = rep.dump(2) + "\n";
    if (!out_path.empty())
        write_text_file(out_path, text);
    else
        std::cout << text;
    return kExitOk;
}

// ---------------------------------------------------------------------------
// carleson
// ---------------------------------------------------------------------------

int cmd_carleson(const json& cfg, bool refine, std::uint64_t seed,
                 const std::string& out_path) {
    const Grids grids = Grids::from_json(cfg, refine);
    const RadialWeight w = weight_from_config(cfg);
    const json& ej = cfg.at("exponents");
    const ExponentProfile profile(
        json_exponent(ej.at("p")), json_exponent(ej.at("q")),
        json_exponent(ej.at("s")), json_exponent(ej.at("t")));
    const int n = cfg.value("derivative_order", 0);

    RadialWeight nu = RadialWeight::standard(0.0);
    if (cfg.contains("nu")) nu = weight_from_json_text(cfg["nu"].dump());

    MeasureSpec measure = MeasureSpec::lebesgue();
    if (cfg.contains("measure_file"))
        measure = MeasureSpec::from_json_text(
            read_text_file(cfg["measure_file"].get<std::string>()));
    else if (cfg.contains("measure"))
        measure = MeasureSpec::from_json_text(cfg["measure"].dump());

    const WeightAudit aw = audit_weight(w);
    const WeightAudit an = audit_weight(nu);
    const int K = std::max({aw.K > 0 ? aw.K : 2, an.K > 0 ? an.K : 2});

    std::vector<std::pair<std::string, PowerSeries>> gs;
    for (const auto& name :
         cfg.value("G", std::vector<std::string>{"const", "z", "geom"})) {
        json tmp;
        tmp["g"] = name;
        gs.emplace_back(name, symbol_from_config(tmp, grids.degree));
    }

    json resolved = cfg;
    resolved["seed"] = seed;
    resolved["refine"] = refine;
    resolved["grids"] = grids.to_json();
    CsvReport csv("carleson", resolved,
                  {"row_type", "G", "function", "continuous_ratio",
                   "discrete_norm", "cont_over_disc"});

    // test family for the continuous inf-C estimate
    auto family = build_corpus(seed, std::min<std::size_t>(grids.degree, 128));

    double lo = kInf, hi = 0.0;
    for (const auto& [gname, G] : gs) {
        double infc = 0.0;
        std::string best_f;
        for (const auto& e : family) {
            const double den =
                apq_norm(e.f, profile.p, profile.q, w, grids.radial_nodes);
            if (den == 0.0) continue;
            const double lhs = carleson_continuous_lhs(
                e.f, G, n, profile.s, profile.t, nu, grids.radial_nodes);
            const double ratio = lhs / den;
            csv.add_row({"data", gname, e.id, format_double(ratio), "", ""});
            if (ratio > infc) {
                infc = ratio;
                best_f = e.id;
            }
        }
        const DiscreteSeqResult disc =
            g_nu_discrete_seq(G, n, profile, w, nu, K, grids.j_max);
        const double rel = disc.norm > 0.0 ? infc / disc.norm
                                           : (infc > 0.0 ? kInf : 0.0);
        csv.add_row({"summary", gname, "max@" + best_f, format_double(infc),
                     format_double(disc.norm), format_double(rel)});
        if (disc.norm > 0.0 && infc > 0.0) {
            lo = std::min(lo, rel);
            hi = std::max(hi, rel);
        }
    }
    csv.add_row({"summary", "two_sided", "", "", "",
                 format_double(lo) + ";" + format_double(hi)});
    if (!out_path.empty())
        csv.write(out_path);
    else
        std::cout << csv.render();

    if (cfg.contains("assert_ratio_bracket")) {
        const double b = cfg["assert_ratio_bracket"].get<double>();
        if (!(lo >= 1.0 / b && hi <= b)) {
            std::cerr << "mnlab carleson: continuous/discrete ratios [" << lo
                      << ", " << hi << "] escape the bracket [1/" << b << ", "
                      << b << "]\n";
            return kExitCheckFailed;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-norm laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    bool refine = false;
    std::uint64_t seed = 1;
    bool seed_given = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "config file (JSON)");
        sub->add_flag("--refine", refine, "double every grid and re-emit");
        sub->add_option("--seed", seed, "random seed")
            ->each([&](const std::string&) { seed_given = true; });
        sub->add_option("--out", out_path, "output path (default: stdout)");
    };

    auto* hl = app.add_subcommand("hl-check", "improved Hardy-Littlewood sweep");
    auto* sharp = app.add_subcommand("sharpness", "lacunary sharpness slopes");
    auto* audit = app.add_subcommand("weight-audit", "doubling-class audit");
    auto* para = app.add_subcommand("paraproduct",
                                    "rho / discrete norm / operator bound");
    auto* carl = app.add_subcommand("carleson", "continuous vs discrete Carleson");
    for (auto* sub : {hl, sharp, audit, para, carl}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        json cfg = json::object();
        if (!config_path.empty())
            cfg = json::parse(read_text_file(config_path));
        if (!seed_given && cfg.contains("seed"))
            seed = cfg["seed"].get<std::uint64_t>();
        if (out_path.empty() && cfg.contains("out"))
            out_path = cfg["out"].get<std::string>();

        if (app.got_subcommand(hl)) return cmd_hl_check(cfg, refine, seed, out_path);
        if (app.got_subcommand(sharp))
            return cmd_sharpness(cfg, refine, seed, out_path);
        if (app.got_subcommand(audit))
            return cmd_weight_audit(cfg, refine, seed, out_path);
        if (app.got_subcommand(para))
            return cmd_paraproduct(cfg, refine, seed, out_path);
        if (app.got_subcommand(carl))
            return cmd_carleson(cfg, refine, seed, out_path);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "mnlab: config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mnlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "mnlab: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
