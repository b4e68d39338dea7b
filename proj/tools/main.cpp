#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "io.hpp"
#include "limitset/copulas.hpp"
#include "limitset/errors.hpp"
#include "limitset/limitset_smooth.hpp"
#include "limitset/margins.hpp"
#include "limitset/measures.hpp"
#include "limitset/resample.hpp"
#include "limitset/study.hpp"

using nlohmann::json;
using namespace limitset;
using limitset::cli::fmt;

namespace {

// ---- shared option bundles ----

struct Tuning {
    PipelineConfig config;

    void attach(CLI::App* sub) {
        sub->add_option("--k", config.k, "number of estimation angles (odd)")
            ->capture_default_str();
        sub->add_option("--m", config.m, "neighbourhood size per angle")
            ->capture_default_str();
        sub->add_option("--qu", config.q_u, "threshold quantile level")
            ->capture_default_str();
        sub->add_option("--q", config.q, "boundary quantile level")
            ->capture_default_str();
        sub->add_option("--kappa", config.kappa, "spline basis dimension (odd)")
            ->capture_default_str();
        sub->add_option("--eta-exceedances", config.eta_exceedances,
                        "exceedance count for the eta anchor")
            ->capture_default_str();
    }
};

const CLI::Validator open_unit(
    [](std::string& s) -> std::string {
        char* tail = nullptr;
        const double v = std::strtod(s.c_str(), &tail);
        if (tail != s.c_str() + s.size() || s.empty()) return "not a number";
        return (v > 0 && v < 1) ? "" : "must be strictly between 0 and 1";
    },
    "(0,1)");

const CLI::Validator half_open_unit(
    [](std::string& s) -> std::string {
        char* tail = nullptr;
        const double v = std::strtod(s.c_str(), &tail);
        if (tail != s.c_str() + s.size() || s.empty()) return "not a number";
        return (v >= 0 && v < 1) ? "" : "must be in [0,1)";
    },
    "[0,1)");

CopulaSpec make_spec(const std::string& family, double rho, double gamma,
                     double theta1, double theta2) {
    if (family == "gaussian") return CopulaSpec::gaussian(rho);
    if (family == "logistic") return CopulaSpec::logistic(gamma);
    if (family == "inverted-logistic") return CopulaSpec::inverted_logistic(gamma);
    return CopulaSpec::asymmetric_logistic(gamma, theta1, theta2);
}

// "family:param" or "asymmetric-logistic:gamma:theta1:theta2"
CopulaSpec parse_case(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t end = text.find(':', pos);
        parts.push_back(text.substr(pos, end == std::string::npos ? end : end - pos));
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    std::vector<double> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        char* tail = nullptr;
        const double v = std::strtod(parts[i].c_str(), &tail);
        if (parts[i].empty() || tail != parts[i].c_str() + parts[i].size())
            throw CLI::ValidationError("--case", "bad parameter in " + text);
        params.push_back(v);
    }
    try {
        const std::string& fam = parts[0];
        if (fam == "gaussian" || fam == "logistic" || fam == "inverted-logistic") {
            if (params.size() != 1)
                throw CLI::ValidationError("--case", fam + " takes one parameter");
            CopulaSpec spec = make_spec(fam, params[0], params[0], 0.5, 0.5);
            spec.validate();
            return spec;
        }
        if (fam == "asymmetric-logistic") {
            if (params.size() != 1 && params.size() != 3)
                throw CLI::ValidationError("--case",
                                           fam + " takes gamma or gamma:theta1:theta2");
            const double t1 = params.size() == 3 ? params[1] : 0.5;
            const double t2 = params.size() == 3 ? params[2] : 0.5;
            CopulaSpec spec = CopulaSpec::asymmetric_logistic(params[0], t1, t2);
            spec.validate();
            return spec;
        }
        throw CLI::ValidationError("--case", "unknown family " + parts[0]);
    } catch (const validation_error& e) {
        throw CLI::ValidationError("--case", e.what());
    }
}

std::vector<double> default_omega_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 99; ++i) g.push_back(i / 100.0);
    return g;
}

std::vector<double> default_delta_grid() {
    std::vector<double> g;
    for (int i = 1; i <= 100; ++i) g.push_back(i / 100.0);
    return g;
}

// tau is defined for delta in (0,1]; a parsed grid may start at 0
std::vector<double> clip_delta_grid(std::vector<double> grid) {
    const std::size_t before = grid.size();
    grid.erase(std::remove_if(grid.begin(), grid.end(),
                              [](double d) { return d <= 0; }),
               grid.end());
    if (grid.size() < before)
        std::cerr << "note: dropped " << before - grid.size()
                  << " nonpositive delta grid point(s)\n";
    return grid;
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// ---- JSON views ----

json tau_json(const TauCurve& t) {
    return json{{"delta", t.delta}, {"value", t.value}, {"estimable", t.estimable}};
}

json normal_tail_json(const std::optional<NormalTailFit>& f) {
    if (!f) return nullptr;
    return json{{"beta", f->beta}, {"mu", f->mu}, {"sigma", f->sigma}};
}

json summary_json(const DependenceSummary& s) {
    json j;
    j["eta"] = s.eta;
    j["alpha1"] = s.alpha1;
    j["alpha2"] = s.alpha2;
    j["beta1"] = normal_tail_json(s.beta1);
    j["beta2"] = normal_tail_json(s.beta2);
    j["lambda"] = json{{"omega", s.omega_grid}, {"value", s.lambda}};
    j["tau1"] = tau_json(s.tau1);
    j["tau2"] = tau_json(s.tau2);
    j["chi"] = s.chi ? json(*s.chi) : json(nullptr);
    return j;
}

json config_json(const PipelineConfig& c) {
    return json{{"k", c.k},
                {"m", c.m},
                {"q_u", c.q_u},
                {"q", c.q},
                {"kappa", c.kappa},
                {"eta_exceedances", c.eta_exceedances}};
}

json score_json(const ScalarScore& s) {
    return json{{"truth", s.truth}, {"bias", s.bias}, {"rmse", s.rmse}, {"count", s.count}};
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

// ---- subcommand bodies ----

struct SimulateOpts {
    std::string family;
    double rho = 0.5;
    double gamma = 0.5;
    double theta1 = 0.5;
    double theta2 = 0.5;
    std::size_t n = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out = "sample.csv";
};

void cmd_simulate(const SimulateOpts& o, const std::string& out_dir) {
    const CopulaSpec spec = make_spec(o.family, o.rho, o.gamma, o.theta1, o.theta2);
    std::uint64_t seed = o.seed;
    if (!o.seed_given) {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }
    const BivariateSample sample = sample_copula(spec, o.n, seed);
    const std::string path = limitset::cli::resolve_out(out_dir, o.out);
    limitset::cli::write_sample_csv(path, sample);
    std::cout << "seed: " << seed << "\n";
    std::cout << "wrote " << path << " (" << o.n << " rows, " << spec.name() << ")\n";
}

struct FitOpts {
    std::string in;
    bool header = false;
    std::string method = "smooth";
    std::string boundary = "boundary.csv";
    std::string report = "fit_report.json";
    bool per_degree = false;
    std::size_t bootstrap = 0;
    double block_mean = 16;
    std::uint64_t seed = 0;
    bool replicate_boundaries = false;
};

void cmd_fit(const FitOpts& o, const PipelineConfig& pc, const std::string& out_dir) {
    const RawSample raw = limitset::cli::read_two_column_csv(o.in, o.header);
    const BivariateSample sample = to_exponential_margins(raw);

    json report;
    report["input"] = o.in;
    report["n"] = raw.size();
    report["method"] = o.method;
    report["config"] = config_json(pc);

    const std::string bpath = limitset::cli::resolve_out(out_dir, o.boundary);
    if (o.method == "local") {
        const LocalStage local = estimate_local(sample, pc);
        limitset::cli::write_boundary_csv(bpath, local.g_hat.points);
        report["eta_h"] = local.eta_h;
        report["angle_range"] = json{local.w_min, local.w_max};
        json fits = json::array();
        for (const LocalFit& f : local.fits)
            fits.push_back(json{{"w", f.w},
                                {"u", f.u},
                                {"sigma", f.sigma},
                                {"xi", f.xi},
                                {"r_hat", f.r_hat}});
        report["local_fits"] = fits;
        std::cout << "wrote " << bpath << " (" << local.g_hat.points.size()
                  << " points)\n";
    } else {
        const EstimateDetail detail = estimate_detailed(sample, pc);
        const FitResult& fit = detail.fit;
        limitset::cli::write_boundary_csv(bpath, fit.g_hat.points);
        report["degree"] = fit.degree;
        report["eta_h"] = fit.eta_h;
        report["angle_range"] = json{fit.w_min, fit.w_max};
        json degrees = json::array();
        for (std::size_t d = 0; d < detail.surfaces.size(); ++d) {
            const SplineSurface& s = detail.surfaces[d];
            degrees.push_back(json{{"degree", d + 1},
                                   {"mae", fit.mae[d]},
                                   {"xi", s.xi},
                                   {"nll", s.nll},
                                   {"n_exceedances", s.n_exceedances},
                                   {"threshold_coef", s.threshold.coef},
                                   {"logscale_coef", s.logscale_coef}});
        }
        report["degrees"] = degrees;
        json fits = json::array();
        for (const LocalFit& f : fit.local_fits)
            fits.push_back(json{{"w", f.w},
                                {"u", f.u},
                                {"sigma", f.sigma},
                                {"xi", f.xi},
                                {"r_hat", f.r_hat}});
        report["local_fits"] = fits;
        if (o.per_degree) {
            for (std::size_t d = 0; d < fit.per_degree.size(); ++d) {
                const std::string path = limitset::cli::resolve_out(
                    out_dir, "boundary_degree" + std::to_string(d + 1) + ".csv");
                limitset::cli::write_boundary_csv(path, fit.per_degree[d].points);
                std::cout << "wrote " << path << "\n";
            }
        }
        std::cout << "wrote " << bpath << " (degree " << fit.degree << ", "
                  << fit.g_hat.points.size() << " points)\n";
    }

    if (o.bootstrap > 0) {
        BootstrapPlan plan;
        plan.n = raw.size();
        plan.block_mean = o.block_mean;
        plan.replicates = o.bootstrap;
        plan.seed = o.seed;
        plan.keep_boundaries = o.replicate_boundaries;
        SummaryConfig sc;
        sc.omega_grid = default_omega_grid();
        sc.delta_grid = default_delta_grid();
        const BootstrapResult bres = bootstrap_measures(raw, pc, sc, plan);
        json b;
        b["replicates"] = o.bootstrap;
        b["failures"] = bres.failures;
        b["block_mean"] = o.block_mean;
        b["seed"] = o.seed;
        b["eta"] = json{{"lower", bres.lower.eta}, {"upper", bres.upper.eta}};
        b["alpha1"] = json{{"lower", bres.lower.alpha1}, {"upper", bres.upper.alpha1}};
        b["alpha2"] = json{{"lower", bres.lower.alpha2}, {"upper", bres.upper.alpha2}};
        b["lambda"] = json{{"omega", sc.omega_grid},
                           {"lower", bres.lower.lambda},
                           {"upper", bres.upper.lambda}};
        b["tau1"] = json{{"lower", tau_json(bres.lower.tau1)},
                         {"upper", tau_json(bres.upper.tau1)}};
        b["tau2"] = json{{"lower", tau_json(bres.lower.tau2)},
                         {"upper", tau_json(bres.upper.tau2)}};
        report["bootstrap"] = b;
        if (o.replicate_boundaries) {
            for (std::size_t i = 0; i < bres.boundaries.size(); ++i) {
                char name[40];
                std::snprintf(name, sizeof(name), "boundary_rep_%03zu.csv", i);
                limitset::cli::write_boundary_csv(
                    limitset::cli::resolve_out(out_dir, name), bres.boundaries[i]);
            }
            std::cout << "wrote " << bres.boundaries.size()
                      << " replicate boundaries\n";
        }
        std::cout << "bootstrap: " << bres.failures << " of " << o.bootstrap
                  << " replicates failed\n";
    }

    const std::string rpath = limitset::cli::resolve_out(out_dir, o.report);
    write_json(rpath, report);
    std::cout << "wrote " << rpath << "\n";
}

struct MeasuresOpts {
    std::string boundary;
    std::string sample;
    bool header = false;
    std::string baselines = "none";
    std::string omega;
    std::string delta;
    double beta_threshold = 0.9;
    std::string report = "measures.json";
    std::string lambda_csv = "lambda.csv";
    std::string tau1_csv = "tau1.csv";
    std::string tau2_csv = "tau2.csv";
};

void cmd_measures(const MeasuresOpts& o, const std::string& out_dir) {
    const BoundaryPoints boundary = limitset::cli::read_boundary_csv(o.boundary);
    const std::vector<double> og =
        o.omega.empty() ? default_omega_grid() : limitset::cli::parse_grid(o.omega);
    const std::vector<double> dg =
        o.delta.empty() ? default_delta_grid()
                        : clip_delta_grid(limitset::cli::parse_grid(o.delta));

    std::optional<BivariateSample> sample;
    if (!o.sample.empty())
        sample = to_exponential_margins(
            limitset::cli::read_two_column_csv(o.sample, o.header));
    if (o.baselines == "all" && !sample)
        throw CLI::ValidationError("--baselines", "baselines need --sample");

    DependenceSummary s;
    if (sample) {
        SummaryConfig sc;
        sc.omega_grid = og;
        sc.delta_grid = dg;
        sc.beta_threshold_q = o.beta_threshold;
        s = summarize(*sample, boundary, sc);
    } else {
        s.eta = eta_from_boundary(boundary);
        alpha_from_boundary(boundary, s.alpha1, s.alpha2);
        s.omega_grid = og;
        s.lambda = lambda_from_boundary(boundary, og);
        s.tau1 = tau_from_boundary(boundary, dg, 1);
        s.tau2 = tau_from_boundary(boundary, dg, 2);
    }

    json report;
    report["boundary"] = o.boundary;
    report["measures"] = summary_json(s);

    std::vector<double> hl;
    TauCurve ht1, ht2;
    if (o.baselines == "all") {
        const double he = hill_eta(*sample);
        const auto pe = peng_eta(*sample);
        const auto de = draisma_eta(*sample);
        hl = hill_lambda(*sample, og);
        ht1 = hill_tau(*sample, dg, 1);
        ht2 = hill_tau(*sample, dg, 2);
        report["baselines"] = json{{"hill_eta", he},
                                   {"peng_eta", pe ? json(*pe) : json(nullptr)},
                                   {"draisma_eta", de ? json(*de) : json(nullptr)},
                                   {"hill_lambda", hl},
                                   {"hill_tau1", tau_json(ht1)},
                                   {"hill_tau2", tau_json(ht2)}};
    }

    const std::string lpath = limitset::cli::resolve_out(out_dir, o.lambda_csv);
    {
        std::ofstream out(lpath);
        if (!out) throw validation_error("cannot write " + lpath);
        out << (hl.empty() ? "omega,lambda\n" : "omega,lambda,hill_lambda\n");
        for (std::size_t i = 0; i < og.size(); ++i) {
            out << fmt(og[i]) << ',' << fmt(s.lambda[i]);
            if (!hl.empty()) out << ',' << fmt(hl[i]);
            out << '\n';
        }
    }
    auto write_tau = [&](const std::string& rel, const TauCurve& t, const TauCurve& h) {
        const std::string path = limitset::cli::resolve_out(out_dir, rel);
        std::ofstream out(path);
        if (!out) throw validation_error("cannot write " + path);
        out << (h.delta.empty() ? "delta,value,estimable\n"
                                : "delta,value,estimable,hill_value,hill_estimable\n");
        for (std::size_t i = 0; i < t.delta.size(); ++i) {
            out << fmt(t.delta[i]) << ',' << fmt(t.value[i]) << ','
                << (t.estimable[i] ? 1 : 0);
            if (!h.delta.empty())
                out << ',' << fmt(h.value[i]) << ',' << (h.estimable[i] ? 1 : 0);
            out << '\n';
        }
        std::cout << "wrote " << path << "\n";
    };
    std::cout << "wrote " << lpath << "\n";
    write_tau(o.tau1_csv, s.tau1, ht1);
    write_tau(o.tau2_csv, s.tau2, ht2);

    const std::string rpath = limitset::cli::resolve_out(out_dir, o.report);
    write_json(rpath, report);
    std::cout << "wrote " << rpath << "\n";
    std::cout << "eta: " << fmt(s.eta) << "  alpha1: " << fmt(s.alpha1)
              << "  alpha2: " << fmt(s.alpha2) << "\n";
}

struct StudyOpts {
    std::vector<std::string> cases;
    std::size_t replicates = 100;
    std::size_t n = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
    bool no_baselines = false;
    std::string omega;
    std::string delta;
    std::string records = "records.csv";
    std::string estimates = "estimates.csv";
    std::string selection = "selection.csv";
    std::string monotonicity = "monotonicity.csv";
    std::string report = "study.json";
};

void write_records_csv(const std::string& path, const StudyResult& res) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << "case_index,label,replicate,failed,degree,eta_g,eta_h,eta_p,eta_d,"
           "alpha1,alpha2,beta1,beta2,tau_g1_monotone,tau_h1_monotone,"
           "violation_count,error\n";
    for (const StudyRecord& r : res.records) {
        out << r.case_index << ',' << res.config.cases[r.case_index].name() << ','
            << r.replicate << ',' << (r.failed ? 1 : 0) << ',';
        if (r.failed) {
            out << ",,,,,,,,,,," << csv_quote(r.error) << '\n';
            continue;
        }
        out << r.degree << ',' << fmt(r.eta_g) << ',' << fmt(r.eta_h) << ','
            << (r.eta_p ? fmt(*r.eta_p) : "") << ',' << (r.eta_d ? fmt(*r.eta_d) : "")
            << ',' << fmt(r.alpha1) << ',' << fmt(r.alpha2) << ','
            << (r.beta1 ? fmt(*r.beta1) : "") << ',' << (r.beta2 ? fmt(*r.beta2) : "")
            << ',' << (r.tau_g1_monotone ? 1 : 0) << ','
            << (r.tau_h1.delta.empty() ? "" : (r.tau_h1_monotone ? "1" : "0")) << ','
            << r.violations.size() << ",\n";
    }
}

void write_estimates_csv(const std::string& path, const StudyResult& res) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << "case_index,label,estimator,measure,truth,bias,rmse,count,failures\n";
    for (const CaseAggregate& a : res.aggregates) {
        auto row = [&](const char* est, const char* meas, const ScalarScore& s) {
            out << a.case_index << ',' << a.label << ',' << est << ',' << meas << ','
                << fmt(s.truth) << ',' << fmt(s.bias) << ',' << fmt(s.rmse) << ','
                << s.count << ',' << a.failures << '\n';
        };
        row("boundary", "eta", a.eta_g);
        row("hill", "eta", a.eta_h);
        row("peng", "eta", a.eta_p);
        row("draisma", "eta", a.eta_d);
        row("boundary", "alpha1", a.alpha1);
    }
}

void write_selection_csv(const std::string& path, const StudyResult& res) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << "case_index,label,degree,count\n";
    for (const CaseAggregate& a : res.aggregates)
        for (std::size_t d = 0; d < 3; ++d)
            out << a.case_index << ',' << a.label << ',' << d + 1 << ','
                << a.degree_counts[d] << '\n';
}

void write_monotonicity_csv(const std::string& path, const StudyResult& res) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write " + path);
    out << "case_index,label,estimator,monotone_rate\n";
    for (const CaseAggregate& a : res.aggregates) {
        out << a.case_index << ',' << a.label << ",boundary,"
            << fmt(a.tau_g1_monotone_rate) << '\n';
        out << a.case_index << ',' << a.label << ",hill,"
            << fmt(a.tau_h1_monotone_rate) << '\n';
    }
}

void cmd_study(const StudyOpts& o, const PipelineConfig& pc, const std::string& out_dir) {
    StudyConfig cfg;
    for (const std::string& text : o.cases) cfg.cases.push_back(parse_case(text));
    cfg.replicates = o.replicates;
    cfg.n = o.n;
    cfg.pipeline = pc;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    cfg.with_baselines = !o.no_baselines;
    if (!o.omega.empty()) cfg.omega_grid = limitset::cli::parse_grid(o.omega);
    if (!o.delta.empty())
        cfg.delta_grid = clip_delta_grid(limitset::cli::parse_grid(o.delta));

    const StudyResult res = run_study(cfg);

    for (const StudyRecord& r : res.records)
        if (r.failed)
            std::cerr << "case " << r.case_index << " replicate " << r.replicate
                      << " failed: " << r.error << "\n";

    write_records_csv(limitset::cli::resolve_out(out_dir, o.records), res);
    write_estimates_csv(limitset::cli::resolve_out(out_dir, o.estimates), res);
    write_selection_csv(limitset::cli::resolve_out(out_dir, o.selection), res);
    write_monotonicity_csv(limitset::cli::resolve_out(out_dir, o.monotonicity), res);

    json report;
    json cases = json::array();
    for (const CopulaSpec& spec : res.config.cases)
        cases.push_back(json{{"family", spec.name()},
                             {"rho", spec.rho},
                             {"gamma", spec.gamma},
                             {"theta1", spec.theta1},
                             {"theta2", spec.theta2}});
    report["config"] = json{{"cases", cases},
                            {"replicates", res.config.replicates},
                            {"n", res.config.n},
                            {"seed", res.config.seed},
                            {"threads", res.config.threads},
                            {"with_baselines", res.config.with_baselines},
                            {"pipeline", config_json(res.config.pipeline)},
                            {"omega_grid_size", res.config.omega_grid.size()},
                            {"delta_grid_size", res.config.delta_grid.size()}};
    json aggs = json::array();
    for (const CaseAggregate& a : res.aggregates) {
        aggs.push_back(json{{"case_index", a.case_index},
                            {"label", a.label},
                            {"failures", a.failures},
                            {"degree_counts", a.degree_counts},
                            {"eta_boundary", score_json(a.eta_g)},
                            {"eta_hill", score_json(a.eta_h)},
                            {"eta_peng", score_json(a.eta_p)},
                            {"eta_draisma", score_json(a.eta_d)},
                            {"alpha1_boundary", score_json(a.alpha1)},
                            {"tau1_monotone_rate_boundary", a.tau_g1_monotone_rate},
                            {"tau1_monotone_rate_hill", a.tau_h1_monotone_rate},
                            {"replicates_with_violations", a.violation_count}});
    }
    report["aggregates"] = aggs;
    const std::string rpath = limitset::cli::resolve_out(out_dir, o.report);
    write_json(rpath, report);

    if (o.replicates == 0)
        std::cerr << "warning: zero replicates requested; tables are empty\n";
    for (const CaseAggregate& a : res.aggregates)
        std::cout << "case " << a.case_index << " " << a.label << ": failures="
                  << a.failures << " violations=" << a.violation_count
                  << " eta_rmse=" << fmt(a.eta_g.rmse) << "\n";
    std::cout << "wrote " << rpath << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limit-set boundary estimation for bivariate extremes"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read option defaults from an INI/TOML file");

    std::string out_dir = ".";
    app.add_option("--out-dir", out_dir, "directory for output files")
        ->envname("LIMITSET_OUT_DIR")
        ->capture_default_str();

    // ---- simulate ----
    SimulateOpts so;
    CLI::App* sim = app.add_subcommand("simulate", "draw a sample from a copula model");
    sim->fallthrough();
    sim->add_option("--family", so.family, "gaussian|logistic|inverted-logistic|asymmetric-logistic")
        ->required()
        ->check(CLI::IsMember({"gaussian", "logistic", "inverted-logistic",
                               "asymmetric-logistic"}));
    sim->add_option("--rho", so.rho, "gaussian correlation")->check(half_open_unit)
        ->capture_default_str();
    sim->add_option("--gamma", so.gamma, "logistic dependence")->check(open_unit)
        ->capture_default_str();
    sim->add_option("--theta1", so.theta1, "asymmetric logistic mass on margin 1")
        ->check(open_unit)->capture_default_str();
    sim->add_option("--theta2", so.theta2, "asymmetric logistic mass on margin 2")
        ->check(open_unit)->capture_default_str();
    sim->add_option("--n", so.n, "sample size")->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::Option* sim_seed = sim->add_option("--seed", so.seed, "RNG seed (random when absent)");
    sim->add_option("--out", so.out, "output CSV path")->capture_default_str();
    sim->callback([&] {
        so.seed_given = sim_seed->count() > 0;
        cmd_simulate(so, out_dir);
    });

    // ---- fit ----
    FitOpts fo;
    Tuning fit_tuning;
    CLI::App* fit = app.add_subcommand("fit", "estimate the limit-set boundary from data");
    fit->fallthrough();
    fit->add_option("--in", fo.in, "input CSV with two numeric columns")->required();
    fit->add_flag("--header", fo.header, "skip the first input line");
    fit->add_option("--method", fo.method, "smooth (default) or local")
        ->check(CLI::IsMember({"smooth", "local"}))->capture_default_str();
    fit_tuning.attach(fit);
    fit->add_option("--boundary", fo.boundary, "boundary CSV output")->capture_default_str();
    fit->add_option("--report", fo.report, "JSON report output")->capture_default_str();
    fit->add_flag("--per-degree", fo.per_degree, "also write one boundary CSV per degree");
    fit->add_option("--bootstrap", fo.bootstrap,
                    "stationary bootstrap replicates for percentile intervals");
    fit->add_option("--block-mean", fo.block_mean, "mean bootstrap block length")
        ->check(CLI::PositiveNumber)->capture_default_str();
    fit->add_option("--seed", fo.seed, "bootstrap seed")->capture_default_str();
    fit->add_flag("--replicate-boundaries", fo.replicate_boundaries,
                  "write each bootstrap boundary CSV");
    fit->callback([&] {
        if (fo.method == "local" && fo.bootstrap > 0)
            throw CLI::ValidationError("--bootstrap", "needs the smooth method");
        cmd_fit(fo, fit_tuning.config, out_dir);
    });

    // ---- measures ----
    MeasuresOpts mo;
    CLI::App* meas = app.add_subcommand(
        "measures", "dependence measures from a boundary CSV (plus optional sample)");
    meas->fallthrough();
    meas->add_option("--boundary", mo.boundary, "boundary CSV (w, x1, x2)")->required();
    meas->add_option("--sample", mo.sample,
                     "sample CSV for the spread exponents and baselines");
    meas->add_flag("--header", mo.header, "skip the first sample line");
    meas->add_option("--baselines", mo.baselines, "none or all")
        ->check(CLI::IsMember({"none", "all"}))->capture_default_str();
    meas->add_option("--omega-grid", mo.omega, "start:end:step for lambda")
        ->capture_default_str();
    meas->add_option("--delta-grid", mo.delta, "start:end:step for tau")
        ->capture_default_str();
    meas->add_option("--beta-threshold", mo.beta_threshold,
                     "conditioning quantile for the spread exponent")
        ->check(open_unit)->capture_default_str();
    meas->add_option("--report", mo.report, "JSON report output")->capture_default_str();
    meas->add_option("--lambda-csv", mo.lambda_csv, "lambda grid CSV")->capture_default_str();
    meas->add_option("--tau1-csv", mo.tau1_csv, "tau1 grid CSV")->capture_default_str();
    meas->add_option("--tau2-csv", mo.tau2_csv, "tau2 grid CSV")->capture_default_str();
    meas->callback([&] { cmd_measures(mo, out_dir); });

    // ---- study ----
    StudyOpts sto;
    Tuning study_tuning;
    CLI::App* study = app.add_subcommand("study", "replication study over copula cases");
    study->fallthrough();
    study->add_option("--case", sto.cases,
                      "family:param (repeatable), e.g. logistic:0.5 or "
                      "asymmetric-logistic:0.5:0.3:0.7")
        ->required();
    study->add_option("--replicates", sto.replicates, "replicates per case")
        ->capture_default_str();
    study->add_option("--n", sto.n, "sample size per replicate")
        ->check(CLI::PositiveNumber)->capture_default_str();
    study->add_option("--seed", sto.seed, "root seed")->capture_default_str();
    study->add_option("--threads", sto.threads, "worker count")
        ->check(CLI::PositiveNumber)->capture_default_str();
    study_tuning.attach(study);
    study->add_flag("--no-baselines", sto.no_baselines, "skip the rank-based baselines");
    study->add_option("--omega-grid", sto.omega, "start:end:step for lambda")
        ->capture_default_str();
    study->add_option("--delta-grid", sto.delta, "start:end:step for tau")
        ->capture_default_str();
    study->add_option("--records", sto.records, "per-replicate CSV")->capture_default_str();
    study->add_option("--estimates", sto.estimates, "bias/RMSE CSV")->capture_default_str();
    study->add_option("--selection", sto.selection, "degree-count CSV")->capture_default_str();
    study->add_option("--monotonicity", sto.monotonicity, "monotone-rate CSV")
        ->capture_default_str();
    study->add_option("--report", sto.report, "summary JSON")->capture_default_str();
    study->callback([&] { cmd_study(sto, study_tuning.config, out_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
