#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pbias/pbias.hpp"

namespace pbias::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "pbias/1";
constexpr double kOracleTolerance = 1e-9;

class UsageError : public Error {
public:
    using Error::Error;
};

// Shortest text that reads back to the same double.
std::string fmt(double v) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, result.ptr);
}

std::string fmt(const std::optional<double>& v) {
    return v ? fmt(*v) : std::string();
}

Json opt_json(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

double parse_number(const std::string& text) {
    const char* begin = text.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE || std::isnan(v)) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

// Rounds to 12 significant digits so grid points print as typed (0.3, not 0.30000000000000004).
double tidy(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string::npos; start = pos + 1) {
        parts.push_back(text.substr(start, pos - start));
    }
    parts.push_back(text.substr(start));
    if (parts.size() != 3) {
        throw UsageError("range must look like start:stop:step, got '" + text + "'");
    }
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double step = parse_number(parts[2]);
    if (!(step > 0.0) || !(b >= a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw UsageError("range needs finite start <= stop and step > 0, got '" + text + "'");
    }
    const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    if (count > 1000000) {
        throw UsageError("range '" + text + "' has too many points");
    }
    std::vector<double> out;
    for (long k = 0; k < count; ++k) {
        out.push_back(tidy(a + static_cast<double>(k) * step));
    }
    return out;
}

std::pair<int, int> parse_int_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw UsageError("range must look like lo:hi, got '" + text + "'");
    }
    const double lo = parse_number(text.substr(0, colon));
    const double hi = parse_number(text.substr(colon + 1));
    if (lo != std::floor(lo) || hi != std::floor(hi) || lo > hi || std::fabs(lo) > 1e6 || std::fabs(hi) > 1e6) {
        throw UsageError("integer range needs lo <= hi, got '" + text + "'");
    }
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::vector<double> parse_list(const std::vector<std::string>& items) {
    std::vector<double> out;
    for (const auto& s : items) {
        out.push_back(parse_number(s));
    }
    return out;
}

std::vector<double> sorted_unique(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<RhoForm> parse_forms(const std::vector<std::string>& items) {
    std::vector<RhoForm> forms;
    for (const auto& s : items) {
        if (s == "all") {
            forms.insert(forms.end(), kAllRhoForms.begin(), kAllRhoForms.end());
        } else {
            forms.push_back(parse_rho_form(s));
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

void check_probability(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw UsageError(std::string(what) + " must lie in (0,1), got " + fmt(p));
    }
}

struct MeasureArgs {
    std::optional<double> p;
    std::vector<double> biases;
    std::string measure_file;

    void add_to(CLI::App* app) {
        auto* p_opt = app->add_option("--p", p, "uniform bias P(x_i = +1)");
        auto* b_opt = app->add_option("--biases", biases, "comma-separated per-coordinate biases")->delimiter(',');
        auto* m_opt = app->add_option("--measure", measure_file, "measure JSON file ({\"p\": ...} or {\"biases\": [...]})");
        p_opt->excludes(b_opt)->excludes(m_opt);
        b_opt->excludes(m_opt);
    }

    // Defaults to the uniform measure at p = 1/2.
    ProductMeasure resolve(int n) const {
        if (!measure_file.empty()) {
            return io::read_measure_file(measure_file, n);
        }
        if (!biases.empty()) {
            check_same_dimension(n, static_cast<int>(biases.size()));
            for (double b : biases) {
                check_probability(b, "bias");
            }
            return ProductMeasure(biases);
        }
        const double q = p.value_or(0.5);
        check_probability(q, "--p");
        return ProductMeasure::uniform(n, q);
    }
};

Json measure_json(const ProductMeasure& mu) {
    Json j = Json::object();
    if (const auto u = mu.uniform_bias()) {
        j["p"] = *u;
    } else {
        j["biases"] = std::vector<double>(mu.biases().begin(), mu.biases().end());
    }
    return j;
}

Json kkl_json(const KklReport& r) {
    Json j = Json::object();
    j["n"] = r.n;
    j["p"] = r.p;
    j["form"] = std::string(to_string(r.form));
    j["l1_influences"] = r.l1_influences;
    j["l2_influences"] = r.l2_influences;
    j["variance"] = r.variance;
    j["m_stat"] = opt_json(r.m_stat);
    j["ratio_stat"] = opt_json(r.ratio_stat);
    j["argmax_coordinate"] = r.argmax_coordinate ? Json(*r.argmax_coordinate) : Json(nullptr);
    j["c0"] = r.c0;
    j["c0_argmax_alpha"] = opt_json(r.c0_argmax_alpha);
    j["c0_at_boundary"] = !r.c0_argmax_alpha.has_value();
    j["eq1_rhs"] = opt_json(r.eq1_rhs);
    j["dominance_flag"] = r.dominance_flag ? Json(*r.dominance_flag) : Json(nullptr);
    return j;
}

Json header(const char* command) {
    Json j = Json::object();
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

void emit(std::ostream& out, const Json& j) {
    out << j.dump(2) << '\n';
}

// analyze

struct AnalyzeArgs {
    std::string input;
    MeasureArgs measure;
    std::string form = "iii";
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const RhoForm form = parse_rho_form(a.form);
    const BooleanFunction f = io::read_function_file(a.input);
    const ProductMeasure mu = a.measure.resolve(f.n());
    const FourierExpansion e = transform(f, mu);

    Json j = header("analyze");
    j["n"] = f.n();
    j["measure"] = measure_json(mu);
    std::vector<double> l1, l2;
    for (int i = 1; i <= f.n(); ++i) {
        l1.push_back(lq_influence(f, mu, i, 1.0));
        l2.push_back(lq_influence(f, mu, i, 2.0));
    }
    j["influences"] = Json{{"l1", l1}, {"l2", l2}};
    j["variance"] = variance(f, mu);
    Json spectrum = Json::array();
    for (SubsetMask s = 0; s < e.coeffs().size(); ++s) {
        spectrum.push_back(Json{{"mask", s}, {"coeff", e[s]}});
    }
    j["spectrum"] = std::move(spectrum);
    j["parseval_residual"] = parseval_residual(e, f);
    if (const auto p = mu.uniform_bias()) {
        j["kkl"] = kkl_json(kkl_report(f, *p, form));
    } else {
        j["kkl"] = nullptr;
    }
    emit(out, j);
    return kOk;
}

// verify-hc

struct VerifyArgs {
    int n_max = 8;
    int trials = 200;
    std::uint64_t seed = 1;
    std::vector<std::string> forms{"i", "ii", "iii"};
    std::vector<std::string> q_grid{"2", "2.5", "3", "4", "8", "inf"};
    std::string single_q;
    std::vector<std::string> p_grid{"0.1", "0.25", "0.5"};
    double tolerance = 1e-9;
    bool corollary = false;
    std::vector<std::string> delta_grid{"0.2", "0.5", "0.9", "1"};
};

constexpr RandomDistribution kTrialDistributions[] = {RandomDistribution::Gaussian, RandomDistribution::Sign,
                                                      RandomDistribution::Uniform};

// Trial t uses seed s = seed + t; t = 0 is the constant 1 on one coordinate
// (an equality case), otherwise make_random(1 + t mod n_max, s, dist[s mod 3]).
BooleanFunction trial_function(int t, std::uint64_t s, int n_max) {
    if (t == 0) {
        return BooleanFunction::constant(1, 1.0);
    }
    return make_random(1 + t % n_max, s, kTrialDistributions[s % 3]);
}

struct SweepCell {
    double min_margin = kInfinity;
    std::uint64_t argmin_seed = 0;
    int argmin_n = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n_max < 1) {
        throw UsageError("--n must be >= 1");
    }
    BooleanFunction::check_coordinate_count(a.n_max);
    if (a.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }
    const std::vector<RhoForm> forms = parse_forms(a.forms);
    const std::vector<double> ps = sorted_unique(parse_list(a.p_grid));
    for (double p : ps) {
        check_probability(p, "--p-grid entry");
    }
    std::vector<double> params;
    if (a.corollary) {
        params = sorted_unique(parse_list(a.delta_grid));
        for (double d : params) {
            if (!(d > 0.0 && d <= 1.0)) {
                throw UsageError("--delta-grid entries must lie in (0,1], got " + fmt(d));
            }
        }
    } else {
        params = sorted_unique(parse_list(a.single_q.empty() ? a.q_grid : std::vector<std::string>{a.single_q}));
        for (double q : params) {
            if (!(q >= 2.0)) {
                throw UsageError("q must be >= 2, got " + fmt(q));
            }
        }
    }

    std::vector<BooleanFunction> fs;
    fs.reserve(static_cast<std::size_t>(a.trials));
    for (int t = 0; t < a.trials; ++t) {
        fs.push_back(trial_function(t, a.seed + static_cast<std::uint64_t>(t), a.n_max));
    }

    out << "form," << (a.corollary ? "delta" : "q") << ",p,min_margin,argmin_seed\n";
    bool violated = false;
    for (RhoForm form : forms) {
        for (double param : params) {
            for (double p : ps) {
                SweepCell cell;
                for (int t = 0; t < a.trials; ++t) {
                    const BooleanFunction& f = fs[static_cast<std::size_t>(t)];
                    const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
                    const double m = a.corollary ? check_corollary(f, mu, param, form) : check_theorem2(f, mu, param, form);
                    if (m < cell.min_margin) {
                        cell = {m, a.seed + static_cast<std::uint64_t>(t), f.n()};
                    }
                }
                out << to_string(form) << ',' << fmt(param) << ',' << fmt(p) << ',' << fmt(cell.min_margin) << ','
                    << cell.argmin_seed << '\n';
                if (cell.min_margin < -a.tolerance) {
                    violated = true;
                    err << "violation: form=" << to_string(form) << (a.corollary ? " delta=" : " q=") << fmt(param)
                        << " p=" << fmt(p) << " seed=" << cell.argmin_seed << " n=" << cell.argmin_n
                        << " margin=" << fmt(cell.min_margin) << " tolerance=" << fmt(a.tolerance) << '\n';
                }
            }
        }
    }
    return violated ? kViolation : kOk;
}

// kkl, c0

struct KklArgs {
    std::string input;
    double p = 0.5;
    std::string form = "iii";
};

int cmd_kkl(const KklArgs& a, std::ostream& out) {
    check_probability(a.p, "--p");
    const RhoForm form = parse_rho_form(a.form);
    const BooleanFunction f = io::read_function_file(a.input);
    Json j = header("kkl");
    j.update(kkl_json(kkl_report(f, a.p, form)));
    emit(out, j);
    return kOk;
}

struct C0Args {
    std::string form = "iii";
    std::optional<double> p;
    std::optional<double> lambda;
    double alpha_max = kDefaultAlphaMax;
};

int cmd_c0(const C0Args& a, std::ostream& out) {
    const RhoForm form = parse_rho_form(a.form);
    double lambda = 0.5;
    if (a.p) {
        check_probability(*a.p, "--p");
        lambda = lambda_of(*a.p);
    } else if (a.lambda) {
        if (!(*a.lambda > 0.0 && *a.lambda <= 0.5)) {
            throw UsageError("--lambda must lie in (0, 1/2], got " + fmt(*a.lambda));
        }
        lambda = *a.lambda;
    }
    const C0Result r = c0_constant(form, lambda, a.alpha_max);
    Json j = header("c0");
    j["form"] = std::string(to_string(form));
    j["lambda"] = lambda;
    j["alpha_max"] = a.alpha_max;
    j["c0"] = r.c0;
    j["argmax_alpha"] = opt_json(r.argmax_alpha);
    j["at_boundary"] = !r.argmax_alpha.has_value();
    emit(out, j);
    return kOk;
}

// russo

struct RussoArgs {
    std::string input;
    std::string p_grid = "0.05:0.95:0.05";
};

int cmd_russo(const RussoArgs& a, std::ostream& out) {
    const std::vector<double> ps = parse_range(a.p_grid);
    for (double p : ps) {
        check_probability(p, "--p-grid entry");
    }
    const BooleanFunction f = io::read_function_file(a.input);
    out << "p,mean,derivative,l1_sum,weak_mono,weak_sym\n";
    for (double p : ps) {
        const ProductMeasure mu = ProductMeasure::uniform(f.n(), p);
        double l1_sum = 0.0;
        for (int i = 1; i <= f.n(); ++i) {
            l1_sum += lq_influence(f, mu, i, 1.0);
        }
        out << fmt(p) << ',' << fmt(expectation(f, mu)) << ',' << fmt(russo_derivative(f, p)) << ',' << fmt(l1_sum)
            << ',' << fmt(weak_mono_ratio(f, p)) << ',' << fmt(weak_sym_ratio(f, p)) << '\n';
    }
    return kOk;
}

// tribes

struct TribesArgs {
    std::string m_range = "2:40";
    int k = 0;
};

int cmd_tribes(const TribesArgs& a, std::ostream& out) {
    const auto [lo, hi] = parse_int_range(a.m_range);
    std::vector<TribesRatio> rows;
    for (int m = lo; m <= hi; ++m) {
        rows.push_back(tribes_ratio(m, a.k));
    }
    out << "m,n,influence,variance,finite_ratio,corrected_ratio,limit\n";
    for (int m = lo; m <= hi; ++m) {
        const TribesRatio& r = rows[static_cast<std::size_t>(m - lo)];
        out << m << ',' << fmt(r.n) << ',' << fmt(r.influence) << ',' << fmt(r.variance) << ',' << fmt(r.finite_m_ratio)
            << ',' << fmt(r.corrected_ratio) << ',' << fmt(r.limit) << '\n';
    }
    return kOk;
}

// rho

struct RhoArgs {
    std::vector<std::string> q_grid{"2", "2.5", "3", "4", "8", "inf"};
    std::vector<std::string> lambda_grid{"0.05", "0.1", "0.25", "0.5"};
};

int cmd_rho(const RhoArgs& a, std::ostream& out) {
    const std::vector<double> qs = parse_list(a.q_grid);
    const std::vector<double> lambdas = parse_list(a.lambda_grid);
    for (double q : qs) {
        if (!(q >= 2.0)) {
            throw UsageError("q must be >= 2, got " + fmt(q));
        }
    }
    for (double l : lambdas) {
        if (!(l > 0.0 && l <= 0.5)) {
            throw UsageError("lambda must lie in (0, 1/2], got " + fmt(l));
        }
    }
    out << "q,lambda,rho_i,rho_ii,rho_iii\n";
    for (const RhoComparisonRow& r : rho_comparison(qs, lambdas)) {
        out << fmt(r.q) << ',' << fmt(r.lambda) << ',' << fmt(r.rho[0]) << ',' << fmt(r.rho[1]) << ',' << fmt(r.rho[2])
            << '\n';
    }
    return kOk;
}

// oracle-diff

struct OracleArgs {
    std::string input;
    MeasureArgs measure;
};

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::fabs(a[k] - b[k]));
    }
    return m;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    const BooleanFunction f = io::read_function_file(a.input);
    const ProductMeasure mu = a.measure.resolve(f.n());
    const double transform_diff = max_abs_diff(transform(f, mu).coeffs(), oracle::naive_transform(f, mu).coeffs());
    double l1_diff = 0.0;
    double l2_diff = 0.0;
    for (int i = 1; i <= f.n(); ++i) {
        l1_diff = std::max(l1_diff, std::fabs(lq_influence(f, mu, i, 1.0) - oracle::naive_influence(f, mu, i, 1.0)));
        l2_diff = std::max(l2_diff, std::fabs(lq_influence(f, mu, i, 2.0) - oracle::naive_influence(f, mu, i, 2.0)));
    }
    std::optional<double> pivotal_diff;
    if (f.is_boolean() && mu.uniform_bias() == 0.5) {
        pivotal_diff = 0.0;
        for (int i = 1; i <= f.n(); ++i) {
            pivotal_diff = std::max(*pivotal_diff,
                                    std::fabs(lq_influence(f, mu, i, 1.0) - oracle::pivotal_probability(f, i)));
        }
    }
    const bool agree = transform_diff <= kOracleTolerance && l1_diff <= kOracleTolerance &&
                       l2_diff <= kOracleTolerance && pivotal_diff.value_or(0.0) <= kOracleTolerance;
    Json j = header("oracle-diff");
    j["n"] = f.n();
    j["measure"] = measure_json(mu);
    j["transform_max_abs_diff"] = transform_diff;
    j["l1_influence_max_abs_diff"] = l1_diff;
    j["l2_influence_max_abs_diff"] = l2_diff;
    j["pivotal_max_abs_diff"] = opt_json(pivotal_diff);
    j["tolerance"] = kOracleTolerance;
    j["agree"] = agree;
    emit(out, j);
    return agree ? kOk : kViolation;
}

// make

struct MakeArgs {
    std::string family;
    int n = 3;
    int coordinate = 1;
    std::optional<SubsetMask> mask;
    int tribe_size = 2;
    std::uint64_t tribe_count = 2;
    std::uint64_t seed = 1;
    std::string distribution = "gaussian";
    double value = 1.0;
    std::string output;
};

RandomDistribution parse_distribution(const std::string& s) {
    if (s == "gaussian") {
        return RandomDistribution::Gaussian;
    }
    if (s == "sign") {
        return RandomDistribution::Sign;
    }
    if (s == "uniform") {
        return RandomDistribution::Uniform;
    }
    throw UsageError("unknown distribution '" + s + "' (gaussian, sign, uniform)");
}

int cmd_make(const MakeArgs& a, std::ostream& out) {
    BooleanFunction f = BooleanFunction::constant(1, 0.0);
    if (a.family == "dictator") {
        f = make_dictator(a.n, a.coordinate);
    } else if (a.family == "majority") {
        f = make_majority(a.n);
    } else if (a.family == "parity") {
        BooleanFunction::check_coordinate_count(a.n);
        f = make_parity(a.n, a.mask.value_or((SubsetMask{1} << a.n) - 1));
    } else if (a.family == "tribes") {
        f = make_tribes({a.tribe_size, a.tribe_count});
    } else if (a.family == "random") {
        f = make_random(a.n, a.seed, parse_distribution(a.distribution));
    } else if (a.family == "constant") {
        f = BooleanFunction::constant(a.n, a.value);
    } else {
        throw UsageError("unknown family '" + a.family + "'");
    }
    if (a.output.empty()) {
        out << io::serialize_function(f) << '\n';
    } else {
        io::write_function_file(a.output, f);
    }
    return kOk;
}

constexpr const char* kFooter = R"(Exit codes: 0 ok, 1 usage, 2 I/O or malformed file, 3 capacity or dimension mismatch,
4 inequality violation or oracle disagreement.

CSV outputs (RFC 4180, LF line endings, numbers in shortest round-trip form, undefined values as empty fields):
  verify-hc        form,q,p,min_margin,argmin_seed
  verify-hc --corollary
                   form,delta,p,min_margin,argmin_seed
  russo            p,mean,derivative,l1_sum,weak_mono,weak_sym
  tribes           m,n,influence,variance,finite_ratio,corrected_ratio,limit
  rho              q,lambda,rho_i,rho_ii,rho_iii
JSON outputs carry "schema": "pbias/1"; undefined values are null.)";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fourier analysis of real-valued functions on the p-biased hypercube"};
    app.name("pbias");
    app.footer(kFooter);
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "influences, variance, spectrum and KKL report as JSON");
    analyze_cmd->add_option("file", analyze.input, "function JSON file")->required();
    analyze.measure.add_to(analyze_cmd);
    analyze_cmd->add_option("--form", analyze.form, "rho form for the KKL report: i, ii or iii");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand(
        "verify-hc",
        "sweep hypercontractive margins over random functions; trial t uses seed+t, t=0 is the constant 1, "
        "otherwise n = 1 + t mod N and values come from the gaussian/sign/uniform generator picked by (seed+t) mod 3");
    verify_cmd->add_option("--n", verify.n_max, "largest coordinate count");
    verify_cmd->add_option("--trials", verify.trials, "number of functions");
    verify_cmd->add_option("--seed", verify.seed, "base seed");
    verify_cmd->add_option("--forms", verify.forms, "rho forms (i, ii, iii, all)")->delimiter(',');
    auto* q_grid_opt = verify_cmd->add_option("--q-grid", verify.q_grid, "q values >= 2, 'inf' allowed")->delimiter(',');
    verify_cmd->add_option("--q", verify.single_q, "a single q value")->excludes(q_grid_opt);
    verify_cmd->add_option("--p-grid", verify.p_grid, "biases")->delimiter(',');
    verify_cmd->add_option("--tolerance", verify.tolerance, "exit 0 iff every margin >= -tolerance");
    verify_cmd->add_flag("--corollary", verify.corollary, "sweep the smoothed-norm bound over --delta-grid instead");
    verify_cmd->add_option("--delta-grid", verify.delta_grid, "delta values in (0,1]")->delimiter(',');

    KklArgs kkl;
    auto* kkl_cmd = app.add_subcommand("kkl", "KKL report as JSON");
    kkl_cmd->add_option("file", kkl.input, "function JSON file")->required();
    kkl_cmd->add_option("--p", kkl.p, "uniform bias");
    kkl_cmd->add_option("--form", kkl.form, "rho form: i, ii or iii");

    C0Args c0;
    auto* c0_cmd = app.add_subcommand("c0", "the constant sup_alpha tanh(alpha/2)/(alpha - ln rho2^2) as JSON");
    c0_cmd->add_option("--form", c0.form, "rho form: i, ii or iii");
    auto* c0_p = c0_cmd->add_option("--p", c0.p, "bias (lambda = min(p, 1-p)); default lambda 1/2");
    c0_cmd->add_option("--lambda", c0.lambda, "lambda in (0, 1/2]")->excludes(c0_p);
    c0_cmd->add_option("--alpha-max", c0.alpha_max, "upper end of the alpha search");

    RussoArgs russo;
    auto* russo_cmd = app.add_subcommand("russo", "threshold curve CSV");
    russo_cmd->add_option("file", russo.input, "function JSON file")->required();
    russo_cmd->add_option("--p-grid", russo.p_grid, "start:stop:step");

    TribesArgs tribes;
    auto* tribes_cmd = app.add_subcommand("tribes", "closed-form tribes ratios CSV (p = 1/2, 2^(m+k) tribes of size m)");
    tribes_cmd->add_option("--m-range", tribes.m_range, "lo:hi");
    tribes_cmd->add_option("--k", tribes.k, "shift");

    RhoArgs rho_args;
    auto* rho_cmd = app.add_subcommand("rho", "rho(q, lambda) for the three forms as CSV");
    rho_cmd->add_option("--q-grid", rho_args.q_grid, "q values >= 2, 'inf' allowed")->delimiter(',');
    rho_cmd->add_option("--lambda-grid", rho_args.lambda_grid, "lambda values in (0, 1/2]")->delimiter(',');

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle-diff", "compare fast paths with the naive oracles (n <= 12) as JSON");
    oracle_cmd->add_option("file", oracle_args.input, "function JSON file")->required();
    oracle_args.measure.add_to(oracle_cmd);

    MakeArgs make;
    auto* make_cmd = app.add_subcommand("make", "write a function file for a standard family");
    make_cmd->add_option("family", make.family, "dictator, majority, parity, tribes, random or constant")->required();
    make_cmd->add_option("--n", make.n, "coordinate count");
    make_cmd->add_option("--i", make.coordinate, "dictator coordinate (1-based)");
    make_cmd->add_option("--mask", make.mask, "parity subset mask (default: all coordinates)");
    make_cmd->add_option("--tribe-size", make.tribe_size, "tribes: coordinates per tribe");
    make_cmd->add_option("--tribe-count", make.tribe_count, "tribes: number of tribes");
    make_cmd->add_option("--seed", make.seed, "random: seed");
    make_cmd->add_option("--dist", make.distribution, "random: gaussian, sign or uniform");
    make_cmd->add_option("--value", make.value, "constant: value");
    make_cmd->add_option("-o,--output", make.output, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (analyze_cmd->parsed()) {
            return cmd_analyze(analyze, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out, err);
        }
        if (kkl_cmd->parsed()) {
            return cmd_kkl(kkl, out);
        }
        if (c0_cmd->parsed()) {
            return cmd_c0(c0, out);
        }
        if (russo_cmd->parsed()) {
            return cmd_russo(russo, out);
        }
        if (tribes_cmd->parsed()) {
            return cmd_tribes(tribes, out);
        }
        if (rho_cmd->parsed()) {
            return cmd_rho(rho_args, out);
        }
        if (oracle_cmd->parsed()) {
            return cmd_oracle(oracle_args, out);
        }
        if (make_cmd->parsed()) {
            return cmd_make(make, out);
        }
    } catch (const io::IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kCapacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace pbias::cli
