// asp: design, evaluate and simulate acceptance sampling plans for exponential
// lifetimes under Type I hybrid censoring.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "asp/bayes.hpp"
#include "asp/case_study.hpp"
#include "asp/error.hpp"
#include "asp/plan.hpp"
#include "asp/reference_data.hpp"
#include "asp/simulate.hpp"
#include "asp/solver.hpp"
#include "json.hpp"

namespace {

using namespace asp;
namespace ref = asp::reference;

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kNumeric = 3 };

constexpr int kPrintedDecimals = 4;
constexpr const char* kPlanHeader = "theta_A,theta_U,T,alpha,beta,gamma,t1,t2,n,etc,feasible,slack_alpha,slack_beta";

struct RunConfig {
    // plan
    double theta_A = 0, theta_U = 0, T = 0;
    double alpha = 0.05, beta = 0.05, C = 1.0;
    double a = 1.25, b = 2.5;
    std::string loss = "sel";
    double c = 0.5;
    std::optional<int> d_convention;
    // solver
    int n_max = 150;
    double t_max = 0;
    std::uint64_t seed = 1;
    int population = 40, generations = 300, restarts = 4;
    bool integer_thresholds = false;
    // explicit plan (evaluate, simulate)
    std::optional<int> gamma, n;
    std::optional<double> t1, t2;
    // simulate
    std::optional<double> theta;
    std::int64_t trials = 10000;
    std::string duration = "estimate";
    std::string format = "csv";
    // io
    std::string out;
    std::string in;
    std::string grid;
    std::string table = "all";
    bool raw = false;
};

PlanSpec to_spec(const RunConfig& cfg) {
    PlanSpec s;
    s.theta_A = cfg.theta_A;
    s.theta_U = cfg.theta_U;
    s.T = cfg.T;
    s.alpha = cfg.alpha;
    s.beta = cfg.beta;
    s.C = cfg.C;
    s.prior = {cfg.a, cfg.b};
    if (cfg.loss == "sel")
        s.loss = LossSpec::sel();
    else if (cfg.loss == "linex")
        s.loss = LossSpec::linex(cfg.c);
    else
        throw InvalidArgument("--loss must be sel or linex");
    validate(s);
    return s;
}

SolverSettings to_settings(const RunConfig& cfg) {
    SolverSettings st;
    st.population = cfg.population;
    st.generations = cfg.generations;
    st.restarts = cfg.restarts;
    st.d_convention = cfg.d_convention;
    return st;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw InvalidArgument("cannot open output file " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string num(double x, bool raw) {
    char buf[64];
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    if (raw)
        std::snprintf(buf, sizeof buf, "%.17g", x);
    else
        std::snprintf(buf, sizeof buf, "%.*f", kPrintedDecimals, x);
    return buf;
}

std::string plan_row(const PlanSpec& spec, const PlanSolution& s, bool raw) {
    std::ostringstream os;
    os << num(spec.theta_A, raw) << ',' << num(spec.theta_U, raw) << ',' << num(spec.T, raw) << ','
       << num(spec.alpha, raw) << ',' << num(spec.beta, raw) << ',' << s.gamma << ',' << num(s.t1, raw) << ','
       << num(s.t2, raw) << ',' << s.n << ',' << num(s.etc, raw) << ',' << (s.feasible ? 1 : 0) << ','
       << num(s.slack_alpha, raw) << ',' << num(s.slack_beta, raw);
    return os.str();
}

// Places the thresholds where they will be printed: integers in integer mode,
// multiples of 1e-4 in the default mode, untouched with --raw. The reported
// cost and slacks are always those of the printed thresholds.
PlanSolution publish(const PlanSpec& spec, const PlanSolution& s, const RunConfig& cfg) {
    if (!s.feasible || s.gamma < 1) return s;
    if (cfg.integer_thresholds) return integer_thresholds(spec, s, to_settings(cfg));
    if (cfg.raw) return s;
    auto snapped = grid_thresholds(spec, s, kPrintedDecimals, to_settings(cfg));
    return snapped.feasible ? snapped : s;
}

PlanSolution design(const PlanSpec& spec, const RunConfig& cfg) {
    const auto s = solve_plan(spec, {cfg.n_max, cfg.t_max}, cfg.seed, to_settings(cfg));
    return publish(spec, s, cfg);
}

PlanSolution evaluated(const PlanSpec& spec, int gamma, int n, double t1, double t2, const RunConfig& cfg) {
    const auto e = evaluate_plan(spec, {n, gamma, spec.T}, t1, t2, cfg.d_convention);
    PlanSolution s;
    s.gamma = gamma;
    s.n = n;
    s.t1 = t1;
    s.t2 = t2;
    s.etc = e.etc;
    s.feasible = e.feasible();
    s.slack_alpha = e.slack_alpha;
    s.slack_beta = e.slack_beta;
    return s;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_double(const std::string& s, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || errno == ERANGE) throw InvalidArgument("bad number for " + what + ": '" + s + "'");
    return v;
}

// Reads a CSV with a header into name -> value maps; blank lines and '#' comments are skipped.
std::vector<std::map<std::string, std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::vector<std::string> header;
    std::vector<std::map<std::string, std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cells = split_csv(line);
        if (header.empty()) {
            header = cells;
            continue;
        }
        if (cells.size() > header.size()) throw InvalidArgument(path + ": row has more cells than the header");
        std::map<std::string, std::string> row;
        for (std::size_t i = 0; i < cells.size(); ++i) row[header[i]] = cells[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

const std::string& cell(const std::map<std::string, std::string>& row, const std::string& key) {
    auto it = row.find(key);
    if (it == row.end() || it->second.empty()) throw InvalidArgument("missing column " + key);
    return it->second;
}

PlanSpec spec_from_row(const std::map<std::string, std::string>& row, const RunConfig& cfg) {
    RunConfig c = cfg;
    c.theta_A = parse_double(cell(row, "theta_A"), "theta_A");
    c.theta_U = parse_double(cell(row, "theta_U"), "theta_U");
    c.T = parse_double(cell(row, "T"), "T");
    c.alpha = parse_double(cell(row, "alpha"), "alpha");
    c.beta = parse_double(cell(row, "beta"), "beta");
    return to_spec(c);
}

// --- subcommands ---

int cmd_design(const RunConfig& cfg) {
    const auto spec = to_spec(cfg);
    const auto s = design(spec, cfg);
    Output out(cfg.out);
    out.stream() << kPlanHeader << '\n' << plan_row(spec, s, cfg.raw) << '\n';
    return s.feasible ? kOk : kInfeasible;
}

int cmd_evaluate(const RunConfig& cfg) {
    Output out(cfg.out);
    out.stream() << kPlanHeader << '\n';
    bool all_feasible = true;
    if (!cfg.in.empty()) {
        for (const auto& row : read_csv(cfg.in)) {
            const auto spec = spec_from_row(row, cfg);
            const int gamma = static_cast<int>(parse_double(cell(row, "gamma"), "gamma"));
            const int n = static_cast<int>(parse_double(cell(row, "n"), "n"));
            const auto s = evaluated(spec, gamma, n, parse_double(cell(row, "t1"), "t1"),
                                     parse_double(cell(row, "t2"), "t2"), cfg);
            all_feasible = all_feasible && s.feasible;
            out.stream() << plan_row(spec, s, cfg.raw) << '\n';
        }
    } else {
        if (!cfg.gamma || !cfg.n || !cfg.t1 || !cfg.t2)
            throw InvalidArgument("evaluate needs --gamma, --n, --t1 and --t2, or --in FILE");
        const auto spec = to_spec(cfg);
        const auto s = evaluated(spec, *cfg.gamma, *cfg.n, *cfg.t1, *cfg.t2, cfg);
        all_feasible = s.feasible;
        out.stream() << plan_row(spec, s, cfg.raw) << '\n';
    }
    return all_feasible ? kOk : kInfeasible;
}

int cmd_simulate(const RunConfig& cfg) {
    const auto spec = to_spec(cfg);
    PlanSolution plan;
    if (cfg.gamma || cfg.n || cfg.t1 || cfg.t2) {
        if (!cfg.gamma || !cfg.n || !cfg.t1 || !cfg.t2)
            throw InvalidArgument("simulate needs all of --gamma, --n, --t1, --t2 or none of them");
        plan = evaluated(spec, *cfg.gamma, *cfg.n, *cfg.t1, *cfg.t2, cfg);
        plan.feasible = true;  // simulate the plan as given
    } else {
        plan = design(spec, cfg);
        if (!plan.feasible) {
            std::cerr << "asp: no feasible plan to simulate\n";
            return kInfeasible;
        }
    }
    SimulationOptions opt;
    if (cfg.duration == "estimate")
        opt.duration = RoundDuration::Estimate;
    else if (cfg.duration == "tstar")
        opt.duration = RoundDuration::TStar;
    else
        throw InvalidArgument("--duration must be estimate or tstar");
    const double theta = cfg.theta.value_or(spec.theta_A);
    const auto r = run_plan(plan, spec, theta, cfg.trials, cfg.seed, opt);

    const std::vector<std::pair<std::string, double>> fields = {
        {"theta", theta},
        {"gamma", plan.gamma},
        {"n", plan.n},
        {"t1", plan.t1},
        {"t2", plan.t2},
        {"trials", static_cast<double>(r.trials)},
        {"P_a", r.empirical_P_a},
        {"P_r", r.empirical_P_r},
        {"se_P", r.se_P},
        {"mean_iterations", r.mean_iterations},
        {"se_iterations", r.se_iterations},
        {"etc", r.empirical_etc},
        {"se_etc", r.se_etc},
        {"rounds", static_cast<double>(r.rounds)},
        {"rounds_accept", static_cast<double>(r.rounds_accept)},
        {"rounds_continue", static_cast<double>(r.rounds_continue)},
        {"rounds_reject", static_cast<double>(r.rounds_reject)},
        {"rounds_without_failure", static_cast<double>(r.rounds_without_failure)},
        {"estimate_mean", r.round_estimate_mean},
        {"estimate_variance", r.round_estimate_variance},
    };
    Output out(cfg.out);
    if (cfg.format == "jsonl") {
        nlohmann::ordered_json j;
        for (const auto& [k, v] : fields) {
            if (v == std::floor(v) && std::abs(v) < 1e15 && k != "theta" && k != "t1" && k != "t2")
                j[k] = static_cast<long long>(v);
            else
                j[k] = v;
        }
        out.stream() << j.dump() << '\n';
    } else if (cfg.format == "csv") {
        for (std::size_t i = 0; i < fields.size(); ++i) out.stream() << (i ? "," : "") << fields[i].first;
        out.stream() << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const double v = fields[i].second;
            out.stream() << (i ? "," : "") << (v == std::floor(v) && std::abs(v) < 1e15 ? std::to_string(
                                                                                              static_cast<long long>(v))
                                                                                        : num(v, cfg.raw));
        }
        out.stream() << '\n';
    } else {
        throw InvalidArgument("--format must be csv or jsonl");
    }
    return kOk;
}

struct GridRow {
    double theta_A, theta_U, T, alpha, beta;
    std::optional<ref::PlanRow> reference;
};

std::vector<GridRow> table_rows(const std::array<ref::PlanRow, 12>& table) {
    std::vector<GridRow> out;
    for (const auto& r : table) out.push_back({r.theta_A, r.theta_U, r.T, r.alpha, r.beta, r});
    return out;
}

std::vector<GridRow> grid_rows(const std::string& path) {
    std::vector<GridRow> out;
    for (const auto& row : read_csv(path))
        out.push_back({parse_double(cell(row, "theta_A"), "theta_A"), parse_double(cell(row, "theta_U"), "theta_U"),
                       parse_double(cell(row, "T"), "T"), parse_double(cell(row, "alpha"), "alpha"),
                       parse_double(cell(row, "beta"), "beta"), std::nullopt});
    return out;
}

// One solved table: our plan columns, the tabulated plan, the relative ETC gap and a note.
void write_plan_table(std::ostream& os, const std::vector<GridRow>& rows, const RunConfig& base,
                      const std::string& loss, double c) {
    os << kPlanHeader << ",ref_gamma,ref_t1,ref_t2,ref_n,ref_etc,etc_gap,note\n";
    for (const auto& g : rows) {
        RunConfig cfg = base;
        cfg.theta_A = g.theta_A;
        cfg.theta_U = g.theta_U;
        cfg.T = g.T;
        cfg.alpha = g.alpha;
        cfg.beta = g.beta;
        cfg.loss = loss;
        cfg.c = c;
        std::string note;
        PlanSpec spec;
        PlanSolution s;
        try {
            spec = to_spec(cfg);
            s = design(spec, cfg);
            if (!s.feasible) note = "infeasible";
        } catch (const std::exception& e) {
            note = e.what();
            spec.theta_A = g.theta_A;
            spec.theta_U = g.theta_U;
            spec.T = g.T;
            spec.alpha = g.alpha;
            spec.beta = g.beta;
            s.etc = NAN;
        }
        os << plan_row(spec, s, cfg.raw);
        if (g.reference) {
            const auto& r = *g.reference;
            os << ',' << r.gamma << ',' << num(r.t1, cfg.raw) << ',' << num(r.t2, cfg.raw) << ',' << r.n << ','
               << num(r.etc, cfg.raw) << ',' << num((s.etc - r.etc) / r.etc, cfg.raw);
            if (note.empty() && !(r.t2 > r.t1)) note = "tabulated t1 >= t2";
        } else {
            os << ",,,,,,";
        }
        for (char& ch : note)
            if (ch == ',' || ch == '\n') ch = ';';
        os << ',' << note << '\n';
        os.flush();
    }
}

void write_comparison(std::ostream& os, const RunConfig& base) {
    os << "theta_A,theta_U,T,alpha,beta,etc_sel,etc_linex,ref_etc_sel,ref_etc_linex,ref_etc_mle,note\n";
    for (const auto& r : ref::kComparison) {
        RunConfig cfg = base;
        cfg.theta_A = r.theta_A;
        cfg.theta_U = r.theta_U;
        cfg.T = r.T;
        cfg.alpha = r.alpha;
        cfg.beta = r.beta;
        double etc[2] = {NAN, NAN};
        std::string note;
        for (int k = 0; k < 2; ++k) {
            cfg.loss = k == 0 ? "sel" : "linex";
            cfg.c = 0.5;
            try {
                const auto spec = to_spec(cfg);
                const auto s = design(spec, cfg);
                if (s.feasible)
                    etc[k] = s.etc;
                else
                    note += std::string(k == 0 ? "sel" : "linex") + " infeasible; ";
            } catch (const std::exception& e) {
                note += e.what();
            }
        }
        for (char& ch : note)
            if (ch == ',' || ch == '\n') ch = ';';
        os << num(r.theta_A, cfg.raw) << ',' << num(r.theta_U, cfg.raw) << ',' << num(r.T, cfg.raw) << ','
           << num(r.alpha, cfg.raw) << ',' << num(r.beta, cfg.raw) << ',' << num(etc[0], cfg.raw) << ','
           << num(etc[1], cfg.raw) << ',' << num(r.etc_sel, cfg.raw) << ',' << num(r.etc_linex, cfg.raw) << ','
           << num(r.etc_mle_type1, cfg.raw) << ',' << note << '\n';
        os.flush();
    }
}

int cmd_tables(const RunConfig& cfg) {
    const std::vector<std::string> all = {"1", "2", "3", "4"};
    std::vector<std::string> which;
    if (cfg.table == "all")
        which = cfg.grid.empty() ? all : std::vector<std::string>{"grid"};
    else
        which = {cfg.table};

    std::filesystem::path dir;
    if (!cfg.out.empty()) {
        dir = cfg.out;
        std::filesystem::create_directories(dir);
    }
    for (const auto& t : which) {
        std::ofstream file;
        if (!dir.empty()) {
            file.open(dir / ("table" + (t == "grid" ? std::string("_grid") : t) + ".csv"));
            if (!file) throw InvalidArgument("cannot write into " + dir.string());
        } else if (which.size() > 1) {
            std::cout << "# table " << t << '\n';
        }
        std::ostream& os = dir.empty() ? std::cout : file;
        if (t == "grid" || !cfg.grid.empty()) {
            if (cfg.grid.empty()) throw InvalidArgument("--table grid needs --grid FILE");
            write_plan_table(os, grid_rows(cfg.grid), cfg, cfg.loss, cfg.c);
        } else if (t == "1") {
            write_plan_table(os, table_rows(ref::kTableSel), cfg, "sel", 0);
        } else if (t == "2") {
            write_plan_table(os, table_rows(ref::kTableLinexPositive), cfg, "linex", 0.5);
        } else if (t == "3") {
            write_plan_table(os, table_rows(ref::kTableLinexNegative), cfg, "linex", -0.5);
        } else if (t == "4") {
            write_comparison(os, cfg);
        } else {
            throw InvalidArgument("--table must be 1, 2, 3, 4, grid or all");
        }
        if (dir.empty() && which.size() > 1) std::cout << '\n';
    }
    return kOk;
}

int cmd_case_study(const RunConfig& base) {
    Output out(base.out);
    auto& os = out.stream();
    const auto& cs = ref::kCaseStudy;
    RunConfig cfg = base;
    cfg.theta_A = cs.theta_A;
    cfg.theta_U = cs.theta_U;
    cfg.T = cs.T;
    cfg.alpha = cs.alpha;
    cfg.beta = cs.beta;
    cfg.integer_thresholds = true;
    cfg.n_max = static_cast<int>(ref::kApplianceLifetimes.size());

    os << "appliance data: " << ref::kApplianceLifetimes.size() << " lifetimes, theta_A=" << cs.theta_A
       << " theta_U=" << cs.theta_U << " T=" << cs.T << " alpha=" << cs.alpha << " beta=" << cs.beta << "\n";
    bool ok = true;
    for (int k = 0; k < 2; ++k) {
        const bool linex = k == 1;
        cfg.loss = linex ? "linex" : "sel";
        cfg.c = ref::kCaseStudyLinexC;
        const auto spec = to_spec(cfg);
        const auto& pub = linex ? ref::kCaseStudyLinex : ref::kCaseStudySel;
        os << "\n[" << to_string(spec.loss) << "]\n";

        auto report = [&](const char* label, int gamma, int n, double t1, double t2) {
            const auto path = apply_plan(ref::kApplianceLifetimes, {n, gamma, cs.T}, t1, t2, spec.prior, spec.loss);
            const auto e = evaluate_plan(spec, path.scheme, t1, t2, cfg.d_convention);
            char buf[512];
            std::snprintf(buf, sizeof buf,
                          "%s plan: gamma=%d n=%d t1=%s t2=%s\n  T*=%s D=%d mle=%s estimate=%s -> %s\n"
                          "  etc=%s feasible=%d slack_alpha=%s slack_beta=%s\n",
                          label, gamma, n, num(t1, base.raw).c_str(), num(t2, base.raw).c_str(),
                          num(path.sample.t_star, base.raw).c_str(), path.sample.failure_count(),
                          num(path.theta_mle, base.raw).c_str(), num(path.estimate, base.raw).c_str(),
                          to_string(path.decision).c_str(), num(e.etc, base.raw).c_str(), e.feasible() ? 1 : 0,
                          num(e.slack_alpha, base.raw).c_str(), num(e.slack_beta, base.raw).c_str());
            os << buf;
            return path;
        };
        const auto path = report("published", pub.gamma, pub.n, pub.t1, pub.t2);
        const bool match = std::abs(path.estimate - pub.estimate) <= 1e-3;
        ok = ok && match;
        os << "  published estimate " << num(pub.estimate, false) << (match ? " reproduced" : " NOT reproduced")
           << "; published etc " << num(pub.etc, false) << "\n";

        const auto s = design(spec, cfg);
        if (s.feasible)
            report("solved", s.gamma, s.n, s.t1, s.t2);
        else
            os << "solved plan: none feasible with n <= " << cfg.n_max << "\n";
    }
    return ok ? kOk : kNumeric;
}

void add_common_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--theta_A", cfg.theta_A, "acceptable mean life");
    app.add_option("--theta_U", cfg.theta_U, "unacceptable mean life");
    app.add_option("--T", cfg.T, "censoring time");
    app.add_option("--alpha", cfg.alpha, "producer's risk")->capture_default_str();
    app.add_option("--beta", cfg.beta, "consumer's risk")->capture_default_str();
    app.add_option("--C", cfg.C, "testing cost per unit time")->capture_default_str();
    app.add_option("--a", cfg.a, "prior scale a")->capture_default_str();
    app.add_option("--b", cfg.b, "prior shape b")->capture_default_str();
    app.add_option("--loss", cfg.loss, "sel or linex")->capture_default_str();
    app.add_option("--c", cfg.c, "Linex asymmetry")->capture_default_str();
    app.add_option("--d-convention", cfg.d_convention, "failure count used in the estimator moments (default gamma)");
    app.add_option("--n-max", cfg.n_max, "largest sample size searched")->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "largest threshold searched (0: 5 theta_A)")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--population", cfg.population)->capture_default_str();
    app.add_option("--generations", cfg.generations)->capture_default_str();
    app.add_option("--restarts", cfg.restarts)->capture_default_str();
    app.add_flag("--integer-thresholds", cfg.integer_thresholds, "restrict t1, t2 to integers");
    app.add_option("--gamma", cfg.gamma, "failure count that ends the test");
    app.add_option("--n", cfg.n, "sample size");
    app.add_option("--t1", cfg.t1, "reject below");
    app.add_option("--t2", cfg.t2, "accept at or above");
    app.add_option("--theta", cfg.theta, "true mean life for simulate (default theta_A)");
    app.add_option("--trials", cfg.trials, "simulated lots")->capture_default_str();
    app.add_option("--duration", cfg.duration, "round cost: estimate or tstar")->capture_default_str();
    app.add_option("--format", cfg.format, "simulate output: csv or jsonl")->capture_default_str();
    app.add_option("--in", cfg.in, "design CSV to re-evaluate");
    app.add_option("--grid", cfg.grid, "CSV of theta_A,theta_U,T,alpha,beta rows for tables");
    app.add_option("--table", cfg.table, "1, 2, 3, 4, grid or all")->capture_default_str();
    app.add_option("--out", cfg.out, "output file (tables: directory)");
    app.add_flag("--raw", cfg.raw, "full precision output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance sampling plans under Type I hybrid censoring"};
    app.set_config("--config", "", "key = value file; flags override it");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);
    RunConfig cfg;
    add_common_options(app, cfg);
    app.fallthrough();

    auto* design_cmd = app.add_subcommand("design", "solve for the cheapest feasible plan");
    auto* evaluate_cmd = app.add_subcommand("evaluate", "risks and cost of given plans");
    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo run of a plan");
    auto* tables_cmd = app.add_subcommand("tables", "solve the published parameter grids");
    auto* case_cmd = app.add_subcommand("case-study", "apply plans to the appliance data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    try {
        if (*design_cmd) return cmd_design(cfg);
        if (*evaluate_cmd) return cmd_evaluate(cfg);
        if (*simulate_cmd) return cmd_simulate(cfg);
        if (*tables_cmd) return cmd_tables(cfg);
        if (*case_cmd) return cmd_case_study(cfg);
    } catch (const InvalidArgument& e) {
        std::cerr << "asp: " << e.what() << '\n';
        return kInvalid;
    } catch (const NumericFailure& e) {
        std::cerr << "asp: numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "asp: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
