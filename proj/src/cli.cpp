#include "csdd/cli.hpp"

#include "csdd/greens.hpp"
#include "csdd/post.hpp"
#include "csdd/sie.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <thread>

namespace csdd::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* command_name(Command c)
{
    switch (c) {
    case Command::solve: return "solve";
    case Command::sweep: return "sweep";
    case Command::field: return "field";
    case Command::baseline: return "baseline";
    }
    return "?";
}

json config_echo(const RunConfig& c)
{
    json j;
    j["command"] = command_name(c.command);
    j["format"] = c.format == Format::csv ? "csv" : "json";
    j["out"] = c.output_path;
    j["mu"] = c.mu;
    j["nu"] = c.nu;
    switch (c.command) {
    case Command::solve:
        j["p"] = c.p;
        j["a"] = c.a;
        j["sigma0"] = c.sigma0;
        j["n"] = c.n;
        j["profile_samples"] = c.profile_samples;
        j["tip_samples"] = c.tip_samples;
        break;
    case Command::sweep:
        j["a"] = c.a;
        j["sigma0"] = c.sigma0;
        j["n"] = c.n;
        j["p_min"] = c.p_min;
        j["p_max"] = c.p_max;
        j["p_steps"] = c.p_steps;
        j["log_spaced"] = c.log_spaced;
        j["nu_list"] = c.nu_list;
        break;
    case Command::field:
        j["ell"] = c.ell;
        j["burgers"] = c.burgers;
        j["frank"] = c.frank;
        j["x_min"] = c.x_min;
        j["x_max"] = c.x_max;
        j["x_steps"] = c.x_steps;
        j["y_min"] = c.y_min;
        j["y_max"] = c.y_max;
        j["y_steps"] = c.y_steps;
        break;
    case Command::baseline:
        j["a"] = c.a;
        j["sigma0"] = c.sigma0;
        j["n"] = c.n;
        j["profile_samples"] = c.profile_samples;
        break;
    }
    return j;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string echo_value(const json& v)
{
    if (v.is_number_float())
        return fmt(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            if (!s.empty())
                s += ' ';
            s += echo_value(e);
        }
        return s;
    }
    return v.dump();
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

fs::path write_table(const RunConfig& cfg, const std::string& stem, const Table& table,
                     const std::vector<std::string>& notes = {})
{
    const fs::path dir(cfg.output_path);
    const json echo = config_echo(cfg);
    if (cfg.format == Format::csv) {
        const fs::path path = dir / (stem + ".csv");
        std::ofstream os(path);
        if (!os)
            throw std::runtime_error("cannot write " + path.string());
        for (const auto& [key, value] : echo.items())
            os << "# " << key << " = " << echo_value(value) << '\n';
        for (const auto& note : notes)
            os << "# " << note << '\n';
        for (std::size_t i = 0; i < table.columns.size(); ++i)
            os << (i ? "," : "") << table.columns[i];
        os << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "") << fmt(row[i]);
            os << '\n';
        }
        return path;
    }
    const fs::path path = dir / (stem + ".json");
    json j;
    j["config"] = echo;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    if (!notes.empty())
        j["notes"] = notes;
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << j.dump(2) << '\n';
    return path;
}

fs::path write_json(const RunConfig& cfg, const std::string& stem, json body)
{
    const fs::path path = fs::path(cfg.output_path) / (stem + ".json");
    body["config"] = config_echo(cfg);
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot write " + path.string());
    os << body.dump(2) << '\n';
    return path;
}

void ensure_output_dir(const RunConfig& cfg)
{
    std::error_code ec;
    fs::create_directories(cfg.output_path, ec);
    if (ec || !fs::is_directory(cfg.output_path))
        throw ConfigError("cannot create output directory " + cfg.output_path);
}

sie::CrackProblem make_problem(const RunConfig& cfg, double p, double nu)
{
    sie::CrackProblem pr;
    pr.half_length = cfg.a;
    pr.remote_tension = cfg.sigma0;
    pr.material.shear_modulus = cfg.mu;
    pr.material.poisson_ratio = nu;
    pr.material.char_length = cfg.a / p;
    return pr;
}

std::vector<double> grid(double lo, double hi, int steps)
{
    std::vector<double> v(steps);
    for (int i = 0; i < steps; ++i)
        v[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    return v;
}

std::vector<double> sweep_values(const RunConfig& cfg)
{
    if (cfg.log_spaced)
        return post::log_spaced(cfg.p_min, cfg.p_max, cfg.p_steps);
    return grid(cfg.p_min, cfg.p_max, cfg.p_steps);
}

std::vector<double> effective_nu_list(const RunConfig& cfg)
{
    return cfg.nu_list.empty() ? std::vector<double>{cfg.nu} : cfg.nu_list;
}

void check_nu(double nu)
{
    if (!(nu > -1.0 && nu <= 0.5))
        throw ConfigError("--nu must lie in (-1, 0.5], got " + fmt(nu));
}

struct SweepRow {
    double p, nu;
    post::TipQuantities tip;
    double rcond;
};

}  // namespace

void RunConfig::validate() const
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw ConfigError("--mu must be positive");
    if (command == Command::field) {
        check_nu(nu);
        if (!(ell > 0.0) || !std::isfinite(ell))
            throw ConfigError("--ell must be positive");
        if (!std::isfinite(burgers) || !std::isfinite(frank))
            throw ConfigError("defect charge must be finite");
        if (x_steps < 1 || y_steps < 1)
            throw ConfigError("empty field grid: --x-steps and --y-steps must be >= 1");
        if (!(x_max >= x_min) || !(y_max >= y_min))
            throw ConfigError("empty field grid: max below min");
        if (y_min < 0.0)
            throw ConfigError("field grid must have y >= 0, got --y-min " + fmt(y_min));
        if ((x_steps > 1 && x_max == x_min) || (y_steps > 1 && y_max == y_min))
            throw ConfigError("degenerate field grid: repeated points");
        for (double x : grid(x_min, x_max, x_steps))
            for (double y : grid(y_min, y_max, y_steps))
                if (x == 0.0 && y == 0.0)
                    throw ConfigError("field grid contains the defect core at (x=0, y=0)");
        return;
    }
    if (n < 8)
        throw ConfigError("--n must be >= 8, got " + std::to_string(n));
    if (!(a > 0.0) || !std::isfinite(a))
        throw ConfigError("--a must be positive");
    if (!std::isfinite(sigma0))
        throw ConfigError("--sigma0 must be finite");
    if (command == Command::sweep) {
        if (p_steps < 1)
            throw ConfigError("empty sweep range: --p-steps must be >= 1");
        if (!(p_min > 0.0) || !(p_max > 0.0) || !std::isfinite(p_min) || !std::isfinite(p_max))
            throw ConfigError("sweep bounds must be positive");
        if (p_max < p_min)
            throw ConfigError("empty sweep range: --p-max below --p-min");
        if (p_steps > 1 && p_max == p_min)
            throw ConfigError("empty sweep range: --p-min equals --p-max with several steps");
        for (double v : effective_nu_list(*this))
            check_nu(v);
        return;
    }
    check_nu(nu);
    if (command == Command::solve) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw ConfigError("--p must be positive");
        if (profile_samples < 1 || tip_samples < 2)
            throw ConfigError("sample counts too small");
    }
    if (command == Command::baseline && profile_samples < 1)
        throw ConfigError("sample counts too small");
}

std::vector<fs::path> cmd_solve(const RunConfig& cfg)
{
    cfg.validate();
    ensure_output_dir(cfg);
    const auto problem = make_problem(cfg, cfg.p, cfg.nu);
    const sie::Discretization disc(cfg.n);
    const auto sol = sie::solve(problem, disc);
    const auto tip = post::tip_quantities(sol);
    const double ell = problem.material.char_length;
    std::vector<fs::path> files;

    Table dens{{"i", "s", "x", "f", "g", "f_over_load", "g_over_load"}, {}};
    const double load = cfg.sigma0 / cfg.mu;
    for (int i = 0; i < disc.n(); ++i) {
        const double s = disc.nodes()[i];
        dens.rows.push_back({double(i + 1), s, s * cfg.a, sol.f_vals[i], sol.g_vals[i],
                             load != 0.0 ? sol.f_vals[i] / load : 0.0, load != 0.0 ? sol.g_vals[i] / load : 0.0});
    }
    files.push_back(write_table(cfg, "densities", dens));

    const auto prof = post::crack_profiles(sol, cfg.profile_samples);
    Table pt{{"x", "x_over_a", "delta_uy", "delta_uy_norm", "delta_uy_classical", "delta_uy_ratio", "delta_omega",
              "delta_omega_norm"},
             {}};
    const double ref = cfg.sigma0 * cfg.a / cfg.mu;
    for (std::size_t j = 0; j < prof.x_samples.size(); ++j) {
        const double x = prof.x_samples[j];
        const double cl = post::classical_opening(problem, x);
        pt.rows.push_back({x, x / cfg.a, prof.delta_uy[j], ref != 0.0 ? prof.delta_uy[j] / ref : 0.0, cl,
                           cl != 0.0 ? prof.delta_uy[j] / cl : 0.0, prof.delta_omega[j],
                           load != 0.0 ? prof.delta_omega[j] / load : 0.0});
    }
    files.push_back(write_table(cfg, "profiles", pt));

    Table tipt{{"xbar", "xbar_over_ell", "xbar_over_a", "sigma_yy", "sigma_yy_over_sigma0", "sigma_yy_classical",
                "m_yz", "m_yz_over_sigma0_ell"},
               {}};
    for (double r : post::log_spaced(1e-4, 10.0, cfg.tip_samples)) {
        const double xbar = r * ell;
        const auto st = post::stress_ahead_of_tip(sol, xbar);
        const double cl = post::classical_sigma_yy(problem, cfg.a + xbar);
        const double s0 = cfg.sigma0;
        tipt.rows.push_back({xbar, r, xbar / cfg.a, st.sigma_yy, s0 != 0.0 ? st.sigma_yy / s0 : 0.0, cl, st.m_yz,
                             s0 != 0.0 ? st.m_yz / (s0 * ell) : 0.0});
    }
    files.push_back(write_table(cfg, "near_tip", tipt));

    json summary;
    summary["f1"] = tip.f1;
    summary["g1"] = tip.g1;
    summary["K_I"] = tip.K_I;
    summary["K_I_ratio"] = tip.K_I_ratio;
    summary["K_I_classical"] = post::classical_sif(problem);
    summary["J"] = tip.J;
    summary["J_ratio"] = tip.J_ratio;
    summary["J_classical"] = post::classical_j(problem);
    summary["n"] = cfg.n;
    summary["p"] = cfg.p;
    summary["ell"] = ell;
    summary["condition_indicator"] = sol.rcond;
    summary["relative_residual"] = sol.relative_residual;
    summary["center_opening"] = post::opening_at(sol, 0.0);
    summary["center_opening_ratio"] = post::opening_at(sol, 0.0) / post::classical_opening(problem, 0.0);
    summary["warnings"] = sol.warnings;
    files.push_back(write_json(cfg, "summary", summary));
    return files;
}

std::vector<fs::path> cmd_sweep(const RunConfig& cfg)
{
    cfg.validate();
    ensure_output_dir(cfg);
    const auto ps = sweep_values(cfg);
    const auto nus = effective_nu_list(cfg);
    const sie::Discretization disc(cfg.n);

    std::vector<std::pair<double, double>> jobs;
    for (double nu : nus)
        for (double p : ps)
            jobs.emplace_back(p, nu);

    std::vector<SweepRow> rows(jobs.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < jobs.size(); start += width) {
        std::vector<std::future<SweepRow>> batch;
        for (std::size_t k = start; k < std::min(jobs.size(), start + width); ++k) {
            batch.push_back(std::async(std::launch::async, [&cfg, &disc, job = jobs[k]] {
                const auto sol = sie::solve(make_problem(cfg, job.first, job.second), disc);
                return SweepRow{job.first, job.second, post::tip_quantities(sol), sol.rcond};
            }));
        }
        for (std::size_t k = 0; k < batch.size(); ++k)
            rows[start + k] = batch[k].get();
    }
    // ascending l/a, then nu
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& x, const SweepRow& y) {
        if (x.p != y.p)
            return x.p > y.p;
        return x.nu < y.nu;
    });

    json flags = json::array();
    std::vector<std::string> notes;
    for (double nu : nus) {
        std::vector<const SweepRow*> sel;
        for (const auto& r : rows)
            if (r.nu == nu)
                sel.push_back(&r);
        bool k_dec = true, j_dec = true, j_below = true;
        for (std::size_t i = 0; i < sel.size(); ++i) {
            if (sel[i]->tip.J_ratio >= 1.0)
                j_below = false;
            if (i > 0) {
                if (!(sel[i]->tip.K_I_ratio < sel[i - 1]->tip.K_I_ratio))
                    k_dec = false;
                if (!(sel[i]->tip.J_ratio < sel[i - 1]->tip.J_ratio))
                    j_dec = false;
            }
        }
        flags.push_back({{"nu", nu}, {"K_I_ratio_decreasing", k_dec}, {"J_ratio_decreasing", j_dec},
                         {"J_ratio_below_one", j_below}});
        notes.push_back("monotone nu=" + fmt(nu) + " K_I_ratio_decreasing=" + (k_dec ? "true" : "false")
                        + " J_ratio_decreasing=" + (j_dec ? "true" : "false")
                        + " J_ratio_below_one=" + (j_below ? "true" : "false"));
    }

    Table t{{"ell_over_a", "p", "nu", "f1", "g1", "K_I", "K_I_ratio", "J", "J_ratio", "condition_indicator"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({1.0 / r.p, r.p, r.nu, r.tip.f1, r.tip.g1, r.tip.K_I, r.tip.K_I_ratio, r.tip.J, r.tip.J_ratio,
                          r.rcond});
    std::vector<fs::path> files;
    files.push_back(write_table(cfg, "sweep", t, notes));
    json summary;
    summary["monotonicity"] = flags;
    summary["rows"] = rows.size();
    files.push_back(write_json(cfg, "sweep_summary", summary));
    return files;
}

std::vector<fs::path> cmd_field(const RunConfig& cfg)
{
    cfg.validate();
    ensure_output_dir(cfg);
    greens::MaterialParams mat{cfg.mu, cfg.nu, cfg.ell};
    greens::DefectCharge charge{cfg.burgers, cfg.frank};
    const auto xs = grid(cfg.x_min, cfg.x_max, cfg.x_steps);
    const auto ys = grid(cfg.y_min, cfg.y_max, cfg.y_steps);

    Table t{{"x", "y", "x_over_ell", "y_over_ell", "sxx", "syy", "sxy", "syx", "mxz", "myz", "ux", "uy", "omega"}, {}};
    t.rows.resize(xs.size() * ys.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < t.rows.size(); k = next++) {
            const double x = xs[k % xs.size()], y = ys[k / xs.size()];
            const auto s = greens::full_field(x, y, charge, mat);
            t.rows[k] = {x, y, x / cfg.ell, y / cfg.ell, s.sxx, s.syy, s.sxy, s.syx, s.mxz, s.myz, s.ux, s.uy, s.omega};
        }
    };
    std::vector<std::future<void>> work;
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t w = 0; w < width; ++w)
        work.push_back(std::async(std::launch::async, worker));
    for (auto& w : work)
        w.get();
    return {write_table(cfg, "field", t)};
}

std::vector<fs::path> cmd_baseline(const RunConfig& cfg)
{
    cfg.validate();
    ensure_output_dir(cfg);
    sie::CrackProblem problem;
    problem.half_length = cfg.a;
    problem.remote_tension = cfg.sigma0;
    problem.material = {cfg.mu, cfg.nu, 0.0};
    const auto base = post::classical_baseline(problem, cfg.n, cfg.profile_samples);
    const double ref = cfg.sigma0 * cfg.a / cfg.mu;
    Table t{{"x", "x_over_a", "cod_closed", "cod_discrete", "cod_closed_norm", "cod_discrete_norm"}, {}};
    for (std::size_t j = 0; j < base.x_samples.size(); ++j)
        t.rows.push_back({base.x_samples[j], base.x_samples[j] / cfg.a, base.cod_closed[j], base.cod_discrete[j],
                          ref != 0.0 ? base.cod_closed[j] / ref : 0.0, ref != 0.0 ? base.cod_discrete[j] / ref : 0.0});
    std::vector<fs::path> files;
    files.push_back(write_table(cfg, "baseline", t));
    json summary;
    summary["K_I_closed"] = base.K_I_closed;
    summary["K_I_discrete"] = base.K_I_discrete;
    summary["K_I_relative_difference"] =
        base.K_I_closed != 0.0 ? std::abs(base.K_I_discrete - base.K_I_closed) / std::abs(base.K_I_closed) : 0.0;
    summary["J_closed"] = base.J_closed;
    files.push_back(write_json(cfg, "baseline_summary", summary));
    return files;
}

namespace {

void print_error(const std::string& kind, const std::string& message)
{
    json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << std::endl;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool crack)
{
    sub->add_option("--nu", cfg.nu, "Poisson ratio");
    sub->add_option("--mu", cfg.mu, "shear modulus");
    sub->add_option("--out", cfg.output_path, "output directory");
    sub->add_option("--format", cfg.format, "table format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"csv", Format::csv}, {"json", Format::json}},
                                            CLI::ignore_case));
    if (crack) {
        sub->add_option("--n", cfg.n, "number of collocation nodes");
        sub->add_option("--sigma0", cfg.sigma0, "remote tension");
        sub->add_option("--a", cfg.a, "crack half length");
    }
}

}  // namespace

int run(int argc, char** argv)
{
    RunConfig cfg;
    CLI::App app{"Mode I crack in couple-stress elasticity by distributed dislocations and disclinations"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve one crack problem");
    add_common(solve, cfg, true);
    solve->add_option("--p", cfg.p, "a / l");
    solve->add_option("--profile-samples", cfg.profile_samples, "points on the crack faces");
    solve->add_option("--tip-samples", cfg.tip_samples, "points ahead of the tip");

    auto* sweep = app.add_subcommand("sweep", "sweep a/l and nu");
    add_common(sweep, cfg, true);
    sweep->add_option("--p-min", cfg.p_min, "smallest a / l");
    sweep->add_option("--p-max", cfg.p_max, "largest a / l");
    sweep->add_option("--p-steps", cfg.p_steps, "number of a / l values");
    sweep->add_flag("--log-spaced", cfg.log_spaced, "log spacing in a / l");
    sweep->add_option("--nu-list", cfg.nu_list, "Poisson ratios")->delimiter(',');

    auto* field = app.add_subcommand("field", "full field of a single defect on a grid");
    add_common(field, cfg, false);
    field->add_option("--ell", cfg.ell, "characteristic length");
    field->add_option("--burgers", cfg.burgers, "climb Burgers vector");
    field->add_option("--frank", cfg.frank, "wedge disclination angle");
    field->add_option("--x-min", cfg.x_min);
    field->add_option("--x-max", cfg.x_max);
    field->add_option("--x-steps", cfg.x_steps);
    field->add_option("--y-min", cfg.y_min);
    field->add_option("--y-max", cfg.y_max);
    field->add_option("--y-steps", cfg.y_steps);

    auto* base = app.add_subcommand("baseline", "classical crack, closed form and collocation");
    add_common(base, cfg, true);
    base->add_option("--profile-samples", cfg.profile_samples, "points on the crack faces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("config", e.what());
        return 1;
    }

    if (solve->parsed())
        cfg.command = Command::solve;
    else if (sweep->parsed())
        cfg.command = Command::sweep;
    else if (field->parsed())
        cfg.command = Command::field;
    else
        cfg.command = Command::baseline;

    try {
        cfg.validate();
        std::vector<fs::path> files;
        switch (cfg.command) {
        case Command::solve: files = cmd_solve(cfg); break;
        case Command::sweep: files = cmd_sweep(cfg); break;
        case Command::field: files = cmd_field(cfg); break;
        case Command::baseline: files = cmd_baseline(cfg); break;
        }
        for (const auto& f : files)
            std::cout << f.string() << '\n';
        return 0;
    } catch (const ConfigError& e) {
        print_error("config", e.what());
        return 1;
    } catch (const sie::SolverError& e) {
        print_error("numerical", e.what());
        return 2;
    } catch (const std::exception& e) {
        print_error("numerical", e.what());
        return 2;
    }
}

}  // namespace csdd::cli
