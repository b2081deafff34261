// ifsecon: command-line front end.
// Exit codes: 0 success, 2 invalid input, 3 non-convergence (output still written).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ifsecon/box_set.hpp"
#include "ifsecon/chaos_game.hpp"
#include "ifsecon/dimension.hpp"
#include "ifsecon/econ/growth.hpp"
#include "ifsecon/econ/utility.hpp"
#include "ifsecon/errors.hpp"
#include "ifsecon/io.hpp"
#include "ifsecon/render.hpp"

using namespace ifsecon;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kNotConverged = 3;

// Writes a whole file at once so invalid runs never leave partial output.
void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), "cannot open '" + path + "' for writing");
    out << bytes;
    out.close();
    require(!out.fail(), "write to '" + path + "' failed");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct GrowthFlags {
    std::string params;
    std::optional<double> rho, la, lb, q;

    void attach(CLI::App* cmd) {
        cmd->add_option("--params", params, "JSON file with rho, lambda_a, lambda_b, q");
        cmd->add_option("--rho", rho, "discount factor in (0, 1)");
        cmd->add_option("--la", la, "good shock lambda_a > 1");
        cmd->add_option("--lb", lb, "bad shock lambda_b < 1");
        cmd->add_option("--q", q, "probability of the good shock");
    }

    econ::GrowthParams resolve() const {
        json j = json::object();
        if (!params.empty()) j = io::load_json(params);
        require(j.is_object(), "growth params must be a JSON object");
        if (rho) j["rho"] = *rho;
        if (la) j["lambda_a"] = *la;
        if (lb) j["lambda_b"] = *lb;
        if (q) j["q"] = *q;
        for (const char* key : {"rho", "lambda_a", "lambda_b", "q"}) {
            require(j.contains(key), std::string("growth: missing parameter ") + key);
        }
        return io::growth_params_from_json(j);
    }
};

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw InvalidArgument("not a number: '" + item + "'");
        }
        require(used == item.size(), "not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

int run_attractor(const std::string& spec, double eps, int max_iter, const std::string& out) {
    const IfsSystem sys = io::load_ifs(spec);
    const AttractorResult r = compute_attractor(sys, eps, max_iter);
    std::ostringstream csv;
    io::write_box_set(csv, r.cells);
    write_file(out, csv.str());
    json j;
    j["cells"] = r.cells.size();
    j["iterations"] = r.iterations;
    j["final_dH"] = r.final_dh;
    j["converged"] = r.converged;
    j["apriori_iterations"] = r.apriori_iterations;
    j["groups"] = connected_groups(r.cells);
    if (sys.has_region()) j["region_occupancy"] = region_occupancy(r.cells, sys.region());
    print(j);
    return r.converged ? kOk : kNotConverged;
}

int run_chaos(const std::string& spec, std::size_t n, std::size_t burn, std::uint64_t seed,
              const std::vector<double>& x0_flag, const std::string& out) {
    const IfsSystem sys = io::load_ifs(spec);
    require(n > burn, "chaos: --n must exceed --burn");
    State x0 = sys.map(0).fixed_point();
    if (!x0_flag.empty()) {
        require(static_cast<int>(x0_flag.size()) == sys.dim(), "chaos: --x0 needs dim coordinates");
        x0 = {x0_flag[0], sys.dim() == 2 ? x0_flag[1] : 0.0};
    }
    const PointCloud cloud = chaos_game(sys, x0, n, burn, seed);
    std::ostringstream csv;
    io::write_point_cloud(csv, cloud);
    write_file(out, csv.str());
    print({{"points", cloud.size()}});
    return kOk;
}

int run_dim_box(const std::string& in, std::optional<double> eps0, double factor,
                std::optional<int> levels, bool report) {
    std::ifstream file(in);
    require(static_cast<bool>(file), "cannot open '" + in + "'");
    const PointCloud cloud = io::read_point_cloud(file);
    require(!cloud.empty(), "dim box: empty point cloud");
    std::optional<EpsSchedule> sched;
    if (eps0) {
        sched.emplace(*eps0, factor, levels.value_or(6));
    } else {
        const EpsSchedule auto_sched = default_schedule(cloud, factor);
        sched.emplace(auto_sched.eps0, auto_sched.factor, levels.value_or(auto_sched.levels));
    }
    const DimensionReport r = box_dimension(cloud, *sched);
    if (report) {
        print(io::dimension_report_to_json(r));
    } else {
        print({{"dimension", r.slope}});
    }
    return kOk;
}

int run_growth_attractor(const econ::GrowthParams& g, double eps, int max_iter,
                         const std::string& out, const std::string& unit_out) {
    const IfsSystem sys = econ::log_capital_ifs(g);
    // Grid edge scaled so one kappa cell maps onto one unit cell.
    const AttractorResult r = compute_attractor(sys, eps * (g.beta() - g.alpha()), max_iter);
    const BoxSet unit = econ::conjugate_box_set(g, r.cells, eps);
    const AttractorResult cantor = compute_attractor(cantor_system(3.0), eps, max_iter);
    const double dh = hausdorff_distance(unit, cantor.cells);

    std::ostringstream kcsv, ucsv;
    io::write_box_set(kcsv, r.cells);
    io::write_box_set(ucsv, unit);
    write_file(out, kcsv.str());
    if (!unit_out.empty()) write_file(unit_out, ucsv.str());

    json j;
    j["alpha"] = g.alpha();
    j["beta"] = g.beta();
    j["cells"] = r.cells.size();
    j["iterations"] = r.iterations;
    j["final_dH"] = r.final_dh;
    j["converged"] = r.converged;
    j["unit_cells"] = unit.size();
    j["dH_vs_unit_cantor"] = dh;
    print(j);
    return r.converged && cantor.converged ? kOk : kNotConverged;
}

int run_verify_policy(const econ::GrowthParams& g, int grid, int iters) {
    const econ::PolicyTable t = econ::solve_growth_numerically(g, grid, iters);
    double max_residual = 0.0;
    for (double y : t.y) max_residual = std::max(max_residual, econ::euler_residual(g, y));
    // The outer tenth of the grid on each side feels the extrapolation.
    const std::size_t skip = t.y.size() / 10;
    const double share = 1.0 - g.rho / 3.0;
    double gap = 0.0;
    for (std::size_t j = skip; j + skip < t.y.size(); ++j) {
        gap = std::max(gap, std::abs(t.c[j] / t.y[j] - share));
    }
    print({{"max_euler_residual", max_residual},
           {"max_policy_gap_vs_value_iteration", gap},
           {"value_iterations", t.iterations},
           {"converged", t.converged}});
    return t.converged ? kOk : kNotConverged;
}

int run_render(const std::string& in, const std::string& out, int width, int height, double gamma) {
    std::ifstream file(in);
    require(static_cast<bool>(file), "cannot open '" + in + "'");
    const PointCloud cloud = io::read_point_cloud(file);
    const RenderCanvas canvas = rasterize(cloud, width, height);
    std::ostringstream pgm(std::ios::binary);
    canvas.write_pgm(pgm, gamma);
    write_file(out, pgm.str());
    return kOk;
}

std::string utility_csv(const econ::UtilityPath& path) {
    std::ostringstream csv;
    csv << "n,shock,u\n";
    for (std::size_t n = 0; n < path.values.size(); ++n) {
        csv << n << ',';
        if (n > 0) csv << io::format_double(path.shocks[n - 1]);
        csv << ',' << io::format_double(path.values[n]) << '\n';
    }
    return csv.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated function systems, fractal dimension and stochastic growth"};
    app.require_subcommand(1);

    auto* attractor = app.add_subcommand("attractor", "grid fixed point of the Hutchinson operator");
    std::string a_spec, a_out;
    double a_eps = 0.0;
    int a_max_iter = 200;
    attractor->add_option("spec", a_spec, "IFS spec JSON")->required();
    attractor->add_option("--eps", a_eps, "grid edge")->required();
    attractor->add_option("--max-iter", a_max_iter, "iteration cap");
    attractor->add_option("--out", a_out, "BoxSet CSV")->required();

    auto* chaos = app.add_subcommand("chaos", "chaos-game point cloud");
    std::string c_spec, c_out;
    std::size_t c_n = 0, c_burn = 0;
    std::uint64_t c_seed = 0;
    std::string c_x0;
    chaos->add_option("spec", c_spec, "IFS spec JSON (with pi)")->required();
    chaos->add_option("--n", c_n, "iterations")->required();
    chaos->add_option("--burn", c_burn, "leading iterates to drop");
    chaos->add_option("--seed", c_seed, "RNG seed");
    chaos->add_option("--x0", c_x0, "start state, comma separated (default: fixed point of map 0)");
    chaos->add_option("--out", c_out, "point CSV")->required();

    auto* dim = app.add_subcommand("dim", "fractal dimension");
    dim->require_subcommand(1);
    auto* dim_sim = dim->add_subcommand("similarity", "root of sum r_i^d = 1");
    std::string d_ratios;
    dim_sim->add_option("--ratios", d_ratios, "comma-separated contraction ratios")->required();
    auto* dim_box = dim->add_subcommand("box", "box-counting slope of a point cloud");
    std::string d_in;
    std::optional<double> d_eps0;
    double d_factor = 2.0;
    std::optional<int> d_levels;
    bool d_report = false;
    dim_box->add_option("--in", d_in, "point CSV")->required();
    dim_box->add_option("--eps0", d_eps0, "coarsest cell edge");
    dim_box->add_option("--factor", d_factor, "refinement factor per level");
    dim_box->add_option("--levels", d_levels, "number of levels");
    dim_box->add_flag("--report", d_report, "print the full report");

    auto* growth = app.add_subcommand("growth", "one-sector stochastic growth");
    growth->require_subcommand(1);
    GrowthFlags g_flags;
    auto* g_sim = growth->add_subcommand("simulate", "closed-form path CSV");
    double g_k0 = 0.1;
    int g_T = 1000;
    std::uint64_t g_seed = 0;
    std::string g_out, g_unit_out;
    g_flags.attach(g_sim);
    g_sim->add_option("--k0", g_k0, "initial capital");
    g_sim->add_option("--T", g_T, "periods after the first");
    g_sim->add_option("--seed", g_seed, "RNG seed");
    g_sim->add_option("--out", g_out, "GrowthPath CSV")->required();
    auto* g_verify = growth->add_subcommand("verify-policy", "closed form against value iteration");
    int g_grid = 500, g_iters = 2000;
    g_flags.attach(g_verify);
    g_verify->add_option("--grid", g_grid, "output grid size");
    g_verify->add_option("--iters", g_iters, "value-iteration sweep cap");
    auto* g_attr = growth->add_subcommand("attractor", "log-capital attractor and its conjugate");
    double g_eps = 1.0 / 243.0;
    int g_max_iter = 200;
    g_flags.attach(g_attr);
    g_attr->add_option("--eps", g_eps, "unit-interval grid edge");
    g_attr->add_option("--max-iter", g_max_iter, "iteration cap");
    g_attr->add_option("--out", g_out, "log-capital BoxSet CSV")->required();
    g_attr->add_option("--unit-out", g_unit_out, "conjugated unit-interval BoxSet CSV");

    auto* render = app.add_subcommand("render", "rasterize a point cloud to PGM");
    std::string r_in, r_out;
    int r_width = 512, r_height = 512;
    double r_gamma = 0.5;
    render->add_option("--in", r_in, "point CSV")->required();
    render->add_option("--out", r_out, "PGM image")->required();
    render->add_option("--width", r_width, "pixels");
    render->add_option("--height", r_height, "pixels");
    render->add_option("--gamma", r_gamma, "intensity exponent");

    auto* utility = app.add_subcommand("utility", "random utility processes");
    utility->require_subcommand(1);
    std::string u_params, u_out;
    int u_n = 1000;
    std::uint64_t u_seed = 0;
    auto* u_mul = utility->add_subcommand("multiplicative", "U_n = xi_n U_{n-1}");
    auto* u_aff = utility->add_subcommand("affine", "U_n = rho U_{n-1} + eps_n");
    for (auto* cmd : {u_mul, u_aff}) {
        cmd->add_option("--params", u_params, "parameter JSON")->required();
        cmd->add_option("--n", u_n, "steps");
        cmd->add_option("--seed", u_seed, "RNG seed");
        cmd->add_option("--out", u_out, "path CSV")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*attractor) return run_attractor(a_spec, a_eps, a_max_iter, a_out);
        if (*chaos) return run_chaos(c_spec, c_n, c_burn, c_seed, c_x0.empty() ? std::vector<double>{} : parse_list(c_x0), c_out);
        if (*dim_sim) {
            print({{"dimension", similarity_dimension(parse_list(d_ratios))}});
            return kOk;
        }
        if (*dim_box) return run_dim_box(d_in, d_eps0, d_factor, d_levels, d_report);
        if (*g_sim) {
            const econ::GrowthParams g = g_flags.resolve();
            std::ostringstream csv;
            io::write_growth_path(csv, econ::simulate_growth(g, g_k0, g_T, g_seed));
            write_file(g_out, csv.str());
            return kOk;
        }
        if (*g_verify) return run_verify_policy(g_flags.resolve(), g_grid, g_iters);
        if (*g_attr) return run_growth_attractor(g_flags.resolve(), g_eps, g_max_iter, g_out, g_unit_out);
        if (*render) return run_render(r_in, r_out, r_width, r_height, r_gamma);
        if (*u_mul) {
            const auto p = io::multiplicative_params_from_json(io::load_json(u_params));
            write_file(u_out, utility_csv(econ::simulate_multiplicative_utility(p, u_n, u_seed)));
            return kOk;
        }
        if (*u_aff) {
            const auto p = io::affine_params_from_json(io::load_json(u_params));
            write_file(u_out, utility_csv(econ::simulate_affine_utility(p, u_n, u_seed)));
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
