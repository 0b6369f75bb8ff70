#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mms/embed.hpp"
#include "mms/io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDomain = 3;
constexpr int kExitSizeGuard = 4;

mms::Space load_space(const std::string& path, const std::string& mass_path, double p) {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return mms::io::read_graph_json(path);
    // CSV: a header starting with "x0" means a points file
    std::ifstream probe(path);
    std::string first;
    std::getline(probe, first);
    if (first.rfind("x0", 0) == 0) return mms::io::read_points_csv(path, p);
    return mms::io::read_matrix_csv(path, mass_path);
}

void emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        mms::io::write_text_atomic(out_path, text);
}

mms::QVariant parse_variant(const std::string& v) {
    if (v == "general") return mms::QVariant::general;
    if (v == "midpoint" || v == "euclidean_midpoint") return mms::QVariant::euclidean_midpoint;
    if (v == "plain" || v == "plain_snowflake") return mms::QVariant::plain_snowflake;
    throw std::invalid_argument("unknown variant: " + v);
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* t = std::getenv("MMS_THREADS")) omp_set_num_threads(std::atoi(t));
#endif

    CLI::App app{"sampling toolkit for finite metric measure spaces"};
    app.require_subcommand(1);

    std::string input, mass_path, out_path, variant = "general", kind = "hausdorff";
    std::string mu_path, nu_path, space2_path;
    double eps = 0.25, s = 0.5, K = 0.0, N = 2.0, D = 1.0, tol = -1.0, p = 2.0, a_param = 0.5;
    std::size_t dim = 2, max_dim = 3;
    unsigned seed = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "space file (points CSV, graph JSON, or matrix CSV)")
            ->required();
        cmd->add_option("--mass", mass_path, "companion mass CSV for matrix input");
        cmd->add_option("--p", p, "l_p exponent for points input");
        cmd->add_option("--out", out_path, "output path (stdout if omitted)");
    };

    auto* c_validate = app.add_subcommand("validate", "check a raw matrix against the metric axioms");
    add_input(c_validate);
    c_validate->add_option("--tol", tol, "triangle tolerance");

    auto* c_net = app.add_subcommand("net", "greedy minimal epsilon-net");
    add_input(c_net);
    c_net->add_option("--eps", eps, "net radius")->required();
    c_net->add_option("--seed", seed, "seed point index");

    auto* c_snow = app.add_subcommand("snowflake", "measure quasimetric q_{mu,s}");
    add_input(c_snow);
    c_snow->add_option("--s", s, "snowflake exponent");
    c_snow->add_option("--variant", variant, "general | midpoint | plain");

    auto* c_reg = app.add_subcommand("regularity", "doubling / Ahlfors / perfectness report");
    add_input(c_reg);

    auto* c_curv = app.add_subcommand("curvature", "profile table, net bounds, Bishop-Gromov test");
    add_input(c_curv);
    c_curv->add_option("--K", K, "curvature lower bound");
    c_curv->add_option("--N", N, "effective dimension");
    c_curv->add_option("--D", D, "diameter bound");
    c_curv->add_option("--eps", eps, "net radius for the bounds report");
    c_curv->add_option("--tol", tol, "Bishop-Gromov relative tolerance");

    auto* c_dist = app.add_subcommand("distance", "hausdorff | prokhorov | w2 | ghp | gh");
    add_input(c_dist);
    c_dist->add_option("--kind", kind)->required();
    c_dist->add_option("--mu", mu_path, "weights CSV for the first measure");
    c_dist->add_option("--nu", nu_path, "weights CSV for the second measure");
    c_dist->add_option("--space2", space2_path, "second space (gh only)");
    c_dist->add_option("--tol", tol, "binary search tolerance");

    auto* c_disc = app.add_subcommand("discretize", "Voronoi discretization + nerve complex");
    add_input(c_disc);
    c_disc->add_option("--eps", eps, "net radius")->required();
    c_disc->add_option("--seed", seed, "seed point index");
    c_disc->add_option("--max-dim", max_dim, "nerve dimension cap");

    auto* c_embed = app.add_subcommand("embed", "low-distortion embedding search");
    add_input(c_embed);
    c_embed->add_option("--eps", a_param, "snowflake exponent (1 = plain metric)");
    c_embed->add_option("--dim", dim, "target dimension")->required();
    c_embed->add_option("--seed", seed, "optimizer seed");

    auto* c_report = app.add_subcommand("report", "consolidated sampling report");
    add_input(c_report);
    c_report->add_option("--K", K, "curvature lower bound");
    c_report->add_option("--N", N, "effective dimension");
    c_report->add_option("--eps", eps, "net radius");
    c_report->add_option("--seed", seed, "net seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) {
            std::vector<double> dist;
            std::size_t n = 0;
            mms::io::read_raw_matrix(input, dist, n);
            std::vector<double> masses =
                mass_path.empty() ? std::vector<double>(n, 1.0) : mms::io::read_mass_csv(mass_path);
            double t = tol;
            if (t < 0.0) {
                double dmax = 0.0;
                for (double v : dist) dmax = std::max(dmax, v);
                t = 1e-9 * dmax;
            }
            const auto rep = mms::validate(dist, n, masses, t);
            emit(mms::io::validation_to_json(rep), out_path);
            return rep.ok() ? kExitOk : kExitValidation;
        }

        if (c_net->parsed()) {
            const auto space = load_space(input, mass_path, p);
            const auto net = mms::minimal_epsilon_net(space, eps, seed);
            emit(mms::io::net_to_json(space, net), out_path);
            return kExitOk;
        }

        if (c_snow->parsed()) {
            const auto space = load_space(input, mass_path, p);
            const auto q = mms::quasimetric_q(space, s, parse_variant(variant));
            if (!out_path.empty()) {
                mms::io::write_quasimetric_csv(out_path, q);
                mms::io::write_text_atomic(out_path + ".json",
                                           mms::io::quasimetric_sidecar(q).dump(2) + "\n");
            } else {
                std::cout << mms::io::quasimetric_sidecar(q).dump(2) << "\n";
            }
            return kExitOk;
        }

        if (c_reg->parsed()) {
            const auto space = load_space(input, mass_path, p);
            emit(mms::io::regularity_to_json(mms::regularity_report(space)), out_path);
            return kExitOk;
        }

        if (c_curv->parsed()) {
            const auto space = load_space(input, mass_path, p);
            json doc;
            doc["bounds"] = mms::io::bounds_to_json(
                mms::bounds_report(K, N, std::max(D, space.diameter()), eps));
            doc["bishop_gromov"] = mms::io::bg_to_json(
                mms::bishop_gromov_test(space, K, N, tol > 0.0 ? tol : 0.15));
            // profile table: t, S, integral of S
            json table = json::array();
            const double hi = std::min(space.diameter(), mms::conjugate_radius(K, N));
            for (int i = 1; i <= 32; ++i) {
                const double t = hi * i / 32.0;
                table.push_back({{"t", t},
                                 {"S", mms::s_profile(K, N, t)},
                                 {"intS", mms::volume_profile(K, N, t)}});
            }
            doc["profile"] = table;
            emit(doc, out_path);
            return kExitOk;
        }

        if (c_dist->parsed()) {
            const auto space = load_space(input, mass_path, p);
            mms::DistanceResult res;
            if (kind == "gh") {
                if (space2_path.empty()) throw std::invalid_argument("gh needs --space2");
                const auto other = load_space(space2_path, "", p);
                res = mms::gromov_hausdorff_bruteforce(space, other);
            } else {
                auto mu = mms::make_probability_measure(
                    mu_path.empty() ? space.masses() : mms::io::read_mass_csv(mu_path));
                auto nu = mms::make_probability_measure(
                    nu_path.empty() ? space.masses() : mms::io::read_mass_csv(nu_path));
                if (kind == "prokhorov") res = mms::prokhorov(space, mu, nu, tol);
                else if (kind == "w2") res = mms::wasserstein2(space, mu, nu);
                else if (kind == "ghp") res = mms::ghp_common(space, mu, nu);
                else if (kind == "hausdorff") {
                    std::vector<std::size_t> A, B;
                    for (std::size_t i = 0; i < space.size(); ++i) {
                        if (mu.weights[i] > 0.0) A.push_back(i);
                        if (nu.weights[i] > 0.0) B.push_back(i);
                    }
                    res = mms::hausdorff(space, A, B);
                } else throw std::invalid_argument("unknown distance kind: " + kind);
            }
            emit(mms::io::distance_to_json(res), out_path);
            return kExitOk;
        }

        if (c_disc->parsed()) {
            const auto space = load_space(input, mass_path, p);
            const auto net = mms::minimal_epsilon_net(space, eps, seed);
            const auto d = mms::voronoi_discretize(space, net);
            json doc = mms::io::discretization_to_json(space, d);
            doc["nerve"] = mms::io::nerve_to_json(mms::nerve_complex(space, net, max_dim));
            emit(doc, out_path);
            return kExitOk;
        }

        if (c_embed->parsed()) {
            const auto space = load_space(input, mass_path, p);
            const auto res = mms::embed_snowflake(space, a_param, dim, seed);
            json doc{{"distortion_L", res.distortion_L},
                     {"scale", res.scale},
                     {"iterations", res.iterations},
                     {"converged", res.converged},
                     {"N", res.N}};
            emit(doc, out_path);
            if (!out_path.empty()) mms::io::write_coords_csv(out_path + ".coords.csv", res.coords);
            return kExitOk;
        }

        if (c_report->parsed()) {
            const auto space = load_space(input, mass_path, p);
            json doc;
            doc["validation"] = mms::io::validation_to_json(
                mms::validate(space.dist_matrix(), space.size(), space.masses(),
                              1e-9 * space.diameter()));
            doc["regularity"] = mms::io::regularity_to_json(mms::regularity_report(space));
            const double net_eps = std::min(eps, space.diameter());
            const auto net = mms::minimal_epsilon_net(space, net_eps, seed);
            doc["net"] = mms::io::net_to_json(space, net);
            if (space.size() > 1) {
                doc["bounds"] = mms::io::bounds_to_json(
                    mms::bounds_report(K, N, space.diameter(), net_eps));
                doc["net_within_n1"] =
                    static_cast<long>(net.centers.size()) <= doc["bounds"]["n1"].get<long>();
            }
            doc["bishop_gromov"] =
                mms::io::bg_to_json(mms::bishop_gromov_test(space, K, N, 0.15));
            emit(doc, out_path);
            return kExitOk;
        }
    } catch (const mms::size_guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
