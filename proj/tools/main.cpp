#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tifs/address.hpp"
#include "tifs/config.hpp"
#include "tifs/dynamics.hpp"
#include "tifs/geometry.hpp"
#include "tifs/render.hpp"
#include "tifs/symbolic.hpp"
#include "tifs/system.hpp"
#include "tifs/tiling.hpp"

namespace {

using namespace tifs;

std::string g17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout.write(content.data(), static_cast<std::streamsize>(content.size()));
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ConfigError, "cannot open output file '" + out_path + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string describe_map(const AffineMap& map) {
    std::string line = "exp=" + std::to_string(map.exponent()) + " linear=[";
    Matrix linear = map.linear();
    for (Eigen::Index r = 0; r < linear.rows(); ++r)
        for (Eigen::Index c = 0; c < linear.cols(); ++c) {
            if (r + c > 0) line += ",";
            line += g17(linear(r, c));
        }
    line += "] shift=[";
    for (Eigen::Index i = 0; i < map.shift().size(); ++i) {
        if (i > 0) line += ",";
        line += g17(map.shift()(i));
    }
    line += "]";
    return line;
}

std::string dump_tiling(const System& system, const Tiling& tiling, int depth) {
    std::string out;
    std::optional<PointCloud> components;
    if (system.dimension() >= 2 && depth > 0) components = attractor_deterministic(system, depth);
    for (std::size_t index : display_order(system, tiling)) {
        const Tile& tile = tiling.tiles[index];
        out += tile.context.str() + "." + tile.body.str();
        out += " vertex=" + std::to_string(tile.prototile.vertex);
        out += " letter=" + std::string(1, letter_for_exponent(tile.prototile.scale_exponent));
        out += " " + describe_map(tile.map);
        if (system.dimension() == 1) {
            Interval support = support_interval(system, tile);
            out += " support=[" + g17(support.lo) + "," + g17(support.hi) + "]";
        } else if (components) {
            PointCloud cloud = realize_tile(system, *components, tile);
            Viewport box = fit_viewport(cloud, 0.0);
            out += " bbox=[" + g17(box.x0) + "," + g17(box.x1) + "," + g17(box.y0) + "," + g17(box.y1) + "]";
        }
        out += "\n";
    }
    return out;
}

Viewport parse_viewport(const std::vector<double>& values) {
    if (values.size() == 2) return {values[0], values[1], 0.0, 1.0};
    if (values.size() == 4) return {values[0], values[1], values[2], values[3]};
    throw Error(ErrorKind::ConfigError, "--viewport needs x0,x1[,y0,y1]");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tiling iterated function systems: symbolic tilings, blow-ups, addresses, dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    app.add_option("--config", config_path, "system configuration (JSON)")->required();
    app.add_option("--out", out_path, "output file (default: stdout)");

    auto* cmd_validate = app.add_subcommand("validate", "check a system description");

    int level = 0;
    std::optional<int> root;
    auto* cmd_omega = app.add_subcommand("omega", "enumerate a symbolic tiling level");
    cmd_omega->add_option("-k,--level", level, "level k")->required();
    cmd_omega->add_option("--root", root, "restrict to words rooted at this vertex");

    std::string theta_text;
    int depth = 6;
    auto* cmd_tiles = app.add_subcommand("tiles", "tiles of the blow-up tiling of a reversed word");
    cmd_tiles->add_option("--theta", theta_text, "reversed context word (may be empty)");
    cmd_tiles->add_option("--depth", depth, "cloud depth for 2D bounding boxes");
    cmd_tiles->add_option("--root", root, "body root when theta is empty and V > 1");

    auto* cmd_addresses = app.add_subcommand("addresses", "relative and absolute tile addresses");
    cmd_addresses->add_option("--theta", theta_text, "reversed context word (may be empty)");
    cmd_addresses->add_option("--root", root, "body root when theta is empty and V > 1");

    auto* cmd_attractor = app.add_subcommand("attractor", "deterministic attractor point cloud");
    cmd_attractor->add_option("--depth", depth, "refinement depth")->required();

    std::size_t n_points = 100000;
    std::uint64_t rng_seed = 1;
    double seed_value = 0.0;
    std::size_t burn_in = 64;
    auto* cmd_chaos = app.add_subcommand("chaos", "chaos game point cloud");
    cmd_chaos->add_option("--points", n_points, "points to emit");
    cmd_chaos->add_option("--rng-seed", rng_seed, "random generator seed");
    cmd_chaos->add_option("--seed-value", seed_value, "starting coordinate");
    cmd_chaos->add_option("--burn-in", burn_in, "points discarded before emission");

    auto* cmd_dimension = app.add_subcommand("dimension", "Hausdorff dimension under the OSC");

    std::string psi_text;
    int bound = 4;
    auto* cmd_equiv = app.add_subcommand("equiv", "search for a tiling equivalence witness");
    cmd_equiv->add_option("--theta", theta_text)->required();
    cmd_equiv->add_option("--psi", psi_text)->required();
    cmd_equiv->add_option("--bound", bound, "truncation search bound");

    auto* cmd_inflate = app.add_subcommand("inflate", "inflate the canonical tiling of a level");
    cmd_inflate->add_option("--level", level, "canonical level k")->required();
    cmd_inflate->add_option("--root", root, "root vertex");

    auto* cmd_deflate = app.add_subcommand("deflate", "deflate the canonical tiling of a level");
    cmd_deflate->add_option("--level", level, "canonical level k")->required();
    cmd_deflate->add_option("--root", root, "root vertex");

    double tolerance = 1e-6;
    int word_bound = 0;
    auto* cmd_rigidity = app.add_subcommand("rigidity", "local-rigidity neighbor-map heuristic");
    cmd_rigidity->add_option("--depth", depth, "cloud depth")->required();
    cmd_rigidity->add_option("--tolerance", tolerance, "coverage tolerance");
    cmd_rigidity->add_option("--bound", word_bound, "xi bound for candidate isometries");

    std::string cloud_kind;
    int width = 800, height = 600;
    std::vector<double> viewport_values;
    auto* cmd_render = app.add_subcommand("render", "SVG tiling or PPM point-cloud image");
    auto* opt_theta = cmd_render->add_option("--theta", theta_text, "reversed word: render its blow-up (SVG)");
    cmd_render->add_option("--level", level, "canonical level to render (SVG)");
    cmd_render->add_option("--cloud", cloud_kind, "det|chaos: render a point cloud (PPM)");
    cmd_render->add_option("--width", width);
    cmd_render->add_option("--height", height);
    cmd_render->add_option("--depth", depth, "realization depth");
    cmd_render->add_option("--points", n_points, "chaos points");
    cmd_render->add_option("--rng-seed", rng_seed);
    cmd_render->add_option("--viewport", viewport_values, "x0,x1[,y0,y1]")->delimiter(',');
    cmd_render->add_option("--root", root, "root vertex");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_validate->parsed()) {
            SystemConfig config = load_config(config_path);
            ValidationResult result = validate_tifs(config);
            for (const auto& warning : result.warnings)
                std::cerr << "warning: " << to_string(warning.kind) << ": " << warning.detail << "\n";
            if (!result.ok()) {
                for (const auto& error : result.errors)
                    std::cerr << "error: " << to_string(error.kind) << ": " << error.detail << "\n";
                return 1;
            }
            const System& system = *result.system;
            write_output(out_path, "valid: N=" + std::to_string(system.map_count()) +
                                       " V=" + std::to_string(system.vertex_count()) +
                                       " a_max=" + std::to_string(system.a_max()) + "\n");
            return 0;
        }

        System system = load_system(config_path);

        if (cmd_omega->parsed()) {
            SymbolicTiling tiling = omega(system, level, root);
            std::string out;
            for (const Word& word : tiling.words) {
                int value = system.xi(word);
                out += word.str() + " xi=" + std::to_string(value) + " " +
                       std::string(1, letter_for_exponent(value - level)) + "\n";
            }
            write_output(out_path, out);
        } else if (cmd_tiles->parsed()) {
            Word theta = Word::parse(theta_text, Orientation::Reversed);
            Tiling tiling = tiling_of(system, theta, root);
            write_output(out_path, dump_tiling(system, tiling, depth));
        } else if (cmd_addresses->parsed()) {
            Word theta = Word::parse(theta_text, Orientation::Reversed);
            Tiling tiling = tiling_of(system, theta, root);
            std::string out;
            for (std::size_t index : display_order(system, tiling)) {
                const Tile& tile = tiling.tiles[index];
                DottedAddress absolute = absolute_addresses(system, tile, theta).front();
                out += "∅." + tile.body.str() + " " + absolute.str() + "\n";
            }
            write_output(out_path, out);
        } else if (cmd_attractor->parsed()) {
            write_output(out_path, format_cloud(attractor_deterministic(system, depth)));
        } else if (cmd_chaos->parsed()) {
            write_output(out_path, format_cloud(chaos_game(system, n_points, seed_value, rng_seed, burn_in)));
        } else if (cmd_dimension->parsed()) {
            char buffer[40];
            std::snprintf(buffer, sizeof(buffer), "%.10f\n", hausdorff_dimension_osc(system));
            write_output(out_path, buffer);
        } else if (cmd_equiv->parsed()) {
            Word theta = Word::parse(theta_text, Orientation::Reversed);
            Word psi = Word::parse(psi_text, Orientation::Reversed);
            std::optional<EquivalenceWitness> witness = check_equivalence(system, theta, psi, bound);
            if (witness) {
                write_output(out_path, "witness p=" + std::to_string(witness->p) +
                                           " q=" + std::to_string(witness->q) + " " +
                                           describe_map(witness->isometry) + "\n");
            } else {
                write_output(out_path, "inconclusive: no witness with p,q <= " + std::to_string(bound) + "\n");
            }
        } else if (cmd_inflate->parsed()) {
            Tiling tiling = inflate(system, canonical_tiling(system, level, root));
            write_output(out_path, dump_tiling(system, tiling, 0));
        } else if (cmd_deflate->parsed()) {
            Tiling tiling = deflate(system, canonical_tiling(system, level, root));
            write_output(out_path, dump_tiling(system, tiling, 0));
        } else if (cmd_rigidity->parsed()) {
            RigidityReport report = neighbor_map_check(system, depth, tolerance, word_bound);
            std::string out;
            switch (report.outcome) {
            case RigidityReport::Outcome::Passes:
                out = "passes: no witness at depth " + std::to_string(report.depth) + ", xi bound " +
                      std::to_string(report.word_bound) + " (heuristic, not a proof)\n";
                break;
            case RigidityReport::Outcome::Fails:
                out = "fails: " + std::to_string(report.witnesses.size()) + " witness(es)\n";
                for (const auto& witness : report.witnesses) out += describe_map(witness) + "\n";
                break;
            case RigidityReport::Outcome::Inconclusive:
                out = "inconclusive\n";
                break;
            }
            write_output(out_path, out);
        } else if (cmd_render->parsed()) {
            RenderSpec spec;
            spec.width = width;
            spec.height = height;
            spec.depth = depth;
            if (!cloud_kind.empty()) {
                PointCloud cloud = cloud_kind == "chaos"
                                       ? chaos_game(system, n_points, seed_value, rng_seed)
                                       : attractor_deterministic(system, depth);
                spec.viewport = viewport_values.empty() ? fit_viewport(cloud) : parse_viewport(viewport_values);
                write_output(out_path, render_ppm(cloud, spec));
            } else {
                Tiling tiling = *opt_theta
                                    ? tiling_of(system, Word::parse(theta_text, Orientation::Reversed), root)
                                    : canonical_tiling(system, level, root);
                spec.viewport =
                    viewport_values.empty() ? fit_viewport(system, tiling) : parse_viewport(viewport_values);
                write_output(out_path, render_svg(system, tiling, spec));
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
