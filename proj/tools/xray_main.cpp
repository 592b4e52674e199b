// xray: admissibility checking, reconstruction, enumeration, sampling, and
// brute-force verification for line complexes over N labeled points.
//
// Exit codes: 0 success; 1 domain error (inadmissible input to reconstruct,
// inconsistent sums, budget refusal, ...); 2 usage or input-parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "xray/bigint.hpp"
#include "xray/enumerate.hpp"
#include "xray/errors.hpp"
#include "xray/montecarlo.hpp"
#include "xray/oracle.hpp"
#include "xray/space.hpp"
#include "xray/structure.hpp"
#include "xray/transform.hpp"

namespace {

using nlohmann::json;
using namespace xray;

std::string type_key(const CycleType& t) { return to_string(t); }

std::string format_factorization(const std::vector<std::pair<BigInt, unsigned>>& f) {
    if (f.empty()) return "1";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out << " * ";
        out << f[i].first.str();
        if (f[i].second > 1) out << "^" << f[i].second;
    }
    return out.str();
}

json factorization_json(const std::vector<std::pair<BigInt, unsigned>>& f) {
    json arr = json::array();
    for (const auto& [p, e] : f) arr.push_back({{"prime", p.str()}, {"exponent", e}});
    return arr;
}

json component_json(const ComponentReport& comp) {
    json j{{"vertices", comp.vertices},
           {"edge_count", comp.edge_count},
           {"bipartite", comp.bipartite},
           {"classification", component_kind_name(comp.classification)}};
    if (comp.two_coloring) {
        json coloring = json::object();
        for (const auto& [v, sign] : *comp.two_coloring) coloring[std::to_string(v)] = sign;
        j["two_coloring"] = coloring;
    }
    if (comp.odd_cycle) j["odd_cycle"] = *comp.odd_cycle;
    return j;
}

std::string scientific_string(double v, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", digits, v);
    return buf;
}

// ---------------------------------------------------------------- check --

int run_check(const std::string& path, const std::string& mode, bool as_json) {
    const LineComplex c = parse_complex_file(path);
    AdmissibilityReport report;
    std::optional<int> rank_value;
    if (mode == "rank") {
        report.method = Method::rank;
        report.minimal = c.size() == c.num_points();
        rank_value = rank(incidence_matrix(c));
        report.admissible = *rank_value == c.num_points();
    } else {
        report = is_admissible_structural(c);
        if (mode == "both") {
            report.method = Method::both;
            rank_value = rank(incidence_matrix(c));
            if ((*rank_value == c.num_points()) != report.admissible)
                throw std::logic_error("structural and rank verdicts disagree");
        }
    }
    const auto minimal_info = classify_minimal(c);

    if (as_json) {
        json j{{"admissible", report.admissible},
               {"points", c.num_points()},
               {"lines", c.size()},
               {"minimal", report.minimal},
               {"method", mode}};
        if (rank_value) j["rank"] = *rank_value;
        if (mode != "rank") {
            json comps = json::array();
            for (const ComponentReport& comp : report.components)
                comps.push_back(component_json(comp));
            j["components"] = comps;
            if (report.witness) {
                json w = json::array();
                for (const Rational& x : *report.witness) w.push_back(format_rational(x));
                j["witness"] = w;
            }
        }
        if (minimal_info) j["cycle_type"] = type_key(minimal_info->second);
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << (report.admissible ? "admissible" : "inadmissible") << "\n";
    std::cout << "points: " << c.num_points() << "  lines: " << c.size()
              << "  minimal: " << (report.minimal ? "yes" : "no") << "\n";
    if (rank_value)
        std::cout << "rank: " << *rank_value << "/" << c.num_points() << "\n";
    if (mode != "rank") {
        std::cout << "components: " << report.components.size() << "\n";
        for (std::size_t i = 0; i < report.components.size(); ++i) {
            const ComponentReport& comp = report.components[i];
            std::cout << "  [" << i << "] " << component_kind_name(comp.classification) << ", "
                      << comp.vertices.size() << " vertices, " << comp.edge_count << " lines";
            if (comp.odd_cycle) std::cout << ", odd cycle length " << comp.odd_cycle->size();
            std::cout << "\n";
        }
    }
    if (minimal_info)
        std::cout << "cycle type: " << type_key(minimal_info->second) << "\n";
    return 0;
}

// -------------------------------------------------------------- witness --

int run_witness(const std::string& path, bool as_json) {
    const LineComplex c = parse_complex_file(path);
    const AdmissibilityReport report = is_admissible_structural(c);
    if (report.admissible)
        fail(Errc::not_admissible,
             "complex is admissible: only the zero function has all line sums zero");
    const std::vector<Rational>& w = *report.witness;

    // The witness is a certificate; verify it before showing it.
    const DensityFunction f{c.space(), w};
    for (const auto& [line, value] : radon_transform(f, c).values)
        if (value != 0) throw std::logic_error("witness has a nonzero line sum");

    if (as_json) {
        json values = json::array();
        for (const Rational& x : w) values.push_back(format_rational(x));
        std::cout << json{{"admissible", false}, {"witness", values}}.dump(2) << "\n";
        return 0;
    }
    std::cout << "inadmissible\n";
    std::cout << "witness (nonzero function with every line sum zero):\n";
    for (std::size_t v = 0; v < w.size(); ++v)
        std::cout << v << " " << format_rational(w[v]) << "\n";
    return 0;
}

// ---------------------------------------------------------- reconstruct --

int run_reconstruct(const std::string& complex_path, const std::string& sums_path, bool as_json) {
    const LineComplex c = parse_complex_file(complex_path);
    const LineSums sums = parse_sums_file(sums_path);
    const DensityFunction f = reconstruct(c, sums);
    if (as_json) {
        json values = json::array();
        for (const Rational& x : f.values) values.push_back(format_rational(x));
        std::cout << json{{"points", c.num_points()}, {"values", values}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t v = 0; v < f.values.size(); ++v)
        std::cout << v << " " << format_rational(f.values[v]) << "\n";
    return 0;
}

// ------------------------------------------------------------ enumerate --

int run_enumerate(int points, bool per_type, bool with_factorization, bool paper_multiplicity,
                  bool approx, bool as_json) {
    const Multiplicity mode = paper_multiplicity ? Multiplicity::ordered : Multiplicity::unordered;
    const char* mode_name = paper_multiplicity ? "paper-multiplicity (ordered)" : "corrected (unordered)";
    const BigInt total = total_admissible(points, mode);
    std::vector<TypeRow> rows;
    if (per_type) rows = per_type_table(points, mode);

    if (as_json) {
        json j{{"points", points},
               {"mode", paper_multiplicity ? "paper-multiplicity" : "corrected"},
               {"total", total.str()}};
        if (approx) j["approx"] = total.convert_to<double>();
        if (per_type) {
            json out_rows = json::array();
            for (const TypeRow& row : rows) {
                json r{{"type", row.cycle_type.lengths},
                       {"initial_count", row.initial_count.str()},
                       {"multiplier", row.multiplier.str()},
                       {"final_total", row.final_total.str()}};
                if (with_factorization) r["factorization"] = factorization_json(row.factorization);
                out_rows.push_back(r);
            }
            j["rows"] = out_rows;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "points: " << points << "\n";
    std::cout << "mode: " << mode_name << "\n";
    if (per_type) {
        std::size_t type_w = 6, init_w = 13, mult_w = 10, total_w = 11;
        std::vector<std::array<std::string, 4>> cells;
        for (const TypeRow& row : rows) {
            std::array<std::string, 4> cell{type_key(row.cycle_type), row.initial_count.str(),
                                            row.multiplier.str(), row.final_total.str()};
            type_w = std::max(type_w, cell[0].size());
            init_w = std::max(init_w, cell[1].size());
            mult_w = std::max(mult_w, cell[2].size());
            total_w = std::max(total_w, cell[3].size());
            cells.push_back(std::move(cell));
        }
        std::cout << std::left << std::setw(static_cast<int>(type_w) + 2) << "type" << std::right
                  << std::setw(static_cast<int>(init_w)) << "initial count" << "  "
                  << std::setw(static_cast<int>(mult_w)) << "multiplier" << "  "
                  << std::setw(static_cast<int>(total_w)) << "final total";
        if (with_factorization) std::cout << "  factorization";
        std::cout << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::cout << std::left << std::setw(static_cast<int>(type_w) + 2) << cells[i][0]
                      << std::right << std::setw(static_cast<int>(init_w)) << cells[i][1] << "  "
                      << std::setw(static_cast<int>(mult_w)) << cells[i][2] << "  "
                      << std::setw(static_cast<int>(total_w)) << cells[i][3];
            if (with_factorization) std::cout << "  " << format_factorization(rows[i].factorization);
            std::cout << "\n";
        }
    }
    std::cout << "total: " << total.str() << "\n";
    if (approx) std::cout << "approx: " << scientific_string(total.convert_to<double>(), 4) << "\n";
    return 0;
}

// --------------------------------------------------------------- sample --

int run_sample(int points, int size, std::uint64_t trials, std::uint64_t seed, int threads,
               bool as_json) {
    const PointSpace space = PointSpace::with_points(points);
    const SampleEstimate est = estimate_fraction(space, size, trials, seed, threads);
    const auto [lo99, hi99] = wilson_interval(est.hits, est.trials, kZ99);
    const double pop = est.population.convert_to<double>();

    if (as_json) {
        json j{{"points", points},
               {"size", size},
               {"trials", est.trials},
               {"hits", est.hits},
               {"fraction", est.fraction},
               {"ci_low", est.ci_low},
               {"ci_high", est.ci_high},
               {"ci99_low", lo99},
               {"ci99_high", hi99},
               {"population", est.population.str()},
               {"implied_total", est.implied_total},
               {"implied_low", est.ci_low * pop},
               {"implied_high", est.ci_high * pop},
               {"seed", est.seed},
               {"audited", est.audited}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    char line[256];
    std::cout << "points: " << points << "  size: " << size << "\n";
    std::cout << "trials: " << est.trials << "  hits: " << est.hits << "  seed: " << est.seed
              << "  audited: " << est.audited << "\n";
    std::snprintf(line, sizeof(line), "fraction: %.6f  (95%% interval [%.6f, %.6f])", est.fraction,
                  est.ci_low, est.ci_high);
    std::cout << line << "\n";
    std::cout << "population: " << est.population.str() << "\n";
    std::cout << "implied total: " << scientific_string(est.implied_total) << "  (95% interval ["
              << scientific_string(est.ci_low * pop) << ", " << scientific_string(est.ci_high * pop)
              << "])\n";
    return 0;
}

// --------------------------------------------------------------- oracle --

int run_oracle(int points, int threads, bool per_type, bool force, bool as_json) {
    const OracleResult result = brute_force_count(points, threads, force);
    if (as_json) {
        json j{{"points", result.n_points},
               {"subsets_examined", result.subsets_examined.str()},
               {"admissible_count", result.admissible_count.str()}};
        if (per_type) {
            json types = json::object();
            for (const auto& [t, count] : result.per_type) types[type_key(t)] = count.str();
            j["per_type"] = types;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "points: " << result.n_points << "\n";
    std::cout << "subsets examined: " << result.subsets_examined.str() << "\n";
    if (per_type)
        for (const auto& [t, count] : result.per_type)
            std::cout << "  " << type_key(t) << ": " << count.str() << "\n";
    std::cout << "admissible: " << result.admissible_count.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for sums of functions over point pairs: admissibility, "
                 "witnesses, reconstruction, enumeration, sampling, brute force."};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "Decide admissibility of a complex file");
    std::string check_file, check_mode = "structural";
    bool check_json = false;
    check->add_option("--file", check_file, "complex file")->required();
    check->add_option("--mode", check_mode, "structural|rank|both")
        ->check(CLI::IsMember({"structural", "rank", "both"}));
    check->add_flag("--json", check_json, "JSON output");

    // witness
    auto* witness = app.add_subcommand("witness", "Produce a kernel witness for an inadmissible complex");
    std::string witness_file;
    bool witness_json = false;
    witness->add_option("--file", witness_file, "complex file")->required();
    witness->add_flag("--json", witness_json, "JSON output");

    // reconstruct
    auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Recover the density from line sums");
    std::string rec_complex, rec_sums;
    bool rec_json = false;
    reconstruct_cmd->add_option("--complex", rec_complex, "complex file")->required();
    reconstruct_cmd->add_option("--sums", rec_sums, "line sums file")->required();
    reconstruct_cmd->add_flag("--json", rec_json, "JSON output");

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Count minimal admissible complexes exactly");
    int enum_points = 0, enum_dim = -1;
    bool enum_per_type = false, enum_factorize = false, enum_paper = false, enum_approx = false,
         enum_json = false;
    auto* points_opt = enumerate_cmd->add_option("--points", enum_points, "number of points (>= 3)");
    auto* dim_opt = enumerate_cmd->add_option("--dim", enum_dim, "points = 2^dim");
    points_opt->excludes(dim_opt);
    dim_opt->excludes(points_opt);
    enumerate_cmd->add_flag("--per-type", enum_per_type, "print one row per cycle type");
    enumerate_cmd->add_flag("--factorize", enum_factorize, "include prime factorizations");
    enumerate_cmd->add_flag("--paper-multiplicity", enum_paper,
                            "count equal-length cycles in choice order (printed-table convention)");
    enumerate_cmd->add_flag("--approx", enum_approx, "also print a scientific approximation");
    enumerate_cmd->add_flag("--json", enum_json, "JSON output");

    // sample
    auto* sample = app.add_subcommand("sample", "Estimate the admissible fraction by sampling");
    int sample_points = 0, sample_dim = -1, sample_size = 0, sample_threads = 1;
    std::uint64_t sample_trials = 0, sample_seed = 0;
    bool sample_json = false;
    auto* sample_dim_opt = sample->add_option("--dim", sample_dim, "points = 2^dim");
    auto* sample_points_opt = sample->add_option("--points", sample_points, "number of points");
    sample_dim_opt->excludes(sample_points_opt);
    sample_points_opt->excludes(sample_dim_opt);
    sample->add_option("--size", sample_size, "lines per sampled complex")->required();
    sample->add_option("--trials", sample_trials, "number of draws")->required();
    sample->add_option("--seed", sample_seed, "base seed")->required();
    sample->add_option("--threads", sample_threads, "worker threads (never changes results)");
    sample->add_flag("--json", sample_json, "JSON output");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force count over every minimal subset");
    int oracle_points = 0, oracle_threads = 1;
    bool oracle_per_type = false, oracle_force = false, oracle_json = false;
    oracle_cmd->add_option("--points", oracle_points, "number of points")->required();
    oracle_cmd->add_option("--threads", oracle_threads, "worker threads");
    oracle_cmd->add_flag("--per-type", oracle_per_type, "print per-cycle-type counts");
    oracle_cmd->add_flag("--force", oracle_force, "run past the default subset budget");
    oracle_cmd->add_flag("--json", oracle_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(check_file, check_mode, check_json);
        if (witness->parsed()) return run_witness(witness_file, witness_json);
        if (reconstruct_cmd->parsed()) return run_reconstruct(rec_complex, rec_sums, rec_json);
        if (enumerate_cmd->parsed()) {
            if (points_opt->count() == 0 && dim_opt->count() == 0)
                fail(Errc::parse_error, "enumerate needs --points or --dim");
            int points = enum_points;
            if (dim_opt->count() > 0) {
                if (enum_dim < 0 || enum_dim > 24) fail(Errc::parse_error, "dim must be in [0, 24]");
                points = 1 << enum_dim;
            }
            return run_enumerate(points, enum_per_type, enum_factorize, enum_paper, enum_approx,
                                 enum_json);
        }
        if (sample->parsed()) {
            if (sample_points_opt->count() == 0 && sample_dim_opt->count() == 0)
                fail(Errc::parse_error, "sample needs --points or --dim");
            int points = sample_points;
            if (sample_dim_opt->count() > 0) {
                if (sample_dim < 0 || sample_dim > 24)
                    fail(Errc::parse_error, "dim must be in [0, 24]");
                points = 1 << sample_dim;
            }
            return run_sample(points, sample_size, sample_trials, sample_seed, sample_threads,
                              sample_json);
        }
        if (oracle_cmd->parsed())
            return run_oracle(oracle_points, oracle_threads, oracle_per_type, oracle_force,
                              oracle_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_parse_errc(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
