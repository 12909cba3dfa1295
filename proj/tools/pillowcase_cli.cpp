#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "pillowcase/cache.hpp"
#include "pillowcase/characters.hpp"
#include "pillowcase/errors.hpp"
#include "pillowcase/limitshape.hpp"
#include "pillowcase/oracle.hpp"
#include "pillowcase/partition.hpp"
#include "pillowcase/qseries.hpp"
#include "pillowcase/volumes.hpp"
#include "pillowcase/weights.hpp"

using namespace pillowcase;

namespace {

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open output file " + out_path);
    out << text;
    if (!out.flush()) throw io_error("short write to " + out_path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact engine for the pillowcase weight on partitions"};
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);

    long max = 12;
    int depth = 3;
    int workers = 1;
    std::string cache_dir = "cache";
    long enum_bound = 40;
    std::string subst_path;
    app.add_option("--max", max, "series truncation in half-sizes")->capture_default_str();
    app.add_option("--depth", depth, "quasimodular basis depth")->capture_default_str();
    app.add_option("--workers", workers, "block-level worker threads")->capture_default_str();
    app.add_option("--cache_dir,--cache-dir", cache_dir, "expectation block cache directory")
        ->envname("PILLOWCASE_CACHE_DIR")
        ->capture_default_str();
    app.add_option("--enum_bound,--enum-bound", enum_bound,
                   "largest size for exhaustive partition sweeps")
        ->capture_default_str();
    app.add_option("--subst_table,--subst-table", subst_path,
                   "substitution table file overriding the built-in one");

    auto* weight_cmd = app.add_subcommand("weight", "w(lambda) by characters and by hooks");
    std::string weight_arg;
    weight_cmd->add_option("partition", weight_arg, "comma-separated parts (\"\" for empty)");
    weight_cmd->fallthrough();

    auto* zseries_cmd = app.add_subcommand("zseries", "weight partition function coefficients");
    zseries_cmd->fallthrough();

    auto* g_cmd = app.add_subcommand("g", "g_nu(lambda), direct and structural");
    std::string g_nu, g_lambda;
    g_cmd->add_option("--nu", g_nu, "even-size partition nu")->required();
    g_cmd->add_option("--lambda", g_lambda, "balanced partition lambda")->required();
    g_cmd->fallthrough();

    auto* expect_cmd = app.add_subcommand("expect", "populate the block cache and aggregate file");
    std::string expect_f;
    expect_cmd->add_option("--f", expect_f, "observable, e.g. p1*p1 or g[2,2]")->required();
    expect_cmd->fallthrough();

    auto* asym_cmd = app.add_subcommand("asym", "asymptotic expansion of an expectation");
    std::string asym_f;
    bool asym_json = false;
    asym_cmd->add_option("--f", asym_f, "observable")->required();
    asym_cmd->add_flag("--json", asym_json, "emit JSON instead of text");
    asym_cmd->fallthrough();

    auto* oracle_cmd = app.add_subcommand("oracle", "quadruple census against the character sum");
    long oracle_d = 1;
    std::string oracle_nu;
    bool oracle_csv = false;
    long oracle_bound = 8;
    std::string oracle_out;
    oracle_cmd->add_option("--d", oracle_d, "covering degree d (group degree 2d)")->required();
    oracle_cmd->add_option("--nu", oracle_nu, "branching partition nu (\"\" for none)");
    oracle_cmd->add_flag("--csv", oracle_csv, "emit a CSV row instead of the summary line");
    oracle_cmd->add_option("--bound", oracle_bound, "largest allowed 2d")->capture_default_str();
    oracle_cmd->add_option("--out", oracle_out, "write output to this file");
    oracle_cmd->fallthrough();

    auto* limit_cmd = app.add_subcommand("limitshape", "limit-shape diagnostics");
    long limit_n = 20;
    int limit_k = 1;
    std::string limit_report, limit_out;
    limit_cmd->add_option("--n", limit_n, "partition size")->required();
    limit_cmd
        ->add_option("--report", limit_report,
                     "one of: concentration, meandistance, curve, pktrend, weightest")
        ->required();
    limit_cmd->add_option("--k", limit_k, "which p_k for the pktrend report")
        ->capture_default_str();
    limit_cmd->add_option("--out", limit_out, "write output to this file");
    limit_cmd->fallthrough();

    auto* validate_cmd = app.add_subcommand("validate-table", "numeric substitution-table check");
    std::string validate_out;
    validate_cmd->add_option("--out", validate_out, "write output to this file");
    validate_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        SubstitutionTable table =
            subst_path.empty() ? default_substitution_table() : load_substitution_table(subst_path);

        if (*weight_cmd) {
            Partition lambda = Partition::parse(weight_arg);
            if (!is_balanced(lambda)) {
                std::cout << "0 (unbalanced)\n";
                return 0;
            }
            std::cout << to_string(pillowcase_weight(lambda)) << " "
                      << to_string(pillowcase_weight_hooks(lambda)) << "\n";
        } else if (*zseries_cmd) {
            QSeries z = weight_partition_function_series(2 * max);
            for (long m = 0; m <= max; ++m) std::cout << to_string(z.coefficient(2 * m)) << "\n";
        } else if (*g_cmd) {
            Partition nu = Partition::parse(g_nu);
            Partition lambda = Partition::parse(g_lambda);
            std::cout << to_string(g_direct(nu, lambda)) << " "
                      << to_string(g_structural(nu, lambda)) << "\n";
        } else if (*expect_cmd) {
            Observable f = Observable::parse(expect_f);
            BlockCache cache(cache_dir);
            long reused = 0, total = 0;
            for (long m = 0; m <= max; ++m)
                for (long n1 = 0; n1 <= m; ++n1) {
                    ++total;
                    if (cache.load(f.hash(), n1, m - n1)) ++reused;
                }
            expectation_series(f, max, &cache, workers);
            std::cout << "observable " << f.canonical() << " hash " << f.hash() << "\n"
                      << "blocks " << total << " (" << reused << " already done, "
                      << (total - reused) << " computed)\n"
                      << "aggregate "
                      << (cache.observable_dir(f.hash()) / "aggregate.dat").string() << "\n";
        } else if (*asym_cmd) {
            Observable f = Observable::parse(asym_f);
            BlockCache cache(cache_dir);
            ExpectationSeries series = expectation_series(f, max, &cache, workers);
            QuasimodularFit fit = fit_expectation(series.coefficients, depth);
            AsymptoticPoly poly = asymptotic_value(fit, table);
            std::cout << (asym_json ? poly.to_json() : poly.to_text()) << "\n";
        } else if (*oracle_cmd) {
            Partition nu = Partition::parse(oracle_nu);
            if (oracle_csv) {
                emit(census_csv({census(oracle_d, nu, oracle_bound)}), oracle_out);
            } else {
                auto [normalized, character] = burnside_check(oracle_d, nu, oracle_bound);
                TupleCensus c = census(oracle_d, nu, oracle_bound);
                std::ostringstream line;
                line << "raw=" << to_string(c.raw_count) << " normalized="
                     << to_string(normalized) << " character=" << to_string(character) << " "
                     << (normalized == character ? "OK" : "MISMATCH") << "\n";
                emit(line.str(), oracle_out);
                if (normalized != character)
                    throw consistency_error("census and character sum disagree");
            }
        } else if (*limit_cmd) {
            if (limit_report == "concentration") {
                emit(concentration_csv({limit_n}, {0.05, 0.1, 0.2, 0.4}, enum_bound), limit_out);
            } else if (limit_report == "meandistance") {
                std::ostringstream out;
                out.precision(12);
                out << "n,distance\n"
                    << limit_n << "," << mean_contour_distance(limit_n, enum_bound) << "\n";
                emit(out.str(), limit_out);
            } else if (limit_report == "curve") {
                emit(mean_curve_csv(limit_n, enum_bound), limit_out);
            } else if (limit_report == "pktrend") {
                std::vector<long> sizes;
                for (long s = 10; s < limit_n; s += 10) sizes.push_back(s);
                sizes.push_back(limit_n);
                std::ostringstream out;
                out.precision(12);
                out << "n,scaled,moment_constant,rim_constant,gap_moment,gap_rim\n";
                for (const PkTrendRow& row : p_k_trend(limit_k, sizes, enum_bound))
                    out << row.n << "," << row.scaled << "," << row.moment_constant << ","
                        << row.rim_constant << "," << row.gap_moment << "," << row.gap_rim << "\n";
                emit(out.str(), limit_out);
            } else if (limit_report == "weightest") {
                std::ostringstream out;
                out.precision(12);
                out << "n,max_ratio,sampled\n";
                for (const WeightEstimateRow& row :
                     weight_estimate_diagnostic({limit_n}, enum_bound))
                    out << row.n << "," << row.max_ratio << "," << (row.sampled ? 1 : 0) << "\n";
                emit(out.str(), limit_out);
            } else {
                throw usage_error("limitshape: unknown report '" + limit_report + "'");
            }
        } else if (*validate_cmd) {
            std::vector<double> grid;
            for (int i = 0; i < 8; ++i) grid.push_back(0.16 / (1 << i));
            // Truncation must cover the smallest grid point: at h = 0.16/128
            // the q^n tail is e^{-nh}, so 40000 terms push it to ~1e-22,
            // far below the 1e-6 leading-coefficient gate.
            std::vector<GeneratorValidation> report =
                validate_substitution_table(40000, grid, table);
            std::ostringstream out;
            out.precision(12);
            bool all_pass = true;
            for (const GeneratorValidation& v : report) {
                out << "generator " << v.label << ": leading H^" << v.leading_power
                    << " fitted=" << v.fitted[static_cast<std::size_t>(v.leading_power)]
                    << " expected=" << v.expected[static_cast<std::size_t>(v.leading_power)]
                    << " rel_error=" << v.leading_rel_error << (v.pass ? " PASS" : " FAIL")
                    << "\n";
                for (int j = static_cast<int>(v.fitted.size()) - 1; j >= 0; --j)
                    out << "  H^" << j << " fitted=" << v.fitted[static_cast<std::size_t>(j)]
                        << " expected=" << v.expected[static_cast<std::size_t>(j)] << "\n";
                all_pass = all_pass && v.pass;
            }
            emit(out.str(), validate_out);
            if (!all_pass) throw consistency_error("substitution table validation failed");
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
