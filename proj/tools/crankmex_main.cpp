#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "crankmex/bijections.hpp"
#include "crankmex/gf.hpp"
#include "crankmex/partition.hpp"
#include "crankmex/qseries.hpp"
#include "crankmex/render.hpp"
#include "crankmex/verify.hpp"

namespace {

using namespace crankmex;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw CLI::ValidationError("--format must be text, csv or json");
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << content;
}

int default_nmax() {
    if (const char* env = std::getenv("CRANKMEX_BUDGET")) {
        int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return 28;
}

std::string stats_text(const Partition& p) {
    std::ostringstream out;
    out << "partition: " << render_parts(p) << '\n';
    out << "n: " << p.n() << '\n';
    out << "length: " << p.length() << '\n';
    out << "omega: " << omega(p) << '\n';
    out << "mu: " << mu(p) << '\n';
    out << "crank: " << crank(p) << '\n';
    out << "mex: " << mex(p) << '\n';
    out << "beta: " << beta(p) << '\n';
    out << "durfee: " << durfee(p) << '\n';
    if (auto fp = fixed_point(p)) out << "fixed_point: " << *fp << '\n';
    else out << "fixed_point: none\n";
    out << "classes:";
    for (ClassTag tag : {ClassTag::Xe, ClassTag::Xo, ClassTag::F, ClassTag::Fstar, ClassTag::G, ClassTag::G1,
                         ClassTag::MNeg, ClassTag::MZero, ClassTag::MPos}) {
        if (auto k = class_param(std::span<const int>(p.parts()), tag))
            out << ' ' << class_tag_name(tag) << "(" << p.n() << "," << *k << ")";
    }
    out << '\n';
    return out.str();
}

nlohmann::json stats_json(const Partition& p) {
    nlohmann::json classes = nlohmann::json::array();
    for (ClassTag tag : {ClassTag::Xe, ClassTag::Xo, ClassTag::F, ClassTag::Fstar, ClassTag::G, ClassTag::G1,
                         ClassTag::MNeg, ClassTag::MZero, ClassTag::MPos}) {
        if (auto k = class_param(std::span<const int>(p.parts()), tag))
            classes.push_back({{"class", class_tag_name(tag)}, {"k", *k}});
    }
    nlohmann::json j{
        {"partition", render_parts(p)},
        {"parts", p.parts()},
        {"n", p.n()},
        {"length", p.length()},
        {"omega", omega(p)},
        {"mu", mu(p)},
        {"crank", crank(p)},
        {"mex", mex(p)},
        {"beta", beta(p)},
        {"durfee", durfee(p)},
        {"classes", classes},
    };
    if (auto fp = fixed_point(p)) j["fixed_point"] = *fp;
    else j["fixed_point"] = nullptr;
    return j;
}

struct MapOutcome {
    Partition image;
    std::optional<BijectionTrace> trace;
};

MapOutcome run_map(const std::string& name, const Partition& input, bool want_trace) {
    if (name == "even-mex-to-fp") {
        auto [image, trace] = even_mex_to_fixed_point(input);
        return {image, want_trace ? std::optional(trace) : std::nullopt};
    }
    if (name == "fp-to-even-mex") return {fixed_point_to_even_mex(input), std::nullopt};
    if (name == "staircase-reduce") {
        auto [image, trace] = staircase_reduce(input);
        return {image, want_trace ? std::optional(trace) : std::nullopt};
    }
    if (name == "g1-insert") return {g1_insert(input), std::nullopt};
    if (name == "fp-to-neg") return {fixed_to_negcrank(input), std::nullopt};
    if (name == "neg-to-fp") return {negcrank_to_fixed(input), std::nullopt};
    if (name == "neg-to-pos") return {neg_to_pos_crank(input), std::nullopt};
    if (name == "pos-to-neg") return {pos_to_neg_crank(input), std::nullopt};
    if (name == "chain") {
        BijectionTrace trace = trace_chain(input);
        Partition image(trace.steps.back().state.parts);
        return {image, want_trace ? std::optional(trace) : std::nullopt};
    }
    throw CLI::ValidationError(
        "unknown map '" + name +
        "' (expected even-mex-to-fp, fp-to-even-mex, staircase-reduce, g1-insert, fp-to-neg, neg-to-fp, "
        "neg-to-pos, pos-to-neg, chain)");
}

std::string report_text(const VerifyReport& report) {
    std::ostringstream out;
    out << (report.pass ? "PASS" : "FAIL") << ' ' << report.suite << " (";
    bool first = true;
    for (const auto& [name, value] : report.parameters) {
        if (!first) out << ", ";
        out << name << '=' << value;
        first = false;
    }
    out << ")\n";
    for (const auto& note : report.notes) out << "  note: " << note << '\n';
    for (const auto& cx : report.counterexamples) out << "  counterexample: " << cx << '\n';
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition crank/mex/fixed-point statistics, bijections and exact q-series checks"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string out_path;
    auto add_io_options = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, csv or json")->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "print the statistics and class memberships of a partition");
    add_io_options(stats_cmd);
    std::vector<std::string> stats_parts;
    stats_cmd->add_option("parts", stats_parts, "parts, e.g. '5 1 1' or '5 1^2'")->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "print a bijection correspondence table");
    std::string table_id;
    int table_n = 8;
    table_cmd->add_option("id", table_id, "table id: ab, bc, cd or all")->required();
    table_cmd->add_option("--n", table_n, "partition size")->required();
    add_io_options(table_cmd);

    // map
    auto* map_cmd = app.add_subcommand("map", "apply one of the bijections to a partition");
    std::string map_name;
    std::vector<std::string> map_parts;
    bool map_trace = false;
    map_cmd->add_option("name", map_name, "map name, e.g. even-mex-to-fp or neg-to-pos")->required();
    map_cmd->add_option("parts", map_parts, "input partition")->required();
    map_cmd->add_flag("--trace", map_trace, "print the full step trace");
    add_io_options(map_cmd);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    VerifyBudget budget;
    budget.nmax = default_nmax();
    verify_cmd->add_option("suite", suite, "theorem1, bijections, gf, identities, crank-gf, section4 or all")
        ->required();
    verify_cmd->add_option("--nmax", budget.nmax, "largest n for enumeration suites")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    verify_cmd->add_option("--qmax", budget.qmax, "q truncation order")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    verify_cmd->add_option("--zmax", budget.zmax, "z truncation order")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    add_io_options(verify_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        Format format = parse_format(format_name);

        if (*stats_cmd) {
            Partition p = parse_partition(stats_parts);
            if (format == Format::Json) emit(stats_json(p).dump(2) + "\n", out_path);
            else emit(stats_text(p), out_path);
            return 0;
        }

        if (*table_cmd) {
            Table table = make_table(parse_table_id(table_id), table_n);
            switch (format) {
                case Format::Text: emit(to_text(table), out_path); break;
                case Format::Csv: emit(to_csv(table), out_path); break;
                case Format::Json: emit(to_json(table).dump(2) + "\n", out_path); break;
            }
            return 0;
        }

        if (*map_cmd) {
            Partition input = parse_partition(map_parts);
            MapOutcome outcome = run_map(map_name, input, map_trace || format == Format::Json);
            if (format == Format::Json) {
                nlohmann::json j{{"map", map_name},
                                 {"input", render_parts(input)},
                                 {"image", render_parts(outcome.image)}};
                if (map_trace && outcome.trace) {
                    nlohmann::json steps = nlohmann::json::array();
                    for (const auto& step : outcome.trace->steps)
                        steps.push_back({{"rule", rule_name(step.rule)}, {"state", render_state(step.state)}});
                    j["trace"] = steps;
                }
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream out;
                if (map_trace && outcome.trace) out << render_trace(*outcome.trace);
                out << render_parts(outcome.image) << '\n';
                emit(out.str(), out_path);
            }
            return 0;
        }

        if (*verify_cmd) {
            std::vector<VerifyReport> reports;
            if (suite == "theorem1") reports.push_back(verify_theorem1(budget.nmax));
            else if (suite == "bijections") reports.push_back(verify_bijections(budget.nmax));
            else if (suite == "gf") reports.push_back(verify_gf(budget));
            else if (suite == "identities") reports.push_back(verify_identities());
            else if (suite == "crank-gf") reports.push_back(verify_crank_gf(budget.nmax));
            else if (suite == "section4") reports.push_back(verify_section4(budget.nmax));
            else if (suite == "all") reports = verify_all(budget);
            else throw CLI::ValidationError("unknown suite '" + suite + "'");

            bool all_pass = true;
            if (format == Format::Json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& report : reports) {
                    j.push_back(to_json(report));
                    all_pass = all_pass && report.pass;
                }
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream out;
                for (const auto& report : reports) {
                    out << report_text(report);
                    all_pass = all_pass && report.pass;
                    std::cerr << report.suite << ": " << report.elapsed_ms << " ms\n";
                }
                emit(out.str(), out_path);
            }
            return all_pass ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
