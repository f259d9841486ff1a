// lpkit: construct, validate, classify and analyze Leonard pair parameter
// arrays over exact fields, with a matrix oracle and a seeded verification
// sweep. All I/O is JSON with elements in exact text form.
//
// Exit codes: 0 success; 1 domain failure (invalid array, failed checks,
// generation failure, sweep findings); 2 malformed input or usage.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <lpkit/lpkit.hpp>

namespace {

std::string read_input(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return spec;  // inline JSON
    if (spec == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(spec);
    if (!in) throw lpkit::ParseError("cannot open input: " + spec);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const lpkit::OrderedJson& j) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw lpkit::Error("cannot open output: " + path);
    out << text;
}

lpkit::ParameterArray load_array(const std::string& input) {
    lpkit::OrderedJson j;
    try {
        j = lpkit::OrderedJson::parse(read_input(input));
    } catch (const nlohmann::json::exception& e) {
        throw lpkit::ParseError(std::string("malformed JSON: ") + e.what());
    }
    return lpkit::parameter_array_from_json(j);
}

std::map<std::string, std::string> parse_params(const std::string& text) {
    std::map<std::string, std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw lpkit::ParseError("expected key=value in --params, got \"" + item + "\"");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

struct ParamReader {
    lpkit::FieldDescriptor field;
    std::map<std::string, std::string> kv;
    mutable std::vector<std::string> used;

    lpkit::FieldElement get(const std::string& key) const {
        auto it = kv.find(key);
        if (it == kv.end()) throw lpkit::ParseError("missing --params entry \"" + key + "\"");
        used.push_back(key);
        return lpkit::parse_element(field, it->second);
    }

    void finish() const {
        for (const auto& [key, value] : kv) {
            (void)value;
            bool known = false;
            for (const auto& u : used)
                if (u == key) known = true;
            if (!known) throw lpkit::ParseError("unknown --params entry \"" + key + "\"");
        }
    }
};

int require_d(int d, bool d_set, int forced, const std::string& family) {
    if (d_set && d != forced)
        throw lpkit::ParseError("family " + family + " has d = " + std::to_string(forced));
    return forced;
}

lpkit::ParameterArray run_generate(const std::string& family, const std::string& field_text,
                                   int d, bool d_set, const std::string& params_text) {
    const lpkit::FieldDescriptor field = lpkit::FieldDescriptor::from_string(field_text);
    const ParamReader params{field, parse_params(params_text), {}};

    if (family == "case1" || family == "case2") {
        if (!d_set) throw lpkit::ParseError("--d is required for " + family);
        if (family == "case1") {
            lpkit::CaseIData data{d,           params.get("q"),        params.get("eta"),
                                  params.get("mu"), params.get("h"),   params.get("eta_star"),
                                  params.get("mu_star"), params.get("h_star"), params.get("tau")};
            params.finish();
            return lpkit::generate_case_I(data);
        }
        lpkit::CaseIIData data{d,
                               params.get("eta"),
                               params.get("mu"),
                               params.get("h"),
                               params.get("eta_star"),
                               params.get("mu_star"),
                               params.get("h_star"),
                               params.get("tau")};
        params.finish();
        return lpkit::generate_case_II(data);
    }
    if (family == "case3" || family == "case4") {
        if (!d_set) throw lpkit::ParseError("--d is required for " + family);
        if (family == "case3") {
            lpkit::CaseIIIData data{d,
                                    params.get("eta"),
                                    params.get("h"),
                                    params.get("s"),
                                    params.get("eta_star"),
                                    params.get("h_star"),
                                    params.get("s_star"),
                                    params.get("tau")};
            params.finish();
            return lpkit::generate_case_III(data);
        }
        lpkit::CaseIVData data{d,
                               params.get("eta"),
                               params.get("h"),
                               params.get("s"),
                               params.get("eta_star"),
                               params.get("h_star"),
                               params.get("s_star"),
                               params.get("tau")};
        params.finish();
        return lpkit::generate_case_IV(data);
    }
    if (family == "case5") {
        require_d(d, d_set, 3, family);
        lpkit::CaseVData data{params.get("theta0"), params.get("theta0_star"), params.get("h"),
                              params.get("s"),      params.get("h_star"),      params.get("s_star"),
                              params.get("r")};
        params.finish();
        return lpkit::generate_case_V(data);
    }
    if (family == "d2counter") {
        require_d(d, d_set, 2, family);
        lpkit::D2CounterData data{
            {params.get("theta0"), params.get("theta1"), params.get("theta2")},
            {params.get("theta_star0"), params.get("theta_star1"), params.get("theta_star2")}};
        params.finish();
        return lpkit::generate_d2_counterexample(data);
    }
    if (family == "d1") {
        require_d(d, d_set, 1, family);
        lpkit::CaseZeroD1Data data{{params.get("theta0"), params.get("theta1")},
                                   {params.get("theta_star0"), params.get("theta_star1")},
                                   params.get("varphi1")};
        params.finish();
        return lpkit::generate_case0_d1(data);
    }
    throw lpkit::ParseError("unknown family \"" + family +
                            "\" (expected case1|case2|case3|case4|case5|d2counter|d1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Leonard pair parameter arrays"};
    app.require_subcommand(1);

    std::string in_validate = "-", out_validate;
    auto* cmd_validate = app.add_subcommand("validate", "check the five existence conditions");
    cmd_validate->add_option("input", in_validate, "file, '-' for stdin, or inline JSON");
    cmd_validate->add_option("-o,--output", out_validate, "output file (default stdout)");

    std::string in_analyze = "-", out_analyze;
    auto* cmd_analyze = app.add_subcommand("analyze", "diagonals, H, case label and balance flags");
    cmd_analyze->add_option("input", in_analyze, "file, '-' for stdin, or inline JSON");
    cmd_analyze->add_option("-o,--output", out_analyze, "output file (default stdout)");

    std::string in_matrices = "-", out_matrices;
    auto* cmd_matrices =
        app.add_subcommand("matrices", "split form, eigenbases and tridiagonal conjugates");
    cmd_matrices->add_option("input", in_matrices, "file, '-' for stdin, or inline JSON");
    cmd_matrices->add_option("-o,--output", out_matrices, "output file (default stdout)");

    std::string in_verify = "-", out_verify;
    auto* cmd_verify = app.add_subcommand("verify", "run every identity check on one array");
    cmd_verify->add_option("input", in_verify, "file, '-' for stdin, or inline JSON");
    cmd_verify->add_option("-o,--output", out_verify, "output file (default stdout)");

    std::string gen_family, gen_field = "rational", gen_params, out_generate;
    int gen_d = 0;
    auto* cmd_generate = app.add_subcommand("generate", "build an array from family data");
    cmd_generate->add_option("family", gen_family, "case1|case2|case3|case4|case5|d2counter|d1")
        ->required();
    cmd_generate->add_option("--field", gen_field, "rational | prime:p | binary:k");
    auto* gen_d_opt = cmd_generate->add_option("--d", gen_d, "diameter (cases 1-4)");
    cmd_generate->add_option("--params", gen_params, "comma-separated key=value element data");
    cmd_generate->add_option("-o,--output", out_generate, "output file (default stdout)");

    lpkit::SweepConfig config;
    std::string sweep_families, sweep_fields, out_sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "seeded multi-family verification sweep");
    cmd_sweep->add_option("--seed", config.seed, "sweep seed");
    cmd_sweep->add_option("--samples", config.samples_per_family, "samples per family");
    cmd_sweep->add_option("--families", sweep_families, "comma-separated family names");
    cmd_sweep->add_option("--fields", sweep_fields, "comma-separated field specs");
    cmd_sweep->add_option("--d-min", config.d_min, "smallest diameter for cases 1-4");
    cmd_sweep->add_option("--d-max", config.d_max, "largest diameter for cases 1-4");
    cmd_sweep->add_option("-o,--output", out_sweep, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (cmd_validate->parsed()) {
            const lpkit::ParameterArray pa = load_array(in_validate);
            const lpkit::ValidationReport report = lpkit::validate(pa);
            write_output(out_validate, lpkit::validation_report_to_json(report));
            return report.valid() ? 0 : 1;
        }
        if (cmd_analyze->parsed()) {
            const lpkit::ParameterArray pa = load_array(in_analyze);
            const lpkit::ValidationReport report = lpkit::validate(pa);
            if (!report.valid()) {
                write_output(out_analyze, lpkit::validation_report_to_json(report));
                return 1;
            }
            write_output(out_analyze, lpkit::analysis_report_to_json(lpkit::analyze(pa)));
            return 0;
        }
        if (cmd_matrices->parsed()) {
            const lpkit::ParameterArray pa = load_array(in_matrices);
            const lpkit::ValidationReport report = lpkit::validate(pa);
            if (!report.valid()) {
                write_output(out_matrices, lpkit::validation_report_to_json(report));
                return 1;
            }
            write_output(out_matrices, lpkit::oracle_matrices_to_json(lpkit::oracle_matrices(pa)));
            return 0;
        }
        if (cmd_verify->parsed()) {
            const lpkit::ParameterArray pa = load_array(in_verify);
            const lpkit::ValidationReport report = lpkit::validate(pa);
            if (!report.valid()) {
                write_output(out_verify, lpkit::validation_report_to_json(report));
                return 1;
            }
            lpkit::TheoremReport checks = lpkit::check_all(pa);
            lpkit::append_cross_checks(checks, pa);
            write_output(out_verify, lpkit::theorem_report_to_json(checks));
            return checks.all_hold() ? 0 : 1;
        }
        if (cmd_generate->parsed()) {
            const lpkit::ParameterArray pa =
                run_generate(gen_family, gen_field, gen_d, gen_d_opt->count() > 0, gen_params);
            write_output(out_generate, lpkit::parameter_array_to_json(pa));
            return 0;
        }
        if (cmd_sweep->parsed()) {
            if (!sweep_families.empty()) {
                config.families.clear();
                std::stringstream ss(sweep_families);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    const auto family = lpkit::family_from_name(name);
                    if (!family) throw lpkit::ParseError("unknown family \"" + name + "\"");
                    config.families.push_back(*family);
                }
            }
            if (!sweep_fields.empty()) {
                config.fields.clear();
                std::stringstream ss(sweep_fields);
                std::string spec;
                while (std::getline(ss, spec, ','))
                    config.fields.push_back(lpkit::FieldDescriptor::from_string(spec));
            }
            const lpkit::SweepSummary summary = lpkit::run_sweep(config);
            write_output(out_sweep, lpkit::sweep_summary_to_json(summary));
            return summary.failures == 0 ? 0 : 1;
        }
    } catch (const lpkit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lpkit::StructureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const lpkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
