#pragma once

// JSON encodings for every value that crosses the CLI boundary. Keys are
// emitted in a fixed documented order and all field elements travel as
// exact text in the element grammar, so pipelines of subcommands are
// lossless and byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "matrices.hpp"
#include "sweep.hpp"
#include "theorems.hpp"

namespace lpkit {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson field_to_json(const FieldDescriptor& d) {
    OrderedJson j;
    switch (d.kind()) {
        case FieldKind::Rational: j["kind"] = "rational"; break;
        case FieldKind::Prime:
            j["kind"] = "prime";
            j["p"] = d.prime_modulus();
            break;
        case FieldKind::Binary:
            j["kind"] = "binary";
            j["k"] = d.extension_degree();
            break;
    }
    return j;
}

inline FieldDescriptor field_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("field descriptor must be an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "rational") return FieldDescriptor::rational();
        if (kind == "prime") {
            if (!j.contains("p") || !j["p"].is_number_integer())
                throw ParseError("prime field needs an integer \"p\"");
            return FieldDescriptor::prime(j["p"].get<std::int64_t>());
        }
        if (kind == "binary") {
            if (!j.contains("k") || !j["k"].is_number_integer())
                throw ParseError("binary field needs an integer \"k\"");
            return FieldDescriptor::binary(j["k"].get<int>());
        }
    } catch (const FieldError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("unknown field kind \"" + kind + "\"");
}

namespace detail {

inline OrderedJson elements_to_json(const std::vector<FieldElement>& xs) {
    OrderedJson j = OrderedJson::array();
    for (const auto& x : xs) j.push_back(format_element(x));
    return j;
}

inline std::vector<FieldElement> elements_from_json(const FieldDescriptor& f, const OrderedJson& j,
                                                    const char* key) {
    if (!j.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array of strings");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw ParseError(std::string("\"") + key + "\" must contain element strings");
        out.push_back(parse_element(f, item.get<std::string>()));
    }
    return out;
}

}  // namespace detail

inline OrderedJson parameter_array_to_json(const ParameterArray& pa) {
    OrderedJson j;
    j["field"] = field_to_json(pa.field);
    j["d"] = pa.d;
    j["theta"] = detail::elements_to_json(pa.theta);
    j["theta_star"] = detail::elements_to_json(pa.theta_star);
    j["varphi"] = detail::elements_to_json(pa.varphi);
    j["phi"] = detail::elements_to_json(pa.phi);
    return j;
}

inline ParameterArray parameter_array_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw ParseError("parameter array must be a JSON object");
    for (const char* key : {"field", "d", "theta", "theta_star", "varphi", "phi"})
        if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    const FieldDescriptor f = field_from_json(j["field"]);
    if (!j["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
    ParameterArray pa{f, j["d"].get<int>(), detail::elements_from_json(f, j["theta"], "theta"),
                      detail::elements_from_json(f, j["theta_star"], "theta_star"),
                      detail::elements_from_json(f, j["varphi"], "varphi"),
                      detail::elements_from_json(f, j["phi"], "phi")};
    check_structure(pa);
    return pa;
}

inline OrderedJson validation_report_to_json(const ValidationReport& report) {
    OrderedJson j;
    j["verdict"] = report.valid() ? "valid" : "invalid";
    OrderedJson failures = OrderedJson::array();
    for (const auto& f : report.failures) {
        OrderedJson entry;
        entry["condition"] = to_string(f.condition);
        entry["index"] = f.index;
        entry["detail"] = f.detail;
        failures.push_back(entry);
    }
    j["failures"] = failures;
    return j;
}

inline OrderedJson analysis_report_to_json(const AnalysisReport& report) {
    OrderedJson j;
    j["a"] = detail::elements_to_json(report.a);
    j["a_star"] = detail::elements_to_json(report.a_star);
    j["H"] = report.H ? OrderedJson(format_element(*report.H)) : OrderedJson(nullptr);
    j["case"] = to_string(report.case_label.tag);
    j["beta"] = report.case_label.beta ? OrderedJson(format_element(*report.case_label.beta))
                                       : OrderedJson(nullptr);
    j["balanced"] = report.balanced;
    j["essentially_bipartite"] = report.essentially_bipartite;
    j["xi"] = report.xi ? OrderedJson(format_element(*report.xi)) : OrderedJson(nullptr);
    j["essentially_dual_bipartite"] = report.essentially_dual_bipartite;
    j["xi_star"] =
        report.xi_star ? OrderedJson(format_element(*report.xi_star)) : OrderedJson(nullptr);
    return j;
}

inline OrderedJson theorem_report_to_json(const TheoremReport& report) {
    OrderedJson j;
    j["all_hold"] = report.all_hold();
    OrderedJson entries = OrderedJson::array();
    for (const auto& e : report.entries) {
        OrderedJson entry;
        entry["id"] = e.id;
        entry["holds"] = e.holds;
        entry["detail"] = e.detail;
        entries.push_back(entry);
    }
    j["entries"] = entries;
    return j;
}

inline OrderedJson matrix_to_json(const ExactMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < m.size(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(format_element(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline OrderedJson oracle_matrices_to_json(const OracleMatrices& m) {
    OrderedJson j;
    j["A"] = matrix_to_json(m.a);
    j["A_star"] = matrix_to_json(m.a_star);
    j["P_star"] = matrix_to_json(m.p_star);
    j["T"] = matrix_to_json(m.t);
    j["P"] = matrix_to_json(m.p);
    j["T_star"] = matrix_to_json(m.t_star);
    return j;
}

inline OrderedJson sweep_summary_to_json(const SweepSummary& summary) {
    OrderedJson j;
    j["attempted"] = summary.attempted;
    j["valid"] = summary.valid;
    j["verified"] = summary.verified;
    j["failures"] = summary.failures;
    if (summary.first_failure) {
        OrderedJson f;
        f["family"] = family_name(summary.first_failure->family);
        f["field"] = field_to_json(summary.first_failure->field);
        f["index"] = summary.first_failure->index;
        f["check"] = summary.first_failure->check_id;
        f["detail"] = summary.first_failure->detail;
        j["first_failure"] = f;
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

}  // namespace lpkit
