#pragma once

// Parameter arrays (theta; theta*; varphi; phi) of Leonard pairs over an
// exact field, the five-condition existence test, and the derived data:
// the tridiagonal diagonals a_i / a*_i, the balance scalar H, and the case
// taxonomy driven by beta = q + q^{-1}.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace lpkit {

struct ParameterArray {
    FieldDescriptor field;
    int d = 0;
    std::vector<FieldElement> theta;       // size d+1
    std::vector<FieldElement> theta_star;  // size d+1
    std::vector<FieldElement> varphi;      // first split sequence, size d
    std::vector<FieldElement> phi;         // second split sequence, size d
};

inline bool operator==(const ParameterArray& a, const ParameterArray& b) {
    return a.field == b.field && a.d == b.d && a.theta == b.theta &&
           a.theta_star == b.theta_star && a.varphi == b.varphi && a.phi == b.phi;
}

inline void check_structure(const ParameterArray& pa) {
    if (pa.d < 0) throw StructureError("negative diameter");
    const auto n = static_cast<std::size_t>(pa.d);
    if (pa.theta.size() != n + 1 || pa.theta_star.size() != n + 1)
        throw StructureError("eigenvalue sequences must have length d+1");
    if (pa.varphi.size() != n || pa.phi.size() != n)
        throw StructureError("split sequences must have length d");
    auto same_field = [&](const std::vector<FieldElement>& v) {
        return std::all_of(v.begin(), v.end(),
                           [&](const FieldElement& e) { return e.descriptor() == pa.field; });
    };
    if (!same_field(pa.theta) || !same_field(pa.theta_star) || !same_field(pa.varphi) ||
        !same_field(pa.phi))
        throw StructureError("element field does not match the array descriptor");
}

enum class Condition {
    C1_nonzero,
    C2_distinct,
    C3_phi_identity,
    C4_phi2_identity,
    C5_beta_constant,
};

inline const char* to_string(Condition c) {
    switch (c) {
        case Condition::C1_nonzero: return "C1_nonzero";
        case Condition::C2_distinct: return "C2_distinct";
        case Condition::C3_phi_identity: return "C3_phi_identity";
        case Condition::C4_phi2_identity: return "C4_phi2_identity";
        case Condition::C5_beta_constant: return "C5_beta_constant";
    }
    return "?";
}

struct ValidationFailure {
    Condition condition;
    int index;  // 1-based split-sequence index, or the offending eigenvalue index
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;
    bool valid() const { return failures.empty(); }
};

// All five conditions are checked; nothing short-circuits. The identities
// behind C3/C4/C5 are evaluated in cross-multiplied form so they stay total
// even when C2 already failed and a denominator would vanish.
inline ValidationReport validate(const ParameterArray& pa) {
    check_structure(pa);
    ValidationReport report;
    const int d = pa.d;

    for (int i = 1; i <= d; ++i) {
        if (pa.varphi[i - 1].is_zero())
            report.failures.push_back(
                {Condition::C1_nonzero, i, "varphi[" + std::to_string(i) + "] = 0"});
        if (pa.phi[i - 1].is_zero())
            report.failures.push_back(
                {Condition::C1_nonzero, i, "phi[" + std::to_string(i) + "] = 0"});
    }

    for (int i = 0; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
            if (pa.theta[i] == pa.theta[j])
                report.failures.push_back({Condition::C2_distinct, j,
                                           "theta[" + std::to_string(i) + "] = theta[" +
                                               std::to_string(j) + "]"});
            if (pa.theta_star[i] == pa.theta_star[j])
                report.failures.push_back({Condition::C2_distinct, j,
                                           "theta_star[" + std::to_string(i) + "] = theta_star[" +
                                               std::to_string(j) + "]"});
        }
    }

    if (d >= 1) {
        const FieldElement delta = pa.theta[0] - pa.theta[d];
        FieldElement running_sum = FieldElement::zero(pa.field);
        for (int i = 1; i <= d; ++i) {
            running_sum += pa.theta[i - 1] - pa.theta[d - (i - 1)];
            const FieldElement base =
                (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[i - 1] - pa.theta[d]) * delta;
            if (pa.varphi[i - 1] * delta != pa.phi[0] * running_sum + base)
                report.failures.push_back({Condition::C3_phi_identity, i,
                                           "varphi[" + std::to_string(i) + "] identity fails"});
        }
        running_sum = FieldElement::zero(pa.field);
        for (int i = 1; i <= d; ++i) {
            running_sum += pa.theta[i - 1] - pa.theta[d - (i - 1)];
            const FieldElement base =
                (pa.theta_star[i] - pa.theta_star[0]) * (pa.theta[d - i + 1] - pa.theta[0]) * delta;
            if (pa.phi[i - 1] * delta != pa.varphi[0] * running_sum + base)
                report.failures.push_back({Condition::C4_phi2_identity, i,
                                           "phi[" + std::to_string(i) + "] identity fails"});
        }
    }

    for (int i = 2; i <= d - 1; ++i) {
        // ratio (theta_{i-2}-theta_{i+1})/(theta_{i-1}-theta_i) must agree
        // with its starred twin and stay constant in i
        const FieldElement num = pa.theta[i - 2] - pa.theta[i + 1];
        const FieldElement den = pa.theta[i - 1] - pa.theta[i];
        const FieldElement num_s = pa.theta_star[i - 2] - pa.theta_star[i + 1];
        const FieldElement den_s = pa.theta_star[i - 1] - pa.theta_star[i];
        if (num * den_s != num_s * den)
            report.failures.push_back({Condition::C5_beta_constant, i,
                                       "eigenvalue ratios disagree at i = " + std::to_string(i)});
        if (i >= 3) {
            const FieldElement prev_num = pa.theta[i - 3] - pa.theta[i];
            const FieldElement prev_den = pa.theta[i - 2] - pa.theta[i - 1];
            if (num * prev_den != prev_num * den)
                report.failures.push_back(
                    {Condition::C5_beta_constant, i,
                     "eigenvalue ratio not constant between i = " + std::to_string(i - 1) +
                         " and i = " + std::to_string(i)});
        }
    }

    return report;
}

inline void require_valid(const ParameterArray& pa) {
    const ValidationReport report = validate(pa);
    if (!report.valid()) {
        std::string msg = "invalid parameter array:";
        for (const auto& f : report.failures) {
            msg += " [";
            msg += to_string(f.condition);
            msg += " " + f.detail + "]";
        }
        throw InvalidArrayError(msg);
    }
}

// a_i = theta_i + varphi_i/(ts_i - ts_{i-1}) - varphi_{i+1}/(ts_{i+1} - ts_i),
// with the boundary fractions dropped (varphi_0 = varphi_{d+1} = 0), so the
// out-of-range eigenvalues are never touched.
namespace detail {

inline std::vector<FieldElement> diagonal_from_split(const std::vector<FieldElement>& base,
                                                     const std::vector<FieldElement>& split,
                                                     const std::vector<FieldElement>& eigs,
                                                     int d) {
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        FieldElement acc = base[i];
        if (i >= 1) acc += split[i - 1] / (eigs[i] - eigs[i - 1]);
        if (i <= d - 1) acc -= split[i] / (eigs[i + 1] - eigs[i]);
        out.push_back(acc);
    }
    return out;
}

}  // namespace detail

inline std::vector<FieldElement> compute_a(const ParameterArray& pa) {
    require_valid(pa);
    return detail::diagonal_from_split(pa.theta, pa.varphi, pa.theta_star, pa.d);
}

inline std::vector<FieldElement> compute_a_star(const ParameterArray& pa) {
    require_valid(pa);
    return detail::diagonal_from_split(pa.theta_star, pa.varphi, pa.theta, pa.d);
}

/// Recomputes both diagonals from the second split sequence; an internal
/// cross-check route. a_i uses phi_i and phi_{i+1}; a*_i uses phi_{d-i+1}
/// and phi_{d-i}.
inline std::pair<std::vector<FieldElement>, std::vector<FieldElement>>
compute_a_via_second_split(const ParameterArray& pa) {
    require_valid(pa);
    const int d = pa.d;
    std::vector<FieldElement> a;
    a.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        FieldElement acc = pa.theta[d - i];
        if (i >= 1) acc += pa.phi[i - 1] / (pa.theta_star[i] - pa.theta_star[i - 1]);
        if (i <= d - 1) acc -= pa.phi[i] / (pa.theta_star[i + 1] - pa.theta_star[i]);
        a.push_back(acc);
    }
    std::vector<FieldElement> a_star;
    a_star.reserve(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        FieldElement acc = pa.theta_star[d - i];
        if (i >= 1) acc += pa.phi[d - i] / (pa.theta[i] - pa.theta[i - 1]);
        if (i <= d - 1) acc -= pa.phi[d - i - 1] / (pa.theta[i + 1] - pa.theta[i]);
        a_star.push_back(acc);
    }
    return {std::move(a), std::move(a_star)};
}

/// The balance scalar; zero exactly when a_0 = a_d. Both closed forms are
/// evaluated and must agree, otherwise the input was corrupt.
inline FieldElement compute_H(const ParameterArray& pa) {
    require_valid(pa);
    if (pa.d < 1) throw StructureError("H is undefined for d = 0");
    const int d = pa.d;
    const std::vector<FieldElement> a = compute_a(pa);
    const std::vector<FieldElement> a_star = compute_a_star(pa);
    const FieldElement lhs = (a[0] - a[d]) * (pa.theta_star[0] - pa.theta_star[1]) *
                             (pa.theta_star[d - 1] - pa.theta_star[d]) /
                             (pa.theta_star[0] - pa.theta_star[d]);
    const FieldElement rhs = (a_star[0] - a_star[d]) * (pa.theta[0] - pa.theta[1]) *
                             (pa.theta[d - 1] - pa.theta[d]) / (pa.theta[0] - pa.theta[d]);
    if (lhs != rhs)
        throw TheoremViolation("the two balance-scalar expressions disagree: " +
                               format_element(lhs) + " vs " + format_element(rhs));
    return lhs;
}

enum class CaseTag { Case0, CaseI, CaseII, CaseIII, CaseIV, CaseV };

inline const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Case0: return "Case0";
        case CaseTag::CaseI: return "CaseI";
        case CaseTag::CaseII: return "CaseII";
        case CaseTag::CaseIII: return "CaseIII";
        case CaseTag::CaseIV: return "CaseIV";
        case CaseTag::CaseV: return "CaseV";
    }
    return "?";
}

struct CaseLabel {
    CaseTag tag;
    std::optional<FieldElement> beta;  // present for d >= 3
};

// beta = q + q^{-1} is computed from the eigenvalue ratio at i = 2; on a
// valid array every i gives the same value. q itself may live in a quadratic
// extension, but the taxonomy depends only on beta and the characteristic.
inline CaseLabel classify_case(const ParameterArray& pa) {
    require_valid(pa);
    if (pa.d <= 2) return {CaseTag::Case0, std::nullopt};
    const FieldElement beta =
        (pa.theta[0] - pa.theta[3]) / (pa.theta[1] - pa.theta[2]) - FieldElement::one(pa.field);
    const FieldElement two = FieldElement::from_integer(pa.field, 2);
    if (pa.field.characteristic() != 2) {
        if (beta == two) return {CaseTag::CaseII, beta};
        if (beta == -two) return {pa.d % 2 == 0 ? CaseTag::CaseIII : CaseTag::CaseIV, beta};
        return {CaseTag::CaseI, beta};
    }
    if (beta.is_zero()) return {CaseTag::CaseV, beta};
    return {CaseTag::CaseI, beta};
}

/// The same Leonard pair with the theta ordering reversed; the two split
/// sequences swap by the definition of the second split sequence.
inline ParameterArray reverse_theta(const ParameterArray& pa) {
    require_valid(pa);
    ParameterArray out{pa.field, pa.d, pa.theta, pa.theta_star, pa.phi, pa.varphi};
    std::reverse(out.theta.begin(), out.theta.end());
    return out;
}

/// The dual pair: starred and unstarred data swap and the second split
/// sequence reverses.
inline ParameterArray dualize(const ParameterArray& pa) {
    require_valid(pa);
    ParameterArray out{pa.field, pa.d, pa.theta_star, pa.theta, pa.varphi, pa.phi};
    std::reverse(out.phi.begin(), out.phi.end());
    return out;
}

struct AnalysisReport {
    std::vector<FieldElement> a;
    std::vector<FieldElement> a_star;
    std::optional<FieldElement> H;  // defined for d >= 1
    CaseLabel case_label;
    bool balanced = false;
    bool essentially_bipartite = false;
    std::optional<FieldElement> xi;  // common value of the a_i, when constant
    bool essentially_dual_bipartite = false;
    std::optional<FieldElement> xi_star;
};

}  // namespace lpkit
