// Exhaustive small-field coverage: every admissible parameter tuple for the
// characteristic-2 family, every d <= 2 eigenvalue choice over GF(5), and
// the forced-H d = 2 construction over the sweep's prime fields. Sampling
// cannot miss anything here because nothing is sampled.

#include <gtest/gtest.h>

#include <lpkit/lpkit.hpp>

using namespace lpkit;

namespace {

void expect_all_hold(const TheoremReport& report, const std::string& context) {
    for (const auto& e : report.entries)
        EXPECT_TRUE(e.holds) << context << " " << e.id << ": " << e.detail;
}

}  // namespace

TEST(Exhaustive, CaseVOverGf4AllTuples) {
    const FieldDescriptor g4 = FieldDescriptor::binary(2);
    const std::vector<FieldElement> all = enumerate_elements(g4);
    const FieldElement zero = FieldElement::zero(g4);
    const FieldElement one = FieldElement::one(g4);
    int valid = 0, attempted = 0;
    for (const auto& theta0 : {zero, one})
        for (const auto& h : all)
            for (const auto& s : all)
                for (const auto& h_star : all)
                    for (const auto& s_star : all)
                        for (const auto& r : all) {
                            if (h.is_zero() || h_star.is_zero() || s.is_zero() ||
                                s_star.is_zero() || s == one || s_star == one)
                                continue;
                            ++attempted;
                            const CaseVData data{theta0, zero, h, s, h_star, s_star, r};
                            ParameterArray pa{g4, 0, {}, {}, {}, {}};
                            try {
                                pa = generate_case_V(data);
                            } catch (const GenerationError&) {
                                continue;
                            }
                            ++valid;
                            TheoremReport report = check_all(pa);
                            append_case_V_checks(report, pa, data);
                            expect_all_hold(report, "gf4 tuple");
                            const auto [oa, oa_star] = oracle_a(pa);
                            EXPECT_EQ(oa, compute_a(pa));
                            EXPECT_EQ(oa_star, compute_a_star(pa));
                        }
    // 2 anchors x 3 h x 2 s x 3 h* x 2 s* x 4 r
    EXPECT_EQ(attempted, 288);
    // r must avoid 0, s+s*, s(1+s*) and s*(1+s); over GF(4) those cover the
    // whole field when s != s* and collapse to {0, 1} when s = s*, so each
    // (anchor, h, h*) admits exactly 4 of the 16 (s, s*, r) combinations
    EXPECT_EQ(valid, 72);
}

TEST(Exhaustive, CaseVOverGf8AllTuples) {
    const FieldDescriptor g8 = FieldDescriptor::binary(3);
    const std::vector<FieldElement> all = enumerate_elements(g8);
    const FieldElement zero = FieldElement::zero(g8);
    const FieldElement one = FieldElement::one(g8);
    int valid = 0, attempted = 0;
    for (const auto& h : all)
        for (const auto& s : all)
            for (const auto& h_star : all)
                for (const auto& s_star : all)
                    for (const auto& r : all) {
                        if (h.is_zero() || h_star.is_zero() || s.is_zero() || s_star.is_zero() ||
                            s == one || s_star == one)
                            continue;
                        ++attempted;
                        const CaseVData data{zero, zero, h, s, h_star, s_star, r};
                        ParameterArray pa{g8, 0, {}, {}, {}, {}};
                        try {
                            pa = generate_case_V(data);
                        } catch (const GenerationError&) {
                            continue;
                        }
                        ++valid;
                        // the rigid-case conclusions, checked without sampling
                        const auto a = compute_a(pa);
                        const auto a_star = compute_a_star(pa);
                        EXPECT_NE(a[0], a[3]);
                        EXPECT_NE(a_star[0], a_star[3]);
                        EXPECT_FALSE((pa.varphi[0] + pa.phi[0]).is_zero());
                        EXPECT_FALSE((pa.varphi[0] + pa.phi[2]).is_zero());
                        EXPECT_EQ(a[0] - a[3],
                                  h * s_star * (one + s) / (one + s_star));
                        const CaseLabel label = classify_case(pa);
                        EXPECT_EQ(label.tag, CaseTag::CaseV);
                        // spot-check the expensive cross-checks on a slice
                        if (valid % 97 == 0) {
                            TheoremReport report = check_all(pa);
                            append_case_V_checks(report, pa, data);
                            expect_all_hold(report, "gf8 tuple");
                            const auto [oa, oa_star] = oracle_a(pa);
                            EXPECT_EQ(oa, a);
                            EXPECT_EQ(oa_star, a_star);
                        }
                    }
    EXPECT_EQ(attempted, 7 * 6 * 7 * 6 * 8);
    EXPECT_GT(valid, 1000);
}

TEST(Exhaustive, D1OverGf5AllChoices) {
    const FieldDescriptor f5 = FieldDescriptor::prime(5);
    const std::vector<FieldElement> all = enumerate_elements(f5);
    int valid = 0;
    for (const auto& t0 : all)
        for (const auto& t1 : all)
            for (const auto& s0 : all)
                for (const auto& s1 : all)
                    for (const auto& vp : all) {
                        if (t0 == t1 || s0 == s1 || vp.is_zero()) continue;
                        ParameterArray pa{f5, 0, {}, {}, {}, {}};
                        try {
                            pa = generate_case0_d1({t0, t1}, {s0, s1}, vp);
                        } catch (const GenerationError&) {
                            continue;
                        }
                        ++valid;
                        expect_all_hold(check_all(pa), "d1 gf5");
                        const auto [oa, oa_star] = oracle_a(pa);
                        EXPECT_EQ(oa, compute_a(pa));
                        EXPECT_EQ(oa_star, compute_a_star(pa));
                    }
    EXPECT_GT(valid, 1000);
}

TEST(Exhaustive, D2CounterexampleOverGf5AllEigenvalues) {
    const FieldDescriptor f5 = FieldDescriptor::prime(5);
    const std::vector<FieldElement> all = enumerate_elements(f5);
    int valid = 0;
    for (const auto& t0 : all)
        for (const auto& t1 : all)
            for (const auto& t2 : all) {
                if (t0 == t1 || t0 == t2 || t1 == t2) continue;
                for (const auto& s0 : all)
                    for (const auto& s1 : all)
                        for (const auto& s2 : all) {
                            if (s0 == s1 || s0 == s2 || s1 == s2) continue;
                            const ParameterArray pa =
                                generate_d2_counterexample({t0, t1, t2}, {s0, s1, s2});
                            ++valid;
                            EXPECT_TRUE(is_balanced(pa));
                            const auto a = compute_a(pa);
                            EXPECT_EQ(a[0], t1);
                            EXPECT_EQ(a[1], t0 - t1 + t2);
                            EXPECT_EQ(a[2], t1);
                        }
            }
    EXPECT_EQ(valid, 60 * 60);
}

TEST(Exhaustive, D2ForcedBalanceScalarOverPrimeFields) {
    // split entries forced by a chosen H; whenever the result validates the
    // recomputed H must be the chosen one, and the d = 2 identities follow
    for (std::int64_t p : {5, 7}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        const std::vector<FieldElement> all = enumerate_elements(f);
        int valid = 0;
        for (const auto& t1 : all)
            for (const auto& t2 : all)
                for (const auto& s1 : all)
                    for (const auto& s2 : all)
                        for (const auto& h : all) {
                            const FieldElement t0 = FieldElement::zero(f);
                            if (t1.is_zero() || t2.is_zero() || t1 == t2) continue;
                            if (s1.is_zero() || s2.is_zero() || s1 == s2) continue;
                            const FieldElement d01 = t0 - t1, d12 = t1 - t2;
                            const FieldElement e01 = -s1, e12 = s1 - s2;
                            const ParameterArray pa{
                                f, 2,
                                {t0, t1, t2},
                                {FieldElement::zero(f), s1, s2},
                                {h - d01 * e01, h - d12 * e12},
                                {h + d12 * e01, h + d01 * e12}};
                            if (!validate(pa).valid()) continue;
                            ++valid;
                            EXPECT_EQ(compute_H(pa), h);
                            expect_all_hold(check_all(pa), "d2 forced-H");
                        }
        EXPECT_GT(valid, 100) << "p = " << p;
    }
}
