// Forced-H = 0 instances over prime fields. Solving the per-case closed
// form for tau lands every generated array exactly on the a_0 = a_d locus,
// where the inner-pair equivalences and the odd-case rigidity have to show
// their teeth; random tau draws almost never get here.

#include <gtest/gtest.h>

#include <random>

#include <lpkit/lpkit.hpp>

using namespace lpkit;

namespace {

void expect_all_hold(const TheoremReport& report, const std::string& context) {
    for (const auto& e : report.entries)
        EXPECT_TRUE(e.holds) << context << " " << e.id << ": " << e.detail;
}

FieldElement random_element(const FieldDescriptor& f, std::mt19937_64& rng) {
    return FieldElement::from_residue(f, static_cast<std::int64_t>(rng() % f.prime_modulus()));
}

}  // namespace

TEST(ForcedHZero, CaseIOverPrimeFields) {
    std::mt19937_64 rng(11213);
    int produced = 0, balanced_seen = 0, unbalanced_seen = 0;
    for (std::int64_t p : {11, 13}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        const FieldElement one = FieldElement::one(f);
        for (int trial = 0; trial < 400; ++trial) {
            const int d = 3 + static_cast<int>(rng() % 3);
            const FieldElement q = random_element(f, rng);
            if (q.is_zero() || q == one || q == -one) continue;
            const FieldElement qd1 = q.pow(d - 1);
            if ((qd1 + one).is_zero()) continue;
            const FieldElement h = random_element(f, rng), mu = random_element(f, rng);
            const FieldElement hs = random_element(f, rng), mus = random_element(f, rng);
            const FieldElement tau = qd1 * (h + mu) * (hs + mus) / (qd1 + one);
            const CaseIData data{d,
                                 q,
                                 random_element(f, rng),
                                 mu,
                                 h,
                                 random_element(f, rng),
                                 mus,
                                 hs,
                                 tau};
            ParameterArray pa{f, 0, {}, {}, {}, {}};
            try {
                pa = generate_case_I(data);
            } catch (const GenerationError&) {
                continue;
            }
            ++produced;
            EXPECT_TRUE(compute_H(pa).is_zero());
            (is_balanced(pa) ? balanced_seen : unbalanced_seen)++;
            TheoremReport report = check_all(pa);
            append_case_I_checks(report, pa, data);
            expect_all_hold(report, "caseI p=" + std::to_string(p));
        }
    }
    EXPECT_GT(produced, 50);
    EXPECT_GT(balanced_seen, 0);    // tau = 0 branch: ends and inner pairs agree
    EXPECT_GT(unbalanced_seen, 0);  // tau != 0 branch: ends agree, inner pairs split
}

TEST(ForcedHZero, CaseIIOverPrimeFields) {
    std::mt19937_64 rng(4242);
    int produced = 0, balanced_seen = 0, unbalanced_seen = 0;
    for (std::int64_t p : {11, 13}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        const FieldElement two = FieldElement::from_integer(f, 2);
        for (int trial = 0; trial < 400; ++trial) {
            const int d = 3 + static_cast<int>(rng() % 3);
            const FieldElement h = random_element(f, rng), hs = random_element(f, rng);
            const FieldElement tau =
                -(h * hs * FieldElement::from_integer(f, d - 1).pow(2)) / two;
            const CaseIIData data{d,
                                  random_element(f, rng),
                                  random_element(f, rng),
                                  h,
                                  random_element(f, rng),
                                  random_element(f, rng),
                                  hs,
                                  tau};
            ParameterArray pa{f, 0, {}, {}, {}, {}};
            try {
                pa = generate_case_II(data);
            } catch (const GenerationError&) {
                continue;
            }
            ++produced;
            EXPECT_TRUE(compute_H(pa).is_zero());
            (is_balanced(pa) ? balanced_seen : unbalanced_seen)++;
            TheoremReport report = check_all(pa);
            append_case_II_checks(report, pa, data);
            expect_all_hold(report, "caseII p=" + std::to_string(p));
        }
    }
    EXPECT_GT(produced, 50);
    EXPECT_GT(balanced_seen, 0);
    EXPECT_GT(unbalanced_seen, 0);
}

TEST(ForcedHZero, CaseIIIOverPrimeFields) {
    std::mt19937_64 rng(90125);
    int produced = 0, balanced_seen = 0, unbalanced_seen = 0;
    for (std::int64_t p : {11, 13}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        for (int trial = 0; trial < 400; ++trial) {
            const int d = 4 + 2 * static_cast<int>(rng() % 2);
            const FieldElement s = random_element(f, rng), ss = random_element(f, rng);
            const FieldElement one_minus_d = FieldElement::from_integer(f, 1 - d);
            if (one_minus_d.is_zero()) continue;
            const FieldElement tau = FieldElement::from_integer(f, 2) * s * ss / one_minus_d;
            const CaseIIIData data{d,
                                   random_element(f, rng),
                                   random_element(f, rng),
                                   s,
                                   random_element(f, rng),
                                   random_element(f, rng),
                                   ss,
                                   tau};
            ParameterArray pa{f, 0, {}, {}, {}, {}};
            try {
                pa = generate_case_III(data);
            } catch (const GenerationError&) {
                continue;
            }
            ++produced;
            EXPECT_TRUE(compute_H(pa).is_zero());
            (is_balanced(pa) ? balanced_seen : unbalanced_seen)++;
            TheoremReport report = check_all(pa);
            append_case_III_checks(report, pa, data);
            expect_all_hold(report, "caseIII p=" + std::to_string(p));
        }
    }
    EXPECT_GT(produced, 50);
    EXPECT_GT(balanced_seen, 0);
    EXPECT_GT(unbalanced_seen, 0);
}

TEST(ForcedHZero, CaseIVStaysRigid) {
    std::mt19937_64 rng(3141);
    int produced = 0;
    for (std::int64_t p : {11, 13}) {
        const FieldDescriptor f = FieldDescriptor::prime(p);
        const FieldElement two = FieldElement::from_integer(f, 2);
        for (int trial = 0; trial < 400; ++trial) {
            const int d = 3 + 2 * static_cast<int>(rng() % 2);
            const FieldElement h = random_element(f, rng), hs = random_element(f, rng);
            const FieldElement tau =
                -(FieldElement::from_integer(f, static_cast<std::int64_t>(d) * d + 1) * h * hs) /
                two;
            const CaseIVData data{d,
                                  random_element(f, rng),
                                  h,
                                  random_element(f, rng),
                                  random_element(f, rng),
                                  hs,
                                  random_element(f, rng),
                                  tau};
            ParameterArray pa{f, 0, {}, {}, {}, {}};
            try {
                pa = generate_case_IV(data);
            } catch (const GenerationError&) {
                continue;
            }
            ++produced;
            EXPECT_TRUE(compute_H(pa).is_zero());
            const auto a = compute_a(pa);
            const auto a_star = compute_a_star(pa);
            EXPECT_EQ(a[0], a[pa.d]);
            EXPECT_NE(a[1], a[pa.d - 1]);
            EXPECT_NE(a_star[1], a_star[pa.d - 1]);
            EXPECT_FALSE(is_balanced(pa));
            TheoremReport report = check_all(pa);
            append_case_IV_checks(report, pa, data);
            expect_all_hold(report, "caseIV p=" + std::to_string(p));
        }
    }
    EXPECT_GT(produced, 50);
}
