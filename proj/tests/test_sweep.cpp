#include <gtest/gtest.h>

#include <lpkit/lpkit.hpp>

using namespace lpkit;

TEST(Sweep, IdenticalConfigsGiveIdenticalSummaries) {
    SweepConfig config;
    config.samples_per_family = 50;
    const std::string first = sweep_summary_to_json(run_sweep(config)).dump();
    const std::string second = sweep_summary_to_json(run_sweep(config)).dump();
    EXPECT_EQ(first, second);
}

TEST(Sweep, SampleStreamIsIndexDeterministic) {
    SweepConfig config;
    config.samples_per_family = 30;
    std::vector<std::string> first, second;
    enumerate_valid_samples(config, [&](const Sample& s) {
        first.push_back(parameter_array_to_json(s.pa).dump());
    });
    enumerate_valid_samples(config, [&](const Sample& s) {
        second.push_back(parameter_array_to_json(s.pa).dump());
    });
    EXPECT_EQ(first, second);
    EXPECT_FALSE(first.empty());
}

TEST(Sweep, DefaultFamiliesVerifyCleanly) {
    SweepConfig config;
    config.samples_per_family = 60;
    const SweepSummary summary = run_sweep(config);
    EXPECT_GT(summary.valid, 0u);
    EXPECT_EQ(summary.failures, 0u);
    EXPECT_EQ(summary.verified, summary.valid);
    EXPECT_FALSE(summary.first_failure.has_value());
    EXPECT_GE(summary.attempted, summary.valid);
}

TEST(Sweep, RationalOnlyMainCases) {
    SweepConfig config;
    config.samples_per_family = 100;
    config.families = {Family::CaseI, Family::CaseII, Family::CaseIII, Family::CaseIV};
    config.fields = {FieldDescriptor::rational()};
    const SweepSummary summary = run_sweep(config);
    EXPECT_EQ(summary.failures, 0u);
    EXPECT_GT(summary.valid, 0u);
}

TEST(Sweep, CaseVOverGf4NeverBalancesEnds) {
    SweepConfig config;
    config.samples_per_family = 50;
    config.families = {Family::CaseV};
    config.fields = {FieldDescriptor::binary(2)};
    int seen = 0;
    enumerate_valid_samples(config, [&](const Sample& sample) {
        ++seen;
        const auto a = compute_a(sample.pa);
        EXPECT_NE(a[0], a[3]);
    });
    EXPECT_GT(seen, 0);
    EXPECT_EQ(run_sweep(config).failures, 0u);
}

TEST(Sweep, FamiliesSkipIncompatibleFields) {
    SweepConfig config;
    config.samples_per_family = 20;
    config.families = {Family::CaseV};
    config.fields = {FieldDescriptor::rational()};  // characteristic 0: no admissible field
    const SweepSummary summary = run_sweep(config);
    EXPECT_EQ(summary.attempted, 0u);
    EXPECT_EQ(summary.valid, 0u);
}

TEST(Sweep, OddOnlyRangeSkipsEvenCase) {
    SweepConfig config;
    config.samples_per_family = 20;
    config.families = {Family::CaseIII};
    config.d_min = 3;
    config.d_max = 3;  // no even d available
    const SweepSummary summary = run_sweep(config);
    EXPECT_EQ(summary.attempted, 0u);
}

TEST(Sweep, FamilyNamesRoundTrip) {
    for (Family f : all_families()) {
        const auto back = family_from_name(family_name(f));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, f);
    }
    EXPECT_FALSE(family_from_name("case9").has_value());
}

TEST(Sweep, SeedChangesTheStream) {
    SweepConfig a;
    a.samples_per_family = 40;
    SweepConfig b = a;
    b.seed = 43;
    std::vector<std::string> sa, sb;
    enumerate_valid_samples(a, [&](const Sample& s) {
        sa.push_back(parameter_array_to_json(s.pa).dump());
    });
    enumerate_valid_samples(b, [&](const Sample& s) {
        sb.push_back(parameter_array_to_json(s.pa).dump());
    });
    EXPECT_NE(sa, sb);
}
