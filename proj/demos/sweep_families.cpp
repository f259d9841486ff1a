// Runs a small seeded sweep over every family and prints the summary.

#include <iostream>

#include <lpkit/lpkit.hpp>

int main() {
    lpkit::SweepConfig config;
    config.samples_per_family = 40;
    const lpkit::SweepSummary summary = lpkit::run_sweep(config);
    std::cout << lpkit::sweep_summary_to_json(summary).dump(2) << "\n";
    return summary.failures == 0 ? 0 : 1;
}
