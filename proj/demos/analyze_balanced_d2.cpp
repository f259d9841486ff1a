// Builds the d = 2 balanced-but-not-bipartite construction with eigenvalues
// (0, 1, 3) on both sides and prints its analysis.

#include <iostream>

#include <lpkit/lpkit.hpp>

int main() {
    using namespace lpkit;
    const FieldDescriptor q = FieldDescriptor::rational();
    auto e = [&](int n) { return FieldElement::from_integer(q, n); };

    const ParameterArray pa =
        generate_d2_counterexample({e(0), e(1), e(3)}, {e(0), e(1), e(3)});
    std::cout << parameter_array_to_json(pa).dump(2) << "\n";
    std::cout << analysis_report_to_json(analyze(pa)).dump(2) << "\n";
    return 0;
}
