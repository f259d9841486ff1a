#pragma once

// Shared literal fixtures. These arrays are written out entry by entry, not
// produced by the generators, so the validator and the generators can be
// tested against each other.

#include <lpkit/lpkit.hpp>

namespace fixtures {

inline lpkit::FieldElement q(int num, int den = 1) {
    const lpkit::FieldDescriptor f = lpkit::FieldDescriptor::rational();
    return lpkit::FieldElement::from_integer(f, num) / lpkit::FieldElement::from_integer(f, den);
}

// d = 1, a = (-1, 2), H = 3
inline lpkit::ParameterArray d1_basic() {
    return {lpkit::FieldDescriptor::rational(), 1, {q(0), q(1)}, {q(0), q(1)}, {q(1)}, {q(2)}};
}

// geometric eigenvalues with ratio 2; H = 11, beta = 5/2
inline lpkit::ParameterArray case_I_geometric() {
    return {lpkit::FieldDescriptor::rational(),
            3,
            {q(1), q(2), q(4), q(8)},
            {q(1), q(2), q(4), q(8)},
            {q(14), q(9), q(-7)},
            {q(21), q(27), q(21)}};
}

// essentially bipartite with common diagonal value 5
inline lpkit::ParameterArray case_I_bipartite() {
    return {lpkit::FieldDescriptor::rational(),
            3,
            {q(-2), q(3), q(7), q(12)},
            {q(25), q(14), q(10), q(11)},
            {q(77), q(36), q(-7)},
            {q(-77), q(-36), q(7)}};
}

// the pinned d = 2 balanced array with both bipartite flags false
inline lpkit::ParameterArray d2_counterexample() {
    return {lpkit::FieldDescriptor::rational(),
            2,
            {q(0), q(1), q(3)},
            {q(0), q(1), q(3)},
            {q(-1), q(-4)},
            {q(2), q(2)}};
}

inline lpkit::ParameterArray d0(int c, int c_star) {
    return {lpkit::FieldDescriptor::rational(), 0, {q(c)}, {q(c_star)}, {}, {}};
}

}  // namespace fixtures
