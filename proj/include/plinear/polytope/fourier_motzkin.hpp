#pragma once

#include <cstddef>
#include <vector>

#include "plinear/ring/integer.hpp"

namespace plinear {

/// a . z < b (strict) or a . z <= b over real z.
struct LinearConstraint {
    std::vector<Rational> a;
    Rational b;
    bool strict = false;
};

/// Decide whether a system of strict / non-strict linear inequalities in
/// nvars real unknowns has a solution, by Fourier-Motzkin elimination with
/// strictness propagation. Exact; intended for small systems.
bool fm_feasible(std::vector<LinearConstraint> system, std::size_t nvars);

} // namespace plinear
