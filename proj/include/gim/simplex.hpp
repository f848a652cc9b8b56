#ifndef GIM_SIMPLEX_HPP
#define GIM_SIMPLEX_HPP

#include <optional>

#include "gim/matrix.hpp"

namespace gim {

/*
 * Exact rational linear feasibility:
 *
 *   find u >= 0 with  A_ub u <= b_ub  and  A_eq u = b_eq.
 *
 * Solved by a phase-one simplex (minimize the sum of artificial variables)
 * with Bland's rule, so it terminates on every input. Returns a feasible u
 * or nothing if the system is infeasible.
 */
std::optional<std::vector<Rational>> find_feasible(
    const RMatrix& a_ub, const std::vector<Rational>& b_ub,
    const RMatrix& a_eq, const std::vector<Rational>& b_eq);

}  // namespace gim

#endif  // GIM_SIMPLEX_HPP
