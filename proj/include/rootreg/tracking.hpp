#ifndef ROOTREG_TRACKING_HPP
#define ROOTREG_TRACKING_HPP

#include <vector>

#include "rootreg/curve.hpp"

namespace rootreg {

struct GridConfig {
  int initial_points = 65;
  double displacement_cap = 1e-2;
  double min_step = 1e-9;
  int max_points = 100000;
  // gap < collision_factor * displacement triggers refinement near collisions
  double collision_factor = 10.0;
  SolveOptions solver;

  void validate() const {
    if (initial_points < 2 || !(min_step > 0) || max_points < initial_points ||
        !(displacement_cap > 0))
      throw std::invalid_argument("GridConfig: invalid configuration");
  }
};

/// Continuous parameterization of the roots of a curve on an adaptive grid.
/// Row i of `values` holds the matched root values at grid(i); column j is a
/// discrete continuous path.  matchings[i] records the permutation taking raw
/// solver output at step i+1 into column order.
struct RootTrack {
  std::vector<double> grid;
  std::vector<CVec> values;
  std::vector<std::vector<int>> matchings;
  // Per-cell flag: the refinement predicate still fires on this cell but
  // min_step or max_points blocked further splitting.  Saturated cells carry
  // unresolved root variation (their forward difference is a chord average
  // over a scale the grid could not resolve).
  std::vector<char> saturated;
  int refinement_rounds = 0;

  int points() const { return static_cast<int>(grid.size()); }
  int degree() const { return values.empty() ? 0 : static_cast<int>(values[0].size()); }

  double max_step_displacement() const;
};

struct TrackError : std::runtime_error {
  double t_lo, t_hi;
  TrackError(const std::string& what, double lo, double hi)
      : std::runtime_error(what), t_lo(lo), t_hi(hi) {}
};

/// Permutation sigma minimizing sum_j |next(sigma(j)) - prev(j)|, exact
/// assignment; ties broken to the lexicographically smallest permutation.
std::vector<int> match_step(const CVec& prev, const CVec& next);

/// Minimal total displacement between two root multisets (assignment cost).
double match_cost(const CVec& prev, const CVec& next);

/// Track the roots of `curve` on an adaptive bisection grid.  Cells are
/// refined while the matched displacement exceeds displacement_cap or the
/// minimal pairwise root gap falls below collision_factor * displacement,
/// until min_step or max_points is reached.
RootTrack track(const CoeffCurve& curve, const GridConfig& cfg);

/// Single tracked root on a subgrid, input to complete_selection.
struct PartialTrack {
  std::vector<double> grid;
  std::vector<Complex> values;
};

/// Complete a continuous single-root selection to a full RootTrack whose
/// column 0 agrees with `partial` on its subgrid.
RootTrack complete_selection(const CoeffCurve& curve, const PartialTrack& partial,
                             const GridConfig& cfg);

}  // namespace rootreg

#endif
