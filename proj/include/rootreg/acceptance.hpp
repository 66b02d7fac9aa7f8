#ifndef ROOTREG_ACCEPTANCE_HPP
#define ROOTREG_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "rootreg/curve.hpp"

namespace rootreg {

/// Seeded family of degree-3 curves with trig coefficients bounded by 1 in
/// C^6 seminorms; the corpus behind the family uniformity checks.
std::vector<CoeffCurve> trig_cubic_family(int count, unsigned long seed);

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

CriterionResult criterion_cube_root();
CriterionResult criterion_cubic_family();
CriterionResult criterion_chart_atlas();
CriterionResult criterion_split_round_trip();
CriterionResult criterion_exact_convexity();
CriterionResult criterion_radical_estimates();
CriterionResult criterion_structural_invariants();

/// All seven, in order.
std::vector<CriterionResult> run_acceptance();

}  // namespace rootreg

#endif
