#pragma once

// Exact rational linear programming (two-phase simplex, Bland's rule).

#include "ipgap/exactmath.hpp"

#include <cstddef>
#include <vector>

namespace ipgap {

enum class Sense { Minimize, Maximize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

/// optimize objective·x  s.t.  eq_rows·x = eq_rhs,  le_rows·x <= le_rhs,
/// x_j >= 0 unless the variable is marked free.
class LPProblem {
 public:
  explicit LPProblem(std::size_t num_vars, Sense sense = Sense::Minimize);

  std::size_t num_vars() const { return num_vars_; }
  Sense sense() const { return sense_; }

  void set_objective(RatVec objective);
  void add_equality(RatVec row, Rat rhs);
  void add_inequality(RatVec row, Rat rhs);  // row·x <= rhs
  void set_free(std::size_t var, bool is_free = true);

  const RatVec& objective() const { return objective_; }
  const std::vector<RatVec>& eq_rows() const { return eq_rows_; }
  const RatVec& eq_rhs() const { return eq_rhs_; }
  const std::vector<RatVec>& le_rows() const { return le_rows_; }
  const RatVec& le_rhs() const { return le_rhs_; }
  bool is_free(std::size_t var) const { return free_[var]; }

 private:
  std::size_t num_vars_;
  Sense sense_;
  RatVec objective_;
  std::vector<RatVec> eq_rows_;
  RatVec eq_rhs_;
  std::vector<RatVec> le_rows_;
  RatVec le_rhs_;
  std::vector<bool> free_;
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rat value;        // valid when Optimal
  RatVec point;     // a basic optimal solution when Optimal
  RatVec eq_duals;  // one multiplier per equality row
  RatVec le_duals;  // one multiplier per inequality row

  bool optimal() const { return status == LPStatus::Optimal; }
};

LPSolution solve(const LPProblem& p);

/// Checks primal feasibility, the objective value, and the dual certificate
/// (sign conditions, reduced costs, strong duality) exactly.
bool certifies_optimality(const LPProblem& p, const LPSolution& s);

/// min c·u  s.t.  A·u = b, u >= 0.
LPSolution lp_value(const IntMatrix& a, const IntVec& b, const RatVec& c);

}  // namespace ipgap
