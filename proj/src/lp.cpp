#include "ipgap/lp.hpp"

#include "ipgap/errors.hpp"

#include <cstddef>
#include <utility>

namespace ipgap {

LPProblem::LPProblem(std::size_t num_vars, Sense sense)
    : num_vars_(num_vars), sense_(sense), objective_(num_vars), free_(num_vars, false) {}

void LPProblem::set_objective(RatVec objective) {
  if (objective.size() != num_vars_) throw BadParameter("objective length mismatch");
  objective_ = std::move(objective);
}

void LPProblem::add_equality(RatVec row, Rat rhs) {
  if (row.size() != num_vars_) throw BadParameter("constraint row length mismatch");
  eq_rows_.push_back(std::move(row));
  eq_rhs_.push_back(std::move(rhs));
}

void LPProblem::add_inequality(RatVec row, Rat rhs) {
  if (row.size() != num_vars_) throw BadParameter("constraint row length mismatch");
  le_rows_.push_back(std::move(row));
  le_rhs_.push_back(std::move(rhs));
}

void LPProblem::set_free(std::size_t var, bool is_free) { free_.at(var) = is_free; }

namespace {

/// Dense simplex tableau over the standard form  min c·x, T·x = rhs, x >= 0.
/// Artificial columns stay in the tableau after phase 1 so that their block
/// records the accumulated row transformation (used for dual multipliers).
class Tableau {
 public:
  Tableau(std::vector<RatVec> rows, RatVec rhs, std::size_t structural)
      : m_(rows.size()), structural_(structural), width_(structural + rows.size()) {
    t_.assign(m_, RatVec(width_ + 1));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t j = 0; j < structural_; ++j) t_[r][j] = rows[r][j];
      t_[r][structural_ + r] = 1;
      t_[r][width_] = rhs[r];
      basis_[r] = structural_ + r;
    }
    obj_.assign(width_ + 1, Rat(0));
  }

  // Returns false if phase 1 shows infeasibility.
  bool phase_one() {
    RatVec cost(width_, Rat(0));
    for (std::size_t r = 0; r < m_; ++r) cost[structural_ + r] = 1;
    load_objective(cost);
    run(width_);
    if (-obj_[width_] != 0) return false;
    // Drive artificials out of the basis; rows that cannot pivot are redundant.
    for (std::size_t r = 0; r < t_.size();) {
      if (basis_[r] < structural_) {
        ++r;
        continue;
      }
      std::size_t col = structural_;
      for (std::size_t j = 0; j < structural_; ++j)
        if (t_[r][j] != 0) {
          col = j;
          break;
        }
      if (col == structural_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      pivot(r, col);
      ++r;
    }
    return true;
  }

  // Returns false on unboundedness.
  bool phase_two(const RatVec& structural_cost) {
    RatVec cost(width_, Rat(0));
    for (std::size_t j = 0; j < structural_; ++j) cost[j] = structural_cost[j];
    cost_ = cost;
    load_objective(cost);
    return run(structural_);
  }

  RatVec primal() const {
    RatVec x(structural_, Rat(0));
    for (std::size_t r = 0; r < t_.size(); ++r)
      if (basis_[r] < structural_) x[basis_[r]] = t_[r][width_];
    return x;
  }

  // Multipliers y for the original standard-form rows: y = c_B * (row transform).
  RatVec duals() const {
    RatVec y(m_, Rat(0));
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const Rat& cb = cost_[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t i = 0; i < m_; ++i) y[i] += cb * t_[r][structural_ + i];
    }
    return y;
  }

 private:
  void load_objective(const RatVec& cost) {
    obj_.assign(width_ + 1, Rat(0));
    for (std::size_t j = 0; j < width_; ++j) obj_[j] = cost[j];
    for (std::size_t r = 0; r < t_.size(); ++r) {
      const Rat& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[r][j] != 0) obj_[j] -= cb * t_[r][j];
    }
  }

  // Bland's rule over columns [0, eligible). Returns false if unbounded.
  bool run(std::size_t eligible) {
    while (true) {
      std::size_t enter = eligible;
      for (std::size_t j = 0; j < eligible; ++j)
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == eligible) return true;
      std::size_t leave = t_.size();
      Rat best_ratio;
      for (std::size_t r = 0; r < t_.size(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rat ratio = t_[r][width_] / t_[r][enter];
        if (leave == t_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == t_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    const Rat p = t_[r][s];
    for (auto& v : t_[r]) v /= p;
    auto eliminate = [&](RatVec& row) {
      if (row[s] == 0) return;
      const Rat f = row[s];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t_[r][j] != 0) row[j] -= f * t_[r][j];
    };
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(obj_);
    basis_[r] = s;
  }

  std::size_t m_;
  std::size_t structural_;
  std::size_t width_;
  std::vector<RatVec> t_;
  RatVec obj_;
  RatVec cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LPSolution solve(const LPProblem& p) {
  const std::size_t n = p.num_vars();
  // Structural columns: x_j (or x_j^+ , x_j^-), then one slack per inequality.
  std::vector<std::size_t> plus_col(n), minus_col(n, SIZE_MAX);
  std::size_t cols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus_col[j] = cols++;
    if (p.is_free(j)) minus_col[j] = cols++;
  }
  const std::size_t first_slack = cols;
  cols += p.le_rows().size();

  const std::size_t num_eq = p.eq_rows().size();
  const std::size_t m = num_eq + p.le_rows().size();
  std::vector<RatVec> rows(m, RatVec(cols, Rat(0)));
  RatVec rhs(m);
  std::vector<bool> flipped(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    const bool is_eq = r < num_eq;
    const RatVec& src = is_eq ? p.eq_rows()[r] : p.le_rows()[r - num_eq];
    for (std::size_t j = 0; j < n; ++j) {
      rows[r][plus_col[j]] = src[j];
      if (minus_col[j] != SIZE_MAX) rows[r][minus_col[j]] = -src[j];
    }
    if (!is_eq) rows[r][first_slack + (r - num_eq)] = 1;
    rhs[r] = is_eq ? p.eq_rhs()[r] : p.le_rhs()[r - num_eq];
    if (rhs[r] < 0) {
      flipped[r] = true;
      for (auto& v : rows[r]) v = -v;
      rhs[r] = -rhs[r];
    }
  }

  const Rat sign = p.sense() == Sense::Minimize ? Rat(1) : Rat(-1);
  RatVec cost(cols, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[plus_col[j]] = sign * p.objective()[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -sign * p.objective()[j];
  }

  LPSolution sol;
  Tableau tab(std::move(rows), std::move(rhs), cols);
  if (!tab.phase_one()) {
    sol.status = LPStatus::Infeasible;
    return sol;
  }
  if (!tab.phase_two(cost)) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  RatVec x = tab.primal();
  sol.point.assign(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j) {
    sol.point[j] = x[plus_col[j]];
    if (minus_col[j] != SIZE_MAX) sol.point[j] -= x[minus_col[j]];
  }
  sol.value = dot(p.objective(), sol.point);
  RatVec y = tab.duals();
  for (std::size_t r = 0; r < m; ++r) {
    Rat v = sign * (flipped[r] ? -y[r] : y[r]);
    if (r < num_eq)
      sol.eq_duals.push_back(v);
    else
      sol.le_duals.push_back(v);
  }
  return sol;
}

bool certifies_optimality(const LPProblem& p, const LPSolution& s) {
  if (!s.optimal()) return false;
  const std::size_t n = p.num_vars();
  if (s.point.size() != n || s.eq_duals.size() != p.eq_rows().size() || s.le_duals.size() != p.le_rows().size())
    return false;
  for (std::size_t r = 0; r < p.eq_rows().size(); ++r)
    if (dot(p.eq_rows()[r], s.point) != p.eq_rhs()[r]) return false;
  for (std::size_t r = 0; r < p.le_rows().size(); ++r)
    if (dot(p.le_rows()[r], s.point) > p.le_rhs()[r]) return false;
  for (std::size_t j = 0; j < n; ++j)
    if (!p.is_free(j) && s.point[j] < 0) return false;
  if (dot(p.objective(), s.point) != s.value) return false;

  const bool minimize = p.sense() == Sense::Minimize;
  for (const auto& z : s.le_duals)
    if (minimize ? z > 0 : z < 0) return false;
  for (std::size_t j = 0; j < n; ++j) {
    Rat reduced = p.objective()[j];
    for (std::size_t r = 0; r < p.eq_rows().size(); ++r) reduced -= s.eq_duals[r] * p.eq_rows()[r][j];
    for (std::size_t r = 0; r < p.le_rows().size(); ++r) reduced -= s.le_duals[r] * p.le_rows()[r][j];
    if (p.is_free(j)) {
      if (reduced != 0) return false;
    } else if (minimize ? reduced < 0 : reduced > 0) {
      return false;
    }
  }
  Rat dual_value = dot(s.eq_duals, p.eq_rhs()) + dot(s.le_duals, p.le_rhs());
  return dual_value == s.value;
}

LPSolution lp_value(const IntMatrix& a, const IntVec& b, const RatVec& c) {
  if (b.size() != a.rows() || c.size() != a.cols()) throw BadParameter("lp_value: dimension mismatch");
  LPProblem p(a.cols(), Sense::Minimize);
  p.set_objective(c);
  for (std::size_t r = 0; r < a.rows(); ++r) p.add_equality(to_rat(a.row(r)), Rat(b[r]));
  return solve(p);
}

}  // namespace ipgap
