#include "ipgap/oracle.hpp"

#include "ipgap/errors.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/parallel.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ipgap {

namespace {

long to_long(const Int& x, const char* what) {
  if (!x.fits_slong_p()) throw BadParameter(std::string(what) + " exceeds 64 bits");
  return x.get_si();
}

// Upper bound on coordinate j over {x >= 0 : eq_rows·x = eq_rhs, le_rows·x <= le_rhs}.
// Returns nullopt when that set is empty.
std::optional<std::vector<long>> coordinate_bounds(std::size_t n, const std::vector<RatVec>& eq_rows,
                                                   const RatVec& eq_rhs, const std::vector<RatVec>& le_rows,
                                                   const RatVec& le_rhs) {
  std::vector<long> upper(n);
  for (std::size_t j = 0; j < n; ++j) {
    LPProblem p(n, Sense::Maximize);
    RatVec obj(n, Rat(0));
    obj[j] = 1;
    p.set_objective(obj);
    for (std::size_t r = 0; r < eq_rows.size(); ++r) p.add_equality(eq_rows[r], eq_rhs[r]);
    for (std::size_t r = 0; r < le_rows.size(); ++r) p.add_inequality(le_rows[r], le_rhs[r]);
    LPSolution s = solve(p);
    if (s.status == LPStatus::Infeasible) return std::nullopt;
    if (s.status == LPStatus::Unbounded) throw InfiniteFiber("fiber is unbounded in coordinate " + std::to_string(j + 1));
    upper[j] = to_long(floor(s.value), "coordinate bound");
  }
  return upper;
}

std::size_t box_size(const std::vector<long>& upper, std::size_t cap) {
  std::size_t total = 1;
  for (long u : upper) {
    const std::size_t side = static_cast<std::size_t>(u) + 1;
    if (total > cap / side) throw BudgetExceeded("enumeration box exceeds the point cap of " + std::to_string(cap));
    total *= side;
  }
  return total;
}

// Depth-first scan of the box with interval pruning on each equality row.
class FiberScanner {
 public:
  FiberScanner(std::vector<std::vector<long>> rows, std::vector<long> rhs, std::vector<long> upper)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), upper_(std::move(upper)) {
    const std::size_t n = upper_.size();
    rest_min_.assign(rows_.size(), std::vector<__int128>(n + 1, 0));
    rest_max_.assign(rows_.size(), std::vector<__int128>(n + 1, 0));
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t j = n; j-- > 0;) {
        __int128 v = static_cast<__int128>(rows_[r][j]) * upper_[j];
        rest_min_[r][j] = rest_min_[r][j + 1] + std::min<__int128>(0, v);
        rest_max_[r][j] = rest_max_[r][j + 1] + std::max<__int128>(0, v);
      }
  }

  template <class Visit>
  void scan(Visit&& visit) {
    Point x(upper_.size(), 0);
    std::vector<__int128> partial(rows_.size(), 0);
    recurse(0, x, partial, visit);
  }

 private:
  template <class Visit>
  void recurse(std::size_t j, Point& x, std::vector<__int128>& partial, Visit& visit) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      __int128 need = rhs_[r] - partial[r];
      if (need < rest_min_[r][j] || need > rest_max_[r][j]) return;
    }
    if (j == upper_.size()) {
      visit(x);
      return;
    }
    for (long v = 0; v <= upper_[j]; ++v) {
      x[j] = v;
      recurse(j + 1, x, partial, visit);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial[r] += rows_[r][j];
    }
    for (std::size_t r = 0; r < rows_.size(); ++r)
      partial[r] -= static_cast<__int128>(rows_[r][j]) * (upper_[j] + 1);
    x[j] = 0;
  }

  std::vector<std::vector<long>> rows_;
  std::vector<long> rhs_;
  std::vector<long> upper_;
  std::vector<std::vector<__int128>> rest_min_, rest_max_;
};

Rat point_cost(const RatVec& c, const Point& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) s += c[i] * Rat(x[i]);
  return s;
}

IntVec apply(const IntMatrix& a, const Point& z) {
  IntVec b(a.rows(), Int(0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < a.cols(); ++j) b[r] += a(r, j) * z[j];
  return b;
}

template <class Visit>
void for_each_box_point(const Box& box, Visit&& visit) {
  const std::size_t n = box.upper.size();
  Point z(n, 0);
  while (true) {
    visit(z);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++z[k] <= box.upper[k]) break;
      z[k] = 0;
      if (k == 0) return;
    }
    if (n == 0) return;
  }
}

void check_box(const Box& box, std::size_t n, std::size_t cap) {
  if (box.upper.size() != n) throw BadParameter("box has the wrong number of coordinates");
  for (long u : box.upper)
    if (u < 0) throw BadParameter("box bounds must be nonnegative");
  box_size(box.upper, cap);
}

}  // namespace

std::vector<Point> enumerate_fiber(const IntMatrix& a, const IntVec& b, std::size_t cap) {
  const std::size_t n = a.cols();
  if (b.size() != a.rows()) throw BadParameter("right-hand side has the wrong length");
  std::vector<RatVec> eq;
  RatVec rhs;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    eq.push_back(to_rat(a.row(r)));
    rhs.emplace_back(b[r]);
  }
  auto upper = coordinate_bounds(n, eq, rhs, {}, {});
  if (!upper) return {};
  box_size(*upper, cap);

  std::vector<std::vector<long>> rows(a.rows(), std::vector<long>(n));
  std::vector<long> rhs_long;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < n; ++j) rows[r][j] = to_long(a(r, j), "matrix entry");
    rhs_long.push_back(to_long(b[r], "right-hand side"));
  }
  std::vector<Point> out;
  FiberScanner scanner(std::move(rows), std::move(rhs_long), *upper);
  scanner.scan([&](const Point& x) { out.push_back(x); });
  return out;
}

Rat brute_ip(const IntMatrix& a, const IntVec& b, const RatVec& c, std::size_t cap) {
  if (c.size() != a.cols()) throw BadParameter("cost vector has the wrong length");
  auto fiber = enumerate_fiber(a, b, cap);
  if (fiber.empty()) throw EmptyFiber("no nonnegative integer point has this right-hand side");
  Rat best = point_cost(c, fiber.front());
  for (const auto& u : fiber) best = std::min(best, point_cost(c, u));
  return best;
}

BoxGap brute_gap_box(const IntMatrix& a, const RatVec& c, const Box& box, unsigned threads, std::size_t cap) {
  const std::size_t n = a.cols();
  if (c.size() != n) throw BadParameter("cost vector has the wrong length");
  check_box(box, n, cap);

  // One evaluation per distinct right-hand side, remembering the first z.
  std::map<IntVec, std::size_t> index;
  std::vector<IntVec> rhs;
  std::vector<Point> first_z;
  for_each_box_point(box, [&](const Point& z) {
    IntVec b = apply(a, z);
    if (index.emplace(b, rhs.size()).second) {
      rhs.push_back(std::move(b));
      first_z.push_back(z);
    }
  });

  std::vector<Rat> diff(rhs.size());
  parallel_for(rhs.size(), threads, [&](std::size_t k) {
    LPSolution lp = lp_value(a, rhs[k], c);
    if (!lp.optimal()) throw UnboundedProgram("linear relaxation is unbounded for a box right-hand side");
    diff[k] = brute_ip(a, rhs[k], c, cap) - lp.value;
  });

  // Report the maximizer that comes first in box order.
  BoxGap out{diff.empty() ? Rat(0) : diff.front(), first_z.empty() ? Point(n, 0) : first_z.front()};
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k] > out.value || (diff[k] == out.value && first_z[k] < out.argmax_z)) {
      out.value = diff[k];
      out.argmax_z = first_z[k];
    }
  }
  return out;
}

namespace {

// Echelon data for testing membership in the lattice spanned by the columns.
struct LatticeTest {
  HermiteForm hnf;
  std::size_t rank;

  explicit LatticeTest(const IntMatrix& basis) : hnf(hermite_normal_form(basis.transpose())), rank(hnf.pivots.size()) {}

  bool contains(IntVec v) const {
    for (std::size_t r = 0; r < rank; ++r) {
      const std::size_t p = hnf.pivots[r];
      const Int& piv = hnf.h(r, p);
      if (v[p] % piv != 0) return false;
      Int q = v[p] / piv;
      if (q == 0) continue;
      for (std::size_t j = p; j < v.size(); ++j) v[j] -= q * hnf.h(r, j);
    }
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
  }
};

// Rows W·y = W·z (y - z in L_R) and c·y <= c·z.
void lattice_constraints(const IntMatrix& basis, const RatVec& c, const Point& z, std::vector<RatVec>& eq,
                         RatVec& eq_rhs, std::vector<RatVec>& le, RatVec& le_rhs) {
  IntMatrix perp = orthogonal_complement(LatticeBasis{basis});
  for (std::size_t r = 0; r < perp.rows(); ++r) {
    RatVec row = to_rat(perp.row(r));
    Rat rhs = 0;
    for (std::size_t j = 0; j < z.size(); ++j) rhs += row[j] * Rat(z[j]);
    eq.push_back(std::move(row));
    eq_rhs.push_back(rhs);
  }
  le.push_back(c);
  le_rhs.push_back(point_cost(c, z));
}

}  // namespace

Rat brute_lattice_ip(const IntMatrix& lattice_basis, const RatVec& c, const Point& z, std::size_t cap) {
  const std::size_t n = lattice_basis.rows();
  if (c.size() != n || z.size() != n) throw BadParameter("lattice program dimensions disagree");
  std::vector<RatVec> eq, le;
  RatVec eq_rhs, le_rhs;
  lattice_constraints(lattice_basis, c, z, eq, eq_rhs, le, le_rhs);
  auto upper = coordinate_bounds(n, eq, eq_rhs, le, le_rhs);
  if (!upper) throw InternalError("z itself is feasible");
  box_size(*upper, cap);

  LatticeTest test(lattice_basis);
  Rat best = point_cost(c, z);
  for_each_box_point(Box{*upper}, [&](const Point& v) {
    IntVec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - z[i];
    if (test.contains(std::move(d))) best = std::min(best, point_cost(c, v));
  });
  return best;
}

Rat lattice_lp(const IntMatrix& lattice_basis, const RatVec& c, const Point& z) {
  const std::size_t n = lattice_basis.rows();
  if (c.size() != n || z.size() != n) throw BadParameter("lattice program dimensions disagree");
  IntMatrix perp = orthogonal_complement(LatticeBasis{lattice_basis});
  LPProblem p(n, Sense::Minimize);
  p.set_objective(c);
  for (std::size_t r = 0; r < perp.rows(); ++r) {
    RatVec row = to_rat(perp.row(r));
    Rat rhs = 0;
    for (std::size_t j = 0; j < n; ++j) rhs += row[j] * Rat(z[j]);
    p.add_equality(std::move(row), rhs);
  }
  LPSolution s = solve(p);
  if (!s.optimal()) throw UnboundedProgram("lattice relaxation is unbounded");
  return s.value;
}

BoxGap brute_lattice_gap_box(const IntMatrix& lattice_basis, const RatVec& c, const Box& box, std::size_t cap) {
  const std::size_t n = lattice_basis.rows();
  check_box(box, n, cap);
  BoxGap out{Rat(0), Point(n, 0)};
  bool first = true;
  for_each_box_point(box, [&](const Point& z) {
    Rat d = brute_lattice_ip(lattice_basis, c, z, cap) - lattice_lp(lattice_basis, c, z);
    if (first || d > out.value) {
      out.value = d;
      out.argmax_z = z;
      first = false;
    }
  });
  return out;
}

}  // namespace ipgap
