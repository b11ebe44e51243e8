#pragma once

// Shared fixtures and the random instance generator used by the property
// suite and the acceptance runner.

#include "ipgap/exactmath.hpp"
#include "ipgap/gapcore.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/monomial.hpp"
#include "ipgap/oracle.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace ipgap::testing {

inline IntMatrix coin_matrix() { return IntMatrix{{1, 1, 1, 1}, {1, 5, 10, 25}}; }
inline RatVec coin_cost() { return {0, 1, 0, 1}; }

inline RatVec rats(std::initializer_list<long> xs) {
  RatVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline IntVec ints(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Point to_point(const Monomial& m) { return Point(m.begin(), m.end()); }

inline IntVec to_intvec(const Monomial& m) {
  IntVec out;
  for (Exponent e : m) out.emplace_back(static_cast<long>(e));
  return out;
}

/// Components written as pure-power exponent vectors, e.g. {5,3,0,0} for <p^5, n^3>.
inline std::vector<IrreducibleComponent> components_from_powers(std::initializer_list<Monomial> powers) {
  std::vector<IrreducibleComponent> out;
  for (const auto& p : powers) out.push_back(IrreducibleComponent::from_powers(p));
  std::sort(out.begin(), out.end());
  return out;
}

/// No nonzero u >= 0 with A·u = 0, so every fiber is finite.
inline bool pointed_kernel(const IntMatrix& a) {
  LPProblem p(a.cols(), Sense::Maximize);
  p.set_objective(RatVec(a.cols(), Rat(1)));
  for (std::size_t r = 0; r < a.rows(); ++r) p.add_equality(to_rat(a.row(r)), 0);
  p.add_inequality(RatVec(a.cols(), Rat(1)), 1);
  return solve(p).value == 0;
}

struct RandomInstance {
  IntMatrix a;
  RatVec c;
};

/// d <= 2 rows, n <= 4 columns, |a_ij| <= 6, full row rank, rank(ker) >= 1,
/// pointed kernel; cost entries p/q with |p| <= 6, 1 <= q <= 3.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

  RandomInstance next() {
    for (;;) {
      const std::size_t d = pick(1, 2);
      const std::size_t n = pick(d + 1, 4);
      IntMatrix a(d, n);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(pick(0, 12)) - 6;
      if (rank(a) != d || !pointed_kernel(a)) continue;
      RatVec c;
      for (std::size_t j = 0; j < n; ++j)
        c.push_back(make_rat(static_cast<long>(pick(0, 12)) - 6, static_cast<long>(pick(1, 3))));
      return {std::move(a), std::move(c)};
    }
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  std::mt19937_64 rng_;
};

/// Number of points in the box.
inline double box_volume(const Box& box) {
  double v = 1;
  for (long u : box.upper) v *= static_cast<double>(u + 1);
  return v;
}

}  // namespace ipgap::testing
