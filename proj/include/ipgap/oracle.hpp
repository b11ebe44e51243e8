#pragma once

// Brute-force reference answers. Uses only exact arithmetic and the LP
// solver: no Gröbner bases, no monomial ideals.

#include "ipgap/exactmath.hpp"

#include <cstddef>
#include <vector>

namespace ipgap {

using Point = std::vector<long>;

/// z ranges over 0 <= z_i <= upper[i].
struct Box {
  std::vector<long> upper;
};

inline constexpr std::size_t kDefaultPointCap = 10'000'000;

/// All u in N^n with A·u = b. Throws InfiniteFiber if some coordinate is
/// unbounded on the fiber, BudgetExceeded if the bounding box holds more
/// than `cap` points.
std::vector<Point> enumerate_fiber(const IntMatrix& a, const IntVec& b, std::size_t cap = kDefaultPointCap);

/// min c·u over the fiber. Throws EmptyFiber.
Rat brute_ip(const IntMatrix& a, const IntVec& b, const RatVec& c, std::size_t cap = kDefaultPointCap);

struct BoxGap {
  Rat value;
  Point argmax_z;  // first maximizer in lexicographic box order
};

/// max over z in the box of IP(A·z) - LP(A·z): a lower bound on the gap.
BoxGap brute_gap_box(const IntMatrix& a, const RatVec& c, const Box& box, unsigned threads = 1,
                     std::size_t cap = kDefaultPointCap);

/// Lattice program min c·v, v >= 0, v ≡ z mod L, by scanning the box cut out
/// by v >= 0, v - z in L_R, c·v <= c·z.
Rat brute_lattice_ip(const IntMatrix& lattice_basis, const RatVec& c, const Point& z,
                     std::size_t cap = kDefaultPointCap);

/// min c·y, y >= 0, y - z in L_R.
Rat lattice_lp(const IntMatrix& lattice_basis, const RatVec& c, const Point& z);

/// Box maximum of brute_lattice_ip - lattice_lp.
BoxGap brute_lattice_gap_box(const IntMatrix& lattice_basis, const RatVec& c, const Box& box,
                             std::size_t cap = kDefaultPointCap);

}  // namespace ipgap
