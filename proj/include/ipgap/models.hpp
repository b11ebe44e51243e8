#pragma once

// Instance builders: hierarchical margin models for multiway tables, the
// coin-change instance, and the finite-index lattice family L_r.

#include "ipgap/exactmath.hpp"
#include "ipgap/gapcore.hpp"

#include <string>
#include <vector>

namespace ipgap {

/// Table of shape dims[0] x ... x dims[n-1] with marginals over the given
/// faces. Faces hold 0-based coordinate indices.
struct MarginalModel {
  std::vector<int> dims;
  std::vector<std::vector<std::size_t>> faces;

  /// Throws BadParameter on dims < 2, empty or out-of-range faces, repeated
  /// coordinates inside a face.
  void validate() const;
  std::size_t num_cells() const;
};

/// 0/1 matrix: one row block per face (given order), rows lexicographic in
/// the marginal index, columns the cells in lexicographic order.
IntMatrix margin_matrix(const MarginalModel& model);

/// Cell names x1111, x1112, ... (indices 1-based; separated by '_' once any
/// side length exceeds 9).
std::vector<std::string> cell_names(const MarginalModel& model);

enum class EntrySense { Min, Max };
std::string to_string(EntrySense s);
EntrySense parse_entry_sense(const std::string& s);

/// Cost for bounding the first cell: e_1 (min) or -e_1 (max).
RatVec entry_cost(const MarginalModel& model, EntrySense sense);

/// gap_- (Min) or gap_+ (Max) for the first cell; by the column symmetry of
/// margin models this is the gap for every cell.
GapReport entry_gap(const MarginalModel& model, EntrySense sense, const GapOptions& options = {});

struct DegreeBoundCheck {
  Rat gap_minus;
  Exponent max_first_degree;  // max degree of x_1 over minimal generators of M(A, e_1)
  bool holds;                 // gap_minus + 1 >= max_first_degree
};

DegreeBoundCheck entry_degree_bound_check(const MarginalModel& model, const GapOptions& options = {});

/// Basis columns (r,r,r), (r-1,r+1,r-1), (0,0,r-2); r >= 4.
LatticeBasis swz_lattice(int r);

struct NamedInstance {
  IntMatrix matrix;
  RatVec cost;
  std::vector<std::string> names;
};

/// Pennies, nickels, dimes, quarters: minimize nickels plus quarters.
NamedInstance coin_instance();

/// The 2x2x2x2 model whose faces are all six pairs of coordinates.
MarginalModel k4_model();

/// Facet lists of every simplicial complex on n vertices that uses all
/// vertices, one representative per symmetry class (n <= 5).
std::vector<std::vector<std::vector<std::size_t>>> simplicial_complexes(std::size_t n);

}  // namespace ipgap
