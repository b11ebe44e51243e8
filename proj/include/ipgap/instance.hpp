#pragma once

// Instance files (YAML). Exactly one of `matrix`, `lattice`, `model`:
//
//   matrix: [[1, 1, 1, 1], [1, 5, 10, 25]]
//   cost: [0, 1, 0, 1]            # integers or "p/q" strings
//   names: [p, n, d, q]           # optional
//   options:                      # all optional
//     tiebreak: grevlex           # grevlex | grlex | lex
//     variables: natural          # natural | reversed
//     ideal: nonoptimal           # nonoptimal | initial
//     box: [10, 10, 10, 10]       # or a single integer
//     budget: 64                  # cone exploration budget
//     seeds: [[0, 1, 0, 1]]       # extra fan seeds
//
//   lattice: [[4, -5, 0, 1], ...] # basis vectors, one per row
//
//   model: {dims: [2, 2, 2, 2], faces: [[1, 2], [3, 4]], sense: max}
//                                 # faces are 1-based; cost defaults to ±e_1

#include "ipgap/exactmath.hpp"
#include "ipgap/gapcore.hpp"
#include "ipgap/models.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ipgap {

struct Instance {
  enum class Kind { Matrix, Lattice, Model };

  Kind kind = Kind::Matrix;
  std::string name;
  std::optional<IntMatrix> matrix;  // set for Matrix and Model
  LatticeBasis lattice;
  std::optional<MarginalModel> model;
  EntrySense sense = EntrySense::Max;
  RatVec cost;
  std::vector<std::string> names;

  Tiebreak tiebreak = Tiebreak::Grevlex;
  VariableRank rank = VariableRank::Natural;
  IdealKind ideal = IdealKind::NonOptimal;
  std::optional<std::vector<long>> box;
  std::optional<std::size_t> budget;
  std::vector<RatVec> seeds;

  std::size_t nvars() const { return cost.size(); }
};

/// Throws ParseError (with 1-based line/column) or BadParameter.
Instance parse_instance(const std::string& text);
Instance load_instance(const std::string& path);

/// Cost vectors from a seeds file: either a list of vectors or a mapping
/// with a `seeds` list.
std::vector<RatVec> load_seeds(const std::string& path, std::size_t nvars);

/// "4" or "4,4,2" into per-coordinate bounds.
std::vector<long> parse_box(const std::string& text, std::size_t nvars);

}  // namespace ipgap
