#pragma once

// Cost-space structure: Gröbner cones, their subdivision into pieces on
// which the gap is linear, and facet-walking cone discovery.

#include "ipgap/exactmath.hpp"
#include "ipgap/gapcore.hpp"
#include "ipgap/toric.hpp"

#include <optional>
#include <vector>

namespace ipgap {

/// {c : h·c >= 0 for every h}. Inequalities are primitive integer vectors.
struct Cone {
  std::size_t dim = 0;
  std::vector<RatVec> inequalities;

  bool contains(const RatVec& c) const;
  /// Strictly inside every inequality.
  bool interior_contains(const RatVec& c) const;
};

/// Cone cut out by lead - trail >= 0 over the basis (deduplicated).
Cone groebner_cone(const GroebnerBasis& gb);

/// Inequalities of the cone that are not implied by the others.
std::vector<RatVec> facets(const Cone& cone);

/// A point strictly inside every inequality (deterministic LP choice), or
/// nothing when the cone is lower dimensional.
std::optional<RatVec> interior_point(const Cone& cone);

struct GapFanPiece {
  Cone cone;
  IrreducibleComponent winner;
  /// All components sharing this linear form, canonical order.
  std::vector<IrreducibleComponent> winners;
  /// u - v_{u,τ}; the gap equals linear_form·c on the piece.
  RatVec linear_form;
  RatVec interior;
};

/// Pieces of the instance's Gröbner cone on which one component attains
/// the gap. Only full-dimensional pieces are returned, in canonical winner
/// order. Throws NonGenericCost when the instance cost is not generic,
/// DegenerateCone when the cone has empty interior, and InternalError if
/// an auxiliary optimum turns out not to be constant on the cone.
std::vector<GapFanPiece> gap_fan_subdivide(const GapInstance& inst, const GapOptions& options = {});

/// Hyperplanes (ℓ_i - ℓ_j)·c = 0 separating pieces that share a facet,
/// as primitive integer vectors oriented toward the earlier piece.
std::vector<RatVec> splitting_hyperplanes(const std::vector<GapFanPiece>& pieces);

struct GapEvaluation {
  Rat value;
  GapFanPiece piece;
  /// Every component attaining the gap at c (more than one on boundaries).
  std::vector<IrreducibleComponent> ties;
};

/// Gap at c together with the piece of its Gröbner cone containing c.
GapEvaluation gap_function_eval(const IntMatrix& a, const RatVec& c, const GapOptions& options = {});

struct DiscoveredCone {
  GroebnerBasis groebner;
  Cone cone;
  RatVec interior;
};

struct Exploration {
  std::vector<DiscoveredCone> cones;
  /// The facet walk ran out of new cones before the budget.
  bool complete = false;
  /// Seeds skipped because they were not generic or gave unbounded programs.
  std::size_t skipped_seeds = 0;
};

/// Breadth-first walk over Gröbner cones: start at each seed, cross every
/// facet by a small step from a relative-interior point, deduplicate by
/// reduced basis. Stops after `budget` cones.
Exploration explore_cones(const IntMatrix& a, const std::vector<RatVec>& seeds, std::size_t budget,
                          const GapOptions& options = {});

/// Same walk over a user-supplied lattice.
Exploration explore_lattice_cones(const LatticeBasis& l, const std::vector<RatVec>& seeds, std::size_t budget,
                                  const GapOptions& options = {});

}  // namespace ipgap
