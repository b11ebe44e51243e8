#pragma once

// The integer programming gap: per-component auxiliary LPs, the overall
// maximum, an attaining witness, and the a-priori bound n·D(A)·Σ|c_i|.

#include "ipgap/exactmath.hpp"
#include "ipgap/monomial.hpp"
#include "ipgap/toric.hpp"

#include <optional>
#include <vector>

namespace ipgap {

/// Which monomial ideal the pipeline decomposes.
///   NonOptimal: M(L, c), exact for any bounded c.
///   Initial:    the leading-term ideal of the refined order, i.e. M(L, c')
///               for a generic perturbation c' of c chosen by the tiebreak.
enum class IdealKind { NonOptimal, Initial };

struct GapOptions {
  Tiebreak tiebreak = Tiebreak::Grevlex;
  VariableRank rank = VariableRank::Natural;
  IdealKind ideal = IdealKind::NonOptimal;
  Deadline deadline;
  unsigned threads = 1;
  /// Check IP(z) - LP(z) = gap at the witness; WitnessMismatch otherwise.
  bool verify_witness = true;
};

struct GapInstance {
  std::optional<IntMatrix> matrix;
  LatticeBasis lattice;
  RatVec cost;
  GroebnerBasis groebner;
  MonomialIdeal ideal;
  std::vector<IrreducibleComponent> components;
};

GapInstance make_instance(const IntMatrix& a, const RatVec& c, const GapOptions& options = {});
GapInstance make_lattice_instance(const LatticeBasis& l, const RatVec& c, const GapOptions& options = {});

struct ComponentGap {
  IrreducibleComponent component;
  Rat value;
  /// Optimal v of the auxiliary program, v = u - B·t.
  RatVec aux_optimum;
  /// The t attaining max w·t subject to b_i·t <= u_i (i in τ).
  RatVec t;
};

struct GapReport {
  std::vector<ComponentGap> per_component;  // canonical component order
  Rat gap;
  /// First attaining component in canonical order; empty when M = 0.
  std::optional<IrreducibleComponent> winner;
  /// Indices into per_component of every component attaining the gap.
  std::vector<std::size_t> attaining;
  Monomial witness_z;
  /// n·D(A)·Σ|c_i|; absent for lattice-only instances.
  std::optional<Rat> schrijver_bound;
  /// M = 0: every point is optimal and the gap is 0.
  bool trivial = false;
};

/// Gap value of one component. Throws UnboundedAux if the LP is unbounded.
ComponentGap gap_value(const IrreducibleComponent& comp, const GapInstance& inst);

/// Full report for a prepared instance.
GapReport gap_report(const GapInstance& inst, const GapOptions& options = {});

GapReport gap(const IntMatrix& a, const RatVec& c, const GapOptions& options = {});
GapReport gap_lattice(const LatticeBasis& l, const RatVec& c, const GapOptions& options = {});

/// z = u + v' with v'_i = max(0, -floor(v*_i)) for the winner, checked to
/// attain the gap exactly (WitnessMismatch otherwise).
Monomial gap_witness(const GapReport& report, const GapInstance& inst);

/// n·D(A)·Σ|c_i| with D(A) the largest absolute maximal minor.
Rat schrijver_bound(const IntMatrix& a, const RatVec& c);

/// Optimal value of the lattice program for z (c-value of the refined optimum).
Rat ip_value(const GapInstance& inst, const Monomial& z);
/// Optimal value of the linear relaxation for z: min c·y over y >= 0 with
/// y - z in L_R (for matrix instances, A·y = A·z).
Rat lp_relaxation_value(const GapInstance& inst, const Monomial& z);

}  // namespace ipgap
