#pragma once

// Lattice ideals, binomial Buchberger under cost-refined term orders, and
// the non-optimal monomial ideal M(L, c).

#include "ipgap/exactmath.hpp"
#include "ipgap/monomial.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ipgap {

enum class Tiebreak { Grevlex, Grlex, Lex };

std::string to_string(Tiebreak t);
Tiebreak parse_tiebreak(const std::string& s);

/// Variable ranking used by the tiebreak: x_1 > ... > x_n or the reverse.
enum class VariableRank { Natural, Reversed };

std::string to_string(VariableRank r);
VariableRank parse_variable_rank(const std::string& s);

/// A monomial order: compare by a sequence of integer weight vectors, then
/// by a fixed tiebreak. Variables are ranked x_{rank[0]} > x_{rank[1]} > ...
class MonomialOrder {
 public:
  enum class Final { Grevlex, Grlex, Lex, Revlex };

  MonomialOrder(std::vector<std::vector<std::int64_t>> weights, Final final_order,
                std::vector<std::size_t> rank = {});

  std::size_t nvars() const { return nvars_; }
  /// <0, 0, >0 as a is smaller, equal, larger than b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  std::size_t nvars_;
  std::vector<std::vector<std::int64_t>> weights_;
  Final final_;
  std::vector<std::size_t> rank_;
};

/// Cost vector c refined by a tiebreak. Comparisons use an integer weight
/// that agrees with c on every fiber of the lattice but is nonnegative, so
/// the refined order is a well-order.
class TermOrder {
 public:
  TermOrder(RatVec cost, std::vector<std::int64_t> weight, Tiebreak tiebreak,
            VariableRank rank = VariableRank::Natural);

  const RatVec& cost() const { return cost_; }
  const std::vector<std::int64_t>& weight() const { return weight_; }
  Tiebreak tiebreak() const { return tiebreak_; }
  VariableRank rank() const { return rank_; }
  const MonomialOrder& order() const { return order_; }
  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

 private:
  RatVec cost_;
  std::vector<std::int64_t> weight_;
  Tiebreak tiebreak_;
  VariableRank rank_;
  MonomialOrder order_;
};

/// Builds the refined order for cost c on lattice l. Throws UnboundedProgram
/// when some v in L_R with v >= 0 has c·v < 0 (programs are then unbounded).
TermOrder make_term_order(const LatticeBasis& l, const RatVec& cost, Tiebreak tiebreak = Tiebreak::Grevlex,
                          VariableRank rank = VariableRank::Natural);

/// Cost value c·u.
Rat cost_of(const RatVec& c, const Monomial& u);

/// x^lead - x^trail, the lead being larger in whatever order produced it.
struct Binomial {
  Monomial lead;
  Monomial trail;

  /// lead - trail as an integer vector.
  IntVec difference() const;

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

std::string format_binomial(const Binomial& b, const std::vector<std::string>& names);

/// Optional wall-clock limit for long computations.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  void check(const char* where) const;
  static Deadline after(std::chrono::seconds s) { return Deadline{std::chrono::steady_clock::now() + s}; }
};

/// Reduced Gröbner basis in canonical order (ascending leading terms).
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Binomial> elements, TermOrder order);

  const std::vector<Binomial>& elements() const { return elements_; }
  const TermOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.cost().size(); }
  std::size_t size() const { return elements_.size(); }

  /// Normal form of x^z: the refined-order minimum of its fiber.
  Monomial normal_form(const Monomial& z) const;

 private:
  std::vector<Binomial> elements_;
  TermOrder order_;
};

/// Generators of the saturated lattice ideal I_L. The lattice basis ideal is
/// saturated variable by variable (x_n, ..., x_1) with the revlex trick when
/// L admits a positive grading; otherwise by eliminating t from
/// ⟨basis binomials, t·x_1···x_n - 1⟩.
std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& l, const Deadline& deadline = {});

/// Reduced Gröbner basis of the ideal generated by `gens` (pure binomials).
GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order, const Deadline& deadline = {});

/// Lower-level entry point used by saturation: any monomial order.
std::vector<Binomial> binomial_groebner(const std::vector<Binomial>& gens, const MonomialOrder& order,
                                        const Deadline& deadline = {});

/// True iff every element has a strictly positive cost drop lead -> trail.
bool is_generic(const GroebnerBasis& gb);

/// M(L, c): the ideal of non-optimal monomials.
MonomialIdeal non_optimal_ideal(const GroebnerBasis& gb);

/// The initial ideal of the refined order, M(L, c') for a generic
/// perturbation c' of c that realizes the tiebreak.
MonomialIdeal initial_ideal(const GroebnerBasis& gb);

/// Optimal solution of the lattice program for z under the refined order.
Monomial ip_optimum(const GroebnerBasis& gb, const Monomial& z);

}  // namespace ipgap
