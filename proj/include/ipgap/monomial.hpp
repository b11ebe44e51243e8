#pragma once

// Monomial ideals: minimal generators, membership, irreducible decomposition,
// standard pairs.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace ipgap {

using Exponent = std::int64_t;

/// x^u for u in N^n. Arithmetic is overflow-checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable_power(std::size_t nvars, std::size_t var, Exponent power);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }
  auto begin() const { return exps_.begin(); }
  auto end() const { return exps_.end(); }

  Exponent degree() const;
  std::size_t support_size() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; `other` must divide this.
  Monomial operator/(const Monomial& other) const;
  /// (this - other)^+ componentwise.
  Monomial saturating_sub(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t nvars);

/// A monomial ideal kept as its minimal generating set in canonical
/// (lexicographic) order. No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;
  /// Componentwise maximum exponent over the minimal generators.
  Monomial exponent_bound() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> monomials);
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> monomials);
inline bool contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);
bool is_squarefree_generated(const MonomialIdeal& ideal);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

/// I(u, τ) = ⟨x_i^{u_i+1} : i ∈ τ⟩ with u_j = 0 off τ.
class IrreducibleComponent {
 public:
  IrreducibleComponent(std::vector<bool> support, Monomial bound);
  /// Build from the pure powers x_i^{p_i} (p_i = 0 means x_i is absent).
  static IrreducibleComponent from_powers(const Monomial& powers);

  std::size_t nvars() const { return support_.size(); }
  const std::vector<bool>& support() const { return support_; }
  bool in_support(std::size_t i) const { return support_[i]; }
  const Monomial& bound() const { return bound_; }
  /// Exponent vector of the generators: u_i + 1 on τ, 0 elsewhere.
  Monomial powers() const;
  std::vector<Monomial> generators() const;
  MonomialIdeal as_ideal() const;

  bool contains(const Monomial& m) const;
  /// this ⊆ other as ideals.
  bool subset_of(const IrreducibleComponent& other) const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  /// Canonical order: by generator powers, lexicographically.
  friend std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b);

 private:
  std::vector<bool> support_;
  Monomial bound_;
};

std::string format_component(const IrreducibleComponent& c, const std::vector<std::string>& names);

/// Irredundant irreducible decomposition, canonically ordered.
/// Throws ZeroIdeal / UnitIdeal for the degenerate inputs.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Same result, computed by adding generators one at a time and pruning.
/// Independent of the splitting recursion; used as a cross-check.
std::vector<IrreducibleComponent> irreducible_decomposition_incremental(const MonomialIdeal& ideal);

/// Recombine components into the intersection ideal.
MonomialIdeal intersect(std::size_t nvars, const std::vector<IrreducibleComponent>& components);

/// Standard pair in the I(u, τ) convention: the set u + {v : v_i = 0 ∀ i ∈ τ}
/// of standard monomials, where τ is `bounded` and its complement is free.
struct StandardPair {
  Monomial root;
  std::vector<bool> bounded;

  std::vector<bool> free_set() const;
  IrreducibleComponent as_component() const { return IrreducibleComponent(bounded, root); }
  /// The point lies in root + N^{free}.
  bool covers(const Monomial& m) const;

  friend bool operator==(const StandardPair&, const StandardPair&) = default;
  friend auto operator<=>(const StandardPair&, const StandardPair&) = default;
};

/// All standard pairs, by bounded enumeration below the generator exponents.
std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal);

}  // namespace ipgap
