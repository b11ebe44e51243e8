#include "ipgap/monomial.hpp"

#include "ipgap/errors.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace ipgap {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw BadParameter("exponent overflow");
  return out;
}

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw BadParameter("monomials over different numbers of variables");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw BadParameter("negative exponent in monomial");
}

Monomial Monomial::variable_power(std::size_t nvars, std::size_t var, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d = checked_add(d, e);
  return d;
}

std::size_t Monomial::support_size() const {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw BadParameter("monomial division is not exact");
    out.exps_[i] = exps_[i] - other.exps_[i];
  }
  return out;
}

Monomial Monomial::saturating_sub(const Monomial& other) const {
  require_same_size(*this, other);
  Monomial out(nvars());
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max<Exponent>(0, exps_[i] - other.exps_[i]);
  return out;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (m[i] != 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << format_monomial(m, default_names(m.nvars()));
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

// ---------------------------------------------------------------- ideals

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> monomials) {
  for (const auto& m : monomials)
    if (m.nvars() != nvars) throw BadParameter("monomial has the wrong number of variables");
  // Sorting by degree first means a divisor is always seen before its multiples.
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  MonomialIdeal ideal(nvars);
  for (auto& m : monomials) {
    bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) ideal.gens_.push_back(std::move(m));
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end());
  return ideal;
}

bool MonomialIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::exponent_bound() const {
  std::vector<Exponent> bound(nvars_, 0);
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < nvars_; ++i) bound[i] = std::max(bound[i], g[i]);
  return Monomial(std::move(bound));
}

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.nvars() == b.nvars() && a.contains(b) && b.contains(a);
}

bool is_squarefree_generated(const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(), [](const Monomial& g) {
    return std::all_of(g.begin(), g.end(), [](Exponent e) { return e <= 1; });
  });
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.nvars(), std::move(gens));
}

// ---------------------------------------------------------------- components

IrreducibleComponent::IrreducibleComponent(std::vector<bool> support, Monomial bound)
    : support_(std::move(support)), bound_(std::move(bound)) {
  if (support_.size() != bound_.nvars()) throw BadParameter("component support/bound size mismatch");
  for (std::size_t i = 0; i < support_.size(); ++i)
    if (!support_[i] && bound_[i] != 0) throw BadParameter("component bound must vanish off its support");
}

IrreducibleComponent IrreducibleComponent::from_powers(const Monomial& powers) {
  std::vector<bool> support(powers.nvars());
  std::vector<Exponent> bound(powers.nvars(), 0);
  for (std::size_t i = 0; i < powers.nvars(); ++i) {
    support[i] = powers[i] > 0;
    if (support[i]) bound[i] = powers[i] - 1;
  }
  return IrreducibleComponent(std::move(support), Monomial(std::move(bound)));
}

Monomial IrreducibleComponent::powers() const {
  std::vector<Exponent> p(nvars(), 0);
  for (std::size_t i = 0; i < nvars(); ++i)
    if (support_[i]) p[i] = bound_[i] + 1;
  return Monomial(std::move(p));
}

std::vector<Monomial> IrreducibleComponent::generators() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (support_[i]) gens.push_back(Monomial::variable_power(nvars(), i, bound_[i] + 1));
  return gens;
}

MonomialIdeal IrreducibleComponent::as_ideal() const { return minimalize(nvars(), generators()); }

bool IrreducibleComponent::contains(const Monomial& m) const {
  for (std::size_t i = 0; i < nvars(); ++i)
    if (support_[i] && m[i] > bound_[i]) return true;
  return false;
}

bool IrreducibleComponent::subset_of(const IrreducibleComponent& other) const {
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (!support_[i]) continue;
    if (!other.support_[i] || other.bound_[i] > bound_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const IrreducibleComponent& a, const IrreducibleComponent& b) {
  return a.powers() <=> b.powers();
}

std::string format_component(const IrreducibleComponent& c, const std::vector<std::string>& names) {
  std::string out = "<";
  bool first = true;
  for (const auto& g : c.generators()) {
    if (!first) out += ", ";
    first = false;
    out += format_monomial(g, names);
  }
  return out + ">";
}

namespace {

// Keep only inclusion-minimal components, in canonical order.
std::vector<IrreducibleComponent> prune(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      redundant = j != i && comps[j].subset_of(comps[i]);
    if (!redundant) kept.push_back(comps[i]);
  }
  return kept;
}

void check_decomposable(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw ZeroIdeal("irreducible decomposition of the zero ideal");
  if (ideal.is_unit()) throw UnitIdeal("irreducible decomposition of the unit ideal");
}

using SplitMemo = std::map<std::vector<Monomial>, std::vector<IrreducibleComponent>>;

std::vector<IrreducibleComponent> split_decompose(const MonomialIdeal& ideal, SplitMemo& memo) {
  if (auto it = memo.find(ideal.generators()); it != memo.end()) return it->second;
  const std::size_t n = ideal.nvars();
  const auto& gens = ideal.generators();
  auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& g) { return g.support_size() >= 2; });
  std::vector<IrreducibleComponent> result;
  if (mixed == gens.end()) {
    std::vector<Exponent> powers(n, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] != 0) powers[i] = g[i];
    result.push_back(IrreducibleComponent::from_powers(Monomial(std::move(powers))));
  } else {
    const Monomial& g = *mixed;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g[i] > g[var]) var = i;
    Monomial pure = Monomial::variable_power(n, var, g[var]);
    auto left_gens = gens;
    left_gens.push_back(pure);
    auto right_gens = gens;
    right_gens.push_back(g / pure);
    auto left = split_decompose(minimalize(n, std::move(left_gens)), memo);
    auto right = split_decompose(minimalize(n, std::move(right_gens)), memo);
    left.insert(left.end(), right.begin(), right.end());
    result = prune(std::move(left));
  }
  memo.emplace(ideal.generators(), result);
  return result;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  check_decomposable(ideal);
  SplitMemo memo;
  return split_decompose(ideal, memo);
}

std::vector<IrreducibleComponent> irreducible_decomposition_incremental(const MonomialIdeal& ideal) {
  check_decomposable(ideal);
  const std::size_t n = ideal.nvars();
  std::vector<IrreducibleComponent> comps;
  bool first = true;
  for (const auto& g : ideal.generators()) {
    std::vector<IrreducibleComponent> next;
    if (first) {
      for (std::size_t i = 0; i < n; ++i)
        if (g[i] != 0) next.push_back(IrreducibleComponent::from_powers(Monomial::variable_power(n, i, g[i])));
      first = false;
    } else {
      for (const auto& c : comps) {
        if (c.contains(g)) {
          next.push_back(c);
          continue;
        }
        // c + ⟨g⟩ = ∩_i (c + ⟨x_i^{g_i}⟩), each term irreducible.
        Monomial p = c.powers();
        for (std::size_t i = 0; i < n; ++i) {
          if (g[i] == 0) continue;
          std::vector<Exponent> q(p.begin(), p.end());
          q[i] = q[i] == 0 ? g[i] : std::min(q[i], g[i]);
          next.push_back(IrreducibleComponent::from_powers(Monomial(std::move(q))));
        }
      }
    }
    comps = prune(std::move(next));
  }
  return comps;
}

MonomialIdeal intersect(std::size_t nvars, const std::vector<IrreducibleComponent>& components) {
  if (components.empty()) throw BadParameter("intersection of no components");
  MonomialIdeal acc = components.front().as_ideal();
  for (std::size_t k = 1; k < components.size(); ++k) {
    std::vector<Monomial> prods;
    for (const auto& a : acc.generators())
      for (const auto& b : components[k].generators()) prods.push_back(a.lcm(b));
    acc = minimalize(nvars, std::move(prods));
  }
  return acc;
}

// ---------------------------------------------------------------- standard pairs

std::vector<bool> StandardPair::free_set() const {
  std::vector<bool> f(bounded.size());
  for (std::size_t i = 0; i < bounded.size(); ++i) f[i] = !bounded[i];
  return f;
}

bool StandardPair::covers(const Monomial& m) const {
  for (std::size_t i = 0; i < bounded.size(); ++i)
    if (bounded[i] && m[i] != root[i]) return false;
  return true;
}

namespace {

// root + N^{free} avoids the ideal: every generator exceeds root somewhere on τ.
bool admissible(const MonomialIdeal& ideal, const std::vector<Exponent>& root, const std::vector<bool>& bounded) {
  for (const auto& g : ideal.generators()) {
    bool escapes = false;
    for (std::size_t i = 0; i < root.size() && !escapes; ++i) escapes = bounded[i] && g[i] > root[i];
    if (!escapes) return false;
  }
  return true;
}

}  // namespace

std::vector<StandardPair> standard_pairs(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.nvars();
  if (n > 20) throw BadParameter("standard pair enumeration limited to 20 variables");
  const Monomial bound = ideal.exponent_bound();
  std::vector<StandardPair> pairs;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<bool> bounded(n);
    std::vector<std::size_t> vars;
    bool empty_box = false;
    for (std::size_t i = 0; i < n; ++i) {
      bounded[i] = (mask >> i) & 1u;
      if (bounded[i]) {
        vars.push_back(i);
        if (bound[i] == 0) empty_box = true;
      }
    }
    if (empty_box) continue;
    std::vector<Exponent> root(n, 0);
    while (true) {
      if (admissible(ideal, root, bounded)) {
        bool maximal = true;
        for (std::size_t j : vars) {
          auto wider_root = root;
          wider_root[j] = 0;
          auto wider = bounded;
          wider[j] = false;
          if (admissible(ideal, wider_root, wider)) {
            maximal = false;
            break;
          }
        }
        if (maximal) pairs.push_back(StandardPair{Monomial(root), bounded});
      }
      std::size_t k = 0;
      while (k < vars.size()) {
        if (++root[vars[k]] < bound[vars[k]]) break;
        root[vars[k]] = 0;
        ++k;
      }
      if (k == vars.size()) break;
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace ipgap
