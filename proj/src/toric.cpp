#include "ipgap/toric.hpp"

#include "ipgap/errors.hpp"
#include "ipgap/lp.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <utility>

namespace ipgap {

std::string to_string(Tiebreak t) {
  switch (t) {
    case Tiebreak::Grevlex:
      return "grevlex";
    case Tiebreak::Grlex:
      return "grlex";
    case Tiebreak::Lex:
      return "lex";
  }
  return "grevlex";
}

Tiebreak parse_tiebreak(const std::string& s) {
  if (s == "grevlex") return Tiebreak::Grevlex;
  if (s == "grlex") return Tiebreak::Grlex;
  if (s == "lex") return Tiebreak::Lex;
  throw BadParameter("unknown tiebreak '" + s + "' (expected grevlex, grlex or lex)");
}

std::string to_string(VariableRank r) { return r == VariableRank::Natural ? "natural" : "reversed"; }

VariableRank parse_variable_rank(const std::string& s) {
  if (s == "natural") return VariableRank::Natural;
  if (s == "reversed") return VariableRank::Reversed;
  throw BadParameter("unknown variable order '" + s + "' (expected natural or reversed)");
}

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::vector<std::vector<std::int64_t>> weights, Final final_order,
                             std::vector<std::size_t> rank)
    : weights_(std::move(weights)), final_(final_order), rank_(std::move(rank)) {
  nvars_ = rank_.size();
  for (const auto& w : weights_) nvars_ = std::max(nvars_, w.size());
  if (rank_.empty()) {
    rank_.resize(nvars_);
    std::iota(rank_.begin(), rank_.end(), 0);
  }
  for (const auto& w : weights_)
    if (w.size() != nvars_) throw BadParameter("weight vector length mismatch");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& w : weights_) {
    __int128 sa = 0, sb = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      sa += static_cast<__int128>(w[i]) * a[i];
      sb += static_cast<__int128>(w[i]) * b[i];
    }
    if (sa != sb) return sa < sb ? -1 : 1;
  }
  auto lex = [&]() {
    for (std::size_t k = 0; k < rank_.size(); ++k) {
      const std::size_t i = rank_[k];
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  };
  auto revlex = [&]() {
    for (std::size_t k = rank_.size(); k-- > 0;) {
      const std::size_t i = rank_[k];
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  };
  if (final_ == Final::Grevlex || final_ == Final::Grlex) {
    Exponent da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
  }
  switch (final_) {
    case Final::Grevlex:
    case Final::Revlex:
      return revlex();
    case Final::Grlex:
    case Final::Lex:
      return lex();
  }
  return 0;
}

namespace {

MonomialOrder::Final final_for(Tiebreak t) {
  switch (t) {
    case Tiebreak::Grevlex:
      return MonomialOrder::Final::Grevlex;
    case Tiebreak::Grlex:
      return MonomialOrder::Final::Grlex;
    case Tiebreak::Lex:
      return MonomialOrder::Final::Lex;
  }
  return MonomialOrder::Final::Grevlex;
}

std::vector<std::int64_t> to_int64(const IntVec& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw BadParameter("weight entry exceeds 64 bits");
    out.push_back(x.get_si());
  }
  return out;
}

// Clear denominators of a nonnegative rational vector.
IntVec scale_to_integers(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  IntVec out;
  for (const auto& x : v) {
    Rat s = x * den;
    out.push_back(Int(s.get_num()));
  }
  Int g = 0;
  for (const auto& x : out) g = gcd(g, x);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

std::vector<std::size_t> ranking(std::size_t n, VariableRank rank) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), 0);
  if (rank == VariableRank::Reversed) std::reverse(r.begin(), r.end());
  return r;
}

}  // namespace

TermOrder::TermOrder(RatVec cost, std::vector<std::int64_t> weight, Tiebreak tiebreak, VariableRank rank)
    : cost_(std::move(cost)),
      weight_(std::move(weight)),
      tiebreak_(tiebreak),
      rank_(rank),
      order_({weight_}, final_for(tiebreak), ranking(weight_.size(), rank)) {
  if (weight_.size() != cost_.size()) throw BadParameter("weight/cost length mismatch");
  for (auto w : weight_)
    if (w < 0) throw NonTerminatingOrder("refined order weight has a negative entry; not a well-order");
}

TermOrder make_term_order(const LatticeBasis& l, const RatVec& cost, Tiebreak tiebreak, VariableRank rank) {
  const std::size_t n = l.ambient_dim();
  if (cost.size() != n) throw BadParameter("cost vector length does not match the lattice");
  // Find w in the span of L's orthogonal complement with c - w >= 0. Such a
  // w exists iff min{c·v : v in L_R, v >= 0} = 0 (Farkas).
  IntMatrix perp = orthogonal_complement(l);
  const std::size_t k = perp.rows();
  LPProblem p(k, Sense::Minimize);
  for (std::size_t i = 0; i < k; ++i) p.set_free(i);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(k);
    for (std::size_t i = 0; i < k; ++i) row[i] = perp(i, j);
    p.add_inequality(std::move(row), cost[j]);
  }
  LPSolution s = solve(p);
  if (s.status != LPStatus::Optimal)
    throw UnboundedProgram("cost vector is unbounded below on the lattice cone: some v >= 0 in L_R has c·v < 0");
  RatVec shifted = cost;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) shifted[j] -= s.point[i] * perp(i, j);
  return TermOrder(cost, to_int64(scale_to_integers(shifted)), tiebreak, rank);
}

Rat cost_of(const RatVec& c, const Monomial& u) {
  Rat s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (u[i] != 0) s += c[i] * Rat(static_cast<long>(u[i]));
  return s;
}

IntVec Binomial::difference() const {
  IntVec d(lead.nvars());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = Int(static_cast<long>(lead[i])) - Int(static_cast<long>(trail[i]));
  return d;
}

std::string format_binomial(const Binomial& b, const std::vector<std::string>& names) {
  return format_monomial(b.lead, names) + " - " + format_monomial(b.trail, names);
}

void Deadline::check(const char* where) const {
  if (at && std::chrono::steady_clock::now() > *at)
    throw BudgetExceeded(std::string("time budget exhausted during ") + where);
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BinomialEngine {
 public:
  BinomialEngine(const MonomialOrder& order, const Deadline& deadline) : order_(order), deadline_(deadline) {}

  void add_generator(const Binomial& g) {
    if (auto h = reduce(g.lead, g.trail)) insert(std::move(*h));
  }

  void run() {
    std::size_t steps = 0;
    while (!pairs_.empty()) {
      if ((++steps & 63u) == 0) deadline_.check("Buchberger");
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Binomial& f = polys_[p.i];
      const Binomial& g = polys_[p.j];
      Monomial a = (p.lcm / f.lead) * f.trail;
      Monomial b = (p.lcm / g.lead) * g.trail;
      if (auto h = reduce(std::move(a), std::move(b))) insert(std::move(*h));
    }
  }

  // Minimal basis with fully reduced trailing terms, ascending by lead.
  std::vector<Binomial> reduced_basis() const {
    std::vector<Binomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      Binomial b = polys_[k];
      b.trail = reduce_monomial(b.trail);
      out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [&](const Binomial& x, const Binomial& y) { return order_.compare(x.lead, y.lead) < 0; });
    return out;
  }

 private:
  struct PairLess {
    const MonomialOrder* order;
    bool operator()(const Pair& x, const Pair& y) const {
      int c = order->compare(x.lcm, y.lcm);
      if (c != 0) return c < 0;
      if (x.lcm != y.lcm) return x.lcm < y.lcm;
      return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    }
  };

  const Binomial* find_reducer(const Monomial& m) const {
    for (std::size_t k : active_list_)
      if (polys_[k].lead.divides(m)) return &polys_[k];
    return nullptr;
  }

  Monomial reduce_monomial(Monomial m) const {
    while (const Binomial* g = find_reducer(m)) m = (m / g->lead) * g->trail;
    return m;
  }

  std::optional<Binomial> reduce(Monomial a, Monomial b) const {
    while (true) {
      int c = order_.compare(a, b);
      if (c == 0) return std::nullopt;
      if (c < 0) std::swap(a, b);
      const Binomial* g = find_reducer(a);
      if (!g) break;
      a = (a / g->lead) * g->trail;
    }
    b = reduce_monomial(std::move(b));
    return Binomial{std::move(a), std::move(b)};
  }

  // Gebauer-Möller update with the new element h.
  void insert(Binomial h_poly) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(h_poly));
    active_.push_back(false);
    const Monomial& lh = polys_[h].lead;

    std::vector<Pair> candidates;
    for (std::size_t g : active_list_) candidates.push_back(Pair{g, h, polys_[g].lead.lcm(lh)});
    std::vector<Pair> kept;
    while (!candidates.empty()) {
      Pair p = std::move(candidates.back());
      candidates.pop_back();
      bool coprime = polys_[p.i].lead.coprime(lh);
      auto divides_lcm = [&](const Pair& q) { return q.lcm.divides(p.lcm); };
      bool dominated = std::any_of(candidates.begin(), candidates.end(), divides_lcm) ||
                       std::any_of(kept.begin(), kept.end(), divides_lcm);
      if (coprime || !dominated) kept.push_back(std::move(p));
    }
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& q = *it;
      if (lh.divides(q.lcm) && polys_[q.i].lead.lcm(lh) != q.lcm && polys_[q.j].lead.lcm(lh) != q.lcm)
        it = pairs_.erase(it);
      else
        ++it;
    }
    for (auto& p : kept)
      if (!polys_[p.i].lead.coprime(lh)) pairs_.insert(std::move(p));

    std::vector<std::size_t> next_active;
    for (std::size_t g : active_list_) {
      if (lh.divides(polys_[g].lead))
        active_[g] = false;
      else
        next_active.push_back(g);
    }
    next_active.push_back(h);
    active_[h] = true;
    active_list_ = std::move(next_active);
  }

  const MonomialOrder& order_;
  const Deadline& deadline_;
  std::vector<Binomial> polys_;
  std::vector<bool> active_;
  std::vector<std::size_t> active_list_;
  std::set<Pair, PairLess> pairs_{PairLess{&order_}};
};

std::vector<Binomial> basis_binomials(const LatticeBasis& l) {
  const std::size_t n = l.ambient_dim();
  std::vector<Binomial> gens;
  for (std::size_t j = 0; j < l.rank(); ++j) {
    IntVec v = l.generator(j);
    std::vector<Exponent> plus(n, 0), minus(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].fits_slong_p()) throw BadParameter("lattice entry exceeds 64 bits");
      long x = v[i].get_si();
      (x > 0 ? plus[i] : minus[i]) = x > 0 ? x : -x;
    }
    gens.push_back(Binomial{Monomial(std::move(plus)), Monomial(std::move(minus))});
  }
  return gens;
}

// Strictly positive integer vector orthogonal to L, if one exists.
std::optional<std::vector<std::int64_t>> positive_grading(const LatticeBasis& l) {
  IntMatrix perp = orthogonal_complement(l);
  const std::size_t k = perp.rows(), n = l.ambient_dim();
  if (k == 0) return std::nullopt;
  // maximize s  s.t.  (perp^T y)_j >= s,  s <= 1.
  LPProblem p(k + 1, Sense::Maximize);
  RatVec obj(k + 1, Rat(0));
  obj[k] = 1;
  p.set_objective(obj);
  for (std::size_t i = 0; i <= k; ++i) p.set_free(i);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(k + 1);
    for (std::size_t i = 0; i < k; ++i) row[i] = -Rat(perp(i, j));
    row[k] = 1;
    p.add_inequality(std::move(row), Rat(0));
  }
  RatVec cap(k + 1, Rat(0));
  cap[k] = 1;
  p.add_inequality(cap, Rat(1));
  LPSolution s = solve(p);
  if (!s.optimal() || s.value <= 0) return std::nullopt;
  RatVec g(n, Rat(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i) g[j] += s.point[i] * perp(i, j);
  return to_int64(scale_to_integers(g));
}

}  // namespace

std::vector<Binomial> binomial_groebner(const std::vector<Binomial>& gens, const MonomialOrder& order,
                                        const Deadline& deadline) {
  BinomialEngine engine(order, deadline);
  for (const auto& g : gens) engine.add_generator(g);
  engine.run();
  return engine.reduced_basis();
}

std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& l, const Deadline& deadline) {
  const std::size_t n = l.ambient_dim();
  std::vector<Binomial> gens = basis_binomials(l);
  if (gens.empty()) return gens;

  if (auto grading = positive_grading(l)) {
    for (std::size_t var = n; var-- > 0;) {
      std::vector<std::size_t> rank;
      for (std::size_t i = 0; i < n; ++i)
        if (i != var) rank.push_back(i);
      rank.push_back(var);
      MonomialOrder order({*grading}, MonomialOrder::Final::Revlex, rank);
      auto gb = binomial_groebner(gens, order, deadline);
      gens.clear();
      for (auto& b : gb) {
        Exponent common = std::min(b.lead[var], b.trail[var]);
        if (common > 0) {
          Monomial d = Monomial::variable_power(n, var, common);
          b.lead = b.lead / d;
          b.trail = b.trail / d;
        }
        gens.push_back(std::move(b));
      }
    }
    return gens;
  }

  // No positive grading: eliminate t from ⟨gens, t·x_1···x_n - 1⟩.
  auto lift = [n](const Monomial& m) {
    std::vector<Exponent> e(m.begin(), m.end());
    e.push_back(0);
    return Monomial(std::move(e));
  };
  std::vector<Binomial> lifted;
  for (const auto& g : gens) lifted.push_back(Binomial{lift(g.lead), lift(g.trail)});
  lifted.push_back(Binomial{Monomial(std::vector<Exponent>(n + 1, 1)), Monomial(n + 1)});
  std::vector<std::int64_t> t_weight(n + 1, 0);
  t_weight[n] = 1;
  MonomialOrder order({t_weight}, MonomialOrder::Final::Grevlex);
  auto gb = binomial_groebner(lifted, order, deadline);
  std::vector<Binomial> out;
  for (const auto& b : gb) {
    if (b.lead[n] != 0 || b.trail[n] != 0) continue;
    std::vector<Exponent> a(b.lead.begin(), b.lead.end() - 1), c(b.trail.begin(), b.trail.end() - 1);
    out.push_back(Binomial{Monomial(std::move(a)), Monomial(std::move(c))});
  }
  return out;
}

GroebnerBasis::GroebnerBasis(std::vector<Binomial> elements, TermOrder order)
    : elements_(std::move(elements)), order_(std::move(order)) {
  std::sort(elements_.begin(), elements_.end(),
            [&](const Binomial& x, const Binomial& y) { return order_.compare(x.lead, y.lead) < 0; });
}

Monomial GroebnerBasis::normal_form(const Monomial& z) const {
  Monomial m = z;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : elements_) {
      if (g.lead.divides(m)) {
        m = (m / g.lead) * g.trail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

GroebnerBasis buchberger(const std::vector<Binomial>& gens, const TermOrder& order, const Deadline& deadline) {
  for (const auto& g : gens)
    if (g.lead.nvars() != order.cost().size() || g.trail.nvars() != order.cost().size())
      throw BadParameter("generator has the wrong number of variables");
  return GroebnerBasis(binomial_groebner(gens, order.order(), deadline), order);
}

bool is_generic(const GroebnerBasis& gb) {
  const auto& c = gb.order().cost();
  return std::all_of(gb.elements().begin(), gb.elements().end(),
                     [&](const Binomial& b) { return cost_of(c, b.lead) > cost_of(c, b.trail); });
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> leads;
  for (const auto& b : gb.elements()) leads.push_back(b.lead);
  return minimalize(gb.nvars(), std::move(leads));
}

MonomialIdeal non_optimal_ideal(const GroebnerBasis& gb) {
  const auto& c = gb.order().cost();
  const std::size_t n = gb.nvars();
  // The c-initial forms of the basis generate in_c(I): leads of strict-drop
  // elements, and whole binomials for zero-drop elements. A monomial lies in
  // in_c(I) iff reducing it by the zero-drop moves reaches a strict-drop
  // lead. Close the strict leads under those moves, pulled back:
  // s in M and (a -> b) a zero-drop move give a + (s - b)^+ in M.
  std::vector<Monomial> strict;
  std::vector<const Binomial*> ties;
  for (const auto& b : gb.elements()) {
    Rat drop = cost_of(c, b.lead) - cost_of(c, b.trail);
    if (drop > 0)
      strict.push_back(b.lead);
    else
      ties.push_back(&b);
  }
  MonomialIdeal start = minimalize(n, std::move(strict));
  std::vector<Monomial> gens = start.generators();
  if (ties.empty()) return start;
  std::deque<Monomial> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Monomial s = std::move(queue.front());
    queue.pop_front();
    if (std::find(gens.begin(), gens.end(), s) == gens.end()) continue;
    for (const Binomial* t : ties) {
      Monomial u = t->lead * s.saturating_sub(t->trail);
      if (std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); })) continue;
      gens.erase(std::remove_if(gens.begin(), gens.end(), [&](const Monomial& g) { return u.divides(g); }),
                 gens.end());
      gens.push_back(u);
      queue.push_back(u);
    }
  }
  return minimalize(n, std::move(gens));
}

Monomial ip_optimum(const GroebnerBasis& gb, const Monomial& z) { return gb.normal_form(z); }

}  // namespace ipgap
