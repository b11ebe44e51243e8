#include "ipgap/fan.hpp"

#include "ipgap/errors.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/parallel.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace ipgap {

namespace {

// Positive multiple with coprime integer entries.
RatVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  IntVec ints;
  for (const auto& x : v) ints.emplace_back(Rat(x * den).get_num());
  Int g = 0;
  for (const auto& x : ints) g = gcd(g, x);
  if (g == 0) return RatVec(v.size(), Rat(0));
  RatVec out;
  for (auto& x : ints) out.emplace_back(Int(x / g));
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec negate(const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// max s subject to h·x >= s (h in ineqs), e·x = 0 (e in eqs), -1 <= x <= 1,
// s <= 1. Returns x when s > 0.
std::optional<RatVec> deep_point(std::size_t dim, const std::vector<RatVec>& ineqs,
                                 const std::vector<RatVec>& eqs = {}) {
  LPProblem p(dim + 1, Sense::Maximize);
  RatVec obj(dim + 1, Rat(0));
  obj[dim] = 1;
  p.set_objective(obj);
  for (std::size_t i = 0; i <= dim; ++i) p.set_free(i);
  for (const auto& h : ineqs) {
    RatVec row(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) row[i] = -h[i];
    row[dim] = 1;
    p.add_inequality(std::move(row), Rat(0));
  }
  for (const auto& e : eqs) {
    RatVec row(e);
    row.emplace_back(0);
    p.add_equality(std::move(row), Rat(0));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec row(dim + 1, Rat(0));
    row[i] = 1;
    p.add_inequality(row, Rat(1));
    row[i] = -1;
    p.add_inequality(row, Rat(1));
  }
  p.add_inequality(obj, Rat(1));
  LPSolution s = solve(p);
  if (!s.optimal() || s.value <= 0) return std::nullopt;
  return RatVec(s.point.begin(), s.point.begin() + static_cast<std::ptrdiff_t>(dim));
}

// argmax h·x over the cone intersected with the box [-1, 1]^dim.
RatVec farthest_point(const Cone& cone, const RatVec& h) {
  const std::size_t dim = cone.dim;
  LPProblem p(dim, Sense::Maximize);
  p.set_objective(h);
  for (std::size_t i = 0; i < dim; ++i) p.set_free(i);
  for (const auto& g : cone.inequalities) p.add_inequality(negate(g), Rat(0));
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec row(dim, Rat(0));
    row[i] = 1;
    p.add_inequality(row, Rat(1));
    row[i] = -1;
    p.add_inequality(row, Rat(1));
  }
  LPSolution s = solve(p);
  if (!s.optimal()) throw InternalError("bounded LP over a cone did not solve");
  return s.point;
}

Cone with_extra(const Cone& base, const std::vector<RatVec>& extra) {
  Cone out = base;
  for (const auto& h : extra) {
    RatVec p = primitive(h);
    if (!is_zero(p) && std::find(out.inequalities.begin(), out.inequalities.end(), p) == out.inequalities.end())
      out.inequalities.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool Cone::contains(const RatVec& c) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const RatVec& h) { return dot(h, c) >= 0; });
}

bool Cone::interior_contains(const RatVec& c) const {
  return std::all_of(inequalities.begin(), inequalities.end(), [&](const RatVec& h) { return dot(h, c) > 0; });
}

Cone groebner_cone(const GroebnerBasis& gb) {
  Cone cone;
  cone.dim = gb.nvars();
  std::set<RatVec> seen;
  for (const auto& b : gb.elements()) {
    RatVec h = primitive(to_rat(b.difference()));
    if (!is_zero(h) && seen.insert(h).second) cone.inequalities.push_back(std::move(h));
  }
  return cone;
}

std::vector<RatVec> facets(const Cone& cone) {
  std::vector<RatVec> out;
  for (std::size_t k = 0; k < cone.inequalities.size(); ++k) {
    const RatVec& h = cone.inequalities[k];
    LPProblem p(cone.dim, Sense::Minimize);
    p.set_objective(h);
    for (std::size_t i = 0; i < cone.dim; ++i) p.set_free(i);
    for (std::size_t j = 0; j < cone.inequalities.size(); ++j)
      if (j != k) p.add_inequality(negate(cone.inequalities[j]), Rat(0));
    p.add_inequality(negate(h), Rat(1));
    LPSolution s = solve(p);
    if (s.optimal() && s.value < 0) out.push_back(h);
  }
  return out;
}

std::optional<RatVec> interior_point(const Cone& cone) { return deep_point(cone.dim, cone.inequalities); }

std::vector<GapFanPiece> gap_fan_subdivide(const GapInstance& inst, const GapOptions& options) {
  if (!is_generic(inst.groebner))
    throw NonGenericCost("cost vector lies on a wall of the Gröbner fan; pieces are defined for generic costs only");
  const Cone cone = groebner_cone(inst.groebner);
  const auto center = interior_point(cone);
  if (!center) throw DegenerateCone("Gröbner cone has empty interior");
  const std::size_t n = cone.dim;
  if (inst.components.empty()) {
    // M = 0: the gap is identically zero on the cone.
    return {};
  }

  std::vector<RatVec> samples{*center};
  for (const auto& h : facets(cone)) {
    RatVec far = farthest_point(cone, h);
    RatVec mid(n);
    for (std::size_t i = 0; i < n; ++i) mid[i] = ((*center)[i] + far[i]) / 2;
    samples.push_back(std::move(mid));
  }

  std::vector<RatVec> forms(inst.components.size());
  parallel_for(forms.size(), options.threads, [&](std::size_t k) {
    const auto& comp = inst.components[k];
    ComponentGap g = gap_value(comp, inst);
    RatVec form(n);
    for (std::size_t i = 0; i < n; ++i) form[i] = Rat(static_cast<long>(comp.bound()[i])) - g.aux_optimum[i];
    GapInstance probe{std::nullopt, inst.lattice, inst.cost, inst.groebner, MonomialIdeal(n), {}};
    for (const auto& s : samples) {
      probe.cost = s;
      if (gap_value(comp, probe).value != dot(form, s))
        throw InternalError("auxiliary optimum of " + format_component(comp, default_names(n)) +
                            " is not constant on the Gröbner cone");
    }
    forms[k] = std::move(form);
  });

  // Components with identical linear forms share a piece.
  std::vector<RatVec> distinct;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t k = 0; k < forms.size(); ++k) {
    auto it = std::find(distinct.begin(), distinct.end(), forms[k]);
    if (it == distinct.end()) {
      distinct.push_back(forms[k]);
      members.push_back({k});
    } else {
      members[static_cast<std::size_t>(it - distinct.begin())].push_back(k);
    }
  }

  std::vector<GapFanPiece> pieces;
  for (std::size_t g = 0; g < distinct.size(); ++g) {
    std::vector<RatVec> extra;
    for (std::size_t o = 0; o < distinct.size(); ++o)
      if (o != g) extra.push_back(sub(distinct[g], distinct[o]));
    Cone piece_cone = with_extra(cone, extra);
    auto inside = interior_point(piece_cone);
    if (!inside) continue;
    GapFanPiece piece{piece_cone, inst.components[members[g].front()], {}, distinct[g], *inside};
    for (auto k : members[g]) piece.winners.push_back(inst.components[k]);
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

std::vector<RatVec> splitting_hyperplanes(const std::vector<GapFanPiece>& pieces) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      RatVec h = primitive(sub(pieces[i].linear_form, pieces[j].linear_form));
      if (is_zero(h)) continue;
      RatVec minus_h = negate(h);
      std::vector<RatVec> ineqs;
      for (const auto* piece : {&pieces[i], &pieces[j]})
        for (const auto& g : piece->cone.inequalities)
          if (g != h && g != minus_h && std::find(ineqs.begin(), ineqs.end(), g) == ineqs.end()) ineqs.push_back(g);
      if (deep_point(h.size(), ineqs, {h})) out.push_back(std::move(h));
    }
  return out;
}

GapEvaluation gap_function_eval(const IntMatrix& a, const RatVec& c, const GapOptions& options) {
  GapInstance inst = make_instance(a, c, options);
  GapReport report = gap_report(inst, options);
  auto pieces = gap_fan_subdivide(inst, options);
  for (auto& piece : pieces) {
    if (piece.cone.contains(c) && dot(piece.linear_form, c) == report.gap) {
      GapEvaluation out{report.gap, std::move(piece), {}};
      for (auto k : report.attaining) out.ties.push_back(report.per_component[k].component);
      return out;
    }
  }
  throw InternalError("no gap-fan piece contains the cost vector");
}

namespace {

// Element order inside a basis follows its term order; sort for identity.
using BasisKey = std::vector<Binomial>;

BasisKey key_of(const GroebnerBasis& gb) {
  BasisKey k = gb.elements();
  std::sort(k.begin(), k.end());
  return k;
}

Exploration explore(const LatticeBasis& l, const std::vector<RatVec>& seeds, std::size_t budget,
                    const GapOptions& options) {
  Exploration out;
  const std::size_t n = l.ambient_dim();
  const auto gens = lattice_ideal_generators(l, options.deadline);

  auto run = [&](const RatVec& c) -> std::optional<GroebnerBasis> {
    try {
      TermOrder order = make_term_order(l, c, options.tiebreak, options.rank);
      GroebnerBasis gb = buchberger(gens, order, options.deadline);
      if (!is_generic(gb)) return std::nullopt;
      return gb;
    } catch (const UnboundedProgram&) {
      return std::nullopt;
    }
  };

  std::set<BasisKey> known;
  std::deque<GroebnerBasis> queue;
  for (const auto& s : seeds) {
    if (s.size() != n) throw BadParameter("seed cost vector has the wrong length");
    if (auto gb = run(s))
      queue.push_back(std::move(*gb));
    else
      ++out.skipped_seeds;
  }

  try {
    while (!queue.empty()) {
      options.deadline.check("cone exploration");
      GroebnerBasis gb = std::move(queue.front());
      queue.pop_front();
      if (known.count(key_of(gb))) continue;
      if (out.cones.size() >= budget) return out;
      Cone cone = groebner_cone(gb);
      auto p = interior_point(cone);
      if (!p) continue;
      known.insert(key_of(gb));

      const auto walls = facets(cone);
      for (std::size_t k = 0; k < walls.size(); ++k) {
        const RatVec& h = walls[k];
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < walls.size(); ++j)
          if (j != k) others.push_back(walls[j]);
        auto q = deep_point(n, others, {h});
        if (!q) continue;
        Rat eps(1);
        for (int attempt = 0; attempt < 40; ++attempt, eps /= 2) {
          RatVec next(n);
          for (std::size_t i = 0; i < n; ++i) next[i] = (*q)[i] - eps * h[i];
          auto neighbour = run(next);
          if (!neighbour || !groebner_cone(*neighbour).contains(*q)) continue;
          if (!known.count(key_of(*neighbour))) queue.push_back(std::move(*neighbour));
          break;
        }
      }
      out.cones.push_back(DiscoveredCone{std::move(gb), std::move(cone), std::move(*p)});
    }
  } catch (const BudgetExceeded&) {
    return out;
  }
  out.complete = true;
  return out;
}

}  // namespace

Exploration explore_cones(const IntMatrix& a, const std::vector<RatVec>& seeds, std::size_t budget,
                          const GapOptions& options) {
  return explore(kernel_lattice(a), seeds, budget, options);
}

Exploration explore_lattice_cones(const LatticeBasis& l, const std::vector<RatVec>& seeds, std::size_t budget,
                                  const GapOptions& options) {
  return explore(l, seeds, budget, options);
}

}  // namespace ipgap
