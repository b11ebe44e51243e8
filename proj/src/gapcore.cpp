#include "ipgap/gapcore.hpp"

#include "ipgap/errors.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/parallel.hpp"

#include <algorithm>

namespace ipgap {

namespace {

GapInstance build(std::optional<IntMatrix> matrix, const LatticeBasis& l, const RatVec& c, const GapOptions& options) {
  if (c.size() != l.ambient_dim()) throw BadParameter("cost vector has the wrong length");
  TermOrder order = make_term_order(l, c, options.tiebreak, options.rank);
  auto gens = lattice_ideal_generators(l, options.deadline);
  GroebnerBasis gb = buchberger(gens, order, options.deadline);
  MonomialIdeal ideal = options.ideal == IdealKind::NonOptimal ? non_optimal_ideal(gb) : initial_ideal(gb);
  std::vector<IrreducibleComponent> components;
  if (!ideal.is_zero()) components = irreducible_decomposition(ideal);
  return GapInstance{std::move(matrix), l, c, std::move(gb), std::move(ideal), std::move(components)};
}

IntVec to_intvec(const Monomial& m) {
  IntVec v;
  for (auto e : m) v.emplace_back(static_cast<long>(e));
  return v;
}

}  // namespace

GapInstance make_instance(const IntMatrix& a, const RatVec& c, const GapOptions& options) {
  if (c.size() != a.cols()) throw BadParameter("cost vector length does not match the matrix");
  return build(a, kernel_lattice(a), c, options);
}

GapInstance make_lattice_instance(const LatticeBasis& l, const RatVec& c, const GapOptions& options) {
  return build(std::nullopt, l, c, options);
}

ComponentGap gap_value(const IrreducibleComponent& comp, const GapInstance& inst) {
  const IntMatrix& b = inst.lattice.basis;
  const std::size_t n = b.rows(), m = b.cols();
  if (comp.nvars() != n) throw BadParameter("component has the wrong number of variables");
  RatVec w(m, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) w[j] += inst.cost[i] * b(i, j);

  LPProblem p(m, Sense::Maximize);
  p.set_objective(w);
  for (std::size_t j = 0; j < m; ++j) p.set_free(j);
  for (std::size_t i = 0; i < n; ++i) {
    if (!comp.in_support(i)) continue;
    p.add_inequality(to_rat(b.row(i)), Rat(static_cast<long>(comp.bound()[i])));
  }
  LPSolution s = solve(p);
  if (s.status == LPStatus::Unbounded)
    throw UnboundedAux("auxiliary program is unbounded for component " +
                       format_component(comp, default_names(n)));
  if (!s.optimal()) throw InternalError("auxiliary program infeasible although t = 0 is feasible");

  ComponentGap out{comp, s.value, RatVec(n), s.point};
  for (std::size_t i = 0; i < n; ++i) {
    Rat v = static_cast<long>(comp.bound()[i]);
    for (std::size_t j = 0; j < m; ++j) v -= b(i, j) * s.point[j];
    out.aux_optimum[i] = v;
  }
  return out;
}

Rat ip_value(const GapInstance& inst, const Monomial& z) { return cost_of(inst.cost, ip_optimum(inst.groebner, z)); }

Rat lp_relaxation_value(const GapInstance& inst, const Monomial& z) {
  if (inst.matrix) {
    LPSolution s = lp_value(*inst.matrix, inst.matrix->apply(to_intvec(z)), inst.cost);
    if (!s.optimal()) throw UnboundedProgram("linear relaxation is unbounded");
    return s.value;
  }
  // min c·(z - B t) subject to z - B t >= 0, t free.
  const IntMatrix& b = inst.lattice.basis;
  const std::size_t n = b.rows(), m = b.cols();
  RatVec w(m, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) w[j] += inst.cost[i] * b(i, j);
  LPProblem p(m, Sense::Maximize);
  p.set_objective(w);
  for (std::size_t j = 0; j < m; ++j) p.set_free(j);
  for (std::size_t i = 0; i < n; ++i) p.add_inequality(to_rat(b.row(i)), Rat(static_cast<long>(z[i])));
  LPSolution s = solve(p);
  if (!s.optimal()) throw UnboundedProgram("linear relaxation is unbounded");
  return cost_of(inst.cost, z) - s.value;
}

namespace {

Monomial witness_point(const GapReport& report, const GapInstance& inst) {
  const std::size_t n = inst.lattice.ambient_dim();
  if (!report.winner) return Monomial(n);
  const ComponentGap& win = report.per_component.at(report.attaining.at(0));
  std::vector<Exponent> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int f = floor(win.aux_optimum[i]);
    Int shift = f < 0 ? Int(-f) : Int(0);
    if (!shift.fits_slong_p()) throw BadParameter("witness coordinate exceeds 64 bits");
    z[i] = win.component.bound()[i] + shift.get_si();
  }
  return Monomial(std::move(z));
}

}  // namespace

Monomial gap_witness(const GapReport& report, const GapInstance& inst) {
  Monomial z = witness_point(report, inst);
  Rat diff = ip_value(inst, z) - lp_relaxation_value(inst, z);
  if (diff != report.gap)
    throw WitnessMismatch("witness " + format_monomial(z, default_names(z.nvars())) + " gives IP - LP = " +
                          to_string(diff) + " but the gap is " + to_string(report.gap));
  return z;
}

Rat schrijver_bound(const IntMatrix& a, const RatVec& c) {
  if (c.size() != a.cols()) throw BadParameter("cost vector length does not match the matrix");
  Rat total = 0;
  for (const auto& x : c) total += abs(x);
  return Rat(static_cast<long>(a.cols())) * Rat(max_maximal_minor(a)) * total;
}

GapReport gap_report(const GapInstance& inst, const GapOptions& options) {
  GapReport report;
  const std::size_t n = inst.lattice.ambient_dim();
  if (inst.matrix) report.schrijver_bound = schrijver_bound(*inst.matrix, inst.cost);
  if (inst.components.empty()) {
    report.gap = 0;
    report.witness_z = Monomial(n);
    report.trivial = true;
    return report;
  }

  std::vector<std::optional<ComponentGap>> values(inst.components.size());
  parallel_for(values.size(), options.threads, [&](std::size_t k) {
    options.deadline.check("auxiliary programs");
    values[k] = gap_value(inst.components[k], inst);
  });
  for (auto& v : values) report.per_component.push_back(std::move(*v));

  report.gap = report.per_component.front().value;
  for (const auto& pc : report.per_component) report.gap = std::max(report.gap, pc.value);
  for (std::size_t k = 0; k < report.per_component.size(); ++k)
    if (report.per_component[k].value == report.gap) report.attaining.push_back(k);
  report.winner = report.per_component[report.attaining.front()].component;

  report.witness_z = options.verify_witness ? gap_witness(report, inst) : witness_point(report, inst);
  return report;
}

GapReport gap(const IntMatrix& a, const RatVec& c, const GapOptions& options) {
  return gap_report(make_instance(a, c, options), options);
}

GapReport gap_lattice(const LatticeBasis& l, const RatVec& c, const GapOptions& options) {
  return gap_report(make_lattice_instance(l, c, options), options);
}

}  // namespace ipgap
