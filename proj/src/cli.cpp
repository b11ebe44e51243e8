#include "ipgap/cli.hpp"

#include "ipgap/errors.hpp"
#include "ipgap/fan.hpp"
#include "ipgap/gapcore.hpp"
#include "ipgap/instance.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/models.hpp"
#include "ipgap/oracle.hpp"
#include "ipgap/parallel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace ipgap {

namespace {

using Json = nlohmann::ordered_json;

struct Flags {
  std::string command;
  std::string path;
  std::string tiebreak;
  std::string variables;
  std::string ideal;
  std::string sense;
  std::string box;
  std::string seeds;
  std::size_t budget = 0;
  bool verify = false;
  bool timing = false;
  std::string format = "text";
};

// ------------------------------------------------------------ rendering

Json rat_json(const Rat& r) { return to_string(r); }

Json rat_vec_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (auto e : m) out.push_back(e);
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string vec_text(const Json& arr) {
  std::vector<std::string> parts;
  for (const auto& x : arr) parts.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  return "(" + join(parts, ", ") + ")";
}

// "305p - 135n - 308d + 138q"
std::string linear_text(const RatVec& h, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == 0) continue;
    Rat a = abs(h[i]);
    std::string coef = a == 1 ? "" : to_string(a);
    if (s.empty())
      s = (h[i] < 0 ? "-" : "") + coef + names[i];
    else
      s += (h[i] < 0 ? " - " : " + ") + coef + names[i];
  }
  return s.empty() ? "0" : s;
}

Json component_json(const IrreducibleComponent& c, const std::vector<std::string>& names) {
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(format_monomial(g, names));
  return Json{{"component", format_component(c, names)}, {"generators", gens}, {"u", monomial_json(c.bound())}};
}

Json ideal_json(const MonomialIdeal& ideal, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& g : ideal.generators()) out.push_back(format_monomial(g, names));
  return out;
}

std::string ideal_kind_text(IdealKind k) { return k == IdealKind::NonOptimal ? "nonoptimal" : "initial"; }

// ------------------------------------------------------------ setup

GapOptions options_for(const Instance& inst) {
  GapOptions o;
  o.tiebreak = inst.tiebreak;
  o.rank = inst.rank;
  o.ideal = inst.ideal;
  o.threads = threads_from_env();
  return o;
}

void apply_flags(Instance& inst, const Flags& f) {
  if (!f.tiebreak.empty()) inst.tiebreak = parse_tiebreak(f.tiebreak);
  if (!f.variables.empty()) inst.rank = parse_variable_rank(f.variables);
  if (!f.ideal.empty()) {
    if (f.ideal == "nonoptimal")
      inst.ideal = IdealKind::NonOptimal;
    else if (f.ideal == "initial")
      inst.ideal = IdealKind::Initial;
    else
      throw BadParameter("--ideal expects nonoptimal or initial");
  }
  if (!f.sense.empty()) {
    if (inst.kind != Instance::Kind::Model) throw BadParameter("--sense applies to model instances only");
    inst.sense = parse_entry_sense(f.sense);
    inst.cost = entry_cost(*inst.model, inst.sense);
  }
  if (!f.box.empty()) inst.box = parse_box(f.box, inst.nvars());
  if (f.budget > 0) inst.budget = f.budget;
}

GapInstance prepare(const Instance& inst, const GapOptions& o) {
  return inst.matrix ? make_instance(*inst.matrix, inst.cost, o) : make_lattice_instance(inst.lattice, inst.cost, o);
}

Json header(const Flags& f, const Instance& inst) {
  Json out;
  out["command"] = f.command;
  if (!inst.name.empty()) out["instance"] = inst.name;
  out["variables"] = inst.names;
  out["cost"] = rat_vec_json(inst.cost);
  out["tiebreak"] = to_string(inst.tiebreak);
  out["variable_order"] = to_string(inst.rank);
  out["ideal_kind"] = ideal_kind_text(inst.ideal);
  if (inst.model) out["sense"] = to_string(inst.sense);
  return out;
}

// ------------------------------------------------------------ commands

Json cmd_gap(const Instance& inst, const Flags& f) {
  GapOptions o = options_for(inst);
  GapInstance gi = prepare(inst, o);
  GapReport r = gap_report(gi, o);
  const auto& names = inst.names;
  Json out = header(f, inst);
  out["gap"] = rat_json(r.gap);
  out["gap_decimal"] = to_decimal(r.gap, 10);
  out["trivial"] = r.trivial;
  out["winner"] = r.winner ? Json(format_component(*r.winner, names)) : Json(nullptr);
  Json attaining = Json::array();
  for (auto k : r.attaining) attaining.push_back(format_component(r.per_component[k].component, names));
  out["attaining"] = attaining;
  Json comps = Json::array();
  for (const auto& pc : r.per_component) {
    Json c = component_json(pc.component, names);
    c["gap"] = rat_json(pc.value);
    c["gap_decimal"] = to_decimal(pc.value, 10);
    c["aux_optimum"] = rat_vec_json(pc.aux_optimum);
    comps.push_back(c);
  }
  out["components"] = comps;
  Json w;
  w["z"] = monomial_json(r.witness_z);
  if (inst.matrix) {
    IntVec z;
    for (auto e : r.witness_z) z.emplace_back(static_cast<long>(e));
    Json b = Json::array();
    for (const auto& x : inst.matrix->apply(z)) b.push_back(to_string(x));
    w["b"] = b;
  }
  out["witness"] = w;
  out["schrijver_bound"] = r.schrijver_bound ? Json(to_string(*r.schrijver_bound)) : Json(nullptr);
  return out;
}

Json cmd_decompose(const Instance& inst, const Flags& f) {
  GapOptions o = options_for(inst);
  GapInstance gi = prepare(inst, o);
  Json out = header(f, inst);
  out["generators"] = ideal_json(gi.ideal, inst.names);
  out["generator_count"] = gi.ideal.size();
  out["squarefree"] = is_squarefree_generated(gi.ideal);
  Json comps = Json::array();
  for (const auto& c : gi.components) comps.push_back(component_json(c, inst.names));
  out["components"] = comps;
  out["component_count"] = gi.components.size();
  return out;
}

Json cmd_gb(const Instance& inst, const Flags& f) {
  GapOptions o = options_for(inst);
  TermOrder order = make_term_order(inst.lattice, inst.cost, o.tiebreak, o.rank);
  GroebnerBasis gb = buchberger(lattice_ideal_generators(inst.lattice), order);
  Json out = header(f, inst);
  Json elems = Json::array();
  for (const auto& b : gb.elements())
    elems.push_back(Json{{"binomial", format_binomial(b, inst.names)},
                         {"lead", monomial_json(b.lead)},
                         {"trail", monomial_json(b.trail)},
                         {"cost_drop", rat_json(cost_of(inst.cost, b.lead) - cost_of(inst.cost, b.trail))}});
  out["elements"] = elems;
  out["size"] = gb.size();
  out["generic"] = is_generic(gb);
  return out;
}

Json cmd_witness(const Instance& inst, const Flags& f) {
  GapOptions o = options_for(inst);
  GapInstance gi = prepare(inst, o);
  GapReport r = gap_report(gi, o);
  Json out = header(f, inst);
  out["gap"] = rat_json(r.gap);
  out["winner"] = r.winner ? Json(format_component(*r.winner, inst.names)) : Json(nullptr);
  out["z"] = monomial_json(r.witness_z);
  Monomial opt = ip_optimum(gi.groebner, r.witness_z);
  out["ip_optimum"] = monomial_json(opt);
  out["ip_value"] = rat_json(cost_of(inst.cost, opt));
  if (inst.matrix) {
    IntVec z;
    for (auto e : r.witness_z) z.emplace_back(static_cast<long>(e));
    IntVec b = inst.matrix->apply(z);
    Json bj = Json::array();
    for (const auto& x : b) bj.push_back(to_string(x));
    out["b"] = bj;
    LPSolution lp = lp_value(*inst.matrix, b, inst.cost);
    out["lp_value"] = rat_json(lp.value);
    out["lp_point"] = rat_vec_json(lp.point);
  } else {
    out["lp_value"] = rat_json(lp_relaxation_value(gi, r.witness_z));
  }
  out["difference"] = rat_json(cost_of(inst.cost, opt) - lp_relaxation_value(gi, r.witness_z));
  return out;
}

Json cmd_oracle(const Instance& inst, const Flags& f) {
  if (!inst.box) throw BadParameter("oracle needs a box (--box or options.box)");
  Box box{*inst.box};
  BoxGap bg = inst.matrix ? brute_gap_box(*inst.matrix, inst.cost, box, threads_from_env())
                          : brute_lattice_gap_box(inst.lattice.basis, inst.cost, box);
  Json out = header(f, inst);
  out["box"] = *inst.box;
  out["oracle_gap"] = rat_json(bg.value);
  out["oracle_gap_decimal"] = to_decimal(bg.value, 10);
  out["argmax_z"] = bg.argmax_z;
  if (f.verify) {
    GapOptions o = options_for(inst);
    GapReport r = gap_report(prepare(inst, o), o);
    bool inside = true;
    for (std::size_t i = 0; i < box.upper.size(); ++i) inside = inside && r.witness_z[i] <= box.upper[i];
    out["theorem_gap"] = rat_json(r.gap);
    out["witness_in_box"] = inside;
    if (bg.value > r.gap || (inside && bg.value != r.gap))
      throw InternalError("oracle value " + to_string(bg.value) + " disagrees with theorem value " + to_string(r.gap));
    out["verdict"] = inside ? "matches theorem" : "lower bound consistent with theorem";
  }
  return out;
}

Json cmd_fan(const Instance& inst, const Flags& f) {
  GapOptions o = options_for(inst);
  std::vector<RatVec> seeds{inst.cost};
  for (const auto& s : inst.seeds) seeds.push_back(s);
  if (!f.seeds.empty())
    for (auto& s : load_seeds(f.seeds, inst.nvars())) seeds.push_back(std::move(s));
  const std::size_t budget = inst.budget.value_or(64);
  Exploration ex = explore_lattice_cones(inst.lattice, seeds, budget, o);
  const auto& names = inst.names;

  Json out = header(f, inst);
  out["budget"] = budget;
  out["complete"] = ex.complete;
  out["skipped_seeds"] = ex.skipped_seeds;
  Json cones = Json::array();
  std::size_t piece_count = 0;
  for (const auto& dc : ex.cones) {
    GapInstance gi = inst.matrix ? make_instance(*inst.matrix, dc.interior, o)
                                 : make_lattice_instance(inst.lattice, dc.interior, o);
    auto pieces = gap_fan_subdivide(gi, o);
    piece_count += pieces.size();
    Json cone;
    cone["interior_point"] = rat_vec_json(dc.interior);
    Json ineqs = Json::array();
    for (const auto& h : facets(dc.cone)) ineqs.push_back(linear_text(h, names) + " >= 0");
    cone["facets"] = ineqs;
    cone["ideal"] = ideal_json(gi.ideal, names);
    Json comps = Json::array();
    for (const auto& c : gi.components) comps.push_back(format_component(c, names));
    cone["components"] = comps;
    Json pj = Json::array();
    for (const auto& p : pieces) {
      Json winners = Json::array();
      for (const auto& w : p.winners) winners.push_back(format_component(w, names));
      pj.push_back(Json{{"winner", format_component(p.winner, names)},
                        {"winners", winners},
                        {"linear_form", rat_vec_json(p.linear_form)},
                        {"gap_at_interior", rat_json(dot(p.linear_form, p.interior))}});
    }
    cone["pieces"] = pj;
    Json hyper = Json::array();
    for (std::size_t i = 0; i < pieces.size(); ++i)
      for (std::size_t j = i + 1; j < pieces.size(); ++j) {
        auto hs = splitting_hyperplanes({pieces[i], pieces[j]});
        if (hs.empty()) continue;
        RatVec h = hs.front();
        std::string pos = format_component(pieces[i].winner, names);
        std::string neg = format_component(pieces[j].winner, names);
        auto first = std::find_if(h.begin(), h.end(), [](const Rat& x) { return x != 0; });
        if (first != h.end() && *first < 0) {
          for (auto& x : h) x = -x;
          std::swap(pos, neg);
        }
        hyper.push_back(Json{{"hyperplane", linear_text(h, names) + " = 0"},
                             {"normal", rat_vec_json(h)},
                             {"positive_side", pos},
                             {"negative_side", neg}});
      }
    cone["hyperplanes"] = hyper;
    cones.push_back(cone);
  }
  out["cone_count"] = ex.cones.size();
  out["piece_count"] = piece_count;
  out["cones"] = cones;
  return out;
}

Json cmd_margins(const Instance& inst, const Flags& f) {
  if (!inst.matrix) throw BadParameter("margins needs a model or matrix instance");
  Json out = header(f, inst);
  out["rows"] = inst.matrix->rows();
  out["cols"] = inst.matrix->cols();
  Json rows = Json::array();
  for (std::size_t r = 0; r < inst.matrix->rows(); ++r) {
    std::string s;
    for (std::size_t c = 0; c < inst.matrix->cols(); ++c) s += to_string((*inst.matrix)(r, c)) + (c + 1 < inst.matrix->cols() ? " " : "");
    rows.push_back(s);
  }
  out["matrix"] = rows;
  return out;
}

// ------------------------------------------------------------ text output

void render_text(const Json& j, std::ostream& os) {
  const std::string cmd = j["command"];
  os << "command: " << cmd;
  if (j.contains("instance")) os << "  instance: " << j["instance"].get<std::string>();
  os << "\n";
  if (cmd == "gap") {
    os << "gap: " << j["gap"].get<std::string>() << " = " << j["gap_decimal"].get<std::string>() << "\n";
    if (j["trivial"].get<bool>()) os << "M(L,c) is zero: every point is optimal\n";
    for (const auto& c : j["components"])
      os << "  " << c["component"].get<std::string>() << "  gap value " << c["gap"].get<std::string>()
         << "  aux optimum " << vec_text(c["aux_optimum"]) << "\n";
    if (!j["winner"].is_null()) os << "winner: " << j["winner"].get<std::string>() << "\n";
    if (j["attaining"].size() > 1) os << "attained by " << j["attaining"].size() << " components\n";
    os << "witness z: " << vec_text(j["witness"]["z"]);
    if (j["witness"].contains("b")) os << "  b = " << vec_text(j["witness"]["b"]);
    os << "\n";
    if (!j["schrijver_bound"].is_null()) os << "bound n*D(A)*sum|c|: " << j["schrijver_bound"].get<std::string>() << "\n";
  } else if (cmd == "decompose") {
    os << "minimal generators (" << j["generator_count"] << "):";
    for (const auto& g : j["generators"]) os << " " << g.get<std::string>();
    os << "\nirreducible components (" << j["component_count"] << "):\n";
    for (const auto& c : j["components"]) os << "  " << c["component"].get<std::string>() << "\n";
    os << "squarefree: " << (j["squarefree"].get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "gb") {
    os << "reduced Groebner basis (" << j["size"] << " elements, " << (j["generic"].get<bool>() ? "generic" : "non-generic")
       << " cost):\n";
    for (const auto& e : j["elements"])
      os << "  " << e["binomial"].get<std::string>() << "   cost drop " << e["cost_drop"].get<std::string>() << "\n";
  } else if (cmd == "witness") {
    os << "gap: " << j["gap"].get<std::string>() << "\n";
    os << "z: " << vec_text(j["z"]) << "\n";
    if (j.contains("b")) os << "b: " << vec_text(j["b"]) << "\n";
    os << "IP optimum " << vec_text(j["ip_optimum"]) << " value " << j["ip_value"].get<std::string>() << "\n";
    os << "LP value " << j["lp_value"].get<std::string>();
    if (j.contains("lp_point")) os << " at " << vec_text(j["lp_point"]);
    os << "\nIP - LP = " << j["difference"].get<std::string>() << "\n";
  } else if (cmd == "oracle") {
    os << "box: " << vec_text(j["box"]) << "\n";
    os << "oracle gap: " << j["oracle_gap"].get<std::string>() << " at z = " << vec_text(j["argmax_z"]);
    if (j.contains("verdict")) os << "  (" << j["verdict"].get<std::string>() << ")";
    os << "\n";
  } else if (cmd == "fan") {
    os << "cones: " << j["cone_count"] << "  gap-fan pieces: " << j["piece_count"]
       << (j["complete"].get<bool>() ? "" : "  (budget exhausted; partial)") << "\n";
    for (const auto& c : j["cones"]) {
      std::vector<std::string> comps;
      for (const auto& x : c["components"]) comps.push_back(x.get<std::string>());
      std::vector<std::string> winners;
      for (const auto& p : c["pieces"]) winners.push_back(p["winner"].get<std::string>());
      os << "  M = " << (comps.empty() ? "0" : join(comps, " ∩ ")) << "   winning: " << join(winners, ", ") << "\n";
      for (const auto& h : c["hyperplanes"])
        os << "    split by " << h["hyperplane"].get<std::string>() << ": positive side "
           << h["positive_side"].get<std::string>() << ", negative side " << h["negative_side"].get<std::string>()
           << "\n";
    }
  } else if (cmd == "margins") {
    os << j["rows"] << " x " << j["cols"] << "\n";
    for (const auto& r : j["matrix"]) os << r.get<std::string>() << "\n";
  }
}

int report_error(std::ostream& err, const char* kind, const std::exception& e, int code) {
  err << "ipgap: " << kind << ": " << e.what() << "\n";
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer programming gaps via Groebner bases and irreducible decomposition", "ipgap"};
  app.require_subcommand(1);
  Flags f;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"gap", "exact gap, per-component values, winner and witness"},
      {"decompose", "minimal generators and irreducible components of M"},
      {"gb", "reduced Groebner basis under the refined cost order"},
      {"fan", "Groebner cones and gap-fan pieces by facet walking"},
      {"oracle", "brute-force gap over a box of right-hand sides"},
      {"witness", "right-hand side attaining the gap, with IP and LP optima"},
      {"margins", "margin matrix of a model instance"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("instance", f.path, "instance file (YAML)")->required();
    sub->add_option("--tiebreak", f.tiebreak, "grevlex | grlex | lex");
    sub->add_option("--variables", f.variables, "tiebreak variable order: natural | reversed");
    sub->add_option("--ideal", f.ideal, "nonoptimal | initial");
    sub->add_option("--sense", f.sense, "min | max (model instances)");
    sub->add_option("--box", f.box, "N or N,N,... box for the oracle");
    sub->add_option("--seeds", f.seeds, "YAML file of extra fan seeds");
    sub->add_option("--budget", f.budget, "maximum number of cones to discover");
    sub->add_flag("--verify", f.verify, "oracle: cross-check against the theorem value");
    sub->add_flag("--timing", f.timing, "append wall-clock timing to the report");
    sub->add_option("--format", f.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->callback([&f, name = name] { f.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Instance inst = load_instance(f.path);
    apply_flags(inst, f);
    Json report;
    if (f.command == "gap")
      report = cmd_gap(inst, f);
    else if (f.command == "decompose")
      report = cmd_decompose(inst, f);
    else if (f.command == "gb")
      report = cmd_gb(inst, f);
    else if (f.command == "fan")
      report = cmd_fan(inst, f);
    else if (f.command == "oracle")
      report = cmd_oracle(inst, f);
    else if (f.command == "witness")
      report = cmd_witness(inst, f);
    else
      report = cmd_margins(inst, f);
    if (f.command == "fan" && !report["complete"].get<bool>())
      err << "ipgap: warning: cone budget of " << report["budget"] << " exhausted; fan results are partial\n";
    if (f.timing)
      report["timing_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (f.format == "json")
      out << report.dump(2) << "\n";
    else {
      render_text(report, out);
      if (f.timing) out << "time: " << report["timing_seconds"].get<double>() << " s\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    return report_error(err, "parse error", e, kExitInput);
  } catch (const InputError& e) {
    return report_error(err, "input error", e, kExitInput);
  } catch (const DomainError& e) {
    return report_error(err, "domain error", e, kExitDomain);
  } catch (const InternalError& e) {
    return report_error(err, "internal verification failure", e, kExitInternal);
  } catch (const std::exception& e) {
    return report_error(err, "internal error", e, kExitInternal);
  }
}

}  // namespace ipgap
