#include "ipgap/instance.hpp"

#include "ipgap/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace ipgap {

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(what, 0, 0);
  throw ParseError(what, mark.line + 1, mark.column + 1);
}

std::string scalar(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a scalar");
  return node.Scalar();
}

Int parse_int(const YAML::Node& node, const std::string& what) {
  std::string s = scalar(node, what);
  Int v;
  if (s.empty() || v.set_str(s, 10) != 0) fail(node, what + " must be an integer, got '" + s + "'");
  return v;
}

long parse_long(const YAML::Node& node, const std::string& what) {
  Int v = parse_int(node, what);
  if (!v.fits_slong_p()) fail(node, what + " is too large");
  return v.get_si();
}

Rat parse_rational(const YAML::Node& node, const std::string& what) {
  std::string s = scalar(node, what);
  try {
    return parse_rat(s);
  } catch (const InputError&) {
    fail(node, what + " must be an integer or p/q, got '" + s + "'");
  }
}

std::vector<YAML::Node> sequence(const YAML::Node& node, const std::string& what) {
  if (!node.IsSequence()) fail(node, what + " must be a list");
  std::vector<YAML::Node> out;
  for (const auto& item : node) out.push_back(item);
  return out;
}

std::vector<IntVec> int_rows(const YAML::Node& node, const std::string& what) {
  std::vector<IntVec> rows;
  std::size_t width = 0;
  for (const auto& row : sequence(node, what)) {
    IntVec r;
    for (const auto& x : sequence(row, what + " row")) r.push_back(parse_int(x, what + " entry"));
    if (r.empty()) fail(row, what + " rows must be nonempty");
    if (!rows.empty() && r.size() != width) fail(row, what + " rows must all have the same length");
    width = r.size();
    rows.push_back(std::move(r));
  }
  if (rows.empty()) fail(node, what + " must have at least one row");
  return rows;
}

RatVec rat_vector(const YAML::Node& node, const std::string& what) {
  RatVec v;
  for (const auto& x : sequence(node, what)) v.push_back(parse_rational(x, what + " entry"));
  return v;
}

void read_options(const YAML::Node& opts, Instance& inst) {
  if (!opts.IsMap()) fail(opts, "options must be a mapping");
  static const std::set<std::string> known{"tiebreak", "variables", "ideal", "box", "budget", "seeds"};
  for (const auto& kv : opts) {
    const std::string key = kv.first.as<std::string>();
    if (!known.count(key)) fail(kv.first, "unknown option '" + key + "'");
  }
  try {
    if (opts["tiebreak"]) inst.tiebreak = parse_tiebreak(scalar(opts["tiebreak"], "tiebreak"));
    if (opts["variables"]) inst.rank = parse_variable_rank(scalar(opts["variables"], "variables"));
  } catch (const BadParameter& e) {
    fail(opts, e.what());
  }
  if (opts["ideal"]) {
    std::string s = scalar(opts["ideal"], "ideal");
    if (s == "nonoptimal")
      inst.ideal = IdealKind::NonOptimal;
    else if (s == "initial")
      inst.ideal = IdealKind::Initial;
    else
      fail(opts["ideal"], "ideal must be nonoptimal or initial");
  }
  if (const auto box = opts["box"]) {
    std::vector<long> upper;
    if (box.IsScalar())
      upper.assign(inst.nvars(), parse_long(box, "box"));
    else
      for (const auto& x : sequence(box, "box")) upper.push_back(parse_long(x, "box entry"));
    if (upper.size() != inst.nvars()) fail(box, "box needs one bound per variable");
    for (long u : upper)
      if (u < 0) fail(box, "box bounds must be nonnegative");
    inst.box = std::move(upper);
  }
  if (const auto budget = opts["budget"]) {
    long b = parse_long(budget, "budget");
    if (b < 1) fail(budget, "budget must be positive");
    inst.budget = static_cast<std::size_t>(b);
  }
  if (const auto seeds = opts["seeds"]) {
    for (const auto& s : sequence(seeds, "seeds")) {
      RatVec v = rat_vector(s, "seed");
      if (v.size() != inst.nvars()) fail(s, "seed has the wrong length");
      inst.seeds.push_back(std::move(v));
    }
  }
}

Instance from_yaml(const YAML::Node& root) {
  if (!root.IsMap()) fail(root, "instance must be a mapping");
  static const std::set<std::string> known{"name", "matrix", "lattice", "model", "cost", "names", "options"};
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!known.count(key)) fail(kv.first, "unknown key '" + key + "'");
  }
  const int given = (root["matrix"] ? 1 : 0) + (root["lattice"] ? 1 : 0) + (root["model"] ? 1 : 0);
  if (given != 1) fail(root, "exactly one of matrix, lattice, model is required");

  Instance inst;
  if (root["name"]) inst.name = scalar(root["name"], "name");

  if (const auto m = root["matrix"]) {
    auto rows = int_rows(m, "matrix");
    inst.kind = Instance::Kind::Matrix;
    inst.matrix = IntMatrix::from_rows(rows, rows.front().size());
    inst.lattice = kernel_lattice(*inst.matrix);
  } else if (const auto l = root["lattice"]) {
    auto rows = int_rows(l, "lattice");
    inst.kind = Instance::Kind::Lattice;
    IntMatrix gens = IntMatrix::from_rows(rows, rows.front().size());
    if (rank(gens) != gens.rows()) fail(l, "lattice basis vectors must be linearly independent");
    inst.lattice = LatticeBasis{gens.transpose()};
  } else {
    const auto m = root["model"];
    if (!m.IsMap()) fail(m, "model must be a mapping");
    if (!m["dims"] || !m["faces"]) fail(m, "model needs dims and faces");
    MarginalModel model;
    for (const auto& d : sequence(m["dims"], "dims")) model.dims.push_back(static_cast<int>(parse_long(d, "dim")));
    for (const auto& f : sequence(m["faces"], "faces")) {
      std::vector<std::size_t> face;
      for (const auto& i : sequence(f, "face")) {
        long k = parse_long(i, "face entry");
        if (k < 1 || static_cast<std::size_t>(k) > model.dims.size()) fail(i, "face entries are 1-based coordinates");
        face.push_back(static_cast<std::size_t>(k - 1));
      }
      model.faces.push_back(std::move(face));
    }
    if (m["sense"]) {
      try {
        inst.sense = parse_entry_sense(scalar(m["sense"], "sense"));
      } catch (const BadParameter& e) {
        fail(m["sense"], e.what());
      }
    }
    try {
      model.validate();
    } catch (const BadParameter& e) {
      fail(m, e.what());
    }
    inst.kind = Instance::Kind::Model;
    inst.matrix = margin_matrix(model);
    inst.lattice = kernel_lattice(*inst.matrix);
    inst.names = cell_names(model);
    inst.cost = entry_cost(model, inst.sense);
    inst.model = std::move(model);
  }

  const std::size_t n = inst.lattice.ambient_dim();
  if (const auto c = root["cost"]) {
    inst.cost = rat_vector(c, "cost");
    if (inst.cost.size() != n) fail(c, "cost needs " + std::to_string(n) + " entries");
  } else if (inst.kind != Instance::Kind::Model) {
    fail(root, "cost is required");
  }
  if (const auto names = root["names"]) {
    inst.names.clear();
    for (const auto& s : sequence(names, "names")) inst.names.push_back(scalar(s, "name"));
    if (inst.names.size() != n) fail(names, "names needs one entry per variable");
  }
  if (inst.names.empty()) inst.names = default_names(n);
  if (const auto opts = root["options"]) read_options(opts, inst);
  return inst;
}

YAML::Node load_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance parse_instance(const std::string& text) {
  YAML::Node root = load_yaml(text);
  try {
    return from_yaml(root);
  } catch (const YAML::Exception& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::vector<RatVec> load_seeds(const std::string& path, std::size_t nvars) {
  YAML::Node root = load_yaml(read_file(path));
  YAML::Node list = root.IsMap() ? root["seeds"] : root;
  if (!list) fail(root, "seeds file needs a list of cost vectors");
  std::vector<RatVec> out;
  for (const auto& s : sequence(list, "seeds")) {
    RatVec v = rat_vector(s, "seed");
    if (v.size() != nvars) fail(s, "seed has the wrong length");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<long> parse_box(const std::string& text, std::size_t nvars) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw BadParameter("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw BadParameter("--box expects nonnegative integers separated by commas, got '" + text + "'");
    }
  }
  if (out.size() == 1) out.assign(nvars, out.front());
  if (out.size() != nvars) throw BadParameter("--box needs 1 or " + std::to_string(nvars) + " bounds");
  return out;
}

}  // namespace ipgap
