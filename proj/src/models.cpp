#include "ipgap/models.hpp"

#include "ipgap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ipgap {

void MarginalModel::validate() const {
  if (dims.empty()) throw BadParameter("model needs at least one dimension");
  for (int d : dims)
    if (d < 2) throw BadParameter("table side lengths must be at least 2");
  if (faces.empty()) throw BadParameter("model needs at least one face");
  for (const auto& f : faces) {
    if (f.empty()) throw BadParameter("faces must be nonempty");
    std::set<std::size_t> seen;
    for (auto i : f) {
      if (i >= dims.size()) throw BadParameter("face refers to a coordinate outside the table");
      if (!seen.insert(i).second) throw BadParameter("face repeats a coordinate");
    }
  }
  if (num_cells() > 4096) throw BadParameter("table has too many cells");
}

std::size_t MarginalModel::num_cells() const {
  std::size_t n = 1;
  for (int d : dims) n *= static_cast<std::size_t>(d);
  return n;
}

namespace {

// Lexicographic multi-indices of a box, last coordinate fastest.
std::vector<std::vector<int>> box_indices(const std::vector<int>& sides) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(sides.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = sides.size();
    while (k > 0) {
      --k;
      if (++cur[k] < sides[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (sides.empty()) return out;
  }
}

}  // namespace

IntMatrix margin_matrix(const MarginalModel& model) {
  model.validate();
  const auto cells = box_indices(model.dims);
  std::vector<IntVec> rows;
  for (auto face : model.faces) {
    std::sort(face.begin(), face.end());
    std::vector<int> sides;
    for (auto i : face) sides.push_back(model.dims[i]);
    for (const auto& margin : box_indices(sides)) {
      IntVec row(cells.size(), Int(0));
      for (std::size_t col = 0; col < cells.size(); ++col) {
        bool match = true;
        for (std::size_t k = 0; k < face.size() && match; ++k) match = cells[col][face[k]] == margin[k];
        if (match) row[col] = 1;
      }
      rows.push_back(std::move(row));
    }
  }
  return IntMatrix::from_rows(rows, cells.size());
}

std::vector<std::string> cell_names(const MarginalModel& model) {
  const bool wide = std::any_of(model.dims.begin(), model.dims.end(), [](int d) { return d > 9; });
  std::vector<std::string> names;
  for (const auto& cell : box_indices(model.dims)) {
    std::string s = "x";
    for (std::size_t k = 0; k < cell.size(); ++k) {
      if (wide && k > 0) s += '_';
      s += std::to_string(cell[k] + 1);
    }
    names.push_back(std::move(s));
  }
  return names;
}

std::string to_string(EntrySense s) { return s == EntrySense::Min ? "min" : "max"; }

EntrySense parse_entry_sense(const std::string& s) {
  if (s == "min") return EntrySense::Min;
  if (s == "max") return EntrySense::Max;
  throw BadParameter("unknown sense '" + s + "' (expected min or max)");
}

RatVec entry_cost(const MarginalModel& model, EntrySense sense) {
  RatVec c(model.num_cells(), Rat(0));
  c[0] = sense == EntrySense::Min ? 1 : -1;
  return c;
}

GapReport entry_gap(const MarginalModel& model, EntrySense sense, const GapOptions& options) {
  return gap(margin_matrix(model), entry_cost(model, sense), options);
}

DegreeBoundCheck entry_degree_bound_check(const MarginalModel& model, const GapOptions& options) {
  GapInstance inst = make_instance(margin_matrix(model), entry_cost(model, EntrySense::Min), options);
  GapReport report = gap_report(inst, options);
  Exponent deg = 0;
  for (const auto& g : inst.ideal.generators()) deg = std::max(deg, g[0]);
  return DegreeBoundCheck{report.gap, deg, report.gap + 1 >= Rat(static_cast<long>(deg))};
}

LatticeBasis swz_lattice(int r) {
  if (r < 4) throw BadParameter("the lattice family needs r >= 4");
  const long s = r;
  return LatticeBasis{IntMatrix{{s, s - 1, 0}, {s, s + 1, 0}, {s, s - 1, s - 2}}};
}

NamedInstance coin_instance() {
  return NamedInstance{IntMatrix{{1, 1, 1, 1}, {1, 5, 10, 25}}, RatVec{0, 1, 0, 1}, {"p", "n", "d", "q"}};
}

MarginalModel k4_model() {
  MarginalModel m;
  m.dims = {2, 2, 2, 2};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) m.faces.push_back({i, j});
  return m;
}

std::vector<std::vector<std::vector<std::size_t>>> simplicial_complexes(std::size_t n) {
  if (n == 0 || n > 5) throw BadParameter("simplicial complex enumeration supports 1..5 vertices");
  const unsigned full = (1u << n) - 1;
  std::vector<unsigned> subsets;
  for (unsigned s = 1; s <= full; ++s) subsets.push_back(s);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  auto permute = [&](unsigned s, const std::vector<std::size_t>& q) {
    unsigned out = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1u) out |= 1u << q[i];
    return out;
  };

  // Antichains of nonempty subsets covering all vertices, by backtracking
  // over subsets in increasing order.
  std::set<std::vector<unsigned>> seen;
  std::vector<std::vector<unsigned>> reps;
  std::vector<unsigned> chosen;
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    unsigned cover = 0;
    for (auto s : chosen) cover |= s;
    if (!chosen.empty() && cover == full) {
      std::vector<unsigned> canon;
      for (const auto& q : perms) {
        std::vector<unsigned> img;
        for (auto s : chosen) img.push_back(permute(s, q));
        std::sort(img.begin(), img.end());
        if (canon.empty() || img < canon) canon = img;
      }
      if (seen.insert(canon).second) reps.push_back(canon);
    }
    for (std::size_t k = from; k < subsets.size(); ++k) {
      unsigned s = subsets[k];
      bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                    [&](unsigned t) { return (s & t) == s || (s & t) == t; });
      if (comparable) continue;
      chosen.push_back(s);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);

  std::vector<std::vector<std::vector<std::size_t>>> out;
  for (const auto& rep : reps) {
    std::vector<std::vector<std::size_t>> facets;
    for (auto s : rep) {
      std::vector<std::size_t> f;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) f.push_back(i);
      facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    out.push_back(std::move(facets));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ipgap
