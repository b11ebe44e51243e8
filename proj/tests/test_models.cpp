#include "ipgap/errors.hpp"
#include "ipgap/lp.hpp"
#include "ipgap/models.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ipgap;
using namespace ipgap::testing;

namespace {

// The K4 margin matrix as printed for the 2x2x2x2 model, cells in
// lexicographic order u_1111 ... u_2222.
const char* const kK4Rows[24] = {
    "1111000000000000", "0000111100000000", "0000000011110000", "0000000000001111",
    "1100110000000000", "0011001100000000", "0000000011001100", "0000000000110011",
    "1010101000000000", "0101010100000000", "0000000010101010", "0000000001010101",
    "1100000011000000", "0011000000110000", "0000110000001100", "0000001100000011",
    "1010000010100000", "0101000001010000", "0000101000001010", "0000010100000101",
    "1000100010001000", "0100010001000100", "0010001000100010", "0001000100010001",
};

IntMatrix from_strings(const char* const* rows, std::size_t count) {
  std::vector<IntVec> out;
  for (std::size_t r = 0; r < count; ++r) {
    IntVec row;
    for (const char* p = rows[r]; *p; ++p) row.emplace_back(*p - '0');
    out.push_back(std::move(row));
  }
  return IntMatrix::from_rows(out, out.front().size());
}

MarginalModel model(std::vector<int> dims, std::vector<std::vector<std::size_t>> faces) {
  return MarginalModel{std::move(dims), std::move(faces)};
}

std::size_t cell(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

TEST(MarginMatrix, K4MatchesPrintedMatrix) {
  IntMatrix a = margin_matrix(k4_model());
  EXPECT_EQ(a.rows(), 24u);
  EXPECT_EQ(a.cols(), 16u);
  EXPECT_EQ(a, from_strings(kK4Rows, 24));
}

TEST(MarginMatrix, Transportation) {
  IntMatrix a = margin_matrix(model({2, 3}, {{0}, {1}}));
  IntMatrix expected{{1, 1, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 1}, {1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}};
  EXPECT_EQ(a, expected);
}

TEST(MarginMatrix, FullMarginIsIdentity) {
  EXPECT_EQ(margin_matrix(model({2, 2}, {{0, 1}})), IntMatrix::identity(4));
}

TEST(MarginMatrix, ValidationErrors) {
  EXPECT_THROW(margin_matrix(model({1, 2}, {{0}})), BadParameter);
  EXPECT_THROW(margin_matrix(model({2, 2}, {{2}})), BadParameter);
  EXPECT_THROW(margin_matrix(model({2, 2}, {{0, 0}})), BadParameter);
  EXPECT_THROW(margin_matrix(model({2, 2}, {})), BadParameter);
  EXPECT_THROW(margin_matrix(model({2, 2}, {{}})), BadParameter);
}

TEST(CellNames, Formats) {
  auto names = cell_names(k4_model());
  ASSERT_EQ(names.size(), 16u);
  EXPECT_EQ(names.front(), "x1111");
  EXPECT_EQ(names[1], "x1112");
  EXPECT_EQ(names.back(), "x2222");
  EXPECT_EQ(cell_names(model({10, 2}, {{0}}))[3], "x2_2");
}

TEST(EntrySense, Parse) {
  EXPECT_EQ(parse_entry_sense("max"), EntrySense::Max);
  EXPECT_EQ(to_string(EntrySense::Min), "min");
  EXPECT_THROW(parse_entry_sense("sup"), BadParameter);
  RatVec c = entry_cost(k4_model(), EntrySense::Max);
  EXPECT_EQ(c[0], -1);
  EXPECT_EQ(c[5], 0);
}

TEST(EntryGap, K4Maximum) {
  MarginalModel m = k4_model();
  GapReport r = entry_gap(m, EntrySense::Max);
  EXPECT_EQ(r.gap, make_rat(5, 3));

  auto names = cell_names(m);
  std::vector<Exponent> u(16, 0);
  for (const char* nm : {"x1112", "x1121", "x1211", "x2111", "x2222"}) u[cell(names, nm)] = 1;
  std::vector<bool> tau(16, true);
  tau[0] = false;
  IrreducibleComponent expected(tau, Monomial(u));
  bool found = false;
  for (std::size_t i : r.attaining) found = found || r.per_component[i].component == expected;
  EXPECT_TRUE(found);
}

TEST(EntryGap, K4PrintedLPPointIsOptimal) {
  // with b = A·u for the attaining u, the printed v is feasible and has the
  // optimal objective, so IP - LP = 0 - (-5/3)
  MarginalModel m = k4_model();
  IntMatrix a = margin_matrix(m);
  auto names = cell_names(m);
  IntVec u(16, Int(0));
  for (const char* nm : {"x1112", "x1121", "x1211", "x2111", "x2222"}) u[cell(names, nm)] = 1;
  RatVec v(16, make_rat(1, 3));
  for (const char* nm : {"x1112", "x1121", "x1211", "x2111", "x2222"}) v[cell(names, nm)] = 0;
  v[0] = make_rat(5, 3);
  IntVec b = a.apply(u);
  for (std::size_t r = 0; r < a.rows(); ++r) EXPECT_EQ(dot(to_rat(a.row(r)), v), Rat(b[r])) << "row " << r;
  LPSolution lp = lp_value(a, b, entry_cost(m, EntrySense::Max));
  ASSERT_TRUE(lp.optimal());
  EXPECT_EQ(lp.value, -v[0]);
  EXPECT_EQ(dot(entry_cost(m, EntrySense::Max), to_rat(u)), 0);
}

TEST(EntryGap, FullMarginHasNoGap) {
  for (auto s : {EntrySense::Min, EntrySense::Max}) EXPECT_EQ(entry_gap(model({2, 2}, {{0, 1}}), s).gap, 0);
}

TEST(EntryGap, TransportationHasNoGap) {
  MarginalModel m = model({2, 2}, {{0}, {1}});
  GapInstance inst = make_instance(margin_matrix(m), entry_cost(m, EntrySense::Max));
  EXPECT_TRUE(is_squarefree_generated(inst.ideal));
  EXPECT_EQ(gap_report(inst).gap, 0);
  EXPECT_EQ(brute_gap_box(margin_matrix(m), entry_cost(m, EntrySense::Max), Box{{5, 5, 5, 5}}).value, 0);
}

TEST(DegreeBound, Fixtures) {
  auto k4 = entry_degree_bound_check(k4_model());
  EXPECT_TRUE(k4.holds);
  EXPECT_GE(k4.gap_minus + 1, Rat(static_cast<long>(k4.max_first_degree)));

  auto tr = entry_degree_bound_check(model({2, 2}, {{0}, {1}}));
  EXPECT_TRUE(tr.holds);
  EXPECT_EQ(tr.gap_minus, 0);
  EXPECT_EQ(tr.max_first_degree, 1);

  auto full = entry_degree_bound_check(model({2, 2}, {{0, 1}}));
  EXPECT_TRUE(full.holds);
  EXPECT_EQ(full.max_first_degree, 0);
}

TEST(SWZ, Index) {
  for (int r = 4; r <= 8; ++r) EXPECT_EQ(lattice_index(swz_lattice(r)), 2 * r * (r - 2)) << "r = " << r;
  EXPECT_EQ(lattice_index(swz_lattice(4)), 16);
  EXPECT_EQ(lattice_index(swz_lattice(5)), 30);
  EXPECT_THROW(swz_lattice(3), BadParameter);
}

TEST(Coin, Fixture) {
  NamedInstance c = coin_instance();
  EXPECT_EQ(c.matrix.row(1), ints({1, 5, 10, 25}));
  EXPECT_EQ(dot(c.cost, rats({4, 2, 0, 4})), 6);
  EXPECT_EQ(gap(c.matrix, c.cost).gap, make_rat(76, 15));
}

TEST(SimplicialComplexes, Counts) {
  EXPECT_EQ(simplicial_complexes(2).size(), 2u);
  EXPECT_EQ(simplicial_complexes(3).size(), 5u);
  auto four = simplicial_complexes(4);
  EXPECT_EQ(four.size(), 20u);
  std::set<std::vector<std::vector<std::size_t>>> distinct(four.begin(), four.end());
  EXPECT_EQ(distinct.size(), four.size());
  EXPECT_TRUE(distinct.count(k4_model().faces));
  EXPECT_THROW(simplicial_complexes(6), BadParameter);
}
