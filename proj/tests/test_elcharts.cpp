#include <doctest.h>

#include <algorithm>
#include <set>

#include "adlv/elcharts.hpp"

using namespace adlv;

namespace {

const FSpec kGl7(7, 1, {5});
const FSpec kRes23(3, 2, {1, 1});

TypeVector tv(int n, int d, std::vector<std::vector<long long>> rows) {
  return TypeVector(n, d, std::move(rows));
}

}  // namespace

TEST_CASE("fspec sanity") {
  CHECK(kGl7.m() == 5);
  CHECK(kRes23.m() == 2);
  CHECK_THROWS_AS(FSpec(5, 1, {5}), NotCoprime);
  CHECK_THROWS_AS(FSpec(3, 2, {1, 1, 1}), SizeMismatch);
}

TEST_CASE("type vector flat indexing") {
  auto t = tv(3, 2, {{0, 0, 1}, {0, 1, 0}});
  CHECK(t.flat(0) == 0);
  CHECK(t.flat(1) == 0);
  CHECK(t.flat(3) == 1);
  CHECK(t.restriction() == std::vector<long long>{0, 1, 1});
  CHECK(t.total() == 2);
  CHECK(t.dominant().rows[1] == std::vector<long long>{1, 0, 0});
  CHECK(t.antidominant().rows[1] == std::vector<long long>{0, 0, 1});
}

TEST_CASE("base chart of the m=5 n=7 example") {
  ElChart n0(kGl7, {{0, 1, 2, 3, 4, 5, 6}});
  auto [type, walk] = chart_type(n0);
  CHECK(type == tv(7, 1, {{0, 1, 1, 0, 1, 1, 1}}));
  CHECK(walk.b == std::vector<long long>{0, 5, 3, 1, 6, 4, 2});
  CHECK(chart_cotype(n0) == tv(7, 1, {{0, 0, 1, 1, 1, 1, 1}}));
  CHECK(zeta(type, kGl7) == chart_cotype(n0));
  CHECK(is_small(n0));
  CHECK(n0.is_normalized());
  CHECK(chart_from_type(type, kGl7) == n0);
}

TEST_CASE("chart membership and validation") {
  ElChart n0(kGl7, {{0, 1, 2, 3, 4, 5, 6}});
  CHECK(n0.contains(0, 0));
  CHECK(n0.contains(0, 13));
  CHECK_FALSE(n0.contains(0, -1));
  // residues must match the column index
  CHECK_THROWS_AS(ElChart(kGl7, {{0, 1, 2, 3, 4, 5, 5}}), CorruptChart);
}

TEST_CASE("n=3 d=2 chart round trips") {
  auto t1 = tv(3, 2, {{0, 0, 1}, {0, 0, 1}});
  auto c1 = chart_from_type(t1, kRes23);
  CHECK(c1.minima == std::vector<std::vector<long long>>{{3, 1, -1}, {0, 1, 2}});
  CHECK(chart_type(c1).first == t1);
  CHECK(type_word(t1, kRes23).letters == std::vector<long long>{1, 1, 1, 1, -2, -2});
}

TEST_CASE("cotype pairs up with zeta on the n=3 d=2 table") {
  auto t1 = tv(3, 2, {{0, 0, 1}, {0, 0, 1}});
  auto t2 = tv(3, 2, {{0, 0, 1}, {0, 1, 0}});
  auto t3 = tv(3, 2, {{0, 1, 0}, {0, 0, 1}});
  CHECK(chart_cotype(chart_from_type(t1, kRes23)) == t3);
  CHECK(chart_cotype(chart_from_type(t2, kRes23)) == t2);
  CHECK(chart_cotype(chart_from_type(t3, kRes23)) == t1);
  for (const auto& t : {t1, t2, t3}) CHECK(zeta(t, kRes23) == chart_cotype(chart_from_type(t, kRes23)));
}

TEST_CASE("is_type enforces the dominance bound") {
  CHECK(is_type(tv(3, 2, {{0, 0, 1}, {0, 1, 0}}), kRes23));
  CHECK_FALSE(is_type(tv(3, 2, {{2, 0, 0}, {0, 0, 0}}), kRes23));  // partial sum too big
  CHECK_FALSE(is_type(tv(3, 2, {{0, 0, 1}, {0, 0, 0}}), kRes23));  // wrong total
  CHECK_FALSE(is_type(tv(3, 2, {{0, 0, 2}, {0, 1, -1}}), kRes23));  // negative entry
  CHECK_THROWS_AS(chart_from_type(tv(3, 2, {{2, 0, 0}, {0, 0, 0}}), kRes23), NotAType);
}

TEST_CASE("enumerate_P is sorted and filters by hodge point") {
  auto all = enumerate_P(kRes23);
  CHECK(all.size() == 7);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const auto& t : all) CHECK(is_type(t, kRes23));

  auto mu = tv(3, 2, {{1, 0, 0}, {1, 0, 0}});
  auto pm = enumerate_P(kRes23, mu);
  CHECK(pm.size() == 3);
  for (const auto& t : pm) CHECK(t.dominant() == mu);
}

TEST_CASE("vertex pair count matches the cell dimension on minuscule types") {
  std::vector<FSpec> specs = {kRes23, FSpec(5, 2, {2, 1}), FSpec(2, 3, {1, 1, 1}),
                              FSpec(5, 1, {3})};
  for (const auto& spec : specs)
    for (const auto& t : enumerate_P(spec)) {
      bool minuscule = true;
      for (const auto& row : t.rows)
        for (long long v : row)
          if (v != 0 && v != 1) minuscule = false;
      if (!minuscule) continue;
      auto chart = chart_from_type(t, spec);
      CHECK(cell_count_VA(chart) ==
            cell_dimension(chart_cotype(chart), t.dominant(), spec));
    }
}

TEST_CASE("cell table of GL_7 with mu=(1^5,0^2)") {
  auto mu = tv(7, 1, {{1, 1, 1, 1, 1, 0, 0}});
  auto table = cell_table(kGl7, mu, {0, 1, 1, 0, 1, 1, 1});
  CHECK(table.records.size() == 3);
  CHECK(table.poincare == std::vector<long long>{1, 1, 1});
  CHECK(table.max_dim == 2);
  CHECK(table.top_count == 1);
  CHECK_THROWS_AS(cell_table(kGl7, mu, {1, 1, 1, 1, 1, 0, 0}), LambdaMismatch);
  CHECK_THROWS_AS(cell_table(kGl7, tv(7, 1, {{2, 1, 1, 1, 0, 0, 0}}), {0, 1, 1, 0, 1, 1, 1}),
                  NotMinuscule);
}

TEST_CASE("cell table of the n=3 d=2 datum") {
  auto mu = tv(3, 2, {{1, 0, 0}, {1, 0, 0}});
  auto table = cell_table(kRes23, mu, {0, 1, 1});
  CHECK(table.records.size() == 3);
  CHECK(table.poincare == std::vector<long long>{1, 2});
  CHECK(table.max_dim == 1);
  CHECK(table.top_count == 2);
  for (const auto& rec : table.records) {
    CHECK(rec.top == (rec.dim == 1));
    CHECK(is_small(rec.chart));
  }
}

TEST_CASE("normalization is idempotent and shift-invariant") {
  auto t1 = tv(3, 2, {{0, 0, 1}, {0, 0, 1}});
  auto c1 = chart_from_type(t1, kRes23);
  CHECK(c1.is_normalized());
  CHECK(c1.normalized() == c1);
  auto shifted = c1;
  for (auto& row : shifted.minima)
    for (auto& v : row) v += 3;
  CHECK_FALSE(shifted.is_normalized());
  CHECK(shifted.normalized() == c1);
}
