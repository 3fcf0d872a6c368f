#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "adlv/words.hpp"

using namespace adlv;

TEST_CASE("levels and dyck") {
  MultiWord w(1, 7, {5, 5, -2, -2, -2, -2, -2});
  CHECK(levels(w) == std::vector<long long>{5, 10, 8, 6, 4, 2, 0});
  CHECK(is_dyck(w));
  CHECK_FALSE(is_dyck(MultiWord(1, 2, {-1, 1})));
  // only levels at 1-based multiples of d count
  MultiWord v(2, 3, {1, 1, 1, -2, -2, 1});
  CHECK(levels(v) == std::vector<long long>{1, 2, 3, 1, -1, 0});
  CHECK(is_dyck(v));
}

TEST_CASE("components interleave by residue") {
  MultiWord w(2, 3, {1, 1, 1, -2, -2, 1});
  CHECK(w.component(0) == std::vector<long long>{1, 1, -2});
  CHECK(w.component(1) == std::vector<long long>{1, -2, 1});
  CHECK(MultiWord::from_components(2, 3, {{1, 1, -2}, {1, -2, 1}}) == w);
  CHECK_THROWS_AS(MultiWord(1, 3, {1, -1}), SizeMismatch);
}

TEST_CASE("classical sweep of the m=5 n=7 word") {
  MultiWord w(1, 7, {5, 5, -2, -2, -2, -2, -2});
  CHECK(sweep_multi(w).letters == std::vector<long long>{5, -2, -2, 5, -2, -2, -2});
}

TEST_CASE("classical sweep handles negative levels") {
  // scan -1 down, then the max down to 0
  MultiWord w(1, 2, {-1, 1});
  CHECK(sweep_multi(w).letters == std::vector<long long>{-1, 1});
  MultiWord v(1, 2, {1, -1});
  CHECK(sweep_multi(v).letters == std::vector<long long>{1, -1});
}

TEST_CASE("d=2 collision pair stays separated") {
  // these two used to collide under a naive per-component descending scan
  MultiWord dyck(2, 2, {1, 0, -1, 0});
  MultiWord skew(2, 2, {-1, 0, 1, 0});
  CHECK(sweep_multi(dyck).letters == std::vector<long long>{1, 0, -1, 0});
  CHECK(sweep_multi(skew).letters == std::vector<long long>{-1, 0, 1, 0});
}

TEST_CASE("sweep preserves dyck words and the class") {
  MultiWord w(2, 3, {1, 1, 1, -2, -2, 1});
  auto img = sweep_multi(w);
  CHECK(is_dyck(img));
  CHECK(Alphabet::of(w).contains(img));
}

TEST_CASE("sweep is a bijection of every small class") {
  std::vector<Alphabet> alphabets = {
      Alphabet(1, 4, {{1, 1, -1, -1}}),
      Alphabet(2, 2, {{-1, 1}, {0, 0}}),
      Alphabet(2, 3, {{1, 1, -2}, {1, 1, -2}}),
      Alphabet(3, 2, {{1, -1}, {2, -2}, {0, 0}}),
  };
  for (const auto& a : alphabets) {
    std::set<std::vector<long long>> images;
    unsigned long long count = 0;
    for_each_in_class(a, [&](const MultiWord& w) {
      auto img = sweep_multi(w);
      CHECK(a.contains(img));
      CHECK(is_dyck(img) == is_dyck(w));
      images.insert(img.letters);
      ++count;
    });
    CHECK(images.size() == count);
    CHECK(count == a.class_size());
  }
}

TEST_CASE("sweep_inverse round trip") {
  Alphabet a(2, 3, {{1, 1, -2}, {1, 1, -2}});
  SweepInverter inv(a);
  for_each_in_class(a, [&](const MultiWord& w) {
    CHECK(inv.invert(sweep_multi(w)) == w);
  });
  CHECK_THROWS_AS(sweep_inverse(MultiWord(2, 3, {5, 5, 5, 5, 5, 5}), a), NotInImage);
}

TEST_CASE("class size is a product of multinomials") {
  CHECK(Alphabet(2, 2, {{-1, 1}, {0, 0}}).class_size() == 2);
  CHECK(Alphabet(1, 3, {{1, 1, -2}}).class_size() == 3);
  CHECK(Alphabet(1, 7, {{5, 5, -2, -2, -2, -2, -2}}).class_size() == 21);
  CHECK(enumerate_class(Alphabet(1, 3, {{1, 1, -2}})).size() == 3);
}

TEST_CASE("embedding shifts components into disjoint bands") {
  MultiWord w(2, 2, {-1, 0, 1, 0});
  CHECK(embed_plus_N(w, 10).letters == std::vector<long long>{9, -10, 11, -10});
  CHECK(embed_plus_N(w, 10).d == 1);
  CHECK_THROWS_AS(embed_plus_N(w, 1), BadN);
  // the default shift passes the per-word validation on the whole class
  Alphabet a = Alphabet::of(w);
  long long n = default_embedding_shift(a);
  for_each_in_class(a, [&](const MultiWord& v) { CHECK_NOTHROW(embed_plus_N(v, n)); });
}

TEST_CASE("for_each_in_class is exhaustive and lexicographic") {
  Alphabet a(2, 2, {{-1, 1}, {0, 0}});
  std::vector<std::vector<long long>> seen;
  for_each_in_class(a, [&](const MultiWord& w) { seen.push_back(w.letters); });
  CHECK(seen.size() == 2);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}
