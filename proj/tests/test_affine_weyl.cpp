#include <doctest.h>

#include "adlv/affine_weyl.hpp"

using namespace adlv;

TEST_CASE("semidirect product composition") {
  auto w = omega_element(2, 1);  // t^(1,0) * (01)
  CHECK(w.translation == std::vector<long long>{1, 0});
  CHECK(w.perm == std::vector<int>{1, 0});
  CHECK(w.kappa() == 1);

  auto sq = compose(w, w);
  CHECK(sq.translation == std::vector<long long>{1, 1});
  CHECK(sq.perm == std::vector<int>{0, 1});

  CHECK(compose(w, inverse(w)) == AffineWeylElt::identity(2));
  CHECK(power(w, 2) == sq);
  CHECK(power(w, 0) == AffineWeylElt::identity(2));
}

TEST_CASE("iwahori-matsumoto length") {
  CHECK(length(AffineWeylElt::identity(3)) == 0);
  AffineWeylElt s1(2, {0, 0}, {1, 0});
  CHECK(length(s1) == 1);
  CHECK(length(omega_element(2, 1)) == 0);
  CHECK(is_basic(omega_element(5, 3)));
  AffineWeylElt t10(2, {1, 0}, {0, 1});
  CHECK(length(t10) == 1);
  AffineWeylElt t20(2, {2, 0}, {0, 1});
  CHECK(length(t20) == 2);
}

TEST_CASE("newton point averages over the permutation order") {
  CHECK(newton_of(omega_element(2, 1)) == std::vector<Rat>(2, Rat(1, 2)));
  AffineWeylElt t10(2, {1, 0}, {0, 1});
  CHECK(newton_of(t10) == std::vector<Rat>{Rat(1), Rat(0)});
  AffineWeylElt s1(2, {0, 0}, {1, 0});
  CHECK(newton_of(s1) == std::vector<Rat>(2, Rat(0)));
}

TEST_CASE("straightness") {
  CHECK(is_straight(omega_element(2, 1)));
  CHECK(is_straight(AffineWeylElt(2, {1, 0}, {0, 1})));
  CHECK_FALSE(is_straight(AffineWeylElt(2, {0, 0}, {1, 0})));
}

TEST_CASE("basic elements of omega") {
  for (int p = -3; p <= 3; ++p) {
    auto w = omega_element(3, p);
    CHECK(w.kappa() == p);
    CHECK(length(w) == 0);
  }
  CHECK(omega_element(3, 4).translation == std::vector<long long>{2, 1, 1});
}

TEST_CASE("straight element with prescribed invariants") {
  CHECK(find_straight(2, {std::vector<Rat>(2, Rat(1, 2)), 1}) == omega_element(2, 1));

  auto x = find_straight(3, {{Rat(1), Rat(1, 2), Rat(1, 2)}, 2});
  CHECK(x.translation == std::vector<long long>{1, 1, 0});
  CHECK(x.perm == std::vector<int>{0, 2, 1});
  CHECK(is_straight(x));
  CHECK(newton_of(x) == std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1, 2)});
  CHECK(x.kappa() == 2);

  CHECK_THROWS_AS(find_straight(2, {std::vector<Rat>(2, Rat(1, 2)), 2}), NoneFound);
}

TEST_CASE("translation of a straight element matches the lambda invariant") {
  CHECK(verify_prop_lambda(2, {std::vector<Rat>(2, Rat(1, 2)), 1}));
  CHECK(verify_prop_lambda(4, {{Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2}));
  CHECK(verify_prop_lambda(7, {std::vector<Rat>(7, Rat(5, 7)), 5}));
}

TEST_CASE("length oracle agrees with the closed formula") {
  LengthOracle oracle(3, 4);
  CHECK(oracle.length_of(AffineWeylElt::identity(3)) == 0);
  for (const auto& [elt, dist] : oracle.table()) CHECK(length(elt) == dist);
  // elements beyond the horizon come back empty
  CHECK_FALSE(oracle.length_of(AffineWeylElt(3, {9, 0, -9}, {0, 1, 2})).has_value());
  // the basic part is quotiented out before the table lookup
  CHECK(oracle.length_of(omega_element(3, 2)) == 0);
  CHECK(oracle.length_of(compose(omega_element(3, 1), AffineWeylElt(3, {0, 0, 0}, {1, 0, 2}))) == 1);
}
