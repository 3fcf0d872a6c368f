#include <doctest.h>

#include "adlv/group.hpp"

using namespace adlv;

namespace {

SigmaInvariants inv1(std::vector<Rat> nu, long long kappa) {
  return SigmaInvariants{{FactorInvariants{std::move(nu), kappa}}};
}

const GroupDatum kGl2({{2, 1}});
const GroupDatum kGl4({{4, 1}});
const GroupDatum kGl7({{7, 1}});
const GroupDatum kRes23({{3, 2}});

}  // namespace

TEST_CASE("invariant compatibility") {
  CHECK_NOTHROW(check_invariants(kGl7, inv1(std::vector<Rat>(7, Rat(5, 7)), 5)));
  // d * sum(nu) must equal kappa
  CHECK_NOTHROW(check_invariants(kRes23, inv1(std::vector<Rat>(3, Rat(1, 3)), 2)));
  CHECK_THROWS_AS(check_invariants(kRes23, inv1(std::vector<Rat>(3, Rat(1, 3)), 1)),
                  InvalidInvariants);
  // newton points are weakly decreasing
  CHECK_THROWS_AS(check_invariants(kGl2, inv1({Rat(0), Rat(1)}, 1)), InvalidInvariants);
}

TEST_CASE("restricted newton point multiplies by d") {
  auto r = restricted_newton({3, 2}, std::vector<Rat>(3, Rat(1, 3)));
  CHECK(r == std::vector<Rat>(3, Rat(2, 3)));
}

TEST_CASE("dominance order compares partial sums") {
  CHECK(dominance_leq({Rat(1, 2), Rat(1, 2)}, {Rat(1), Rat(0)}));
  CHECK_FALSE(dominance_leq({Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)}));
  CHECK_FALSE(dominance_leq({Rat(1), Rat(1)}, {Rat(1), Rat(0)}));  // totals must agree
}

TEST_CASE("floor lambda of a superbasic slope") {
  CHECK(lambda_superbasic_floor(5, 7) == std::vector<long long>{0, 1, 1, 0, 1, 1, 1});
  CHECK(lambda_superbasic_floor(2, 3) == std::vector<long long>{0, 1, 1});
  CHECK(lambda_superbasic_floor(1, 1) == std::vector<long long>{1});
  CHECK_THROWS_AS(lambda_superbasic_floor(2, 4), NotCoprime);
}

TEST_CASE("lambda from invariants") {
  CHECK(lambda_from_invariants(kGl7, inv1(std::vector<Rat>(7, Rat(5, 7)), 5)) ==
        IntVector{{0, 1, 1, 0, 1, 1, 1}});
  CHECK(lambda_from_invariants(kRes23, inv1(std::vector<Rat>(3, Rat(1, 3)), 2)) ==
        IntVector{{0, 1, 1}});
  // non-central example: slopes (1, 1/3, 1/3, 1/3)
  CHECK(lambda_from_invariants(kGl4, inv1({Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2)) ==
        IntVector{{1, 0, 0, 1}});
}

TEST_CASE("lambda window") {
  auto inv = inv1({Rat(1), Rat(0)}, 1);
  CHECK(check_lambda_window({{1, 0}}, kGl2, inv));
  CHECK_FALSE(check_lambda_window({{0, 1}}, kGl2, inv));
  auto sb = inv1(std::vector<Rat>(3, Rat(1, 3)), 2);
  CHECK(check_lambda_window({{0, 1, 1}}, kRes23, sb));
  CHECK_FALSE(check_lambda_window({{1, 1, 1}}, kRes23, sb));  // wrong total
}

TEST_CASE("levi decomposition and defect") {
  auto blocks = newton_levi_decomposition(kGl4, inv1({Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2));
  CHECK(blocks == std::vector<std::vector<LeviBlock>>{{{1, Rat(1)}, {3, Rat(1, 3)}}});
  CHECK(defect(kGl4, inv1({Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2)) == 2);

  // restricted slopes drive the splitting: 2 * (1/3) = 2/3 keeps one block
  CHECK(newton_levi_decomposition(kRes23, inv1(std::vector<Rat>(3, Rat(1, 3)), 2)) ==
        std::vector<std::vector<LeviBlock>>{{{3, Rat(2, 3)}}});
  CHECK(defect(kRes23, inv1(std::vector<Rat>(3, Rat(1, 3)), 2)) == 2);

  CHECK(defect(kGl2, inv1({Rat(1), Rat(0)}, 1)) == 0);
  CHECK(defect(kGl2, inv1({Rat(1, 2), Rat(1, 2)}, 1)) == 1);
}

TEST_CASE("two rho pairing") {
  CHECK(two_rho_pairing(std::vector<long long>{1, 0}) == 1);
  CHECK(two_rho_pairing(std::vector<long long>{1, 1, 1, 1, 1, 0, 0}) == 10);
  CHECK(two_rho_pairing(std::vector<Rat>(2, Rat(1, 2))) == Rat(0));
}

TEST_CASE("variety dimension") {
  CocharTuple mu7 = {{{1, 1, 1, 1, 1, 0, 0}}};
  CHECK(adlv_dimension(kGl7, mu7, inv1(std::vector<Rat>(7, Rat(5, 7)), 5)) == 2);

  CocharTuple mu23 = {{{1, 0, 0}, {1, 0, 0}}};
  CHECK(adlv_dimension(kRes23, mu23, inv1(std::vector<Rat>(3, Rat(1, 3)), 2)) == 1);

  // Mazur inequality: nu=(2,0,0) is not below mu=(1,1,0)
  CocharTuple mu3 = {{{1, 1, 0}}};
  CHECK_THROWS_AS(adlv_dimension(GroupDatum({{3, 1}}), mu3,
                                 inv1({Rat(2), Rat(0), Rat(0)}, 2)),
                  NotInBGmu);
}

TEST_CASE("functoriality") {
  auto inv = inv1({Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2);
  CHECK(functoriality_check(kGl4, inv, FunctorialityMode::levi));
  CHECK(functoriality_check(kGl4, inv, FunctorialityMode::central_quotient));
  auto sb = inv1(std::vector<Rat>(3, Rat(1, 3)), 2);
  CHECK(functoriality_check(kRes23, sb, FunctorialityMode::levi));
  CHECK(functoriality_check(kRes23, sb, FunctorialityMode::central_quotient));
}

TEST_CASE("cochar restriction sums the copies") {
  Cochar c = {{1, 0, 0}, {0, 1, 0}};
  CHECK(cochar_restriction(c) == std::vector<long long>{1, 1, 0});
}
