#pragma once

#include <vector>

#include "adlv/errors.hpp"
#include "adlv/rational.hpp"

namespace adlv {

// One factor Res_{F_d/F} GL_n of the group.
struct GroupFactor {
  int n = 1;
  int d = 1;
};

struct GroupDatum {
  std::vector<GroupFactor> factors;

  GroupDatum() = default;
  explicit GroupDatum(std::vector<GroupFactor> factors_);
};

// Newton point (relative, weakly decreasing) and Kottwitz point of one factor.
struct FactorInvariants {
  std::vector<Rat> nu;
  long long kappa = 0;
};

struct SigmaInvariants {
  std::vector<FactorInvariants> factors;
};

// Per factor, an integer n_j-vector (the restriction of a character/cocharacter).
using IntVector = std::vector<std::vector<long long>>;

// Per factor, d_j integer n_j-vectors (a cocharacter of the full torus).
using Cochar = std::vector<std::vector<long long>>;      // [d][n]
using CocharTuple = std::vector<Cochar>;                  // per factor

// Sum of the d copies of one factor's cocharacter.
std::vector<long long> cochar_restriction(const Cochar& c);

// Shape and invariant checks; throws InvalidInvariants.
void check_invariants(const GroupDatum& g, const SigmaInvariants& inv);

// Newton point of the restricted (split) group: d * nu.
std::vector<Rat> restricted_newton(const GroupFactor& f, const std::vector<Rat>& nu);

// Partial-sum dominance order; requires equal totals to return true.
bool dominance_leq(const std::vector<Rat>& x, const std::vector<Rat>& y);

// The maximal integral point below the Newton point in its Kottwitz class,
// characterised by partial sums floor(P_j(restricted nu)) with total kappa.
IntVector lambda_from_invariants(const GroupDatum& g, const SigmaInvariants& inv);

// lambda_i = floor(i*m/n) - floor((i-1)*m/n); requires gcd(m, n) = 1.
std::vector<long long> lambda_superbasic_floor(long long m, int n);

// One block of the slope decomposition; the group is superbasic on each block.
struct LeviBlock {
  int size = 1;
  Rat slope;
  bool operator==(const LeviBlock&) const = default;
};

// Per factor: equal restricted slopes grouped, each slope group of size s and
// slope p/q in lowest terms split into s/q blocks of size q.
std::vector<std::vector<LeviBlock>> newton_levi_decomposition(const GroupDatum& g,
                                                              const SigmaInvariants& inv);

// Sum of (block size - 1) over all superbasic blocks of all factors.
long long defect(const GroupDatum& g, const SigmaInvariants& inv);

// <2 rho, x> = sum_i (n+1-2i) * x_i (1-based i).
long long two_rho_pairing(const std::vector<long long>& x);
Rat two_rho_pairing(const std::vector<Rat>& x);

// Dimension of the variety attached to (mu, inv): sum over factors of
// <rho, sum_tau mu_tau + d*nu> minus half the defect. Throws NotInBGmu when
// the Mazur inequality fails.
long long adlv_dimension(const GroupDatum& g, const CocharTuple& mu,
                         const SigmaInvariants& inv);

// Totals equal kappa and P_j(lambda) - P_j(restricted nu) in (-1, 0] for all j.
bool check_lambda_window(const IntVector& lambda, const GroupDatum& g,
                         const SigmaInvariants& inv);

enum class FunctorialityMode { central_quotient, levi };

// levi: blockwise floor-lambdas concatenate to lambda of the full group.
// central_quotient: lambdas of two central lifts agree modulo the all-ones
// vector, i.e. the construction descends to the adjoint quotient.
bool functoriality_check(const GroupDatum& g, const SigmaInvariants& inv,
                         FunctorialityMode mode);

}  // namespace adlv
