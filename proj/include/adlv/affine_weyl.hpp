#pragma once

#include <map>
#include <optional>
#include <vector>

#include "adlv/errors.hpp"
#include "adlv/group.hpp"
#include "adlv/rational.hpp"

namespace adlv {

// Element t^lambda * w of the extended affine Weyl group of GL_n. perm[i] is
// the 0-based image of i, so w acting on a vector sends entry i to slot
// perm[i].
struct AffineWeylElt {
  int n = 1;
  std::vector<long long> translation;
  std::vector<int> perm;

  AffineWeylElt() = default;
  AffineWeylElt(int n_, std::vector<long long> translation_, std::vector<int> perm_);
  static AffineWeylElt identity(int n);

  std::vector<long long> apply_perm(const std::vector<long long>& v) const;
  long long kappa() const;  // total of the translation part
  int perm_order() const;

  bool operator==(const AffineWeylElt&) const = default;
  auto operator<=>(const AffineWeylElt& o) const {
    if (auto c = translation <=> o.translation; c != 0) return c;
    return perm <=> o.perm;
  }
};

// Semidirect product (t^l u)(t^r v) = t^{l + u(r)} (uv).
AffineWeylElt compose(const AffineWeylElt& x, const AffineWeylElt& y);
AffineWeylElt inverse(const AffineWeylElt& x);
AffineWeylElt power(const AffineWeylElt& x, long long k);  // k >= 0

// Iwahori-Matsumoto length: sum over i < j of |l_i - l_j| when w^{-1}(e_i-e_j)
// is positive and |l_i - l_j - 1| otherwise.
long long length(const AffineWeylElt& x);

// Length zero, i.e. the element stabilizes the base alcove.
bool is_basic(const AffineWeylElt& x);

// Dominant rearrangement of translation(x^r)/r with r the order of the
// permutation part.
std::vector<Rat> newton_of(const AffineWeylElt& x);

// Length-additivity of powers; decided by checking k = 1..order plus the
// criterion length(x) = <2 rho, newton_of(x)>. The two decision procedures
// must agree (logic_error otherwise).
bool is_straight(const AffineWeylElt& x);

// The basic element omega_p of Omega: translation the dominant-cyclic lift of
// p (pattern a+1 repeated s times then a, for p = a*n + s), permutation the
// s-th power of the n-cycle. kappa(omega_p) = p and length 0.
AffineWeylElt omega_element(int n, long long p);

// A straight element with the prescribed Newton and Kottwitz points for a
// single split GL_n factor, assembled block-diagonally from basic elements of
// the slope blocks. Throws NoneFound on inconsistent input.
AffineWeylElt find_straight(int n, const FactorInvariants& inv);

// The dominant rearrangement of the translation part of find_straight equals
// the dominant rearrangement of lambda_from_invariants; for central Newton
// points additionally checks the translation is the dominant-cyclic lift
// pattern.
bool verify_prop_lambda(int n, const FactorInvariants& inv);

// Graph-distance lengths in W_a (sum-zero translations), extended to the whole
// group by quotienting out the basic part; used to validate `length`.
class LengthOracle {
 public:
  LengthOracle(int n, int max_len);

  // distance when <= max_len, nullopt when the element is farther out
  std::optional<long long> length_of(const AffineWeylElt& x) const;
  // all elements of W_a with distance <= max_len, with their distances
  const std::map<AffineWeylElt, long long>& table() const { return dist_; }

 private:
  int n_;
  int max_len_;
  std::map<AffineWeylElt, long long> dist_;
};

}  // namespace adlv
