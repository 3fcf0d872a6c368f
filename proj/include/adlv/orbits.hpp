#pragma once

#include <cstdint>
#include <vector>

#include "adlv/errors.hpp"
#include "adlv/group.hpp"

namespace adlv {

struct OrbitCount {
  unsigned long long count = 0;
  std::vector<CocharTuple> witnesses;  // lexicographic, capped
  bool overflow = false;               // witness cap exceeded (count still exact)
  bool class_mismatch = false;         // lambda total disagrees with kappa
};

inline constexpr unsigned long long kDefaultWitnessCap = 1'000'000;

// Per factor, the number of tuples (mu~_tau) with each mu~_tau a coordinate
// permutation of mu_tau and sum lambda; the total is the product over factors.
// A kappa/lambda-total mismatch forces an empty intersection and is reported
// via the class_mismatch flag with count 0.
OrbitCount orbit_intersection_count(const GroupDatum& g, const CocharTuple& mu,
                                    const IntVector& lambda,
                                    const std::vector<long long>& kappa,
                                    unsigned long long witness_cap = kDefaultWitnessCap);

// Dimension of the target-weight space of the tensor product of exterior
// powers picked out by mu (minuscule): tuples of k_tau-subsets whose indicator
// vectors sum to the target. Independent of orbit_intersection_count.
unsigned long long weight_multiplicity(const GroupDatum& g, const CocharTuple& mu,
                                       const IntVector& target);

// All weights with nonzero multiplicity, with their multiplicities, for one
// factor; used to cross-check the two counters on full weight distributions.
std::vector<std::pair<std::vector<long long>, unsigned long long>> weight_distribution(
    const GroupFactor& f, const Cochar& mu);

// All blockwise weakly decreasing redistributions of mu's entries over the
// blocks whose per-block sums equal kappa_M; each element is returned as one
// vector per block.
std::vector<IntVector> levi_index_set(const std::vector<LeviBlock>& blocks,
                                      const std::vector<long long>& mu,
                                      const std::vector<long long>& kappa_M);

// The orbit count computed directly at (G, lambda_G) and again through the
// slope-Levi subgroup (sum over the index set of products of block counts).
// Supports a single split factor, or a single superbasic Res factor (where the
// Levi is the whole group).
std::pair<unsigned long long, unsigned long long> orbit_count_via_levi(
    const GroupDatum& g, const CocharTuple& mu, const SigmaInvariants& inv);

}  // namespace adlv
