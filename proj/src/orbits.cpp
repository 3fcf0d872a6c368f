#include "adlv/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace adlv {

namespace {

// All tuples of per-copy permutations of mu summing to lambda, in lexicographic
// order of the flattened tuple.
void factor_orbit(const Cochar& mu, const std::vector<long long>& lambda,
                  unsigned long long witness_cap, unsigned long long& count,
                  std::vector<Cochar>& witnesses, bool& overflow) {
  const int d = static_cast<int>(mu.size());
  const size_t n = lambda.size();
  Cochar cur(d);
  std::vector<long long> partial(n, 0);

  std::function<void(int)> rec = [&](int tau) {
    if (tau == d) {
      if (partial != lambda) return;
      ++count;
      if (witnesses.size() < witness_cap)
        witnesses.push_back(cur);
      else
        overflow = true;
      return;
    }
    std::vector<long long> perm = mu[tau];
    std::sort(perm.begin(), perm.end());
    do {
      cur[tau] = perm;
      for (size_t i = 0; i < n; ++i) partial[i] += perm[i];
      rec(tau + 1);
      for (size_t i = 0; i < n; ++i) partial[i] -= perm[i];
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
}

}  // namespace

OrbitCount orbit_intersection_count(const GroupDatum& g, const CocharTuple& mu,
                                    const IntVector& lambda,
                                    const std::vector<long long>& kappa,
                                    unsigned long long witness_cap) {
  if (mu.size() != g.factors.size() || lambda.size() != g.factors.size() ||
      kappa.size() != g.factors.size())
    throw SizeMismatch("orbit_intersection_count: one entry per factor required");

  OrbitCount out;
  out.count = 1;
  std::vector<std::vector<Cochar>> per_factor(g.factors.size());
  for (size_t j = 0; j < g.factors.size(); ++j) {
    const auto& f = g.factors[j];
    if (static_cast<int>(mu[j].size()) != f.d ||
        static_cast<int>(lambda[j].size()) != f.n)
      throw SizeMismatch("orbit_intersection_count: shape mismatch");
    long long total = std::accumulate(lambda[j].begin(), lambda[j].end(), 0LL);
    if (total != kappa[j]) {
      out.class_mismatch = true;
      out.count = 0;
      out.witnesses.clear();
      return out;
    }
    unsigned long long cnt = 0;
    factor_orbit(mu[j], lambda[j], witness_cap, cnt, per_factor[j], out.overflow);
    out.count *= cnt;
  }

  // cross product of the per-factor witness lists, lexicographic, capped
  CocharTuple cur(g.factors.size());
  std::function<bool(size_t)> build = [&](size_t j) -> bool {
    if (j == g.factors.size()) {
      if (out.witnesses.size() >= witness_cap) {
        out.overflow = true;
        return false;
      }
      out.witnesses.push_back(cur);
      return true;
    }
    for (const auto& w : per_factor[j]) {
      cur[j] = w;
      if (!build(j + 1)) return false;
    }
    return true;
  };
  if (out.count > 0) build(0);
  return out;
}

std::vector<std::pair<std::vector<long long>, unsigned long long>> weight_distribution(
    const GroupFactor& f, const Cochar& mu) {
  if (static_cast<int>(mu.size()) != f.d)
    throw SizeMismatch("weight_distribution: wrong number of copies");
  std::vector<long long> sizes(f.d);
  for (int tau = 0; tau < f.d; ++tau) {
    long long k = 0;
    for (long long v : mu[tau]) {
      if (v != 0 && v != 1) throw NotMinuscule("cocharacter entries must be 0/1");
      k += v;
    }
    sizes[tau] = k;
  }

  std::map<std::vector<long long>, unsigned long long> dist;
  std::vector<long long> weight(f.n, 0);
  std::vector<int> subset;
  std::function<void(int)> rec_copy = [&](int tau) {
    if (tau == f.d) {
      ++dist[weight];
      return;
    }
    // choose a sizes[tau]-subset of {0..n-1}
    std::function<void(int, long long)> choose = [&](int from, long long left) {
      if (left == 0) {
        rec_copy(tau + 1);
        return;
      }
      for (int i = from; i <= f.n - static_cast<int>(left); ++i) {
        ++weight[i];
        choose(i + 1, left - 1);
        --weight[i];
      }
    };
    choose(0, sizes[tau]);
  };
  rec_copy(0);
  return {dist.begin(), dist.end()};
}

unsigned long long weight_multiplicity(const GroupDatum& g, const CocharTuple& mu,
                                       const IntVector& target) {
  if (mu.size() != g.factors.size() || target.size() != g.factors.size())
    throw SizeMismatch("weight_multiplicity: one entry per factor required");
  unsigned long long total = 1;
  for (size_t j = 0; j < g.factors.size(); ++j) {
    if (static_cast<int>(target[j].size()) != g.factors[j].n)
      throw SizeMismatch("weight_multiplicity: target has wrong length");
    unsigned long long cnt = 0;
    for (const auto& [w, m] : weight_distribution(g.factors[j], mu[j]))
      if (w == target[j]) cnt = m;
    total *= cnt;
  }
  return total;
}

std::vector<IntVector> levi_index_set(const std::vector<LeviBlock>& blocks,
                                      const std::vector<long long>& mu,
                                      const std::vector<long long>& kappa_M) {
  if (blocks.size() != kappa_M.size())
    throw SizeMismatch("levi_index_set: one kappa per block required");
  size_t n = 0;
  for (const auto& b : blocks) n += static_cast<size_t>(b.size);
  if (n != mu.size()) throw SizeMismatch("levi_index_set: blocks must partition n");

  std::vector<long long> arrangement = mu;
  std::sort(arrangement.begin(), arrangement.end());
  std::set<IntVector> found;
  do {
    IntVector split;
    size_t pos = 0;
    bool ok = true;
    for (size_t b = 0; b < blocks.size() && ok; ++b) {
      std::vector<long long> part(arrangement.begin() + pos,
                                  arrangement.begin() + pos + blocks[b].size);
      pos += blocks[b].size;
      if (!std::is_sorted(part.rbegin(), part.rend()))
        ok = false;
      else if (std::accumulate(part.begin(), part.end(), 0LL) != kappa_M[b])
        ok = false;
      else
        split.push_back(std::move(part));
    }
    if (ok) found.insert(std::move(split));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return {found.begin(), found.end()};
}

std::pair<unsigned long long, unsigned long long> orbit_count_via_levi(
    const GroupDatum& g, const CocharTuple& mu, const SigmaInvariants& inv) {
  if (g.factors.size() != 1)
    throw SizeMismatch("orbit_count_via_levi: single factor only");
  check_invariants(g, inv);
  const auto& f = g.factors[0];
  auto lambda_g = lambda_from_invariants(g, inv);
  unsigned long long direct =
      orbit_intersection_count(g, mu, lambda_g, {inv.factors[0].kappa}).count;

  auto blocks = newton_levi_decomposition(g, inv)[0];
  if (blocks.size() == 1 && blocks[0].size == f.n) {
    // the Levi is the whole group; the index set is {mu} and both paths agree
    // by construction, but recompute independently anyway
    return {direct,
            orbit_intersection_count(g, mu, lambda_g, {inv.factors[0].kappa}).count};
  }
  if (f.d != 1)
    throw SizeMismatch("orbit_count_via_levi: non-superbasic Res factors unsupported");

  std::vector<long long> kappa_M(blocks.size());
  for (size_t b = 0; b < blocks.size(); ++b)
    kappa_M[b] = (blocks[b].slope * blocks[b].size).numerator();

  unsigned long long via = 0;
  for (const auto& split : levi_index_set(blocks, cochar_restriction(mu[0]), kappa_M)) {
    unsigned long long prod = 1;
    for (size_t b = 0; b < blocks.size(); ++b) {
      GroupDatum block_g({{blocks[b].size, 1}});
      auto lambda_b = lambda_superbasic_floor(kappa_M[b], blocks[b].size);
      prod *= orbit_intersection_count(block_g, {{split[b]}}, {lambda_b}, {kappa_M[b]})
                  .count;
    }
    via += prod;
  }
  return {direct, via};
}

}  // namespace adlv
