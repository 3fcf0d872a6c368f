#include "adlv/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace adlv {

AffineWeylElt::AffineWeylElt(int n_, std::vector<long long> translation_,
                             std::vector<int> perm_)
    : n(n_), translation(std::move(translation_)), perm(std::move(perm_)) {
  if (n < 1) throw SizeMismatch("AffineWeylElt requires n >= 1");
  if (static_cast<int>(translation.size()) != n || static_cast<int>(perm.size()) != n)
    throw SizeMismatch("AffineWeylElt parts must have length n");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw SizeMismatch("perm is not a permutation");
    seen[p] = true;
  }
}

AffineWeylElt AffineWeylElt::identity(int n) {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  return AffineWeylElt(n, std::vector<long long>(n, 0), std::move(id));
}

std::vector<long long> AffineWeylElt::apply_perm(const std::vector<long long>& v) const {
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[perm[i]] = v[i];
  return out;
}

long long AffineWeylElt::kappa() const {
  return std::accumulate(translation.begin(), translation.end(), 0LL);
}

int AffineWeylElt::perm_order() const {
  std::vector<int> cur = perm;
  int r = 1;
  auto is_id = [&] {
    for (int i = 0; i < n; ++i)
      if (cur[i] != i) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) next[i] = perm[cur[i]];
    cur = std::move(next);
    ++r;
  }
  return r;
}

AffineWeylElt compose(const AffineWeylElt& x, const AffineWeylElt& y) {
  if (x.n != y.n) throw SizeMismatch("compose: mixed ranks");
  std::vector<long long> tr = x.translation;
  auto moved = x.apply_perm(y.translation);
  for (int i = 0; i < x.n; ++i) tr[i] += moved[i];
  std::vector<int> p(x.n);
  for (int i = 0; i < x.n; ++i) p[i] = x.perm[y.perm[i]];
  return AffineWeylElt(x.n, std::move(tr), std::move(p));
}

AffineWeylElt inverse(const AffineWeylElt& x) {
  std::vector<int> q(x.n);
  for (int i = 0; i < x.n; ++i) q[x.perm[i]] = i;
  std::vector<long long> tr(x.n);
  for (int i = 0; i < x.n; ++i) tr[i] = -x.translation[x.perm[i]];
  return AffineWeylElt(x.n, std::move(tr), std::move(q));
}

AffineWeylElt power(const AffineWeylElt& x, long long k) {
  AffineWeylElt acc = AffineWeylElt::identity(x.n);
  for (long long i = 0; i < k; ++i) acc = compose(acc, x);
  return acc;
}

long long length(const AffineWeylElt& x) {
  std::vector<int> q(x.n);
  for (int i = 0; i < x.n; ++i) q[x.perm[i]] = i;
  long long total = 0;
  for (int i = 0; i < x.n; ++i)
    for (int j = i + 1; j < x.n; ++j) {
      long long pairing = x.translation[i] - x.translation[j];
      // w^{-1}(e_i - e_j) is positive iff w^{-1}(i) < w^{-1}(j)
      total += std::llabs(q[i] < q[j] ? pairing : pairing - 1);
    }
  return total;
}

bool is_basic(const AffineWeylElt& x) { return length(x) == 0; }

std::vector<Rat> newton_of(const AffineWeylElt& x) {
  int r = x.perm_order();
  auto xr = power(x, r);
  std::vector<Rat> nu(x.n);
  for (int i = 0; i < x.n; ++i) nu[i] = Rat(xr.translation[i], r);
  std::sort(nu.begin(), nu.end(), std::greater<>());
  return nu;
}

bool is_straight(const AffineWeylElt& x) {
  const long long l = length(x);
  int r = x.perm_order();
  bool by_powers = true;
  for (int k = 2; k <= r; ++k)
    if (length(power(x, k)) != k * l) {
      by_powers = false;
      break;
    }
  bool by_newton = (Rat(l) == two_rho_pairing(newton_of(x)));
  if (by_powers != by_newton)
    throw std::logic_error("straightness criteria disagree");
  return by_powers;
}

AffineWeylElt omega_element(int n, long long p) {
  long long a = p >= 0 ? p / n : -((-p + n - 1) / n);
  long long s = p - a * n;  // 0 <= s < n
  std::vector<long long> tr(n, a);
  for (long long i = 0; i < s; ++i) tr[i] += 1;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = static_cast<int>((i + s) % n);
  return AffineWeylElt(n, std::move(tr), std::move(perm));
}

AffineWeylElt find_straight(int n, const FactorInvariants& inv) {
  GroupDatum g({{n, 1}});
  SigmaInvariants sigma{{inv}};
  std::vector<std::vector<LeviBlock>> blocks;
  try {
    blocks = newton_levi_decomposition(g, sigma);
  } catch (const Error&) {
    throw NoneFound("no straight element for inconsistent invariants");
  }

  AffineWeylElt out = AffineWeylElt::identity(n);
  int offset = 0;
  for (const auto& b : blocks[0]) {
    long long p = (b.slope * b.size).numerator();
    auto block_elt = omega_element(b.size, p);
    for (int i = 0; i < b.size; ++i) {
      out.translation[offset + i] = block_elt.translation[i];
      out.perm[offset + i] = offset + block_elt.perm[i];
    }
    offset += b.size;
  }

  if (newton_of(out) != inv.nu || out.kappa() != inv.kappa || !is_straight(out))
    throw NoneFound("assembled element fails the required properties");
  return out;
}

bool verify_prop_lambda(int n, const FactorInvariants& inv) {
  GroupDatum g({{n, 1}});
  SigmaInvariants sigma{{inv}};
  auto x = find_straight(n, inv);
  std::vector<long long> lhs = x.translation;
  std::sort(lhs.begin(), lhs.end(), std::greater<>());
  auto rhs = lambda_from_invariants(g, sigma)[0];
  std::sort(rhs.begin(), rhs.end(), std::greater<>());
  if (lhs != rhs) return false;

  // central case: the translation must be the dominant-cyclic lift of kappa
  bool central = std::all_of(inv.nu.begin(), inv.nu.end(),
                             [&](const Rat& v) { return v == inv.nu[0]; });
  if (central && lhs != omega_element(n, inv.kappa).translation) return false;
  return true;
}

LengthOracle::LengthOracle(int n, int max_len) : n_(n), max_len_(max_len) {
  auto id = AffineWeylElt::identity(n);
  dist_[id] = 0;
  if (n < 2) return;

  std::vector<AffineWeylElt> gens;
  for (int i = 1; i < n; ++i) {
    auto s = id;
    std::swap(s.perm[i - 1], s.perm[i]);
    gens.push_back(s);
  }
  {
    auto s0 = id;
    std::swap(s0.perm[0], s0.perm[n - 1]);
    s0.translation[0] = 1;
    s0.translation[n - 1] = -1;
    gens.push_back(s0);
  }

  std::deque<AffineWeylElt> queue{id};
  while (!queue.empty()) {
    AffineWeylElt cur = std::move(queue.front());
    queue.pop_front();
    long long d = dist_.at(cur);
    if (d == max_len_) continue;
    for (const auto& s : gens) {
      auto nxt = compose(cur, s);
      if (dist_.emplace(nxt, d + 1).second) queue.push_back(std::move(nxt));
    }
  }
}

std::optional<long long> LengthOracle::length_of(const AffineWeylElt& x) const {
  if (x.n != n_) throw SizeMismatch("oracle built for a different rank");
  // strip the basic part; length is invariant under it
  const long long k = x.kappa();
  auto step = k >= 0 ? inverse(omega_element(n_, 1)) : omega_element(n_, 1);
  auto in_wa = compose(x, power(step, std::llabs(k)));
  auto it = dist_.find(in_wa);
  if (it == dist_.end()) return std::nullopt;
  return it->second;
}

}  // namespace adlv
