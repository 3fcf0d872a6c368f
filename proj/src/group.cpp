#include "adlv/group.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

GroupDatum::GroupDatum(std::vector<GroupFactor> factors_) : factors(std::move(factors_)) {
  if (factors.empty()) throw SizeMismatch("group needs at least one factor");
  for (const auto& f : factors)
    if (f.n < 1 || f.d < 1) throw SizeMismatch("factor requires n >= 1 and d >= 1");
}

std::vector<long long> cochar_restriction(const Cochar& c) {
  if (c.empty()) throw SizeMismatch("empty cocharacter");
  std::vector<long long> out(c[0].size(), 0);
  for (const auto& copy : c) {
    if (copy.size() != out.size()) throw SizeMismatch("ragged cocharacter");
    for (size_t i = 0; i < out.size(); ++i) out[i] += copy[i];
  }
  return out;
}

void check_invariants(const GroupDatum& g, const SigmaInvariants& inv) {
  if (inv.factors.size() != g.factors.size())
    throw InvalidInvariants("one invariant record per group factor required");
  for (size_t j = 0; j < g.factors.size(); ++j) {
    const auto& f = inv.factors[j];
    const int n = g.factors[j].n;
    if (static_cast<int>(f.nu.size()) != n)
      throw InvalidInvariants("Newton point has wrong length");
    for (int i = 0; i + 1 < n; ++i)
      if (f.nu[i] < f.nu[i + 1])
        throw InvalidInvariants("Newton point must be weakly decreasing");
    Rat total = std::accumulate(f.nu.begin(), f.nu.end(), Rat(0));
    // the restriction to the split maximal torus scales slopes by d, and the
    // Kottwitz point is the total of the restricted Newton point
    if (total * g.factors[j].d != Rat(f.kappa))
      throw InvalidInvariants("Kottwitz point inconsistent with Newton total");
  }
}

std::vector<Rat> restricted_newton(const GroupFactor& f, const std::vector<Rat>& nu) {
  std::vector<Rat> out(nu);
  for (auto& x : out) x *= f.d;
  return out;
}

bool dominance_leq(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (x.size() != y.size()) throw LengthMismatch("dominance_leq: unequal lengths");
  Rat px(0), py(0);
  for (size_t k = 0; k + 1 < x.size(); ++k) {
    px += x[k];
    py += y[k];
    if (px > py) return false;
  }
  if (!x.empty()) {
    px += x.back();
    py += y.back();
  }
  return px == py;
}

IntVector lambda_from_invariants(const GroupDatum& g, const SigmaInvariants& inv) {
  check_invariants(g, inv);
  IntVector out;
  out.reserve(g.factors.size());
  for (size_t j = 0; j < g.factors.size(); ++j) {
    auto nu_r = restricted_newton(g.factors[j], inv.factors[j].nu);
    const int n = g.factors[j].n;
    std::vector<long long> lambda(n);
    Rat partial(0);
    long long prev = 0;
    for (int i = 0; i < n; ++i) {
      partial += nu_r[i];
      long long cur = (i + 1 == n) ? inv.factors[j].kappa : floor_rat(partial);
      lambda[i] = cur - prev;
      prev = cur;
    }
    out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<long long> lambda_superbasic_floor(long long m, int n) {
  if (m < 0 || n < 1 || std::gcd(m, static_cast<long long>(n)) != 1)
    throw NotCoprime("lambda_superbasic_floor requires coprime m, n with m >= 0");
  std::vector<long long> out(n);
  for (int i = 1; i <= n; ++i)
    out[i - 1] = (i * m) / n - ((i - 1) * m) / n;
  return out;
}

std::vector<std::vector<LeviBlock>> newton_levi_decomposition(const GroupDatum& g,
                                                              const SigmaInvariants& inv) {
  check_invariants(g, inv);
  std::vector<std::vector<LeviBlock>> out;
  out.reserve(g.factors.size());
  for (size_t j = 0; j < g.factors.size(); ++j) {
    auto nu_r = restricted_newton(g.factors[j], inv.factors[j].nu);
    std::vector<LeviBlock> blocks;
    size_t i = 0;
    while (i < nu_r.size()) {
      size_t k = i;
      while (k < nu_r.size() && nu_r[k] == nu_r[i]) ++k;
      long long s = static_cast<long long>(k - i);
      long long q = nu_r[i].denominator();
      if (s % q != 0)
        throw NonIntegralDecomposition("slope group size not divisible by slope denominator");
      for (long long b = 0; b < s / q; ++b)
        blocks.push_back({static_cast<int>(q), nu_r[i]});
      i = k;
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

long long defect(const GroupDatum& g, const SigmaInvariants& inv) {
  long long total = 0;
  for (const auto& blocks : newton_levi_decomposition(g, inv))
    for (const auto& b : blocks) total += b.size - 1;
  return total;
}

long long two_rho_pairing(const std::vector<long long>& x) {
  long long s = 0;
  const long long n = static_cast<long long>(x.size());
  for (long long i = 1; i <= n; ++i) s += (n + 1 - 2 * i) * x[i - 1];
  return s;
}

Rat two_rho_pairing(const std::vector<Rat>& x) {
  Rat s(0);
  const long long n = static_cast<long long>(x.size());
  for (long long i = 1; i <= n; ++i) s += Rat(n + 1 - 2 * i) * x[i - 1];
  return s;
}

long long adlv_dimension(const GroupDatum& g, const CocharTuple& mu,
                         const SigmaInvariants& inv) {
  check_invariants(g, inv);
  if (mu.size() != g.factors.size())
    throw SizeMismatch("one cocharacter per factor required");
  Rat dim(0);
  for (size_t j = 0; j < g.factors.size(); ++j) {
    const auto& f = g.factors[j];
    if (static_cast<int>(mu[j].size()) != f.d)
      throw SizeMismatch("cocharacter has wrong number of copies");
    auto restr = cochar_restriction(mu[j]);
    if (static_cast<int>(restr.size()) != f.n)
      throw SizeMismatch("cocharacter has wrong length");
    auto nu_r = restricted_newton(f, inv.factors[j].nu);
    std::vector<Rat> restr_dom(restr.begin(), restr.end());
    std::sort(restr_dom.begin(), restr_dom.end(), std::greater<>());
    if (!dominance_leq(nu_r, restr_dom))
      throw NotInBGmu("Newton point not below the cocharacter");
    for (const auto& copy : mu[j]) dim += Rat(two_rho_pairing(copy), 2);
    dim += Rat(f.d, 2) * two_rho_pairing(inv.factors[j].nu);
  }
  dim -= Rat(defect(g, inv), 2);
  if (dim.denominator() != 1 || dim < 0)
    throw NonIntegralDecomposition("dimension formula did not produce a non-negative integer");
  return dim.numerator();
}

bool check_lambda_window(const IntVector& lambda, const GroupDatum& g,
                         const SigmaInvariants& inv) {
  check_invariants(g, inv);
  if (lambda.size() != g.factors.size())
    throw SizeMismatch("one lambda row per factor required");
  for (size_t j = 0; j < g.factors.size(); ++j) {
    const int n = g.factors[j].n;
    if (static_cast<int>(lambda[j].size()) != n)
      throw SizeMismatch("lambda row has wrong length");
    auto nu_r = restricted_newton(g.factors[j], inv.factors[j].nu);
    long long pl = 0;
    Rat pn(0);
    for (int i = 0; i < n; ++i) {
      pl += lambda[j][i];
      pn += nu_r[i];
      Rat diff = Rat(pl) - pn;
      if (i + 1 == n) {
        if (pl != inv.factors[j].kappa) return false;
      } else if (diff > 0 || diff <= -1) {
        return false;
      }
    }
  }
  return true;
}

bool functoriality_check(const GroupDatum& g, const SigmaInvariants& inv,
                         FunctorialityMode mode) {
  check_invariants(g, inv);
  IntVector lambda_g = lambda_from_invariants(g, inv);

  if (mode == FunctorialityMode::levi) {
    auto blocks = newton_levi_decomposition(g, inv);
    for (size_t j = 0; j < g.factors.size(); ++j) {
      std::vector<long long> glued;
      for (const auto& b : blocks[j]) {
        auto part = lambda_superbasic_floor(
            (b.slope * b.size).numerator(), b.size);
        glued.insert(glued.end(), part.begin(), part.end());
      }
      if (glued != lambda_g[j]) return false;
    }
    return true;
  }

  // central_quotient: shifting by the central cocharacter (1,...,1) must shift
  // lambda by (1,...,1), so the construction is well defined mod the center.
  SigmaInvariants shifted = inv;
  for (size_t j = 0; j < g.factors.size(); ++j) {
    const auto& f = g.factors[j];
    for (auto& x : shifted.factors[j].nu) x += Rat(1, f.d);
    shifted.factors[j].kappa += f.n;
  }
  IntVector lambda_s = lambda_from_invariants(g, shifted);
  for (size_t j = 0; j < g.factors.size(); ++j)
    for (size_t i = 0; i < lambda_g[j].size(); ++i)
      if (lambda_s[j][i] - lambda_g[j][i] != 1) return false;
  return true;
}

}  // namespace adlv
