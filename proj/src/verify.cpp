#include "adlv/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "adlv/affine_weyl.hpp"
#include "adlv/elcharts.hpp"
#include "adlv/group.hpp"
#include "adlv/orbits.hpp"
#include "adlv/words.hpp"

namespace adlv {

namespace {

const std::vector<std::pair<long long, int>> kGridPairs = {
    {1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 5}, {3, 5}, {5, 7}};

std::vector<std::vector<long long>> compositions(long long m, int d) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(d, 0);
  std::function<void(int, long long)> rec = [&](int i, long long left) {
    if (i == d - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, m);
  return out;
}

struct Failure {
  std::ostringstream msg;
  int count = 0;
  void add(const std::string& s) {
    if (count < 5) msg << (count ? "; " : "") << s;
    ++count;
  }
  bool ok() const { return count == 0; }
  std::string str(const std::string& ok_msg) const {
    if (ok()) return ok_msg;
    std::ostringstream out;
    out << count << " violation(s): " << msg.str();
    return out.str();
  }
};

std::string vec_str(const std::vector<long long>& v) {
  std::ostringstream s;
  s << "(";
  for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

// ---- criterion 1: worked example ------------------------------------------

CriterionResult criterion_1() {
  CriterionResult r{1, "worked example n=7 m=5", false, ""};
  FSpec spec(7, 1, {5});
  ElChart n0(spec, {{0, 1, 2, 3, 4, 5, 6}});
  auto [type, walk] = chart_type(n0);
  TypeVector expected_type(7, 1, {{0, 1, 1, 0, 1, 1, 1}});
  MultiWord w = type_word(type, spec);
  std::vector<long long> expected_levels = {5, 3, 1, 6, 4, 2, 0};
  MultiWord swept = sweep_multi(w);
  std::vector<long long> expected_swept = {5, 5, -2, -2, -2, -2, -2};
  TypeVector expected_zeta(7, 1, {{0, 0, 1, 1, 1, 1, 1}});
  Failure f;
  if (type != expected_type) f.add("type mismatch");
  if (levels(w) != expected_levels) f.add("level mismatch");
  if (swept.letters != expected_swept) f.add("swept word mismatch");
  if (zeta(type, spec) != expected_zeta) f.add("zeta mismatch");
  r.pass = f.ok();
  r.details = f.str("type/levels/sweep/zeta all match");
  return r;
}

// ---- criterion 2: sweep bijectivity and Dyck preservation ------------------

CriterionResult criterion_2() {
  CriterionResult r{2, "sweep bijectivity and Dyck preservation", false, ""};
  Failure f;
  long long classes = 0, words = 0;
  for (const auto& gc : verification_grid()) {
    FSpec spec(gc.n, gc.d, gc.m_vec);
    struct AlphabetLess {
      bool operator()(const Alphabet& a, const Alphabet& b) const {
        return a.multisets < b.multisets;
      }
    };
    std::set<Alphabet, AlphabetLess> seen;
    for (const auto& type : enumerate_P(spec))
      seen.insert(Alphabet::of(type_word(type, spec)));
    for (const auto& alphabet : seen) {
      ++classes;
      std::set<std::vector<long long>> image;
      bool dyck_ok = true, in_class = true;
      unsigned long long size = 0;
      for_each_in_class(alphabet, [&](const MultiWord& w) {
        ++size;
        ++words;
        MultiWord s = sweep_multi(w);
        image.insert(s.letters);
        if (!alphabet.contains(s)) in_class = false;
        if (is_dyck(w) && !is_dyck(s)) dyck_ok = false;
      });
      if (image.size() != size) f.add("sweep not injective on a class");
      if (!in_class) f.add("sweep left the rearrangement class");
      if (!dyck_ok) f.add("sweep broke a Dyck word");
    }
  }
  r.pass = f.ok();
  std::ostringstream ok;
  ok << classes << " classes, " << words << " words, zero violations";
  r.details = f.str(ok.str());
  return r;
}

// ---- criterion 3: cotype bijection -----------------------------------------

CriterionResult criterion_3() {
  CriterionResult r{3, "cotype bijection and zeta agreement", false, ""};
  Failure f;
  long long total_types = 0;
  for (const auto& gc : verification_grid()) {
    FSpec spec(gc.n, gc.d, gc.m_vec);
    auto types = enumerate_P(spec);
    total_types += static_cast<long long>(types.size());
    std::set<TypeVector> cotypes;
    std::map<TypeVector, std::set<TypeVector>> by_hodge_types, by_hodge_images;
    for (const auto& t : types) {
      ElChart chart = chart_from_type(t, spec);
      auto [round_trip, walk] = chart_type(chart);
      if (round_trip != t) f.add("type round trip failed");
      TypeVector cot = chart_cotype(chart);
      if (zeta(t, spec) != cot) f.add("zeta differs from cotype walk");
      cotypes.insert(cot);
      by_hodge_types[t.dominant()].insert(t);
      by_hodge_images[t.dominant()].insert(cot);
    }
    if (cotypes.size() != types.size()) f.add("cotypes not pairwise distinct");
    if (std::set<TypeVector>(types.begin(), types.end()) != cotypes)
      f.add("cotypes do not exhaust the type set");
    for (const auto& [hodge, group] : by_hodge_types)
      if (by_hodge_images[hodge] != group) f.add("zeta does not permute a P_mu");
  }
  r.pass = f.ok();
  std::ostringstream ok;
  ok << total_types << " types over the grid, zero violations";
  r.details = f.str(ok.str());
  return r;
}

// ---- criteria 4/5: pinned cell tables --------------------------------------

CriterionResult criterion_4() {
  CriterionResult r{4, "cell table GL_7, m=5, mu=(1^5,0^2)", false, ""};
  Failure f;
  FSpec spec(7, 1, {5});
  TypeVector hodge(7, 1, {{1, 1, 1, 1, 1, 0, 0}});
  auto table = cell_table(spec, hodge, {0, 1, 1, 0, 1, 1, 1});
  std::multiset<long long> dims;
  for (const auto& rec : table.records) dims.insert(rec.dim);
  if (table.records.size() != 3) f.add("expected 3 cells");
  if (dims != std::multiset<long long>{0, 1, 2}) f.add("dimension multiset mismatch");
  if (table.top_count != 1) f.add("expected one top cell");
  GroupDatum g({{7, 1}});
  SigmaInvariants inv{{{std::vector<Rat>(7, Rat(5, 7)), 5}}};
  long long dim = adlv_dimension(g, {{{1, 1, 1, 1, 1, 0, 0}}}, inv);
  if (table.max_dim != 2 || dim != 2) f.add("max dim != adlv_dimension = 2");
  r.pass = f.ok();
  r.details = f.str("3 cells, dims {0,1,2}, top 1, dim 2");
  return r;
}

CriterionResult criterion_5() {
  CriterionResult r{5, "cell table Res_2 GL_3, m_vec=(1,1)", false, ""};
  Failure f;
  FSpec spec(3, 2, {1, 1});
  TypeVector hodge(3, 2, {{1, 0, 0}, {1, 0, 0}});
  auto table = cell_table(spec, hodge, {0, 1, 1});
  std::multiset<long long> dims;
  for (const auto& rec : table.records) dims.insert(rec.dim);
  if (table.records.size() != 3) f.add("expected 3 cells");
  if (dims != std::multiset<long long>{0, 1, 1}) f.add("dimension multiset mismatch");
  if (table.top_count != 2) f.add("expected two top cells");
  GroupDatum g({{3, 2}});
  CocharTuple mu = {{{1, 0, 0}, {1, 0, 0}}};
  SigmaInvariants inv{{{std::vector<Rat>(3, Rat(1, 3)), 2}}};
  auto orbit = orbit_intersection_count(g, mu, {{0, 1, 1}}, {2});
  auto wm = weight_multiplicity(g, mu, {{0, 1, 1}});
  if (orbit.count != 2 || wm != 2) f.add("orbit/weight count != 2");
  long long dim = adlv_dimension(g, mu, inv);
  if (table.max_dim != 1 || dim != 1) f.add("max dim != adlv_dimension = 1");
  r.pass = f.ok();
  r.details = f.str("3 cells, dims {0,1,1}, top 2 = counts, dim 1");
  return r;
}

// ---- criterion 6: lambda properties ----------------------------------------

// weakly decreasing Newton points of GL_n assembled from slope blocks with
// denominators <= q_max and slopes in [0, slope_max]
std::vector<FactorInvariants> newton_family(int n, int q_max, int slope_max) {
  std::vector<Rat> slopes;
  for (int q = 1; q <= q_max; ++q)
    for (int p = 0; p <= slope_max * q; ++p)
      if (std::gcd(p, q) == 1) slopes.push_back(Rat(p, q));
  std::sort(slopes.begin(), slopes.end(), std::greater<>());
  slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());

  std::vector<FactorInvariants> out;
  std::vector<Rat> cur;
  std::function<void(size_t, int)> rec = [&](size_t si, int left) {
    if (left == 0) {
      Rat total = std::accumulate(cur.begin(), cur.end(), Rat(0));
      if (total.denominator() == 1) out.push_back({cur, total.numerator()});
      return;
    }
    for (size_t i = si; i < slopes.size(); ++i) {
      long long q = slopes[i].denominator();
      for (long long rep = 1; rep * q <= left; ++rep) {
        for (long long k = 0; k < rep * q; ++k) cur.push_back(slopes[i]);
        rec(i + 1, left - static_cast<int>(rep * q));
        cur.resize(cur.size() - static_cast<size_t>(rep * q));
      }
    }
  };
  rec(0, n);
  return out;
}

CriterionResult criterion_6() {
  CriterionResult r{6, "lambda window, floor, maximality, functoriality", false, ""};
  Failure f;
  long long checked = 0;

  // central data over the (m, n, d) grid
  for (const auto& gc : verification_grid()) {
    GroupDatum g({{gc.n, gc.d}});
    SigmaInvariants inv{{{std::vector<Rat>(gc.n, Rat(gc.m, 1LL * gc.n * gc.d)), gc.m}}};
    auto lambda = lambda_from_invariants(g, inv);
    ++checked;
    if (!check_lambda_window(lambda, g, inv)) f.add("window failed on grid");
    if (!functoriality_check(g, inv, FunctorialityMode::levi)) f.add("levi functoriality (grid)");
    if (!functoriality_check(g, inv, FunctorialityMode::central_quotient))
      f.add("central functoriality (grid)");
  }

  // floor formula vs general construction
  for (int n = 1; n <= 9; ++n)
    for (long long m = 0; m <= 30; ++m) {
      if (std::gcd(m, static_cast<long long>(n)) != 1) continue;
      auto floor_v = lambda_superbasic_floor(m, n);
      for (int d : {1, 2}) {
        GroupDatum g({{n, d}});
        SigmaInvariants inv{{{std::vector<Rat>(n, Rat(m, 1LL * n * d)), m}}};
        ++checked;
        if (lambda_from_invariants(g, inv)[0] != floor_v)
          f.add("floor formula disagrees at m=" + std::to_string(m) +
                " n=" + std::to_string(n));
      }
    }

  // mixed-slope family, window + maximality + functoriality, n <= 4
  for (int n = 2; n <= 4; ++n) {
    GroupDatum g({{n, 1}});
    for (const auto& fac : newton_family(n, n, 2)) {
      SigmaInvariants inv{{fac}};
      auto lambda = lambda_from_invariants(g, inv);
      ++checked;
      if (!check_lambda_window(lambda, g, inv)) f.add("window failed (mixed)");
      if (!functoriality_check(g, inv, FunctorialityMode::levi)) f.add("levi functoriality");
      if (!functoriality_check(g, inv, FunctorialityMode::central_quotient))
        f.add("central functoriality");

      // maximality: every integral vector below nu with the right total has
      // partial sums dominated by lambda's
      long long lo = *std::min_element(lambda[0].begin(), lambda[0].end()) - 2;
      long long hi = *std::max_element(lambda[0].begin(), lambda[0].end()) + 2;
      std::vector<long long> cand(n, lo);
      bool done = false;
      while (!done) {
        if (std::accumulate(cand.begin(), cand.end(), 0LL) == fac.kappa) {
          std::vector<Rat> cand_q(cand.begin(), cand.end());
          if (dominance_leq(cand_q, fac.nu)) {
            long long pl = 0, pc = 0;
            for (int i = 0; i < n; ++i) {
              pl += lambda[0][i];
              pc += cand[i];
              if (pc > pl) {
                f.add("maximality failed against " + vec_str(cand));
                break;
              }
            }
          }
        }
        int i = 0;
        while (i < n && cand[i] == hi) cand[i++] = lo;
        if (i == n) done = true; else ++cand[i];
      }
    }
  }

  r.pass = f.ok();
  std::ostringstream ok;
  ok << checked << " invariant records checked, zero violations";
  r.details = f.str(ok.str());
  return r;
}

// ---- criterion 7: affine Weyl ----------------------------------------------

CriterionResult criterion_7() {
  CriterionResult r{7, "affine Weyl length oracle and straight elements", false, ""};
  Failure f;
  long long checked = 0;

  for (int n : {2, 3}) {
    LengthOracle oracle(n, 6);
    for (const auto& [elt, dist] : oracle.table()) {
      ++checked;
      if (length(elt) != dist) f.add("length formula vs BFS mismatch");
      // length must be invariant under the basic part on either side
      for (long long p : {-2LL, 1LL, 2LL}) {
        auto omega = omega_element(n, p);
        if (length(compose(elt, omega)) != dist || length(compose(omega, elt)) != dist)
          f.add("length not invariant under Omega");
      }
    }

    // straightness decision procedures agree on an exhaustive box
    std::vector<std::vector<int>> perms;
    {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<long long> tr(n, -3);
    bool done = false;
    while (!done) {
      for (const auto& p : perms) {
        ++checked;
        try {
          AffineWeylElt x(n, tr, p);
          is_straight(x);  // throws logic_error if the two criteria disagree
          if (is_basic(x) && !is_straight(x)) f.add("basic element not straight");
        } catch (const std::logic_error&) {
          f.add("straightness criteria disagree");
        }
      }
      int i = 0;
      while (i < n && tr[i] == 3) tr[i++] = -3;
      if (i == n) done = true; else ++tr[i];
    }

    // translation projection of the straight element vs lambda
    for (const auto& fac : newton_family(n, 3, 2)) {
      ++checked;
      if (!verify_prop_lambda(n, fac))
        f.add("straight translation != lambda (dominant reps)");
    }
  }

  r.pass = f.ok();
  std::ostringstream ok;
  ok << checked << " elements checked, zero violations";
  r.details = f.str(ok.str());
  return r;
}

// ---- criterion 8: counting -------------------------------------------------

CriterionResult criterion_8() {
  CriterionResult r{8, "orbit counts, weight oracle, Levi identity", false, ""};
  Failure f;
  long long checked = 0;

  // split superbasic count is exactly 1, with the lambda vector as witness
  for (const auto& [m, n] : kGridPairs) {
    GroupDatum g({{n, 1}});
    std::vector<long long> mu(n, 0);
    for (long long i = 0; i < m; ++i) mu[i] = 1;
    auto lambda = lambda_superbasic_floor(m, n);
    auto res = orbit_intersection_count(g, {{mu}}, {lambda}, {m});
    ++checked;
    if (res.count != 1 || res.witnesses.size() != 1 || res.witnesses[0][0][0] != lambda)
      f.add("split count != 1 at m=" + std::to_string(m) + " n=" + std::to_string(n));
  }

  // orbit count equals the exterior-power weight multiplicity on every weight
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      GroupDatum g({{n, d}});
      GroupFactor factor{n, d};
      std::vector<long long> ks(d, 0);
      bool done = false;
      while (!done) {
        if (std::is_sorted(ks.begin(), ks.end())) {  // copy order is symmetric
          Cochar mu(d);
          for (int tau = 0; tau < d; ++tau) {
            mu[tau].assign(n, 0);
            for (long long i = 0; i < ks[tau]; ++i) mu[tau][i] = 1;
          }
          for (const auto& [target, mult] : weight_distribution(factor, mu)) {
            ++checked;
            auto res = orbit_intersection_count(
                g, {mu}, {target},
                {std::accumulate(target.begin(), target.end(), 0LL)}, 1);
            if (res.count != mult) f.add("orbit count != weight multiplicity");
          }
        }
        int i = 0;
        while (i < d && ks[i] == n) ks[i++] = 0;
        if (i == d) done = true; else ++ks[i];
      }
    }

  // Levi identity on the GL_4 mixed-slope family
  {
    GroupDatum g({{4, 1}});
    for (const auto& fac : newton_family(4, 4, 2)) {
      for (int k = 0; k <= 4; ++k) {
        if (fac.kappa != k) continue;
        std::vector<long long> mu(4, 0);
        for (int i = 0; i < k; ++i) mu[i] = 1;
        std::vector<Rat> mu_q(mu.begin(), mu.end());
        if (!dominance_leq(fac.nu, mu_q)) continue;
        ++checked;
        auto [direct, via] = orbit_count_via_levi(g, {{mu}}, SigmaInvariants{{fac}});
        if (direct != via) f.add("direct != via-Levi count");
      }
    }
    // the pinned mixed-slope example
    SigmaInvariants inv{{{{Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3)}, 2}}};
    auto [direct, via] = orbit_count_via_levi(g, {{{1, 1, 0, 0}}}, inv);
    ++checked;
    if (direct != 1 || via != 1) f.add("GL_4 pinned example != (1,1)");
  }

  // superbasic top-cell match over the grid
  for (const auto& gc : verification_grid()) {
    if (gc.m > gc.n) continue;  // minuscule Hodge points only
    FSpec spec(gc.n, gc.d, gc.m_vec);
    for (long long mt : gc.m_vec)
      if (mt > gc.n) goto next_case;
    {
      std::vector<std::vector<long long>> rows(gc.d);
      for (int t = 0; t < gc.d; ++t) {
        rows[t].assign(gc.n, 0);
        for (long long i = 0; i < gc.m_vec[t]; ++i) rows[t][i] = 1;
      }
      TypeVector hodge(gc.n, gc.d, rows);
      auto lambda = lambda_superbasic_floor(gc.m, gc.n);
      auto table = cell_table(spec, hodge, lambda);
      GroupDatum g({{gc.n, gc.d}});
      auto res = orbit_intersection_count(g, {hodge.rows}, {lambda}, {gc.m});
      ++checked;
      if (res.count != static_cast<unsigned long long>(table.top_count))
        f.add("top cells != orbit count at n=" + std::to_string(gc.n) +
              " m_vec=" + vec_str(gc.m_vec));
    }
  next_case:;
  }

  r.pass = f.ok();
  std::ostringstream ok;
  ok << checked << " counts compared, zero violations";
  r.details = f.str(ok.str());
  return r;
}

}  // namespace

std::vector<GridCase> verification_grid() {
  std::vector<GridCase> out;
  for (const auto& [m, n] : kGridPairs)
    for (int d = 1; d <= 3; ++d)
      for (auto& mv : compositions(m, d)) out.push_back({m, n, d, mv});
  return out;
}

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion_1();
    case 2: return criterion_2();
    case 3: return criterion_3();
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    default: throw Error("unknown criterion id " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_all_criteria() {
  int threads = 1;
  if (const char* env = std::getenv("ADLV_THREADS")) {
    threads = std::max(1, std::atoi(env));
  }
  const int kCount = 8;
  std::vector<CriterionResult> results(kCount);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < kCount; i = next.fetch_add(1))
      results[i] = run_criterion(i + 1);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min(threads, kCount); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

}  // namespace adlv
