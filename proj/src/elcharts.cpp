#include "adlv/elcharts.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace adlv {

namespace {

long long mod_n(long long x, int n) {
  long long r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

FSpec::FSpec(int n_, int d_, std::vector<long long> m_vec_)
    : n(n_), d(d_), m_vec(std::move(m_vec_)) {
  if (n < 1 || d < 1) throw SizeMismatch("FSpec requires n >= 1 and d >= 1");
  if (static_cast<int>(m_vec.size()) != d)
    throw SizeMismatch("FSpec requires one shift per component");
  for (long long mt : m_vec)
    if (mt < 0) throw SizeMismatch("FSpec shifts must be non-negative");
  if (std::gcd(m(), static_cast<long long>(n)) != 1)
    throw NotCoprime("gcd(m, n) must be 1");
}

long long FSpec::m() const {
  return std::accumulate(m_vec.begin(), m_vec.end(), 0LL);
}

TypeVector::TypeVector(int n_, int d_, std::vector<std::vector<long long>> rows_)
    : n(n_), d(d_), rows(std::move(rows_)) {
  if (static_cast<int>(rows.size()) != d)
    throw SizeMismatch("TypeVector requires d rows");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw SizeMismatch("TypeVector rows must have length n");
}

TypeVector TypeVector::zero(int n, int d) {
  return TypeVector(n, d, std::vector<std::vector<long long>>(d, std::vector<long long>(n, 0)));
}

std::vector<long long> TypeVector::flattened() const {
  std::vector<long long> out;
  out.reserve(static_cast<size_t>(n) * d);
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<long long> TypeVector::restriction() const {
  std::vector<long long> out(n, 0);
  for (const auto& row : rows)
    for (int i = 0; i < n; ++i) out[i] += row[i];
  return out;
}

long long TypeVector::total() const {
  long long s = 0;
  for (const auto& row : rows) s = std::accumulate(row.begin(), row.end(), s);
  return s;
}

TypeVector TypeVector::dominant() const {
  TypeVector out = *this;
  for (auto& row : out.rows) std::sort(row.begin(), row.end(), std::greater<>());
  return out;
}

TypeVector TypeVector::antidominant() const {
  TypeVector out = *this;
  for (auto& row : out.rows) std::sort(row.begin(), row.end());
  return out;
}

ElChart::ElChart(FSpec spec_, std::vector<std::vector<long long>> minima_)
    : spec(std::move(spec_)), minima(std::move(minima_)) {
  if (static_cast<int>(minima.size()) != spec.d)
    throw SizeMismatch("chart needs one minima row per component");
  const int n = spec.n;
  for (int t = 0; t < spec.d; ++t) {
    if (static_cast<int>(minima[t].size()) != n)
      throw SizeMismatch("chart minima rows must have length n");
    for (int r = 0; r < n; ++r)
      if (mod_n(minima[t][r], n) != r)
        throw CorruptChart("minima[t][r] must be congruent to r mod n");
  }
  // stability under the shift map: f(A_(t)) must land in A_(t+1)
  for (int t = 0; t < spec.d; ++t) {
    int u = (t + 1) % spec.d;
    for (int r = 0; r < n; ++r) {
      long long img = minima[t][r] + spec.m_vec[t];
      if (img < minima[u][mod_n(img, n)])
        throw CorruptChart("chart is not stable under the shift map");
    }
  }
}

bool ElChart::contains(int t, long long x) const {
  return x >= minima[t][mod_n(x, spec.n)];
}

bool ElChart::is_normalized() const {
  long long s = std::accumulate(minima[0].begin(), minima[0].end(), 0LL);
  return s == static_cast<long long>(spec.n) * (spec.n - 1) / 2;
}

ElChart ElChart::normalized() const {
  const int n = spec.n;
  long long s = std::accumulate(minima[0].begin(), minima[0].end(), 0LL);
  long long z = (static_cast<long long>(n) * (n - 1) / 2 - s) / n;
  if (z * n != static_cast<long long>(n) * (n - 1) / 2 - s)
    throw CorruptChart("component 0 generators are not a full residue system");
  std::vector<std::vector<long long>> out(spec.d, std::vector<long long>(n));
  for (int t = 0; t < spec.d; ++t)
    for (int r = 0; r < n; ++r) {
      long long v = minima[t][r] + z;
      out[t][mod_n(v, n)] = v;
    }
  return ElChart(spec, std::move(out));
}

std::pair<TypeVector, ChartWalk> chart_type(const ElChart& chart) {
  const int n = chart.spec.n;
  const int d = chart.spec.d;
  const int len = n * d;
  ChartWalk walk;
  walk.b.reserve(len);
  walk.mu.reserve(len);
  walk.component.reserve(len);
  TypeVector type = TypeVector::zero(n, d);

  long long b = *std::min_element(chart.minima[0].begin(), chart.minima[0].end());
  for (int i = 0; i < len; ++i) {
    int t = i % d;
    int u = (i + 1) % d;
    long long img = b + chart.spec.m_vec[t];
    long long next = chart.minima[u][mod_n(img, n)];
    long long mu = (img - next) / n;
    if (mu < 0 || img - next != mu * n)
      throw CorruptChart("generator walk left the chart");
    walk.b.push_back(b);
    walk.mu.push_back(mu);
    walk.component.push_back(t);
    type.set_flat(i, mu);  // step i+1 -> row i % d, column i / d
    b = next;
  }
  if (b != walk.b[0]) throw CorruptChart("generator walk does not close");
  return {std::move(type), std::move(walk)};
}

TypeVector chart_cotype(const ElChart& chart) {
  const int n = chart.spec.n;
  const int d = chart.spec.d;
  auto [type, walk] = chart_type(chart);
  (void)type;
  TypeVector cotype = TypeVector::zero(n, d);
  const int nd = n * d;
  for (int c = 0; c < d; ++c) {
    // generators of component c, sorted decreasingly, each carrying the entry
    // of the step that arrives at it
    std::vector<std::pair<long long, long long>> gens;
    gens.reserve(n);
    for (int i = c; i < nd; i += d)
      gens.emplace_back(walk.b[i], walk.mu[(i + nd - 1) % nd]);
    std::sort(gens.begin(), gens.end(), std::greater<>());
    int row = (c + d - 1) % d;
    for (int i = 0; i < n; ++i) cotype.rows[row][i] = gens[i].second;
  }
  return cotype;
}

bool is_type(const TypeVector& t, const FSpec& spec) {
  if (t.n != spec.n || t.d != spec.d) return false;
  for (const auto& row : t.rows)
    for (long long v : row)
      if (v < 0) return false;
  auto r = t.restriction();
  long long partial = 0;
  for (int k = 0; k < spec.n - 1; ++k) {
    partial += r[k];
    if (partial * spec.n > static_cast<long long>(k + 1) * spec.m()) return false;
  }
  return t.total() == spec.m();
}

ElChart chart_from_type(const TypeVector& t, const FSpec& spec) {
  if (!is_type(t, spec)) throw NotAType("vector is not a type for this datum");
  const int n = spec.n;
  const int d = spec.d;
  std::vector<std::vector<long long>> minima(d, std::vector<long long>(n));
  std::vector<std::vector<bool>> seen(d, std::vector<bool>(n, false));
  long long b = 0;
  for (int i = 0; i < n * d; ++i) {
    int c = i % d;
    int r = static_cast<int>(mod_n(b, n));
    if (seen[c][r]) throw CorruptChart("walk revisits a residue class");
    seen[c][r] = true;
    minima[c][r] = b;
    b += spec.m_vec[c] - t.flat(i) * n;
  }
  if (b != 0) throw CorruptChart("walk does not close");
  return ElChart(spec, std::move(minima)).normalized();
}

MultiWord type_word(const TypeVector& t, const FSpec& spec) {
  const int len = spec.n * spec.d;
  std::vector<long long> letters(len);
  for (int k = 0; k < len; ++k)
    letters[k] = spec.m_vec[k % spec.d] - t.flat(k) * spec.n;
  return MultiWord(spec.d, spec.n, std::move(letters));
}

TypeVector zeta(const TypeVector& t, const FSpec& spec) {
  if (!is_type(t, spec)) throw NotAType("vector is not a type for this datum");
  MultiWord swept = sweep_multi(type_word(t, spec));
  TypeVector out = TypeVector::zero(spec.n, spec.d);
  for (int k = 0; k < spec.n * spec.d; ++k) {
    long long num = spec.m_vec[k % spec.d] - swept.letters[k];
    if (num % spec.n != 0)
      throw NotAType("swept word does not encode a type");
    out.set_flat(k, num / spec.n);
  }
  return out;
}

std::vector<TypeVector> enumerate_P(const FSpec& spec,
                                    const std::optional<TypeVector>& hodge) {
  const int n = spec.n;
  const int d = spec.d;
  const long long m = spec.m();
  std::vector<TypeVector> out;

  if (hodge) {
    if (hodge->n != n || hodge->d != d)
      throw SizeMismatch("Hodge point has wrong shape");
    // all row-wise rearrangements of the Hodge point that are types
    std::vector<std::vector<long long>> rows(d);
    for (int t = 0; t < d; ++t) {
      rows[t] = hodge->rows[t];
      std::sort(rows[t].begin(), rows[t].end());
    }
    std::function<void(int)> rec = [&](int t) {
      if (t == d) {
        TypeVector cand(n, d, rows);
        if (is_type(cand, spec)) out.push_back(cand);
        return;
      }
      std::sort(rows[t].begin(), rows[t].end());
      do {
        rec(t + 1);
      } while (std::next_permutation(rows[t].begin(), rows[t].end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  // column-major search with the running partial-sum bound
  TypeVector cur = TypeVector::zero(n, d);
  std::function<void(int, int, long long)> rec = [&](int col, int row, long long used) {
    if (col == n) {
      if (used == m) out.push_back(cur);
      return;
    }
    if (row == d) {
      // n * (r_0 + ... + r_col) <= (col+1) * m, with equality forced at the end
      if (static_cast<long long>(n) * used > static_cast<long long>(col + 1) * m) return;
      rec(col + 1, 0, used);
      return;
    }
    for (long long v = 0; used + v <= m; ++v) {
      cur.rows[row][col] = v;
      rec(col, row + 1, used + v);
    }
    cur.rows[row][col] = 0;
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long cell_dimension(const TypeVector& cotype, const TypeVector& hodge,
                         const FSpec& spec) {
  if (cotype.n != spec.n || cotype.d != spec.d || hodge.n != spec.n || hodge.d != spec.d)
    throw SizeMismatch("shape mismatch in cell_dimension");
  auto r = cotype.restriction();
  auto h = hodge.antidominant().restriction();
  long long dim = 0, partial = 0;
  for (int k = 0; k < spec.n - 1; ++k) {
    partial += r[k] - h[k];
    dim += partial;
  }
  return dim;
}

long long cell_count_VA(const ElChart& chart) {
  auto [type, walk] = chart_type(chart);
  (void)type;
  const int len = chart.spec.n * chart.spec.d;
  const int d = chart.spec.d;
  long long count = 0;
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      if (i % d != j % d) continue;
      if (walk.b[i] < walk.b[j] && walk.mu[i] == walk.mu[j] + 1) ++count;
    }
  return count;
}

bool is_small(const ElChart& chart) {
  auto [type, walk] = chart_type(chart);
  (void)walk;
  for (const auto& row : type.rows)
    for (long long v : row)
      if (v != 0 && v != 1) return false;
  return true;
}

CellTable cell_table(const FSpec& spec, const TypeVector& hodge,
                     const std::vector<long long>& lambda) {
  for (const auto& row : hodge.rows)
    for (long long v : row)
      if (v != 0 && v != 1)
        throw NotMinuscule("Hodge point must have entries in {0,1}");
  if (static_cast<int>(lambda.size()) != spec.n)
    throw LambdaMismatch("lambda must have length n");
  std::vector<long long> expected(spec.n);
  for (int i = 1; i <= spec.n; ++i)
    expected[i - 1] = (static_cast<long long>(i) * spec.m()) / spec.n -
                      (static_cast<long long>(i - 1) * spec.m()) / spec.n;
  if (lambda != expected)
    throw LambdaMismatch("lambda is not the invariant of this datum");

  CellTable table;
  for (const auto& type : enumerate_P(spec, hodge)) {
    CellRecord rec;
    rec.type = type;
    rec.chart = chart_from_type(type, spec);
    rec.cotype = chart_cotype(rec.chart);
    rec.dim = cell_dimension(rec.cotype, hodge, spec);
    table.records.push_back(std::move(rec));
  }
  for (const auto& rec : table.records) table.max_dim = std::max(table.max_dim, rec.dim);
  table.poincare.assign(static_cast<size_t>(table.max_dim) + 1, 0);
  for (auto& rec : table.records) {
    ++table.poincare[static_cast<size_t>(rec.dim)];
    rec.top = (rec.dim == table.max_dim);
    if (rec.top) ++table.top_count;
  }
  return table;
}

}  // namespace adlv
