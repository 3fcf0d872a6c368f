#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "adlv/errors.hpp"
#include "adlv/words.hpp"

namespace adlv {

// Parameters of the shift map f on d copies of Z: f(a_(t)) = a_(t+1) + m_vec[t],
// together with the modulus n. Superbasic: gcd(sum m_vec, n) = 1.
struct FSpec {
  int n = 1;
  int d = 1;
  std::vector<long long> m_vec;  // size d, entries >= 0

  FSpec() = default;
  FSpec(int n_, int d_, std::vector<long long> m_vec_);
  long long m() const;
  bool operator==(const FSpec&) const = default;
};

// Element of (Z_{>=0}^n)^d; row t corresponds to the flat walk indices j with
// (j-1) % d == t (1-based j). restriction() sums the rows.
struct TypeVector {
  int n = 0;
  int d = 1;
  std::vector<std::vector<long long>> rows;  // [d][n]

  TypeVector() = default;
  TypeVector(int n_, int d_, std::vector<std::vector<long long>> rows_);
  static TypeVector zero(int n, int d);

  long long flat(int j) const { return rows[j % d][j / d]; }         // 0-based j
  void set_flat(int j, long long v) { rows[j % d][j / d] = v; }
  std::vector<long long> flattened() const;  // row-major, used for lex order
  std::vector<long long> restriction() const;
  long long total() const;
  TypeVector dominant() const;      // rows sorted weakly decreasing
  TypeVector antidominant() const;  // rows sorted weakly increasing

  bool operator==(const TypeVector&) const = default;
  bool operator<(const TypeVector& o) const { return flattened() < o.flattened(); }
};

// EL-chart over Z^(d), encoded by the minimal element of each residue class in
// each component; A_(t) = { minima[t][r] + k*n : k >= 0, r } by f- and
// (+n)-stability.
struct ElChart {
  FSpec spec;
  std::vector<std::vector<long long>> minima;  // [d][n], minima[t][r] == r mod n

  ElChart() = default;
  ElChart(FSpec spec_, std::vector<std::vector<long long>> minima_);

  bool contains(int t, long long x) const;
  // B_(t) = A_(t) \ (A_(t)+n), i.e. the stored minima.
  const std::vector<long long>& generators(int t) const { return minima[t]; }
  bool is_normalized() const;
  ElChart normalized() const;

  bool operator==(const ElChart&) const = default;
};

// Generator walk b_0, ..., b_{nd-1}; the walk closes up, b_{nd} = b_0.
struct ChartWalk {
  std::vector<long long> b;      // b_0..b_{nd-1}, each generator once
  std::vector<long long> mu;     // mu[i] = entry of the step leaving b_i
  std::vector<int> component;    // component of b_i, i.e. i % d
};

// Type of a chart together with the generator walk.
std::pair<TypeVector, ChartWalk> chart_type(const ElChart& chart);

// Generators per component sorted decreasingly, reading off the walk's type
// entries.
TypeVector chart_cotype(const ElChart& chart);

// Membership in P_{m,n,d}: non-negative entries whose restriction is dominated
// by (m/n, ..., m/n).
bool is_type(const TypeVector& t, const FSpec& spec);

// Normalized chart with the given type. Throws NotAType.
ElChart chart_from_type(const TypeVector& t, const FSpec& spec);

// The word (m_t - mu'_k * n)_k of a type; levels of this word are the
// un-normalized generator walk.
MultiWord type_word(const TypeVector& t, const FSpec& spec);

// The sweep-map route to the cotype. Throws NotAType.
TypeVector zeta(const TypeVector& t, const FSpec& spec);

// All of P_{m,n,d}, or P_mu when a Hodge point is given, in lexicographic
// order of the row-major flattening.
std::vector<TypeVector> enumerate_P(const FSpec& spec,
                                    const std::optional<TypeVector>& hodge = std::nullopt);

// d(mu~) = sum of the integer partial sums of cotype|_S - mu_adom|_S.
long long cell_dimension(const TypeVector& cotype, const TypeVector& hodge,
                         const FSpec& spec);

// #V_A, counted from the generator walk; agrees with
// cell_dimension(chart_cotype(chart), ...) for every chart.
long long cell_count_VA(const ElChart& chart);

// A+n subset of f(A), equivalently all type entries in {0,1}.
bool is_small(const ElChart& chart);

struct CellRecord {
  TypeVector type;
  TypeVector cotype;
  ElChart chart;
  long long dim = 0;
  bool top = false;
};

struct CellTable {
  std::vector<CellRecord> records;
  std::vector<long long> poincare;  // poincare[i] = #cells of dimension i
  long long top_count = 0;
  long long max_dim = 0;
};

// Cell table of the superbasic variety with minuscule Hodge point `hodge`;
// `lambda` is the restriction of the lambda invariant (length n, total m).
// Throws LambdaMismatch on a bad lambda.
CellTable cell_table(const FSpec& spec, const TypeVector& hodge,
                     const std::vector<long long>& lambda);

}  // namespace adlv
