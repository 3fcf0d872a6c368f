#include "adlv/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace adlv {

MultiWord::MultiWord(int d_, int n_, std::vector<long long> letters_)
    : d(d_), n(n_), letters(std::move(letters_)) {
  if (d < 1 || n < 1) throw SizeMismatch("MultiWord requires d >= 1 and n >= 1");
  if (static_cast<int>(letters.size()) != n * d)
    throw SizeMismatch("MultiWord letter count must be n*d");
}

std::vector<long long> MultiWord::component(int t) const {
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = letters[t + i * d];
  return out;
}

MultiWord MultiWord::from_components(int d, int n,
                                     const std::vector<std::vector<long long>>& comps) {
  if (static_cast<int>(comps.size()) != d)
    throw SizeMismatch("expected one subword per component");
  std::vector<long long> flat(static_cast<size_t>(n) * d);
  for (int t = 0; t < d; ++t) {
    if (static_cast<int>(comps[t].size()) != n)
      throw SizeMismatch("component subword has wrong length");
    for (int i = 0; i < n; ++i) flat[t + i * d] = comps[t][i];
  }
  return MultiWord(d, n, std::move(flat));
}

Alphabet::Alphabet(int d_, int n_, std::vector<std::vector<long long>> multisets_)
    : d(d_), n(n_), multisets(std::move(multisets_)) {
  if (static_cast<int>(multisets.size()) != d)
    throw SizeMismatch("Alphabet requires one multiset per component");
  for (auto& ms : multisets) {
    if (static_cast<int>(ms.size()) != n)
      throw SizeMismatch("Alphabet multiset must have n letters");
    std::sort(ms.begin(), ms.end());
  }
}

Alphabet Alphabet::of(const MultiWord& w) {
  std::vector<std::vector<long long>> ms(w.d);
  for (int t = 0; t < w.d; ++t) ms[t] = w.component(t);
  return Alphabet(w.d, w.n, std::move(ms));
}

bool Alphabet::contains(const MultiWord& w) const {
  if (w.d != d || w.n != n) return false;
  for (int t = 0; t < d; ++t) {
    auto sub = w.component(t);
    std::sort(sub.begin(), sub.end());
    if (sub != multisets[t]) return false;
  }
  return true;
}

long long Alphabet::max_abs_letter() const {
  long long m = 0;
  for (const auto& ms : multisets)
    for (long long a : ms) m = std::max(m, std::llabs(a));
  return m;
}

unsigned long long Alphabet::class_size() const {
  unsigned long long total = 1;
  for (const auto& ms : multisets) {
    // multinomial n! / prod(mult_i!) computed incrementally
    unsigned long long cnt = 1;
    for (int i = 1; i <= n; ++i) cnt = cnt * i;
    size_t i = 0;
    while (i < ms.size()) {
      size_t j = i;
      while (j < ms.size() && ms[j] == ms[i]) ++j;
      for (size_t k = 2; k <= j - i; ++k) cnt /= k;
      i = j;
    }
    total *= cnt;
  }
  return total;
}

std::vector<long long> levels(const MultiWord& w) {
  std::vector<long long> out(w.letters.size());
  long long acc = 0;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    acc += w.letters[k];
    out[k] = acc;
  }
  return out;
}

bool is_dyck(const MultiWord& w) {
  auto lvl = levels(w);
  for (size_t k = w.d - 1; k < lvl.size(); k += w.d)
    if (lvl[k] < 0) return false;
  return true;
}

namespace {

// Scan-order key for the classical sweep: levels -1,-2,... first, then the
// positive range descending to 0. Smaller key = scanned earlier.
std::pair<int, long long> alw_key(long long level) {
  if (level < 0) return {0, -level};
  return {1, -level};
}

}  // namespace

namespace {

// Classical sweep of a single-component word: scan levels -1 down to the
// minimum, then the maximum down to 0, reading right to left.
std::vector<long long> classical_sweep(const std::vector<long long>& letters) {
  std::vector<long long> lvl(letters.size());
  long long acc = 0;
  for (size_t k = 0; k < letters.size(); ++k) lvl[k] = (acc += letters[k]);
  std::vector<int> idx(letters.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (lvl[a] != lvl[b]) return alw_key(lvl[a]) < alw_key(lvl[b]);
    return a > b;  // ties are read right-to-left
  });
  std::vector<long long> out;
  out.reserve(letters.size());
  for (int k : idx) out.push_back(letters[k]);
  return out;
}

}  // namespace

MultiWord sweep_multi(const MultiWord& w) {
  if (w.d == 1) return MultiWord(1, w.n, classical_sweep(w.letters));

  // For d >= 2 the scan runs per component, in the order induced by the +N
  // embedding: components 0..d-2 sit in disjoint positive level bands, so
  // their letters are read by level descending; component d-1 keeps its
  // original levels and is read in the classical order. On Dyck words this
  // map is injective (hence a bijection of the finite Dyck subset of each
  // rearrangement class); off the Dyck subset the band argument breaks down
  // and the per-component scan collides, so the map is extended by the
  // identity there. The result is a bijection of every rearrangement class
  // that preserves Dyck words.
  if (!is_dyck(w)) return w;

  auto lvl = levels(w);
  std::vector<std::vector<long long>> comps(w.d);
  for (int t = 0; t < w.d; ++t) {
    std::vector<int> idx;
    idx.reserve(w.n);
    for (int i = 0; i < w.n; ++i) idx.push_back(t + i * w.d);
    const bool residue_zero = (t == w.d - 1);  // 1-based positions divisible by d
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (lvl[a] != lvl[b]) {
        if (residue_zero) return alw_key(lvl[a]) < alw_key(lvl[b]);
        return lvl[a] > lvl[b];
      }
      return a > b;  // ties are read right-to-left
    });
    auto& sub = comps[t];
    sub.reserve(w.n);
    for (int k : idx) sub.push_back(w.letters[k]);
  }
  return MultiWord::from_components(w.d, w.n, comps);
}

void for_each_in_class(const Alphabet& alphabet,
                       const std::function<void(const MultiWord&)>& fn) {
  std::vector<std::vector<long long>> perms = alphabet.multisets;  // sorted = lex min
  std::function<void(int)> rec = [&](int t) {
    if (t == alphabet.d) {
      fn(MultiWord::from_components(alphabet.d, alphabet.n, perms));
      return;
    }
    auto& cur = perms[t];
    std::sort(cur.begin(), cur.end());
    do {
      rec(t + 1);
    } while (std::next_permutation(cur.begin(), cur.end()));
  };
  rec(0);
}

std::vector<MultiWord> enumerate_class(const Alphabet& alphabet) {
  std::vector<MultiWord> out;
  out.reserve(alphabet.class_size());
  for_each_in_class(alphabet, [&](const MultiWord& w) { out.push_back(w); });
  return out;
}

SweepInverter::SweepInverter(const Alphabet& alphabet) : alphabet_(alphabet) {
  table_.reserve(alphabet.class_size());
  for_each_in_class(alphabet, [&](const MultiWord& w) {
    table_.emplace_back(sweep_multi(w).letters, w);
  });
  std::sort(table_.begin(), table_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

MultiWord SweepInverter::invert(const MultiWord& w) const {
  auto it = std::lower_bound(
      table_.begin(), table_.end(), w.letters,
      [](const auto& entry, const std::vector<long long>& key) { return entry.first < key; });
  if (it == table_.end() || it->first != w.letters)
    throw NotInImage("word has no sweep preimage in the given rearrangement class");
  return it->second;
}

MultiWord sweep_inverse(const MultiWord& w, const Alphabet& alphabet) {
  if (!alphabet.contains(w))
    throw NotInImage("word does not belong to the given alphabet");
  return SweepInverter(alphabet).invert(w);
}

long long default_embedding_shift(const Alphabet& alphabet) {
  // |l(w)_k| <= n*d*max|letter| for every class member, so this dominates the
  // level spread required by the separation inequalities.
  return 1 + 2LL * alphabet.n * alphabet.d * alphabet.max_abs_letter();
}

MultiWord embed_plus_N(const MultiWord& w, long long N) {
  const int d = w.d;
  if (d > 1) {
    auto lvl = levels(w);
    constexpr long long kInf = std::numeric_limits<long long>::max();
    std::vector<long long> lo(d, kInf), hi(d, -kInf);
    for (size_t k = 0; k < lvl.size(); ++k) {
      int t = static_cast<int>(k) % d;
      lo[t] = std::min(lo[t], lvl[k]);
      hi[t] = std::max(hi[t], lvl[k]);
    }
    // separation: component t sits above component t-1 (component d-1 lowest)
    for (int t = 0; t < d - 1; ++t) {
      long long below = (t == 0) ? hi[d - 1] : hi[t - 1];
      if (!(lo[t] + N > below))
        throw BadN("embedding shift too small: components not separated");
      if (lo[t] + static_cast<long long>(t + 1) * N < 0)
        throw BadN("embedding shift too small: embedded levels negative");
    }
  }
  std::vector<long long> out = w.letters;
  for (size_t k = 0; k < out.size(); ++k) {
    int t = static_cast<int>(k) % d;
    if (t == d - 1)
      out[k] -= N * (d - 1);
    else
      out[k] += N;
  }
  return MultiWord(1, w.n * d, std::move(out));
}

}  // namespace adlv
