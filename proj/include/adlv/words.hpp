#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "adlv/errors.hpp"

namespace adlv {

// Integer word of length n*d with d interleaved components. Flat index k
// (0-based) belongs to component k % d; the component-t subword is
// letters[t], letters[t+d], ..., letters[t+(n-1)*d]. Component d-1 holds the
// flat positions at 1-based indices divisible by d.
struct MultiWord {
  int d = 1;
  int n = 0;
  std::vector<long long> letters;

  MultiWord() = default;
  MultiWord(int d_, int n_, std::vector<long long> letters_);

  std::vector<long long> component(int t) const;
  static MultiWord from_components(int d, int n,
                                   const std::vector<std::vector<long long>>& comps);

  bool operator==(const MultiWord&) const = default;
  bool operator<(const MultiWord& o) const { return letters < o.letters; }
};

// A multiset of n letters per component; a MultiWord belongs to the alphabet
// iff each component subword is a rearrangement of the matching multiset.
struct Alphabet {
  int d = 1;
  int n = 0;
  std::vector<std::vector<long long>> multisets;  // sorted ascending, size n each

  Alphabet() = default;
  Alphabet(int d_, int n_, std::vector<std::vector<long long>> multisets_);
  static Alphabet of(const MultiWord& w);

  bool contains(const MultiWord& w) const;
  long long max_abs_letter() const;
  // Number of words in the rearrangement class (product of multinomials).
  unsigned long long class_size() const;
  bool operator==(const Alphabet&) const = default;
};

// Running partial sums l(w)_k.
std::vector<long long> levels(const MultiWord& w);

// True iff every level at a 1-based index divisible by d is non-negative.
bool is_dyck(const MultiWord& w);

// The d-component sweep map sw^(d). Each component is reordered by level;
// within the residue-0 component the classical scan order (-1 down to the
// minimum, then the maximum down to 0) applies, the other components are
// sorted by level descending. Ties are broken right-to-left. For d = 1 this
// is the classical sweep map.
MultiWord sweep_multi(const MultiWord& w);

// Unique preimage of w under sweep_multi within the rearrangement class of
// `alphabet`. Throws NotInImage if none exists (which would indicate a bug in
// sweep_multi, as the map is bijective on the class).
MultiWord sweep_inverse(const MultiWord& w, const Alphabet& alphabet);

// Precomputed inverse table for one alphabet; use when inverting many words.
class SweepInverter {
 public:
  explicit SweepInverter(const Alphabet& alphabet);
  MultiWord invert(const MultiWord& w) const;

 private:
  Alphabet alphabet_;
  std::vector<std::pair<std::vector<long long>, MultiWord>> table_;  // sorted by image
};

// A shift value for embed_plus_N that satisfies the embedding inequalities on
// every member of the rearrangement class.
long long default_embedding_shift(const Alphabet& alphabet);

// w^{+N}: letters in components 0..d-2 gain +N, letters in component d-1 gain
// -N*(d-1); the result is read as a single-component word. Throws BadN when
// the separation inequalities fail for this word.
MultiWord embed_plus_N(const MultiWord& w, long long N);

// Visits every word of the rearrangement class in lexicographic order.
void for_each_in_class(const Alphabet& alphabet,
                       const std::function<void(const MultiWord&)>& fn);
std::vector<MultiWord> enumerate_class(const Alphabet& alphabet);

}  // namespace adlv
