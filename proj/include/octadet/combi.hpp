#ifndef OCTADET_COMBI_HPP
#define OCTADET_COMBI_HPP

#include <compare>
#include <vector>

#include "octadet/ring.hpp"

namespace octadet {

/// A subset of [n] = {1, ..., n}, stored as a strictly increasing
/// list of 1-based members.
struct Subset {
  int ambient = 0;
  std::vector<int> members;

  Subset() = default;
  Subset(int n, std::vector<int> m);

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int i) const;

  auto operator<=>(const Subset&) const = default;
};

Subset empty_subset(int n);
Subset full_set(int n);
Subset complement(const Subset& s);

/// Symmetric difference (S u T) \ (S n T); ambients must match.
Subset sym_diff(const Subset& s, const Subset& t);

/// Parity of the l1 norm sum_{s in S} s.
Parity l1_parity(const Subset& s);

/// The induced set T(R) = { R_t : t in T }, R read in increasing order.
Subset induced_set(const Subset& t, const Subset& r);

/// All C(n,k) subsets in lexicographic order of member lists.
/// k > n yields an empty list.
std::vector<Subset> subsets_of_size(int n, int k);

/// All 2^n subsets, sorted lexicographically by member list.
std::vector<Subset> all_subsets(int n);

struct Permutation {
  std::vector<int> image;  // 1-based; image[i-1] = sigma(i)
  Parity parity = Parity::Even;

  int n() const { return static_cast<int>(image.size()); }
  int apply(int i) const { return image[i - 1]; }
  Permutation inverse() const;
};

Permutation identity_perm(int n);
Permutation perm_from_image(std::vector<int> image);

/// Transposition-count parity, recomputed from scratch.
Parity parity_of(const std::vector<int>& image);

/// Composition convention: (s*t)(i) = t(s(i)), so P_{s*t} = P_s P_t.
Permutation compose(const Permutation& s, const Permutation& t);

/// Image set {sigma(i) : i in s}, re-sorted.
Subset apply(const Permutation& sigma, const Subset& s);

/// All n! permutations in lexicographic image order; guard n <= 8.
std::vector<Permutation> all_permutations(int n);

}  // namespace octadet

#endif
