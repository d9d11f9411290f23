#include "octadet/combi.hpp"

#include <algorithm>
#include <numeric>

namespace octadet {

Subset::Subset(int n, std::vector<int> m) : ambient(n), members(std::move(m)) {
  if (n < 0) throw domain_error("subset: negative ambient");
  for (size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > ambient)
      throw domain_error("subset: member out of [1, n]");
    if (i > 0 && members[i] <= members[i - 1])
      throw domain_error("subset: members must be strictly increasing");
  }
}

bool Subset::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Subset empty_subset(int n) { return Subset(n, {}); }

Subset full_set(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 1);
  return Subset(n, std::move(m));
}

Subset complement(const Subset& s) {
  std::vector<int> m;
  m.reserve(s.ambient - s.size());
  for (int i = 1; i <= s.ambient; ++i)
    if (!s.contains(i)) m.push_back(i);
  return Subset(s.ambient, std::move(m));
}

Subset sym_diff(const Subset& s, const Subset& t) {
  if (s.ambient != t.ambient)
    throw domain_error("sym_diff: ambient mismatch");
  std::vector<int> m;
  std::set_symmetric_difference(s.members.begin(), s.members.end(),
                                t.members.begin(), t.members.end(),
                                std::back_inserter(m));
  return Subset(s.ambient, std::move(m));
}

Parity l1_parity(const Subset& s) {
  long long sum = 0;
  for (int v : s.members) sum += v;
  return sum % 2 == 0 ? Parity::Even : Parity::Odd;
}

Subset induced_set(const Subset& t, const Subset& r) {
  std::vector<int> m;
  m.reserve(t.size());
  for (int idx : t.members) {
    if (idx > r.size())
      throw domain_error("induced_set: index exceeds |R|");
    m.push_back(r.members[idx - 1]);
  }
  return Subset(r.ambient, std::move(m));
}

std::vector<Subset> subsets_of_size(int n, int k) {
  if (n < 0 || k < 0) throw domain_error("subsets_of_size: negative argument");
  std::vector<Subset> out;
  if (k > n) return out;
  std::vector<int> cur(k);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    // advance to the next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  out.reserve(size_t(1) << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> m;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) m.push_back(i);
    out.emplace_back(n, std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.resize(image.size());
  for (int i = 1; i <= n(); ++i) inv.image[image[i - 1] - 1] = i;
  inv.parity = parity;
  return inv;
}

Permutation identity_perm(int n) {
  Permutation p;
  p.image.resize(n);
  std::iota(p.image.begin(), p.image.end(), 1);
  p.parity = Parity::Even;
  return p;
}

Parity parity_of(const std::vector<int>& image) {
  int inversions = 0;
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation perm_from_image(std::vector<int> image) {
  int n = static_cast<int>(image.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : image) {
    if (v < 1 || v > n || seen[v])
      throw domain_error("permutation image is not a bijection of [1, n]");
    seen[v] = 1;
  }
  Permutation p;
  p.parity = parity_of(image);
  p.image = std::move(image);
  return p;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw domain_error("compose: size mismatch");
  Permutation out;
  out.image.resize(s.n());
  for (int i = 1; i <= s.n(); ++i) out.image[i - 1] = t.apply(s.apply(i));
  out.parity = s.parity ^ t.parity;
  return out;
}

Subset apply(const Permutation& sigma, const Subset& s) {
  if (sigma.n() != s.ambient) throw domain_error("apply: ambient mismatch");
  std::vector<int> m;
  m.reserve(s.size());
  for (int i : s.members) m.push_back(sigma.apply(i));
  std::sort(m.begin(), m.end());
  return Subset(s.ambient, std::move(m));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw domain_error("all_permutations: n must be >= 1");
  if (n > 8)
    throw guard_error("all_permutations: n = " + std::to_string(n) +
                      " refused (limit 8)");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.image = image;
    p.parity = parity_of(image);
    out.push_back(std::move(p));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

}  // namespace octadet
