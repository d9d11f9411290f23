#include "octadet/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "octadet/hyperoct.hpp"

namespace octadet {

// ---------------------------------------------------------------- rng

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw domain_error("SplitMix64::below(0)");
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return r % bound;
}

Element random_element(const RingPtr& ring, SplitMix64& rng) {
  switch (ring->kind()) {
    case Ring::Kind::Integers:
      return ring->from_int(static_cast<long long>(rng.below(19)) - 9);
    case Ring::Kind::IntegersMod: {
      const Int& m = ring->modulus();
      if (m > Int(UINT64_MAX))
        throw domain_error("random_element: modulus too large to sample");
      return ring->from_Int(Int(rng.below(m.convert_to<std::uint64_t>())));
    }
    case Ring::Kind::Poly: {
      std::vector<Element> coeffs;
      coeffs.push_back(random_element(ring->inner(), rng));
      coeffs.push_back(random_element(ring->inner(), rng));
      return ring->make_poly(std::move(coeffs));
    }
  }
  throw domain_error("random_element: unknown ring kind");
}

Matrix random_matrix(const RingPtr& ring, int rows, int cols, SplitMix64& rng) {
  Matrix m(ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_element(ring, rng);
  return m;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Subset random_subset(int n, int k, SplitMix64& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  for (int i = 0; i < k; ++i)
    std::swap(pool[i], pool[i + rng.below(std::uint64_t(n - i))]);
  std::vector<int> m(pool.begin(), pool.begin() + k);
  std::sort(m.begin(), m.end());
  return Subset(n, std::move(m));
}

}  // namespace

// ---------------------------------------------------------------- mutation

namespace {

struct MultMutant : ConvConstants {
  Nat mult_constant(int m, int k) const override {
    return ConvConstants::mult_constant(m, k) + 1;
  }
};
struct AddMutant : ConvConstants {
  Nat add_constant(int n, int k, int i) const override {
    return ConvConstants::add_constant(n, k, i) + 1;
  }
};
struct RectMutant : ConvConstants {
  Nat rect_constant(int n, int k, int i) const override {
    return ConvConstants::rect_constant(n, k, i) + 1;
  }
};

}  // namespace

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::MultConstant: return "mult_constant_plus_one";
    case Mutation::AddConstant: return "add_constant_plus_one";
    case Mutation::RectConstant: return "rect_constant_plus_one";
  }
  return "none";
}

Mutation mutation_from_name(const std::string& name) {
  if (name == "none" || name.empty()) return Mutation::None;
  if (name == "mult_constant_plus_one") return Mutation::MultConstant;
  if (name == "add_constant_plus_one") return Mutation::AddConstant;
  if (name == "rect_constant_plus_one") return Mutation::RectConstant;
  throw domain_error("unknown mutation '" + name + "'");
}

const ConvConstants& constants_for(Mutation m) {
  static MultMutant mult;
  static AddMutant addc;
  static RectMutant rect;
  switch (m) {
    case Mutation::MultConstant: return mult;
    case Mutation::AddConstant: return addc;
    case Mutation::RectConstant: return rect;
    default: return exact_constants();
  }
}

// ---------------------------------------------------------------- identities

namespace {

struct Cell {
  std::string ring;
  int a = 0, b = 0, c = 0;  // identity-specific dimensions
  int trial = 0;
};

SplitMix64 cell_rng(const SuiteConfig& cfg, const std::string& identity,
                    size_t index) {
  SplitMix64 seeder(cfg.seed);
  seeder.state ^= fnv1a(identity);
  seeder.state += 0x9E3779B97F4A7C15ULL * (index + 1);
  return SplitMix64(seeder.next());
}

json cx_base(const std::string& identity, const std::string& ring,
             Mutation mut) {
  json cx;
  cx["identity"] = identity;
  cx["ring"] = ring;
  cx["mutation"] = mutation_name(mut);
  return cx;
}

// --- instance checkers, shared with replay ---

bool cauchy_binet_holds(const Matrix& a, const Matrix& b, const Subset& s,
                        const Subset& t) {
  return cauchy_binet(a, b, s, t) == minor(mat_mul(a, b), s, t);
}

bool det_add_holds(const Matrix& a, const Matrix& b) {
  return det_add_expansion(a, b) == det_berkowitz(mat_add(a, b));
}

bool lemma_cp_holds(const Matrix& a, int k) {
  return charpoly(a).coeffs[k] == principal_minor_sum(a, k);
}

bool cancel_q_holds(const RingPtr& ring, int n, const Subset& s,
                    const Subset& t, const Subset& u, const Subset& v) {
  Element expected =
      (s == t && u == v && s == u) ? nat_scale(pow2(unsigned(n)), ring->one())
                                   : ring->zero();
  return cancel_sum_q(n, s, t, u, v, ring) == expected;
}

bool cancel_p_holds(const RingPtr& ring, int n, const Subset& s,
                    const Subset& t, const Subset& u) {
  unsigned k = unsigned(s.size());
  Element expected =
      (t == u)
          ? nat_scale(factorial(k) * factorial(unsigned(n) - k), ring->one())
          : ring->zero();
  return cancel_sum_p(n, s, t, u, ring) == expected;
}

bool symm_holds(const Matrix& a, const Matrix& b, const Matrix& c,
                const Subset& x, const Subset& y) {
  unsigned n = unsigned(a.rows());
  unsigned k = unsigned(x.size());
  Element rhs = mul(minor(mat_mul(b, c), x, y),
                    principal_minor_sum(a, int(k)));
  rhs = nat_scale(pow2(n) * factorial(k) * factorial(n - k), rhs);
  return symm_group_sum(a, b, c, x, y) == rhs;
}

bool asymm_holds(const Matrix& a, const Matrix& b, const Matrix& c,
                 const Matrix& e, const Matrix& f, const Matrix& g,
                 const AsymmSelector& sel) {
  unsigned n = unsigned(a.rows());
  unsigned m = unsigned(a.cols());
  unsigned k = unsigned(sel.x.size());
  unsigned j = unsigned(sel.w.size());
  Element rhs = a.ring()->zero();
  if (j == k) {
    rhs = mul(minor(mat_mul(b, g), sel.x, sel.z),
              minor(mat_mul(f, c), sel.w, sel.y));
    rhs = mul(rhs, principal_minor_sum(mat_mul(a, e), int(k)));
    rhs = nat_scale(pow2(n + m) * factorial(k) * factorial(n - k) *
                        factorial(k) * factorial(m - k),
                    rhs);
  }
  return asymm_group_sum(a, b, c, e, f, g, sel) == rhs;
}

bool conv_mult_holds(const Matrix& a, const Matrix& b, const Matrix& c,
                     Mutation mut) {
  CharPolyCoeffs lhs = conv_mult_lhs(a, b, c);
  ConvCoefficients rhs = conv_mult_rhs(charpoly(mat_mul(b, c)), charpoly(a),
                                       constants_for(mut));
  return lhs == rhs.poly;
}

bool conv_add_holds(const Matrix& a, const Matrix& b, Mutation mut) {
  CharPolyCoeffs lhs = conv_add_lhs(a, b);
  ConvCoefficients rhs =
      conv_add_rhs(charpoly(a), charpoly(b), constants_for(mut));
  return lhs == rhs.poly;
}

bool conv_rect_holds(const Matrix& a, const Matrix& b, const Matrix& c,
                     const Matrix& d, Mutation mut) {
  int n = a.rows(), m = a.cols();
  CharPolyCoeffs lhs = conv_rect_lhs(a, b, c, d);
  ConvCoefficients rhs = conv_rect_rhs(minor_sum_vector(mat_mul(a, c), n),
                                       minor_sum_vector(mat_mul(b, d), n), n,
                                       m, constants_for(mut));
  return lhs == rhs.poly;
}

bool four_set_diag_holds(int n, int k) {
  RingPtr ring = Ring::integers();
  FourSetTable table = four_set_table(n, k);
  for (const auto& [s, t, u, v, value] : table.entries) {
    if (!(v == s)) continue;
    Element direct = cancel_sum_p(n, s, t, u, ring);
    if (direct != ring->from_Int(value)) return false;
  }
  return true;
}

bool group_closure_holds(int n) {
  RingPtr ring = Ring::integers();
  auto group = enumerate_group(n);
  std::set<std::string> members;
  std::vector<Matrix> mats;
  for (const auto& g : group) {
    Matrix m = group_matrix(g, ring);
    members.insert(matrix_to_json(m).dump());
    mats.push_back(std::move(m));
  }
  if (members.size() != group.size()) return false;  // elements must be distinct
  for (const auto& x : mats)
    for (const auto& y : mats)
      if (!members.count(matrix_to_json(mat_mul(x, y)).dump())) return false;
  return true;
}

bool homomorphisms_hold(const RingPtr& ring, int n) {
  auto perms = all_permutations(n);
  auto sign_mats = enumerate_signs(n, ring);
  auto perm_mats = enumerate_perms(n, ring);
  auto signs = all_subsets(n);
  Matrix id = Matrix::identity(ring, n);
  for (size_t i = 0; i < perms.size(); ++i) {
    for (size_t j = 0; j < perms.size(); ++j) {
      Matrix lhs = permutation_matrix(compose(perms[i], perms[j]), ring);
      if (lhs != mat_mul(perm_mats[i], perm_mats[j])) return false;
    }
    if (mat_mul(perm_mats[i],
                permutation_matrix(perms[i].inverse(), ring)) != id)
      return false;
  }
  for (size_t i = 0; i < signs.size(); ++i) {
    for (size_t j = 0; j < signs.size(); ++j) {
      Matrix lhs = sign_matrix(sym_diff(signs[i], signs[j]), ring);
      if (lhs != mat_mul(sign_mats[i], sign_mats[j])) return false;
    }
    if (mat_mul(sign_mats[i], sign_mats[i]) != id) return false;
    if (ring->is_boolean() && sign_mats[i] != id) return false;
  }
  return true;
}

// --- cell construction and evaluation ---

constexpr int kCapCauchy = 4, kCapDetAdd = 4, kCapLemmaCp = 5, kCapCancel = 4,
              kCapGroup = 3, kCapConv = 3;

std::vector<Cell> build_cells(const std::string& id, const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int n_cap = cfg.max_n, m_cap = cfg.max_m;
  auto for_rings = [&](auto&& fn) {
    for (const auto& ring : cfg.rings) fn(ring);
  };
  if (id == "cauchy_binet") {
    int cap = std::min(n_cap, kCapCauchy);
    for_rings([&](const std::string& r) {
      for (int m = 1; m <= cap; ++m)
        for (int n = 1; n <= cap; ++n)
          for (int p = 1; p <= cap; ++p)
            for (int t = 0; t < cfg.trials; ++t)
              cells.push_back({r, m, n, p, t});
    });
  } else if (id == "det_add") {
    int cap = std::min(n_cap, kCapDetAdd);
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n)
        for (int t = 0; t < cfg.trials; ++t) cells.push_back({r, n, 0, 0, t});
    });
  } else if (id == "lemma_cp") {
    int cap = std::min(n_cap, kCapLemmaCp);
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n)
        for (int t = 0; t < cfg.trials; ++t) cells.push_back({r, n, 0, 0, t});
    });
  } else if (id == "cancel_q" || id == "cancel_p") {
    int cap = std::min(n_cap, kCapCancel);
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n) cells.push_back({r, n, 0, 0, 0});
    });
  } else if (id == "symm") {
    int cap_n = std::min(n_cap, kCapGroup);
    int cap_mr = std::min(m_cap, kCapGroup);
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap_n; ++n)
        for (int m = 1; m <= cap_mr; ++m)
          for (int rr = 1; rr <= cap_mr; ++rr)
            for (int t = 0; t < cfg.trials; ++t)
              cells.push_back({r, n, m, rr, t});
    });
  } else if (id == "asymm") {
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= std::min(n_cap, 2); ++n)
        for (int m = 1; m <= std::min(m_cap, 2); ++m)
          for (int t = 0; t < cfg.trials; ++t) cells.push_back({r, n, m, 0, t});
      if (n_cap >= 3 && m_cap >= 3)
        for (int t = 0; t < cfg.trials; ++t) cells.push_back({r, 3, 3, 0, t});
    });
  } else if (id == "conv_mult") {
    int cap = std::min({n_cap, m_cap, kCapConv});
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n)
        for (int m = 1; m <= cap; ++m)
          for (int t = 0; t < cfg.trials; ++t)
            cells.push_back({r, n, m, 0, t});
    });
  } else if (id == "conv_add") {
    int cap = std::min(n_cap, kCapConv);
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n)
        for (int t = 0; t < cfg.trials; ++t) cells.push_back({r, n, 0, 0, t});
    });
  } else if (id == "conv_rect") {
    int cap = std::min({n_cap, m_cap, kCapConv});
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= cap; ++n)
        for (int m = n; m <= cap; ++m)
          for (int t = 0; t < cfg.trials; ++t)
            cells.push_back({r, n, m, 0, t});
    });
  } else if (id == "group_closure") {
    for (int n = 1; n <= std::min(n_cap, kCapGroup); ++n)
      cells.push_back({"int", n, 0, 0, 0});
  } else if (id == "homomorphisms") {
    for_rings([&](const std::string& r) {
      for (int n = 1; n <= std::min(n_cap, kCapGroup); ++n)
        cells.push_back({r, n, 0, 0, 0});
    });
  } else {
    throw domain_error("unknown identity '" + id + "'");
  }
  return cells;
}

std::optional<json> eval_cell(const std::string& id, const Cell& cell,
                              size_t index, const SuiteConfig& cfg) {
  RingPtr ring = Ring::parse(cell.ring);
  SplitMix64 rng = cell_rng(cfg, id, index);
  Mutation mut = cfg.mutation;

  if (id == "cauchy_binet") {
    int m = cell.a, n = cell.b, p = cell.c;
    Matrix a = random_matrix(ring, m, n, rng);
    Matrix b = random_matrix(ring, n, p, rng);
    for (int k = 0; k <= std::min(m, p); ++k) {
      auto ss = subsets_of_size(m, k);
      auto ts = subsets_of_size(p, k);
      for (const auto& s : ss)
        for (const auto& t : ts)
          if (!cauchy_binet_holds(a, b, s, t)) {
            json cx = cx_base(id, cell.ring, mut);
            cx["inputs"] = {{"a", matrix_to_json(a)},
                            {"b", matrix_to_json(b)},
                            {"s", subset_to_json(s)},
                            {"t", subset_to_json(t)}};
            return cx;
          }
    }
    return std::nullopt;
  }

  if (id == "det_add") {
    int n = cell.a;
    Matrix a = random_matrix(ring, n, n, rng);
    Matrix b = random_matrix(ring, n, n, rng);
    if (det_add_holds(a, b)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
    return cx;
  }

  if (id == "lemma_cp") {
    int n = cell.a;
    Matrix a = random_matrix(ring, n, n, rng);
    for (int k = 0; k <= n; ++k)
      if (!lemma_cp_holds(a, k)) {
        json cx = cx_base(id, cell.ring, mut);
        cx["inputs"] = {{"a", matrix_to_json(a)}, {"k", k}};
        return cx;
      }
    return std::nullopt;
  }

  if (id == "cancel_q") {
    int n = cell.a;
    for (int k1 = 0; k1 <= n; ++k1)
      for (int k2 = 0; k2 <= n; ++k2) {
        auto sub1 = subsets_of_size(n, k1);
        auto sub2 = subsets_of_size(n, k2);
        for (const auto& s : sub1)
          for (const auto& t : sub1)
            for (const auto& u : sub2)
              for (const auto& v : sub2)
                if (!cancel_q_holds(ring, n, s, t, u, v)) {
                  json cx = cx_base(id, cell.ring, mut);
                  cx["inputs"] = {{"n", n},
                                  {"s", subset_to_json(s)},
                                  {"t", subset_to_json(t)},
                                  {"u", subset_to_json(u)},
                                  {"v", subset_to_json(v)}};
                  return cx;
                }
      }
    return std::nullopt;
  }

  if (id == "cancel_p") {
    int n = cell.a;
    for (int k = 0; k <= n; ++k) {
      auto subs = subsets_of_size(n, k);
      for (const auto& s : subs)
        for (const auto& t : subs)
          for (const auto& u : subs)
            if (!cancel_p_holds(ring, n, s, t, u)) {
              json cx = cx_base(id, cell.ring, mut);
              cx["inputs"] = {{"n", n},
                              {"s", subset_to_json(s)},
                              {"t", subset_to_json(t)},
                              {"u", subset_to_json(u)}};
              return cx;
            }
      if (cell.ring == "int" && n <= 3 && !four_set_diag_holds(n, k)) {
        json cx = cx_base(id, cell.ring, mut);
        cx["kind"] = "four_set_diag";
        cx["inputs"] = {{"n", n}, {"k", k}};
        return cx;
      }
    }
    return std::nullopt;
  }

  if (id == "symm") {
    int n = cell.a, m = cell.b, r = cell.c;
    Matrix a = random_matrix(ring, n, n, rng);
    Matrix b = random_matrix(ring, m, n, rng);
    Matrix c = random_matrix(ring, n, r, rng);
    for (int k = 0; k <= std::min({n, m, r}); ++k)
      for (const auto& x : subsets_of_size(m, k))
        for (const auto& y : subsets_of_size(r, k))
          if (!symm_holds(a, b, c, x, y)) {
            json cx = cx_base(id, cell.ring, mut);
            cx["inputs"] = {{"a", matrix_to_json(a)},
                            {"b", matrix_to_json(b)},
                            {"c", matrix_to_json(c)},
                            {"x", subset_to_json(x)},
                            {"y", subset_to_json(y)}};
            return cx;
          }
    return std::nullopt;
  }

  if (id == "asymm") {
    int n = cell.a, m = cell.b;
    int p = std::max(n, m);  // outer dimensions p1 = r1 = p2 = r2
    Matrix a = random_matrix(ring, n, m, rng);
    Matrix b = random_matrix(ring, p, n, rng);
    Matrix c = random_matrix(ring, m, p, rng);
    Matrix e = random_matrix(ring, m, n, rng);
    Matrix f = random_matrix(ring, p, m, rng);
    Matrix g = random_matrix(ring, n, p, rng);
    std::vector<AsymmSelector> sels;
    int k_cap = std::min(n, m);
    if (n <= 2 && m <= 2) {
      for (int k = 0; k <= k_cap; ++k)
        for (int j = 0; j <= k_cap; ++j)
          for (const auto& x : subsets_of_size(p, k))
            for (const auto& y : subsets_of_size(p, k))
              for (const auto& w : subsets_of_size(p, j))
                for (const auto& z : subsets_of_size(p, j))
                  sels.push_back({x, y, w, z});
    } else {
      for (int rep = 0; rep < 12; ++rep) {
        int k = int(rng.below(std::uint64_t(k_cap) + 1));
        int j = int(rng.below(std::uint64_t(k_cap) + 1));
        sels.push_back({random_subset(p, k, rng), random_subset(p, k, rng),
                        random_subset(p, j, rng), random_subset(p, j, rng)});
      }
    }
    for (const auto& sel : sels)
      if (!asymm_holds(a, b, c, e, f, g, sel)) {
        json cx = cx_base(id, cell.ring, mut);
        cx["inputs"] = {{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)},
                        {"c", matrix_to_json(c)}, {"e", matrix_to_json(e)},
                        {"f", matrix_to_json(f)}, {"g", matrix_to_json(g)},
                        {"x", subset_to_json(sel.x)},
                        {"y", subset_to_json(sel.y)},
                        {"w", subset_to_json(sel.w)},
                        {"z", subset_to_json(sel.z)}};
        return cx;
      }
    return std::nullopt;
  }

  if (id == "conv_mult") {
    int n = cell.a, m = cell.b;
    Matrix a = random_matrix(ring, m, m, rng);
    Matrix b = random_matrix(ring, n, m, rng);
    Matrix c = random_matrix(ring, m, n, rng);
    if (conv_mult_holds(a, b, c, mut)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"a", matrix_to_json(a)},
                    {"b", matrix_to_json(b)},
                    {"c", matrix_to_json(c)}};
    return cx;
  }

  if (id == "conv_add") {
    int n = cell.a;
    Matrix a = random_matrix(ring, n, n, rng);
    Matrix b = random_matrix(ring, n, n, rng);
    if (conv_add_holds(a, b, mut)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}};
    return cx;
  }

  if (id == "conv_rect") {
    int n = cell.a, m = cell.b;
    Matrix a = random_matrix(ring, n, m, rng);
    Matrix b = random_matrix(ring, n, m, rng);
    Matrix c = random_matrix(ring, m, n, rng);
    Matrix d = random_matrix(ring, m, n, rng);
    if (conv_rect_holds(a, b, c, d, mut)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"a", matrix_to_json(a)}, {"b", matrix_to_json(b)},
                    {"c", matrix_to_json(c)}, {"d", matrix_to_json(d)}};
    return cx;
  }

  if (id == "group_closure") {
    if (group_closure_holds(cell.a)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"n", cell.a}};
    return cx;
  }

  if (id == "homomorphisms") {
    if (homomorphisms_hold(ring, cell.a)) return std::nullopt;
    json cx = cx_base(id, cell.ring, mut);
    cx["inputs"] = {{"n", cell.a}};
    return cx;
  }

  throw domain_error("unknown identity '" + id + "'");
}

const std::map<std::string, std::vector<std::string>>& coverage_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"cauchy_binet",
       {"matrices.cauchy_binet", "matrices.minor", "matrices.mat_mul",
        "matrices.det_leibniz"}},
      {"det_add",
       {"matrices.det_add_expansion", "matrices.det_berkowitz",
        "matrices.mat_add", "matrices.mat_neg"}},
      {"lemma_cp", {"matrices.charpoly", "matrices.principal_minor_sum"}},
      {"cancel_q", {"hyperoct.cancel_sum_q", "matrices.sign_matrix"}},
      {"cancel_p",
       {"hyperoct.cancel_sum_p", "hyperoct.four_set_table",
        "matrices.permutation_matrix"}},
      {"symm",
       {"hyperoct.symm_group_sum", "hyperoct.group_matrix",
        "matrices.principal_minor_sum"}},
      {"asymm", {"hyperoct.asymm_group_sum"}},
      {"conv_mult",
       {"hyperoct.conv_mult_lhs", "freeconv.conv_mult_rhs",
        "matrices.charpoly"}},
      {"conv_add",
       {"hyperoct.conv_add_lhs", "freeconv.conv_add_rhs",
        "freeconv.factorial_constant"}},
      {"conv_rect",
       {"hyperoct.conv_rect_lhs", "freeconv.conv_rect_rhs",
        "freeconv.factorial_constant", "freeconv.minor_sum_vector"}},
      {"group_closure",
       {"hyperoct.enumerate_group", "hyperoct.group_matrix"}},
      {"homomorphisms",
       {"hyperoct.enumerate_signs", "hyperoct.enumerate_perms",
        "matrices.identity", "matrices.permutation_matrix",
        "matrices.sign_matrix"}},
  };
  return table;
}

void validate_config(const SuiteConfig& cfg) {
  if (cfg.trials < 1) throw domain_error("config: trials must be >= 1");
  if (cfg.max_n < 1 || cfg.max_m < 1)
    throw domain_error("config: dimension caps must be >= 1");
  if (cfg.max_n > 8 || cfg.max_m > 8)
    throw guard_error("config: dimension cap " +
                      std::to_string(std::max(cfg.max_n, cfg.max_m)) +
                      " exceeds the permutation enumeration guard (n <= 8)");
  if (cfg.jobs < 1) throw domain_error("config: jobs must be >= 1");
  for (const auto& r : cfg.rings) Ring::parse(r);  // throws on bad spec
  for (const auto& id : cfg.identities)
    if (!coverage_table().count(id))
      throw domain_error("config: unknown identity '" + id + "'");
}

}  // namespace

const std::vector<std::string>& all_identities() {
  static const std::vector<std::string> names{
      "cauchy_binet", "det_add",  "lemma_cp",  "cancel_q",
      "cancel_p",     "symm",     "asymm",     "conv_mult",
      "conv_add",     "conv_rect", "group_closure", "homomorphisms"};
  return names;
}

std::uint64_t Report::total_failed() const {
  std::uint64_t total = 0;
  for (const auto& [name, stats] : results) total += stats.failed;
  return total;
}

json Report::to_json(bool include_timing) const {
  json j;
  j["seed"] = seed;
  j["version"] = version;
  json res = json::object();
  for (const auto& [name, stats] : results) {
    json s;
    s["checked"] = stats.checked;
    s["passed"] = stats.passed;
    s["failed"] = stats.failed;
    s["counterexample"] = stats.counterexample;
    res[name] = std::move(s);
  }
  j["results"] = std::move(res);
  j["coverage"] = coverage;
  j["wall_ms"] = include_timing ? wall_ms : 0;
  return j;
}

Report run_suite(const SuiteConfig& config) {
  validate_config(config);
  auto t0 = std::chrono::steady_clock::now();
  std::set<std::string> selected(config.identities.begin(),
                                 config.identities.end());
  Report report;
  report.seed = config.seed;
  std::set<std::string> coverage;
  for (const auto& id : all_identities()) {
    if (!selected.empty() && !selected.count(id)) continue;
    auto cells = build_cells(id, config);
    std::vector<std::optional<json>> outcomes(cells.size());
    if (config.jobs <= 1 || cells.size() <= 1) {
      for (size_t i = 0; i < cells.size(); ++i)
        outcomes[i] = eval_cell(id, cells[i], i, config);
    } else {
      std::atomic<size_t> cursor{0};
      auto worker = [&] {
        for (size_t i = cursor.fetch_add(1); i < cells.size();
             i = cursor.fetch_add(1))
          outcomes[i] = eval_cell(id, cells[i], i, config);
      };
      std::vector<std::thread> pool;
      int nthreads = std::min<size_t>(config.jobs, cells.size());
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    IdentityStats stats;
    stats.checked = cells.size();
    for (const auto& outcome : outcomes) {
      if (outcome) {
        ++stats.failed;
        if (stats.counterexample.is_null()) stats.counterexample = *outcome;
      } else {
        ++stats.passed;
      }
    }
    report.results.emplace_back(id, std::move(stats));
    const auto& ops = coverage_table().at(id);
    coverage.insert(ops.begin(), ops.end());
  }
  report.coverage.assign(coverage.begin(), coverage.end());
  auto t1 = std::chrono::steady_clock::now();
  report.wall_ms = std::uint64_t(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return report;
}

bool replay_counterexample(const json& cx) {
  std::string id = cx.at("identity").get<std::string>();
  RingPtr ring = Ring::parse(cx.at("ring").get<std::string>());
  Mutation mut = mutation_from_name(cx.value("mutation", "none"));
  const json& in = cx.at("inputs");
  auto mat = [&](const char* key) { return matrix_from_json(in.at(key)); };
  auto sub = [&](const char* key) { return subset_from_json(in.at(key)); };

  if (id == "cauchy_binet")
    return !cauchy_binet_holds(mat("a"), mat("b"), sub("s"), sub("t"));
  if (id == "det_add") return !det_add_holds(mat("a"), mat("b"));
  if (id == "lemma_cp")
    return !lemma_cp_holds(mat("a"), in.at("k").get<int>());
  if (id == "cancel_q")
    return !cancel_q_holds(ring, in.at("n").get<int>(), sub("s"), sub("t"),
                           sub("u"), sub("v"));
  if (id == "cancel_p") {
    if (cx.value("kind", "") == "four_set_diag")
      return !four_set_diag_holds(in.at("n").get<int>(), in.at("k").get<int>());
    return !cancel_p_holds(ring, in.at("n").get<int>(), sub("s"), sub("t"),
                           sub("u"));
  }
  if (id == "symm")
    return !symm_holds(mat("a"), mat("b"), mat("c"), sub("x"), sub("y"));
  if (id == "asymm")
    return !asymm_holds(mat("a"), mat("b"), mat("c"), mat("e"), mat("f"),
                        mat("g"),
                        AsymmSelector{sub("x"), sub("y"), sub("w"), sub("z")});
  if (id == "conv_mult")
    return !conv_mult_holds(mat("a"), mat("b"), mat("c"), mut);
  if (id == "conv_add") return !conv_add_holds(mat("a"), mat("b"), mut);
  if (id == "conv_rect")
    return !conv_rect_holds(mat("a"), mat("b"), mat("c"), mat("d"), mut);
  if (id == "group_closure")
    return !group_closure_holds(in.at("n").get<int>());
  if (id == "homomorphisms")
    return !homomorphisms_hold(ring, in.at("n").get<int>());
  throw domain_error("replay: unknown identity '" + id + "'");
}

}  // namespace octadet
