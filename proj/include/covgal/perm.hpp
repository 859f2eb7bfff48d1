#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "covgal/errors.hpp"

namespace covgal {

/// Permutation of {1..n}, stored 0-based: img[i] is the image of point i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw InputError("not a bijection");
      seen[v] = true;
    }
  }
  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Function composition: (a*b)(i) = a(b(i)), b applied first.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    std::vector<int> img(b.degree());
    for (int i = 0; i < b.degree(); ++i) img[i] = a.img_[b.img_[i]];
    Permutation r;
    r.img_ = std::move(img);
    return r;
  }

  Permutation inverse() const {
    std::vector<int> img(degree());
    for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
    Permutation r;
    r.img_ = std::move(img);
    return r;
  }

  Permutation power(long k) const {
    int n = degree();
    long m = order();
    k %= m;
    if (k < 0) k += m;
    Permutation acc = identity(n);
    for (long j = 0; j < k; ++j) acc = *this * acc;
    return acc;
  }

  long order() const {
    long ord = 1;
    for (const auto& cyc : cycles())
      ord = std::lcm(ord, static_cast<long>(cyc.size()));
    return ord;
  }

  int sign() const {
    int s = 1;
    for (const auto& cyc : cycles())
      if (cyc.size() % 2 == 0) s = -s;
    return s;
  }

  /// Nontrivial cycles, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(degree(), false);
    for (int i = 0; i < degree(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      std::vector<int> cyc;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Cycle notation on 1-based points, "()" for the identity.
  std::string to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
      s += "(";
      for (size_t k = 0; k < c.size(); ++k) {
        if (k) s += " ";
        s += std::to_string(c[k] + 1);
      }
      s += ")";
    }
    return s;
  }

  /// Parses cycle notation like "(1 2 3)(4 5)"; points are 1-based.
  static Permutation from_cycle_string(const std::string& s, int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<int> cyc;
    std::string tok;
    auto flush_tok = [&] {
      if (tok.empty()) return;
      int v = std::stoi(tok) - 1;
      if (v < 0 || v >= degree) throw InputError("cycle point out of range");
      cyc.push_back(v);
      tok.clear();
    };
    for (char ch : s) {
      if (std::isdigit(ch)) {
        tok += ch;
      } else if (ch == ')' || ch == ' ' || ch == ',') {
        flush_tok();
        if (ch == ')') {
          for (size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
          cyc.clear();
        }
      } else if (ch == '(') {
        cyc.clear();
      } else {
        throw InputError("bad cycle notation");
      }
    }
    flush_tok();
    if (!cyc.empty()) throw InputError("unclosed cycle");
    return Permutation(std::move(img));
  }

  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Finitely generated permutation group with fully enumerated elements.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted, closed, contains identity

  long order() const { return static_cast<long>(elements.size()); }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
  }

  int index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || !(*it == p))
      throw InputError("element not in group");
    return static_cast<int>(it - elements.begin());
  }

  bool is_abelian() const {
    for (const auto& a : generators)
      for (const auto& b : generators)
        if (!(a * b == b * a)) return false;
    return true;
  }

  bool is_transitive() const;
};

/// Breadth-first closure of the generated group; throws past the cap.
inline PermGroup generate(const std::vector<Permutation>& gens,
                          long cap = 100000) {
  if (gens.empty()) throw InputError("no generators");
  int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw InputError("mixed permutation degrees");
  std::set<Permutation> closed{Permutation::identity(n)};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Permutation h = g * e;
        if (closed.insert(h).second) {
          if (static_cast<long>(closed.size()) > cap)
            throw OrderCapExceeded("group order exceeds cap " +
                                   std::to_string(cap));
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  PermGroup G;
  G.degree = n;
  G.generators = gens;
  G.elements.assign(closed.begin(), closed.end());
  return G;
}

/// Orbit partition of {1..n}; each orbit sorted, orbits ordered by minimum.
inline std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens,
                                            int degree) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens)
    for (int i = 0; i < degree; ++i) {
      int a = find(i), b = find(g(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < degree; ++i) buckets[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, pts] : buckets) out.push_back(std::move(pts));
  return out;
}

inline std::vector<std::vector<int>> orbits(const PermGroup& G) {
  return orbits(G.generators, G.degree);
}

inline bool PermGroup::is_transitive() const {
  return orbits(*this).size() == 1;
}

/// A subgroup, held as sorted indices into the parent group's element list.
struct Subgroup {
  std::vector<int> members;
  long order() const { return static_cast<long>(members.size()); }
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

struct SubgroupLattice {
  std::vector<Subgroup> subgroups;          // sorted by (order, members)
  std::vector<std::vector<bool>> includes;  // includes[i][j]: S_j <= S_i
  std::vector<long> index_in_parent;        // [G : S_i]
};

namespace detail {

/// Cayley table of G: table[i][j] = index of elements[i] * elements[j].
inline std::vector<std::vector<int>> cayley_table(const PermGroup& G) {
  const int m = static_cast<int>(G.elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = G.index_of(G.elements[i] * G.elements[j]);
  return table;
}

inline std::vector<int> close_subset(const std::vector<int>& seed,
                                     const std::vector<std::vector<int>>& table,
                                     int identity_idx) {
  std::set<int> closed{identity_idx};
  std::vector<int> frontier{identity_idx};
  for (int s : seed)
    if (closed.insert(s).second) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int b : std::vector<int>(closed.begin(), closed.end()))
        for (int c : {table[a][b], table[b][a]})
          if (closed.insert(c).second) next.push_back(c);
    frontier = std::move(next);
  }
  return {closed.begin(), closed.end()};
}

}  // namespace detail

/// All subgroups of G, by growing generating sets one element at a time.
inline SubgroupLattice subgroups(const PermGroup& G, long cap = 120) {
  if (G.order() > cap)
    throw OrderCapExceeded("lattice enumeration capped at order " +
                           std::to_string(cap));
  auto table = detail::cayley_table(G);
  int id_idx = G.index_of(Permutation::identity(G.degree));
  const int m = static_cast<int>(G.elements.size());

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> frontier;
  std::vector<int> trivial = detail::close_subset({}, table, id_idx);
  found.insert(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& H : frontier) {
      for (int g = 0; g < m; ++g) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        auto K = detail::close_subset([&] {
          std::vector<int> seed = H;
          seed.push_back(g);
          return seed;
        }(), table, id_idx);
        if (found.insert(K).second) next.push_back(std::move(K));
      }
    }
    frontier = std::move(next);
  }

  SubgroupLattice lat;
  for (auto& members : found) lat.subgroups.push_back(Subgroup{members});
  std::sort(lat.subgroups.begin(), lat.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return std::tuple(a.order(), a.members) <
                     std::tuple(b.order(), b.members);
            });
  const int s = static_cast<int>(lat.subgroups.size());
  lat.includes.assign(s, std::vector<bool>(s, false));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      lat.includes[i][j] = std::includes(
          lat.subgroups[i].members.begin(), lat.subgroups[i].members.end(),
          lat.subgroups[j].members.begin(), lat.subgroups[j].members.end());
  for (const auto& H : lat.subgroups)
    lat.index_in_parent.push_back(G.order() / H.order());
  return lat;
}

/// Action of G's generators on the left cosets of H; degree [G:H].
inline std::vector<Permutation> coset_action(const PermGroup& G,
                                             const Subgroup& H) {
  const int m = static_cast<int>(G.elements.size());
  for (int idx : H.members)
    if (idx < 0 || idx >= m) throw NotASubgroup("member index out of range");
  // Verify closure of H.
  for (int a : H.members)
    for (int b : H.members)
      if (!std::binary_search(H.members.begin(), H.members.end(),
                              G.index_of(G.elements[a] * G.elements[b])))
        throw NotASubgroup("member set not closed");

  // Label each element with its left coset gH.
  std::vector<int> coset_of(m, -1);
  std::vector<int> reps;
  for (int g = 0; g < m; ++g) {
    if (coset_of[g] != -1) continue;
    int label = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : H.members)
      coset_of[G.index_of(G.elements[g] * G.elements[h])] = label;
  }
  std::vector<Permutation> action;
  for (const auto& gen : G.generators) {
    std::vector<int> img(reps.size());
    for (size_t c = 0; c < reps.size(); ++c)
      img[c] = coset_of[G.index_of(gen * G.elements[reps[c]])];
    action.emplace_back(std::move(img));
  }
  return action;
}

// ---------------------------------------------------------------------------
// Heuristic identification by order, abelianness, and element-order stats.
// ---------------------------------------------------------------------------

namespace detail {

inline std::map<long, long> order_histogram(const PermGroup& G) {
  std::map<long, long> hist;
  for (const auto& e : G.elements) ++hist[e.order()];
  return hist;
}

inline std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// Element-order histogram of the abelian group with the given invariant
/// cyclic factors (as prime powers).
inline std::map<long, long> abelian_histogram(const std::vector<long>& factors) {
  std::map<long, long> hist{{1, 1}};
  for (long f : factors) {
    std::map<long, long> next;
    for (long d = 1; d <= f; ++d) {
      if (f % d) continue;
      long count = 1;  // number of elements of order d in Z_f (= phi(d))
      long x = d;
      for (auto [p, e] : factorize(d)) x = x / p * (p - 1);
      count = d == 1 ? 1 : x;
      for (const auto& [o, c] : hist) next[std::lcm(o, d)] += c * count;
    }
    hist = std::move(next);
  }
  return hist;
}

inline void enumerate_partitions(int n, int maxpart, std::vector<int>& cur,
                                 std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    enumerate_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Best-effort label: trivial / cyclic n / symmetric n / alternating n /
/// dihedral n / elementary abelian / abelian with invariant factors /
/// unidentified.
inline std::string identify(const PermGroup& G) {
  const long N = G.order();
  if (N == 1) return "trivial";
  long factorial = 1;
  for (int k = 2; k <= G.degree; ++k) factorial *= k;
  if (N == factorial && G.degree >= 3) return "symmetric " + std::to_string(G.degree);
  if (2 * N == factorial && G.degree >= 3) {
    bool all_even = true;
    for (const auto& e : G.elements) all_even &= e.sign() == 1;
    if (all_even) return "alternating " + std::to_string(G.degree);
  }

  auto hist = detail::order_histogram(G);
  if (G.is_abelian()) {
    if (hist.count(N)) return "cyclic " + std::to_string(N);
    auto primes = detail::factorize(N);
    if (primes.size() == 1 && hist.size() == 2 && hist.count(primes[0].first))
      return "elementary abelian " + std::to_string(primes[0].first) + "^" +
             std::to_string(primes[0].second);
    // Match the order histogram against every abelian type of order N.
    std::vector<std::vector<std::vector<int>>> per_prime;
    for (auto [p, e] : primes) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      detail::enumerate_partitions(e, e, cur, parts);
      per_prime.push_back(std::move(parts));
    }
    std::vector<size_t> pick(per_prime.size(), 0);
    while (true) {
      std::vector<long> factors;
      for (size_t i = 0; i < per_prime.size(); ++i)
        for (int exp : per_prime[i][pick[i]]) {
          long f = 1;
          for (int k = 0; k < exp; ++k) f *= primes[i].first;
          factors.push_back(f);
        }
      if (detail::abelian_histogram(factors) == hist) {
        std::sort(factors.begin(), factors.end());
        std::string s = "abelian";
        for (size_t k = 0; k < factors.size(); ++k)
          s += (k ? " x Z" : " Z") + std::to_string(factors[k]);
        return s;
      }
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == per_prime[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    return "abelian (type unidentified)";
  }

  if (N % 2 == 0 && N >= 6) {
    long half = N / 2;
    long involutions = hist.count(2) ? hist.at(2) : 0;
    long expected = half + (half % 2 == 0 ? 1 : 0);
    if (hist.count(half) && involutions == expected)
      return "dihedral " + std::to_string(half);
  }
  if (N == factorial) return "symmetric " + std::to_string(G.degree);
  return "unidentified (order " + std::to_string(N) + ")";
}

}  // namespace covgal
