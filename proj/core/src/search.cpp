#include "revsc/search.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <thread>
#include <tuple>

#include "revsc/complexity.hpp"
#include "revsc/monoid.hpp"

namespace revsc {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, int worker) {
  return splitmix64(master + 0x9E3779B97F4A7C15ull * std::uint64_t(worker + 1));
}

/// Uniform draw from {0, ..., n-1} by rejection, independent of any
/// library distribution so results are stable across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t reject_below = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = rng();
    if (x >= reject_below) return x % n;
  }
}

/// out[g[q]] = g[t[q]] is g.t.g^-1 on 0-based image arrays.
void conjugate_raw(std::span<const std::uint16_t> t,
                   std::span<const std::uint16_t> g, std::uint16_t* out) {
  const int n = static_cast<int>(t.size());
  for (int q = 0; q < n; ++q) out[g[q]] = g[t[q]];
}

/// Lexicographically least conjugate of `t`, written into `best` using
/// `cur` as scratch.
void canonicalize_into(std::span<const std::uint16_t> t,
                       const std::vector<Permutation>& perms,
                       std::vector<std::uint16_t>& cur,
                       std::vector<std::uint16_t>& best) {
  best.assign(t.begin(), t.end());  // the identity conjugate
  for (const Permutation& g : perms) {
    conjugate_raw(t, g.raw(), cur.data());
    if (cur < best) best = cur;
  }
}

/// Class representatives by canonicalizing every one of the n^n maps.
std::vector<Transformation> reps_by_enumeration(int n) {
  const auto perms = all_permutations(n);
  std::set<std::vector<std::uint16_t>> canon;
  std::vector<std::uint16_t> t(n, 0), cur(n), best(n);
  while (true) {
    canonicalize_into(t, perms, cur, best);
    canon.insert(best);
    int q = 0;
    for (; q < n; ++q) {
      if (++t[q] < n) break;
      t[q] = 0;
    }
    if (q == n) break;
  }
  std::vector<Transformation> out;
  out.reserve(canon.size());
  for (const auto& c : canon)
    out.push_back(Transformation::from_raw(std::vector<std::uint16_t>(c)));
  return out;
}

// --- shape enumeration for degree 7 -----------------------------------
//
// A map on n points is a functional graph: disjoint cycles with a rooted
// tree hanging off every cycle node. Conjugacy classes correspond to
// isomorphism classes of these graphs, so instead of canonicalizing all
// 7^7 maps we enumerate the shapes directly: rooted-tree shapes, then
// cyclic sequences of trees (one component per cycle), then multisets of
// components. One concrete map is built per shape and canonicalized.

struct TreeKey {
  int size = 0;
  int index = 0;
  friend auto operator<=>(const TreeKey&, const TreeKey&) = default;
};

/// trees[s] lists every rooted-tree shape on s nodes as the non-increasing
/// (size, index) list of the root's subtrees.
using TreeCatalog = std::vector<std::vector<std::vector<TreeKey>>>;

/// All non-increasing (size, index) sequences with sizes summing to
/// `remaining`, where size s admits indices 0 .. count_by_size[s]-1 and
/// every entry is bounded above by (max_size, max_index).
void gen_multisets(std::span<const int> count_by_size, int remaining,
                   int max_size, int max_index, std::vector<TreeKey>& cur,
                   std::vector<std::vector<TreeKey>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int sz = std::min(remaining, max_size); sz >= 1; --sz) {
    const int top = sz == max_size ? max_index : count_by_size[sz] - 1;
    for (int idx = top; idx >= 0; --idx) {
      cur.push_back({sz, idx});
      gen_multisets(count_by_size, remaining - sz, sz, idx, cur, out);
      cur.pop_back();
    }
  }
}

TreeCatalog build_tree_catalog(int max_size) {
  TreeCatalog trees(std::size_t(max_size) + 1);
  trees[1].push_back({});
  std::vector<int> counts(std::size_t(max_size) + 1, 0);
  counts[1] = 1;
  std::vector<TreeKey> cur;
  for (int s = 2; s <= max_size; ++s) {
    gen_multisets(counts, s - 1, s - 1, counts[s - 1] - 1, cur, trees[s]);
    counts[s] = static_cast<int>(trees[s].size());
  }
  return trees;
}

struct ComponentShape {
  int cycle_len = 0;
  std::vector<TreeKey> trees;  // one rooted tree per cycle node
};

/// True iff v is lexicographically minimal among its rotations, i.e. the
/// canonical necklace representative.
bool minimal_rotation(const std::vector<TreeKey>& v) {
  const int c = static_cast<int>(v.size());
  for (int r = 1; r < c; ++r) {
    for (int i = 0; i < c; ++i) {
      const TreeKey& a = v[std::size_t((r + i) % c)];
      const TreeKey& b = v[std::size_t(i)];
      if (a < b) return false;
      if (b < a) break;
    }
  }
  return true;
}

/// All components of `total` nodes whose cycle has length c: necklaces of
/// c rooted trees with sizes summing to total.
void gen_cycle_tuples(const TreeCatalog& trees, int pos, int c, int remaining,
                      std::vector<TreeKey>& cur,
                      std::vector<ComponentShape>& out) {
  if (pos == c) {
    if (remaining == 0 && minimal_rotation(cur)) out.push_back({c, cur});
    return;
  }
  const int slots_after = c - pos - 1;
  for (int sz = 1; sz + slots_after <= remaining; ++sz) {
    for (int idx = 0; idx < static_cast<int>(trees[sz].size()); ++idx) {
      cur.push_back({sz, idx});
      gen_cycle_tuples(trees, pos + 1, c, remaining - sz, cur, out);
      cur.pop_back();
    }
  }
}

/// Lays out the tree shape `key`: allocates the root and, recursively, the
/// subtrees, pointing every child at its parent. Returns the root node.
int place_tree(const TreeCatalog& trees, TreeKey key,
               std::vector<std::uint16_t>& img, int& next) {
  const int root = next++;
  for (const TreeKey child : trees[key.size][key.index]) {
    const int node = place_tree(trees, child, img, next);
    img[std::size_t(node)] = static_cast<std::uint16_t>(root);
  }
  return root;
}

std::vector<Transformation> reps_by_shapes(int n) {
  const TreeCatalog trees = build_tree_catalog(n);

  std::vector<std::vector<ComponentShape>> comps(std::size_t(n) + 1);
  {
    std::vector<TreeKey> cur;
    for (int s = 1; s <= n; ++s)
      for (int c = 1; c <= s; ++c) gen_cycle_tuples(trees, 0, c, s, cur, comps[s]);
  }

  std::vector<int> comp_counts(std::size_t(n) + 1, 0);
  for (int s = 1; s <= n; ++s) comp_counts[s] = static_cast<int>(comps[s].size());
  std::vector<std::vector<TreeKey>> graphs;
  {
    std::vector<TreeKey> cur;
    gen_multisets(comp_counts, n, n, comp_counts[n] - 1, cur, graphs);
  }

  const auto perms = all_permutations(n);
  std::set<std::vector<std::uint16_t>> canon;
  std::vector<std::uint16_t> img(n), cur(n), best(n);
  std::vector<int> roots;
  for (const auto& graph : graphs) {
    int next = 0;
    for (const TreeKey ck : graph) {
      const ComponentShape& comp = comps[ck.size][ck.index];
      roots.clear();
      for (const TreeKey tk : comp.trees)
        roots.push_back(place_tree(trees, tk, img, next));
      for (int i = 0; i < comp.cycle_len; ++i)
        img[std::size_t(roots[std::size_t(i)])] = static_cast<std::uint16_t>(
            roots[std::size_t((i + 1) % comp.cycle_len)]);
    }
    canonicalize_into(img, perms, cur, best);
    canon.insert(best);
  }

  std::vector<Transformation> out;
  out.reserve(canon.size());
  for (const auto& c : canon)
    out.push_back(Transformation::from_raw(std::vector<std::uint16_t>(c)));
  return out;
}

// --- brute-force evaluation --------------------------------------------
//
// For a fixed generator pair the orbit sizes of every tau are read off one
// shared structure: the functional graph on all k^n maps g with edges
// g -> g.alpha and g -> g.beta is condensed into its strongly connected
// components, the condensation's transitive closure is computed with
// bitsets, and |tau M| is then the total size of the components reachable
// from tau's. Beyond kSccNodeLimit nodes that quadratic-ish bitset table
// is dropped in favor of one breadth-first search per tau.

constexpr std::uint32_t kSccNodeLimit = 8192;

struct PairScratch {
  std::vector<std::uint32_t> succ_a, succ_b;
  std::vector<std::uint16_t> digits;
  std::vector<std::uint32_t> counts;
  std::vector<std::int32_t> order, low, comp;
  std::vector<std::uint8_t> onstack;
  std::vector<std::uint32_t> tstack;
  std::vector<std::uint64_t> frames;  // (node << 2) | next edge
  std::vector<std::uint32_t> comp_size;
  std::vector<std::uint32_t> comp_start, comp_cursor, comp_nodes;
  std::vector<std::uint64_t> bits;
  std::vector<std::int64_t> reach;
  std::vector<std::uint32_t> stamp, queue;
  std::uint32_t stamp_now = 0;
};

/// Successor node ids under g -> g.alpha and g -> g.beta for every map id.
/// Node id of g is sum over q of g(q+1) * k^q.
void build_succ(PairScratch& s, std::span<const std::uint16_t> ar,
                std::span<const std::uint16_t> br, int n, int k,
                std::uint32_t node_count, const std::uint32_t* pw) {
  s.succ_a.resize(node_count);
  s.succ_b.resize(node_count);
  s.digits.assign(static_cast<std::size_t>(n), 0);
  for (std::uint32_t id = 0; id < node_count; ++id) {
    std::uint32_t sa = 0, sb = 0;
    for (int q = 0; q < n; ++q) {
      sa += s.digits[ar[q]] * pw[q];
      sb += s.digits[br[q]] * pw[q];
    }
    s.succ_a[id] = sa;
    s.succ_b[id] = sb;
    for (int q = 0; q < n; ++q) {
      if (++s.digits[std::size_t(q)] < k) break;
      s.digits[std::size_t(q)] = 0;
    }
  }
}

/// Iterative Tarjan over the 2-out-regular graph; components are numbered
/// in emission order, so every edge leaving a component points at a
/// lower-numbered one. Returns the component count.
int tarjan(PairScratch& s, std::uint32_t node_count) {
  s.order.assign(node_count, -1);
  s.low.assign(node_count, 0);
  s.comp.assign(node_count, -1);
  s.onstack.assign(node_count, 0);
  s.tstack.clear();
  s.frames.clear();
  s.comp_size.assign(node_count, 0);
  std::int32_t counter = 0;
  int scc_count = 0;
  for (std::uint32_t root = 0; root < node_count; ++root) {
    if (s.order[root] >= 0) continue;
    s.order[root] = s.low[root] = counter++;
    s.onstack[root] = 1;
    s.tstack.push_back(root);
    s.frames.push_back(std::uint64_t(root) << 2);
    while (!s.frames.empty()) {
      const std::uint64_t fr = s.frames.back();
      const auto u = static_cast<std::uint32_t>(fr >> 2);
      const auto ei = static_cast<std::uint32_t>(fr & 3);
      if (ei < 2) {
        s.frames.back() = fr + 1;  // advance to the next edge
        const std::uint32_t v = ei == 0 ? s.succ_a[u] : s.succ_b[u];
        if (s.order[v] < 0) {
          s.order[v] = s.low[v] = counter++;
          s.onstack[v] = 1;
          s.tstack.push_back(v);
          s.frames.push_back(std::uint64_t(v) << 2);
        } else if (s.onstack[v] && s.order[v] < s.low[u]) {
          s.low[u] = s.order[v];
        }
      } else {
        s.frames.pop_back();
        if (!s.frames.empty()) {
          const auto p = static_cast<std::uint32_t>(s.frames.back() >> 2);
          if (s.low[u] < s.low[p]) s.low[p] = s.low[u];
        }
        if (s.low[u] == s.order[u]) {
          while (true) {
            const std::uint32_t w = s.tstack.back();
            s.tstack.pop_back();
            s.onstack[w] = 0;
            s.comp[w] = scc_count;
            ++s.comp_size[std::size_t(scc_count)];
            if (w == u) break;
          }
          ++scc_count;
        }
      }
    }
  }
  return scc_count;
}

/// Transitive closure of the condensation as one bitset row per component,
/// including the component itself. Rows are valid because component ids
/// increase against edge direction.
void dag_closure(PairScratch& s, std::uint32_t node_count, int scc_count) {
  const int words = (scc_count + 63) / 64;
  s.comp_start.assign(std::size_t(scc_count) + 1, 0);
  for (std::uint32_t id = 0; id < node_count; ++id)
    ++s.comp_start[std::size_t(s.comp[id]) + 1];
  for (int c = 0; c < scc_count; ++c)
    s.comp_start[std::size_t(c) + 1] += s.comp_start[std::size_t(c)];
  s.comp_cursor.assign(s.comp_start.begin(), s.comp_start.end());
  s.comp_nodes.resize(node_count);
  for (std::uint32_t id = 0; id < node_count; ++id)
    s.comp_nodes[s.comp_cursor[std::size_t(s.comp[id])]++] = id;

  s.bits.assign(std::size_t(scc_count) * words, 0);
  for (int c = 0; c < scc_count; ++c) {
    std::uint64_t* row = s.bits.data() + std::size_t(c) * words;
    row[c >> 6] |= std::uint64_t(1) << (c & 63);
    for (std::uint32_t i = s.comp_start[std::size_t(c)];
         i < s.comp_start[std::size_t(c) + 1]; ++i) {
      const std::uint32_t u = s.comp_nodes[i];
      for (const std::uint32_t v : {s.succ_a[u], s.succ_b[u]}) {
        const int cv = s.comp[v];
        if (cv == c) continue;
        const std::uint64_t* src = s.bits.data() + std::size_t(cv) * words;
        for (int w = 0; w < words; ++w) row[w] |= src[w];
      }
    }
  }
  s.reach.assign(std::size_t(scc_count), -1);
}

/// Number of maps reachable from component c: sum of component sizes over
/// c's closure row. Memoized per pair.
std::uint64_t reach_count(PairScratch& s, int c, int scc_count) {
  std::int64_t& memo = s.reach[std::size_t(c)];
  if (memo >= 0) return static_cast<std::uint64_t>(memo);
  const int words = (scc_count + 63) / 64;
  const std::uint64_t* row = s.bits.data() + std::size_t(c) * words;
  std::uint64_t sum = 0;
  for (int w = 0; w < words; ++w) {
    std::uint64_t word = row[w];
    while (word != 0) {
      const int b = std::countr_zero(word);
      word &= word - 1;
      sum += s.comp_size[std::size_t((w << 6) + b)];
    }
  }
  memo = static_cast<std::int64_t>(sum);
  return sum;
}

/// Orbit size by breadth-first search from one map, with stamped visit
/// marks so the visited array is never cleared between taus.
std::uint64_t orbit_bfs(PairScratch& s, std::uint32_t node_count,
                        std::uint32_t start) {
  if (s.stamp.size() != node_count) {
    s.stamp.assign(node_count, 0);
    s.stamp_now = 0;
  }
  if (++s.stamp_now == 0) {
    std::fill(s.stamp.begin(), s.stamp.end(), 0);
    s.stamp_now = 1;
  }
  s.queue.clear();
  s.queue.push_back(start);
  s.stamp[start] = s.stamp_now;
  std::size_t head = 0;
  std::uint64_t count = 1;
  while (head < s.queue.size()) {
    const std::uint32_t u = s.queue[head++];
    for (const std::uint32_t v : {s.succ_a[u], s.succ_b[u]}) {
      if (s.stamp[v] != s.stamp_now) {
        s.stamp[v] = s.stamp_now;
        s.queue.push_back(v);
        ++count;
      }
    }
  }
  return count;
}

/// Visits every surjective tau in lexicographic image-array order,
/// passing its node id, its index among surjections and its digits.
template <typename Eval>
void for_each_surjective_tau(PairScratch& s, int n, int k,
                             const std::uint32_t* pw, Eval&& eval) {
  s.digits.assign(static_cast<std::size_t>(n), 0);
  s.counts.assign(static_cast<std::size_t>(k), 0);
  s.counts[0] = static_cast<std::uint32_t>(n);
  int zero_values = k - 1;
  std::uint32_t id = 0;
  std::uint64_t tidx = 0;
  while (true) {
    if (zero_values == 0) {
      eval(id, tidx, s.digits);
      ++tidx;
    }
    int j = n - 1;
    for (; j >= 0; --j) {
      const std::uint16_t old = s.digits[std::size_t(j)];
      if (--s.counts[old] == 0) ++zero_values;
      if (old + 1 < k) {
        s.digits[std::size_t(j)] = static_cast<std::uint16_t>(old + 1);
        if (s.counts[std::size_t(old) + 1]++ == 0) --zero_values;
        id += pw[j];
        break;
      }
      s.digits[std::size_t(j)] = 0;
      if (s.counts[0]++ == 0) --zero_values;
      id -= std::uint32_t(k - 1) * pw[j];
    }
    if (j < 0) break;
  }
}

struct BruteBest {
  bool found = false;
  std::uint64_t size = 0;
  std::uint64_t aidx = 0, bidx = 0, tidx = 0;
  std::vector<std::uint8_t> tau;
};

void consider(BruteBest& best, std::uint64_t size, std::uint64_t aidx,
              std::uint64_t bidx, std::uint64_t tidx,
              const std::vector<std::uint16_t>& digits) {
  if (best.found) {
    if (size < best.size) return;
    if (size == best.size &&
        std::tie(aidx, bidx, tidx) >= std::tie(best.aidx, best.bidx, best.tidx))
      return;
  }
  best.found = true;
  best.size = size;
  best.aidx = aidx;
  best.bidx = bidx;
  best.tidx = tidx;
  best.tau.assign(digits.begin(), digits.end());
}

void brute_worker(std::size_t first_beta, std::size_t stride,
                  const std::vector<Permutation>& perms,
                  const std::vector<Transformation>& reps, int n, int k,
                  std::uint32_t node_count, const std::vector<std::uint32_t>& pw,
                  BruteBest& best, std::uint64_t& examined) {
  PairScratch s;
  for (std::size_t b = first_beta; b < reps.size(); b += stride) {
    const auto br = reps[b].raw();
    for (std::size_t a = 0; a < perms.size(); ++a) {
      build_succ(s, perms[a].raw(), br, n, k, node_count, pw.data());
      if (node_count <= kSccNodeLimit) {
        const int scc_count = tarjan(s, node_count);
        dag_closure(s, node_count, scc_count);
        for_each_surjective_tau(
            s, n, k, pw.data(),
            [&](std::uint32_t id, std::uint64_t tidx,
                const std::vector<std::uint16_t>& digits) {
              const std::uint64_t size =
                  reach_count(s, s.comp[id], scc_count);
              ++examined;
              consider(best, size, a, b, tidx, digits);
            });
      } else {
        for_each_surjective_tau(
            s, n, k, pw.data(),
            [&](std::uint32_t id, std::uint64_t tidx,
                const std::vector<std::uint16_t>& digits) {
              const std::uint64_t size = orbit_bfs(s, node_count, id);
              ++examined;
              consider(best, size, a, b, tidx, digits);
            });
      }
    }
  }
}

BigInt factorial_big(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& fn) {
  if (remaining == 0) {
    fn(parts);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    partitions_rec(remaining - p, p, parts, fn);
    parts.pop_back();
  }
}

/// Number of conjugacy classes of the full transformation monoid on n
/// points, by Burnside's lemma over cycle types: a permutation with cycle
/// multiplicities m_l commutes with prod over l of s(l)^m_l
/// transformations, where s(l) = sum of d*m_d over divisors d of l.
BigInt conjugacy_class_count(int n) {
  BigInt total = 0;
  std::vector<int> parts;
  partitions_rec(n, n, parts, [&](const std::vector<int>& p) {
    std::map<int, int> mult;
    for (const int l : p) ++mult[l];
    BigInt type_size = factorial_big(n);
    for (const auto& [l, m] : mult) {
      for (int i = 0; i < m; ++i) type_size /= l;
      type_size /= factorial_big(m);
    }
    BigInt commuting = 1;
    for (const auto& [l, m] : mult) {
      std::uint64_t s = 0;
      for (const auto& [d, md] : mult)
        if (l % d == 0) s += std::uint64_t(d) * std::uint64_t(md);
      for (int i = 0; i < m; ++i) commuting *= s;
    }
    total += type_size * commuting;
  });
  return total / factorial_big(n);
}

void check_common(const SearchConfig& config) {
  if (config.n < 1)
    throw std::invalid_argument("search: n must be at least 1");
  if (config.k < 1 || config.k > config.n)
    throw std::invalid_argument(
        "search: k must satisfy 1 <= k <= n (tau must be surjective)");
  if (config.workers < 1)
    throw std::invalid_argument("search: workers must be at least 1");
}

}  // namespace

Transformation canonical_conjugate(const Transformation& t) {
  const int n = t.degree();
  if (n < 1 || n > 8)
    throw std::invalid_argument(
        "canonical_conjugate: degree must be between 1 and 8");
  const auto perms = all_permutations(n);
  std::vector<std::uint16_t> cur(static_cast<std::size_t>(n)), best;
  canonicalize_into(t.raw(), perms, cur, best);
  return Transformation::from_raw(std::move(best));
}

const std::vector<Transformation>& conjugacy_class_reps(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "conjugacy_class_reps: degree must be between 1 and 7");
  static std::mutex mu;
  static std::map<int, std::vector<Transformation>> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, n <= 6 ? reps_by_enumeration(n) : reps_by_shapes(n))
             .first;
  return it->second;
}

std::vector<OutputMap> surjections(int n, int k) {
  if (n < 1) throw std::invalid_argument("surjections: n must be at least 1");
  if (k < 1 || k > n)
    throw std::invalid_argument("surjections: need 1 <= k <= n");
  const BigInt count = factorial_big(k) * stirling2(n, k);
  const BigInt total = boost::multiprecision::pow(BigInt(k), unsigned(n));
  if (count > 100'000'000 || total > 400'000'000)
    throw std::runtime_error("surjections: refusing to materialize " +
                             count.str() + " maps");

  std::vector<OutputMap> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  counts[0] = n;
  int zero_values = k - 1;
  while (true) {
    if (zero_values == 0)
      out.push_back(OutputMap::from_raw(digits, k));
    int j = n - 1;
    for (; j >= 0; --j) {
      const std::uint8_t old = digits[std::size_t(j)];
      if (--counts[old] == 0) ++zero_values;
      if (old + 1 < k) {
        digits[std::size_t(j)] = static_cast<std::uint8_t>(old + 1);
        if (counts[std::size_t(old) + 1]++ == 0) --zero_values;
        break;
      }
      digits[std::size_t(j)] = 0;
      if (counts[0]++ == 0) --zero_values;
    }
    if (j < 0) break;
  }
  return out;
}

SearchResult brute_force(const SearchConfig& config) {
  check_common(config);
  const int n = config.n;
  const int k = config.k;

  // Budget first, from the Burnside class count, so oversized requests are
  // refused with an estimate even when n is past the enumeration bound.
  const BigInt surj_count = factorial_big(k) * stirling2(n, k);
  const BigInt estimate =
      factorial_big(n) * conjugacy_class_count(n) * surj_count;
  if (estimate > config.budget) {
    const BigInt cap = std::numeric_limits<std::uint64_t>::max();
    throw BudgetExceeded(
        estimate > cap ? std::numeric_limits<std::uint64_t>::max()
                       : estimate.convert_to<std::uint64_t>(),
        config.budget);
  }
  if (n > 7)
    throw std::invalid_argument(
        "brute_force: n > 7 would need conjugacy classes beyond degree 7");

  const auto& reps = conjugacy_class_reps(n);
  const auto perms = all_permutations(n);

  const auto node_count = static_cast<std::uint32_t>(pow_u64(k, n));
  std::vector<std::uint32_t> pw(static_cast<std::size_t>(n));
  pw[0] = 1;
  for (int q = 1; q < n; ++q) pw[std::size_t(q)] = pw[std::size_t(q) - 1] * k;

  const auto workers =
      std::max<std::size_t>(1, std::min<std::size_t>(config.workers, reps.size()));
  std::vector<BruteBest> bests(workers);
  std::vector<std::uint64_t> counts(workers, 0);
  if (workers == 1) {
    brute_worker(0, 1, perms, reps, n, k, node_count, pw, bests[0], counts[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          brute_worker(w, workers, perms, reps, n, k, node_count, pw, bests[w],
                       counts[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const BruteBest* win = nullptr;
  for (const auto& b : bests) {
    if (!b.found) continue;
    if (win == nullptr || b.size > win->size ||
        (b.size == win->size &&
         std::tie(b.aidx, b.bidx, b.tidx) <
             std::tie(win->aidx, win->bidx, win->tidx)))
      win = &b;
  }
  if (win == nullptr)
    throw std::logic_error("brute_force: no triple was examined");

  std::uint64_t examined = 0;
  for (const auto c : counts) examined += c;
  return SearchResult{win->size, perms[win->aidx], reps[win->bidx],
                      OutputMap::from_raw(std::vector<std::uint8_t>(win->tau), k),
                      examined};
}

SearchResult random_search(const SearchConfig& config) {
  check_common(config);
  const int n = config.n;
  const int k = config.k;
  if (n > 16)
    throw std::invalid_argument(
        "random_search: n must be at most 16 (packed orbit computation)");
  if (config.iterations < 1)
    throw std::invalid_argument("random_search: iterations must be at least 1");

  struct RandomBest {
    bool found = false;
    std::uint64_t size = 0;
    std::uint64_t iter = 0;
    std::vector<std::uint16_t> alpha, beta;
    std::vector<std::uint8_t> tau;
  };

  const auto workers = static_cast<std::size_t>(
      std::min<std::uint64_t>(std::uint64_t(config.workers), config.iterations));
  std::vector<RandomBest> bests(workers);

  auto run = [&](std::size_t w) {
    const std::uint64_t iters = config.iterations / workers +
                                (w < config.iterations % workers ? 1 : 0);
    std::mt19937_64 rng(derive_seed(config.seed, static_cast<int>(w)));
    RandomBest& best = bests[w];
    std::vector<std::uint16_t> alpha(static_cast<std::size_t>(n)), beta(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> tau(static_cast<std::size_t>(n));
    const std::uint32_t full = (std::uint32_t(1) << k) - 1;
    for (std::uint64_t it = 0; it < iters; ++it) {
      std::iota(alpha.begin(), alpha.end(), std::uint16_t(0));
      for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(bounded(rng, std::uint64_t(i) + 1));
        std::swap(alpha[std::size_t(i)], alpha[j]);
      }
      for (int q = 0; q < n; ++q)
        beta[std::size_t(q)] =
            static_cast<std::uint16_t>(bounded(rng, std::uint64_t(n)));
      std::uint32_t seen = 0;
      do {
        seen = 0;
        for (int q = 0; q < n; ++q) {
          tau[std::size_t(q)] =
              static_cast<std::uint8_t>(bounded(rng, std::uint64_t(k)));
          seen |= std::uint32_t(1) << tau[std::size_t(q)];
        }
      } while (seen != full);

      const TauOrbit orbit =
          tau_orbit({Transformation::from_raw(std::vector<std::uint16_t>(alpha)),
                     Transformation::from_raw(std::vector<std::uint16_t>(beta))},
                    OutputMap::from_raw(std::vector<std::uint8_t>(tau), k));
      const auto size = static_cast<std::uint64_t>(orbit.size());
      if (!best.found || size > best.size) {
        best.found = true;
        best.size = size;
        best.iter = it;
        best.alpha = alpha;
        best.beta = beta;
        best.tau = tau;
      }
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  const RandomBest* win = nullptr;
  for (const auto& b : bests) {
    if (!b.found) continue;
    if (win == nullptr || b.size > win->size) win = &b;
  }
  if (win == nullptr)
    throw std::logic_error("random_search: no sample was drawn");

  std::vector<int> alpha_one(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) alpha_one[std::size_t(q)] = win->alpha[std::size_t(q)] + 1;
  return SearchResult{
      win->size, Permutation(std::span<const int>(alpha_one)),
      Transformation::from_raw(std::vector<std::uint16_t>(win->beta)),
      OutputMap::from_raw(std::vector<std::uint8_t>(win->tau), k),
      config.iterations};
}

bool check_unreachability(int k, int n) {
  SearchConfig config;
  config.n = n;
  config.k = k;
  config.mode = SearchMode::brute;
  return brute_force(config).max_size < pow_u64(std::uint64_t(k), n);
}

V1nScanReport v1n_conjecture_scan(int n) {
  if (n < 2 || n > 8)
    throw std::invalid_argument(
        "v1n_conjecture_scan: validated generating pairs cover 2 <= n <= 8");
  const auto [alpha, beta] = v1_generators(n);
  const std::vector<Transformation> gens{alpha, beta};

  V1nScanReport report;
  report.n = n;
  report.target = std::uint64_t(1) << n;
  for (const OutputMap& tau : surjections(n, 2)) {
    const auto size = static_cast<std::uint64_t>(tau_orbit(gens, tau).size());
    report.orbit_sizes.emplace_back(tau, size);
    if (size == report.target) report.attaining.push_back(tau);
  }
  return report;
}

}  // namespace revsc
