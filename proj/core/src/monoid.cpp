#include "revsc/monoid.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace revsc {
namespace {

// Packed representation: image point q (0-based) occupies bits 4q..4q+3,
// so any function {1..n} -> {1..r} with n, r <= 16 fits one uint64.

template <typename T>
std::uint64_t pack(std::span<const T> values) {
  std::uint64_t code = 0;
  for (std::size_t q = 0; q < values.size(); ++q)
    code |= static_cast<std::uint64_t>(values[q]) << (4 * q);
  return code;
}

template <typename T>
std::vector<T> unpack(std::uint64_t code, int n) {
  std::vector<T> values(n);
  for (int q = 0; q < n; ++q)
    values[q] = static_cast<T>((code >> (4 * q)) & 0xF);
  return values;
}

// (x . g)(q) = x(g(q)) for packed x and a generator given by raw images.
std::uint64_t compose_packed(std::uint64_t x,
                             std::span<const std::uint16_t> g) {
  std::uint64_t out = 0;
  for (std::size_t q = 0; q < g.size(); ++q)
    out |= ((x >> (4 * g[q])) & 0xFull) << (4 * q);
  return out;
}

// r^n saturating just above cap, to keep the dense-table decision safe.
std::uint64_t pow_capped(std::uint64_t r, int n, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) {
    if (r > 1 && v > cap / r) return cap + 1;
    v *= r;
  }
  return v;
}

struct U64Hash {
  std::size_t operator()(std::uint64_t x) const {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

// Largest dense visited table: 2^29 bits = 64 MB as vector<bool>.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 29;

// Breadth-first closure of `seed` under x -> x . g for each generator,
// over functions with n points and values in 0..radix-1. Returns sorted
// packed codes. Uses a dense bit table when radix^n is small enough, and
// a hash set otherwise.
std::vector<std::uint64_t> packed_closure(
    std::uint64_t seed, std::span<const std::vector<std::uint16_t>> gens,
    int n, std::uint64_t radix) {
  std::vector<std::uint64_t> out;
  const std::uint64_t space = pow_capped(radix, n, kDenseLimit);
  if (space <= kDenseLimit) {
    // Rank = value of the digit string in base `radix`.
    std::uint64_t pw[16];
    std::uint64_t p = 1;
    for (int q = 0; q < n; ++q, p *= radix) pw[q] = p;
    auto rank = [&](std::uint64_t code) {
      std::uint64_t idx = 0;
      for (int q = 0; q < n; ++q) idx += ((code >> (4 * q)) & 0xF) * pw[q];
      return idx;
    };
    std::vector<bool> visited(space, false);
    visited[rank(seed)] = true;
    out.push_back(seed);
    for (std::size_t head = 0; head < out.size(); ++head) {
      const std::uint64_t x = out[head];
      for (const auto& g : gens) {
        const std::uint64_t y = compose_packed(x, g);
        const std::uint64_t r = rank(y);
        if (!visited[r]) {
          visited[r] = true;
          out.push_back(y);
        }
      }
    }
  } else {
    std::unordered_set<std::uint64_t, U64Hash> visited;
    visited.insert(seed);
    out.push_back(seed);
    for (std::size_t head = 0; head < out.size(); ++head) {
      const std::uint64_t x = out[head];
      for (const auto& g : gens)
        if (const std::uint64_t y = compose_packed(x, g);
            visited.insert(y).second)
          out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint16_t>> raw_copies(
    std::span<const Transformation> gens) {
  std::vector<std::vector<std::uint16_t>> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens)
    raw.emplace_back(g.raw().begin(), g.raw().end());
  return raw;
}

std::uint64_t identity_code(int n) {
  std::uint64_t code = 0;
  for (int q = 0; q < n; ++q)
    code |= static_cast<std::uint64_t>(q) << (4 * q);
  return code;
}

void require_packable_degree(int n, const char* who) {
  if (n > 16)
    throw std::invalid_argument(std::string(who) +
                                ": degree > 16 is not supported");
}

// Sorted packed codes of all powers of alpha (identity included).
std::vector<std::uint64_t> power_codes(const Permutation& alpha) {
  std::vector<std::uint64_t> codes;
  Transformation p = Transformation::identity(alpha.degree());
  do {
    codes.push_back(pack(p.raw()));
    p = compose(p, alpha);
  } while (pack(p.raw()) != codes.front());
  std::sort(codes.begin(), codes.end());
  return codes;
}

// Membership in U_{l,m} for a packed transformation, with the alpha powers
// precomputed. Bit b of a mask records that value b is in the image.
bool u_contains_packed(std::uint64_t code, int l, int n,
                       const std::vector<std::uint64_t>& alpha_powers) {
  std::uint32_t lower = 0, upper = 0;
  for (int q = 0; q < l; ++q) lower |= 1u << ((code >> (4 * q)) & 0xF);
  for (int q = l; q < n; ++q) upper |= 1u << ((code >> (4 * q)) & 0xF);
  const std::uint32_t upper_points =
      ((1u << n) - 1) & ~((1u << l) - 1);
  if ((lower & upper) != 0 && (upper_points & ~(lower | upper)) != 0)
    return true;
  return std::binary_search(alpha_powers.begin(), alpha_powers.end(), code);
}

// Membership in V^d_n for a packed transformation. See v_dn_contains.
bool v_contains_packed(std::uint64_t code, int d, int n) {
  const int s = static_cast<int>(code & 0xF);
  bool rotation = true;
  for (int q = 0; q < n && rotation; ++q)
    rotation = ((code >> (4 * q)) & 0xF) ==
               static_cast<std::uint64_t>((q + s) % n);
  if (rotation) return true;
  if (d == n) {
    std::uint32_t image = 0;
    int distinct = 0;
    for (int q = 0; q < n; ++q) {
      const std::uint32_t bit = 1u << ((code >> (4 * q)) & 0xF);
      distinct += (image & bit) == 0;
      image |= bit;
    }
    return distinct < n;
  }
  for (int i = 0; i < n; ++i) {
    const int j = (i + d) % n;
    if (((code >> (4 * i)) & 0xF) == ((code >> (4 * j)) & 0xF)) return true;
  }
  return false;
}

// Runs fn(code) for every function {1..n} -> {1..n}, n <= 8.
template <typename Fn>
void for_each_function_code(int n, Fn&& fn) {
  std::vector<std::uint16_t> img(n, 0);
  while (true) {
    fn(pack(std::span<const std::uint16_t>(img)));
    int q = 0;
    while (q < n && ++img[q] == n) {
      img[q] = 0;
      ++q;
    }
    if (q == n) break;
  }
}

void require_enumerable_degree(int n, const char* who) {
  if (n < 1 || n > 8)
    throw std::invalid_argument(std::string(who) +
                                ": enumeration requires degree 1..8");
}

}  // namespace

bool MonoidClosure::contains(const Transformation& t) const {
  if (t.degree() != degree_)
    throw std::invalid_argument("contains: degree mismatch");
  return std::binary_search(codes_.begin(), codes_.end(), pack(t.raw()));
}

std::vector<Transformation> MonoidClosure::elements() const {
  std::vector<Transformation> out;
  out.reserve(codes_.size());
  for (std::uint64_t code : codes_)
    out.push_back(Transformation::from_raw(unpack<std::uint16_t>(code, degree_)));
  return out;
}

void MonoidClosure::for_each(
    const std::function<void(const Transformation&)>& fn) const {
  for (std::uint64_t code : codes_)
    fn(Transformation::from_raw(unpack<std::uint16_t>(code, degree_)));
}

MonoidClosure close(std::span<const Transformation> generators) {
  if (generators.empty())
    throw std::invalid_argument("close: empty generator list");
  const int n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw std::invalid_argument("close: generators of unequal degree");
  require_packable_degree(n, "close");

  MonoidClosure mc;
  mc.degree_ = n;
  mc.gens_.assign(generators.begin(), generators.end());
  mc.codes_ = packed_closure(identity_code(n), raw_copies(generators), n,
                             static_cast<std::uint64_t>(n));
  return mc;
}

MonoidClosure close(std::initializer_list<Transformation> generators) {
  return close(std::span<const Transformation>(generators.begin(),
                                               generators.size()));
}

bool TauOrbit::contains(const OutputMap& f) const {
  if (f.degree() != degree_ || f.alphabet_size() != k_)
    throw std::invalid_argument("contains: degree or alphabet mismatch");
  return std::binary_search(codes_.begin(), codes_.end(), pack(f.raw()));
}

std::vector<OutputMap> TauOrbit::elements() const {
  std::vector<OutputMap> out;
  out.reserve(codes_.size());
  for (std::uint64_t code : codes_)
    out.push_back(OutputMap::from_raw(unpack<std::uint8_t>(code, degree_), k_));
  return out;
}

void TauOrbit::for_each(
    const std::function<void(const OutputMap&)>& fn) const {
  for (std::uint64_t code : codes_)
    fn(OutputMap::from_raw(unpack<std::uint8_t>(code, degree_), k_));
}

TauOrbit tau_orbit(std::span<const Transformation> generators,
                   const OutputMap& tau) {
  const int n = tau.degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw std::invalid_argument("tau_orbit: degree mismatch");
  require_packable_degree(n, "tau_orbit");
  if (tau.alphabet_size() > 16)
    throw std::invalid_argument(
        "tau_orbit: output alphabets > 16 are not supported");

  TauOrbit orbit;
  orbit.degree_ = n;
  orbit.k_ = tau.alphabet_size();
  orbit.codes_ =
      packed_closure(pack(tau.raw()), raw_copies(generators), n,
                     static_cast<std::uint64_t>(tau.alphabet_size()));
  return orbit;
}

TauOrbit tau_orbit(std::initializer_list<Transformation> generators,
                   const OutputMap& tau) {
  return tau_orbit(
      std::span<const Transformation>(generators.begin(), generators.size()),
      tau);
}

Permutation u_alpha(int l, int m) {
  if (l < 1 || m < 1 || l + m > 255)
    throw std::invalid_argument("u_alpha: parts must be >= 1, l+m <= 255");
  const int n = l + m;
  std::vector<int> img(n);
  for (int q = 1; q < l; ++q) img[q - 1] = q + 1;
  img[l - 1] = 1;
  for (int q = l + 1; q < n; ++q) img[q - 1] = q + 1;
  img[n - 1] = l + 1;
  return Permutation(img);
}

bool u_lm_contains(const Transformation& t, int l, int m) {
  if (l < 1 || m < 1)
    throw std::invalid_argument("u_lm_contains: parts must be >= 1");
  const int n = l + m;
  if (t.degree() != n)
    throw std::invalid_argument("u_lm_contains: degree mismatch");
  require_packable_degree(n, "u_lm_contains");
  return u_contains_packed(pack(t.raw()), l, n, power_codes(u_alpha(l, m)));
}

std::uint64_t u_lm_size(int l, int m) {
  if (l < 1 || m < 1)
    throw std::invalid_argument("u_lm_size: parts must be >= 1");
  const int n = l + m;
  require_enumerable_degree(n, "u_lm_size");
  const auto powers = power_codes(u_alpha(l, m));
  std::uint64_t count = 0;
  for_each_function_code(n, [&](std::uint64_t code) {
    count += u_contains_packed(code, l, n, powers);
  });
  return count;
}

namespace {

// The two published beta candidates: the identity except 1 -> l+1 and
// n -> 1, the second variant additionally exchanging the images of 2 and 3.
Transformation u_beta_candidate(int l, int m, bool swap23) {
  const int n = l + m;
  std::vector<int> img(n);
  for (int q = 2; q < n; ++q) img[q - 1] = q;
  img[0] = l + 1;
  img[n - 1] = 1;
  if (swap23) {
    img[1] = 3;
    img[2] = 2;
  }
  return Transformation(img);
}

}  // namespace

std::pair<Permutation, Transformation> u_lm_generators(int l, int m) {
  if (!(1 < l && l < m))
    throw std::invalid_argument("u_lm_generators: requires 1 < l < m");
  if (std::gcd(l, m) != 1)
    throw std::invalid_argument("u_lm_generators: requires gcd(l,m) = 1");
  const int n = l + m;
  require_enumerable_degree(n, "u_lm_generators");

  static std::mutex mu;
  static std::map<std::pair<int, int>,
                  std::pair<Permutation, Transformation>>
      cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find({l, m}); it != cache.end()) return it->second;

  const Permutation alpha = u_alpha(l, m);
  const auto powers = power_codes(alpha);
  const std::uint64_t want = u_lm_size(l, m);
  for (bool swap23 : {false, true}) {
    const Transformation beta = u_beta_candidate(l, m, swap23);
    std::vector<std::vector<std::uint16_t>> gens;
    gens.emplace_back(alpha.raw().begin(), alpha.raw().end());
    gens.emplace_back(beta.raw().begin(), beta.raw().end());
    const auto codes = packed_closure(identity_code(n), gens, n,
                                      static_cast<std::uint64_t>(n));
    if (codes.size() != want) continue;
    const bool all_members =
        std::all_of(codes.begin(), codes.end(), [&](std::uint64_t c) {
          return u_contains_packed(c, l, n, powers);
        });
    if (!all_members) continue;
    auto result = std::pair(alpha, beta);
    cache.emplace(std::pair(l, m), result);
    return result;
  }
  throw std::runtime_error(
      "u_lm_generators: neither candidate pair generates U_{" +
      std::to_string(l) + "," + std::to_string(m) + "}");
}

bool v_dn_contains(const Transformation& t, int d, int n) {
  if (t.degree() != n)
    throw std::invalid_argument("v_dn_contains: degree mismatch");
  if (d < 1 || d > n)
    throw std::invalid_argument("v_dn_contains: requires 1 <= d <= n");
  require_packable_degree(n, "v_dn_contains");
  return v_contains_packed(pack(t.raw()), d, n);
}

std::uint64_t v_dn_size(int d, int n) {
  require_enumerable_degree(n, "v_dn_size");
  if (d < 1 || d > n)
    throw std::invalid_argument("v_dn_size: requires 1 <= d <= n");
  std::uint64_t count = 0;
  for_each_function_code(
      n, [&](std::uint64_t code) { count += v_contains_packed(code, d, n); });
  return count;
}

Permutation n_cycle(int n) {
  if (n < 1 || n > 255)
    throw std::invalid_argument("n_cycle: degree outside 1..255");
  std::vector<int> img(n);
  for (int q = 1; q < n; ++q) img[q - 1] = q + 1;
  img[n - 1] = 1;
  return Permutation(img);
}

std::pair<Permutation, Transformation> v_n_generators(int n) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("v_n_generators: requires 2 <= n <= 6");
  static const std::vector<std::vector<int>> betas = {
      {1, 1},
      {1, 1, 3},
      {1, 1, 4, 3},
      {1, 1, 4, 5, 3},
      {1, 4, 1, 5, 6, 2},
  };
  return {n_cycle(n), Transformation(betas[n - 2])};
}

std::pair<Permutation, Transformation> v1_generators(int n) {
  if (n < 2)
    throw std::invalid_argument("v1_generators: requires n >= 2");
  require_enumerable_degree(n, "v1_generators");

  static std::mutex mu;
  static std::map<int, std::pair<Permutation, Transformation>> cache;
  std::scoped_lock lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Candidates: the generator used for the largest monoids up to degree 5
  // extended to higher degrees ([1,1,4,5,...,n,3]), then the plain
  // collapse-2-to-1 map.
  std::vector<std::vector<int>> candidates;
  if (n == 2) {
    candidates.push_back({1, 1});
  } else if (n == 3) {
    candidates.push_back({1, 1, 3});
  } else {
    std::vector<int> c1(n);
    c1[0] = 1;
    c1[1] = 1;
    for (int q = 3; q < n; ++q) c1[q - 1] = q + 1;
    c1[n - 1] = 3;
    candidates.push_back(std::move(c1));
    std::vector<int> c2(n);
    c2[0] = 1;
    c2[1] = 1;
    for (int q = 3; q <= n; ++q) c2[q - 1] = q;
    candidates.push_back(std::move(c2));
  }

  const Permutation alpha = n_cycle(n);
  const std::uint64_t want = v_dn_size(1, n);
  for (const auto& img : candidates) {
    const Transformation beta(img);
    std::vector<std::vector<std::uint16_t>> gens;
    gens.emplace_back(alpha.raw().begin(), alpha.raw().end());
    gens.emplace_back(beta.raw().begin(), beta.raw().end());
    const auto codes = packed_closure(identity_code(n), gens, n,
                                      static_cast<std::uint64_t>(n));
    if (codes.size() != want) continue;
    const bool all_members =
        std::all_of(codes.begin(), codes.end(), [&](std::uint64_t c) {
          return v_contains_packed(c, 1, n);
        });
    if (!all_members) continue;
    auto result = std::pair(alpha, beta);
    cache.emplace(n, result);
    return result;
  }
  throw std::runtime_error("v1_generators: no validated generating pair for n=" +
                           std::to_string(n));
}

FullTmGenerators full_tm_generators(int n) {
  if (n < 1 || n > 255)
    throw std::invalid_argument("full_tm_generators: degree outside 1..255");
  if (n == 1) {
    return {Permutation::identity(1), Permutation::identity(1),
            Transformation::identity(1)};
  }
  std::vector<int> swap_img(n), collapse_img(n);
  for (int q = 1; q <= n; ++q) swap_img[q - 1] = collapse_img[q - 1] = q;
  swap_img[0] = 2;
  swap_img[1] = 1;
  collapse_img[0] = 2;
  return {n_cycle(n), Permutation(swap_img), Transformation(collapse_img)};
}

}  // namespace revsc
