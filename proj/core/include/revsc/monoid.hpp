#ifndef REVSC_MONOID_HPP
#define REVSC_MONOID_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "revsc/output_map.hpp"
#include "revsc/transform.hpp"

namespace revsc {

/// The transformation monoid generated by a set of transformations of a
/// common degree, computed once by breadth-first closure and stored as a
/// sorted list of packed codes (4 bits per image point, so degree <= 16).
class MonoidClosure {
 public:
  int degree() const { return degree_; }
  const std::vector<Transformation>& generators() const { return gens_; }
  std::size_t size() const { return codes_.size(); }

  bool contains(const Transformation& t) const;

  /// Elements in increasing packed-code order. Materializes the whole set;
  /// prefer for_each for large monoids.
  std::vector<Transformation> elements() const;

  /// Calls fn once per element, in increasing packed-code order.
  void for_each(const std::function<void(const Transformation&)>& fn) const;

 private:
  friend MonoidClosure close(std::span<const Transformation> generators);
  MonoidClosure() = default;

  int degree_ = 0;
  std::vector<Transformation> gens_;
  std::vector<std::uint64_t> codes_;  // sorted
};

/// Closure of a nonempty generating set under composition. The identity is
/// always an element (it is the action of the empty word). Degree is
/// limited to 16 by the packed representation; the practical limit is the
/// element count.
MonoidClosure close(std::span<const Transformation> generators);
MonoidClosure close(std::initializer_list<Transformation> generators);

/// The orbit of an output map under precomposition with every element of
/// the monoid generated by `generators`: { tau . s : s in <generators> }.
/// Its size is the state complexity of the reversal of any automaton whose
/// letters act as `generators` and whose output map is `tau`.
class TauOrbit {
 public:
  int degree() const { return degree_; }
  int alphabet_size() const { return k_; }
  std::size_t size() const { return codes_.size(); }

  bool contains(const OutputMap& f) const;
  std::vector<OutputMap> elements() const;
  void for_each(const std::function<void(const OutputMap&)>& fn) const;

 private:
  friend TauOrbit tau_orbit(std::span<const Transformation> generators,
                            const OutputMap& tau);
  TauOrbit() = default;

  int degree_ = 0;
  int k_ = 0;
  std::vector<std::uint64_t> codes_;  // sorted
};

/// Breadth-first orbit of tau under f -> f . a for each generator a,
/// computed without materializing the generated monoid (so it is cheap
/// even when that monoid is huge). Requires matching degrees and k <= 16.
TauOrbit tau_orbit(std::span<const Transformation> generators,
                   const OutputMap& tau);
TauOrbit tau_orbit(std::initializer_list<Transformation> generators,
                   const OutputMap& tau);

/// The full cycle (1 2 ... n).
Permutation n_cycle(int n);

/// The permutation (1 2 ... l)(l+1 ... l+m) around which U_{l,m} is built.
Permutation u_alpha(int l, int m);

/// Membership in U_{l,m}: t (of degree l+m) belongs iff it is a power of
/// u_alpha(l, m), or both
///   (a) the images of {1..l} and of {l+1..l+m} under t intersect, and
///   (b) some point of {l+1..l+m} is missing from the image of t.
bool u_lm_contains(const Transformation& t, int l, int m);

/// |U_{l,m}| by direct enumeration of all (l+m)^(l+m) transformations.
/// Requires l + m <= 8.
std::uint64_t u_lm_size(int l, int m);

/// A generating pair (alpha, beta) for U_{l,m} with alpha = u_alpha(l, m)
/// and beta one of the two published candidates. The chosen beta is
/// validated before being returned: every element of close({alpha, beta})
/// must satisfy u_lm_contains and the closure size must equal
/// u_lm_size(l, m). Requires 1 < l < m, gcd(l, m) = 1, and l + m <= 8
/// (validation enumerates all transformations of degree l+m). Results are
/// cached, so repeated calls are cheap.
std::pair<Permutation, Transformation> u_lm_generators(int l, int m);

/// Membership in V^d_n: t (of degree n) belongs iff it is a power of the
/// n-cycle (1 2 ... n), or t(i) = t(j) for some i != j with j = i + d
/// (mod n). Requires 1 <= d <= n. With d = n the second condition is
/// simply non-injectivity.
bool v_dn_contains(const Transformation& t, int d, int n);

/// |V^d_n| by direct enumeration of all n^n transformations. n <= 8.
std::uint64_t v_dn_size(int d, int n);

/// The generating pair (alpha_n, beta_n) realizing the largest known
/// 2-generated transformation monoid of degree n, for 2 <= n <= 6.
/// alpha_n is the n-cycle.
std::pair<Permutation, Transformation> v_n_generators(int n);

/// A validated generating pair for V^1_n, 2 <= n <= 8: the closure of the
/// returned pair is checked to consist of exactly the transformations
/// accepted by v_dn_contains(., 1, n). Cached like u_lm_generators.
std::pair<Permutation, Transformation> v1_generators(int n);

/// Generators of the full transformation monoid on n points.
struct FullTmGenerators {
  Permutation cycle;            // (1 2 ... n)
  Permutation swap;             // (1 2)
  Transformation collapse;      // 1 -> 2, all else fixed
  std::vector<Transformation> list() const { return {cycle, swap, collapse}; }
};

/// The classical three-element generating set of T_n. For n <= 2 some of
/// the three coincide; the set still generates.
FullTmGenerators full_tm_generators(int n);

}  // namespace revsc

#endif  // REVSC_MONOID_HPP
