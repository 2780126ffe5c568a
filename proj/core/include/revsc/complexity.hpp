#ifndef REVSC_COMPLEXITY_HPP
#define REVSC_COMPLEXITY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "revsc/output_map.hpp"

namespace revsc {

/// Exact arbitrary-width integer, so no count ever silently overflows.
using BigInt = boost::multiprecision::cpp_int;

/// Stirling number of the second kind: partitions of an l-set into i
/// nonempty blocks. S(0,0) = 1; zero when i > l or when l > 0 and i = 0.
BigInt stirling2(int l, int i);

/// Number of functions f from {1..l+m} to {1..k} whose images of {1..l}
/// and of {l+1..l+m} are disjoint:
///   F(k,l,m) = sum_{i=1..l} C(k,i) i! S(l,i) (k-i)^m.
BigInt formula_F(int k, int l, int m);

/// Orbit size of the witness output map under the part-wise rotation
/// (1..l)(l+1..l+m): lcm(l,m) if k >= 4, m if k = 3, 1 if k = 2.
std::uint64_t formula_G(int k, int l, int m);

/// |tau U_{l,m}| for the witness tau: k^n - F(k,l,m) + G(k,l,m) with
/// n = l+m. Requires 2 <= k < n and 1 <= l <= m.
BigInt tau_ulm_size(int k, int l, int m);

/// A reversal state-complexity bound together with the split achieving it.
struct SplitBound {
  BigInt value;
  int l = 0;
  int m = 0;
};

/// max{ tau_ulm_size(k,l,m) : l+m = n, 1 < l < m, gcd(l,m) = 1 }, i.e. the
/// best bound achievable with a 2-letter alphabet via the U_{l,m} family.
/// Requires 2 <= k < n and that n admits at least one such split (every
/// n >= 5 except 6 does); throws std::invalid_argument otherwise.
SplitBound corollary_lower_bound(int k, int n);

/// The explicit witness output map on {1..l+m}: surjective onto {1..k},
/// mapping {1..l} and {l+1..l+m} to disjoint value sets, identifying two
/// points of the second part, and having orbit size formula_G(k,l,m)
/// under the part-wise rotation. Requires 2 <= k < l+m and 1 <= l <= m.
OutputMap lemma_tau(int k, int l, int m);

/// The four defining properties of lemma_tau, checked one by one.
struct LemmaTauReport {
  bool surjective = false;
  bool parts_disjoint = false;       // value sets of the two parts disjoint
  bool second_part_collision = false;  // two points of {l+1..n} identified
  bool alpha_orbit_size_matches = false;  // orbit size == formula_G(k,l,m)

  bool all() const {
    return surjective && parts_disjoint && second_part_collision &&
           alpha_orbit_size_matches;
  }
};

/// Checks the four lemma_tau properties for an arbitrary output map.
LemmaTauReport verify_lemma_tau(const OutputMap& tau, int k, int l, int m);

}  // namespace revsc

#endif  // REVSC_COMPLEXITY_HPP
