#include "revsc/complexity.hpp"

#include <bitset>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "revsc/monoid.hpp"
#include "revsc/transform.hpp"

namespace revsc {
namespace {

BigInt binomial(int k, int i) {
  if (i < 0 || i > k) return 0;
  BigInt v = 1;
  for (int j = 1; j <= i; ++j) {
    v *= k - i + j;
    v /= j;
  }
  return v;
}

BigInt factorial(int i) {
  BigInt v = 1;
  for (int j = 2; j <= i; ++j) v *= j;
  return v;
}

void check_parts(int k, int l, int m, const char* who) {
  if (k < 2)
    throw std::invalid_argument(std::string(who) + ": requires k >= 2");
  if (l < 1 || m < 1)
    throw std::invalid_argument(std::string(who) + ": requires l, m >= 1");
}

}  // namespace

BigInt stirling2(int l, int i) {
  if (l < 0 || i < 0)
    throw std::invalid_argument("stirling2: negative argument");
  if (i > l) return 0;
  if (l == 0) return 1;  // S(0,0)
  if (i == 0) return 0;
  // Row-by-row recurrence S(r,c) = c S(r-1,c) + S(r-1,c-1).
  std::vector<BigInt> row(i + 1, 0);
  row[0] = 1;  // row for l = 0
  for (int r = 1; r <= l; ++r) {
    for (int c = std::min(r, i); c >= 1; --c) row[c] = c * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[i];
}

BigInt formula_F(int k, int l, int m) {
  check_parts(k, l, m, "formula_F");
  BigInt sum = 0;
  for (int i = 1; i <= l; ++i) {
    if (i > k) break;  // C(k,i) = 0 beyond this point
    sum += binomial(k, i) * factorial(i) * stirling2(l, i) *
           pow(BigInt(k - i), static_cast<unsigned>(m));
  }
  return sum;
}

std::uint64_t formula_G(int k, int l, int m) {
  check_parts(k, l, m, "formula_G");
  if (k >= 4) return static_cast<std::uint64_t>(std::lcm(l, m));
  if (k == 3) return static_cast<std::uint64_t>(m);
  return 1;
}

BigInt tau_ulm_size(int k, int l, int m) {
  check_parts(k, l, m, "tau_ulm_size");
  const int n = l + m;
  if (l > m)
    throw std::invalid_argument("tau_ulm_size: requires l <= m");
  if (k >= n)
    throw std::invalid_argument("tau_ulm_size: requires k < l+m");
  return pow(BigInt(k), static_cast<unsigned>(n)) - formula_F(k, l, m) +
         formula_G(k, l, m);
}

SplitBound corollary_lower_bound(int k, int n) {
  if (k < 2)
    throw std::invalid_argument("corollary_lower_bound: requires k >= 2");
  if (k >= n)
    throw std::invalid_argument("corollary_lower_bound: requires k < n");
  SplitBound best;
  for (int l = 2; 2 * l < n; ++l) {
    const int m = n - l;
    if (std::gcd(l, m) != 1) continue;
    BigInt value = tau_ulm_size(k, l, m);
    if (best.l == 0 || value > best.value) best = {std::move(value), l, m};
  }
  if (best.l == 0)
    throw std::invalid_argument(
        "corollary_lower_bound: no split l+m = " + std::to_string(n) +
        " with 1 < l < m and gcd(l,m) = 1 exists");
  return best;
}

OutputMap lemma_tau(int k, int l, int m) {
  check_parts(k, l, m, "lemma_tau");
  const int n = l + m;
  if (l > m) throw std::invalid_argument("lemma_tau: requires l <= m");
  if (k >= n) throw std::invalid_argument("lemma_tau: requires k < l+m");

  std::vector<int> out(n);
  if (k == 2) {
    for (int i = 1; i <= l; ++i) out[i - 1] = 1;
    for (int i = l + 1; i <= n; ++i) out[i - 1] = 2;
  } else if (l == 2 && m == 2) {
    out = {1, 2, 3, 3};  // k = 3 is forced here by k < 4
  } else if (k - 2 >= l) {
    // First part maps to {1..l} pointwise; second part walks up through
    // {l+1..k} and then repeats k.
    for (int i = 1; i <= l; ++i) out[i - 1] = i;
    const int j = k - l;
    for (int i = 1; i <= j; ++i) out[l + i - 1] = l + i;
    for (int i = j + 1; i <= m; ++i) out[l + i - 1] = k;
  } else {
    // First part walks up through {1..k-2} and then repeats k-2; second
    // part takes k-1 once and k everywhere else.
    for (int i = 1; i <= k - 2; ++i) out[i - 1] = i;
    for (int i = k - 1; i <= l; ++i) out[i - 1] = k - 2;
    out[l] = k - 1;
    for (int i = 2; i <= m; ++i) out[l + i - 1] = k;
  }
  return OutputMap(out, k);
}

LemmaTauReport verify_lemma_tau(const OutputMap& tau, int k, int l, int m) {
  check_parts(k, l, m, "verify_lemma_tau");
  const int n = l + m;
  if (tau.degree() != n || tau.alphabet_size() != k)
    throw std::invalid_argument("verify_lemma_tau: degree or alphabet mismatch");

  LemmaTauReport report;
  report.surjective = tau.is_surjective();

  std::bitset<256> first, second;
  for (int q = 1; q <= l; ++q) first.set(tau(q));
  for (int q = l + 1; q <= n; ++q) second.set(tau(q));
  report.parts_disjoint = (first & second).none();

  report.second_part_collision = false;
  for (int p = l + 1; p <= n && !report.second_part_collision; ++p)
    for (int p2 = p + 1; p2 <= n; ++p2)
      if (tau(p) == tau(p2)) {
        report.second_part_collision = true;
        break;
      }

  // The orbit under the cyclic group generated by alpha is a single cycle,
  // so its size is the least positive i with tau . alpha^i = tau.
  const Permutation alpha = u_alpha(l, m);
  OutputMap f = compose(tau, alpha);
  std::uint64_t period = 1;
  while (f != tau) {
    f = compose(f, alpha);
    ++period;
  }
  report.alpha_orbit_size_matches = period == formula_G(k, l, m);
  return report;
}

}  // namespace revsc
