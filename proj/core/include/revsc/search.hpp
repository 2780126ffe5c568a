#ifndef REVSC_SEARCH_HPP
#define REVSC_SEARCH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revsc/output_map.hpp"
#include "revsc/transform.hpp"

namespace revsc {

enum class SearchMode { brute, random };

/// Parameters of a maximum-|tau M| search over machines with n states,
/// 2 input letters and k output values.
struct SearchConfig {
  int n = 0;
  int k = 0;
  SearchMode mode = SearchMode::brute;
  std::uint64_t iterations = 0;  // random mode: number of sampled triples
  std::uint64_t seed = 0;        // random mode: master seed
  int workers = 1;
  std::uint64_t budget = 1'000'000'000;  // brute mode: max triples examined
};

struct SearchResult {
  std::uint64_t max_size = 0;
  Permutation witness_alpha;
  Transformation witness_beta;
  OutputMap witness_tau;
  std::uint64_t triples_examined = 0;
};

/// Thrown when a brute-force search would examine more triples than the
/// configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimated_triples, std::uint64_t budget)
      : std::runtime_error(
            "search budget exceeded: the configuration would examine " +
            std::to_string(estimated_triples) + " triples, budget is " +
            std::to_string(budget)),
        estimated_(estimated_triples),
        budget_(budget) {}
  std::uint64_t estimated_triples() const { return estimated_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t estimated_;
  std::uint64_t budget_;
};

/// The lexicographically least image array among all conjugates g.t.g^-1.
/// Conjugation-invariant, so it identifies the conjugacy class of t.
/// Requires degree <= 8 (minimizes over all degree! permutations).
Transformation canonical_conjugate(const Transformation& t);

/// Exactly one representative (the canonical form) per conjugacy class of
/// the full transformation monoid on n points, in increasing image-array
/// order. Computed once per n and cached. Requires n <= 7; degrees up to 6
/// canonicalize all n^n maps directly, degree 7 enumerates the shapes of
/// functional graphs instead.
const std::vector<Transformation>& conjugacy_class_reps(int n);

/// All surjective output maps {1..n} -> {1..k} in increasing image-array
/// order. Requires k <= n; refuses to materialize more than 10^8 maps.
std::vector<OutputMap> surjections(int n, int k);

/// Exhaustive search for the largest |tau M| where M is generated by a
/// pair (alpha, beta): alpha ranges over all permutations, beta over
/// conjugacy class representatives, tau over surjections. Deterministic:
/// among maximizers, the one least in (alpha index, beta index, tau index)
/// wins, regardless of worker count. Throws BudgetExceeded if the triple
/// count exceeds config.budget.
SearchResult brute_force(const SearchConfig& config);

/// Random search: `iterations` independent samples of (uniform random
/// permutation, uniform random transformation, uniform random surjection).
/// Reproducible for fixed (seed, workers): each worker derives its own
/// generator from the master seed and its index.
SearchResult random_search(const SearchConfig& config);

/// True iff the k^n upper bound is NOT attained by any 2-letter machine
/// in the reduced search space: brute_force maximum < k^n.
bool check_unreachability(int k, int n);

/// Orbit sizes of every surjective 2-valued output map under a validated
/// generating pair of V^1_n.
struct V1nScanReport {
  int n = 0;
  std::uint64_t target = 0;  // 2^n
  /// One entry per surjective tau, in surjections(n, 2) order.
  std::vector<std::pair<OutputMap, std::uint64_t>> orbit_sizes;
  /// The tau whose orbit attains the 2^n target.
  std::vector<OutputMap> attaining;
};

/// Computes |tau V^1_n| for every surjective tau: {1..n} -> {1,2} and
/// reports which attain the 2^n maximum. Requires 2 <= n <= 8 (the
/// generating pair must be validated by enumeration; see v1_generators).
V1nScanReport v1n_conjecture_scan(int n);

}  // namespace revsc

#endif  // REVSC_SEARCH_HPP
