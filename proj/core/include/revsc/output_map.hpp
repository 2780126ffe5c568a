#ifndef REVSC_OUTPUT_MAP_HPP
#define REVSC_OUTPUT_MAP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revsc/transform.hpp"

namespace revsc {

/// A function from the states {1,...,n} to the output alphabet {1,...,k}.
/// For k = 2 this is the characteristic function of a final-state set.
class OutputMap {
 public:
  /// Builds from 1-based output values; k is the output-alphabet size.
  OutputMap(std::span<const int> outputs_one_based, int k);
  OutputMap(std::initializer_list<int> outputs_one_based, int k)
      : OutputMap(std::span<const int>(outputs_one_based.begin(),
                                       outputs_one_based.size()),
                  k) {}

  /// Unchecked construction from 0-based values; for hot paths that have
  /// already validated or computed the entries.
  static OutputMap from_raw(std::vector<std::uint8_t> values_zero_based,
                            int k) {
    OutputMap f;
    f.values_ = std::move(values_zero_based);
    f.k_ = k;
    return f;
  }

  int degree() const { return static_cast<int>(values_.size()); }
  int alphabet_size() const { return k_; }

  /// Output value of the 1-based state q.
  int operator()(int q) const { return values_[q - 1] + 1; }

  /// True iff every value in 1..k is attained.
  bool is_surjective() const;

  /// List notation, e.g. "[1,2,1,2,3]".
  std::string to_list() const;

  auto operator<=>(const OutputMap&) const = default;

  /// 0-based raw values.
  std::span<const std::uint8_t> raw() const { return values_; }

 private:
  friend OutputMap compose(const OutputMap&, const Transformation&);
  OutputMap() = default;

  std::vector<std::uint8_t> values_;
  int k_ = 0;
};

/// (tau . t)(q) = tau(t(q)). Degrees must match.
OutputMap compose(const OutputMap& tau, const Transformation& t);

}  // namespace revsc

#endif  // REVSC_OUTPUT_MAP_HPP
