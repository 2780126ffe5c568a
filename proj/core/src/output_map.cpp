#include "revsc/output_map.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace revsc {

OutputMap::OutputMap(std::span<const int> outputs_one_based, int k) : k_(k) {
  if (outputs_one_based.empty() || outputs_one_based.size() > 65535)
    throw std::invalid_argument("output map degree outside 1..65535");
  if (k < 1 || k > 255)
    throw std::invalid_argument("output alphabet size outside 1..255");
  values_.reserve(outputs_one_based.size());
  for (int v : outputs_one_based) {
    if (v < 1 || v > k)
      throw std::invalid_argument("output value outside 1..k");
    values_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

bool OutputMap::is_surjective() const {
  std::uint64_t mask[4] = {0, 0, 0, 0};
  for (std::uint8_t v : values_) mask[v >> 6] |= std::uint64_t{1} << (v & 63);
  int r = 0;
  for (std::uint64_t w : mask) r += std::popcount(w);
  return r == k_;
}

std::string OutputMap::to_list() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t q = 0; q < values_.size(); ++q) {
    if (q) os << ',';
    os << int(values_[q]) + 1;
  }
  os << ']';
  return os.str();
}

OutputMap compose(const OutputMap& tau, const Transformation& t) {
  if (tau.degree() != t.degree())
    throw std::invalid_argument("compose: degree mismatch");
  OutputMap out;
  out.k_ = tau.k_;
  out.values_.resize(tau.values_.size());
  auto traw = t.raw();
  for (std::size_t q = 0; q < out.values_.size(); ++q)
    out.values_[q] = tau.values_[traw[q]];
  return out;
}

}  // namespace revsc
