#ifndef REVSC_TRANSFORM_HPP
#define REVSC_TRANSFORM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace revsc {

/// A total function on the states {1,...,n}, stored as a dense image array.
///
/// States are 1-based everywhere in the public interface and in the textual
/// notations; the internal encoding is 0-based. Values are immutable after
/// construction and safe to share between threads.
class Transformation {
 public:
  /// Builds from 1-based images: entry q-1 is t(q). Throws
  /// std::invalid_argument if an entry is outside 1..n.
  explicit Transformation(std::span<const int> images_one_based);
  Transformation(std::initializer_list<int> images_one_based)
      : Transformation(std::span<const int>(images_one_based.begin(),
                                            images_one_based.size())) {}

  static Transformation identity(int degree);

  /// Unchecked construction from 0-based images; for hot paths that have
  /// already validated or computed the entries.
  static Transformation from_raw(std::vector<std::uint16_t> images_zero_based) {
    return Transformation(RawTag{}, std::move(images_zero_based));
  }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of the 1-based state q.
  int operator()(int q) const { return images_[q - 1] + 1; }

  /// Size of the image set {t(q) : q in Q}; degree() iff this is a bijection.
  int rank() const;

  bool is_permutation() const { return rank() == degree(); }

  /// List notation, e.g. "[1,4,3,5,2,2,3]".
  std::string to_list() const;

  auto operator<=>(const Transformation&) const = default;

  /// 0-based raw images, for hot paths and packing.
  std::span<const std::uint16_t> raw() const { return images_; }

 protected:
  struct RawTag {};
  Transformation(RawTag, std::vector<std::uint16_t> images_zero_based)
      : images_(std::move(images_zero_based)) {}

  std::vector<std::uint16_t> images_;
};

/// A bijective Transformation. The constructor additionally checks that all
/// entries are distinct.
class Permutation : public Transformation {
 public:
  explicit Permutation(std::span<const int> images_one_based);
  Permutation(std::initializer_list<int> images_one_based)
      : Permutation(std::span<const int>(images_one_based.begin(),
                                         images_one_based.size())) {}
  /// Checked conversion; throws if t is not bijective.
  explicit Permutation(const Transformation& t);

  static Permutation identity(int degree);

  Permutation inverse() const;

  /// Disjoint cycle notation with fixed points omitted, "()" for identity.
  std::string to_cycles() const;
};

/// Function composition: result(q) = s(t(q)). Degrees must match.
Transformation compose(const Transformation& s, const Transformation& t);
Permutation compose(const Permutation& s, const Permutation& t);

/// g . t . g^-1, the relabeling of t by the permutation g.
Transformation conjugate(const Transformation& t, const Permutation& g);

/// Least i >= 1 with p^i = identity; the lcm of the cycle lengths.
std::uint64_t permutation_order(const Permutation& p);

/// p composed with itself e times; p^0 is the identity.
Permutation permutation_power(const Permutation& p, std::uint64_t e);

/// Parses list notation "[a1,a2,...,an]". The degree is the entry count.
Transformation parse_list(std::string_view text);

/// Parses disjoint cycle notation such as "(1,2,4,5)(6,7)" into a permutation
/// of degree n. Omitted points are fixed; "" and "()" denote the identity.
/// Throws std::invalid_argument for out-of-range or repeated entries.
Permutation parse_cycles(std::string_view text, int degree);

/// All n! permutations of degree n in lexicographic order of image arrays.
std::vector<Permutation> all_permutations(int degree);

}  // namespace revsc

#endif  // REVSC_TRANSFORM_HPP
