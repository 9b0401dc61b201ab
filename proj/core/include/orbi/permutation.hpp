#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace orbi {

/// Permutation of {0, ..., N-1} stored as its image array.
///
/// Products are read left to right: `p.then(q)` sends i to q(p(i)), so a
/// word w1 w2 ... wk acts on points from the right. Under this convention a
/// right action of a group by permutations is a homomorphism.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidInput unless `images` is a bijection of {0..N-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// From one-line notation with points 1..N.
  static Permutation from_one_based(std::span<const std::int64_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  std::vector<std::int64_t> one_based() const;

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  /// Non-negative powers only.
  Permutation pow(std::uint64_t exponent) const;

  bool is_identity() const noexcept;
  /// Cycle lengths in order of each cycle's smallest point; fixed points
  /// count as cycles of length 1.
  std::vector<std::size_t> cycle_lengths() const;
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// True when the group generated by `generators` acts transitively on
/// {0..degree-1}. All generators must have the given degree.
bool is_transitive(std::size_t degree, std::span<const Permutation> generators);

}  // namespace orbi
