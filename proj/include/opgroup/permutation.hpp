#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace opgroup {

/// A bijection of {0, ..., n-1}; images()[i] is the image of position i.
///
/// Products are diagrammatic: `p.then(q)` first applies p, then q, so
/// `p.then(q)(i) == q(p(i))`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Direct sum: `a` acts on the first a.size() points, `b` on the rest.
  static Permutation block_sum(const Permutation& a, const Permutation& b);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// All permutations of size n in lexicographic order of their images.
std::vector<Permutation> all_permutations(std::size_t n);

}  // namespace opgroup
