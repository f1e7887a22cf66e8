#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "opgroup/backend.hpp"
#include "opgroup/permutation.hpp"

namespace opgroup {

/// An arrow of the monoidal category of the operad in permutation-forest
/// normal form: first the permutation acts on the domain word, then the
/// forest (one operation per codomain coordinate) consumes it.
///
/// Domain coordinate i feeds input perm()(i) of the concatenated forest.
/// Every operation is kept in sorted cell order, so two arrows are equal iff
/// their members are equal.
class Arrow {
 public:
  /// The empty arrow on the unit object.
  Arrow() = default;
  /// Normalizes: unsorted operations are sorted and the reordering is
  /// absorbed into the permutation.
  Arrow(Permutation perm, std::vector<Operation> forest);

  static Arrow identity(std::size_t length, std::size_t dims);
  static Arrow identity(const Backend& backend, std::size_t length) { return identity(length, backend.dims()); }
  static Arrow from_forest(std::vector<Operation> forest);
  /// The permutation arrow (perm, units).
  static Arrow from_permutation(const Permutation& perm, std::size_t dims);

  std::size_t domain() const noexcept { return perm_.size(); }
  std::size_t codomain() const noexcept { return forest_.size(); }
  const Permutation& perm() const noexcept { return perm_; }
  const std::vector<Operation>& forest() const noexcept { return forest_; }
  bool is_identity() const;

  /// Start of the input block of forest operation j in the forest input word.
  std::vector<std::size_t> block_offsets() const;

  friend bool operator==(const Arrow&, const Arrow&) = default;

 private:
  Permutation perm_;
  std::vector<Operation> forest_;
};

/// Moves a codomain permutation `tau` across a forest:
/// (id, forest) then (tau, -) equals (tau_hat, forest_hat).
std::pair<Permutation, std::vector<Operation>> push_perm(const std::vector<Operation>& forest,
                                                         const Permutation& tau);

/// Diagrammatic composite: first `a`, then `b`.
Arrow compose(const Arrow& a, const Arrow& b);

Arrow tensor(const Arrow& a, const Arrow& b);

/// Canonical square filling: (b1, b2) with compose(b1, a1) == compose(b2, a2),
/// obtained from the per-coordinate common refinement.
std::pair<Arrow, Arrow> square_fill(const Arrow& a1, const Arrow& a2);

struct CommonFilling {
  Arrow alpha;    // into the domain of the first cospan leg
  Arrow beta;     // into the domain of the second cospan leg
  Arrow delta;    // into the apex of the first filling
  Arrow epsilon;  // into the apex of the second filling
};

/// Joins two square fillings (i, h) and (j, g) of the cospan (x, y) into one
/// filling through both, following the equalize-and-refill recipe.
CommonFilling combine_fillings(const std::pair<Arrow, Arrow>& first, const std::pair<Arrow, Arrow>& second,
                               const std::pair<Arrow, Arrow>& cospan);

/// Parallel arrows are homotopic iff equal in these cancellative backends.
bool arrow_eq(const Arrow& a, const Arrow& b);

/// Where a domain coordinate lands: codomain coordinate `root` and a cell of
/// that coordinate's unit cube.
struct RealCell {
  std::size_t root = 0;
  Cell cell;

  friend bool operator==(const RealCell&, const RealCell&) = default;
};

/// Geometric realization, one entry per domain coordinate.
std::vector<RealCell> realize(const Arrow& arrow);

/// Rebuilds the arrow with the given realization; the inverse of realize.
/// Throws E_NOT_PARTITION if the cells of some root do not tile it.
Arrow arrow_from_realization(const Backend& backend, std::size_t codomain, const std::vector<RealCell>& cells);

/// Total number of generators in the forest.
std::size_t generator_count(const Backend& backend, const Arrow& arrow);

}  // namespace opgroup
