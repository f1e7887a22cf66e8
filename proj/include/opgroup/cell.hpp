#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace opgroup {

using BigInt = boost::multiprecision::cpp_int;

/// A cell of the standard cube: on every axis an r-adic interval given by its
/// digit path from the whole unit interval (one byte per digit, value < r).
///
/// For k-ary trees there is a single axis with radix k and the cell is the
/// interval of a leaf; for dyadic cubes each axis has radix 2 and the cell is
/// a dyadic box. An axis path of length e with integer value a denotes
/// [a r^-e, (a+1) r^-e).
struct Cell {
  std::vector<std::string> axes;

  static Cell whole(std::size_t dims) { return Cell{std::vector<std::string>(dims)}; }

  std::size_t dims() const noexcept { return axes.size(); }
  /// Exponent along one axis.
  std::size_t exponent(std::size_t axis) const noexcept { return axes[axis].size(); }
  /// Sum of exponents.
  std::size_t depth() const noexcept;
  /// Integer offset along one axis, i.e. the path read as a base-r numeral.
  BigInt offset(std::size_t axis, unsigned radix) const;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Builds the axis path of length `exponent` with value `offset` in base `radix`.
/// Returns nullopt when offset >= radix^exponent.
std::optional<std::string> axis_path(std::size_t exponent, const BigInt& offset, unsigned radix);

bool contains(const Cell& outer, const Cell& inner);
bool disjoint(const Cell& a, const Cell& b);
std::optional<Cell> intersect(const Cell& a, const Cell& b);

/// Places `inner` (a cell of the unit cube) into `outer` by the axis-aligned
/// affine bijection of the unit cube onto `outer`.
Cell transport(const Cell& outer, const Cell& inner);
/// Inverse of transport; requires contains(outer, inner).
Cell relative(const Cell& outer, const Cell& inner);

/// Lexicographic on lower-corner coordinates (axis 0 first), then exponents.
std::strong_ordering corner_order(const Cell& a, const Cell& b);

struct CornerLess {
  bool operator()(const Cell& a, const Cell& b) const { return corner_order(a, b) < 0; }
};

/// True iff the cells are pairwise disjoint and their volumes add up to the
/// volume of `region`, every cell lying inside `region`.
bool tiles(const Cell& region, const std::vector<Cell>& cells, unsigned radix);

/// Smallest cell containing all given cells (per-axis longest common prefix).
Cell hull(const std::vector<Cell>& cells);

}  // namespace opgroup
