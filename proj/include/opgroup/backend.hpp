#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "opgroup/cell.hpp"
#include "opgroup/permutation.hpp"

namespace opgroup {

enum class Flavor { planar, symmetric };

enum class BackendKind { kary_tree, dyadic_cube };

/// An operation of a monochromatic cube-cutting operad: an ordered sequence
/// of cells tiling the unit cube. Input i of the operation is cell i.
///
/// For k-ary trees the cells are the leaf intervals in depth-first order,
/// which is also their sorted order. For cubes the order is part of the
/// value; `sorted()` is the canonical representative used inside arrows.
class Operation {
 public:
  Operation() = default;
  explicit Operation(std::vector<Cell> cells) : cells_(std::move(cells)) {}

  /// The arity-1 operation on a cube of the given dimension.
  static Operation unit(std::size_t dims) { return Operation({Cell::whole(dims)}); }

  std::size_t arity() const noexcept { return cells_.size(); }
  std::size_t dims() const noexcept { return cells_.empty() ? 0 : cells_.front().dims(); }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }

  bool is_unit() const noexcept { return cells_.size() == 1 && cells_.front().depth() == 0; }
  bool is_sorted() const;
  /// Cells in canonical (corner) order.
  Operation sorted() const;
  /// rank[i] = position of cell i in sorted().
  Permutation sorting_permutation() const;

  friend bool operator==(const Operation&, const Operation&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Witness for a cube operation: midpoint cuts applied recursively. For the
/// tree backend a node has k children and cuts axis 0 into k equal parts.
struct CutTree {
  int axis = -1;
  std::vector<CutTree> children;

  static CutTree leaf() { return {}; }
  static CutTree node(int axis, std::vector<CutTree> children) { return {axis, std::move(children)}; }
  bool is_leaf() const noexcept { return axis < 0; }
  std::size_t cuts() const;
};

/// Result of op_common_refinement. Substituting phi_p into the slots of p
/// gives the cells of `common` in the order described by pi_p:
/// `pi_p(i)` is the position of common cell i in that substituted sequence.
struct Refinement {
  Operation common;
  std::vector<Operation> phi_p;
  std::vector<Operation> phi_q;
  Permutation pi_p;
  Permutation pi_q;
};

class Backend {
 public:
  static Backend kary_tree(unsigned k, Flavor flavor = Flavor::symmetric);
  static Backend dyadic_cube(unsigned d, Flavor flavor = Flavor::symmetric);

  BackendKind kind() const noexcept { return kind_; }
  bool is_tree() const noexcept { return kind_ == BackendKind::kary_tree; }
  Flavor flavor() const noexcept { return flavor_; }
  bool planar() const noexcept { return flavor_ == Flavor::planar; }
  /// k for trees, 2 for cubes.
  unsigned radix() const noexcept { return radix_; }
  /// 1 for trees, d for cubes.
  unsigned dims() const noexcept { return dims_; }
  /// "tree:k=2" or "cube:d=2".
  std::string name() const;

  Operation identity() const { return Operation::unit(dims_); }
  /// The k-ary caret, or the d axis halvings.
  std::vector<Operation> generators() const;
  /// The first generator; the standard binary-split operation.
  Operation split_generator() const { return generators().front(); }

  /// Number of generators any cut tree of `op` uses.
  std::size_t generator_count(const Operation& op) const;

  /// Checks that `cells` tile the unit cube and are reachable by recursive
  /// midpoint (radix) cuts. Keeps the given order.
  Operation validate_pattern(std::vector<Cell> cells) const;
  /// A cut tree realizing the pattern, if one exists.
  std::optional<CutTree> find_cut_tree(const std::vector<Cell>& cells) const;
  Operation from_cut_tree(const CutTree& tree) const;

  friend bool operator==(const Backend&, const Backend&) = default;

 private:
  Backend(BackendKind kind, unsigned radix, unsigned dims, Flavor flavor)
      : kind_(kind), radix_(radix), dims_(dims), flavor_(flavor) {}

  BackendKind kind_;
  unsigned radix_;
  unsigned dims_;
  Flavor flavor_;
};

Operation op_identity(const Backend& backend);

/// Substitutes `inner` into input `slot` of `outer`.
Operation op_compose(const Operation& outer, std::size_t slot, const Operation& inner);

/// Substitutes forest[i] into input i of `outer` for every i.
Operation op_graft(const Operation& outer, const std::vector<Operation>& forest);

/// Coarsest common refinement: the overlay of both cell sets, sorted.
Refinement op_common_refinement(const Operation& p, const Operation& q);

/// Validates a pattern against a backend; same as backend.validate_pattern.
Operation op_validate_pattern(const Backend& backend, std::vector<Cell> cells);

}  // namespace opgroup
