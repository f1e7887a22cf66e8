#include "opgroup/backend.hpp"

#include <algorithm>
#include <numeric>

#include "opgroup/error.hpp"

namespace opgroup {

bool Operation::is_sorted() const {
  for (std::size_t i = 1; i < cells_.size(); ++i) {
    if (corner_order(cells_[i - 1], cells_[i]) >= 0) return false;
  }
  return true;
}

Operation Operation::sorted() const {
  if (is_sorted()) return *this;
  auto cells = cells_;
  std::sort(cells.begin(), cells.end(), CornerLess{});
  return Operation(std::move(cells));
}

Permutation Operation::sorting_permutation() const {
  std::vector<std::size_t> order(cells_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [this](std::size_t a, std::size_t b) { return corner_order(cells_[a], cells_[b]) < 0; });
  std::vector<std::size_t> rank(cells_.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
  return Permutation(std::move(rank));
}

std::size_t CutTree::cuts() const {
  if (is_leaf()) return 0;
  std::size_t n = 1;
  for (const auto& c : children) n += c.cuts();
  return n;
}

Backend Backend::kary_tree(unsigned k, Flavor flavor) {
  if (k < 2) throw Error(Errc::parse, "k-ary tree backend needs k >= 2");
  return Backend(BackendKind::kary_tree, k, 1, flavor);
}

Backend Backend::dyadic_cube(unsigned d, Flavor flavor) {
  if (d < 1) throw Error(Errc::parse, "dyadic cube backend needs d >= 1");
  if (d >= 2 && flavor == Flavor::planar) {
    throw Error(Errc::flavor, "planar cube cutting is only supported for d = 1");
  }
  return Backend(BackendKind::dyadic_cube, 2, d, flavor);
}

std::string Backend::name() const {
  return is_tree() ? "tree:k=" + std::to_string(radix_) : "cube:d=" + std::to_string(dims_);
}

std::vector<Operation> Backend::generators() const {
  std::vector<Operation> gens;
  for (unsigned axis = 0; axis < dims_; ++axis) {
    std::vector<Cell> cells;
    for (unsigned digit = 0; digit < radix_; ++digit) {
      Cell c = Cell::whole(dims_);
      c.axes[axis].push_back(static_cast<char>(digit));
      cells.push_back(std::move(c));
    }
    gens.emplace_back(std::move(cells));
  }
  return gens;
}

std::size_t Backend::generator_count(const Operation& op) const {
  return (op.arity() - 1) / (radix_ - 1);
}

namespace {

// Greedy guillotine search: split along the first axis whose midpoint
// hyperplane(s) cross no cell, recurse on the parts.
std::optional<CutTree> guillotine(const Cell& region, const std::vector<Cell>& cells, unsigned radix) {
  if (cells.size() == 1) {
    if (cells.front() == region) return CutTree::leaf();
    return std::nullopt;
  }
  for (std::size_t axis = 0; axis < region.dims(); ++axis) {
    std::size_t depth = region.axes[axis].size();
    bool crossing = std::any_of(cells.begin(), cells.end(),
                                [&](const Cell& c) { return c.axes[axis].size() <= depth; });
    if (crossing) continue;
    std::vector<std::vector<Cell>> parts(radix);
    for (const auto& c : cells) parts[static_cast<unsigned char>(c.axes[axis][depth])].push_back(c);
    CutTree node = CutTree::node(static_cast<int>(axis), {});
    for (unsigned digit = 0; digit < radix; ++digit) {
      if (parts[digit].empty()) return std::nullopt;
      Cell sub = region;
      sub.axes[axis].push_back(static_cast<char>(digit));
      auto child = guillotine(sub, parts[digit], radix);
      if (!child) return std::nullopt;
      node.children.push_back(std::move(*child));
    }
    return node;
  }
  return std::nullopt;
}

void collect_cells(const CutTree& t, Cell region, unsigned radix, std::vector<Cell>& out) {
  if (t.is_leaf()) {
    out.push_back(std::move(region));
    return;
  }
  for (unsigned digit = 0; digit < radix; ++digit) {
    Cell sub = region;
    sub.axes[static_cast<std::size_t>(t.axis)].push_back(static_cast<char>(digit));
    collect_cells(t.children[digit], std::move(sub), radix, out);
  }
}

void check_cells_shape(const std::vector<Cell>& cells, unsigned radix, unsigned dims) {
  for (const auto& c : cells) {
    if (c.dims() != dims) throw Error(Errc::parse, "cell has wrong dimension");
    for (const auto& axis : c.axes) {
      for (char digit : axis) {
        if (static_cast<unsigned char>(digit) >= radix) throw Error(Errc::parse, "cell digit out of range");
      }
    }
  }
}

}  // namespace

Operation Backend::validate_pattern(std::vector<Cell> cells) const {
  check_cells_shape(cells, radix_, dims_);
  if (!tiles(Cell::whole(dims_), cells, radix_)) {
    throw Error(Errc::not_partition, "cells do not tile the unit cube");
  }
  if (!guillotine(Cell::whole(dims_), cells, radix_)) {
    throw Error(Errc::not_guillotine, "pattern is not realizable by recursive midpoint cuts");
  }
  Operation op(std::move(cells));
  if (planar() && !op.is_sorted()) {
    throw Error(Errc::flavor, "planar operations list their cells in increasing order");
  }
  return op;
}

std::optional<CutTree> Backend::find_cut_tree(const std::vector<Cell>& cells) const {
  if (!tiles(Cell::whole(dims_), cells, radix_)) return std::nullopt;
  return guillotine(Cell::whole(dims_), cells, radix_);
}

Operation Backend::from_cut_tree(const CutTree& tree) const {
  std::vector<const CutTree*> stack{&tree};
  while (!stack.empty()) {
    const CutTree* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) continue;
    if (t->axis >= static_cast<int>(dims_) || t->children.size() != radix_) {
      throw Error(Errc::parse, "cut tree node does not match the backend");
    }
    for (const auto& c : t->children) stack.push_back(&c);
  }
  std::vector<Cell> cells;
  collect_cells(tree, Cell::whole(dims_), radix_, cells);
  Operation op(std::move(cells));
  if (planar() && !op.is_sorted()) {
    throw Error(Errc::flavor, "planar operations list their cells in increasing order");
  }
  return op;
}

Operation op_identity(const Backend& backend) { return backend.identity(); }

Operation op_compose(const Operation& outer, std::size_t slot, const Operation& inner) {
  if (slot >= outer.arity()) throw Error(Errc::slot_range, "slot " + std::to_string(slot) + " out of range");
  std::vector<Cell> cells;
  cells.reserve(outer.arity() + inner.arity() - 1);
  for (std::size_t i = 0; i < outer.arity(); ++i) {
    if (i != slot) {
      cells.push_back(outer.cell(i));
      continue;
    }
    for (const auto& c : inner.cells()) cells.push_back(transport(outer.cell(i), c));
  }
  return Operation(std::move(cells));
}

Operation op_graft(const Operation& outer, const std::vector<Operation>& forest) {
  if (forest.size() != outer.arity()) throw Error(Errc::size_mismatch, "graft needs one operation per slot");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < outer.arity(); ++i) {
    if (forest[i].is_unit()) {
      cells.push_back(outer.cell(i));
      continue;
    }
    for (const auto& c : forest[i].cells()) cells.push_back(transport(outer.cell(i), c));
  }
  return Operation(std::move(cells));
}

namespace {

// Splits the sorted overlay along the slots of `p`.
void split_along(const Operation& p, const std::vector<Cell>& common, std::vector<Operation>& phi,
                 Permutation& pi) {
  std::vector<std::vector<Cell>> blocks(p.arity());
  std::vector<std::size_t> slot_of(common.size());
  std::vector<std::size_t> rank_in_slot(common.size());
  for (std::size_t t = 0; t < common.size(); ++t) {
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (contains(p.cell(i), common[t])) {
        slot_of[t] = i;
        rank_in_slot[t] = blocks[i].size();
        blocks[i].push_back(relative(p.cell(i), common[t]));
        break;
      }
    }
  }
  std::vector<std::size_t> offset(p.arity(), 0);
  for (std::size_t i = 1; i < p.arity(); ++i) offset[i] = offset[i - 1] + blocks[i - 1].size();
  std::vector<std::size_t> images(common.size());
  for (std::size_t t = 0; t < common.size(); ++t) images[t] = offset[slot_of[t]] + rank_in_slot[t];
  phi.clear();
  for (auto& b : blocks) phi.emplace_back(std::move(b));
  pi = Permutation(std::move(images));
}

}  // namespace

Refinement op_common_refinement(const Operation& p, const Operation& q) {
  std::vector<Cell> common;
  common.reserve(std::max(p.arity(), q.arity()));
  for (const auto& a : p.cells()) {
    for (const auto& b : q.cells()) {
      if (auto c = intersect(a, b)) common.push_back(std::move(*c));
    }
  }
  std::sort(common.begin(), common.end(), CornerLess{});
  Refinement r;
  split_along(p, common, r.phi_p, r.pi_p);
  split_along(q, common, r.phi_q, r.pi_q);
  r.common = Operation(std::move(common));
  return r;
}

Operation op_validate_pattern(const Backend& backend, std::vector<Cell> cells) {
  return backend.validate_pattern(std::move(cells));
}

}  // namespace opgroup
