#pragma once

#include <cstddef>
#include <vector>

#include "opgroup/arrow.hpp"

namespace opgroup {

/// Partial assignment of symbols to the coordinates of a word. Symbols are
/// relabeled 0, 1, 2, ... by first occurrence, so equivalent markings are
/// equal values. kUnmarked marks a coordinate without symbol.
class Marking {
 public:
  static constexpr int kUnmarked = -1;

  Marking() = default;
  explicit Marking(std::vector<int> labels);

  static Marking full_distinct(std::size_t n);
  static Marking uniform(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  std::size_t symbol_count() const noexcept { return symbols_; }
  std::size_t marked_count() const;

  bool is_full() const;
  /// Every symbol occupies a contiguous block of coordinates.
  bool is_ordered() const;
  /// Erases every symbol except `symbol`.
  Marking only(int symbol) const;

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<int> labels_;
  std::size_t symbols_ = 0;
};

struct MarkedArrow {
  Arrow arrow;
  Marking marking;

  MarkedArrow() = default;
  MarkedArrow(Arrow a, Marking m);

  std::size_t base() const noexcept { return arrow.codomain(); }

  friend bool operator==(const MarkedArrow&, const MarkedArrow&) = default;
};

/// A semi-partition over the base word, held through any representative.
/// Comparisons are semantic (see sp_class_eq / class_subset).
struct SemiPartitionClass {
  MarkedArrow rep;

  std::size_t base() const noexcept { return rep.base(); }
  bool is_partition() const { return rep.marking.is_full(); }
  bool is_multiball() const { return rep.marking.symbol_count() == 1; }
};

/// Pulls a comarking on the codomain back to the domain: the inputs of each
/// forest operation inherit its output's symbol, then the permutation
/// transports them.
Marking pull_back(const Arrow& arrow, const Marking& comarking);

bool marking_subset(const Marking& m1, const Marking& m2);

bool ma_subset(const MarkedArrow& p, const MarkedArrow& q);
/// ma_subset evaluated through a caller-chosen square filling (b1, b2) of
/// (p.arrow, q.arrow).
bool ma_subset_via(const MarkedArrow& p, const MarkedArrow& q, const Arrow& b1, const Arrow& b2);

bool sp_class_eq(const SemiPartitionClass& p, const SemiPartitionClass& q);
/// q is contained in p.
bool class_subset(const SemiPartitionClass& q, const SemiPartitionClass& p);
/// One multiball per symbol of the representative, in symbol order.
std::vector<SemiPartitionClass> submultiballs(const SemiPartitionClass& p);

/// Decided geometrically: the marked cells of the representative tile a
/// single cell.
bool is_ball(const Backend& backend, const SemiPartitionClass& b);

/// Length of the marked subword of a multiball.
std::size_t object_class(const SemiPartitionClass& b);
/// Words a and b are joined by a span in the fundamental groupoid.
bool object_equivalent(const Backend& backend, std::size_t a, std::size_t b);

}  // namespace opgroup
