#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opgroup/fractions.hpp"
#include "opgroup/markings.hpp"

namespace opgroup {

/// An arrow A1 x A2 x A3 -> x: `arrow` has two disjoint blocks of length
/// `block` starting at domain positions `first` < `second`.
struct SplitArrow {
  Arrow arrow;
  std::size_t block = 1;
  std::size_t first = 0;
  std::size_t second = 1;
};

/// One split generator per coordinate of the base; blocks at 0 and x.
SplitArrow standard_split(const Backend& backend, std::size_t x);
/// A split arrow whose three padding words are all nonempty.
SplitArrow padded_split(const Backend& backend, std::size_t x);

/// Permutation of n coordinates sending block i (length len, starting at
/// starts[i]) onto block images[i]; identity elsewhere.
Permutation block_permutation(std::size_t n, const std::vector<std::size_t>& starts, std::size_t len,
                              const std::vector<std::size_t>& images);

Span make_gamma1(const Backend& backend, const SplitArrow& s);
Span make_gamma2(const Backend& backend, const SplitArrow& s);
Span make_infinite_element(const Backend& backend, const SplitArrow& s);
Span make_gamma1(const Backend& backend);
Span make_gamma2(const Backend& backend);
Span make_infinite_element(const Backend& backend);

struct CertRow {
  std::string check;
  std::string instance;
  bool ok = false;
  std::string witness;
};

struct CertReport {
  std::vector<CertRow> rows;
  std::size_t violations = 0;
  void add(CertRow row);
  bool ok() const noexcept { return violations == 0; }
};

/// Orders of gamma1 and gamma2 for the standard and padded split arrows.
CertReport torsion_check(const Backend& backend);

/// The two balls of the split generator at base 1: B1 marks its second
/// X-input, B2 its first.
SemiPartitionClass ball_b1(const Backend& backend);
SemiPartitionClass ball_b2(const Backend& backend);

/// Balls at base 1 represented by single-marked split-generator trees with
/// at most `depth` generators, one per realized cell.
std::vector<SemiPartitionClass> generator_tree_balls(const Backend& backend, std::size_t depth);

/// is_ball, contained in `outer`, and its cell is reachable by the split
/// generator alone.
bool in_ball_set(const Backend& backend, const SemiPartitionClass& b, const SemiPartitionClass& outer);

CertReport pingpong_check(const Backend& backend, std::size_t depth);
CertReport alternating_words_nontrivial(const Backend& backend, std::size_t max_len);
CertReport infinite_order_check(const Backend& backend, std::size_t max_n);
CertReport free_action_check(const Backend& backend, std::size_t max_perm_size, std::size_t max_depth);

/// sp_eq((alpha, sigma then alpha), identity).
bool sigma_span_check(const Arrow& alpha, const Permutation& sigma);
/// The same verdict through the action on a single-marked coordinate moved
/// by sigma.
bool sigma_span_check_marked(const Arrow& alpha, const Permutation& sigma);
/// Both routes over every non-identity sigma and arrow within the bounds.
CertReport sigma_span_sweep(const Backend& backend, std::size_t max_perm_size, std::size_t max_depth);

}  // namespace opgroup
