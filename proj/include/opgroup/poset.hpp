#pragma once

#include <cstddef>
#include <vector>

#include "opgroup/markings.hpp"

namespace opgroup {

bool is_split(const Backend& backend, std::size_t x);
bool is_progressive(const Backend& backend, std::size_t x);

enum class Verdict { yes, no, unknown };

/// Searches arrows Z -> x with at most `depth` generators and, for each, an
/// arrow A1 y A2 -> Z with at most `depth` generators whose y-block feeds a
/// single operation.
Verdict y_progressive_verdict(const Backend& backend, std::size_t x, std::size_t y, std::size_t depth);
/// Throws E_UNKNOWN when the bound is exhausted.
bool is_y_progressive(const Backend& backend, std::size_t x, std::size_t y, std::size_t depth);

/// A partition over x with at least n submultiballs of class y.
SemiPartitionClass construct_partition_n(const Backend& backend, std::size_t x, std::size_t y, std::size_t n);

bool n_condition(const Backend& backend, const SemiPartitionClass& p, std::size_t y, std::size_t n);

/// A common refinement of p and q satisfying the n-condition.
SemiPartitionClass refine_to_n(const Backend& backend, const SemiPartitionClass& p, const SemiPartitionClass& q,
                               std::size_t y, std::size_t n);

/// p <= q in the poset, i.e. q is contained in p.
bool poset_leq(const SemiPartitionClass& p, const SemiPartitionClass& q);

struct PosetTruncation {
  std::size_t base = 0;
  std::size_t depth = 0;
  std::size_t y = 0;
  std::size_t n = 0;
  std::vector<SemiPartitionClass> elements;
};

PosetTruncation enumerate_pn(const Backend& backend, std::size_t base, std::size_t depth, std::size_t y,
                             std::size_t n);

struct FilteredRow {
  std::size_t p = 0;
  std::size_t q = 0;
  SemiPartitionClass upper_bound;
  bool ok = false;
};

struct FilteredReport {
  std::vector<FilteredRow> rows;
  std::size_t failures = 0;
  bool filtered() const noexcept { return failures == 0; }
};

/// One row per pair i <= j of elements.
FilteredReport check_filtered(const Backend& backend, const PosetTruncation& t);

}  // namespace opgroup
