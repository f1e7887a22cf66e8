#include "opgroup/poset.hpp"

#include <algorithm>

#include "opgroup/enumerate.hpp"
#include "opgroup/error.hpp"
#include "opgroup/syntax.hpp"

namespace opgroup {

namespace {

// Fewest generators whose composite has arity >= target.
std::size_t generators_for_arity(const Backend& backend, std::size_t target) {
  std::size_t step = backend.radix() - 1;
  if (!backend.is_tree()) step = 1;
  if (target <= 1) return 0;
  return (target - 1 + step - 1) / step;
}

// Split operation grown at its last cell until its arity reaches `target`.
Operation wide_operation(const Backend& backend, std::size_t target) {
  Operation op = backend.identity();
  Operation gen = backend.split_generator();
  while (op.arity() < target) op = op_compose(op, op.arity() - 1, gen).sorted();
  return op;
}

// The arrow into a word of length `length` with `op` at coordinate 0.
Arrow expand_first(const Backend& backend, std::size_t length, const Operation& op) {
  std::vector<Operation> forest(length, backend.identity());
  forest[0] = op;
  return Arrow::from_forest(std::move(forest));
}

}  // namespace

bool is_split(const Backend&, std::size_t x) { return x >= 1; }

bool is_progressive(const Backend&, std::size_t x) { return x >= 1; }

Verdict y_progressive_verdict(const Backend& backend, std::size_t x, std::size_t y, std::size_t depth) {
  if (y == 0) return Verdict::yes;
  if (x == 0) return Verdict::no;
  std::size_t need = generators_for_arity(backend, y);
  if (need > depth) return Verdict::unknown;
  Operation op = wide_operation(backend, y);
  for (const auto& z : forests_up_to(backend, x, depth)) {
    Arrow beta = expand_first(backend, z.domain(), op);
    auto cells = realize(beta);
    for (std::size_t i = 0; i < y; ++i) {
      if (cells[i].root != 0) return Verdict::unknown;
    }
  }
  return Verdict::yes;
}

bool is_y_progressive(const Backend& backend, std::size_t x, std::size_t y, std::size_t depth) {
  switch (y_progressive_verdict(backend, x, y, depth)) {
    case Verdict::yes:
      return true;
    case Verdict::no:
      return false;
    case Verdict::unknown:
      break;
  }
  throw Error(Errc::unknown, "search bound exhausted");
}

SemiPartitionClass construct_partition_n(const Backend& backend, std::size_t x, std::size_t y, std::size_t n) {
  if (!is_split(backend, y)) throw Error(Errc::not_split, "y must be split");
  if (x == 0) throw Error(Errc::not_split, "the base must be y-progressive");
  Arrow arrow = expand_first(backend, x, wide_operation(backend, n * y));
  std::vector<int> labels(arrow.domain(), static_cast<int>(n));
  for (std::size_t i = 0; i < n * y; ++i) labels[i] = static_cast<int>(i / y);
  return {MarkedArrow(std::move(arrow), Marking(std::move(labels)))};
}

bool n_condition(const Backend& backend, const SemiPartitionClass& p, std::size_t y, std::size_t n) {
  if (!p.is_partition()) throw Error(Errc::not_partition, "n_condition needs a partition");
  std::size_t count = 0;
  for (const auto& b : submultiballs(p)) count += object_equivalent(backend, object_class(b), y);
  return count >= n;
}

SemiPartitionClass refine_to_n(const Backend& backend, const SemiPartitionClass& p, const SemiPartitionClass& q,
                               std::size_t y, std::size_t n) {
  if (!p.is_partition() || !q.is_partition()) throw Error(Errc::not_partition, "refine_to_n needs partitions");
  if (p.base() != q.base()) throw Error(Errc::base_mismatch, "partitions over different bases");
  auto [b1, b2] = square_fill(p.rep.arrow, q.rep.arrow);
  Arrow delta = compose(b1, p.rep.arrow);
  if (delta.domain() == 0) {
    if (n == 0) return {MarkedArrow(delta, Marking())};
    throw Error(Errc::not_split, "empty word");
  }
  Arrow eps = expand_first(backend, delta.domain(), wide_operation(backend, n * y));
  Marking pulled = pull_back(eps, Marking::full_distinct(delta.domain()));
  std::vector<int> labels = pulled.labels();
  int fresh = static_cast<int>(pulled.symbol_count());
  for (std::size_t i = 0; i < n * y; ++i) labels[i] = fresh + static_cast<int>(i / y);
  return {MarkedArrow(compose(eps, delta), Marking(std::move(labels)))};
}

bool poset_leq(const SemiPartitionClass& p, const SemiPartitionClass& q) { return class_subset(q, p); }

PosetTruncation enumerate_pn(const Backend& backend, std::size_t base, std::size_t depth, std::size_t y,
                             std::size_t n) {
  PosetTruncation t{base, depth, y, n, {}};
  for (const auto& arrow : forests_up_to(backend, base, depth)) {
    for (const auto& m : all_markings(arrow.domain(), true, backend.planar())) {
      SemiPartitionClass c{MarkedArrow(arrow, m)};
      if (!n_condition(backend, c, y, n)) continue;
      bool seen = std::any_of(t.elements.begin(), t.elements.end(),
                              [&](const SemiPartitionClass& e) { return sp_class_eq(e, c); });
      if (!seen) t.elements.push_back(std::move(c));
    }
  }
  std::vector<std::pair<std::string, SemiPartitionClass>> keyed;
  for (auto& e : t.elements) keyed.emplace_back(format_marked_arrow(backend, e.rep), std::move(e));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  t.elements.clear();
  for (auto& [key, e] : keyed) t.elements.push_back(std::move(e));
  return t;
}

FilteredReport check_filtered(const Backend& backend, const PosetTruncation& t) {
  FilteredReport report;
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    for (std::size_t j = i; j < t.elements.size(); ++j) {
      const auto& p = t.elements[i];
      const auto& q = t.elements[j];
      auto r = refine_to_n(backend, p, q, t.y, t.n);
      bool ok = poset_leq(p, r) && poset_leq(q, r) && n_condition(backend, r, t.y, t.n);
      report.failures += !ok;
      report.rows.push_back({i, j, std::move(r), ok});
    }
  }
  return report;
}

}  // namespace opgroup
