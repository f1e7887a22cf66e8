#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "opgroup/fractions.hpp"
#include "opgroup/markings.hpp"

namespace opgroup {

/// Byte key of an operation's cell sequence; equal keys iff equal values.
std::string operation_key(const Operation& op);

/// Distinct sorted operations with exactly `gens` generators, in the order
/// they are first reached by grafting generators onto cells.
std::vector<Operation> operations_with(const Backend& backend, std::size_t gens);
std::vector<Operation> operations_up_to(const Backend& backend, std::size_t max_gens);

/// Operations built by grafting only `generator` (the composites of one
/// split operation).
std::vector<Operation> generator_trees(const Operation& generator, std::size_t max_gens);

/// All permutation-free arrows into `base` whose forest uses at most
/// `max_gens` generators in total.
std::vector<Arrow> forests_up_to(const Backend& backend, std::size_t base, std::size_t max_gens);

/// forests_up_to with every domain permutation applied (symmetric flavor);
/// identical to forests_up_to for planar backends.
std::vector<Arrow> arrows_up_to(const Backend& backend, std::size_t base, std::size_t max_gens);

/// Markings up to relabeling as restricted growth strings. `full` forbids
/// unmarked coordinates; `ordered` keeps only contiguous symbol blocks.
std::vector<Marking> all_markings(std::size_t n, bool full, bool ordered);

using Rng = std::mt19937_64;

Operation random_operation(const Backend& backend, std::size_t gens, Rng& rng);
Arrow random_arrow(const Backend& backend, std::size_t base, std::size_t gens, Rng& rng);
/// Both legs use the same number of generators, at most max_gens / 2 each.
Span random_span(const Backend& backend, std::size_t base, std::size_t max_gens, Rng& rng);

}  // namespace opgroup
