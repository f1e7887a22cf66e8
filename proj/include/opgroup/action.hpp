#pragma once

#include <cstddef>
#include <vector>

#include "opgroup/fractions.hpp"
#include "opgroup/markings.hpp"

namespace opgroup {

SemiPartitionClass act(const Span& g, const SemiPartitionClass& s);

/// g fixes every submultiball of the partition p.
bool stabilizes_pointwise(const Span& g, const SemiPartitionClass& p);

/// A partition representative (alpha, m) with ordered, fully marked m. The
/// symbols cut dom(alpha) into subwords c_1 ... c_k, in marking order.
struct StabilizerWitness {
  SemiPartitionClass partition;
  std::vector<std::size_t> subwords;
  Arrow base_arrow;
};

/// Reorders the partition's representative so that its marking is ordered.
StabilizerWitness make_witness(const SemiPartitionClass& partition);

/// Tensor the component spans and conjugate by the witness arrow.
Span xi(const std::vector<Span>& components, const StabilizerWitness& w);

/// Inverse of xi on the pointwise stabilizer. Throws E_NOT_IN_STABILIZER
/// when g moves some submultiball.
std::vector<Span> decompose(const Span& g, const StabilizerWitness& w);

}  // namespace opgroup
