#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "opgroup/arrow.hpp"

namespace opgroup {

/// A group element of the fundamental group at the base word: the span
/// base <-den- a -num-> base. The first arrow is always the denominator.
struct Span {
  Arrow den;
  Arrow num;

  Span() = default;
  Span(Arrow den, Arrow num);

  static Span identity(std::size_t base, std::size_t dims);
  static Span identity(const Backend& backend, std::size_t base) { return identity(base, backend.dims()); }

  std::size_t base() const noexcept { return den.codomain(); }
  std::size_t apex() const noexcept { return den.domain(); }

  friend bool operator==(const Span&, const Span&) = default;
};

Span sp_mul(const Span& g, const Span& h);
Span sp_inv(const Span& g);
/// Semantic equality: compare numerators over a common denominator.
bool sp_eq(const Span& g, const Span& h);
bool sp_is_identity(const Span& g);
Span sp_pow(const Span& g, std::int64_t n);
/// Least 1 <= n <= max_n with g^n trivial.
std::optional<std::size_t> sp_order(const Span& g, std::size_t max_n);

/// Component-wise tensor product of spans.
Span sp_tensor(const Span& g, const Span& h);

/// Realized piecewise map: den cell i is sent affinely onto num cell i.
struct SpanPiece {
  RealCell from;
  RealCell to;
};
std::vector<SpanPiece> realize_span(const Span& g);

}  // namespace opgroup
