#include "opgroup/fractions.hpp"

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

std::size_t dims_of(const Arrow& a) { return a.forest().empty() ? 0 : a.forest().front().dims(); }

void require_same_base(const Span& g, const Span& h) {
  if (g.base() != h.base()) throw Error(Errc::base_mismatch, "spans have different base words");
}

}  // namespace

Span::Span(Arrow d, Arrow n) : den(std::move(d)), num(std::move(n)) {
  if (den.domain() != num.domain() || den.codomain() != num.codomain()) {
    throw Error(Errc::base_mismatch, "span legs must share domain and codomain");
  }
}

Span Span::identity(std::size_t base, std::size_t dims) {
  auto id = Arrow::identity(base, dims);
  return Span(id, id);
}

Span sp_mul(const Span& g, const Span& h) {
  require_same_base(g, h);
  auto [b1, b2] = square_fill(g.num, h.den);
  return Span(compose(b1, g.den), compose(b2, h.num));
}

Span sp_inv(const Span& g) { return Span(g.num, g.den); }

bool sp_eq(const Span& g, const Span& h) {
  require_same_base(g, h);
  auto [b1, b2] = square_fill(g.den, h.den);
  return compose(b1, g.num) == compose(b2, h.num);
}

bool sp_is_identity(const Span& g) { return g.den == g.num; }

Span sp_pow(const Span& g, std::int64_t n) {
  Span base = n < 0 ? sp_inv(g) : g;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Span acc = Span::identity(g.base(), dims_of(g.den));
  for (std::uint64_t i = 0; i < m; ++i) acc = sp_mul(acc, base);
  return acc;
}

std::optional<std::size_t> sp_order(const Span& g, std::size_t max_n) {
  Span acc = g;
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (sp_is_identity(acc)) return n;
    acc = sp_mul(acc, g);
  }
  return std::nullopt;
}

Span sp_tensor(const Span& g, const Span& h) { return Span(tensor(g.den, h.den), tensor(g.num, h.num)); }

std::vector<SpanPiece> realize_span(const Span& g) {
  auto from = realize(g.den);
  auto to = realize(g.num);
  std::vector<SpanPiece> out;
  out.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) out.push_back({from[i], to[i]});
  return out;
}

}  // namespace opgroup
