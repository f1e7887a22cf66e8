#include "doctest.h"

#include "opgroup/certificates.hpp"
#include "opgroup/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace opgroup;

TEST_CASE("identity and inverse laws on examples") {
  auto b = support::tree2();
  auto g = support::span(b, "⟨((. .) .)⟩ | ⟨(. (. .))⟩");
  auto e = Span::identity(b, 1);
  CHECK(sp_eq(sp_mul(e, g), g));
  CHECK(sp_eq(sp_mul(g, e), g));
  CHECK(sp_eq(sp_mul(g, sp_inv(g)), e));
  CHECK(sp_eq(sp_mul(sp_inv(g), g), e));
  CHECK(sp_inv(sp_inv(g)) == g);
  CHECK(sp_inv(e) == e);
}

TEST_CASE("spans with equal legs are trivial") {
  Rng rng(1);
  for (const auto& b : support::symmetric_backends()) {
    auto a = random_arrow(b, 2, 4, rng);
    CHECK(sp_eq(Span(a, a), Span::identity(b, 2)));
  }
}

TEST_CASE("a common factor cancels") {
  Rng rng(2);
  for (const auto& b : support::symmetric_backends()) {
    for (int t = 0; t < 50; ++t) {
      auto g = random_span(b, 2, 8, rng);
      auto c = random_arrow(b, g.apex(), 3, rng);
      Span h(compose(c, g.den), compose(c, g.num));
      CHECK(sp_eq(g, h));
      CHECK(sp_eq(sp_mul(g, sp_inv(h)), Span::identity(b, 2)));
    }
  }
}

TEST_CASE("orders of the torsion elements and the comb span") {
  auto b = support::tree2();
  CHECK(sp_order(make_gamma1(b), 4) == std::optional<std::size_t>(2));
  CHECK(sp_order(make_gamma2(b), 4) == std::optional<std::size_t>(3));
  CHECK(sp_order(Span::identity(b, 1), 4) == std::optional<std::size_t>(1));
  auto x0 = support::span(b, "<lcomb>|<rcomb>");
  CHECK_FALSE(sp_order(x0, 64));
  CHECK_FALSE(sp_is_identity(sp_pow(x0, 5)));
  CHECK(sp_eq(sp_pow(make_gamma2(b), 3), Span::identity(b, 1)));
  CHECK(sp_eq(sp_pow(x0, 0), Span::identity(b, 1)));
  CHECK(sp_eq(sp_pow(x0, -2), sp_inv(sp_mul(x0, x0))));
}

TEST_CASE("base mismatch") {
  auto b = support::tree2();
  try {
    sp_mul(Span::identity(b, 1), Span::identity(b, 2));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::base_mismatch);
  }
  CHECK_THROWS_AS(Span(Arrow::identity(b, 1), Arrow::identity(b, 2)), Error);
}

TEST_CASE("group axioms and the grid oracle on random spans") {
  Rng rng(2024);
  for (const auto& b : support::symmetric_backends()) {
    for (int t = 0; t < 60; ++t) {
      auto g = random_span(b, 2, 6, rng);
      auto h = random_span(b, 2, 6, rng);
      auto k = random_span(b, 2, 6, rng);
      auto left = sp_mul(sp_mul(g, h), k);
      auto right = sp_mul(g, sp_mul(h, k));
      CHECK(sp_eq(left, right));
      CHECK(oracle::maps_agree(left, right, b.radix(), b.dims()));
      CHECK(sp_eq(g, h) == oracle::maps_agree(g, h, b.radix(), b.dims()));
    }
  }
}

TEST_CASE("the realized map of a product is the composite of realized maps") {
  Rng rng(99);
  for (const auto& b : support::symmetric_backends()) {
    for (int t = 0; t < 30; ++t) {
      auto g = random_span(b, 2, 6, rng);
      auto h = random_span(b, 2, 6, rng);
      auto gh = sp_mul(g, h);
      oracle::SpanMap fg(g, b.radix()), fh(h, b.radix()), fgh(gh, b.radix());
      for (const auto& p : oracle::grid(2, oracle::resolution({g, h, gh}, b.dims()), b.radix())) {
        CHECK(fgh(p) == fh(fg(p)));
      }
    }
  }
}

TEST_CASE("equality is a congruence") {
  Rng rng(31);
  for (const auto& b : support::symmetric_backends()) {
    for (int t = 0; t < 30; ++t) {
      auto g = random_span(b, 1, 6, rng);
      auto h = random_span(b, 1, 6, rng);
      auto c = random_arrow(b, g.apex(), 2, rng);
      auto d = random_arrow(b, h.apex(), 2, rng);
      Span g2(compose(c, g.den), compose(c, g.num));
      Span h2(compose(d, h.den), compose(d, h.num));
      CHECK(sp_eq(sp_mul(g, h), sp_mul(g2, h2)));
    }
  }
}

TEST_CASE("a tensor product of spans is trivial iff every factor is") {
  for (const auto& b : {support::tree2(), Backend::dyadic_cube(2)}) {
    auto arrows = arrows_up_to(b, 1, 2);
    std::vector<Span> spans;
    for (const auto& d : arrows) {
      for (const auto& n : arrows) {
        if (d.domain() == n.domain()) spans.emplace_back(d, n);
      }
    }
    for (std::size_t i = 0; i < spans.size(); i += 3) {
      for (std::size_t j = 0; j < spans.size(); j += 2) {
        auto t = sp_tensor(spans[i], spans[j]);
        CHECK(sp_is_identity(t) == (sp_is_identity(spans[i]) && sp_is_identity(spans[j])));
      }
    }
  }
}

TEST_CASE("the comb span realizes the standard piecewise dyadic map") {
  auto b = support::tree2();
  auto pieces = realize_span(make_infinite_element(b));
  std::vector<std::pair<std::string, std::string>> expect{
      {"0:[0,1/4]", "0:[0,1/2]"}, {"0:[1/4,1/2]", "0:[1/2,3/4]"}, {"0:[1/2,1]", "0:[3/4,1]"}};
  REQUIRE(pieces.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(format_real_cell(b, pieces[i].from) == expect[i].first);
    CHECK(format_real_cell(b, pieces[i].to) == expect[i].second);
  }
}
