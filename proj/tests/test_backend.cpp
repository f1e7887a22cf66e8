#include "doctest.h"

#include "opgroup/enumerate.hpp"
#include "opgroup/error.hpp"
#include "opgroup/syntax.hpp"
#include "support.hpp"

using namespace opgroup;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::unknown;
}

}  // namespace

TEST_CASE("generators and their arities") {
  auto t3 = Backend::kary_tree(3);
  CHECK(t3.generators().size() == 1);
  CHECK(t3.split_generator().arity() == 3);
  auto c2 = Backend::dyadic_cube(2);
  CHECK(c2.generators().size() == 2);
  for (const auto& g : c2.generators()) CHECK(g.arity() == 2);
  CHECK(c2.name() == "cube:d=2");
  CHECK(Backend::kary_tree(2).name() == "tree:k=2");
}

TEST_CASE("planar cubes above dimension one are rejected") {
  CHECK(code_of([] { Backend::dyadic_cube(2, Flavor::planar); }) == Errc::flavor);
  CHECK_NOTHROW(Backend::dyadic_cube(1, Flavor::planar));
  CHECK_NOTHROW(Backend::kary_tree(3, Flavor::planar));
}

TEST_CASE("operation counts follow the Catalan numbers for binary trees") {
  auto b = support::tree2();
  std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42};
  for (std::size_t g = 0; g < catalan.size(); ++g) CHECK(operations_with(b, g).size() == catalan[g]);
}

TEST_CASE("ternary tree counts follow the Fuss-Catalan numbers") {
  auto b = Backend::kary_tree(3);
  std::vector<std::size_t> fuss{1, 1, 3, 12, 55};
  for (std::size_t g = 0; g < fuss.size(); ++g) CHECK(operations_with(b, g).size() == fuss[g]);
}

TEST_CASE("the two cut orders of a square give the same quadrants") {
  auto b = Backend::dyadic_cube(2);
  auto vh = b.from_cut_tree(parse_cut_tree("[0 [1 . .] [1 . .]]"));
  auto hv = b.from_cut_tree(parse_cut_tree("[1 [0 . .] [0 . .]]"));
  CHECK(vh.sorted() == hv.sorted());
  CHECK(vh.arity() == 4);
  CHECK(b.generator_count(vh) == 3);
}

TEST_CASE("pattern validation") {
  auto b = Backend::dyadic_cube(2);
  CHECK_NOTHROW(parse_pattern(b, "{b(1:0,0:0),b(1:1,1:0),b(1:1,1:1)}"));
  CHECK(code_of([&] { parse_pattern(b, "{b(1:0,0:0),b(1:1,1:0)}"); }) == Errc::not_partition);
  CHECK(code_of([&] { parse_pattern(b, "{b(1:0,0:0),b(0:0,1:0),b(1:1,1:1)}"); }) == Errc::not_partition);
  auto p = Backend::dyadic_cube(1, Flavor::planar);
  CHECK(code_of([&] { p.validate_pattern(parse_pattern(Backend::dyadic_cube(1), "{b(1:1),b(1:0)}").cells()); }) ==
        Errc::flavor);
}

TEST_CASE("a cut tree is found for every enumerated cube operation") {
  auto b = Backend::dyadic_cube(2);
  for (const auto& op : operations_up_to(b, 3)) {
    auto t = b.find_cut_tree(op.cells());
    REQUIRE(t);
    CHECK(b.from_cut_tree(*t).sorted() == op);
    CHECK(t->cuts() == b.generator_count(op));
  }
}

TEST_CASE("slot out of range") {
  auto b = support::tree2();
  CHECK(code_of([&] { op_compose(b.split_generator(), 2, b.split_generator()); }) == Errc::slot_range);
}

TEST_CASE("operad associativity of grafting") {
  for (const auto& b : support::symmetric_backends()) {
    auto ops = operations_up_to(b, 2);
    for (const auto& p : ops) {
      for (const auto& q : ops) {
        for (const auto& r : ops) {
          for (std::size_t i = 0; i < p.arity(); ++i) {
            for (std::size_t j = 0; j < q.arity(); ++j) {
              auto left = op_compose(op_compose(p, i, q), i + j, r);
              auto right = op_compose(p, i, op_compose(q, j, r));
              CHECK(left == right);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("common refinement refines both operations") {
  for (const auto& b : support::symmetric_backends()) {
    auto ops = operations_up_to(b, 2);
    for (const auto& p : ops) {
      for (const auto& q : ops) {
        auto r = op_common_refinement(p, q);
        CHECK(r.common.is_sorted());
        auto gp = op_graft(p, r.phi_p);
        auto gq = op_graft(q, r.phi_q);
        for (std::size_t i = 0; i < r.common.arity(); ++i) {
          CHECK(gp.cell(r.pi_p(i)) == r.common.cell(i));
          CHECK(gq.cell(r.pi_q(i)) == r.common.cell(i));
        }
        // No coarser tiling: every common cell lies in a cell of p and one of q,
        // and the common cells are their intersections.
        for (const auto& c : r.common.cells()) {
          bool found = false;
          for (const auto& x : p.cells()) {
            for (const auto& y : q.cells()) {
              auto i = intersect(x, y);
              if (i && *i == c) found = true;
            }
          }
          CHECK(found);
        }
      }
    }
  }
}
