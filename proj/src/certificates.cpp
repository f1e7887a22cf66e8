#include "opgroup/certificates.hpp"

#include <unordered_set>

#include "opgroup/action.hpp"
#include "opgroup/enumerate.hpp"
#include "opgroup/error.hpp"
#include "opgroup/syntax.hpp"

namespace opgroup {

namespace {

void require_symmetric(const Backend& backend) {
  if (backend.planar()) throw Error(Errc::flavor, "permutation certificates need the symmetric flavor");
}

// Substitutes `inner` for the domain block of `outer` starting at `pos`.
Arrow graft_block(const Arrow& outer, std::size_t pos, const Arrow& inner, std::size_t dims) {
  std::size_t rest = outer.domain() - pos - inner.codomain();
  Arrow lifted = tensor(tensor(Arrow::identity(pos, dims), inner), Arrow::identity(rest, dims));
  return compose(lifted, outer);
}

Marking single_mark(std::size_t n, std::size_t i, std::size_t len = 1) {
  std::vector<int> labels(n, Marking::kUnmarked);
  for (std::size_t t = i; t < i + len; ++t) labels[t] = 0;
  return Marking(std::move(labels));
}

Cell marked_hull(const SemiPartitionClass& b) {
  auto cells = realize(b.rep.arrow);
  std::vector<Cell> marked;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (b.rep.marking[i] != Marking::kUnmarked) marked.push_back(cells[i].cell);
  }
  return hull(marked);
}

bool generator_reachable(const Backend& backend, const Cell& c) {
  if (backend.is_tree()) return true;
  for (std::size_t a = 1; a < c.dims(); ++a) {
    if (!c.axes[a].empty()) return false;
  }
  return true;
}

// Arrows within the bounds of the freeness sweeps: every base, every
// forest with domain at most max_perm_size, every domain permutation.
template <typename Visit>
void sweep_arrows(const Backend& backend, std::size_t max_perm_size, std::size_t max_depth, Visit visit) {
  for (std::size_t base = 1; base <= max_perm_size; ++base) {
    for (const auto& f : forests_up_to(backend, base, max_depth)) {
      if (f.domain() > max_perm_size) continue;
      for (const auto& p : all_permutations(f.domain())) visit(Arrow(p, f.forest()));
    }
  }
}

}  // namespace

SplitArrow standard_split(const Backend& backend, std::size_t x) {
  if (x == 0) throw Error(Errc::not_split, "the unit word is not split");
  Arrow a = Arrow::from_forest(std::vector<Operation>(x, backend.split_generator()));
  return {std::move(a), x, 0, x};
}

SplitArrow padded_split(const Backend& backend, std::size_t x) {
  if (x == 0) throw Error(Errc::not_split, "the unit word is not split");
  std::vector<Operation> forest(x, backend.split_generator());
  Operation gen = backend.split_generator();
  std::size_t domain = x * gen.arity();
  while (domain < 2 * x + 3) {
    forest[0] = op_compose(forest[0], forest[0].arity() - 1, gen).sorted();
    domain += gen.arity() - 1;
  }
  return {Arrow::from_forest(std::move(forest)), x, 1, x + 2};
}

Permutation block_permutation(std::size_t n, const std::vector<std::size_t>& starts, std::size_t len,
                              const std::vector<std::size_t>& images) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = i;
  for (std::size_t b = 0; b < starts.size(); ++b) {
    for (std::size_t t = 0; t < len; ++t) img[starts[b] + t] = starts[images[b]] + t;
  }
  return Permutation(std::move(img));
}

Span make_gamma1(const Backend& backend, const SplitArrow& s) {
  require_symmetric(backend);
  auto sigma = block_permutation(s.arrow.domain(), {s.first, s.second}, s.block, {1, 0});
  return Span(s.arrow, compose(Arrow::from_permutation(sigma, backend.dims()), s.arrow));
}

Span make_gamma2(const Backend& backend, const SplitArrow& s) {
  require_symmetric(backend);
  Arrow den = graft_block(s.arrow, s.first, s.arrow, backend.dims());
  std::vector<std::size_t> starts{s.first + s.first, s.first + s.second,
                                  s.second + s.arrow.domain() - s.block};
  auto sigma = block_permutation(den.domain(), starts, s.block, {2, 0, 1});
  return Span(den, compose(Arrow::from_permutation(sigma, backend.dims()), den));
}

Span make_infinite_element(const Backend& backend, const SplitArrow& s) {
  return Span(graft_block(s.arrow, s.first, s.arrow, backend.dims()),
              graft_block(s.arrow, s.second, s.arrow, backend.dims()));
}

Span make_gamma1(const Backend& backend) { return make_gamma1(backend, standard_split(backend, 1)); }
Span make_gamma2(const Backend& backend) { return make_gamma2(backend, standard_split(backend, 1)); }
Span make_infinite_element(const Backend& backend) {
  return make_infinite_element(backend, standard_split(backend, 1));
}

void CertReport::add(CertRow row) {
  violations += !row.ok;
  rows.push_back(std::move(row));
}

CertReport torsion_check(const Backend& backend) {
  CertReport report;
  auto order_text = [](std::optional<std::size_t> o) { return o ? std::to_string(*o) : std::string("none"); };
  std::vector<std::pair<std::string, SplitArrow>> variants{{"standard", standard_split(backend, 1)},
                                                            {"padded", padded_split(backend, 1)},
                                                            {"standard base 2", standard_split(backend, 2)}};
  for (const auto& [name, s] : variants) {
    auto o1 = sp_order(make_gamma1(backend, s), 4);
    report.add({"torsion", "gamma1 " + name, o1 == std::optional<std::size_t>(2), "order " + order_text(o1)});
    auto o2 = sp_order(make_gamma2(backend, s), 4);
    report.add({"torsion", "gamma2 " + name, o2 == std::optional<std::size_t>(3), "order " + order_text(o2)});
  }
  return report;
}

SemiPartitionClass ball_b1(const Backend& backend) {
  auto s = standard_split(backend, 1);
  return {MarkedArrow(s.arrow, single_mark(s.arrow.domain(), s.second))};
}

SemiPartitionClass ball_b2(const Backend& backend) {
  auto s = standard_split(backend, 1);
  return {MarkedArrow(s.arrow, single_mark(s.arrow.domain(), s.first))};
}

std::vector<SemiPartitionClass> generator_tree_balls(const Backend& backend, std::size_t depth) {
  std::vector<SemiPartitionClass> out;
  std::unordered_set<std::string> seen;
  for (const auto& op : generator_trees(backend.split_generator(), depth)) {
    Arrow a = Arrow::from_forest({op});
    for (std::size_t i = 0; i < op.arity(); ++i) {
      if (!seen.insert(operation_key(Operation({op.cell(i)}))).second) continue;
      out.push_back({MarkedArrow(a, single_mark(op.arity(), i))});
    }
  }
  return out;
}

bool in_ball_set(const Backend& backend, const SemiPartitionClass& b, const SemiPartitionClass& outer) {
  if (!b.is_multiball() || !is_ball(backend, b)) return false;
  return class_subset(b, outer) && generator_reachable(backend, marked_hull(b));
}

CertReport pingpong_check(const Backend& backend, std::size_t depth) {
  require_symmetric(backend);
  CertReport report;
  Span g1 = make_gamma1(backend);
  Span g2 = make_gamma2(backend);
  Span g2sq = sp_mul(g2, g2);
  auto b1 = ball_b1(backend);
  auto b2 = ball_b2(backend);
  std::size_t checked = 0;
  auto check = [&](const char* name, const Span& g, const SemiPartitionClass& b, const SemiPartitionClass& target) {
    ++checked;
    auto image = act(g, b);
    if (!in_ball_set(backend, image, target)) {
      report.add({"pingpong", std::string(name) + " on " + format_marked_arrow(backend, b.rep), false,
                  format_marked_arrow(backend, image.rep)});
    }
  };
  for (const auto& b : generator_tree_balls(backend, depth)) {
    bool in1 = in_ball_set(backend, b, b1);
    bool in2 = in_ball_set(backend, b, b2);
    if (in1 && in2) {
      report.add({"pingpong", "disjointness", false, format_marked_arrow(backend, b.rep)});
    }
    if (in2) check("gamma1", g1, b, b1);
    if (in1) {
      check("gamma2", g2, b, b2);
      check("gamma2^2", g2sq, b, b2);
    }
  }
  report.rows.push_back({"pingpong", "depth " + std::to_string(depth), report.violations == 0,
              "checked " + std::to_string(checked)});
  return report;
}

CertReport alternating_words_nontrivial(const Backend& backend, std::size_t max_len) {
  require_symmetric(backend);
  CertReport report;
  Span a = make_gamma1(backend);
  Span b = make_gamma2(backend);
  Span binv = sp_inv(b);
  struct Syllable {
    char name;
    const Span* span;
  };
  const Syllable sa{'a', &a}, sb{'b', &b}, sB{'B', &binv};
  auto rec = [&](auto&& self, const std::string& word, const Span& value) -> void {
    if (!word.empty()) {
      bool ok = !sp_is_identity(value);
      report.add({"words", word, ok, ok ? "" : format_span(backend, value)});
    }
    if (word.size() == max_len) return;
    std::vector<Syllable> next;
    if (word.empty()) next = {sa, sb, sB};
    else if (word.back() == 'a') next = {sb, sB};
    else next = {sa};
    for (const auto& s : next) self(self, word + s.name, word.empty() ? *s.span : sp_mul(value, *s.span));
  };
  rec(rec, std::string(), Span::identity(backend, 1));
  return report;
}

CertReport infinite_order_check(const Backend& backend, std::size_t max_n) {
  CertReport report;
  Span g = make_infinite_element(backend);
  Span p = g;
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool ok = !sp_is_identity(p);
    report.add({"infinite", "n=" + std::to_string(n), ok, std::to_string(p.apex()) + " leaves"});
    p = sp_mul(p, g);
  }
  return report;
}

CertReport free_action_check(const Backend& backend, std::size_t max_perm_size, std::size_t max_depth) {
  require_symmetric(backend);
  CertReport report;
  std::size_t checked = 0;
  sweep_arrows(backend, max_perm_size, max_depth, [&](const Arrow& alpha) {
    for (const auto& sigma : all_permutations(alpha.domain())) {
      if (sigma.is_identity()) continue;
      ++checked;
      Arrow moved = compose(Arrow::from_permutation(sigma, backend.dims()), alpha);
      if (moved == alpha || realize(moved) == realize(alpha)) {
        report.add({"freeaction", format_permutation(sigma) + " on " + format_arrow(backend, alpha), false,
                    format_arrow(backend, moved)});
      }
    }
  });
  report.rows.push_back({"freeaction", "perm<=" + std::to_string(max_perm_size) + " depth<=" + std::to_string(max_depth),
              report.violations == 0, "checked " + std::to_string(checked)});
  return report;
}

bool sigma_span_check(const Arrow& alpha, const Permutation& sigma) {
  if (sigma.size() != alpha.domain()) throw Error(Errc::size_mismatch, "sigma must act on the domain of alpha");
  if (alpha.codomain() == 0) return true;
  std::size_t dims = alpha.forest().front().dims();
  Span g(alpha, compose(Arrow::from_permutation(sigma, dims), alpha));
  return sp_eq(g, Span::identity(alpha.codomain(), dims));
}

bool sigma_span_check_marked(const Arrow& alpha, const Permutation& sigma) {
  if (sigma.size() != alpha.domain()) throw Error(Errc::size_mismatch, "sigma must act on the domain of alpha");
  if (sigma.is_identity()) return true;
  std::size_t dims = alpha.forest().front().dims();
  Span g(alpha, compose(Arrow::from_permutation(sigma, dims), alpha));
  auto inv = sigma.inverse();
  std::size_t i = 0;
  while (inv(i) == i) ++i;
  SemiPartitionClass s{MarkedArrow(alpha, single_mark(alpha.domain(), i))};
  return sp_class_eq(act(g, s), s);
}

CertReport sigma_span_sweep(const Backend& backend, std::size_t max_perm_size, std::size_t max_depth) {
  require_symmetric(backend);
  CertReport report;
  std::size_t checked = 0;
  sweep_arrows(backend, max_perm_size, max_depth, [&](const Arrow& alpha) {
    for (const auto& sigma : all_permutations(alpha.domain())) {
      if (sigma.is_identity()) continue;
      ++checked;
      bool algebraic = sigma_span_check(alpha, sigma);
      bool marked = sigma_span_check_marked(alpha, sigma);
      if (algebraic || marked) {
        report.add({"sigma", format_permutation(sigma) + " on " + format_arrow(backend, alpha), false,
                    std::string("algebraic=") + (algebraic ? "true" : "false") +
                        " marked=" + (marked ? "true" : "false")});
      }
    }
  });
  report.rows.push_back({"sigma", "perm<=" + std::to_string(max_perm_size) + " depth<=" + std::to_string(max_depth),
              report.violations == 0, "checked " + std::to_string(checked)});
  return report;
}

}  // namespace opgroup
