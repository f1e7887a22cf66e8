#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "opgroup/action.hpp"
#include "opgroup/certificates.hpp"
#include "opgroup/error.hpp"
#include "opgroup/poset.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace opgroup;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, std::optional<double> limit, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = !limit || secs < *limit;
  bool pass = out.pass && in_time;
  failures += !pass;
  char timing[96];
  if (limit) std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, *limit);
  else std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::printf("%s [%2d] %s: %s (%s)\n", pass ? "PASS" : "FAIL", id, title, out.detail.c_str(), timing);
  std::fflush(stdout);
}

std::string count(const char* what, std::size_t n) { return std::string(what) + "=" + std::to_string(n); }

// Every marked arrow over base 1 with at most `gens` generators: all domain
// permutations and all partial markings.
std::vector<MarkedArrow> all_marked(const Backend& b, std::size_t gens) {
  std::vector<MarkedArrow> out;
  for (const auto& a : arrows_up_to(b, 1, gens)) {
    for (const auto& m : all_markings(a.domain(), false, false)) out.emplace_back(a, m);
  }
  return out;
}

bool same_sets(const std::vector<SemiPartitionClass>& x, const std::vector<SemiPartitionClass>& y) {
  auto covered = [](const auto& from, const auto& to) {
    for (const auto& a : from) {
      bool found = false;
      for (const auto& b : to) found = found || sp_class_eq(a, b);
      if (!found) return false;
    }
    return true;
  };
  return covered(x, y) && covered(y, x);
}

}  // namespace

int main() {
  const Backend tree = Backend::kary_tree(2);
  const Backend cube1 = Backend::dyadic_cube(1);
  const Backend cube2 = Backend::dyadic_cube(2);

  criterion(1, "torsion orders of gamma1 and gamma2", 1.0, [&]() -> Outcome {
    auto o1 = sp_order(make_gamma1(tree), 4);
    auto o2 = sp_order(make_gamma2(tree), 4);
    auto show = [](std::optional<std::size_t> o) { return o ? std::to_string(*o) : std::string("none"); };
    return {o1 == std::optional<std::size_t>(2) && o2 == std::optional<std::size_t>(3),
            "order(gamma1)=" + show(o1) + " order(gamma2)=" + show(o2)};
  });

  criterion(2, "comb span has no trivial power up to 64", 5.0, [&]() -> Outcome {
    auto g = make_infinite_element(tree);
    auto e = Span::identity(tree, 1);
    std::size_t trivial = 0;
    for (std::int64_t n = 1; n <= 64; ++n) trivial += sp_eq(sp_pow(g, n), e);
    return {trivial == 0, count("trivial_powers", trivial)};
  });

  criterion(3, "ping-pong inclusions for balls of depth <= 6", 60.0, [&]() -> Outcome {
    auto r = pingpong_check(tree, 6);
    // Dyadic intervals of exponent 1..6 split evenly between the two halves.
    std::size_t per_half = 0;
    for (std::size_t e = 1; e <= 6; ++e) per_half += std::size_t{1} << (e - 1);
    std::string expected = "checked " + std::to_string(3 * per_half);
    bool swap = sp_class_eq(act(make_gamma1(tree), ball_b2(tree)), ball_b1(tree));
    return {r.ok() && r.rows.back().witness == expected && swap,
            count("violations", r.violations) + " " + r.rows.back().witness + " gamma1.B2=B1:" + (swap ? "yes" : "no")};
  });

  criterion(4, "alternating words of syllable length <= 10 are nontrivial", 60.0, [&]() -> Outcome {
    auto r = alternating_words_nontrivial(tree, 10);
    std::size_t expected = 0;
    for (std::size_t len = 1; len <= 10; ++len) expected += (std::size_t{1} << (len / 2)) + (std::size_t{1} << ((len + 1) / 2));
    return {r.ok() && r.rows.size() == expected, count("words", r.rows.size()) + " " + count("violations", r.violations)};
  });

  criterion(5, "group axioms on 1000 random spans and the grid oracle", std::nullopt, [&]() -> Outcome {
    std::size_t axiom_fail = 0, oracle_checks = 0, oracle_fail = 0, spans = 0;
    for (const auto& b : {tree, cube2}) {
      Rng rng(20240501);
      std::vector<Span> s;
      for (int i = 0; i < 1000; ++i) s.push_back(random_span(b, 1 + i % 2, 8, rng));
      spans += s.size();
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto& g = s[i];
        const auto& h = s[(i + 2) % s.size()];
        const auto& k = s[(i + 4) % s.size()];
        auto e = Span::identity(b, g.base());
        auto left = sp_mul(sp_mul(g, h), k);
        auto right = sp_mul(g, sp_mul(h, k));
        bool ok = sp_eq(left, right) && sp_eq(sp_mul(e, g), g) && sp_eq(sp_mul(g, e), g) &&
                  sp_eq(sp_mul(g, sp_inv(g)), e) && sp_eq(sp_mul(sp_inv(g), g), e);
        axiom_fail += !ok;
        auto c = random_arrow(b, g.apex(), 2, rng);
        Span expanded(compose(c, g.den), compose(c, g.num));
        const auto& other = s[(i + 1) % s.size()];
        std::vector<std::pair<Span, Span>> pairs{{left, right}, {g, expanded}, {sp_mul(g, sp_inv(g)), e}};
        if (other.base() == g.base()) pairs.emplace_back(g, other);
        pairs.emplace_back(g, sp_mul(g, h));
        for (const auto& [x, y] : pairs) {
          ++oracle_checks;
          oracle_fail += sp_eq(x, y) != oracle::maps_agree(x, y, b.radix(), b.dims());
        }
      }
    }
    return {axiom_fail == 0 && oracle_fail == 0, count("spans", spans) + " " + count("axiom_failures", axiom_fail) +
                                                     " " + count("oracle_checks", oracle_checks) + " " +
                                                     count("oracle_disagreements", oracle_fail)};
  });

  criterion(6, "marked-arrow preorder, filling independence, submultiball criterion", std::nullopt, [&]() -> Outcome {
    std::size_t marked = 0, pairs = 0, bad = 0;
    for (const auto& b : {tree, cube1, cube2}) {
      auto all = all_marked(b, 2);
      marked += all.size();
      std::size_t n = all.size();
      std::vector<char> rel(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (all[i].base() != all[j].base()) continue;
          ++pairs;
          bool r = ma_subset(all[i], all[j]);
          rel[i * n + j] = r;
          auto [b1, b2] = square_fill(all[i].arrow, all[j].arrow);
          Arrow split = tensor(Arrow::from_forest({b.split_generator()}), Arrow::identity(b, b1.domain() - 1));
          std::vector<std::size_t> img(split.domain());
          for (std::size_t t = 0; t < img.size(); ++t) img[t] = (t + 1) % img.size();
          Arrow c = compose(Arrow::from_permutation(Permutation(img), b.dims()), split);
          bad += r != ma_subset_via(all[i], all[j], compose(c, b1), compose(c, b2));
          bad += r != oracle::subset(all[i], all[j], b.radix());
        }
      }
      for (std::size_t i = 0; i < n; ++i) bad += !rel[i * n + i];
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!rel[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k) bad += rel[j * n + k] && !rel[i * n + k];
        }
      }
      std::vector<std::vector<SemiPartitionClass>> subs;
      for (const auto& m : all) subs.push_back(submultiballs({m}));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          bool by_balls = true;
          for (const auto& q : subs[i]) {
            bool found = false;
            for (const auto& p : subs[j]) found = found || class_subset(q, p);
            by_balls = by_balls && found;
          }
          bad += rel[i * n + j] != by_balls;
          bool eq = rel[i * n + j] && rel[j * n + i];
          bad += eq != same_sets(subs[i], subs[j]);
        }
      }
    }
    return {bad == 0, count("marked_arrows", marked) + " " + count("pairs", pairs) + " " + count("violations", bad)};
  });

  criterion(7, "action laws, order preservation, submultiball compatibility", std::nullopt, [&]() -> Outcome {
    std::size_t checks = 0, bad = 0, parts = 0;
    for (const auto& b : {tree, cube2}) {
      auto t = enumerate_pn(b, 1, 2, 1, 0);
      const auto& ps = t.elements;
      parts += ps.size();
      Rng rng(7);
      for (int r = 0; r < 100; ++r) {
        auto g = random_span(b, 1, 8, rng);
        auto h = random_span(b, 1, 8, rng);
        auto gh = sp_mul(g, h);
        std::vector<SemiPartitionClass> moved;
        for (const auto& p : ps) {
          auto gp = act(g, p);
          moved.push_back(gp);
          ++checks;
          bad += !sp_class_eq(act(gh, p), act(g, act(h, p)));
          bad += !sp_class_eq(act(Span::identity(b, 1), p), p);
          std::vector<SemiPartitionClass> images;
          for (const auto& ball : submultiballs(p)) images.push_back(act(g, ball));
          bad += !same_sets(submultiballs(gp), images);
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
          for (std::size_t j = 0; j < ps.size(); ++j) {
            if (class_subset(ps[i], ps[j])) bad += !class_subset(moved[i], moved[j]);
          }
        }
      }
    }
    return {bad == 0, count("partitions", parts) + " " + count("checks", checks) + " " + count("violations", bad)};
  });

  criterion(8, "stabilizer decomposition round trip", std::nullopt, [&]() -> Outcome {
    std::size_t bad = 0, tuples = 0;
    Rng rng(8);
    for (const char* text : {"caret @ m[0:a 1:b]", "lcomb @ m[0:a 1:b 2:c]"}) {
      auto w = make_witness({parse_marked_arrow(tree, text)});
      for (int t = 0; t < 200; ++t) {
        std::vector<Span> comps;
        for (auto c : w.subwords) comps.push_back(random_span(tree, c, 8, rng));
        auto back = decompose(xi(comps, w), w);
        ++tuples;
        bool ok = back.size() == comps.size();
        for (std::size_t i = 0; ok && i < comps.size(); ++i) ok = sp_eq(back[i], comps[i]);
        bad += !ok;
      }
    }
    bool rejected = false;
    try {
      decompose(make_gamma1(tree), make_witness({parse_marked_arrow(tree, "caret @ m[0:a 1:b]")}));
    } catch (const Error& e) {
      rejected = e.code() == Errc::not_in_stabilizer;
    }
    return {bad == 0 && rejected,
            count("tuples", tuples) + " " + count("mismatches", bad) + " gamma1_rejected=" + (rejected ? "yes" : "no")};
  });

  criterion(9, "poset enumeration, non-emptiness, filteredness", std::nullopt, [&]() -> Outcome {
    std::size_t classes = enumerate_pn(tree, 1, 1, 1, 1).elements.size();
    std::size_t construct_bad = 0, filtered_bad = 0, pairs = 0;
    for (const auto& b : {tree, cube2}) {
      for (std::size_t x = 1; x <= 3; ++x) {
        for (std::size_t y = 1; y <= 2; ++y) {
          for (std::size_t n = 1; n <= 4; ++n) construct_bad += !n_condition(b, construct_partition_n(b, x, y, n), y, n);
        }
      }
      for (std::size_t depth = 0; depth <= 2; ++depth) {
        for (std::size_t n = 1; n <= 2; ++n) {
          auto r = check_filtered(b, enumerate_pn(b, 1, depth, 1, n));
          filtered_bad += r.failures;
          pairs += r.rows.size();
        }
      }
    }
    return {classes == 2 && construct_bad == 0 && filtered_bad == 0,
            count("classes", classes) + " " + count("construction_failures", construct_bad) + " " +
                count("filtered_pairs", pairs) + " " + count("filtered_failures", filtered_bad)};
  });

  criterion(10, "free permutation action and sigma spans", std::nullopt, [&]() -> Outcome {
    std::size_t bad = 0;
    std::string detail;
    for (const auto& b : {tree, cube2}) {
      auto f = free_action_check(b, 4, 3);
      auto s = sigma_span_sweep(b, 4, 3);
      bad += f.violations + s.violations;
      detail += b.name() + ": free " + f.rows.back().witness + ", sigma " + s.rows.back().witness + "; ";
    }
    return {bad == 0, detail + count("violations", bad)};
  });

  criterion(11, "tree and interval backends agree; square cut orders coincide", std::nullopt, [&]() -> Outcome {
    std::size_t bad = 0;
    Rng rng(11);
    auto to_cube = [&](const Arrow& a) {
      std::vector<Operation> forest;
      for (const auto& op : a.forest()) forest.push_back(cube1.from_cut_tree(*tree.find_cut_tree(op.cells())));
      return Arrow(a.perm(), forest);
    };
    for (int t = 0; t < 500; ++t) {
      auto a = random_arrow(tree, 2, 6, rng);
      auto x = random_arrow(tree, a.domain(), 3, rng);
      auto ca = to_cube(a);
      auto cx = to_cube(x);
      bad += oracle::boxes(a, 2) != oracle::boxes(ca, 2);
      bad += oracle::boxes(compose(x, a), 2) != oracle::boxes(compose(cx, ca), 2);
      auto g = random_span(tree, 1, 8, rng);
      auto h = random_span(tree, 1, 8, rng);
      Span cg(to_cube(g.den), to_cube(g.num)), ch(to_cube(h.den), to_cube(h.num));
      auto p = sp_mul(g, h);
      auto cp = sp_mul(cg, ch);
      bad += oracle::boxes(p.den, 2) != oracle::boxes(cp.den, 2);
      bad += oracle::boxes(p.num, 2) != oracle::boxes(cp.num, 2);
    }
    auto vh = cube2.from_cut_tree(parse_cut_tree("[0 [1 . .] [1 . .]]")).sorted();
    auto hv = cube2.from_cut_tree(parse_cut_tree("[1 [0 . .] [0 . .]]")).sorted();
    bool quadrants = vh == hv && vh.arity() == 4;
    return {bad == 0 && quadrants, count("arrows", 500) + " " + count("mismatches", bad) +
                                       " quadrants_equal=" + (quadrants ? "yes" : "no")};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
