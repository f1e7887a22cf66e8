#pragma once

#include <vector>

#include "opgroup/enumerate.hpp"
#include "opgroup/syntax.hpp"

namespace support {

inline std::vector<opgroup::Backend> symmetric_backends() {
  using opgroup::Backend;
  return {Backend::kary_tree(2), Backend::kary_tree(3), Backend::dyadic_cube(1), Backend::dyadic_cube(2)};
}

// Permutation-free forests, with every domain permutation added when the
// domain has at most `max_perm` coordinates and a single cyclic shift
// otherwise.
inline std::vector<opgroup::Arrow> small_arrows(const opgroup::Backend& b, std::size_t base, std::size_t gens,
                                                std::size_t max_perm = 3) {
  std::vector<opgroup::Arrow> out;
  for (const auto& f : opgroup::forests_up_to(b, base, gens)) {
    if (b.planar()) {
      out.push_back(f);
    } else if (f.domain() <= max_perm) {
      for (const auto& p : opgroup::all_permutations(f.domain())) out.emplace_back(p, f.forest());
    } else {
      out.push_back(f);
      std::vector<std::size_t> img(f.domain());
      for (std::size_t i = 0; i < img.size(); ++i) img[i] = (i + 1) % img.size();
      out.emplace_back(opgroup::Permutation(img), f.forest());
    }
  }
  return out;
}

inline opgroup::Marking random_marking(std::size_t n, opgroup::Rng& rng) {
  std::uniform_int_distribution<int> pick(-1, static_cast<int>(n) - 1);
  std::vector<int> labels(n);
  for (auto& l : labels) l = pick(rng);
  return opgroup::Marking(labels);
}

inline opgroup::Backend tree2() { return opgroup::Backend::kary_tree(2); }

inline opgroup::Span span(const opgroup::Backend& b, const char* text) { return opgroup::parse_span(b, text); }
inline opgroup::Arrow arrow(const opgroup::Backend& b, const char* text) { return opgroup::parse_arrow(b, text); }

}  // namespace support
