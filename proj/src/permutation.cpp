#include "opgroup/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "opgroup/error.hpp"

namespace opgroup {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(Errc::not_bijection, "permutation images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), std::size_t{0});
  return p;
}

Permutation Permutation::block_sum(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.images_ = a.images_;
  p.images_.reserve(a.size() + b.size());
  for (std::size_t v : b.images_) p.images_.push_back(v + a.size());
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) {
    throw Error(Errc::size_mismatch, "composing permutations of different sizes");
  }
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace opgroup
