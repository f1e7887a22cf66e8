#include "opgroup/markings.hpp"

#include <unordered_map>

#include "opgroup/error.hpp"

namespace opgroup {

Marking::Marking(std::vector<int> labels) : labels_(std::move(labels)) {
  std::unordered_map<int, int> relabel;
  for (int& l : labels_) {
    if (l < 0) {
      l = kUnmarked;
      continue;
    }
    auto [it, inserted] = relabel.try_emplace(l, static_cast<int>(relabel.size()));
    l = it->second;
  }
  symbols_ = relabel.size();
}

Marking Marking::full_distinct(std::size_t n) {
  std::vector<int> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<int>(i);
  return Marking(std::move(l));
}

Marking Marking::uniform(std::size_t n) { return Marking(std::vector<int>(n, 0)); }

std::size_t Marking::marked_count() const {
  std::size_t n = 0;
  for (int l : labels_) n += l != kUnmarked;
  return n;
}

bool Marking::is_full() const { return marked_count() == labels_.size(); }

bool Marking::is_ordered() const {
  std::vector<bool> closed(symbols_, false);
  int prev = kUnmarked;
  for (int l : labels_) {
    if (l != prev && prev != kUnmarked) closed[static_cast<std::size_t>(prev)] = true;
    if (l != kUnmarked && l != prev && closed[static_cast<std::size_t>(l)]) return false;
    prev = l;
  }
  return true;
}

Marking Marking::only(int symbol) const {
  std::vector<int> l(labels_.size(), kUnmarked);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (labels_[i] == symbol) l[i] = 0;
  }
  return Marking(std::move(l));
}

MarkedArrow::MarkedArrow(Arrow a, Marking m) : arrow(std::move(a)), marking(std::move(m)) {
  if (marking.size() != arrow.domain()) throw Error(Errc::length, "marking length differs from the arrow's domain");
}

Marking pull_back(const Arrow& arrow, const Marking& comarking) {
  if (comarking.size() != arrow.codomain()) {
    throw Error(Errc::length, "comarking length differs from the arrow's codomain");
  }
  std::vector<int> by_position;
  by_position.reserve(arrow.domain());
  for (std::size_t j = 0; j < arrow.codomain(); ++j) by_position.insert(by_position.end(), arrow.forest()[j].arity(), comarking[j]);
  std::vector<int> labels(arrow.domain());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = by_position[arrow.perm()(i)];
  return Marking(std::move(labels));
}

bool marking_subset(const Marking& m1, const Marking& m2) {
  if (m1.size() != m2.size()) throw Error(Errc::length, "markings have different lengths");
  std::vector<int> image(m1.symbol_count(), Marking::kUnmarked);
  for (std::size_t i = 0; i < m1.size(); ++i) {
    int s = m1[i];
    if (s == Marking::kUnmarked) continue;
    int t = m2[i];
    if (t == Marking::kUnmarked) return false;
    auto& img = image[static_cast<std::size_t>(s)];
    if (img == Marking::kUnmarked) {
      img = t;
    } else if (img != t) {
      return false;
    }
  }
  return true;
}

bool ma_subset_via(const MarkedArrow& p, const MarkedArrow& q, const Arrow& b1, const Arrow& b2) {
  return marking_subset(pull_back(b1, p.marking), pull_back(b2, q.marking));
}

bool ma_subset(const MarkedArrow& p, const MarkedArrow& q) {
  if (p.base() != q.base()) throw Error(Errc::base_mismatch, "marked arrows over different base words");
  if (p.arrow == q.arrow) return marking_subset(p.marking, q.marking);
  auto [b1, b2] = square_fill(p.arrow, q.arrow);
  return ma_subset_via(p, q, b1, b2);
}

bool sp_class_eq(const SemiPartitionClass& p, const SemiPartitionClass& q) {
  return ma_subset(p.rep, q.rep) && ma_subset(q.rep, p.rep);
}

bool class_subset(const SemiPartitionClass& q, const SemiPartitionClass& p) { return ma_subset(q.rep, p.rep); }

std::vector<SemiPartitionClass> submultiballs(const SemiPartitionClass& p) {
  std::vector<SemiPartitionClass> out;
  for (std::size_t s = 0; s < p.rep.marking.symbol_count(); ++s) {
    out.push_back({MarkedArrow(p.rep.arrow, p.rep.marking.only(static_cast<int>(s)))});
  }
  return out;
}

bool is_ball(const Backend& backend, const SemiPartitionClass& b) {
  if (!b.is_multiball()) throw Error(Errc::not_multiball, "is_ball needs a multiball");
  auto cells = realize(b.rep.arrow);
  std::vector<Cell> marked;
  std::size_t root = 0;
  bool first = true;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (b.rep.marking[i] == Marking::kUnmarked) continue;
    if (first) {
      root = cells[i].root;
      first = false;
    } else if (cells[i].root != root) {
      return false;
    }
    marked.push_back(cells[i].cell);
  }
  return tiles(hull(marked), marked, backend.radix());
}

std::size_t object_class(const SemiPartitionClass& b) {
  if (!b.is_multiball()) throw Error(Errc::not_multiball, "object_class needs a multiball");
  return b.rep.marking.marked_count();
}

bool object_equivalent(const Backend& backend, std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return a == b;
  std::size_t step = backend.radix() - 1;
  if (!backend.is_tree()) return true;
  return a % step == b % step;
}

}  // namespace opgroup
