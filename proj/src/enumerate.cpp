#include "opgroup/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

namespace opgroup {

std::string operation_key(const Operation& op) {
  std::string key;
  for (const auto& c : op.cells()) {
    for (const auto& axis : c.axes) {
      key += axis;
      key += '\x7f';
    }
    key += '|';
  }
  return key;
}

namespace {

std::vector<Operation> grow(const std::vector<Operation>& layer, const std::vector<Operation>& gens) {
  std::vector<Operation> next;
  std::unordered_set<std::string> seen;
  for (const auto& op : layer) {
    for (std::size_t slot = 0; slot < op.arity(); ++slot) {
      for (const auto& g : gens) {
        auto r = op_compose(op, slot, g).sorted();
        if (seen.insert(operation_key(r)).second) next.push_back(std::move(r));
      }
    }
  }
  return next;
}

void forests_rec(const std::vector<std::vector<Operation>>& by_gens, std::size_t base, std::size_t budget,
                 std::vector<Operation>& current, std::vector<Arrow>& out) {
  if (current.size() == base) {
    out.push_back(Arrow::from_forest(current));
    return;
  }
  for (std::size_t g = 0; g <= budget && g < by_gens.size(); ++g) {
    for (const auto& op : by_gens[g]) {
      current.push_back(op);
      forests_rec(by_gens, base, budget - g, current, out);
      current.pop_back();
    }
  }
}

void markings_rec(std::size_t n, bool full, bool ordered, std::vector<int>& cur, int symbols,
                  std::vector<Marking>& out) {
  if (cur.size() == n) {
    out.emplace_back(cur);
    return;
  }
  if (!full) {
    cur.push_back(Marking::kUnmarked);
    markings_rec(n, full, ordered, cur, symbols, out);
    cur.pop_back();
  }
  for (int s = 0; s <= symbols; ++s) {
    if (ordered && s < symbols) {
      // Reusing a symbol is only allowed right after its block.
      if (cur.empty() || cur.back() != s) continue;
    }
    cur.push_back(s);
    markings_rec(n, full, ordered, cur, s == symbols ? symbols + 1 : symbols, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Operation> operations_with(const Backend& backend, std::size_t gens) {
  std::vector<Operation> layer{backend.identity()};
  auto generators = backend.generators();
  for (std::size_t g = 0; g < gens; ++g) layer = grow(layer, generators);
  return layer;
}

std::vector<Operation> operations_up_to(const Backend& backend, std::size_t max_gens) {
  std::vector<Operation> out;
  std::vector<Operation> layer{backend.identity()};
  auto generators = backend.generators();
  for (std::size_t g = 0;; ++g) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (g == max_gens) break;
    layer = grow(layer, generators);
  }
  return out;
}

std::vector<Operation> generator_trees(const Operation& generator, std::size_t max_gens) {
  std::vector<Operation> out;
  std::vector<Operation> layer{Operation::unit(generator.dims())};
  for (std::size_t g = 0;; ++g) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (g == max_gens) break;
    layer = grow(layer, {generator});
  }
  return out;
}

std::vector<Arrow> forests_up_to(const Backend& backend, std::size_t base, std::size_t max_gens) {
  std::vector<std::vector<Operation>> by_gens;
  for (std::size_t g = 0; g <= max_gens; ++g) by_gens.push_back(operations_with(backend, g));
  std::vector<Arrow> out;
  std::vector<Operation> current;
  forests_rec(by_gens, base, max_gens, current, out);
  return out;
}

std::vector<Arrow> arrows_up_to(const Backend& backend, std::size_t base, std::size_t max_gens) {
  auto forests = forests_up_to(backend, base, max_gens);
  if (backend.planar()) return forests;
  std::vector<Arrow> out;
  for (const auto& f : forests) {
    for (const auto& p : all_permutations(f.domain())) out.emplace_back(p, f.forest());
  }
  return out;
}

std::vector<Marking> all_markings(std::size_t n, bool full, bool ordered) {
  std::vector<Marking> out;
  std::vector<int> cur;
  markings_rec(n, full, ordered, cur, 0, out);
  return out;
}

Operation random_operation(const Backend& backend, std::size_t gens, Rng& rng) {
  auto generators = backend.generators();
  Operation op = backend.identity();
  for (std::size_t g = 0; g < gens; ++g) {
    std::uniform_int_distribution<std::size_t> slot(0, op.arity() - 1);
    std::uniform_int_distribution<std::size_t> which(0, generators.size() - 1);
    op = op_compose(op, slot(rng), generators[which(rng)]);
  }
  return backend.planar() ? op.sorted() : op;
}

Arrow random_arrow(const Backend& backend, std::size_t base, std::size_t gens, Rng& rng) {
  std::vector<std::size_t> per_root(base, 0);
  if (base > 0) {
    std::uniform_int_distribution<std::size_t> root(0, base - 1);
    for (std::size_t g = 0; g < gens; ++g) ++per_root[root(rng)];
  }
  std::vector<Operation> forest;
  for (std::size_t j = 0; j < base; ++j) forest.push_back(random_operation(backend, per_root[j], rng));
  Arrow a = Arrow::from_forest(std::move(forest));
  if (backend.planar()) return a;
  std::vector<std::size_t> images(a.domain());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return compose(Arrow::from_permutation(Permutation(std::move(images)), backend.dims()), a);
}

Span random_span(const Backend& backend, std::size_t base, std::size_t max_gens, Rng& rng) {
  std::uniform_int_distribution<std::size_t> gens(0, max_gens / 2);
  std::size_t g = gens(rng);
  return Span(random_arrow(backend, base, g, rng), random_arrow(backend, base, g, rng));
}

}  // namespace opgroup
