#include "opgroup/action.hpp"

#include <algorithm>
#include <numeric>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

std::size_t dims_of(const Arrow& a) { return a.forest().empty() ? 0 : a.forest().front().dims(); }

}  // namespace

SemiPartitionClass act(const Span& g, const SemiPartitionClass& s) {
  if (g.base() != s.base()) throw Error(Errc::base_mismatch, "act: span and semi-partition over different bases");
  auto [b1, b2] = square_fill(g.num, s.rep.arrow);
  return {MarkedArrow(compose(b1, g.den), pull_back(b2, s.rep.marking))};
}

bool stabilizes_pointwise(const Span& g, const SemiPartitionClass& p) {
  if (!p.is_partition()) throw Error(Errc::not_partition, "pointwise stabilizer needs a partition");
  for (const auto& ball : submultiballs(p)) {
    if (!sp_class_eq(act(g, ball), ball)) return false;
  }
  return true;
}

StabilizerWitness make_witness(const SemiPartitionClass& partition) {
  if (!partition.is_partition()) throw Error(Errc::not_partition, "witness needs a partition");
  const auto& rep = partition.rep;
  const auto& m = rep.marking;
  std::size_t dims = dims_of(rep.arrow);
  // order[j] = coordinate that moves to position j; stable by symbol.
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] < m[b]; });
  auto sigma = Arrow::from_permutation(Permutation(order), dims);
  StabilizerWitness w;
  w.base_arrow = compose(sigma, rep.arrow);
  w.partition = {MarkedArrow(w.base_arrow, pull_back(sigma, m))};
  w.subwords.assign(m.symbol_count(), 0);
  for (int l : m.labels()) ++w.subwords[static_cast<std::size_t>(l)];
  return w;
}

Span xi(const std::vector<Span>& components, const StabilizerWitness& w) {
  if (components.size() != w.subwords.size()) {
    throw Error(Errc::base_mismatch, "xi: one component per subword expected");
  }
  Arrow den, num;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].base() != w.subwords[i]) {
      throw Error(Errc::base_mismatch, "xi: component " + std::to_string(i) + " has the wrong base");
    }
    den = tensor(den, components[i].den);
    num = tensor(num, components[i].num);
  }
  return Span(compose(den, w.base_arrow), compose(num, w.base_arrow));
}

std::vector<Span> decompose(const Span& g, const StabilizerWitness& w) {
  if (g.base() != w.base_arrow.codomain()) throw Error(Errc::base_mismatch, "decompose: base mismatch");
  const Arrow& alpha = w.base_arrow;
  std::size_t dims = dims_of(alpha);
  // Force the denominator through alpha, then the numerator.
  auto [b1, b2] = square_fill(g.den, alpha);
  Arrow num1 = compose(b1, g.num);
  auto [k1, k2] = square_fill(num1, alpha);
  Arrow z_den = compose(k1, b2);
  Arrow z_num = k2;

  // Make z_den permutation-free by reordering the apex.
  auto sigma = Arrow::from_permutation(z_den.perm().inverse(), dims);
  z_den = compose(sigma, z_den);
  z_num = compose(sigma, z_num);

  std::vector<Span> out;
  std::size_t coord = 0;
  std::size_t den_pos = 0;
  std::size_t num_pos = 0;
  const auto& rho = z_num.perm();
  for (std::size_t i = 0; i < w.subwords.size(); ++i) {
    std::vector<Operation> den_ops, num_ops;
    std::size_t den_len = 0, num_len = 0;
    for (std::size_t t = 0; t < w.subwords[i]; ++t) {
      den_ops.push_back(z_den.forest()[coord + t]);
      num_ops.push_back(z_num.forest()[coord + t]);
      den_len += den_ops.back().arity();
      num_len += num_ops.back().arity();
    }
    if (den_len != num_len || den_pos != num_pos) {
      throw Error(Errc::not_in_stabilizer, "span does not split along the partition");
    }
    std::vector<std::size_t> images(den_len);
    for (std::size_t t = 0; t < den_len; ++t) {
      std::size_t target = rho(den_pos + t);
      if (target < num_pos || target >= num_pos + num_len) {
        throw Error(Errc::not_in_stabilizer, "span moves a submultiball");
      }
      images[t] = target - num_pos;
    }
    out.emplace_back(Arrow(Permutation::identity(den_len), std::move(den_ops)),
                     Arrow(Permutation(std::move(images)), std::move(num_ops)));
    coord += w.subwords[i];
    den_pos += den_len;
    num_pos += num_len;
  }
  return out;
}

}  // namespace opgroup
