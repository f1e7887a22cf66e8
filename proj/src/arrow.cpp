#include "opgroup/arrow.hpp"

#include <algorithm>
#include <numeric>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

std::size_t total_arity(const std::vector<Operation>& forest) {
  std::size_t n = 0;
  for (const auto& op : forest) n += op.arity();
  return n;
}

}  // namespace

Arrow::Arrow(Permutation perm, std::vector<Operation> forest) : perm_(std::move(perm)), forest_(std::move(forest)) {
  if (perm_.size() != total_arity(forest_)) {
    throw Error(Errc::size_mismatch, "permutation size " + std::to_string(perm_.size()) +
                                         " does not match forest arity " + std::to_string(total_arity(forest_)));
  }
  bool sorted = std::all_of(forest_.begin(), forest_.end(), [](const Operation& op) { return op.is_sorted(); });
  if (sorted) return;
  Permutation rho;
  for (auto& op : forest_) {
    rho = Permutation::block_sum(rho, op.sorting_permutation());
    op = op.sorted();
  }
  perm_ = perm_.then(rho);
}

Arrow Arrow::identity(std::size_t length, std::size_t dims) {
  return Arrow(Permutation::identity(length), std::vector<Operation>(length, Operation::unit(dims)));
}

Arrow Arrow::from_forest(std::vector<Operation> forest) {
  auto n = total_arity(forest);
  return Arrow(Permutation::identity(n), std::move(forest));
}

Arrow Arrow::from_permutation(const Permutation& perm, std::size_t dims) {
  return Arrow(perm, std::vector<Operation>(perm.size(), Operation::unit(dims)));
}

bool Arrow::is_identity() const {
  return perm_.is_identity() &&
         std::all_of(forest_.begin(), forest_.end(), [](const Operation& op) { return op.is_unit(); });
}

std::vector<std::size_t> Arrow::block_offsets() const {
  std::vector<std::size_t> off(forest_.size() + 1, 0);
  for (std::size_t j = 0; j < forest_.size(); ++j) off[j + 1] = off[j] + forest_[j].arity();
  return off;
}

std::pair<Permutation, std::vector<Operation>> push_perm(const std::vector<Operation>& forest,
                                                         const Permutation& tau) {
  if (tau.size() != forest.size()) {
    throw Error(Errc::size_mismatch, "push_perm: permutation must act on the forest's codomain");
  }
  std::vector<Operation> moved(forest.size());
  for (std::size_t j = 0; j < forest.size(); ++j) moved[tau(j)] = forest[j];
  std::vector<std::size_t> old_off(forest.size() + 1, 0), new_off(forest.size() + 1, 0);
  for (std::size_t j = 0; j < forest.size(); ++j) {
    old_off[j + 1] = old_off[j] + forest[j].arity();
    new_off[j + 1] = new_off[j] + moved[j].arity();
  }
  std::vector<std::size_t> images(old_off.back());
  for (std::size_t j = 0; j < forest.size(); ++j) {
    for (std::size_t t = 0; t < forest[j].arity(); ++t) images[old_off[j] + t] = new_off[tau(j)] + t;
  }
  return {Permutation(std::move(images)), std::move(moved)};
}

Arrow compose(const Arrow& a, const Arrow& b) {
  if (a.codomain() != b.domain()) {
    throw Error(Errc::domain_mismatch, "compose: codomain " + std::to_string(a.codomain()) +
                                           " does not match domain " + std::to_string(b.domain()));
  }
  auto [tau_hat, moved] = push_perm(a.forest(), b.perm());
  std::vector<Operation> forest;
  forest.reserve(b.codomain());
  std::size_t next = 0;
  for (const auto& outer : b.forest()) {
    std::vector<Operation> slice(moved.begin() + static_cast<std::ptrdiff_t>(next),
                                 moved.begin() + static_cast<std::ptrdiff_t>(next + outer.arity()));
    next += outer.arity();
    forest.push_back(op_graft(outer, slice));
  }
  return Arrow(a.perm().then(tau_hat), std::move(forest));
}

Arrow tensor(const Arrow& a, const Arrow& b) {
  std::vector<Operation> forest = a.forest();
  forest.insert(forest.end(), b.forest().begin(), b.forest().end());
  return Arrow(Permutation::block_sum(a.perm(), b.perm()), std::move(forest));
}

std::pair<Arrow, Arrow> square_fill(const Arrow& a1, const Arrow& a2) {
  if (a1.codomain() != a2.codomain()) {
    throw Error(Errc::codomain_mismatch, "square_fill: arrows have different codomains");
  }
  if (a1 == a2) {
    auto id = Arrow::identity(a1.domain(), a1.forest().empty() ? 0 : a1.forest().front().dims());
    return {id, id};
  }
  Permutation pi1, pi2;
  std::vector<Operation> phi1, phi2;
  for (std::size_t j = 0; j < a1.codomain(); ++j) {
    auto r = op_common_refinement(a1.forest()[j], a2.forest()[j]);
    pi1 = Permutation::block_sum(pi1, r.pi_p);
    pi2 = Permutation::block_sum(pi2, r.pi_q);
    phi1.insert(phi1.end(), r.phi_p.begin(), r.phi_p.end());
    phi2.insert(phi2.end(), r.phi_q.begin(), r.phi_q.end());
  }
  std::size_t dims = a1.forest().empty() ? 0 : a1.forest().front().dims();
  Arrow b1 = Arrow(std::move(pi1), std::move(phi1));
  Arrow b2 = Arrow(std::move(pi2), std::move(phi2));
  if (!a1.perm().is_identity()) b1 = compose(b1, Arrow::from_permutation(a1.perm().inverse(), dims));
  if (!a2.perm().is_identity()) b2 = compose(b2, Arrow::from_permutation(a2.perm().inverse(), dims));
  return {std::move(b1), std::move(b2)};
}

CommonFilling combine_fillings(const std::pair<Arrow, Arrow>& first, const std::pair<Arrow, Arrow>& second,
                               const std::pair<Arrow, Arrow>& cospan) {
  const auto& [i, h] = first;
  const auto& [j, g] = second;
  const auto& [x, y] = cospan;
  auto a = compose(i, x);
  auto b = compose(j, x);
  if (a != compose(h, y) || b != compose(g, y)) {
    throw Error(Errc::not_fillings, "combine_fillings: arguments are not square fillings of the cospan");
  }
  auto [c, d] = square_fill(a, b);
  // c*h and d*g are coequalized by y, c*i and d*j by x; cancellativity makes
  // both pairs equal, so the equalizers and their filling are identities.
  if (compose(c, h) != compose(d, g) || compose(c, i) != compose(d, j)) {
    throw Error(Errc::not_fillings, "combine_fillings: cancellation failed");
  }
  CommonFilling out;
  out.alpha = compose(c, i);
  out.beta = compose(c, h);
  out.delta = c;
  out.epsilon = d;
  return out;
}

bool arrow_eq(const Arrow& a, const Arrow& b) { return a == b; }

std::vector<RealCell> realize(const Arrow& arrow) {
  std::vector<RealCell> by_position;
  by_position.reserve(arrow.domain());
  for (std::size_t j = 0; j < arrow.codomain(); ++j) {
    for (const auto& c : arrow.forest()[j].cells()) by_position.push_back({j, c});
  }
  std::vector<RealCell> out;
  out.reserve(arrow.domain());
  for (std::size_t i = 0; i < arrow.domain(); ++i) out.push_back(by_position[arrow.perm()(i)]);
  return out;
}

Arrow arrow_from_realization(const Backend& backend, std::size_t codomain, const std::vector<RealCell>& cells) {
  std::vector<std::vector<std::size_t>> members(codomain);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].root >= codomain) throw Error(Errc::not_partition, "realized cell has no codomain coordinate");
    members[cells[i].root].push_back(i);
  }
  std::vector<std::size_t> images(cells.size());
  std::vector<Operation> forest;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < codomain; ++j) {
    auto& m = members[j];
    std::sort(m.begin(), m.end(),
              [&](std::size_t a, std::size_t b) { return corner_order(cells[a].cell, cells[b].cell) < 0; });
    std::vector<Cell> op_cells;
    for (std::size_t rank = 0; rank < m.size(); ++rank) {
      images[m[rank]] = offset + rank;
      op_cells.push_back(cells[m[rank]].cell);
    }
    if (!backend.find_cut_tree(op_cells)) {
      throw Error(Errc::not_partition, "realized cells do not form an operation");
    }
    offset += m.size();
    forest.emplace_back(std::move(op_cells));
  }
  return Arrow(Permutation(std::move(images)), std::move(forest));
}

std::size_t generator_count(const Backend& backend, const Arrow& arrow) {
  std::size_t n = 0;
  for (const auto& op : arrow.forest()) n += backend.generator_count(op);
  return n;
}

}  // namespace opgroup
