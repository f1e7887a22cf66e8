#include "opgroup/cell.hpp"

#include <algorithm>
#include <cassert>

namespace opgroup {

namespace {

bool is_prefix(const std::string& p, const std::string& s) {
  return p.size() <= s.size() && std::equal(p.begin(), p.end(), s.begin());
}

// Compares two paths as r-adic fractions 0.d1d2... padded with zeros.
std::strong_ordering corner_cmp(const std::string& a, const std::string& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return static_cast<unsigned char>(a[i]) <=> static_cast<unsigned char>(b[i]);
  }
  const std::string& longer = a.size() > b.size() ? a : b;
  bool nonzero = std::any_of(longer.begin() + n, longer.end(), [](char c) { return c != 0; });
  if (!nonzero) return std::strong_ordering::equal;
  return a.size() > b.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace

std::size_t Cell::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& a : axes) d += a.size();
  return d;
}

BigInt Cell::offset(std::size_t axis, unsigned radix) const {
  BigInt v = 0;
  for (char c : axes[axis]) v = v * radix + static_cast<unsigned char>(c);
  return v;
}

std::optional<std::string> axis_path(std::size_t exponent, const BigInt& offset, unsigned radix) {
  if (offset < 0) return std::nullopt;
  std::string path(exponent, '\0');
  BigInt v = offset;
  for (std::size_t i = exponent; i-- > 0;) {
    path[i] = static_cast<char>(static_cast<unsigned>(v % radix));
    v /= radix;
  }
  if (v != 0) return std::nullopt;
  return path;
}

bool contains(const Cell& outer, const Cell& inner) {
  assert(outer.dims() == inner.dims());
  for (std::size_t i = 0; i < outer.dims(); ++i) {
    if (!is_prefix(outer.axes[i], inner.axes[i])) return false;
  }
  return true;
}

bool disjoint(const Cell& a, const Cell& b) {
  for (std::size_t i = 0; i < a.dims(); ++i) {
    if (!is_prefix(a.axes[i], b.axes[i]) && !is_prefix(b.axes[i], a.axes[i])) return true;
  }
  return false;
}

std::optional<Cell> intersect(const Cell& a, const Cell& b) {
  Cell r;
  r.axes.reserve(a.dims());
  for (std::size_t i = 0; i < a.dims(); ++i) {
    const auto& x = a.axes[i];
    const auto& y = b.axes[i];
    if (is_prefix(x, y)) {
      r.axes.push_back(y);
    } else if (is_prefix(y, x)) {
      r.axes.push_back(x);
    } else {
      return std::nullopt;
    }
  }
  return r;
}

Cell transport(const Cell& outer, const Cell& inner) {
  Cell r = outer;
  for (std::size_t i = 0; i < r.dims(); ++i) r.axes[i] += inner.axes[i];
  return r;
}

Cell relative(const Cell& outer, const Cell& inner) {
  assert(contains(outer, inner));
  Cell r;
  r.axes.reserve(inner.dims());
  for (std::size_t i = 0; i < inner.dims(); ++i) r.axes.push_back(inner.axes[i].substr(outer.axes[i].size()));
  return r;
}

std::strong_ordering corner_order(const Cell& a, const Cell& b) {
  for (std::size_t i = 0; i < a.dims(); ++i) {
    if (auto c = corner_cmp(a.axes[i], b.axes[i]); c != 0) return c;
  }
  for (std::size_t i = 0; i < a.dims(); ++i) {
    if (auto c = a.axes[i].size() <=> b.axes[i].size(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool tiles(const Cell& region, const std::vector<Cell>& cells, unsigned radix) {
  if (cells.empty()) return false;
  std::size_t top = 0;
  for (const auto& c : cells) {
    if (!contains(region, c)) return false;
    top = std::max(top, c.depth());
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (!disjoint(cells[i], cells[j])) return false;
    }
  }
  // Volumes in units of radix^-top.
  BigInt total = 0;
  for (const auto& c : cells) total += boost::multiprecision::pow(BigInt(radix), static_cast<unsigned>(top - c.depth()));
  return total == boost::multiprecision::pow(BigInt(radix), static_cast<unsigned>(top - region.depth()));
}

Cell hull(const std::vector<Cell>& cells) {
  assert(!cells.empty());
  Cell h = cells.front();
  for (const auto& c : cells) {
    for (std::size_t i = 0; i < h.dims(); ++i) {
      auto& a = h.axes[i];
      const auto& b = c.axes[i];
      std::size_t n = 0;
      while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
      a.resize(n);
    }
  }
  return h;
}

}  // namespace opgroup
