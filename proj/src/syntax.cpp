#include "opgroup/syntax.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

[[noreturn]] void fail(const std::string& what, std::string_view text) {
  throw Error(Errc::parse, what + " in \"" + std::string(text) + "\"");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string ascii_brackets(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 3) == "⟨") {
      out += '<';
      i += 2;
    } else if (s.substr(i, 3) == "⟩") {
      out += '>';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Splits at `sep` outside any bracket pair.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
    else if (c == ')' || c == ']' || c == '}' || c == '>') --depth;
    else if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string_view unwrap_angle(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') s = trim(s.substr(1, s.size() - 2));
  return s;
}

std::size_t parse_size(std::string_view s, std::string_view context) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail("expected a number", context);
  return v;
}

BigInt parse_big(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty()) fail("expected a number", context);
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number", context);
  }
  return BigInt(std::string(s));
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ == text_.size();
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'", text_);
    ++pos_;
  }
  std::size_t number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return parse_size(text_.substr(start, pos_ - start), text_);
  }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

void parse_tree_node(Cursor& cur, unsigned k, std::string& path, std::vector<Cell>& cells) {
  char c = cur.peek();
  if (c == '.') {
    cur.expect('.');
    cells.push_back(Cell{{path}});
    return;
  }
  cur.expect('(');
  for (unsigned child = 0; child < k; ++child) {
    if (cur.peek() == ')') fail("tree node with fewer than k children", cur.text());
    path.push_back(static_cast<char>(child));
    parse_tree_node(cur, k, path, cells);
    path.pop_back();
  }
  cur.expect(')');
}

void format_tree_node(const std::vector<Cell>& cells, unsigned k, std::string& path, std::size_t& next,
                      std::string& out) {
  if (next < cells.size() && cells[next].axes[0] == path) {
    out += '.';
    ++next;
    return;
  }
  out += '(';
  for (unsigned child = 0; child < k; ++child) {
    if (child) out += ' ';
    path.push_back(static_cast<char>(child));
    format_tree_node(cells, k, path, next, out);
    path.pop_back();
  }
  out += ')';
}

CutTree parse_cut_node(Cursor& cur) {
  if (cur.peek() == '.') {
    cur.expect('.');
    return CutTree::leaf();
  }
  cur.expect('[');
  int axis = static_cast<int>(cur.number());
  std::vector<CutTree> children;
  while (cur.peek() != ']') {
    if (cur.at_end()) fail("unterminated cut tree", cur.text());
    children.push_back(parse_cut_node(cur));
  }
  cur.expect(']');
  if (children.size() < 2) fail("cut node needs children", cur.text());
  return CutTree::node(axis, std::move(children));
}

std::string symbol_name(int s) {
  if (s < 26) return std::string(1, static_cast<char>('a' + s));
  return "s" + std::to_string(s);
}

Operation alias(const Backend& backend, std::string_view name) {
  Operation caret = backend.split_generator();
  if (name == "caret") return caret;
  if (name == "lcomb") return op_compose(caret, 0, caret).sorted();
  if (name == "rcomb") return op_compose(caret, caret.arity() - 1, caret).sorted();
  fail("unknown operation", name);
}

}  // namespace

Backend parse_backend(std::string_view text, Flavor flavor) {
  text = trim(text);
  if (text.starts_with("tree:k=")) {
    auto k = parse_size(text.substr(7), text);
    if (k < 2) fail("tree arity must be at least 2", text);
    return Backend::kary_tree(static_cast<unsigned>(k), flavor);
  }
  if (text.starts_with("cube:d=")) {
    auto d = parse_size(text.substr(7), text);
    if (d < 1) fail("cube dimension must be at least 1", text);
    return Backend::dyadic_cube(static_cast<unsigned>(d), flavor);
  }
  fail("unknown backend", text);
}

Flavor parse_flavor(std::string_view text) {
  text = trim(text);
  if (text == "planar") return Flavor::planar;
  if (text == "symmetric") return Flavor::symmetric;
  fail("unknown flavor", text);
}

Permutation parse_permutation(std::string_view text) {
  auto t = trim(text);
  if (!t.starts_with("p[") || !t.ends_with("]")) fail("expected p[...]", text);
  auto body = trim(t.substr(2, t.size() - 3));
  std::vector<std::size_t> images;
  if (!body.empty()) {
    for (auto part : split_top(body, ',')) images.push_back(parse_size(part, text));
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    fail("not a permutation", text);
  }
}

std::string format_permutation(const Permutation& p) {
  std::string out = "p[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p(i));
  }
  return out + "]";
}

CutTree parse_cut_tree(std::string_view text) {
  Cursor cur(text);
  CutTree t = parse_cut_node(cur);
  if (!cur.at_end()) fail("trailing input", text);
  return t;
}

std::string format_cut_tree(const CutTree& tree) {
  if (tree.is_leaf()) return ".";
  std::string out = "[" + std::to_string(tree.axis);
  for (const auto& c : tree.children) out += " " + format_cut_tree(c);
  return out + "]";
}

Cell parse_box(const Backend& backend, std::string_view text) {
  auto t = trim(text);
  if (!t.starts_with("b(") || !t.ends_with(")")) fail("expected b(...)", text);
  auto parts = split_top(t.substr(2, t.size() - 3), ',');
  if (parts.size() != backend.dims()) fail("box has wrong number of axes", text);
  Cell cell;
  for (auto part : parts) {
    auto colon = part.find(':');
    if (colon == std::string_view::npos) fail("expected e:a", text);
    auto e = parse_size(part.substr(0, colon), text);
    auto a = parse_big(part.substr(colon + 1), text);
    auto path = axis_path(e, a, backend.radix());
    if (!path) fail("offset out of range", text);
    cell.axes.push_back(std::move(*path));
  }
  return cell;
}

std::string format_box(const Backend& backend, const Cell& cell) {
  std::string out = "b(";
  for (std::size_t a = 0; a < cell.dims(); ++a) {
    if (a) out += ',';
    out += std::to_string(cell.exponent(a)) + ":" + cell.offset(a, backend.radix()).str();
  }
  return out + ")";
}

Operation parse_pattern(const Backend& backend, std::string_view text) {
  auto t = trim(text);
  if (!t.starts_with("{") || !t.ends_with("}")) fail("expected {...}", text);
  std::vector<Cell> cells;
  for (auto part : split_top(t.substr(1, t.size() - 2), ',')) cells.push_back(parse_box(backend, part));
  return backend.validate_pattern(std::move(cells));
}

std::string format_pattern(const Backend& backend, const Operation& op) {
  std::string out = "{";
  for (std::size_t i = 0; i < op.arity(); ++i) {
    if (i) out += ',';
    out += format_box(backend, op.cell(i));
  }
  return out + "}";
}

Operation parse_operation(const Backend& backend, std::string_view text) {
  auto t = trim(text);
  if (t.empty()) fail("empty operation", text);
  if (t == ".") return backend.identity();
  if (t.front() == '{') return parse_pattern(backend, t);
  if (t.front() == '[') {
    auto tree = parse_cut_tree(t);
    try {
      return backend.from_cut_tree(tree);
    } catch (const Error& e) {
      if (e.code() == Errc::parse) throw;
      fail(e.what(), text);
    }
  }
  if (t.front() == '(') {
    if (!backend.is_tree()) fail("tree literal needs a tree backend", text);
    Cursor cur(t);
    std::string path;
    std::vector<Cell> cells;
    parse_tree_node(cur, backend.radix(), path, cells);
    if (!cur.at_end()) fail("trailing input", text);
    return Operation(std::move(cells));
  }
  return alias(backend, t);
}

std::string format_operation(const Backend& backend, const Operation& op) {
  if (op.is_unit()) return ".";
  if (!backend.is_tree()) return format_pattern(backend, op);
  std::string out;
  std::string path;
  std::size_t next = 0;
  format_tree_node(op.cells(), backend.radix(), path, next, out);
  return out;
}

Arrow parse_arrow(const Backend& backend, std::string_view text, std::optional<std::size_t> base) {
  std::string ascii = ascii_brackets(text);
  auto t = unwrap_angle(ascii);
  std::optional<Permutation> perm;
  std::string_view forest_text = t;
  auto halves = split_top(t, ';');
  if (halves.size() > 2) fail("more than one ';'", text);
  if (halves.size() == 2) {
    perm = parse_permutation(halves[0]);
    forest_text = trim(halves[1]);
  } else if (t.starts_with("p[")) {
    perm = parse_permutation(t);
    forest_text = {};
  }
  std::vector<Operation> forest;
  if (forest_text == "id") {
    if (!base) fail("'id' needs a base length", text);
    forest.assign(*base, backend.identity());
  } else if (!forest_text.empty()) {
    for (auto part : split_top(forest_text, ',')) forest.push_back(parse_operation(backend, part));
  } else if (perm) {
    forest.assign(perm->size(), backend.identity());
  }
  if (base && forest.size() != *base) {
    throw Error(Errc::base_mismatch, "arrow codomain " + std::to_string(forest.size()) + " differs from base " +
                                         std::to_string(*base));
  }
  std::size_t width = 0;
  for (const auto& op : forest) width += op.arity();
  Permutation p = perm ? *perm : Permutation::identity(width);
  if (backend.planar() && !p.is_identity()) throw Error(Errc::flavor, "permutations need the symmetric flavor");
  for (const auto& op : forest) {
    if (backend.planar() && !op.is_sorted()) throw Error(Errc::flavor, "planar operations keep sorted inputs");
  }
  return Arrow(std::move(p), std::move(forest));
}

std::string format_arrow(const Backend& backend, const Arrow& arrow) {
  if (arrow.codomain() == 0) return "id";
  std::string out;
  if (!arrow.perm().is_identity()) out = format_permutation(arrow.perm()) + " ; ";
  for (std::size_t j = 0; j < arrow.codomain(); ++j) {
    if (j) out += " , ";
    out += format_operation(backend, arrow.forest()[j]);
  }
  return out;
}

Span parse_span(const Backend& backend, std::string_view text, std::optional<std::size_t> base) {
  std::string ascii = ascii_brackets(text);
  auto parts = split_top(ascii, '|');
  if (parts.size() != 2) fail("expected den | num", text);
  Arrow den = parse_arrow(backend, unwrap_angle(parts[0]), base);
  Arrow num = parse_arrow(backend, unwrap_angle(parts[1]), base ? base : std::optional<std::size_t>(den.codomain()));
  return Span(std::move(den), std::move(num));
}

std::string format_span(const Backend& backend, const Span& span) {
  return "⟨" + format_arrow(backend, span.den) + "⟩ | ⟨" + format_arrow(backend, span.num) + "⟩";
}

Marking parse_marking(std::string_view text) {
  auto t = trim(text);
  if (!t.starts_with("m[") || !t.ends_with("]")) fail("expected m[...]", text);
  auto body = t.substr(2, t.size() - 3);
  std::map<std::size_t, int> at;
  std::map<std::string, int> symbols;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == ',')) ++i;
    if (i == body.size()) break;
    std::size_t j = i;
    while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])) && body[j] != ',') ++j;
    auto entry = body.substr(i, j - i);
    i = j;
    auto colon = entry.find(':');
    if (colon == std::string_view::npos) fail("expected index:symbol", text);
    auto index = parse_size(entry.substr(0, colon), text);
    std::string sym(entry.substr(colon + 1));
    if (sym.empty()) fail("empty symbol", text);
    int label = Marking::kUnmarked;
    if (sym != "-") label = symbols.try_emplace(sym, static_cast<int>(symbols.size())).first->second;
    if (!at.emplace(index, label).second) fail("coordinate marked twice", text);
  }
  std::vector<int> labels;
  for (const auto& [index, label] : at) {
    if (index != labels.size()) fail("coordinates must be 0..n-1", text);
    labels.push_back(label);
  }
  return Marking(std::move(labels));
}

std::string format_marking(const Marking& m) {
  std::string out = "m[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(i) + ":" + (m[i] == Marking::kUnmarked ? std::string("-") : symbol_name(m[i]));
  }
  return out + "]";
}

MarkedArrow parse_marked_arrow(const Backend& backend, std::string_view text, std::optional<std::size_t> base) {
  std::string ascii = ascii_brackets(text);
  auto parts = split_top(ascii, '@');
  if (parts.size() != 2) fail("expected arrow @ marking", text);
  return MarkedArrow(parse_arrow(backend, unwrap_angle(parts[0]), base), parse_marking(unwrap_angle(parts[1])));
}

std::string format_marked_arrow(const Backend& backend, const MarkedArrow& ma) {
  return "⟨" + format_arrow(backend, ma.arrow) + "⟩ @ " + format_marking(ma.marking);
}

std::string format_real_cell(const Backend& backend, const RealCell& rc) {
  std::string out = std::to_string(rc.root) + ":";
  if (!backend.is_tree()) return out + format_box(backend, rc.cell);
  BigInt a = rc.cell.offset(0, backend.radix());
  BigInt b = pow(BigInt(backend.radix()), static_cast<unsigned>(rc.cell.exponent(0)));
  auto reduced = [](BigInt num, BigInt den) {
    BigInt g = gcd(num, den);
    if (g == 0) return std::string("0");
    num /= g;
    den /= g;
    return den == 1 ? num.str() : num.str() + "/" + den.str();
  };
  return out + "[" + reduced(a, b) + "," + reduced(a + 1, b) + "]";
}

}  // namespace opgroup
