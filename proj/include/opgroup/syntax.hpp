#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgroup/fractions.hpp"
#include "opgroup/markings.hpp"

namespace opgroup {

/// "tree:k=2" or "cube:d=2".
Backend parse_backend(std::string_view text, Flavor flavor = Flavor::symmetric);
Flavor parse_flavor(std::string_view text);

Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);

CutTree parse_cut_tree(std::string_view text);
std::string format_cut_tree(const CutTree& tree);

/// Box literal "b(e1:a1,...,ed:ad)".
Cell parse_box(const Backend& backend, std::string_view text);
std::string format_box(const Backend& backend, const Cell& cell);

/// Pattern literal "{box,box,...}"; validated against the backend.
Operation parse_pattern(const Backend& backend, std::string_view text);
std::string format_pattern(const Backend& backend, const Operation& op);

/// Tree, cut tree, pattern, "." or one of the aliases caret, lcomb, rcomb.
Operation parse_operation(const Backend& backend, std::string_view text);
/// Tree literal for trees, pattern literal for cubes, "." for the unit.
std::string format_operation(const Backend& backend, const Operation& op);

/// "p[...] ; f1 , f2 , ..." or "id" (needs `base`). When `base` is given
/// the codomain must match it.
Arrow parse_arrow(const Backend& backend, std::string_view text, std::optional<std::size_t> base = {});
std::string format_arrow(const Backend& backend, const Arrow& arrow);

/// "<arrow> | <arrow>", den first; the brackets may be ASCII or U+27E8/9.
Span parse_span(const Backend& backend, std::string_view text, std::optional<std::size_t> base = {});
std::string format_span(const Backend& backend, const Span& span);

/// "m[0:a 1:a 2:- 3:b]".
Marking parse_marking(std::string_view text);
std::string format_marking(const Marking& m);

/// "<arrow> @ <marking>".
MarkedArrow parse_marked_arrow(const Backend& backend, std::string_view text,
                               std::optional<std::size_t> base = {});
std::string format_marked_arrow(const Backend& backend, const MarkedArrow& ma);

/// "root:[a/b,c/d]" for trees, "root:b(...)" for cubes.
std::string format_real_cell(const Backend& backend, const RealCell& rc);

}  // namespace opgroup
