#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "opgroup/action.hpp"
#include "opgroup/certificates.hpp"
#include "opgroup/error.hpp"
#include "opgroup/poset.hpp"
#include "opgroup/syntax.hpp"

using json = nlohmann::json;
using namespace opgroup;

namespace {

struct Options {
  std::string backend = "tree:k=2";
  std::string flavor = "symmetric";
  std::optional<std::size_t> base;
  bool json = false;
  bool assert_true = false;
};

struct Output {
  std::string command;
  json inputs = json::object();
  json result;
  json witnesses;
  std::vector<std::string> text;
  int status = 0;
};

json rows_json(const CertReport& r) {
  json out = json::array();
  for (const auto& row : r.rows) {
    out.push_back({{"check", row.check}, {"instance", row.instance}, {"ok", row.ok}, {"witness", row.witness}});
  }
  return out;
}

void report_text(const CertReport& r, Output& out) {
  for (const auto& row : r.rows) {
    std::string line = row.check + " " + row.instance + ": " + (row.ok ? "ok" : "FAIL");
    if (!row.witness.empty()) line += " (" + row.witness + ")";
    out.text.push_back(line);
  }
  out.text.push_back(std::string("violations: ") + std::to_string(r.violations));
}

void emit(const Options& opt, const Output& out) {
  if (opt.json) {
    json line{{"command", out.command}, {"inputs", out.inputs}, {"result", out.result}};
    if (!out.witnesses.is_null()) line["witnesses"] = out.witnesses;
    std::cout << line.dump() << "\n";
  } else {
    for (const auto& t : out.text) std::cout << t << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operad group calculator for k-ary tree and dyadic cube operads"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--backend", opt.backend, "tree:k=K or cube:d=D")->capture_default_str();
  app.add_option("--flavor", opt.flavor, "planar or symmetric")->capture_default_str();
  app.add_option("--base", opt.base, "length of the base word");
  app.add_flag("--json", opt.json, "JSON-lines output");
  app.add_flag("--assert", opt.assert_true, "exit 1 when an eq query is false");

  std::vector<std::string> elem_args;
  std::size_t max_n = 64;
  std::size_t depth = 2;
  std::size_t max_len = 10;
  std::size_t max_perm = 4;
  std::size_t n = 1;
  std::size_t y = 1;

  auto* elem = app.add_subcommand("elem", "group element arithmetic")->fallthrough();
  elem->require_subcommand(1);
  auto* eq = elem->add_subcommand("eq", "semantic equality of two spans")->fallthrough();
  eq->add_option("spans", elem_args)->expected(2)->required();
  auto* mul = elem->add_subcommand("mul", "product of two spans")->fallthrough();
  mul->add_option("spans", elem_args)->expected(2)->required();
  auto* inv = elem->add_subcommand("inv", "inverse of a span")->fallthrough();
  inv->add_option("span", elem_args)->expected(1)->required();
  auto* pow = elem->add_subcommand("pow", "integer power of a span")->fallthrough();
  pow->add_option("span_and_exponent", elem_args)->expected(2)->required();
  auto* order = elem->add_subcommand("order", "order of a span up to --max")->fallthrough();
  order->add_option("span", elem_args)->expected(1)->required();
  order->add_option("--max", max_n, "search bound")->capture_default_str();
  auto* realize_cmd = elem->add_subcommand("realize", "piecewise map of a span")->fallthrough();
  realize_cmd->add_option("span", elem_args)->expected(1)->required();

  auto* act_cmd = app.add_subcommand("act", "apply a span to a marked arrow")->fallthrough();
  act_cmd->add_option("span_and_marked_arrow", elem_args)->expected(2)->required();

  auto* partition = app.add_subcommand("partition", "partitions of the base")->fallthrough();
  partition->require_subcommand(1);
  auto* plist = partition->add_subcommand("list", "enumerate the truncated poset")->fallthrough();
  for (auto* c : {plist}) {
    c->add_option("--depth", depth)->capture_default_str();
    c->add_option("--n", n)->capture_default_str();
    c->add_option("--y", y)->capture_default_str();
  }

  auto* poset = app.add_subcommand("poset", "poset certificates")->fallthrough();
  poset->require_subcommand(1);
  auto* filtered = poset->add_subcommand("filtered", "check filteredness of a truncation")->fallthrough();
  filtered->add_option("--depth", depth)->capture_default_str();
  filtered->add_option("--n", n)->capture_default_str();
  filtered->add_option("--y", y)->capture_default_str();

  auto* cert = app.add_subcommand("cert", "group-theoretic certificates")->fallthrough();
  cert->require_subcommand(1);
  auto* torsion = cert->add_subcommand("torsion", "orders of gamma1 and gamma2")->fallthrough();
  auto* pingpong = cert->add_subcommand("pingpong", "ping-pong inclusions")->fallthrough();
  pingpong->add_option("--depth", depth)->capture_default_str();
  auto* words = cert->add_subcommand("words", "alternating words are nontrivial")->fallthrough();
  words->add_option("--max-len", max_len)->capture_default_str();
  auto* infinite = cert->add_subcommand("infinite", "powers of the comb span")->fallthrough();
  infinite->add_option("--max-n", max_n)->capture_default_str();
  auto* freeaction = cert->add_subcommand("freeaction", "free permutation action")->fallthrough();
  freeaction->add_option("--max-perm", max_perm)->capture_default_str();
  freeaction->add_option("--depth", depth)->capture_default_str();
  auto* sigma = cert->add_subcommand("sigma", "permutation spans are nontrivial")->fallthrough();
  sigma->add_option("--max-perm", max_perm)->capture_default_str();
  sigma->add_option("--depth", depth)->capture_default_str();
  sigma->add_option("alpha_and_sigma", elem_args)->expected(0, 2);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Backend backend = parse_backend(opt.backend, parse_flavor(opt.flavor));
    Output out;
    out.inputs["backend"] = backend.name();
    out.inputs["flavor"] = opt.flavor;
    if (opt.base) out.inputs["base"] = *opt.base;
    auto span_arg = [&](std::size_t i) {
      out.inputs["args"].push_back(elem_args[i]);
      return parse_span(backend, elem_args[i], opt.base);
    };

    if (eq->parsed()) {
      out.command = "elem eq";
      Span g = span_arg(0);
      Span h = span_arg(1);
      if (g.base() != h.base()) throw Error(Errc::base_mismatch, "spans over different bases");
      bool r = sp_eq(g, h);
      out.result = r;
      out.text.push_back(r ? "true" : "false");
      if (opt.assert_true && !r) out.status = 1;
    } else if (mul->parsed()) {
      out.command = "elem mul";
      Span g = span_arg(0);
      Span h = span_arg(1);
      if (g.base() != h.base()) throw Error(Errc::base_mismatch, "spans over different bases");
      auto s = format_span(backend, sp_mul(g, h));
      out.result = s;
      out.text.push_back(s);
    } else if (inv->parsed()) {
      out.command = "elem inv";
      auto s = format_span(backend, sp_inv(span_arg(0)));
      out.result = s;
      out.text.push_back(s);
    } else if (pow->parsed()) {
      out.command = "elem pow";
      Span g = span_arg(0);
      std::int64_t e = 0;
      try {
        std::size_t used = 0;
        e = std::stoll(elem_args[1], &used);
        if (used != elem_args[1].size()) throw std::invalid_argument("exponent");
      } catch (const std::exception&) {
        throw Error(Errc::parse, "exponent must be an integer: " + elem_args[1]);
      }
      out.inputs["exponent"] = e;
      auto s = format_span(backend, sp_pow(g, e));
      out.result = s;
      out.text.push_back(s);
    } else if (order->parsed()) {
      out.command = "elem order";
      out.inputs["max"] = max_n;
      if (max_n < 1) throw Error(Errc::parse, "--max must be at least 1");
      auto o = sp_order(span_arg(0), max_n);
      out.result = o ? json(*o) : json(nullptr);
      out.text.push_back(o ? std::to_string(*o) : "none");
    } else if (realize_cmd->parsed()) {
      out.command = "elem realize";
      out.result = json::array();
      for (const auto& piece : realize_span(span_arg(0))) {
        auto from = format_real_cell(backend, piece.from);
        auto to = format_real_cell(backend, piece.to);
        out.result.push_back({{"from", from}, {"to", to}});
        out.text.push_back(from + " -> " + to);
      }
    } else if (act_cmd->parsed()) {
      out.command = "act";
      Span g = span_arg(0);
      out.inputs["args"].push_back(elem_args[1]);
      auto ma = parse_marked_arrow(backend, elem_args[1], opt.base);
      if (ma.base() != g.base()) throw Error(Errc::base_mismatch, "span and marked arrow over different bases");
      auto s = format_marked_arrow(backend, act(g, {ma}).rep);
      out.result = s;
      out.text.push_back(s);
    } else if (plist->parsed()) {
      out.command = "partition list";
      std::size_t base = opt.base.value_or(1);
      out.inputs.update({{"base", base}, {"depth", depth}, {"n", n}, {"y", y}});
      auto t = enumerate_pn(backend, base, depth, y, n);
      json classes = json::array();
      out.text.push_back("classes: " + std::to_string(t.elements.size()));
      for (const auto& e : t.elements) {
        auto s = format_marked_arrow(backend, e.rep);
        classes.push_back(s);
        out.text.push_back(s);
      }
      out.result = {{"count", t.elements.size()}, {"classes", classes}};
    } else if (filtered->parsed()) {
      out.command = "poset filtered";
      std::size_t base = opt.base.value_or(1);
      out.inputs.update({{"base", base}, {"depth", depth}, {"n", n}, {"y", y}});
      auto t = enumerate_pn(backend, base, depth, y, n);
      auto report = check_filtered(backend, t);
      out.witnesses = json::array();
      for (const auto& row : report.rows) {
        out.witnesses.push_back({{"p", format_marked_arrow(backend, t.elements[row.p].rep)},
                                 {"q", format_marked_arrow(backend, t.elements[row.q].rep)},
                                 {"upper_bound", format_marked_arrow(backend, row.upper_bound.rep)},
                                 {"ok", row.ok}});
        if (!row.ok) {
          out.text.push_back("failure at (" + std::to_string(row.p) + ", " + std::to_string(row.q) + ")");
        }
      }
      out.result = {{"filtered", report.filtered()}, {"elements", t.elements.size()},
                    {"witness_count", report.rows.size()}, {"failures", report.failures}};
      out.text.push_back(std::string("filtered: ") + (report.filtered() ? "true" : "false"));
      out.text.push_back("elements: " + std::to_string(t.elements.size()));
      out.text.push_back("witnesses: " + std::to_string(report.rows.size()));
      if (!report.filtered()) out.status = 1;
    } else if (cert->parsed()) {
      CertReport report;
      if (torsion->parsed()) {
        out.command = "cert torsion";
        report = torsion_check(backend);
      } else if (pingpong->parsed()) {
        out.command = "cert pingpong";
        out.inputs["depth"] = depth;
        report = pingpong_check(backend, depth);
      } else if (words->parsed()) {
        out.command = "cert words";
        out.inputs["max_len"] = max_len;
        report = alternating_words_nontrivial(backend, max_len);
      } else if (infinite->parsed()) {
        out.command = "cert infinite";
        out.inputs["max_n"] = max_n;
        report = infinite_order_check(backend, max_n);
      } else if (freeaction->parsed()) {
        out.command = "cert freeaction";
        out.inputs.update({{"max_perm", max_perm}, {"depth", depth}});
        report = free_action_check(backend, max_perm, depth);
      } else if (sigma->parsed()) {
        out.command = "cert sigma";
        if (elem_args.size() == 2) {
          out.inputs["args"] = elem_args;
          Arrow alpha = parse_arrow(backend, elem_args[0], opt.base);
          Permutation s = parse_permutation(elem_args[1]);
          bool algebraic = sigma_span_check(alpha, s);
          bool marked = sigma_span_check_marked(alpha, s);
          out.result = {{"trivial", algebraic}, {"routes_agree", algebraic == marked}};
          out.text.push_back(std::string("trivial: ") + (algebraic ? "true" : "false"));
          out.text.push_back(std::string("routes agree: ") + (algebraic == marked ? "true" : "false"));
          if (algebraic != marked) out.status = 1;
          emit(opt, out);
          return out.status;
        }
        if (!elem_args.empty()) throw Error(Errc::parse, "cert sigma takes an arrow and a permutation");
        out.inputs.update({{"max_perm", max_perm}, {"depth", depth}});
        report = sigma_span_sweep(backend, max_perm, depth);
      }
      out.result = {{"ok", report.ok()}, {"violations", report.violations}};
      out.witnesses = rows_json(report);
      report_text(report, out);
      if (!report.ok()) out.status = 1;
    }
    emit(opt, out);
    return out.status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
