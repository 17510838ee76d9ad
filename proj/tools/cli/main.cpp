// tlimm: command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 malformed input, 3 precondition
// or size limit, 4 verification mismatch.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "tlimm/classify.hpp"
#include "tlimm/error.hpp"
#include "tlimm/immanant.hpp"
#include "tlimm/io/json.hpp"
#include "tlimm/io/render.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/tl.hpp"
#include "tlimm/verify/suites.hpp"

namespace {

using namespace tlimm;
using io::Json;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kMismatch = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return io::parse_json(arg);
  return io::parse_json(read_file(arg));
}

void print_json(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

int cmd_coeff(const std::string& w_text, const std::string& u_text, const std::string& method) {
  const auto w = Permutation::parse(w_text);
  const auto u = Permutation::parse(u_text);
  if (method == "oracle") {
    std::cout << f_coeff(w, u) << '\n';
    return kOk;
  }
  if (method == "formula") {
    std::cout << closed_form_coeff(w, u) << '\n';
    return kOk;
  }
  const auto oracle = f_coeff(w, u);
  const auto formula = closed_form_coeff(w, u);
  const bool agree = oracle == formula;
  std::cout << oracle << ' ' << formula << ' ' << (agree ? "OK" : "MISMATCH") << '\n';
  return agree ? kOk : kMismatch;
}

int cmd_immanant(const std::string& w_text, const std::string& format, bool pretty) {
  const auto f = tl_immanant(Permutation::parse(w_text));
  if (format == "json") {
    print_json(io::to_json(f), pretty);
  } else {
    for (const auto& [u, c] : f.coeffs()) std::cout << u.str() << ' ' << c << '\n';
  }
  return kOk;
}

Json pattern_report(const Permutation& w) {
  Json contains = Json::object();
  for (const char* p : {"321", "1324", "2143", "24153", "31524", "231564", "312645"}) {
    const auto v = Permutation::parse(p);
    contains[p] = v.size() <= w.size() && contains_pattern(w, v);
  }
  return contains;
}

int cmd_classify(const std::string& w_text, bool pretty) {
  const auto w = Permutation::parse(w_text);
  if (!avoids_321(w)) throw PreconditionError("classify: " + w.str() + " contains 321");
  Json out{{"perm", w.str()}, {"n", w.size()}, {"sign", sign(w)}, {"contains", pattern_report(w)}};
  const auto d = decompose(w, {.validate = false});
  out["decomposition"] = to_string(d.kind);
  const auto& contains = out["contains"];
  if (!contains["1324"].get<bool>() && contains["2143"].get<bool>()) {
    out["params"] = io::to_json(classify_2143(w));
    out["antidiagonal"] = antidiag_coeff(w);
  }
  print_json(out, pretty);
  return kOk;
}

int cmd_expand(const std::string& w_text, bool pretty) {
  const auto w = Permutation::parse(w_text);
  const Json contains = [&] {
    if (!avoids_321(w)) throw PreconditionError("expand: " + w.str() + " contains 321");
    return pattern_report(w);
  }();
  if (contains["1324"].get<bool>()) throw PreconditionError("expand: " + w.str() + " contains 1324");
  Json out{{"perm", w.str()}, {"sign", sign(w)}};
  if (contains["2143"].get<bool>()) {
    out["kind"] = "signed-cm";
    out["terms"] = io::to_json(cm_expansion(w));
  } else {
    const auto red = reduce_to_special(w);
    out["kind"] = "rectangle";
    out["reduced"] = red.reduced.str();
    Json transforms = Json::array();
    for (auto t : red.transforms) transforms.push_back(t == Transform::S ? "S" : "T");
    out["transforms"] = std::move(transforms);
    out["shape"] = io::to_json(hull(red.reduced));
    out["terms"] = io::to_json(rect_cm_expansion(red.reduced));
  }
  print_json(out, pretty);
  return kOk;
}

int cmd_classes(int n, bool pretty) {
  if (n < 1) throw PreconditionError("classes: n must be positive");
  Json classes = Json::array();
  for (const auto& members : related_classes(n)) {
    Json list = Json::array();
    for (const auto& u : members) list.push_back(u.str());
    classes.push_back({{"hull", io::to_json(hull(members.front()))}, {"members", std::move(list)}});
  }
  print_json({{"n", n}, {"classes", std::move(classes)}}, pretty);
  return kOk;
}

int cmd_eval(const std::string& immanant_arg, const std::string& matrix_arg) {
  const auto f = io::immanant_from_json(load_json(immanant_arg));
  const auto x = io::matrix_from_json(load_json(matrix_arg));
  if (f.size() != x.size()) throw PreconditionError("eval: immanant and matrix sizes differ");
  std::cout << to_string(evaluate(f, x)) << '\n';
  return kOk;
}

int cmd_basis(const std::string& immanant_arg, bool pretty) {
  const auto f = io::immanant_from_json(load_json(immanant_arg));
  print_json({{"n", f.size()}, {"terms", io::to_json(percent_basis_decompose(f))}}, pretty);
  return kOk;
}

int cmd_render(const std::string& kind, const std::string& arg, const std::string& format) {
  const bool svg = format == "svg";
  if (kind == "ncm" || kind == "matching") {
    const auto m = kind == "ncm" ? beta(Permutation::parse(arg)) : NonCrossingMatching::parse(arg);
    std::cout << (svg ? io::render_svg(m) : io::render_ascii(m));
  } else if (kind == "hull") {
    const auto w = Permutation::parse(arg);
    const auto h = hull(w);
    std::cout << (svg ? io::render_svg(h, w) : io::render_ascii(h, w));
  } else {
    const auto s = io::shape_from_json(load_json(arg));
    std::cout << (svg ? io::render_svg(s) : io::render_ascii(s));
  }
  return kOk;
}

Json report_json(const verify::Report& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"claim", f.claim}, {"witness", f.witness}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite},       {"n", r.n},         {"checks", r.checks},
          {"failures", failures},   {"notes", r.notes}, {"elapsed_seconds", r.elapsed.count()}};
}

int cmd_verify(const std::string& suite, const verify::SuiteOptions& options, const std::string& format) {
  std::vector<std::string> ids;
  if (suite == "all") ids = verify::suite_ids();
  else if (verify::is_suite(suite)) ids = {suite};
  else throw ParseError("verify: unknown suite '" + suite + "'");
  bool ok = true;
  Json all = Json::array();
  for (const auto& id : ids) {
    const auto report = verify::run_suite(id, options);
    ok = ok && report.ok();
    if (format == "json") all.push_back(report_json(report));
    else verify::print(std::cout, report);
  }
  if (format == "json") std::cout << all.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb and %-immanants of permutations"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::function<int()> action;
  std::string w, u, method = "oracle", format, kind, arg, matrix, suite = "all";
  int n = 0;
  verify::SuiteOptions options;

  auto* coeff = app.add_subcommand("coeff", "Coefficient f_w(u)");
  coeff->add_option("w", w, "321-avoiding permutation")->required();
  coeff->add_option("u", u, "Permutation")->required();
  coeff->add_option("--method", method, "oracle, formula or both")
      ->check(CLI::IsMember({"oracle", "formula", "both"}));
  coeff->callback([&] { action = [&] { return cmd_coeff(w, u, method); }; });

  auto* immanant = app.add_subcommand("immanant", "All coefficients of the TL immanant of w");
  immanant->add_option("w", w)->required();
  format = "json";
  immanant->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  immanant->callback([&] { action = [&] { return cmd_immanant(w, format, pretty); }; });

  auto* hull_cmd = app.add_subcommand("hull", "Hull of w as a skew shape");
  hull_cmd->add_option("w", w)->required();
  hull_cmd->callback([&] {
    action = [&] {
      print_json(io::to_json(hull(Permutation::parse(w))), pretty);
      return kOk;
    };
  });

  auto* ncm = app.add_subcommand("ncm", "Non-crossing matching of a 321-avoiding w");
  ncm->add_option("w", w)->required();
  ncm->callback([&] {
    action = [&] {
      std::cout << beta(Permutation::parse(w)).str() << '\n';
      return kOk;
    };
  });

  auto* classify = app.add_subcommand("classify", "Pattern report and block parameters");
  classify->add_option("w", w)->required();
  classify->callback([&] { action = [&] { return cmd_classify(w, pretty); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "sign(w)·Imm_w as one or two %-immanants");
  decompose_cmd->add_option("w", w)->required();
  decompose_cmd->callback([&] {
    action = [&] {
      print_json(io::to_json(decompose(Permutation::parse(w))), pretty);
      return kOk;
    };
  });

  auto* expand = app.add_subcommand("expand", "Complementary-minor expansion");
  expand->add_option("w", w)->required();
  expand->callback([&] { action = [&] { return cmd_expand(w, pretty); }; });

  auto* classes = app.add_subcommand("classes", "1324-relatedness classes of S_n");
  classes->add_option("n", n)->required();
  classes->callback([&] { action = [&] { return cmd_classes(n, pretty); }; });

  auto* eval = app.add_subcommand("eval", "Evaluate an immanant at a matrix");
  eval->add_option("immanant", arg, "Immanant JSON file or inline JSON")->required();
  eval->add_option("matrix", matrix, "Matrix JSON file or inline JSON")->required();
  eval->callback([&] { action = [&] { return cmd_eval(arg, matrix); }; });

  auto* basis = app.add_subcommand("basis", "Coefficients of an immanant in the %-immanant class basis");
  basis->add_option("immanant", arg, "Immanant JSON file or inline JSON")->required();
  basis->callback([&] { action = [&] { return cmd_basis(arg, pretty); }; });

  auto* render = app.add_subcommand("render", "Draw a matching or a skew shape");
  std::string render_format = "ascii";
  render->add_option("kind", kind, "ncm, matching, hull or shape")
      ->required()
      ->check(CLI::IsMember({"ncm", "matching", "hull", "shape"}));
  render->add_option("object", arg, "Permutation, matching text, or shape JSON")->required();
  render->add_option("--format", render_format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->callback([&] { action = [&] { return cmd_render(kind, arg, render_format); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suites");
  std::string verify_format = "text";
  verify_cmd->add_option("--suite", suite, "all or A1..A10");
  verify_cmd->add_option("--n", options.n, "Upper bound on n (default: per suite)");
  verify_cmd->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", options.seed, "Seed for sampled checks");
  verify_cmd->add_option("--samples", options.samples, "Random pairs for the sampled part of A3");
  verify_cmd->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&] { action = [&] { return cmd_verify(suite, options, verify_format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
