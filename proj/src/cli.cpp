#include "facemonoid/cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "facemonoid/actions.hpp"
#include "facemonoid/io.hpp"
#include "facemonoid/verify.hpp"

namespace fm {

namespace {

struct ExprParser {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& what) {
    fail("ParseError", what + " at position " + std::to_string(pos));
  }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  int number() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (start == pos) err("expected a number");
    return std::stoi(text.substr(start, pos - start));
  }
};

FaceMonoidElement parse_element_impl(GcmPtr g, const std::string& text) {
  ExprParser p{text};
  std::vector<int> before, after;
  bool seen_e = false;
  IndexSet theta;

  if (text.empty()) p.err("empty element expression");
  for (;;) {
    if (p.done()) p.err("expected a token");
    char c = p.peek();
    if (c == 's') {
      ++p.pos;
      int i = p.number();
      if (i < 1 || i > g->rank()) p.err("generator s" + std::to_string(i) + " out of range");
      (seen_e ? after : before).push_back(i - 1);
    } else if (c == 'e') {
      if (seen_e) p.err("more than one e[...] factor");
      ++p.pos;
      if (p.done() || p.peek() != '[') p.err("expected '['");
      ++p.pos;
      for (;;) {
        int i = p.number();
        if (i < 1 || i > g->rank()) p.err("index " + std::to_string(i) + " out of range");
        theta.insert(i - 1);
        if (!p.done() && p.peek() == ',') {
          ++p.pos;
          continue;
        }
        break;
      }
      if (p.done() || p.peek() != ']') p.err("expected ']'");
      ++p.pos;
      seen_e = true;
    } else {
      p.err(std::string("unexpected character '") + c + "'");
    }
    if (p.done()) break;
    if (p.peek() != '.') p.err("expected '.'");
    ++p.pos;
  }

  WeylWord w1 = normalize(g, before);
  WeylWord w2 = normalize(g, after);
  if (!seen_e) return from_word(mul(w1, w2));
  return make_element(w1, make_face(identity(g), theta), w2);
}

std::vector<int> parse_letters(GcmPtr g, const std::string& csv) {
  std::vector<int> out;
  size_t i = 0;
  while (i < csv.size()) {
    size_t j = csv.find(',', i);
    if (j == std::string::npos) j = csv.size();
    std::string tok = csv.substr(i, j - i);
    try {
      int v = std::stoi(tok);
      if (v < 1 || v > g->rank()) fail("BadGenerator", "generator " + tok + " out of range");
      out.push_back(v - 1);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail("ParseError", "bad generator list entry: '" + tok + "'");
    }
    i = j + 1;
  }
  return out;
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail("ParseError", std::string(what) + ": " + e.what());
  }
}

ActionKind parse_kind(const std::string& s) {
  if (s == "bad") return ActionKind::Bad;
  if (s == "good1") return ActionKind::Good1;
  if (s == "good2") return ActionKind::Good2;
  fail("ParseError", "unknown action kind '" + s + "' (bad|good1|good2)");
}

Json suite_to_json(const verify::SuiteReport& r) {
  return Json{{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}};
}

}  // namespace

FaceMonoidElement parse_element_expr(GcmPtr g, const std::string& text) {
  return parse_element_impl(std::move(g), text);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"face monoid of a Kac-Moody Weyl group"};
  app.fallthrough();

  std::string gcm_path;
  bool pretty = false;
  std::uint64_t seed = 12345;
  int max_len = 6, samples = 1000, budget = 10000;
  app.add_option("--gcm", gcm_path, "GCM file, JSON {\"matrix\": [[...],...]}");
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--max-len", max_len, "word-length bound for enumerations");
  app.add_option("--samples", samples, "sample count for randomized suites");
  app.add_option("--budget", budget, "reflection budget for the numbers game");

  app.require_subcommand(1);
  Json result;

  auto load = [&gcm_path]() {
    if (gcm_path.empty()) fail("Usage", "--gcm FILE is required for this command");
    return load_gcm_file(gcm_path);
  };

  // classify
  std::string subset_csv;
  CLI::App* classify = app.add_subcommand("classify", "component types of the GCM");
  classify->add_option("--subset", subset_csv, "restrict to a subset, e.g. 1,2");
  classify->callback([&]() {
    GcmPtr g = load();
    IndexSet s = g->all();
    if (!subset_csv.empty()) {
      s = IndexSet{};
      for (int i : parse_letters(g, subset_csv)) s.insert(i);
    }
    Json comps = Json::array();
    for (IndexSet comp : g->components(s))
      comps.push_back(Json{{"indices", subset_to_json(comp)},
                           {"type", type_class_name(g->classify(comp))}});
    result = Json{{"components", comps}};
  });

  // special
  app.add_subcommand("special", "all special subsets")->callback([&]() {
    GcmPtr g = load();
    Json arr = Json::array();
    for (IndexSet s : g->special_subsets()) arr.push_back(subset_to_json(s));
    result = Json{{"special", arr}};
  });

  // word
  std::string letters_csv;
  CLI::App* word = app.add_subcommand("word", "canonical reduced word and descent data");
  word->add_option("--letters", letters_csv, "generators, e.g. 2,1,2")->required();
  word->callback([&]() {
    GcmPtr g = load();
    WeylWord w = normalize(g, parse_letters(g, letters_csv));
    result = Json{{"word", word_to_json(w)},
                  {"length", length(w)},
                  {"support", subset_to_json(support(w))},
                  {"left_descents", subset_to_json(left_descents(w))},
                  {"right_descents", subset_to_json(right_descents(w))}};
  });

  // face meet|join|facet
  CLI::App* face = app.add_subcommand("face", "face lattice operations");
  face->require_subcommand(1);
  std::string f1_text, f2_text, facet_text;
  CLI::App* fmeet = face->add_subcommand("meet", "lattice meet of two faces");
  CLI::App* fjoin = face->add_subcommand("join", "lattice join of two faces");
  for (CLI::App* sub : {fmeet, fjoin}) {
    sub->add_option("--f1", f1_text, "face JSON")->required();
    sub->add_option("--f2", f2_text, "face JSON")->required();
  }
  fmeet->callback([&]() {
    GcmPtr g = load();
    result = face_to_json(
        face_meet(face_from_json(g, parse_json(f1_text, "--f1")), face_from_json(g, parse_json(f2_text, "--f2"))));
  });
  fjoin->callback([&]() {
    GcmPtr g = load();
    result = face_to_json(
        face_join(face_from_json(g, parse_json(f1_text, "--f1")), face_from_json(g, parse_json(f2_text, "--f2"))));
  });
  CLI::App* ffacet = face->add_subcommand("facet", "intersection of a face with a closed facet");
  ffacet->add_option("--face", f1_text, "face JSON")->required();
  ffacet->add_option("--facet", facet_text, "facet JSON")->required();
  ffacet->callback([&]() {
    GcmPtr g = load();
    result = facet_to_json(face_meet_facet(face_from_json(g, parse_json(f1_text, "--face")),
                                           facet_from_json(g, parse_json(facet_text, "--facet"))));
  });

  // monoid mul|inv|nf
  CLI::App* monoid = app.add_subcommand("monoid", "face monoid operations");
  monoid->require_subcommand(1);
  std::string x_expr, y_expr, variant = "I";
  CLI::App* mmul = monoid->add_subcommand("mul", "product of two elements");
  mmul->add_option("--x", x_expr, "element expression, e.g. s3.e[1,2]")->required();
  mmul->add_option("--y", y_expr, "element expression")->required();
  mmul->callback([&]() {
    GcmPtr g = load();
    result = element_to_json(mul(parse_element_expr(g, x_expr), parse_element_expr(g, y_expr)));
  });
  CLI::App* minv = monoid->add_subcommand("inv", "inverse-monoid inverse");
  minv->add_option("--x", x_expr, "element expression")->required();
  minv->callback([&]() {
    GcmPtr g = load();
    result = element_to_json(inverse(parse_element_expr(g, x_expr)));
  });
  CLI::App* mnf = monoid->add_subcommand("nf", "normal form I or II");
  mnf->add_option("--x", x_expr, "element expression")->required();
  mnf->add_option("--variant", variant, "I or II")->check(CLI::IsMember({"I", "II"}));
  mnf->callback([&]() {
    GcmPtr g = load();
    NormalForm nf = normal_form(parse_element_expr(g, x_expr),
                                variant == "I" ? NormalFormVariant::I : NormalFormVariant::II);
    result = Json{{"left", word_to_json(nf.w1)},
                  {"theta", subset_to_json(nf.theta)},
                  {"right", word_to_json(nf.w2)}};
  });

  // act
  std::string kind_text, element_text, coset_text;
  CLI::App* act_cmd = app.add_subcommand("act", "apply an element to a Coxeter-complex coset");
  act_cmd->add_option("--kind", kind_text, "bad|good1|good2")->required();
  act_cmd->add_option("--element", element_text, "element expression")->required();
  act_cmd->add_option("--coset", coset_text, "coset JSON {\"rep\":[...],\"jtype\":[...]}")->required();
  act_cmd->callback([&]() {
    GcmPtr g = load();
    result = complex_to_json(act(parse_kind(kind_text), parse_element_expr(g, element_text),
                                 complex_from_json(g, parse_json(coset_text, "--coset"))));
  });

  // enumerate
  CLI::App* enum_cmd = app.add_subcommand("enumerate", "all elements up to the length bound");
  enum_cmd->callback([&]() {
    GcmPtr g = load();
    Json arr = Json::array();
    for (const FaceMonoidElement& x : enumerate_monoid(g, max_len)) arr.push_back(element_to_json(x));
    result = Json{{"max_len", max_len}, {"count", arr.size()}, {"elements", arr}};
  });

  // verify
  std::string suite = "all";
  bool verify_failed = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", suite, "suite name or 'all'");
  verify_cmd->callback([&]() {
    verify::Params params{seed, max_len, samples, budget};
    std::vector<verify::SuiteReport> reports;
    if (suite == "all")
      reports = verify::run_all(params);
    else
      reports.push_back(verify::run_suite(suite, params));
    Json arr = Json::array();
    int failures = 0;
    for (const auto& r : reports) {
      arr.push_back(suite_to_json(r));
      failures += static_cast<int>(r.failures.size());
    }
    verify_failed = failures > 0;
    result = reports.size() == 1 ? arr.front() : Json{{"suites", arr}, {"failures", failures}};
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help() << std::flush;
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    out << Json{{"error", e.code()}, {"detail", e.detail()}}.dump(pretty ? 2 : -1) << "\n";
    return 3;
  }

  out << result.dump(pretty ? 2 : -1) << "\n";
  return verify_failed ? 1 : 0;
}

}  // namespace fm
