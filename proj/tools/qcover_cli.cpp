#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qcover/decompose.hpp"
#include "qcover/errors.hpp"
#include "qcover/indecomposables.hpp"
#include "qcover/suite.hpp"
#include "qcover/tau_tilting.hpp"

using nlohmann::json;
using namespace qcover;

namespace {

struct Options {
  std::string input;
  std::optional<int> window;
  std::size_t cap = 64;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string claim;
  bool all = false;
  int n = 1;
};

// Input problems are usage errors (exit 2); the typed name is kept in the message.
struct InputError {
  std::string message;
};

std::shared_ptr<const Presentation> load_input(const Options& o) {
  try {
    return std::make_shared<const Presentation>(load_presentation_file(o.input));
  } catch (const SchemaError& e) {
    throw InputError{std::string("SchemaError: ") + e.what()};
  } catch (const Error& e) {
    throw InputError{"SchemaError: " + e.kind() + ": " + e.what()};
  }
}

SuiteInstance instance(const Options& o) {
  auto p = load_input(o);
  int w = o.window ? *o.window : default_window(*p, o.n);
  try {
    return make_instance(p, w, o.n, o.cap, o.seed);
  } catch (const Error& e) {
    throw InputError{e.kind() + ": " + e.what()};
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError{"cannot write '" + o.out + "'"};
  f << text;
}

std::string verdict_word(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return verdict_name(v);
  }
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << r.claim << ": " << verdict_word(r.pass) << "\n";
  for (const auto& w : r.witnesses) s << "  " << w.dump() << "\n";
  return s.str();
}

int run_validate(const Options& o) {
  auto p = load_input(o);
  json j = {{"valid", true},
            {"vertices", p->num_vertices()},
            {"arrows", p->quiver.arrows.size()},
            {"relations", p->quiver.relations.size()},
            {"nilbound", p->algebra->nilbound()},
            {"square_free", is_square_free(*p)},
            {"default_window", default_window(*p, o.n)}};
  if (o.format == "text")
    emit(o, "valid: " + std::to_string(p->num_vertices()) + " vertices, " + std::to_string(p->quiver.arrows.size()) +
                " arrows\n");
  else
    emit(o, j.dump(2) + "\n");
  return 0;
}

int run_report(const Options& o, const VerificationReport& r) {
  emit(o, o.format == "text" ? report_text(r) : r.to_json().dump(2) + "\n");
  return verdict_exit_code(r.pass);
}

int run_orbit(const Options& o) {
  SuiteInstance inst = instance(o);
  VerificationReport r;
  try {
    r = verify_orbit_bijection(*inst.covering, o.cap);
  } catch (const Error& e) {
    r.claim = "Corres";
    r.pass = Verdict::Indeterminate;
    r.note({{"error", e.kind()}, {"detail", e.what()}});
  }
  return run_report(o, r);
}

// P_* of the covering projectives and injectives against the base ones.
int run_pushdown(const Options& o) {
  SuiteInstance inst = instance(o);
  const Covering& cov = *inst.covering;
  Carrier up = inst.up(), down = inst.down();
  json rows = json::array();
  bool ok = true;
  std::ostringstream text;
  for (int x : up.fundamental_vertices()) {
    int b = cov.vertices[x].base;
    bool p = is_isomorphic(up.push_down(up.projective(x)), down.projective(b));
    bool i = is_isomorphic(up.push_down(up.injective(x)), down.injective(b));
    ok = ok && p && i;
    rows.push_back({{"vertex", cov.vertex_name(x)}, {"projective", p}, {"injective", i}});
    text << cov.vertex_name(x) << ": projective " << (p ? "ok" : "MISMATCH") << ", injective "
         << (i ? "ok" : "MISMATCH") << "\n";
  }
  json j = {{"window", {cov.window.lo(), cov.window.hi()}}, {"vertices", rows}, {"pass", ok}};
  emit(o, o.format == "text" ? text.str() : j.dump(2) + "\n");
  return ok ? 0 : 1;
}

int run_indecs(const Options& o) {
  auto p = load_input(o);
  Carrier down = Carrier::plain(p->algebra);
  json j = json::object();
  std::ostringstream text;
  try {
    json base = json::array();
    for (const auto& m : down.pool(o.cap)) base.push_back(m.dim_vector_string());
    j["base"] = base;
    text << "base: " << base.size() << "\n";
    if (o.window) {
      SuiteInstance inst = make_instance(p, *o.window, o.n, o.cap, o.seed);
      json classes = json::array();
      for (const auto& m : inst.up().pool(o.cap)) classes.push_back(m.dim_vector_string());
      j["covering_classes"] = classes;
      text << "covering classes: " << classes.size() << "\n";
    }
  } catch (const CapExceeded& e) {
    std::cerr << "CapExceeded: " << e.what() << "\n";
    return 3;
  }
  emit(o, o.format == "text" ? text.str() : j.dump(2) + "\n");
  return 0;
}

int run_check(const Options& o) { return run_report(o, run_claim(o.claim, instance(o))); }

int run_suite(const Options& o) {
  SuiteInstance inst = instance(o);
  json reports = json::array();
  json counts = {{"pass", 0}, {"fail", 0}, {"not-applicable", 0}, {"indeterminate", 0}};
  std::string text;
  int worst = 0;
  for (const auto& id : claim_ids()) {
    VerificationReport r = run_claim(id, inst);
    reports.push_back(r.to_json());
    counts[verdict_word(r.pass)] = counts[verdict_word(r.pass)].get<int>() + 1;
    text += report_text(r);
    int code = verdict_exit_code(r.pass);
    if (code == 1 || (code == 3 && worst == 0)) worst = code;
  }
  std::string summary = "summary: " + std::to_string(counts["pass"].get<int>()) + " pass, " +
                        std::to_string(counts["fail"].get<int>()) + " fail, " +
                        std::to_string(counts["not-applicable"].get<int>()) + " not-applicable, " +
                        std::to_string(counts["indeterminate"].get<int>()) + " indeterminate";
  if (o.format == "text")
    emit(o, text + summary + "\n");
  else
    emit(o, json{{"reports", reports}, {"summary", counts}}.dump(2) + "\n");
  if (o.format != "text") std::cerr << summary << "\n";
  return worst;
}

int run_enumerate(const Options& o) {
  auto p = load_input(o);
  Carrier c = Carrier::plain(p->algebra);
  std::vector<TiltingPair> pairs;
  try {
    pairs = enumerate_support_tilting_pairs(c, make_subcategory(c, c.pool(o.cap)), o.n, std::size_t{1} << 20, o.cap);
  } catch (const AmbientNotClusterTilting& e) {
    std::cerr << "AmbientNotClusterTilting: " << e.what() << "\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "CapExceeded: " << e.what() << "\n";
    return 3;
  }
  json arr = json::array();
  std::ostringstream text;
  for (const auto& t : pairs) {
    arr.push_back(t.to_json());
    text << t.to_json().dump() << "\n";
  }
  text << pairs.size() << " pairs\n";
  emit(o, o.format == "text" ? text.str() : json{{"n", o.n}, {"count", pairs.size()}, {"pairs", arr}}.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverings of bound quiver algebras and higher Auslander-Reiten theory"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "presentation JSON")->check(CLI::ExistingFile);
  app.add_option("--window", o.window, "box half-width (default 3*loewy*(n+2))")->check(CLI::PositiveNumber);
  app.add_option("--cap", o.cap, "dimension cap for indecomposables");
  app.add_option("--seed", o.seed, "seed for sampled checks");
  app.add_option("--out", o.out, "write output to FILE");
  app.add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--n", o.n, "n")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "parse and check a presentation");
  auto* orbit = app.add_subcommand("orbit", "Gabriel bijection on the window");
  auto* pushdown = app.add_subcommand("pushdown", "push-down of projectives and injectives");
  auto* indecs = app.add_subcommand("indecs", "indecomposables downstairs (and up to twist with --window)");
  auto* check = app.add_subcommand("check", "verify one claim");
  check->add_option("--claim", o.claim)->required()->check(CLI::IsMember(claim_ids()));
  auto* suite = app.add_subcommand("suite", "verify every claim");
  suite->add_flag("--all", o.all, "run all claims");
  auto* enumerate = app.add_subcommand("enumerate-tilting", "support tau_n-tilting pairs of the base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (o.input.empty()) {
    std::cerr << "usage error: --input is required\n";
    return 2;
  }

  try {
    if (*validate) return run_validate(o);
    if (*orbit) return run_orbit(o);
    if (*pushdown) return run_pushdown(o);
    if (*indecs) return run_indecs(o);
    if (*check) return run_check(o);
    if (*suite) return run_suite(o);
    if (*enumerate) return run_enumerate(o);
  } catch (const InputError& e) {
    std::cerr << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return 3;
  }
  return 2;
}
