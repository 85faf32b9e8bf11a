// Command-line front end: algebra data, Khovanov tables from both
// pipelines, Jones polynomials, the decategorification check and the
// Jones-Wenzl projector.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "khtensor/cupcap.hpp"
#include "khtensor/decat.hpp"
#include "khtensor/khovanov.hpp"
#include "khtensor/table.hpp"

using namespace kht;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kMismatch = 2, kGuard = 3;

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string field;
  int l = 2, k = 1;
  int max_l = 6, max_k = 3;
  bool as_json = false;
  std::string output;
};

void guard_lk(const Config& c) {
  if (c.l < 0 || c.k < 0 || c.k > c.l) throw std::invalid_argument("need 0 <= k <= l");
  if (c.l > c.max_l || c.k > c.max_k)
    throw GuardError("l=" + std::to_string(c.l) + ", k=" + std::to_string(c.k) + " exceeds the guard (--max-l " +
                     std::to_string(c.max_l) + ", --max-k " + std::to_string(c.max_k) + ")");
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw std::runtime_error("cannot write " + c.output);
  out << text;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::istringstream in(s);
  int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) throw std::invalid_argument("expected integers: '" + s + "'");
  return v;
}

std::string word_name(const TensorAlgebra& alg, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) {
    if (!s.empty()) s += " ";
    s += to_string(alg.generator(g).kind) + std::to_string(alg.generator(g).i);
  }
  return s;
}

int cmd_algebra(const Config& c, const std::string& what) {
  guard_lk(c);
  TensorAlgebra alg(c.l, c.k);
  json j{{"l", c.l}, {"k", c.k}, {"field", Field::name()}};
  std::ostringstream out;
  int code = kOk;
  if (what == "dims") {
    j["dim"] = alg.dim();
    j["idempotents"] = alg.num_kappas();
    out << alg.dim() << '\n';
  } else if (what == "verify") {
    const auto rep = verify_relations(alg);
    const auto cells = cellular_basis(alg);
    const int rank = cellular_rank(alg, cells);
    const bool ok = rep.ok() && rank == alg.dim() && static_cast<int>(cells.size()) == alg.dim();
    j["relations_checked"] = rep.checked;
    j["failures"] = rep.failures;
    j["cellular_elements"] = cells.size();
    j["cellular_rank"] = rank;
    j["dim"] = alg.dim();
    j["ok"] = ok;
    out << "relations checked: " << rep.checked << ", failures: " << rep.failures.size() << '\n';
    for (const auto& f : rep.failures) out << "  " << f << '\n';
    out << "cellular elements: " << cells.size() << ", rank " << rank << ", dim " << alg.dim() << '\n';
    out << (ok ? "all relations pass" : "verification FAILED") << '\n';
    if (!ok) code = kMismatch;
  } else {
    throw std::invalid_argument("algebra: unknown report '" + what + "' (dims, verify)");
  }
  emit(c, c.as_json ? j.dump(2) : out.str());
  return code;
}

int cmd_basis(const Config& c, const std::string& kappa) {
  guard_lk(c);
  TensorAlgebra alg(c.l, c.k);
  std::vector<int> rows;
  if (kappa.empty()) {
    for (int t = 0; t < alg.num_kappas(); ++t) rows.push_back(t);
  } else {
    rows.push_back(alg.kappa_index(Kappa{c.l, c.k, parse_ints(kappa)}));
  }
  json j = json::array();
  std::ostringstream out;
  for (int t : rows)
    for (int s = 0; s < alg.num_kappas(); ++s) {
      const Block& b = alg.block(t, s);
      if (b.dim() == 0) continue;
      out << "e" << alg.kappa(t).str() << " T e" << alg.kappa(s).str() << ": " << b.dim() << '\n';
      for (const auto& x : b.elems) {
        out << "  deg " << x.degree << ": " << word_name(alg, x.word) << '\n';
        j.push_back({{"target", alg.kappa(t).v}, {"source", alg.kappa(s).v}, {"degree", x.degree},
                     {"word", word_name(alg, x.word)}});
      }
    }
  emit(c, c.as_json ? j.dump(2) : out.str());
  return kOk;
}

int cmd_kh(const Config& c, const std::string& braid, int strands, const std::string& closure,
           const std::string& engine, const std::string& format, int max_crossings, int max_width) {
  if (closure != "trace") throw std::invalid_argument("kh: only --closure trace is supported");
  const LinkDiagram d = LinkDiagram::from_braid(braid, strands);
  if (d.crossings() > max_crossings)
    throw GuardError("crossing count " + std::to_string(d.crossings()) + " exceeds --max-crossings");
  TableMeta meta{0, 0, Field::name(), KHT_VERSION};
  std::optional<BigradedTable> cube, functor;
  if (engine == "cube" || engine == "both") cube = kh_cube(d, max_crossings);
  if (engine == "functor" || engine == "both") {
    const auto word = trace_closure(d.braid, d.strands);
    const int width = check_arity(word);
    if (width > max_width)
      throw GuardError("functor engine needs " + std::to_string(width) + " red strands, above --max-width " +
                       std::to_string(max_width));
    FunctorEngine eng;
    functor = BigradedTable(khovanov_ranks(eng.run(word)));
  }
  if (!cube && !functor) throw std::invalid_argument("kh: unknown engine '" + engine + "'");
  BigradedTable t = cube ? *cube : *functor;
  t.meta() = meta;
  std::string text;
  if (format == "tsv") text = t.to_tsv();
  else if (format == "json" || c.as_json) text = t.to_json(2);
  else if (format == "table") text = t.pretty();
  else throw std::invalid_argument("kh: unknown format '" + format + "'");
  emit(c, text);
  if (cube && functor && !(*cube == *functor)) {
    std::cerr << "engine mismatch\ncube:\n" << cube->to_tsv() << "functor:\n" << functor->to_tsv();
    return kMismatch;
  }
  return kOk;
}

int cmd_jones(const Config& c, const std::string& braid, int strands) {
  const LinkDiagram d = LinkDiagram::from_braid(braid, strands);
  if (d.crossings() > 24) throw GuardError("jones: more than 24 crossings");
  const LaurentPoly j = jones_polynomial(d.braid, d.strands);
  json out{{"braid", d.braid}, {"strands", d.strands}, {"jones", j.str()}};
  emit(c, c.as_json ? out.dump(2) : j.str());
  return kOk;
}

int cmd_decat(const Config& c, int kmax) {
  json j = json::array();
  std::ostringstream out;
  bool all = true;
  for (int k = 0; k <= std::min(c.l, kmax); ++k) {
    Config ck = c;
    ck.k = k;
    guard_lk(ck);
    TensorAlgebra alg(c.l, k);
    int pairs = 0, equal = 0;
    for (int a = 0; a < alg.num_kappas(); ++a)
      for (int b = 0; b < alg.num_kappas(); ++b) {
        const LaurentPoly hom = LaurentPoly::from_dims(alg.block_graded_dim(a, b));
        const LaurentPoly form = pairing(vector_p(alg.kappa(a)), vector_p(alg.kappa(b)));
        ++pairs;
        if (hom == form) ++equal;
        else out << "  mismatch " << alg.kappa(a).str() << " " << alg.kappa(b).str() << ": " << hom.str() << " vs "
                 << form.str() << '\n';
        j.push_back({{"k", k}, {"kappa", alg.kappa(a).v}, {"kappa_prime", alg.kappa(b).v}, {"hom", hom.str()},
                     {"pairing", form.str()}, {"equal", hom == form}});
      }
    out << "l=" << c.l << " k=" << k << ": " << equal << "/" << pairs << " pairs match\n";
    all = all && equal == pairs;
  }
  out << (all ? "all equal" : "MISMATCH") << '\n';
  emit(c, c.as_json ? json{{"l", c.l}, {"pairs", j}, {"all_equal", all}}.dump(2) : out.str());
  return all ? kOk : kMismatch;
}

int cmd_jw(const Config& c, const std::string& kappa, int cutoff, int degree) {
  guard_lk(c);
  const auto series = jw_matrix(c.l, c.k, degree);
  std::ostringstream out;
  json j{{"l", c.l}, {"k", c.k}, {"degree", degree}};
  for (const auto& [v, p] : series) {
    j["series"][Kappa{c.l, c.k, v}.str()] = p.str();
    out << "c" << Kappa{c.l, c.k, v}.str() << " = " << p.str() << " + O(q^" << degree + 1 << ")\n";
  }
  if (!kappa.empty()) {
    TensorAlgebra alg(c.l, c.k);
    ModuleContext ctx(alg);
    const int t = alg.kappa_index(Kappa{c.l, c.k, parse_ints(kappa)});
    const ProjComplex pc = jw_projection(ctx, ctx.projective(t), cutoff);
    out << "projector on P" << alg.kappa(t).str() << " (cutoff " << cutoff << "):\n";
    json terms = json::array();
    for (int n = pc.lo; n <= pc.hi(); ++n) {
      out << "  " << n << ":";
      for (const Summand& s : pc.at(n)) {
        out << " T" << s.alpha << "{" << s.shift << "}";
        terms.push_back({{"h", n}, {"type", s.alpha}, {"shift", s.shift}});
      }
      out << '\n';
    }
    j["complex"] = terms;
  }
  emit(c, c.as_json ? j.dump(2) : out.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor product algebras, categorified tangle invariants and Khovanov homology"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  const char* env = std::getenv("KHTENSOR_FIELD");
  cfg.field = env ? env : "q";
  app.add_option("--field", cfg.field, "Coefficient field: q, or a prime (default from KHTENSOR_FIELD)");
  app.add_flag("--json", cfg.as_json, "JSON output");
  app.add_option("-o,--output", cfg.output, "Write to a file instead of stdout");
  app.set_version_flag("--version", KHT_VERSION);

  auto add_lk = [&](CLI::App* sub) {
    sub->add_option("--l", cfg.l, "Number of red strands");
    sub->add_option("--k", cfg.k, "Number of black strands");
    sub->add_option("--max-l", cfg.max_l, "Resource guard on l")->capture_default_str();
    sub->add_option("--max-k", cfg.max_k, "Resource guard on k")->capture_default_str();
  };

  std::string report = "dims";
  auto* algebra = app.add_subcommand("algebra", "Dimension and relation checks");
  add_lk(algebra);
  algebra->add_option("report", report, "dims or verify");

  std::string kappa;
  auto* basis = app.add_subcommand("basis", "List the block bases");
  add_lk(basis);
  basis->add_option("--kappa", kappa, "Only blocks with this target, e.g. \"0 1\"");

  std::string braid, closure = "trace", engine = "cube", format = "table";
  int strands = 0, max_crossings = 14, max_width = 4;
  auto* kh = app.add_subcommand("kh", "Khovanov homology of a braid closure");
  kh->add_option("--braid", braid, "Braid word, e.g. \"1 -2 1\"")->required();
  kh->add_option("--strands", strands, "Strand count (default: largest generator + 1)");
  kh->add_option("--closure", closure, "Closure type")->capture_default_str();
  kh->add_option("--engine", engine, "cube, functor or both")->capture_default_str();
  kh->add_option("--format", format, "table, tsv or json")->capture_default_str();
  kh->add_option("--max-crossings", max_crossings, "Resource guard for the cube")->capture_default_str();
  kh->add_option("--max-width", max_width, "Resource guard on red strands for the functor engine")
      ->capture_default_str();

  auto* jones = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  jones->add_option("--braid", braid, "Braid word")->required();
  jones->add_option("--strands", strands, "Strand count");

  int kmax = 2;
  auto* decat = app.add_subcommand("decat", "Compare the form on (C^2)^l with graded Hom dimensions");
  decat->add_option("--l", cfg.l, "Number of red strands");
  decat->add_option("--kmax", kmax, "Largest k")->capture_default_str();
  decat->add_option("--max-l", cfg.max_l, "Resource guard on l")->capture_default_str();
  decat->add_option("--max-k", cfg.max_k, "Resource guard on k")->capture_default_str();

  int cutoff = 8, degree = 12;
  auto* jw = app.add_subcommand("jw", "Jones-Wenzl projector coefficients and complexes");
  add_lk(jw);
  jw->add_option("--kappa", kappa, "Also compute the projector on this projective");
  jw->add_option("--cutoff", cutoff, "Homological truncation")->capture_default_str();
  jw->add_option("--degree", degree, "Series truncation in q")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    Field::set(Field::parse(cfg.field));
    if (*algebra) return cmd_algebra(cfg, report);
    if (*basis) return cmd_basis(cfg, kappa);
    if (*kh) return cmd_kh(cfg, braid, strands, closure, engine, format, max_crossings, max_width);
    if (*jones) return cmd_jones(cfg, braid, strands);
    if (*decat) return cmd_decat(cfg, kmax);
    if (*jw) return cmd_jw(cfg, kappa, cutoff, degree);
  } catch (const GuardError& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
