#include "thinlie/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>

#include "thinlie/constructions.hpp"
#include "thinlie/derivations.hpp"
#include "thinlie/io.hpp"
#include "thinlie/lemmas.hpp"

namespace thinlie::cli {

namespace {

using io::json;

struct Job {
  std::string command;
  std::string family, pattern_file, sequence_file, spec_file, structure_file, out, check = "all", format;
  std::uint32_t p = 7;
  int q = 0, s = 1, r = 1, N = 0;  // N = 0: 60, or the structure file's own bound
  std::optional<long> mu;
  bool serial = false;
  int budget = 1000;
};

struct UsageError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};

int budget_from_env() {
  if (const char* v = std::getenv("THINLIE_MAX_DEGREE")) {
    try {
      return std::stoi(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("THINLIE_MAX_DEGREE is not an integer: ") + v);
    }
  }
  return 1000;
}

void require_budget(const Job& job, int top) {
  if (top > job.budget)
    throw BudgetError("required degree " + std::to_string(top) + " exceeds budget " + std::to_string(job.budget) +
                      " (set THINLIE_MAX_DEGREE to raise it)");
}

FamilySpec family_of(const Job& job) {
  FamilySpec s;
  if (!job.spec_file.empty()) {
    s = io::family_from_json(io::read_file(job.spec_file));
  } else {
    s.family = job.family;
    s.p = job.p;
    s.q = job.q > 0 ? job.q : static_cast<int>(job.p);
    s.s = job.s;
    s.mu = job.mu;
  }
  return s;
}

json structure_doc(const Job& job) {
  auto j = io::read_file(job.structure_file);
  return j.contains("structure") ? j.at("structure") : j;
}

int job_q(const Job& job) {
  if (!job.structure_file.empty()) return structure_doc(job).at("q").get<int>();
  if (!job.spec_file.empty()) return family_of(job).q;
  if (!job.pattern_file.empty()) return io::read_file(job.pattern_file).at("q").get<int>();
  return job.q > 0 ? job.q : static_cast<int>(job.p);
}

/// Algebra with nominal degree bound n (components up to n + 2).
GradedAlgebra build_algebra(const Job& job, int n) {
  require_budget(job, n + 2);
  if (!job.structure_file.empty()) {
    GradedAlgebra L = io::structure_from_json(structure_doc(job));
    if (L.top() < n + 2) throw DegreeOverflow(n + 2, L.top());
    return L;
  }
  if (!job.pattern_file.empty()) {
    auto P = io::pattern_from_json(io::read_file(job.pattern_file));
    return GradedAlgebra(compile_data(P, n));
  }
  if (!job.sequence_file.empty()) {
    auto [p, seq] = io::sequence_from_json(io::read_file(job.sequence_file));
    const int q = job.q > 0 ? job.q : static_cast<int>(p);
    const int need = tensor_required_degree(q, n);
    if (seq.last_index() < need - 1)
      throw ConstructionError("sequence has " + std::to_string(seq.entries.size()) + " entries; degree " +
                              std::to_string(n) + " needs " + std::to_string(need - 2));
    return tensor_construct(build_maxclass(gf::PrimeField(p), seq, need - 2), q, n);
  }
  FamilySpec spec = family_of(job);
  if (spec.family.empty())
    throw UsageError("one of --family, --spec, --pattern, --sequence, --structure is required");
  check_pq(spec.p, spec.q);
  if (job.r > 1) {
    if (spec.family != "a") throw UsageError("--r applies to family a only");
    int src = n;
    for (int v = job.r; v > 1; v /= static_cast<int>(spec.p)) src = deflation_source_degree(spec.p, src) - 2;
    require_budget(job, src + 2);
    return nottingham_Nqr(spec.p, spec.q, job.r, n);
  }
  return GradedAlgebra(compile_data(family_pattern(spec, n + 2), n));
}

void emit(const Job& job, std::ostream& out, const std::string& text) {
  if (job.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(job.out);
  if (!f) throw Error("cannot write " + job.out);
  f << text;
}

void emit_json(const Job& job, std::ostream& out, const json& j) { emit(job, out, j.dump(2) + "\n"); }

std::string type_label(const gf::PrimeField& f, const DiamondType& t) {
  switch (t.kind) {
    case DiamondKind::Finite: return std::to_string(f.symmetric(t.mu));
    case DiamondKind::Infinite: return "inf";
    case DiamondKind::Fake1: return "1";
    case DiamondKind::Fake0: return "0";
  }
  return "?";
}

std::string diagram_dot(const GradedAlgebra& L, const DiamondPattern& P, int N) {
  const auto& f = L.field();
  std::ostringstream os;
  os << "digraph thin {\n  // double grading: x has bidegree (1,0), y has (0,1)\n";
  os << "  node [shape=point];\n";
  for (int g = 0; g < L.basis_size() && L.basis(g).degree <= N; ++g) {
    const auto& b = L.basis(g);
    os << "  b" << g << " [pos=\"" << b.bidegree.r << "," << b.bidegree.s << "!\", tooltip=\"" << b.word
       << "\"];\n";
  }
  for (int k = 1; k < N; ++k)
    for (char t : {'x', 'y'}) {
      const auto& m = L.ad_matrix(t, k);
      for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
          if (m(r, c))
            os << "  b" << L.global(k, static_cast<int>(c)) << " -> b" << L.global(k + 1, static_cast<int>(r))
               << " [label=\"" << t << "\"" << (t == 'y' ? ", style=dashed" : "") << "];\n";
    }
  auto diamond = [&](int m, const std::string& label, bool fake) {
    const auto& b = L.basis(L.global(m, 0));
    os << "  diamond_" << m << " [shape=diamond, label=\"" << label << "\", pos=\"" << b.bidegree.r << ","
       << b.bidegree.s << "!\"" << (fake ? ", style=dashed" : "") << "];\n";
  };
  diamond(1, "", false);
  for (const auto& e : P.entries)
    if (e.degree <= N) diamond(e.degree, type_label(f, e.type), e.type.fake());
  os << "}\n";
  return os.str();
}

std::string diagram_txt(const GradedAlgebra& L, const DiamondPattern& P, int N) {
  const auto& f = L.field();
  std::ostringstream os;
  for (int k = 1; k <= N; ++k) {
    os << "L_" << k << "  dim " << L.dim(k) << " ";
    for (int i = 0; i < L.dim(k); ++i) {
      const auto& b = L.basis(L.global(k, i));
      os << " (" << b.bidegree.r << "," << b.bidegree.s << ")";
    }
    if (k == 1) os << "  <> first diamond";
    if (const auto* e = P.at(k)) os << "  <> " << (e->type.fake() ? "fake " : "diamond ") << type_label(f, e->type);
    os << "\n";
  }
  return os.str();
}

int cmd_build(const Job& job, std::ostream& out, bool validate_it) {
  GradedAlgebra L = build_algebra(job, job.N);
  if (!validate_it) {
    emit_json(job, out, io::structure_to_json(L));
    return kOk;
  }
  ValidateOptions opt;
  opt.parallel = !job.serial;
  const auto rep = validate(L, opt);
  json j{{"schema_version", io::kSchemaVersion}, {"kind", "build"}};
  j["report"] = io::report_to_json(rep);
  j["structure"] = io::structure_to_json(L);
  emit_json(job, out, j);
  return rep.passed() ? kOk : kValidationFailure;
}

int cmd_verify(const Job& job, std::ostream& out) {
  static const std::set<std::string> modes{"all", "jacobi", "lemmas", "distance"};
  if (!modes.count(job.check)) throw UsageError("--check must be one of all, jacobi, lemmas, distance");
  GradedAlgebra L = build_algebra(job, job.N);
  json j{{"schema_version", io::kSchemaVersion}, {"kind", "verify"}, {"check", job.check}};
  bool ok = true;
  if (job.check == "all" || job.check == "jacobi") {
    ValidateOptions opt;
    opt.parallel = !job.serial;
    const auto rep = validate(L, opt);
    ok = ok && rep.passed();
    j["validation"] = io::report_to_json(rep);
  }
  if (job.check != "jacobi" && L.q() > 0) {
    auto rep = verify_lemma_suite(L);
    if (job.check == "distance")
      std::erase_if(rep.checks, [](const CheckResult& c) { return c.name != "distances" && c.name != "y_centralizes"; });
    ok = ok && rep.passed();
    j["lemmas"] = io::report_to_json(rep);
  }
  if (job.check == "all" && L.q() > 0 && in_tq2(detect(L).pattern)) {
    const auto rep = verify_leibniz(L, build_D(L), !job.serial);
    ok = ok && rep.passed();
    j["derivation"] = io::report_to_json(rep);
  }
  j["passed"] = ok;
  emit_json(job, out, j);
  return ok ? kOk : kValidationFailure;
}

int cmd_detect(const Job& job, std::ostream& out) {
  GradedAlgebra L = build_algebra(job, job.N);
  const auto rep = detect(L, job.N);
  emit_json(job, out, io::detection_to_json(rep));
  return rep.ok() ? kOk : kValidationFailure;
}

int cmd_roundtrip(const Job& job, std::ostream& out) {
  const int q = job_q(job);
  GradedAlgebra L = build_algebra(job, roundtrip_source_degree(q, job.N) - 2);
  const auto rep = roundtrip_check(L, job.N);
  emit_json(job, out, io::roundtrip_to_json(rep));
  if (rep.pass) return kOk;
  return rep.error.starts_with("compare") ? kValidationFailure : kConstruction;
}

int cmd_deflate(const Job& job, std::ostream& out) {
  const auto p = job.pattern_file.empty() && job.sequence_file.empty() ? family_of(job).p : job.p;
  GradedAlgebra L = build_algebra(job, deflation_source_degree(p, job.N) - 2);
  GradedAlgebra D = deflate(L, job.N);
  ValidateOptions opt;
  opt.parallel = !job.serial;
  const auto rep = validate(D, opt);
  json j{{"schema_version", io::kSchemaVersion}, {"kind", "deflate"}};
  j["pattern"] = io::detection_to_json(detect(D));
  j["regular"] = classify_regularity(D).regular;
  j["report"] = io::report_to_json(rep);
  if (job.format == "json") j["structure"] = io::structure_to_json(D);
  emit_json(job, out, j);
  return rep.passed() ? kOk : kValidationFailure;
}

int cmd_diagram(const Job& job, std::ostream& out) {
  const std::string fmt = job.format.empty() ? "dot" : job.format;
  if (fmt != "dot" && fmt != "txt") throw UsageError("diagram --format must be dot or txt");
  GradedAlgebra L = build_algebra(job, job.N);
  const auto P = detect(L, job.N).pattern;
  emit(job, out, fmt == "dot" ? diagram_dot(L, P, job.N) : diagram_txt(L, P, job.N));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thin graded Lie algebras over prime fields", "thinlie"};
  app.require_subcommand(1);
  Job job;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--family", job.family, "a | b | c | d | e | L1q | L0q | uniqueness | tq2");
    c->add_option("--spec", job.spec_file, "family spec JSON");
    c->add_option("--pattern", job.pattern_file, "pattern JSON");
    c->add_option("--sequence", job.sequence_file, "centralizer sequence JSON (tensor construction)");
    c->add_option("--structure", job.structure_file, "structure JSON from build or export");
    c->add_option("--p", job.p, "characteristic");
    c->add_option("--q", job.q, "second diamond degree (defaults to p)");
    c->add_option("--s", job.s, "exponent for families c, d and uniqueness");
    c->add_option("--r", job.r, "deflation depth for family a: N(q, r)");
    c->add_option("--mu", job.mu, "family b: third diamond type; family d: second type");
    c->add_option("--N", job.N, "degree bound (default 60, or the structure's own)");
    c->add_option("--out", job.out, "output file (default stdout)");
    c->add_option("--format", job.format, "json | dot | txt");
    c->add_option("--check", job.check, "all | jacobi | lemmas | distance");
    c->add_flag("--serial", job.serial, "single-threaded validation");
  };
  const std::vector<std::pair<const char*, const char*>> cmds{
      {"build", "construct and validate; structure JSON with report"},
      {"verify", "validation, lemma suite and derivation checks"},
      {"detect", "detected diamond pattern"},
      {"roundtrip", "L -> M -> T(M) and compare patterns"},
      {"deflate", "deflate the source algebra to degree N"},
      {"diagram", "double-grading diagram (dot or txt)"},
      {"export", "structure JSON without validation"}};
  for (auto [name, help] : cmds) add_common(app.add_subcommand(name, help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  job.command = app.get_subcommands().front()->get_name();

  try {
    job.budget = budget_from_env();
    if (job.N == 0) job.N = job.structure_file.empty() ? 60 : structure_doc(job).at("N").get<int>();
    if (job.N < 1) throw UsageError("--N must be positive");
    const int q = job_q(job);
    if (job.command != "deflate" && job.sequence_file.empty() && job.N < q + 2)
      throw UsageError("--N must be at least q + 2");
    if (job.command == "build") return cmd_build(job, out, true);
    if (job.command == "export") return cmd_build(job, out, false);
    if (job.command == "verify") return cmd_verify(job, out);
    if (job.command == "detect") return cmd_detect(job, out);
    if (job.command == "roundtrip") return cmd_roundtrip(job, out);
    if (job.command == "deflate") return cmd_deflate(job, out);
    return cmd_diagram(job, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const DegreeOverflow& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "construction: " << e.what() << "\n";
    return kConstruction;
  }
}

}  // namespace thinlie::cli
