#include "thinlie/io.hpp"

#include <fstream>

namespace thinlie::io {

namespace {

json matrix_json(const gf::Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

gf::Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols) {
  gf::Matrix m(rows, cols);
  if (j.size() != rows) throw Error("structure: matrix has wrong row count");
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw Error("structure: matrix has wrong column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<Scalar>();
  }
  return m;
}

json header(const char* kind) { return json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

}  // namespace

json structure_to_json(const GradedAlgebra& L, bool brackets) {
  json j = header("structure");
  j["p"] = L.p();
  j["q"] = L.q();
  j["N"] = L.N();
  j["top"] = L.top();
  json comps = json::array();
  for (int k = 1; k <= L.top(); ++k) {
    json words = json::array(), bids = json::array(), parents = json::array();
    for (int i = 0; i < L.dim(k); ++i) {
      const auto& b = L.basis(L.global(k, i));
      words.push_back(b.word);
      bids.push_back({b.bidegree.r, b.bidegree.s});
    }
    comps.push_back({{"degree", k}, {"dim", L.dim(k)}, {"basis_words", words}, {"bidegrees", bids}});
  }
  j["components"] = std::move(comps);
  json ax = json::array(), ay = json::array();
  for (int k = 1; k < L.top(); ++k) {
    ax.push_back({{"degree", k}, {"matrix", matrix_json(L.ad_matrix('x', k))}});
    ay.push_back({{"degree", k}, {"matrix", matrix_json(L.ad_matrix('y', k))}});
  }
  j["ad_x"] = std::move(ax);
  j["ad_y"] = std::move(ay);
  if (brackets) {
    json br = json::array();
    for (int a = 0; a < L.basis_size(); ++a)
      for (int b = a + 1; b < L.basis_size(); ++b) {
        if (L.basis(a).degree + L.basis(b).degree > L.N()) break;
        const auto& e = L.entry(a, b);
        if (e[0] == 0 && e[1] == 0) continue;
        const int d = L.basis(a).degree + L.basis(b).degree;
        json co = json::array();
        for (int i = 0; i < L.dim(d); ++i) co.push_back(e[i]);
        br.push_back({{"i", a}, {"j", b}, {"coeffs", co}});
      }
    j["brackets"] = std::move(br);
  }
  return j;
}

GradedAlgebra structure_from_json(const json& j) {
  AlgebraData d(gf::PrimeField(j.at("p").get<std::uint32_t>()));
  d.q = j.at("q").get<int>();
  d.N = j.at("N").get<int>();
  d.top = j.at("top").get<int>();
  d.dims.assign(d.top + 1, 0);
  for (const auto& c : j.at("components")) d.dims.at(c.at("degree").get<int>()) = c.at("dim").get<int>();
  // parents and letters come back from the words: [parent letter]
  std::vector<std::string> words;
  for (const auto& c : j.at("components"))
    for (const auto& w : c.at("basis_words")) words.push_back(w.get<std::string>());
  for (std::size_t g = 0; g < words.size(); ++g) {
    const auto& w = words[g];
    d.letter.push_back(w.back());
    int parent = -1;
    if (w.size() > 1) {
      const std::string pw = w.substr(0, w.size() - 1);
      for (std::size_t h = 0; h < g; ++h)
        if (words[h] == pw) parent = static_cast<int>(h);
      if (parent < 0) throw Error("structure: word " + w + " has no parent in the basis");
    }
    d.parent.push_back(parent);
  }
  d.ad_x.resize(d.top);
  d.ad_y.resize(d.top);
  for (const auto& e : j.at("ad_x")) {
    const int k = e.at("degree").get<int>();
    d.ad_x.at(k) = matrix_from(e.at("matrix"), d.dims.at(k + 1), d.dims.at(k));
  }
  for (const auto& e : j.at("ad_y")) {
    const int k = e.at("degree").get<int>();
    d.ad_y.at(k) = matrix_from(e.at("matrix"), d.dims.at(k + 1), d.dims.at(k));
  }
  return GradedAlgebra(std::move(d));
}

json pattern_to_json(const DiamondPattern& P) {
  const gf::PrimeField f(P.p);
  json j = header("pattern");
  j["p"] = P.p;
  j["q"] = P.q;
  j["horizon"] = P.horizon;
  auto list = [&](const std::vector<DiamondEntry>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({{"degree", e.degree}, {"type", e.type.str(f)}});
    return a;
  };
  j["entries"] = list(P.entries);
  j["alternates"] = list(P.alternates);
  return j;
}

DiamondPattern pattern_from_json(const json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const int q = j.at("q").get<int>();
    check_pq(p, q);
    const gf::PrimeField f(p);
    std::vector<DiamondEntry> raw;
    for (const auto& e : j.at("entries"))
      raw.push_back({e.at("degree").get<int>(), DiamondType::parse(e.at("type").get<std::string>(), f)});
    if (raw.empty()) throw PatternError("pattern has no entries");
    const int horizon = j.contains("horizon") ? j["horizon"].get<int>() : raw.back().degree + q - 2;
    return normalize(p, q, std::move(raw), horizon);
  } catch (const nlohmann::json::exception& e) {
    throw PatternError(std::string("malformed pattern JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw PatternError(e.what());
  }
}

json detection_to_json(const DetectionReport& r) {
  json j = pattern_to_json(r.pattern);
  j["issues"] = r.issues;
  return j;
}

json family_to_json(const FamilySpec& s) {
  json params{{"p", s.p}, {"q", s.q}, {"s", s.s}};
  if (s.mu) params["mu"] = *s.mu;
  if (!s.sequence.entries.empty()) params["sequence"] = s.sequence.str();
  json j = header("family");
  j["family"] = s.family;
  j["params"] = std::move(params);
  return j;
}

FamilySpec family_from_json(const json& j) {
  try {
    FamilySpec s;
    s.family = j.at("family").get<std::string>();
    const json params = j.value("params", json::object());
    s.p = params.value("p", 7u);
    s.q = params.value("q", static_cast<int>(s.p));
    s.s = params.value("s", 1);
    if (params.contains("mu")) s.mu = params["mu"].get<long>();
    if (params.contains("sequence")) s.sequence = CentralizerSequence::parse(params["sequence"].get<std::string>());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw PatternError(std::string("malformed family JSON: ") + e.what());
  }
}

json sequence_to_json(std::uint32_t p, const CentralizerSequence& s) {
  json j = header("sequence");
  j["p"] = p;
  j["entries"] = s.str();
  return j;
}

std::pair<std::uint32_t, CentralizerSequence> sequence_from_json(const json& j) {
  try {
    return {j.at("p").get<std::uint32_t>(), CentralizerSequence::parse(j.at("entries").get<std::string>())};
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("malformed sequence JSON: ") + e.what());
  }
}

json report_to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"checked", c.checked},
                      {"failures", c.failures},
                      {"first_failure_degree", c.first_failure_degree},
                      {"witnesses", c.witnesses}});
  json j = header("report");
  j["passed"] = r.passed();
  j["checks"] = std::move(checks);
  return j;
}

json roundtrip_to_json(const RoundtripReport& r) {
  json j = header("roundtrip");
  j["stages"] = r.stages;
  j["extracted_sequence"] = r.sequence.str();
  // stages that never ran leave an empty pattern (p = 0)
  j["pattern_L"] = r.pattern_L.p ? pattern_to_json(r.pattern_L) : json(nullptr);
  j["pattern_T"] = r.pattern_T.p ? pattern_to_json(r.pattern_T) : json(nullptr);
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace thinlie::io
