#include "eo/json_io.hpp"

#include <fstream>
#include <sstream>

namespace eo {

using nlohmann::json;

namespace {

std::uint64_t get_uint(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    parse_error("MissingField", std::string("expected unsigned integer field \"") + key + "\"");
  return j.at(key).get<std::uint64_t>();
}

FieldPtr field_from_json(const json& j) {
  return FiniteField::make(get_uint(j, "p"), get_uint(j, "k"));
}

void check_field_consistency(const FiniteField& f, const json& j) {
  if (j.contains("p") && j.at("p").get<std::uint64_t>() != f.p())
    domain_error("FieldMismatch", "payload p differs from the graph field");
  if (j.contains("k") && j.at("k").get<std::uint64_t>() != f.degree())
    domain_error("FieldMismatch", "payload k differs from the graph field");
}

std::uint32_t residue_from_json(const FiniteField& f, const json& j) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= f.p())
    parse_error("BadElement", "residue must be an integer in [0, p)");
  return j.get<std::uint32_t>();
}

}  // namespace

json element_to_json(const FieldElement& x) {
  const FiniteField& f = x.field();
  if (f.degree() == 1) return x.code();
  return json(x.coeffs());
}

FieldElement element_from_json(const FiniteField& f, const json& j) {
  if (f.degree() == 1) return {&f, residue_from_json(f, j)};
  if (!j.is_array() || j.size() != f.degree())
    parse_error("BadElement", "element of F_{p^k} must be a length-k array");
  std::vector<std::uint32_t> coeffs;
  coeffs.reserve(f.degree());
  for (const auto& c : j) coeffs.push_back(residue_from_json(f, c));
  return f.from_coeffs(coeffs);
}

json matrix_to_json(const MatrixOverF& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixOverF matrix_from_json(const FieldPtr& f, const json& j) {
  if (!j.is_array()) parse_error("BadMatrix", "matrix must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows) {
    if (!j.at(0).is_array()) parse_error("BadMatrix", "matrix rows must be arrays");
    cols = j.at(0).size();
  }
  MatrixOverF m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols)
      parse_error("BadMatrix", "matrix rows have unequal lengths");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(i, c, element_from_json(*f, j.at(i).at(c)));
  }
  return m;
}

HyperellipticCurve curve_from_json(const json& j) {
  const FieldPtr f = field_from_json(j);
  if (j.value("model", "") != "hyperelliptic")
    parse_error("UnknownModel", "curve model must be \"hyperelliptic\"");
  if (!j.contains("f") || !j.at("f").is_array())
    parse_error("MissingField", "curve needs a coefficient array \"f\"");
  std::vector<std::uint32_t> codes;
  for (const auto& c : j.at("f")) codes.push_back(element_from_json(*f, c).code());
  return {f, std::move(codes)};
}

json curve_to_json(const HyperellipticCurve& c) {
  json f_arr = json::array();
  for (std::size_t i = 0; i < c.f_codes().size(); ++i)
    f_arr.push_back(element_to_json(c.f_coeff(i)));
  return json{{"p", c.field().p()},
              {"k", c.field().degree()},
              {"model", "hyperelliptic"},
              {"f", std::move(f_arr)}};
}

DieudonneModule module_from_json(const json& j) {
  const FieldPtr f = field_from_json(j);
  const int g = static_cast<int>(get_uint(j, "g"));
  for (const char* key : {"F", "V", "b"})
    if (!j.contains(key)) parse_error("MissingField", std::string("module needs \"") + key + "\"");
  MatrixOverF f_op = matrix_from_json(f, j.at("F"));
  MatrixOverF v_op = matrix_from_json(f, j.at("V"));
  MatrixOverF gram = matrix_from_json(f, j.at("b"));
  require_domain(f_op.rows() == static_cast<std::size_t>(2 * g), "DimensionMismatch",
                 "matrices must be 2g x 2g");
  return make_module(f, std::move(f_op), std::move(v_op), std::move(gram));
}

json module_to_json(const DieudonneModule& d) {
  return json{{"p", d.field->p()}, {"k", d.field->degree()}, {"g", d.g},
              {"F", matrix_to_json(d.f_op)}, {"V", matrix_to_json(d.v_op)},
              {"b", matrix_to_json(d.gram)}};
}

StableCurveGraph stable_from_json(const json& j) {
  StableCurveGraph g;
  g.field = field_from_json(j);
  if (!j.contains("vertices") || !j.at("vertices").is_array())
    parse_error("MissingField", "stable curve needs a \"vertices\" array");
  for (const auto& vj : j.at("vertices")) {
    StableVertex v;
    if (!vj.contains("id") || !vj.at("id").is_string())
      parse_error("MissingField", "vertex needs a string \"id\"");
    v.id = vj.at("id").get<std::string>();
    v.genus = static_cast<int>(get_uint(vj, "genus"));
    if (vj.contains("payload")) {
      const json& pj = vj.at("payload");
      if (pj.is_array()) {
        std::vector<int> parts = pj.get<std::vector<int>>();
        v.payload = make_hw_partition(std::move(parts), v.genus);
      } else if (pj.is_object() && pj.contains("model")) {
        check_field_consistency(*g.field, pj);
        json cj = pj;
        cj["p"] = g.field->p();
        cj["k"] = g.field->degree();
        v.payload = curve_from_json(cj);
      } else if (pj.is_object() && pj.contains("F")) {
        check_field_consistency(*g.field, pj);
        json mj = pj;
        mj["p"] = g.field->p();
        mj["k"] = g.field->degree();
        if (!mj.contains("g")) mj["g"] = v.genus;
        v.payload = module_from_json(mj);
      } else {
        parse_error("BadPayload", "payload must be a curve, a module, or a delta array");
      }
    }
    g.vertices.push_back(std::move(v));
  }
  if (!j.contains("edges") || !j.at("edges").is_array())
    parse_error("MissingField", "stable curve needs an \"edges\" array");
  for (const auto& ej : j.at("edges")) {
    if (!ej.is_array() || ej.size() != 2 || !ej.at(0).is_string() || !ej.at(1).is_string())
      parse_error("BadEdge", "edges are [\"id\",\"id\"] pairs");
    g.edges.emplace_back(ej.at(0).get<std::string>(), ej.at(1).get<std::string>());
  }
  return g;
}

namespace {

json diagram_list_json(const std::vector<YoungDiagram>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(d.parts);
  return out;
}

}  // namespace

json curve_report(const HyperellipticCurve& c, bool emit_matrix) {
  const MatrixOverF h = hasse_witt(c);
  const auto inv = hw_partition(h);
  json rep{{"p", c.field().p()},      {"k", c.field().degree()}, {"genus", c.genus()},
           {"rho", inv.rho},          {"delta", inv.delta.parts}, {"p_rank", inv.p_rank},
           {"a_number", inv.a_number}};
  const auto cands = mu_candidates(inv.delta.parts, c.genus());
  if (cands.size() == 1) {
    rep["mu"] = cands.front().parts;
    rep["mu_exact"] = true;
  } else {
    rep["mu_candidates"] = diagram_list_json(cands);
    rep["mu_exact"] = false;
  }
  if (emit_matrix) rep["hasse_witt"] = matrix_to_json(h);
  return rep;
}

json module_report(const DieudonneModule& d) {
  const auto val = validate_module(d);
  if (!val.ok) {
    domain_error("InvalidModule", [&] {
      std::string msg = "module axioms fail:";
      for (const auto& v : val.violations) msg += " " + v + ";";
      return msg;
    }());
  }
  const FinalType nu = final_type(d);
  const HWPartition delta = module_delta(d);
  const YoungDiagram mu = mu_from_nu(nu);
  const auto stats = diagram_stats(mu, d.g);
  return json{{"p", d.field->p()},     {"k", d.field->degree()}, {"g", d.g},
              {"valid", true},         {"nu", nu.values},        {"mu", mu.parts},
              {"delta", delta.parts},  {"p_rank", stats.p_rank}, {"a_number", stats.a_number}};
}

json stable_report(const InvariantReport& rep, const StableCurveGraph& g) {
  json comps = json::array();
  for (const auto& c : rep.components)
    comps.push_back(json{{"id", c.id},
                         {"genus", c.genus},
                         {"delta", c.delta},
                         {"p_rank", c.p_rank},
                         {"a_number", c.a_number},
                         {"source", c.source}});
  json out{{"p", g.field->p()},     {"k", g.field->degree()},
           {"genus", rep.genus},    {"loops", rep.loops},
           {"n_vertices", g.vertices.size()}, {"n_edges", g.edges.size()},
           {"rho", rep.rho},        {"delta", rep.delta.parts},
           {"p_rank", rep.p_rank},  {"a_number", rep.a_number},
           {"mu_exact", rep.mu_exact}, {"components", std::move(comps)}};
  if (rep.mu_exact)
    out["mu"] = rep.mu->parts;
  else
    out["mu_candidates"] = diagram_list_json(rep.mu_candidates);
  return out;
}

json enumerate_report(int g, const std::optional<std::vector<int>>& delta_filter) {
  json out = json::array();
  for (const auto& nu : enumerate_final_types(g)) {
    const auto d = delta_from_nu(nu);
    if (delta_filter && d.delta.parts != *delta_filter) continue;
    const YoungDiagram mu = mu_from_nu(nu);
    const auto stats = diagram_stats(mu, g);
    out.push_back(json{{"nu", nu.values},
                       {"mu", mu.parts},
                       {"delta", d.delta.parts},
                       {"p_rank", d.p_rank},
                       {"a_number", stats.a_number},
                       {"codim", stats.codim}});
  }
  return out;
}

json table_report(int g) {
  json rows = json::array();
  for (const auto& [delta, mus] : delta_mu_table(g)) {
    json mu_arr = json::array();
    for (const auto& mu : mus) mu_arr.push_back(mu);
    rows.push_back(json{{"delta", delta}, {"mu", std::move(mu_arr)}});
  }
  return json{{"g", g}, {"rows", std::move(rows)}};
}

json search_report(const SearchSpec& spec, const SearchResult& r) {
  const FieldPtr field = FiniteField::make(spec.p, spec.k);
  json pred = json::object();
  if (spec.predicate.delta) pred["delta"] = *spec.predicate.delta;
  if (spec.predicate.rank_h) pred["rank_h"] = *spec.predicate.rank_h;
  if (spec.predicate.vanish_at) pred["vanish_at"] = *spec.predicate.vanish_at;
  json hits = json::array();
  for (const auto& h : r.hits) {
    json coeffs = json::array();
    json f_arr = json::array();
    for (std::uint32_t w : h.coeff_wire)
      coeffs.push_back(element_to_json(field->element_at_wire_index(w)));
    for (std::uint32_t c : h.f_codes) f_arr.push_back(element_to_json(field->element(c)));
    hits.push_back(json{{"a", std::move(coeffs)},
                        {"f", std::move(f_arr)},
                        {"delta", h.delta},
                        {"p_rank", h.p_rank},
                        {"a_number", h.a_number}});
  }
  json counts = json::object();
  for (const auto& [parts, count] : r.delta_counts) {
    std::string key;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) key += ",";
      key += std::to_string(parts[i]);
    }
    counts[key] = count;
  }
  return json{{"p", spec.p},
              {"k", spec.k},
              {"family", spec.family},
              {"predicate", std::move(pred)},
              {"threads", spec.threads},
              {"candidates", r.candidates},
              {"smooth", r.smooth},
              {"singular", r.singular},
              {"hits", std::move(hits)},
              {"delta_counts", std::move(counts)},
              {"prefixes_total", r.prefixes_total},
              {"prefixes_done", r.prefixes_done},
              {"resumed", r.resumed},
              {"interrupted", r.interrupted}};
}

namespace {

std::string join_ints(const json& arr, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr.at(i).dump();
  }
  return s;
}

std::string mu_or_candidates(const json& rep) {
  if (rep.contains("mu")) return "mu = " + rep.at("mu").dump();
  std::string s = "mu in { ";
  const auto& cands = rep.at("mu_candidates");
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (i) s += ", ";
    s += cands.at(i).dump();
  }
  return s + " } (delta does not determine mu)";
}

}  // namespace

std::string render_curve_text(const json& rep) {
  std::ostringstream os;
  os << "hyperelliptic curve over F_" << rep.at("p").get<std::uint64_t>();
  if (rep.at("k").get<std::uint64_t>() > 1) os << "^" << rep.at("k").get<std::uint64_t>();
  os << ", genus " << rep.at("genus") << "\n";
  os << "  rho      = (" << join_ints(rep.at("rho"), ", ") << ")\n";
  os << "  delta    = " << rep.at("delta").dump() << "\n";
  os << "  p-rank   = " << rep.at("p_rank") << "\n";
  os << "  a-number = " << rep.at("a_number") << "\n";
  os << "  " << mu_or_candidates(rep) << "\n";
  if (rep.contains("hasse_witt")) {
    os << "  Hasse-Witt matrix:\n";
    for (const auto& row : rep.at("hasse_witt")) os << "    " << row.dump() << "\n";
  }
  return os.str();
}

std::string render_module_text(const json& rep) {
  std::ostringstream os;
  os << "Dieudonne module over F_" << rep.at("p").get<std::uint64_t>();
  if (rep.at("k").get<std::uint64_t>() > 1) os << "^" << rep.at("k").get<std::uint64_t>();
  os << ", g = " << rep.at("g") << "\n";
  os << "  nu       = (" << join_ints(rep.at("nu"), ", ") << ")\n";
  os << "  mu       = " << rep.at("mu").dump() << "\n";
  os << "  delta    = " << rep.at("delta").dump() << "\n";
  os << "  p-rank   = " << rep.at("p_rank") << "\n";
  os << "  a-number = " << rep.at("a_number") << "\n";
  return os.str();
}

std::string render_stable_text(const json& rep) {
  std::ostringstream os;
  os << "stable curve: genus " << rep.at("genus") << ", " << rep.at("n_vertices")
     << " components, " << rep.at("n_edges") << " nodes, " << rep.at("loops") << " loops\n";
  os << "  rho      = (" << join_ints(rep.at("rho"), ", ") << ")\n";
  os << "  delta    = " << rep.at("delta").dump() << "\n";
  os << "  p-rank   = " << rep.at("p_rank") << "\n";
  os << "  a-number = " << rep.at("a_number") << "\n";
  os << "  " << mu_or_candidates(rep) << "\n";
  for (const auto& c : rep.at("components"))
    os << "  component " << c.at("id").get<std::string>() << ": genus " << c.at("genus")
       << ", delta " << c.at("delta").dump() << ", p-rank " << c.at("p_rank") << ", a-number "
       << c.at("a_number") << " (" << c.at("source").get<std::string>() << ")\n";
  return os.str();
}

std::string render_enumerate_text(const json& rep) {
  std::ostringstream os;
  for (const auto& row : rep)
    os << "nu=(" << join_ints(row.at("nu"), ",") << ") mu=" << row.at("mu").dump()
       << " delta=" << row.at("delta").dump() << " p_rank=" << row.at("p_rank")
       << " a=" << row.at("a_number") << " codim=" << row.at("codim") << "\n";
  return os.str();
}

std::string render_table_text(const json& rep) {
  std::ostringstream os;
  os << "delta | mu (g = " << rep.at("g") << ", p-rank 0)\n";
  for (const auto& row : rep.at("rows")) {
    os << join_ints(row.at("delta"), ",") << " | ";
    const auto& mus = row.at("mu");
    for (std::size_t i = 0; i < mus.size(); ++i) {
      if (i) os << " or ";
      os << mus.at(i).dump();
    }
    os << "\n";
  }
  return os.str();
}

std::string render_search_text(const json& rep) {
  std::ostringstream os;
  os << "search " << rep.at("family").get<std::string>() << " over F_"
     << rep.at("p").get<std::uint64_t>();
  if (rep.at("k").get<std::uint64_t>() > 1) os << "^" << rep.at("k").get<std::uint64_t>();
  os << ": " << rep.at("candidates") << " candidates, " << rep.at("smooth") << " smooth, "
     << rep.at("singular") << " singular\n";
  if (rep.at("interrupted").get<bool>())
    os << "  interrupted after " << rep.at("prefixes_done") << "/" << rep.at("prefixes_total")
       << " prefixes\n";
  os << "  hits: " << rep.at("hits").size() << "\n";
  for (const auto& h : rep.at("hits"))
    os << "    a = " << h.at("a").dump() << ", delta " << h.at("delta").dump() << ", p-rank "
       << h.at("p_rank") << "\n";
  os << "  delta counts:\n";
  for (const auto& [key, count] : rep.at("delta_counts").items())
    os << "    [" << key << "]: " << count.get<std::uint64_t>() << "\n";
  return os.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) parse_error("FileNotFound", "cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const nlohmann::json::exception& e) {
    parse_error("BadJson", e.what());
  }
}

}  // namespace eo
