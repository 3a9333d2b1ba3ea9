#include "eo/stable.hpp"

#include <algorithm>
#include <map>

namespace eo {
namespace {

std::map<std::string, std::size_t> vertex_index(const StableCurveGraph& g) {
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (!idx.emplace(g.vertices[i].id, i).second)
      domain_error("DuplicateVertexId", "vertex id repeated: " + g.vertices[i].id);
  }
  return idx;
}

}  // namespace

GraphValidation validate_stable_graph(const StableCurveGraph& g) {
  GraphValidation out;
  const auto idx = vertex_index(g);
  const std::size_t n = g.vertices.size();
  if (n == 0) {
    out.violations.push_back("graph has no vertices");
    out.ok = false;
    return out;
  }
  std::vector<int> incidence(n, 0);
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    const auto a = idx.find(e.first), b = idx.find(e.second);
    if (a == idx.end() || b == idx.end()) {
      out.violations.push_back("edge references an unknown vertex");
      continue;
    }
    incidence[a->second] += 1;
    incidence[b->second] += 1;
    parent[find(a->second)] = find(b->second);
  }
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != find(0)) {
      out.violations.push_back("graph is not connected");
      break;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (g.vertices[i].genus < 0)
      out.violations.push_back("vertex " + g.vertices[i].id + " has negative genus");
    if (g.vertices[i].genus == 0 && incidence[i] < 3)
      out.violations.push_back("genus-0 vertex " + g.vertices[i].id +
                               " has incidence " + std::to_string(incidence[i]) + " < 3");
  }
  out.shape.n_vertices = static_cast<int>(n);
  out.shape.n_edges = static_cast<int>(g.edges.size());
  out.shape.loops = out.shape.n_edges - out.shape.n_vertices + 1;
  out.shape.genus = out.shape.loops;
  for (const auto& v : g.vertices) out.shape.genus += v.genus;
  out.ok = out.violations.empty();
  return out;
}

Normalization normalize(const StableCurveGraph& g) {
  const auto val = validate_stable_graph(g);
  if (!val.ok) {
    std::string msg = "invalid stable-curve graph:";
    for (const auto& v : val.violations) msg += " " + v + ";";
    domain_error("InvalidGraph", msg);
  }
  return {g.vertices, val.shape.loops, val.shape.genus};
}

namespace {

struct ComponentData {
  ComponentNote note;
  std::vector<int> rho;  // extended on demand via stabilized tail
  std::optional<DieudonneModule> module;
  bool mu_determined = false;
};

int rho_at(const std::vector<int>& rho, std::size_t i) {
  return i < rho.size() ? rho[i] : rho.back();
}

std::vector<int> rho_from_delta(const HWPartition& d) {
  std::vector<int> rho{d.ambient_g};
  for (int part : d.parts) rho.push_back(rho.back() - part);
  return rho;
}

ComponentData analyze_vertex(const StableCurveGraph& g, const StableVertex& v) {
  ComponentData c;
  c.note.id = v.id;
  c.note.genus = v.genus;
  if (v.genus == 0) {
    if (v.payload) domain_error("UnexpectedPayload", "genus-0 vertex " + v.id + " carries data");
    c.note.source = "genus0";
    c.rho = {0};
    c.mu_determined = true;
    return c;
  }
  if (!v.payload)
    domain_error("MissingPayload", "positive-genus vertex " + v.id + " carries no data");

  if (const auto* curve = std::get_if<HyperellipticCurve>(&*v.payload)) {
    require_domain(g.field->same_field(curve->field()), "FieldMismatch",
                   "curve payload over a different field");
    require_domain(curve->genus() == v.genus, "GenusMismatch",
                   "curve genus does not match vertex " + v.id);
    const auto inv = hw_partition(hasse_witt(*curve));
    c.note.source = "curve";
    c.note.delta = inv.delta.parts;
    c.note.p_rank = inv.p_rank;
    c.note.a_number = inv.a_number;
    c.rho = inv.rho;
  } else if (const auto* mod = std::get_if<DieudonneModule>(&*v.payload)) {
    require_domain(g.field->same_field(*mod->field), "FieldMismatch",
                   "module payload over a different field");
    require_domain(mod->g == v.genus, "GenusMismatch",
                   "module dimension does not match vertex " + v.id);
    const HWPartition delta = module_delta(*mod);
    c.note.source = "module";
    c.note.delta = delta.parts;
    c.note.p_rank = v.genus - delta.sum();
    c.note.a_number = delta.parts.empty() ? 0 : delta.parts.front();
    c.rho = rho_from_delta(delta);
    c.module = *mod;
    c.mu_determined = true;
  } else {
    const auto& delta_in = std::get<HWPartition>(*v.payload);
    const HWPartition delta = make_hw_partition(delta_in.parts, v.genus);
    c.note.source = "delta";
    c.note.delta = delta.parts;
    c.note.p_rank = v.genus - delta.sum();
    c.note.a_number = delta.parts.empty() ? 0 : delta.parts.front();
    c.rho = rho_from_delta(delta);
  }
  if (!c.mu_determined) {
    // delta determines mu when the candidate set is a singleton (always for
    // genus <= 2)
    c.mu_determined = mu_candidates(c.note.delta, v.genus).size() == 1;
  }
  return c;
}

}  // namespace

InvariantReport stable_invariants(const StableCurveGraph& g) {
  const Normalization norm = normalize(g);
  InvariantReport rep;
  rep.loops = norm.loops;
  rep.genus = norm.genus;

  std::vector<ComponentData> comps;
  comps.reserve(norm.components.size());
  for (const auto& v : norm.components) comps.push_back(analyze_vertex(g, v));

  // delta(C) = delta(C~): componentwise sum of the parts
  std::size_t max_parts = 0;
  for (const auto& c : comps) max_parts = std::max(max_parts, c.note.delta.size());
  std::vector<int> delta_parts(max_parts, 0);
  for (const auto& c : comps)
    for (std::size_t j = 0; j < c.note.delta.size(); ++j) delta_parts[j] += c.note.delta[j];
  rep.delta = make_hw_partition(delta_parts, rep.genus);

  // rho_i(C) = rho_i(C~) + l, listed until the first repeat or zero
  rep.rho.push_back(rep.genus);
  for (std::size_t i = 1;; ++i) {
    int r = norm.loops;
    for (const auto& c : comps) r += rho_at(c.rho, i);
    rep.rho.push_back(r);
    if (r == rep.rho[rep.rho.size() - 2] || r == 0) break;
  }

  rep.p_rank = norm.loops;
  for (const auto& c : comps) rep.p_rank += c.note.p_rank;
  for (const auto& c : comps) rep.a_number += c.note.a_number;
  require_internal(rep.p_rank + rep.delta.sum() == rep.genus, "InvariantMismatch",
                   "p-rank plus sum(delta) != genus");
  require_internal(rep.a_number == (rep.delta.parts.empty() ? 0 : rep.delta.parts.front()),
                   "InvariantMismatch", "a-number != delta_1");

  const bool all_determined =
      std::all_of(comps.begin(), comps.end(), [](const ComponentData& c) {
        return c.mu_determined;
      });
  if (all_determined) {
    std::vector<DieudonneModule> modules;
    if (norm.loops > 0) modules.push_back(ordinary_module(g.field, norm.loops));
    for (const auto& c : comps) {
      if (c.note.genus == 0) continue;
      modules.push_back(c.module ? *c.module
                                 : module_from_delta(g.field, c.note.genus, c.note.delta));
    }
    if (modules.empty()) {
      rep.mu = YoungDiagram{};
    } else {
      rep.mu = mu_from_nu(final_type(direct_sum(modules)));
    }
    rep.mu_exact = true;
  } else {
    rep.mu_candidates = mu_candidates(rep.delta.parts, rep.genus);
    rep.mu_exact = false;
  }

  for (const auto& c : comps) rep.components.push_back(c.note);
  return rep;
}

}  // namespace eo
