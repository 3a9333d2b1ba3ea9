#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eo/curves.hpp"
#include "eo/dieudonne.hpp"
#include "eo/eo_comb.hpp"

namespace eo {

using VertexPayload = std::variant<HyperellipticCurve, DieudonneModule, HWPartition>;

struct StableVertex {
  std::string id;
  int genus = 0;
  std::optional<VertexPayload> payload;
};

/// Dual graph of a stable curve: genus-labeled vertices, node edges
/// (self-loops and multi-edges allowed).
struct StableCurveGraph {
  FieldPtr field;
  std::vector<StableVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct GraphShape {
  int n_vertices = 0;
  int n_edges = 0;
  int loops = 0;  // l = m - n + 1
  int genus = 0;  // sum of vertex genera + l
};

struct GraphValidation {
  bool ok = true;
  std::vector<std::string> violations;
  GraphShape shape;
};

/// Connectivity plus stability: every genus-0 vertex has edge incidence >= 3,
/// self-loops counting twice.
GraphValidation validate_stable_graph(const StableCurveGraph& g);

struct Normalization {
  std::vector<StableVertex> components;
  int loops = 0;
  int genus = 0;
};

/// The disjoint smooth components (edges discarded) and the loop count.
Normalization normalize(const StableCurveGraph& g);

struct ComponentNote {
  std::string id;
  int genus = 0;
  std::vector<int> delta;
  int p_rank = 0;
  int a_number = 0;
  std::string source;  // "curve", "module", "delta", "genus0"
};

struct InvariantReport {
  int genus = 0;
  int p_rank = 0;
  int a_number = 0;
  int loops = 0;
  std::vector<int> rho;
  HWPartition delta;
  bool mu_exact = false;
  std::optional<YoungDiagram> mu;
  std::vector<YoungDiagram> mu_candidates;
  std::vector<ComponentNote> components;
};

/// Aggregates component invariants: delta(C) = delta(C~) summed part-wise,
/// rho_i(C) = rho_i(C~) + l, p-rank and a-number additive with the toric
/// shift. mu is exact when every positive-genus component carries a module
/// or has a delta that determines mu; otherwise the candidate set for
/// delta(C) is reported.
InvariantReport stable_invariants(const StableCurveGraph& g);

}  // namespace eo
