#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "eo/error.hpp"

namespace eo {

/// Final type nu = (nu(1), ..., nu(g)) with nu(0) = 0 and steps of 0 or 1.
struct FinalType {
  int g = 0;
  std::vector<int> values;

  /// nu(i) for 0 <= i <= g.
  int at(int i) const { return i == 0 ? 0 : values[static_cast<std::size_t>(i) - 1]; }

  bool operator==(const FinalType& o) const { return g == o.g && values == o.values; }
  bool operator!=(const FinalType& o) const { return !(*this == o); }
};

bool is_valid_final_type(const std::vector<int>& values);
FinalType make_final_type(std::vector<int> values);

/// Strict partition mu_1 > ... > mu_n > 0 (possibly empty).
struct YoungDiagram {
  std::vector<int> parts;

  int mu1() const { return parts.empty() ? 0 : parts.front(); }
  int n_parts() const { return static_cast<int>(parts.size()); }

  bool operator==(const YoungDiagram& o) const { return parts == o.parts; }
  bool operator!=(const YoungDiagram& o) const { return !(*this == o); }
  bool operator<(const YoungDiagram& o) const { return parts < o.parts; }
};

YoungDiagram make_young_diagram(std::vector<int> parts);

/// Hasse-Witt partition: non-increasing positive parts delta_1 >= ... >= delta_n
/// with sum <= ambient_g.
struct HWPartition {
  std::vector<int> parts;
  int ambient_g = 0;

  int sum() const;
  bool operator==(const HWPartition& o) const {
    return parts == o.parts && ambient_g == o.ambient_g;
  }
};

HWPartition make_hw_partition(std::vector<int> parts, int ambient_g);

/// mu_j = #{ i : 1 <= i <= g and nu(i) <= i - j }.
YoungDiagram mu_from_nu(const FinalType& nu);

/// Exact inverse: nu(i) = i - #{ j : mu_j >= g + 1 - i }.
FinalType nu_from_mu(const YoungDiagram& mu, int g);

struct DeltaFromNu {
  HWPartition delta;
  int p_rank = 0;
};

/// Iterate rho_0 = g, rho_{j+1} = nu(rho_j) to the fixpoint f;
/// delta_j = rho_{j-1} - rho_j with trailing zeros dropped.
DeltaFromNu delta_from_nu(const FinalType& nu);

/// a <= b in the Ekedahl-Oort order: b has at most as many parts as a and
/// b_i <= a_i on the common prefix. The empty diagram is the maximum.
bool diagram_leq(const YoungDiagram& a, const YoungDiagram& b);

/// All diagrams with parts <= g below mu in the partial order.
std::vector<YoungDiagram> downset(const YoungDiagram& mu, int g);

struct DiagramStats {
  int codim = 0;
  int p_rank = 0;
  int a_number = 0;
};

DiagramStats diagram_stats(const YoungDiagram& mu, int g);

/// All 2^g final types, ordered by the step vector read as a binary counter.
std::vector<FinalType> enumerate_final_types(int g);

/// Rows delta -> { mu } over the p-rank-zero final types (sum delta = g),
/// keyed in lexicographic part order.
std::map<std::vector<int>, std::set<std::vector<int>>> delta_mu_table(int g);

/// All mu = mu_from_nu(nu) over final types nu with the given delta;
/// a singleton exactly when delta determines mu.
std::vector<YoungDiagram> mu_candidates(const std::vector<int>& delta_parts, int g);

std::string diagram_to_string(const YoungDiagram& mu);

}  // namespace eo
