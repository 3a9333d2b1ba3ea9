#include "eo/eo_comb.hpp"

#include <algorithm>

namespace eo {

namespace {
constexpr int kMaxEnumG = 20;
}

bool is_valid_final_type(const std::vector<int>& values) {
  int prev = 0;
  for (int v : values) {
    if (v != prev && v != prev + 1) return false;
    prev = v;
  }
  return true;
}

FinalType make_final_type(std::vector<int> values) {
  if (!is_valid_final_type(values))
    domain_error("InvalidFinalType", "steps of a final type must be 0 or 1");
  FinalType nu;
  nu.g = static_cast<int>(values.size());
  nu.values = std::move(values);
  return nu;
}

YoungDiagram make_young_diagram(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) domain_error("InvalidDiagram", "parts must be positive");
    if (i && parts[i] >= parts[i - 1])
      domain_error("InvalidDiagram", "parts must strictly decrease");
  }
  return YoungDiagram{std::move(parts)};
}

int HWPartition::sum() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

HWPartition make_hw_partition(std::vector<int> parts, int ambient_g) {
  int s = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) domain_error("InvalidPartition", "parts must be positive");
    if (i && parts[i] > parts[i - 1])
      domain_error("InvalidPartition", "parts must be non-increasing");
    s += parts[i];
  }
  if (s > ambient_g) domain_error("DeltaExceedsG", "partition sum exceeds the genus");
  return HWPartition{std::move(parts), ambient_g};
}

YoungDiagram mu_from_nu(const FinalType& nu) {
  std::vector<int> parts;
  for (int j = 1;; ++j) {
    int count = 0;
    for (int i = 1; i <= nu.g; ++i)
      if (nu.at(i) <= i - j) ++count;
    if (count == 0) break;
    parts.push_back(count);
  }
  return make_young_diagram(std::move(parts));
}

FinalType nu_from_mu(const YoungDiagram& mu, int g) {
  if (mu.mu1() > g) domain_error("PartExceedsG", "mu_1 exceeds g");
  std::vector<int> values(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) {
    int count = 0;
    for (int part : mu.parts)
      if (part >= g + 1 - i) ++count;
    values[static_cast<std::size_t>(i) - 1] = i - count;
  }
  return make_final_type(std::move(values));
}

DeltaFromNu delta_from_nu(const FinalType& nu) {
  if (!is_valid_final_type(nu.values))
    domain_error("InvalidFinalType", "steps of a final type must be 0 or 1");
  std::vector<int> parts;
  int rho = nu.g;
  for (;;) {
    const int next = nu.at(rho);
    if (next == rho) break;
    parts.push_back(rho - next);
    rho = next;
  }
  return {make_hw_partition(std::move(parts), nu.g), rho};
}

bool diagram_leq(const YoungDiagram& a, const YoungDiagram& b) {
  // b >= a iff b has fewer-or-equal parts and b_i <= a_i on them.
  if (b.parts.size() > a.parts.size()) return false;
  for (std::size_t i = 0; i < b.parts.size(); ++i)
    if (b.parts[i] > a.parts[i]) return false;
  return true;
}

namespace {
// All strict partitions with parts <= g: subsets of {1, ..., g} listed in
// decreasing part order, enumerated by bitmask.
std::vector<YoungDiagram> all_strict_partitions(int g) {
  std::vector<YoungDiagram> out;
  const std::uint64_t total = 1ull << g;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<int> parts;
    for (int v = g; v >= 1; --v)
      if (mask >> (v - 1) & 1) parts.push_back(v);
    out.push_back(YoungDiagram{std::move(parts)});
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

std::vector<YoungDiagram> downset(const YoungDiagram& mu, int g) {
  if (mu.mu1() > g) domain_error("PartExceedsG", "mu_1 exceeds g");
  if (g > kMaxEnumG) domain_error("GTooLarge", "g exceeds the enumeration bound");
  std::vector<YoungDiagram> out;
  for (auto& cand : all_strict_partitions(g))
    if (diagram_leq(cand, mu)) out.push_back(cand);
  return out;
}

DiagramStats diagram_stats(const YoungDiagram& mu, int g) {
  if (mu.mu1() > g) domain_error("PartExceedsG", "mu_1 exceeds g");
  DiagramStats s;
  for (int part : mu.parts) s.codim += part;
  s.p_rank = g - mu.mu1();
  s.a_number = mu.n_parts();
  return s;
}

std::vector<FinalType> enumerate_final_types(int g) {
  if (g < 1) domain_error("InvalidGenus", "g must be positive");
  if (g > kMaxEnumG) domain_error("GTooLarge", "g exceeds the enumeration bound");
  std::vector<FinalType> out;
  out.reserve(1ull << g);
  for (std::uint64_t mask = 0; mask < (1ull << g); ++mask) {
    std::vector<int> values(static_cast<std::size_t>(g));
    int v = 0;
    for (int i = 0; i < g; ++i) {
      v += static_cast<int>(mask >> i & 1);
      values[static_cast<std::size_t>(i)] = v;
    }
    out.push_back(FinalType{g, std::move(values)});
  }
  return out;
}

std::map<std::vector<int>, std::set<std::vector<int>>> delta_mu_table(int g) {
  std::map<std::vector<int>, std::set<std::vector<int>>> table;
  for (const auto& nu : enumerate_final_types(g)) {
    const auto d = delta_from_nu(nu);
    if (d.p_rank != 0) continue;
    table[d.delta.parts].insert(mu_from_nu(nu).parts);
  }
  return table;
}

std::vector<YoungDiagram> mu_candidates(const std::vector<int>& delta_parts, int g) {
  const HWPartition delta = make_hw_partition(delta_parts, g);
  std::set<YoungDiagram> found;
  for (const auto& nu : enumerate_final_types(g)) {
    const auto d = delta_from_nu(nu);
    if (d.delta.parts == delta.parts) found.insert(mu_from_nu(nu));
  }
  return {found.begin(), found.end()};
}

std::string diagram_to_string(const YoungDiagram& mu) {
  std::string s = "[";
  for (std::size_t i = 0; i < mu.parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu.parts[i]);
  }
  return s + "]";
}

}  // namespace eo
