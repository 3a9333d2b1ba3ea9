#include "eo/search.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "eo/curves.hpp"
#include "eo/semilinear.hpp"

namespace eo {
namespace {

using nlohmann::json;

constexpr std::size_t kFreeCoeffs = 7;   // a2..a8
constexpr std::size_t kPrefixCoeffs = 2;  // checkpoint granularity: (a2, a3)

json predicate_to_json(const SearchPredicate& p) {
  json j = json::object();
  if (p.delta) j["delta"] = *p.delta;
  if (p.rank_h) j["rank_h"] = *p.rank_h;
  if (p.vanish_at) j["vanish_at"] = *p.vanish_at;
  return j;
}

struct PrefixTally {
  std::uint64_t smooth = 0;
  std::uint64_t singular = 0;
  std::vector<SearchHit> hits;
  std::map<std::vector<int>, std::uint64_t> delta_counts;
};

json hit_to_json(const SearchHit& h) {
  return json{{"tuple_index", h.tuple_index}, {"coeff_wire", h.coeff_wire},
              {"f_codes", h.f_codes},         {"delta", h.delta},
              {"p_rank", h.p_rank},           {"a_number", h.a_number}};
}

SearchHit hit_from_json(const json& j) {
  SearchHit h;
  h.tuple_index = j.at("tuple_index").get<std::uint64_t>();
  h.coeff_wire = j.at("coeff_wire").get<std::vector<std::uint32_t>>();
  h.f_codes = j.at("f_codes").get<std::vector<std::uint32_t>>();
  h.delta = j.at("delta").get<std::vector<int>>();
  h.p_rank = j.at("p_rank").get<int>();
  h.a_number = j.at("a_number").get<int>();
  return h;
}

class CheckpointFile {
 public:
  CheckpointFile(std::string path, const SearchSpec& spec) : path_(std::move(path)) {
    header_ = json{{"family", spec.family},
                   {"p", spec.p},
                   {"k", spec.k},
                   {"predicate", predicate_to_json(spec.predicate)}};
  }

  // Loads completed prefixes and their merged tallies; throws on a spec
  // mismatch, ignores a missing file.
  bool load(std::set<std::uint64_t>& completed, PrefixTally& merged) {
    std::ifstream in(path_);
    if (!in.good()) return false;
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      parse_error("CheckpointCorrupt", e.what());
    }
    if (j.value("family", "") != header_["family"] || j.value("p", 0u) != header_["p"] ||
        j.value("k", 0u) != header_["k"] || j.value("predicate", json()) != header_["predicate"])
      domain_error("CheckpointMismatch", "checkpoint was written for a different search");
    for (const auto& p : j.at("completed")) completed.insert(p.get<std::uint64_t>());
    merged.smooth = j.at("smooth").get<std::uint64_t>();
    merged.singular = j.at("singular").get<std::uint64_t>();
    for (const auto& h : j.at("hits")) merged.hits.push_back(hit_from_json(h));
    for (const auto& [key, count] : j.at("delta_counts").items()) {
      std::vector<int> parts;
      if (!key.empty()) {
        std::size_t pos = 0;
        while (pos < key.size()) {
          std::size_t next = key.find(',', pos);
          if (next == std::string::npos) next = key.size();
          parts.push_back(std::stoi(key.substr(pos, next - pos)));
          pos = next + 1;
        }
      }
      merged.delta_counts[parts] = count.get<std::uint64_t>();
    }
    return true;
  }

  void save(const std::set<std::uint64_t>& completed, const PrefixTally& merged) {
    json j = header_;
    j["completed"] = completed;
    j["smooth"] = merged.smooth;
    j["singular"] = merged.singular;
    json hits = json::array();
    for (const auto& h : merged.hits) hits.push_back(hit_to_json(h));
    j["hits"] = std::move(hits);
    json counts = json::object();
    for (const auto& [parts, count] : merged.delta_counts) {
      std::string key;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) key += ",";
        key += std::to_string(parts[i]);
      }
      counts[key] = count;
    }
    j["delta_counts"] = std::move(counts);
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << j.dump();
    }
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::string path_;
  json header_;
};

void merge_tally(PrefixTally& into, const PrefixTally& from) {
  into.smooth += from.smooth;
  into.singular += from.singular;
  into.hits.insert(into.hits.end(), from.hits.begin(), from.hits.end());
  for (const auto& [k, v] : from.delta_counts) into.delta_counts[k] += v;
}

}  // namespace

SearchResult run_search(const SearchSpec& spec, const std::atomic<bool>* stop) {
  if (spec.family != "hyperelliptic-normal-g4")
    domain_error("UnsupportedFamily", "unknown search family: " + spec.family);
  if (spec.p == 2) domain_error("EvenCharacteristic", "the normal form needs odd p");
  if (spec.predicate.empty()) domain_error("EmptyPredicate", "search needs a predicate");

  const FieldPtr field = FiniteField::make(spec.p, spec.k);
  const std::uint64_t q = field->size();
  std::uint64_t q5 = 1, q2 = 1;
  for (int i = 0; i < 5; ++i) q5 *= q;
  for (int i = 0; i < 2; ++i) q2 *= q;

  SearchResult result;
  result.candidates = q5 * q2;
  result.prefixes_total = q2;

  std::set<std::uint64_t> completed;
  PrefixTally merged;
  std::optional<CheckpointFile> ckpt;
  if (!spec.checkpoint_path.empty()) {
    ckpt.emplace(spec.checkpoint_path, spec);
    result.resumed = ckpt->load(completed, merged);
  }

  // wire-ordered element codes, shared read-only by the workers
  std::vector<std::uint32_t> wire_codes(q);
  for (std::uint64_t n = 0; n < q; ++n)
    wire_codes[n] = field->element_at_wire_index(static_cast<std::uint32_t>(n)).code();

  std::mutex mu;
  std::atomic<std::uint64_t> next_prefix{0};
  std::atomic<std::uint64_t> done_count{static_cast<std::uint64_t>(completed.size())};
  std::atomic<bool> halted{false};

  auto worker = [&]() {
    std::vector<std::uint32_t> f_codes(10, 0);
    f_codes[1] = 1;  // x
    f_codes[9] = 1;  // x^9
    for (;;) {
      if (halted.load(std::memory_order_relaxed)) return;
      const std::uint64_t prefix = next_prefix.fetch_add(1);
      if (prefix >= q2) return;
      {
        std::lock_guard<std::mutex> lk(mu);
        if (completed.count(prefix)) continue;
      }
      PrefixTally tally;
      const std::uint64_t a2 = prefix / q, a3 = prefix % q;
      for (std::uint64_t inner = 0; inner < q5; ++inner) {
        if ((inner & 1023) == 0 && stop && stop->load(std::memory_order_relaxed)) {
          halted.store(true, std::memory_order_relaxed);
          return;  // abandon the open prefix; completed ones are checkpointed
        }
        std::uint64_t rest = inner;
        std::uint32_t wires[kFreeCoeffs];
        wires[0] = static_cast<std::uint32_t>(a2);
        wires[1] = static_cast<std::uint32_t>(a3);
        for (std::size_t t = kFreeCoeffs; t-- > kPrefixCoeffs;) {
          wires[t] = static_cast<std::uint32_t>(rest % q);
          rest /= q;
        }
        for (std::size_t t = 0; t < kFreeCoeffs; ++t) f_codes[2 + t] = wire_codes[wires[t]];

        if (!poly_is_squarefree(*field, f_codes)) {
          tally.singular += 1;
          continue;
        }
        tally.smooth += 1;
        const HyperellipticCurve curve(field, f_codes);
        const MatrixOverF h = hasse_witt(curve);
        const auto inv = hw_partition(h);
        tally.delta_counts[inv.delta.parts] += 1;

        bool match = true;
        if (spec.predicate.delta && inv.delta.parts != *spec.predicate.delta) match = false;
        if (match && spec.predicate.rank_h &&
            inv.rho.size() > 1 && inv.rho[1] != *spec.predicate.rank_h)
          match = false;
        if (match && spec.predicate.vanish_at &&
            !sigma_power_product(h, static_cast<std::size_t>(*spec.predicate.vanish_at)).is_zero())
          match = false;
        if (match) {
          SearchHit hit;
          hit.tuple_index = prefix * q5 + inner;
          hit.coeff_wire.assign(wires, wires + kFreeCoeffs);
          hit.f_codes = f_codes;
          hit.delta = inv.delta.parts;
          hit.p_rank = inv.p_rank;
          hit.a_number = inv.a_number;
          tally.hits.push_back(std::move(hit));
        }
      }
      {
        std::lock_guard<std::mutex> lk(mu);
        merge_tally(merged, tally);
        completed.insert(prefix);
        const std::uint64_t done = done_count.fetch_add(1) + 1;
        if (ckpt) ckpt->save(completed, merged);
        if (spec.stop_after_prefixes && done >= spec.stop_after_prefixes) {
          halted.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  };

  const unsigned nthreads = std::max(1u, spec.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  result.prefixes_done = completed.size();
  result.interrupted = result.prefixes_done < result.prefixes_total;
  result.smooth = merged.smooth;
  result.singular = merged.singular;
  result.delta_counts = std::move(merged.delta_counts);
  result.hits = std::move(merged.hits);
  std::sort(result.hits.begin(), result.hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.tuple_index < b.tuple_index; });
  if (result.interrupted && ckpt) {
    // checkpoint already persisted after each completed prefix
  }
  return result;
}

}  // namespace eo
