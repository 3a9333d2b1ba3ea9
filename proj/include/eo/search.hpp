#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eo/eo_comb.hpp"
#include "eo/field.hpp"

namespace eo {

/// Conjunction of curve-level conditions checked on the Hasse-Witt matrix.
struct SearchPredicate {
  std::optional<std::vector<int>> delta;
  std::optional<int> rank_h;
  std::optional<int> vanish_at;  // sigma_power_product(H, m) == 0

  bool empty() const { return !delta && !rank_h && !vanish_at; }
};

/// Exhaustive sweep over the genus-4 normal form y^2 = x^9 + a8 x^8 + ... +
/// a2 x^2 + x with (a2, ..., a8) in F_q^7, in lexicographic wire order.
struct SearchSpec {
  std::uint64_t p = 3;
  std::uint32_t k = 1;
  std::string family = "hyperelliptic-normal-g4";
  SearchPredicate predicate;
  unsigned threads = 1;
  std::string checkpoint_path;       // empty: no checkpointing
  std::uint64_t stop_after_prefixes = 0;  // 0: run to completion; else simulate an interrupt
};

struct SearchHit {
  std::uint64_t tuple_index = 0;           // lexicographic rank of (a2..a8)
  std::vector<std::uint32_t> coeff_wire;   // wire indices of a2..a8
  std::vector<std::uint32_t> f_codes;      // full f, constant term first
  std::vector<int> delta;
  int p_rank = 0;
  int a_number = 0;
};

struct SearchResult {
  std::uint64_t candidates = 0;  // q^7, singular tuples included
  std::uint64_t smooth = 0;      // tuples with squarefree f, predicate evaluated
  std::uint64_t singular = 0;    // tuples skipped: f not squarefree
  std::vector<SearchHit> hits;   // sorted by tuple_index
  std::map<std::vector<int>, std::uint64_t> delta_counts;  // over smooth tuples
  std::uint64_t prefixes_total = 0;
  std::uint64_t prefixes_done = 0;
  bool resumed = false;
  bool interrupted = false;
};

/// Deterministic: the result is independent of the thread count and of any
/// checkpoint/resume split. `stop` aborts at prefix granularity and, with a
/// checkpoint path set, leaves a resumable file behind.
SearchResult run_search(const SearchSpec& spec, const std::atomic<bool>* stop = nullptr);

}  // namespace eo
