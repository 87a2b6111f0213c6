#pragma once
// Suffix-prefix overlap detection between hierarchy words and the four-class
// self-overlap classification, using a linear-time prefix-function matcher
// whose every reported match is re-verified symbol by symbol.

#include <string>
#include <vector>

#include "hcs/bigint.hpp"
#include "hcs/language.hpp"
#include "hcs/words.hpp"

namespace hcs {

// A shift s means the last |u|-s symbols of u coincide with the first |u|-s
// symbols of v (match length m = |u|-s).
struct OverlapReport {
  std::string u_name;
  std::string v_name;
  std::vector<unsigned long> shifts; // ascending
};

// All shifts s with 0 < s < |u|; requires |u| = |v| and nonempty words.
std::vector<unsigned long> overlap_shifts(const DenseWord& u, const DenseWord& v);
std::vector<unsigned long> overlap_shifts(const SuccinctWord& u, const SuccinctWord& v,
                                          unsigned long cap = kDefaultMaterializeCap);

// Reference double-loop matcher for oracle comparisons.
std::vector<unsigned long> overlap_shifts_naive(const DenseWord& u, const DenseWord& v);

// Match lengths m with 1 <= m <= min(|u|,|v|) where suffix(u,m) = prefix(v,m),
// excluding the full coincidence when |u| = |v|; lengths may differ.
std::vector<unsigned long> suffix_prefix_matches(const DenseWord& u, const DenseWord& v);

// Scan every ordered pair of one word from the 1-marked dictionaries (level
// and intermediate) against one from the 2-marked dictionaries.
struct CrossOverlapReport {
  int k = 0;
  std::vector<OverlapReport> pairs;
  bool clean = false; // no pair has any suffix-prefix match
};
CrossOverlapReport cross_overlap_report(int k, WordCache& cache);
bool verify_no_cross_overlap(int k, WordCache& cache);

// One asserted self-overlap class at level k:
//   i   sandwich word vs itself: every shift >= (N_k - 1) l_{k-1}
//   ii  power word vs itself: shift a multiple of l_{k-1}, or match = l_{k-2}
//   iii one-sided filler words vs themselves: no overlaps
//   iv  the two filler forms against each other: matching segment all marker,
//       or match length <= l_{k-1}
// At odd k the roles of the 1-marked and 2-marked words are exchanged.
struct ClassVerdict {
  std::string class_id; // "i", "ii", "iii", "iv"
  std::string pair;     // e.g. "a_2 vs a_2"
  bool holds = false;
  std::vector<unsigned long> shifts;
  std::vector<unsigned long> violations; // shifts outside the allowed family
  std::string note;                      // skipped clauses and similar
};

struct SelfOverlapReport {
  int k = 0;
  bool even = false;
  std::vector<ClassVerdict> classes;
  bool all_hold() const;
};
SelfOverlapReport classify_self_overlaps(int k, WordCache& cache);

}  // namespace hcs
