#pragma once
// Language machinery for the hierarchical subshift: global admissibility via
// dictionary-pair scans, forbidden-word slices via the terminal/initial
// segment characterization, language slices, complexity counts, and the
// reconstruction identity R(n) = n.

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hcs/bigint.hpp"
#include "hcs/params.hpp"
#include "hcs/words.hpp"

namespace hcs {

// Lazily built, memoized level and intermediate words over a fixed schedule,
// plus dense forms bounded by a materialization cap.
class WordCache {
 public:
  explicit WordCache(std::vector<ParamState> states,
                     unsigned long materialize_cap = kDefaultMaterializeCap);

  const std::vector<ParamState>& states() const { return states_; }
  int max_level() const { return static_cast<int>(states_.size()) - 1; }
  unsigned long cap() const { return cap_; }

  const LevelWords& level(int k);
  const IntermediateWords& intermediate(int k);

  // Dense form of any word built over this schedule; memoized by expression.
  const DenseWord& dense(const SuccinctWord& w);

  // The 16 concatenations w1w2 over the level-k dictionary {a, 1^l, b, 2^l}.
  const std::vector<DenseWord>& pair_concats(int k);

  // Least k with l_k >= n; CapacityError when no computed level covers n or
  // the covering level is not materializable.
  int least_level_covering(const Int& n);

 private:
  std::vector<ParamState> states_;
  unsigned long cap_;
  std::map<int, LevelWords> levels_;
  std::map<int, IntermediateWords> intermediates_;
  std::map<std::string, DenseWord> dense_;
  std::map<int, std::vector<DenseWord>> pair_concats_;
};

// True iff w occurs in some concatenation w1w2 of two level-k dictionary
// words, k minimal with l_k >= |w|.
bool globally_admissible(const DenseWord& w, WordCache& cache);

// A length-n word outside the language, tagged with the level k whose scale
// covers n (l_{k-1} < n <= l_k) and the block index p with
// (p-1)l_{k-1} < n <= p l_{k-1}. For n <= l_0 the decomposition is undefined
// and both tags are 0.
struct ForbiddenWordRecord {
  unsigned long n = 0;
  DenseWord word;
  int level_k = 0;
  Int block_p;
};

struct LanguageSlice {
  unsigned long n = 0;
  std::set<DenseWord> words; // lexicographic, 0 < 1 < 2
  unsigned long count = 0;
};

struct SliceStats {
  unsigned long n = 0;
  int level_k = 0;
  Int block_p;
  Int count;         // forbidden words of length n
  Int nodes_visited; // prefix-tree nodes examined
  double seconds = 0.0;
};

using ForbiddenSink = std::function<void(const ForbiddenWordRecord&)>;

// Stream the forbidden words of length n in lexicographic order into sink;
// an empty sink counts without materializing. Candidates come from a prefix
// tree pruned at prefixes that already fail the segment test.
SliceStats forbidden_slice_stream(unsigned long n, WordCache& cache, const ForbiddenSink& sink);

// Materialized slice; refuses to build more than max_records records.
std::vector<ForbiddenWordRecord> forbidden_slice(unsigned long n, WordCache& cache,
                                                 unsigned long max_records = 1ul << 22);

// Slices 1..n_max in order; records flow to sink, per-slice stats returned.
std::vector<SliceStats> enumerate_forbidden(unsigned long n_max, WordCache& cache,
                                            const ForbiddenSink& sink);

// All length-n windows over the 16 level-k dictionary concatenations.
LanguageSlice language_slice_at_level(unsigned long n, int k, WordCache& cache);
LanguageSlice language_slice(unsigned long n, WordCache& cache); // minimal k

struct ComplexityRow {
  unsigned long n = 0;
  unsigned long count = 0;
  double log_count_over_n = 0.0; // natural log
};
std::vector<ComplexityRow> complexity_function(unsigned long n_max, WordCache& cache);

// Every length-(2n+1) word with no forbidden subword (checked incrementally
// against segment-derived window sets) must be globally admissible (checked
// by the independent dictionary-pair scan).
struct ReconstructionCheck {
  unsigned long n = 0;
  Int locally_admissible_count;
  bool holds = false;
  DenseWord counterexample; // empty when holds
};
ReconstructionCheck reconstruction_check(unsigned long n, WordCache& cache);
bool verify_reconstruction(unsigned long n, WordCache& cache);

}  // namespace hcs
