#pragma once
// Grammar-compressed hierarchy words with random access, zero counting, and
// bounded materialization. Words live over the base alphabet {0,1,2}; the
// duplicated alphabet encodes the two zero variants as '3' and '4'.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcs/bigint.hpp"
#include "hcs/params.hpp"

namespace hcs {

// Materialized words are plain strings over '0'..'4'.
using DenseWord = std::string;

inline bool is_base_symbol(char c) { return c == '0' || c == '1' || c == '2'; }
inline bool is_duplicated_symbol(char c) { return c == '1' || c == '2' || c == '3' || c == '4'; }

// Collapse map: both zero variants back to '0'; other symbols fixed.
inline char collapse_symbol(char c) { return (c == '3' || c == '4') ? '0' : c; }

inline constexpr unsigned long kDefaultMaterializeCap = 1ul << 24;

// Immutable run/concat/power expression with cached length and zero count.
// Subtrees are shared; levels reuse their predecessors.
class SuccinctWord {
 public:
  static SuccinctWord run(char sym, const Int& count);
  static SuccinctWord concat(std::vector<SuccinctWord> parts);
  static SuccinctWord power(const SuccinctWord& base, const Int& exponent);

  const Int& length() const;
  const Int& zeros() const; // occurrences of '0'

  // 1-based random access in time proportional to expression depth.
  char letter_at(const Int& i) const;

  // Symbols at positions lo..hi inclusive (1-based); empty when lo > hi.
  DenseWord materialize(const Int& lo, const Int& hi,
                        unsigned long cap = kDefaultMaterializeCap) const;
  DenseWord materialize_all(unsigned long cap = kDefaultMaterializeCap) const;

  // Initial / terminal segments of the given length.
  DenseWord head(const Int& m, unsigned long cap = kDefaultMaterializeCap) const;
  DenseWord tail(const Int& m, unsigned long cap = kDefaultMaterializeCap) const;

  // Canonical expression text: run(0,1) | cat(x,y,...) | pow(base,exp).
  std::string serialize() const;

  struct Node; // opaque expression node

 private:
  using NodePtr = std::shared_ptr<const Node>;
  explicit SuccinctWord(NodePtr n) : n_(std::move(n)) {}
  NodePtr n_;
};

// The two level-k dictionary words plus the constant words of length l_k.
struct LevelWords {
  SuccinctWord a;    // zero-one word
  SuccinctWord b;    // zero-two word
  SuccinctWord ones; // 1^{l_k}
  SuccinctWord twos; // 2^{l_k}
};

// Intermediate-scale words of length l'_k. The doubled form sits on the side
// whose level word is a power at this parity: a-side when k is even, b-side
// when k is odd.
struct IntermediateWords {
  SuccinctWord a_prime;
  SuccinctWord b_prime;
  SuccinctWord ones; // 1^{l'_k}
  SuccinctWord twos; // 2^{l'_k}
  std::optional<SuccinctWord> a_dprime; // present iff k even
  std::optional<SuccinctWord> b_dprime; // present iff k odd
};

// states must cover levels 0..k (as produced by run_levels).
LevelWords build_level(int k, const std::vector<ParamState>& states);
IntermediateWords build_intermediate(int k, const std::vector<ParamState>& states);

}  // namespace hcs
