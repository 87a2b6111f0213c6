#pragma once
// Two-dimensional pattern machinery: vertically aligned patterns, the
// zero-duplication collapse and its counting, translate/position index sets
// at the intermediate scale, the admissibility cover check, the exact
// zero-frequency bounds, and the forbidden-position density of tiled
// patterns. Coordinates are (x, y), 1-based, row-major storage by y.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hcs/bigint.hpp"
#include "hcs/language.hpp"
#include "hcs/words.hpp"

namespace hcs {

enum class Alphabet { Base, Duplicated };

struct Pattern2D {
  Alphabet alphabet = Alphabet::Base;
  unsigned long width = 0;
  unsigned long height = 0;
  std::string cells; // cells[(y-1)*width + (x-1)]
  long origin_x = 1; // support origin, carried but not used by the checks
  long origin_y = 1;

  char at(unsigned long x, unsigned long y) const { return cells[(y - 1) * width + (x - 1)]; }
  std::string row(unsigned long y) const {
    return cells.substr((y - 1) * width, width);
  }
  bool square() const { return width == height && width > 0; }
};

// Validates dimensions and symbols for the claimed alphabet.
Pattern2D make_pattern(Alphabet alphabet, unsigned long width, unsigned long height,
                       std::string cells);

// Pattern whose every row equals w; alphabet inferred from the symbols.
Pattern2D verticalize(const DenseWord& w, unsigned long height);

// Cellwise collapse of the two zero variants back to 0.
Pattern2D project(const Pattern2D& p);

// One preimage of p under the collapse, choosing each zero variant by seed.
Pattern2D lift_random(const Pattern2D& p, std::uint64_t seed);

// 2^(number of zero cells): how many duplicated patterns collapse onto p.
Int count_duplications(const Pattern2D& p);

// Translate sets over a square base-alphabet pattern of side n:
//   I   = {u in [0, n-2l']^2 : the 2l' window at u is vertically constant
//          with row in the language of that length}
//   I_A = {u in [0, n-l']^2  : the l' window at u is vertically constant with
//          row equal to an intermediate 1-marked dictionary word}, and I_B
//          likewise for the 2-marked dictionary.
//   J_A = union over u in I_A of u + [1, l']^2 (positions), J_B likewise.
//   K_A = zero positions inside J_A, K_B likewise.
struct IJKReport {
  int k = 0;
  unsigned long n = 0;
  unsigned long ell_prime = 0;
  std::vector<std::pair<unsigned long, unsigned long>> i_set, i_a, i_b; // (ux, uy)
  std::vector<std::uint8_t> j_a, j_b, k_a, k_b;                         // n*n masks
  unsigned long card_i = 0, card_i_a = 0, card_i_b = 0;
  unsigned long card_j_a = 0, card_j_b = 0, card_k_a = 0, card_k_b = 0;
};

IJKReport compute_ijk(const Pattern2D& p, int k, WordCache& cache);
// Reference implementation: direct window loops, no run/prefix tricks.
IJKReport compute_ijk_naive(const Pattern2D& p, int k, WordCache& cache);
bool ijk_reports_equal(const IJKReport& lhs, const IJKReport& rhs);

// J_A and J_B never meet, and every translate of I lands, shifted by
// (l', l'), inside their union.
struct AdmissibilityCover {
  int k = 0;
  bool disjoint = false;
  bool covered = false;
  unsigned long cover_violations = 0;
  bool holds = false;
};
AdmissibilityCover check_admissibility_cover_report(const Pattern2D& p, int k, WordCache& cache);
bool check_admissibility_cover(const Pattern2D& p, int k, WordCache& cache);

// Exact rational zero-frequency bounds at even k >= 2:
//   card(K_B) <= (1 - 1/N_{k-1})^{-1} card(J_B) f_{k-1}^B
//   card(K_A) <= (2 / N'_k)          card(J_A) f_{k-1}^A
// The mirrored check swaps the roles of the two dictionaries at odd k >= 3.
struct FrequencyBound {
  std::string name;
  Rat lhs;
  Rat rhs;
  bool holds = false;
};
struct FrequencyReport {
  int k = 0;
  bool mirrored = false;
  FrequencyBound dominant; // the (1-1/N)^{-1} side
  FrequencyBound other;    // the (2/N') side
  bool all_hold = false;
  IJKReport ijk;
};
FrequencyReport check_frequency_bounds(const Pattern2D& p, int k, WordCache& cache);
FrequencyReport check_frequency_bounds_mirrored(const Pattern2D& p, int k, WordCache& cache);

// Fraction of D-window translates failing the supplied test, on a pattern
// exactly tiled by side-l_k blocks that are vertically constant with globally
// admissible rows. The admissible tiling keeps the fraction at or below
// 2D/l_k when the test only fails across block boundaries.
using WindowTest = std::function<bool(const Pattern2D&)>;
WindowTest admissible_window_test(WordCache& cache);
Rat forbidden_position_density(const Pattern2D& p, int k, unsigned long d, WordCache& cache,
                               const WindowTest& test);

// Deterministic generators for property suites.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);
Pattern2D gen_aligned_window(int k, WordCache& cache, unsigned long n, std::uint64_t seed);
Pattern2D gen_corrupted_window(int k, WordCache& cache, unsigned long n, std::uint64_t seed,
                               unsigned long flips);
Pattern2D gen_random_pattern(unsigned long n, std::uint64_t seed);

}  // namespace hcs
