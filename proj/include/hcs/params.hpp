#pragma once
// Recursive scale parameters (N'_k, l'_k, beta_k, N_k, l_k, rho_k) with exact
// big-integer arithmetic, the per-level induction inequality suite, and the
// constraint ratio reports C1-C4.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcs/bigint.hpp"

namespace hcs {

// One level of the recursion. N, N', l' are absent at k = 0.
struct ParamState {
  int k = 0;
  Int ell;   // word length l_k
  Int beta;  // inverse temperature beta_k
  Int rho_a; // max zero count over the A dictionary
  Int rho_b; // max zero count over the B dictionary
  std::optional<Int> n_big;     // N_k
  std::optional<Int> n_prime;   // N'_k
  std::optional<Int> ell_prime; // l'_k = N'_k * l_{k-1}

  Rat freq_a() const { return make_rat(rho_a, ell); } // f_k^A = rho_k^A / l_k
  Rat freq_b() const { return make_rat(rho_b, ell); } // f_k^B = rho_k^B / l_k
};

// Toy schedules choose (N_k, N'_k, beta_k) per level; the closed recursion
// chooses them itself.
struct ToyLevel {
  Int n_big;
  Int n_prime;
  Int beta;
};

struct Schedule {
  enum class Mode { Closed, Toy };
  Mode mode = Mode::Closed;
  std::vector<ToyLevel> toy_levels; // level k reads toy_levels[k-1]
  // Closed mode refuses levels beyond this cap by default: level 3 needs
  // 2^(3*l'_3) with l'_3 ~ 2^65568, which no machine can store.
  int closed_cap = 2;

  static Schedule closed(int cap = 2);
  static Schedule toy(std::vector<ToyLevel> levels);
  // Built-in toy schedules: "T1", "T2", "T3" (induction-friendly growth),
  // "G" (flat schedule with small words, sized for 2D pattern scans).
  static Schedule preset(const std::string& name, int levels = 6);
  static std::vector<std::string> preset_names();
};

// (k=0, l=2, beta=0, rho_a=rho_b=1); N, N', l' absent.
ParamState initial_state();

// One recursion step to level prev.k + 1. Closed mode computes all four
// ceiling formulas with the odd-level A/B permutation; toy mode takes
// (N, N', beta) from the schedule and applies the l/rho updates only.
ParamState step(const ParamState& prev, const Schedule& sched);

// States for levels 0..levels (inclusive).
std::vector<ParamState> run_levels(const Schedule& sched, int levels);

// One exact inequality verdict. `evaluable` is false when the level lacks the
// needed neighbor state or the check exceeds integer capacity.
struct InequalityCheck {
  int k = 0;
  int item = 0;
  bool evaluable = false;
  bool holds = false;
  std::string detail;
};

struct RatioRow {
  int k = 0;
  std::string name;
  Rat value;
};

// Five exact per-level inequalities of the scale recursion, plus asymptotic
// trend ratios (reported, never asserted):
//   1: 2k <= N'_k <= 2k*l_{k-1}
//   2: 2^(k*l'_k) <= beta_k <= l_k/k
//   3: N_{k-1} <= N'_k <= N_k
//   4: rho^A >= rho^B for k odd, rho^B >= rho^A for k even
//   5: beta_k <= l_k*beta_{k+1}/(k*2^((k+1)*l_k)) <= beta_{k+1}
// Items 1 and 2 are design properties of the closed recursion; toy schedules
// generally satisfy only 3-5 (item 2 forces tower growth).
struct InductionReport {
  std::vector<InequalityCheck> checks;
  std::vector<RatioRow> ratios;

  // True iff every evaluable check with item in `items` and k <= k_max holds.
  bool all_hold(std::initializer_list<int> items, int k_max) const;
};

InductionReport check_induction(const std::vector<ParamState>& states);

// Constraint ratio report. C4 is an exact rational identity; C1-C3 are
// asymptotic and emitted as ratio sequences with per-parity monotonicity.
struct ConstraintReport {
  struct Row {
    int k = 0;
    bool even = false;
    std::string constraint; // "C1" | "C2" | "C3"
    bool evaluable = false;
    Rat ratio;              // small-side / large-side; << plausible when < 1 and shrinking
    std::string detail;
  };
  struct C4Row {
    int k = 0;
    bool even = false;
    bool holds = false;
    Rat freq_k;   // f_k on the preserved side
    Rat freq_km1; // f_{k-1} on the same side
  };
  struct Monotone {
    std::string constraint;
    bool even = false;
    bool evaluated = false;         // at least two ratios in the class
    bool strictly_decreasing = false;
  };
  std::vector<Row> rows;
  std::vector<C4Row> c4;
  std::vector<Monotone> monotonicity;

  bool c4_all_hold() const;
};

// r_prime supplies R'_k per level for C2; missing levels are marked unevaluable.
ConstraintReport check_constraints_c1_c4(const std::vector<ParamState>& states,
                                         const std::map<int, Int>& r_prime);

}  // namespace hcs
