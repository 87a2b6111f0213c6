#include "hcs/params.hpp"

#include <algorithm>
#include <sstream>

namespace hcs {
namespace {

// Exponent cap for the induction checks' 2^(k*l'_k) probes; chosen so the
// largest built-in toy level (k=5 of T3) stays evaluable.
constexpr unsigned long kCheckBitCap = 1ul << 26;

ParamState closed_step(const ParamState& prev, int cap) {
  const int k = prev.k + 1;
  if (k > cap)
    throw CapacityError("closed recursion level " + std::to_string(k) +
                        " exceeds cap " + std::to_string(cap) +
                        "; raise the cap only if you accept tower-size integers");
  const bool even = (k % 2 == 0);
  // The odd case permutes the roles of A and B in every formula.
  const Int& ra = even ? prev.rho_a : prev.rho_b;
  const Int& rb = even ? prev.rho_b : prev.rho_a;

  ParamState s;
  s.k = k;
  const Int n_prime = ceil_div(2 * k * ra, rb);
  const Int ell_prime = n_prime * prev.ell;
  const Int beta = ceil_div(prev.ell * prev.ell * pow2(Int(k) * ell_prime), rb * rb);
  const Int n_big = n_prime * ceil_div(k * beta, n_prime * rb);
  s.n_prime = n_prime;
  s.ell_prime = ell_prime;
  s.beta = beta;
  s.n_big = n_big;
  s.ell = n_big * prev.ell;
  const Int ra_next = 2 * ra;
  const Int rb_next = n_big * rb;
  s.rho_a = even ? ra_next : rb_next;
  s.rho_b = even ? rb_next : ra_next;
  return s;
}

ParamState toy_step(const ParamState& prev, const ToyLevel& lvl) {
  const int k = prev.k + 1;
  std::ostringstream at;
  at << "toy level k=" << k << ": ";
  if (lvl.n_prime < 2)
    throw ConstraintError(at.str() + "N'_k >= 2 violated (N'_k = " + lvl.n_prime.get_str() + ")");
  if (lvl.n_big < 4)
    throw ConstraintError(at.str() + "N_k >= 4 violated (N_k = " + lvl.n_big.get_str() + ")");
  if (lvl.n_big % lvl.n_prime != 0)
    throw ConstraintError(at.str() + "N'_k | N_k violated (" + lvl.n_prime.get_str() +
                          " does not divide " + lvl.n_big.get_str() + ")");
  if (lvl.n_big / lvl.n_prime < 2)
    throw ConstraintError(at.str() + "N_k/N'_k >= 2 violated");
  if (lvl.beta < 0)
    throw ConstraintError(at.str() + "beta_k >= 0 violated");

  const bool even = (k % 2 == 0);
  ParamState s;
  s.k = k;
  s.n_big = lvl.n_big;
  s.n_prime = lvl.n_prime;
  s.ell_prime = lvl.n_prime * prev.ell;
  s.ell = lvl.n_big * prev.ell;
  s.beta = lvl.beta;
  if (even) {
    s.rho_a = 2 * prev.rho_a;
    s.rho_b = lvl.n_big * prev.rho_b;
  } else {
    s.rho_a = lvl.n_big * prev.rho_a;
    s.rho_b = 2 * prev.rho_b;
  }
  return s;
}

// Growth schedules T1-T3 pick beta_1 = 16, beta_2 = 2^17, then the minimal
// tower beta_k = ceil((k-1) * beta_{k-1} * 2^(k*l_{k-1}) / l_{k-1}) that keeps
// the beta-chaining inequality (induction item 5) tight at every level.
std::vector<ToyLevel> tower_levels(const std::vector<std::pair<long, long>>& nn, int levels) {
  std::vector<ToyLevel> out;
  Int ell = 2; // l_0
  Int beta_prev = 0;
  for (int k = 1; k <= levels; ++k) {
    const auto [n, np] = nn.at(static_cast<size_t>(k - 1));
    Int beta;
    if (k == 1) beta = 16;
    else if (k == 2) beta = 1 << 17;
    else beta = ceil_div((k - 1) * beta_prev * pow2(Int(k) * ell), ell);
    out.push_back(ToyLevel{Int(n), Int(np), beta});
    ell *= n;
    beta_prev = beta;
  }
  return out;
}

std::vector<ToyLevel> flat_levels(int levels) {
  std::vector<ToyLevel> out;
  for (int k = 1; k <= levels; ++k) out.push_back(ToyLevel{Int(4), Int(2), pow2(Int(k))});
  return out;
}

}  // namespace

Schedule Schedule::closed(int cap) {
  Schedule s;
  s.mode = Mode::Closed;
  s.closed_cap = cap;
  return s;
}

Schedule Schedule::toy(std::vector<ToyLevel> levels) {
  Schedule s;
  s.mode = Mode::Toy;
  s.toy_levels = std::move(levels);
  return s;
}

Schedule Schedule::preset(const std::string& name, int levels) {
  if (levels < 1 || levels > 6)
    throw InputError("preset schedules provide 1..6 levels, got " + std::to_string(levels));
  std::vector<std::pair<long, long>> nn;
  if (name == "T1") nn = {{4, 2}, {8, 4}, {16, 8}, {32, 16}, {64, 32}, {128, 64}};
  else if (name == "T2") nn = {{4, 2}, {8, 4}, {24, 8}, {48, 24}, {96, 48}, {192, 96}};
  else if (name == "T3") nn = {{4, 2}, {12, 4}, {24, 12}, {48, 24}, {96, 48}, {192, 96}};
  else if (name == "G") return toy(flat_levels(levels));
  else throw InputError("unknown preset schedule: " + name);
  nn.resize(static_cast<size_t>(levels));
  return toy(tower_levels(nn, levels));
}

std::vector<std::string> Schedule::preset_names() { return {"T1", "T2", "T3", "G"}; }

ParamState initial_state() {
  ParamState s;
  s.k = 0;
  s.ell = 2;
  s.beta = 0;
  s.rho_a = 1;
  s.rho_b = 1;
  return s;
}

ParamState step(const ParamState& prev, const Schedule& sched) {
  if (sched.mode == Schedule::Mode::Closed) return closed_step(prev, sched.closed_cap);
  const size_t idx = static_cast<size_t>(prev.k);
  if (idx >= sched.toy_levels.size())
    throw InputError("toy schedule has no level " + std::to_string(prev.k + 1));
  return toy_step(prev, sched.toy_levels[idx]);
}

std::vector<ParamState> run_levels(const Schedule& sched, int levels) {
  if (levels < 0) throw InputError("levels must be >= 0");
  std::vector<ParamState> states{initial_state()};
  for (int k = 1; k <= levels; ++k) states.push_back(step(states.back(), sched));
  return states;
}

namespace {

InequalityCheck make_check(int k, int item, bool evaluable, bool holds, std::string detail) {
  return InequalityCheck{k, item, evaluable, holds, std::move(detail)};
}

std::string brief(const Int& v) {
  if (bit_length(v) <= 80) return v.get_str();
  return "~2^" + std::to_string(bit_length(v) - 1);
}

}  // namespace

bool InductionReport::all_hold(std::initializer_list<int> items, int k_max) const {
  for (const auto& c : checks) {
    if (c.k > k_max || !c.evaluable) continue;
    if (std::find(items.begin(), items.end(), c.item) == items.end()) continue;
    if (!c.holds) return false;
  }
  return true;
}

InductionReport check_induction(const std::vector<ParamState>& states) {
  InductionReport rep;
  for (size_t i = 1; i < states.size(); ++i) {
    const ParamState& s = states[i];
    const ParamState& p = states[i - 1];
    const int k = s.k;
    const Int& np = *s.n_prime;

    // item 1: 2k <= N'_k <= 2k * l_{k-1}
    {
      const bool ok = (2 * k <= np) && (np <= 2 * k * p.ell);
      rep.checks.push_back(make_check(k, 1, true, ok,
          "2k=" + Int(2 * k).get_str() + " <= N'=" + np.get_str() +
          " <= 2k*l_prev=" + Int(2 * k * p.ell).get_str()));
    }
    // item 2: 2^(k*l'_k) <= beta_k <= l_k / k
    {
      bool evaluable = true;
      bool ok = false;
      std::string detail;
      try {
        const Int lo = pow2(Int(k) * *s.ell_prime, kCheckBitCap);
        const bool upper = (Int(k) * s.beta <= s.ell);
        ok = (lo <= s.beta) && upper;
        detail = "2^(k*l') = " + brief(lo) + " <= beta = " + brief(s.beta) +
                 " <= l/k: " + (upper ? "yes" : "no");
      } catch (const CapacityError&) {
        evaluable = false;
        detail = "2^(k*l'_k) exceeds the bit cap at this level";
      }
      rep.checks.push_back(make_check(k, 2, evaluable, ok, detail));
    }
    // item 3: N_{k-1} <= N'_k <= N_k
    {
      if (p.n_big.has_value()) {
        const bool ok = (*p.n_big <= np) && (np <= *s.n_big);
        rep.checks.push_back(make_check(k, 3, true, ok,
            "N_prev=" + p.n_big->get_str() + " <= N'=" + np.get_str() +
            " <= N=" + s.n_big->get_str()));
      } else {
        rep.checks.push_back(make_check(k, 3, false, false, "N_0 undefined"));
      }
    }
    // item 4: rho_k^A >= rho_k^B when k odd; rho_k^B >= rho_k^A when k even
    {
      const bool ok = (k % 2 == 1) ? (s.rho_a >= s.rho_b) : (s.rho_b >= s.rho_a);
      rep.checks.push_back(make_check(k, 4, true, ok,
          "rho_a=" + brief(s.rho_a) + " rho_b=" + brief(s.rho_b)));
    }
    // item 5: beta_k <= l_k*beta_{k+1} / (k*2^((k+1)*l_k)) <= beta_{k+1}
    {
      if (i + 1 < states.size()) {
        bool evaluable = true;
        bool ok = false;
        std::string detail;
        try {
          const ParamState& nx = states[i + 1];
          const Int tower = pow2(Int(k + 1) * s.ell, kCheckBitCap);
          // Cross-multiplied: k*2^((k+1)l_k)*beta_k <= l_k*beta_{k+1}
          const bool first = (Int(k) * tower * s.beta <= s.ell * nx.beta);
          // Middle <= beta_{k+1} reduces to l_k <= k*2^((k+1)l_k) for beta_{k+1} > 0.
          const bool second = (nx.beta == 0) || (s.ell <= Int(k) * tower);
          ok = first && second;
          detail = std::string("first: ") + (first ? "yes" : "no") +
                   ", second: " + (second ? "yes" : "no");
        } catch (const CapacityError&) {
          evaluable = false;
          detail = "2^((k+1)*l_k) exceeds the bit cap at this level";
        }
        rep.checks.push_back(make_check(k, 5, evaluable, ok, detail));
      } else {
        rep.checks.push_back(make_check(k, 5, false, false, "needs level k+1"));
      }
    }
    // items 6-7: asymptotic; ratios only.
    rep.ratios.push_back(RatioRow{k, "f_a", s.freq_a()});
    rep.ratios.push_back(RatioRow{k, "f_b", s.freq_b()});
    rep.ratios.push_back(RatioRow{k, "N/N_prime", make_rat(*s.n_big, np)});
    if (p.n_big.has_value())
      rep.ratios.push_back(RatioRow{k, "N_prime/N_prev", make_rat(np, *p.n_big)});
    if (i + 1 < states.size() && s.beta > 0) {
      const Int& nb = states[i + 1].beta;
      // Exact ratio for modest sizes; a log2 gap for tower-sized betas, where
      // the exact rational would be pointless to canonicalize or print.
      if (bit_length(nb) <= 4096 && bit_length(s.beta) <= 4096)
        rep.ratios.push_back(RatioRow{k, "beta_next/beta", make_rat(nb, s.beta)});
      else
        rep.ratios.push_back(RatioRow{k, "log2(beta_next/beta)~",
                                      Rat(Int(bit_length(nb)) - Int(bit_length(s.beta)))});
    }
    rep.ratios.push_back(RatioRow{k, "f_a/f_b", s.freq_a() / s.freq_b()});
  }
  return rep;
}

bool ConstraintReport::c4_all_hold() const {
  for (const auto& r : c4)
    if (!r.holds) return false;
  return !c4.empty();
}

ConstraintReport check_constraints_c1_c4(const std::vector<ParamState>& states,
                                         const std::map<int, Int>& r_prime) {
  ConstraintReport rep;
  for (size_t i = 1; i < states.size(); ++i) {
    const ParamState& s = states[i];
    const ParamState& p = states[i - 1];
    const int k = s.k;
    const bool even = (k % 2 == 0);
    // The dominant frequency side: B for k even, A for k odd.
    const Rat f_dom = even ? s.freq_b() : s.freq_a();
    const Rat f_dom_prev = even ? p.freq_b() : p.freq_a();
    const Rat f_other_prev = even ? p.freq_a() : p.freq_b();

    // C1: beta_k/l_k << f_k (dominant side); ratio = (beta/l)/f = beta/rho.
    {
      ConstraintReport::Row r{k, even, "C1", true, Rat(), ""};
      if (s.beta == 0) {
        r.ratio = Rat(0);
        r.detail = "beta = 0";
      } else {
        r.ratio = make_rat(s.beta, s.ell) / f_dom;
      }
      rep.rows.push_back(std::move(r));
    }
    // C2: (R'_k)^2/beta_k << (f_{k-1} dominant side)^2.
    {
      ConstraintReport::Row r{k, even, "C2", false, Rat(), ""};
      auto it = r_prime.find(k);
      if (it == r_prime.end()) {
        r.detail = "C2 unevaluable: R'_k not supplied";
      } else if (s.beta == 0) {
        r.detail = "C2 unevaluable: beta_k = 0";
      } else {
        r.evaluable = true;
        r.ratio = make_rat(it->second * it->second, s.beta) / (f_dom_prev * f_dom_prev);
      }
      rep.rows.push_back(std::move(r));
    }
    // C3: f_{k-1}^other / N'_k << f_{k-1}^dominant.
    {
      ConstraintReport::Row r{k, even, "C3", true, Rat(), ""};
      r.ratio = (f_other_prev / Rat(*s.n_prime)) / f_dom_prev;
      rep.rows.push_back(std::move(r));
    }
    // C4 exact: f_k = f_{k-1} on the dominant side.
    rep.c4.push_back(ConstraintReport::C4Row{k, even, f_dom == f_dom_prev, f_dom, f_dom_prev});
  }

  // Monotonicity verdicts per (constraint, parity) class.
  for (const std::string& c : {"C1", "C2", "C3"}) {
    for (bool even : {false, true}) {
      ConstraintReport::Monotone m{c, even, false, false};
      std::vector<Rat> seq;
      for (const auto& r : rep.rows)
        if (r.constraint == c && r.even == even && r.evaluable) seq.push_back(r.ratio);
      if (seq.size() >= 2) {
        m.evaluated = true;
        m.strictly_decreasing = true;
        for (size_t i = 1; i < seq.size(); ++i)
          if (!(seq[i] < seq[i - 1])) m.strictly_decreasing = false;
      }
      rep.monotonicity.push_back(std::move(m));
    }
  }
  return rep;
}

}  // namespace hcs
