#include "hcs/overlaps.hpp"

#include <algorithm>

namespace hcs {

namespace {

// All m >= 1 with prefix(v, m) = suffix(u, m), via the prefix function of
// v + separator + u; capped at min(|u|,|v|) by the separator. Ascending.
std::vector<unsigned long> match_lengths(const DenseWord& u, const DenseWord& v) {
  std::string s;
  s.reserve(u.size() + v.size() + 1);
  s += v;
  s += '\x01';
  s += u;
  std::vector<size_t> pi(s.size(), 0);
  for (size_t i = 1; i < s.size(); ++i) {
    size_t j = pi[i - 1];
    while (j > 0 && s[i] != s[j]) j = pi[j - 1];
    if (s[i] == s[j]) ++j;
    pi[i] = j;
  }
  std::vector<unsigned long> out;
  for (size_t m = pi.back(); m > 0; m = pi[m - 1]) out.push_back(static_cast<unsigned long>(m));
  std::reverse(out.begin(), out.end());
  return out;
}

void verify_match(const DenseWord& u, const DenseWord& v, unsigned long m) {
  if (m == 0 || m > u.size() || m > v.size() ||
      !std::equal(u.end() - static_cast<long>(m), u.end(), v.begin()))
    throw ConstraintError("overlap matcher self-check failed at match length " +
                          std::to_string(m));
}

}  // namespace

std::vector<unsigned long> overlap_shifts(const DenseWord& u, const DenseWord& v) {
  if (u.empty() || v.empty()) throw InputError("overlap scan needs nonempty words");
  if (u.size() != v.size()) throw InputError("overlap scan needs equal lengths");
  std::vector<unsigned long> shifts;
  for (unsigned long m : match_lengths(u, v)) {
    if (m >= u.size()) continue; // full coincidence excluded
    verify_match(u, v, m);
    shifts.push_back(static_cast<unsigned long>(u.size()) - m);
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

std::vector<unsigned long> overlap_shifts(const SuccinctWord& u, const SuccinctWord& v,
                                          unsigned long cap) {
  return overlap_shifts(u.materialize_all(cap), v.materialize_all(cap));
}

std::vector<unsigned long> overlap_shifts_naive(const DenseWord& u, const DenseWord& v) {
  if (u.empty() || v.empty()) throw InputError("overlap scan needs nonempty words");
  if (u.size() != v.size()) throw InputError("overlap scan needs equal lengths");
  std::vector<unsigned long> shifts;
  for (size_t s = 1; s < u.size(); ++s) {
    const size_t m = u.size() - s;
    if (u.compare(s, m, v, 0, m) == 0) shifts.push_back(static_cast<unsigned long>(s));
  }
  return shifts;
}

std::vector<unsigned long> suffix_prefix_matches(const DenseWord& u, const DenseWord& v) {
  if (u.empty() || v.empty()) throw InputError("overlap scan needs nonempty words");
  std::vector<unsigned long> out;
  for (unsigned long m : match_lengths(u, v)) {
    if (u.size() == v.size() && m == u.size()) continue;
    verify_match(u, v, m);
    out.push_back(m);
  }
  return out;
}

namespace {

struct NamedWord {
  std::string name;
  const DenseWord* text;
};

std::vector<NamedWord> one_side(int k, WordCache& cache, bool marked_with_ones) {
  const std::string lvl = std::to_string(k);
  const LevelWords& lw = cache.level(k);
  std::vector<NamedWord> out;
  if (marked_with_ones) {
    out.push_back({"a_" + lvl, &cache.dense(lw.a)});
    out.push_back({"1^l_" + lvl, &cache.dense(lw.ones)});
  } else {
    out.push_back({"b_" + lvl, &cache.dense(lw.b)});
    out.push_back({"2^l_" + lvl, &cache.dense(lw.twos)});
  }
  if (k >= 1) {
    const IntermediateWords& iw = cache.intermediate(k);
    if (marked_with_ones) {
      out.push_back({"a'_" + lvl, &cache.dense(iw.a_prime)});
      if (iw.a_dprime) out.push_back({"a''_" + lvl, &cache.dense(*iw.a_dprime)});
      out.push_back({"1^l'_" + lvl, &cache.dense(iw.ones)});
    } else {
      out.push_back({"b'_" + lvl, &cache.dense(iw.b_prime)});
      if (iw.b_dprime) out.push_back({"b''_" + lvl, &cache.dense(*iw.b_dprime)});
      out.push_back({"2^l'_" + lvl, &cache.dense(iw.twos)});
    }
  }
  return out;
}

}  // namespace

CrossOverlapReport cross_overlap_report(int k, WordCache& cache) {
  if (k < 0) throw InputError("level must be >= 0");
  const std::vector<NamedWord> ones = one_side(k, cache, true);
  const std::vector<NamedWord> twos = one_side(k, cache, false);
  CrossOverlapReport rep;
  rep.k = k;
  rep.clean = true;
  auto scan = [&](const NamedWord& u, const NamedWord& v) {
    OverlapReport r;
    r.u_name = u.name;
    r.v_name = v.name;
    for (unsigned long m : suffix_prefix_matches(*u.text, *v.text))
      r.shifts.push_back(static_cast<unsigned long>(u.text->size()) - m);
    std::sort(r.shifts.begin(), r.shifts.end());
    if (!r.shifts.empty()) rep.clean = false;
    rep.pairs.push_back(std::move(r));
  };
  for (const NamedWord& u : ones)
    for (const NamedWord& v : twos) scan(u, v);
  for (const NamedWord& u : twos)
    for (const NamedWord& v : ones) scan(u, v);
  return rep;
}

bool verify_no_cross_overlap(int k, WordCache& cache) {
  return cross_overlap_report(k, cache).clean;
}

bool SelfOverlapReport::all_hold() const {
  for (const ClassVerdict& c : classes)
    if (!c.holds) return false;
  return true;
}

SelfOverlapReport classify_self_overlaps(int k, WordCache& cache) {
  if (k < 1) throw InputError("self-overlap classification needs level k >= 1");
  const bool even = k % 2 == 0;
  const auto& st = cache.states();
  const LevelWords& lw = cache.level(k);
  const IntermediateWords& iw = cache.intermediate(k);
  const Int& lprev = st[static_cast<size_t>(k - 1)].ell;
  const Int& nbig = *st[static_cast<size_t>(k)].n_big;
  const char marker = even ? '1' : '2';
  const std::string lvl = std::to_string(k);
  const std::string sand_name = (even ? "a_" : "b_") + lvl;
  const std::string pow_name = (even ? "b_" : "a_") + lvl;
  const std::string prime_name = (even ? "a'_" : "b'_") + lvl;
  const std::string dprime_name = (even ? "a''_" : "b''_") + lvl;
  const DenseWord& sandwich = cache.dense(even ? lw.a : lw.b);
  const DenseWord& powerw = cache.dense(even ? lw.b : lw.a);
  const DenseWord& prime = cache.dense(even ? iw.a_prime : iw.b_prime);
  const DenseWord& dprime = cache.dense(even ? *iw.a_dprime : *iw.b_dprime);

  SelfOverlapReport rep;
  rep.k = k;
  rep.even = even;

  // (i) sandwich self-overlaps sit beyond the first inner block.
  {
    ClassVerdict c;
    c.class_id = "i";
    c.pair = sand_name + " vs " + sand_name;
    c.shifts = overlap_shifts(sandwich, sandwich);
    const Int min_shift = (nbig - 1) * lprev;
    for (unsigned long s : c.shifts)
      if (Int(s) < min_shift) c.violations.push_back(s);
    c.holds = c.violations.empty();
    rep.classes.push_back(std::move(c));
  }

  // (ii) power self-overlaps align to block multiples, or match one level
  // further down.
  {
    ClassVerdict c;
    c.class_id = "ii";
    c.pair = pow_name + " vs " + pow_name;
    c.shifts = overlap_shifts(powerw, powerw);
    const bool have_l2 = k >= 2;
    if (!have_l2) c.note = "match = l_{k-2} clause skipped: no level k-2";
    const Int len(powerw.size());
    for (unsigned long s : c.shifts) {
      const bool block_aligned = Int(s) % lprev == 0;
      const bool deep_match = have_l2 && (len - Int(s)) == st[static_cast<size_t>(k - 2)].ell;
      if (!block_aligned && !deep_match) c.violations.push_back(s);
    }
    c.holds = c.violations.empty();
    rep.classes.push_back(std::move(c));
  }

  // (iii) the two one-sided filler words never overlap themselves.
  for (int which = 0; which < 2; ++which) {
    ClassVerdict c;
    c.class_id = "iii";
    const std::string& nm = which == 0 ? prime_name : dprime_name;
    const DenseWord& w = which == 0 ? prime : dprime;
    c.pair = nm + " vs " + nm;
    c.shifts = overlap_shifts(w, w);
    c.violations = c.shifts;
    c.holds = c.shifts.empty();
    rep.classes.push_back(std::move(c));
  }

  // (iv) across the two filler forms: all-marker matches or short matches.
  for (int dir = 0; dir < 2; ++dir) {
    const DenseWord& u = dir == 0 ? prime : dprime;
    const DenseWord& v = dir == 0 ? dprime : prime;
    ClassVerdict c;
    c.class_id = "iv";
    c.pair = (dir == 0 ? prime_name + " vs " + dprime_name
                       : dprime_name + " vs " + prime_name);
    for (unsigned long m : suffix_prefix_matches(u, v)) {
      const unsigned long s = static_cast<unsigned long>(u.size()) - m;
      c.shifts.push_back(s);
      const bool short_match = Int(m) <= lprev;
      const bool all_marker =
          std::all_of(v.begin(), v.begin() + static_cast<long>(m),
                      [&](char ch) { return ch == marker; });
      if (!short_match && !all_marker) c.violations.push_back(s);
    }
    std::sort(c.shifts.begin(), c.shifts.end());
    std::sort(c.violations.begin(), c.violations.end());
    c.holds = c.violations.empty();
    rep.classes.push_back(std::move(c));
  }

  return rep;
}

}  // namespace hcs
