#include "hcs/language.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>
#include <utility>

namespace hcs {

namespace {

Int pow3(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
  return r;
}

}  // namespace

WordCache::WordCache(std::vector<ParamState> states, unsigned long materialize_cap)
    : states_(std::move(states)), cap_(materialize_cap) {
  if (states_.empty()) throw InputError("schedule has no levels");
}

const LevelWords& WordCache::level(int k) {
  auto it = levels_.find(k);
  if (it == levels_.end()) it = levels_.emplace(k, build_level(k, states_)).first;
  return it->second;
}

const IntermediateWords& WordCache::intermediate(int k) {
  auto it = intermediates_.find(k);
  if (it == intermediates_.end())
    it = intermediates_.emplace(k, build_intermediate(k, states_)).first;
  return it->second;
}

const DenseWord& WordCache::dense(const SuccinctWord& w) {
  std::string key = w.serialize();
  auto it = dense_.find(key);
  if (it == dense_.end()) it = dense_.emplace(std::move(key), w.materialize_all(cap_)).first;
  return it->second;
}

const std::vector<DenseWord>& WordCache::pair_concats(int k) {
  auto it = pair_concats_.find(k);
  if (it != pair_concats_.end()) return it->second;
  const LevelWords& lw = level(k);
  const DenseWord* dict[4] = {&dense(lw.a), &dense(lw.ones), &dense(lw.b), &dense(lw.twos)};
  std::vector<DenseWord> out;
  out.reserve(16);
  for (const DenseWord* u : dict)
    for (const DenseWord* v : dict) out.push_back(*u + *v);
  return pair_concats_.emplace(k, std::move(out)).first->second;
}

int WordCache::least_level_covering(const Int& n) {
  if (n < 1) throw InputError("window length must be >= 1");
  for (int k = 0; k <= max_level(); ++k) {
    if (states_[static_cast<size_t>(k)].ell >= n) {
      if (states_[static_cast<size_t>(k)].ell > Int(cap_))
        throw CapacityError("level " + std::to_string(k) + " word length ~2^" +
                            std::to_string(bit_length(states_[static_cast<size_t>(k)].ell) - 1) +
                            " exceeds the materialization cap " + std::to_string(cap_));
      return k;
    }
  }
  throw CapacityError("no computed level covers window length " + n.get_str());
}

bool globally_admissible(const DenseWord& w, WordCache& cache) {
  if (w.empty()) throw InputError("admissibility of the empty word is undefined");
  for (char c : w)
    if (!is_base_symbol(c)) throw InputError("word contains a symbol outside {0,1,2}");
  const int k = cache.least_level_covering(Int(static_cast<unsigned long>(w.size())));
  for (const DenseWord& s : cache.pair_concats(k))
    if (s.find(w) != DenseWord::npos) return true;
  return false;
}

namespace {

// Reference strings for the length-n segment test, '#'-joined: for
// l_{k-1} < n <= l_k, the 16 concatenations of terminal x initial segments of
// length (p+1) l_{k-1} (clamped to the full word) of the level-k dictionary;
// for n <= l_0, the full level-0 pair concatenations.
struct SliceFrame {
  int level_k = 0;
  Int block_p;
  DenseWord haystack;
};

SliceFrame make_slice_frame(unsigned long n, WordCache& cache) {
  if (n == 0) throw InputError("slice length must be >= 1");
  const auto& st = cache.states();
  const Int nn(n);
  SliceFrame f;
  if (nn <= st[0].ell) {
    f.level_k = 0;
    f.block_p = 0;
    for (const DenseWord& s : cache.pair_concats(0)) {
      f.haystack += s;
      f.haystack += '#';
    }
    return f;
  }
  int k = -1;
  for (size_t j = 1; j < st.size(); ++j) {
    if (st[j - 1].ell < nn && nn <= st[j].ell) {
      k = static_cast<int>(j);
      break;
    }
  }
  if (k < 0)
    throw CapacityError("length " + std::to_string(n) + " exceeds the last computed level");
  const Int& lprev = st[static_cast<size_t>(k - 1)].ell;
  f.level_k = k;
  f.block_p = ceil_div(nn, lprev);
  Int seg = (f.block_p + 1) * lprev;
  if (seg > st[static_cast<size_t>(k)].ell) seg = st[static_cast<size_t>(k)].ell;
  const LevelWords& lw = cache.level(k);
  const SuccinctWord* dict[4] = {&lw.a, &lw.ones, &lw.b, &lw.twos};
  std::vector<DenseWord> tails, heads;
  tails.reserve(4);
  heads.reserve(4);
  for (const SuccinctWord* w : dict) {
    tails.push_back(w->tail(seg, cache.cap()));
    heads.push_back(w->head(seg, cache.cap()));
  }
  for (const DenseWord& t : tails)
    for (const DenseWord& h : heads) {
      f.haystack += t;
      f.haystack += h;
      f.haystack += '#';
    }
  return f;
}

}  // namespace

SliceStats forbidden_slice_stream(unsigned long n, WordCache& cache, const ForbiddenSink& sink) {
  const auto t0 = std::chrono::steady_clock::now();
  const SliceFrame frame = make_slice_frame(n, cache);
  SliceStats stats{n, frame.level_k, frame.block_p, Int(0), Int(0), 0.0};
  DenseWord cur;
  cur.reserve(n);

  // Emit every extension of cur below a prefix that already fails the test.
  auto emit_all = [&](auto&& self, unsigned long left) -> void {
    if (left == 0) {
      ++stats.count;
      sink(ForbiddenWordRecord{n, cur, frame.level_k, frame.block_p});
      return;
    }
    for (char c : {'0', '1', '2'}) {
      cur.push_back(c);
      self(self, left - 1);
      cur.pop_back();
    }
  };

  auto walk = [&](auto&& self) -> void {
    ++stats.nodes_visited;
    const bool found = cur.empty() || frame.haystack.find(cur) != DenseWord::npos;
    if (cur.size() == n) {
      if (!found) {
        ++stats.count;
        if (sink) sink(ForbiddenWordRecord{n, cur, frame.level_k, frame.block_p});
      }
      return;
    }
    if (!found) {
      const unsigned long left = n - static_cast<unsigned long>(cur.size());
      if (sink)
        emit_all(emit_all, left);
      else
        stats.count += pow3(left);
      return;
    }
    for (char c : {'0', '1', '2'}) {
      cur.push_back(c);
      self(self);
      cur.pop_back();
    }
  };
  walk(walk);

  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return stats;
}

std::vector<ForbiddenWordRecord> forbidden_slice(unsigned long n, WordCache& cache,
                                                 unsigned long max_records) {
  std::vector<ForbiddenWordRecord> out;
  ForbiddenSink sink = [&](const ForbiddenWordRecord& r) {
    if (out.size() >= max_records)
      throw CapacityError("forbidden slice at length " + std::to_string(n) + " exceeds " +
                          std::to_string(max_records) + " records; use the streaming form");
    out.push_back(r);
  };
  forbidden_slice_stream(n, cache, sink);
  return out;
}

std::vector<SliceStats> enumerate_forbidden(unsigned long n_max, WordCache& cache,
                                            const ForbiddenSink& sink) {
  std::vector<SliceStats> stats;
  stats.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) stats.push_back(forbidden_slice_stream(n, cache, sink));
  return stats;
}

LanguageSlice language_slice_at_level(unsigned long n, int k, WordCache& cache) {
  if (n == 0) throw InputError("language slice length must be >= 1");
  if (k < 0 || k > cache.max_level()) throw InputError("level out of range");
  if (cache.states()[static_cast<size_t>(k)].ell < Int(n))
    throw InputError("level " + std::to_string(k) + " words are shorter than " + std::to_string(n));
  LanguageSlice out;
  out.n = n;
  for (const DenseWord& s : cache.pair_concats(k))
    for (size_t i = 0; i + n <= s.size(); ++i) out.words.insert(s.substr(i, n));
  out.count = static_cast<unsigned long>(out.words.size());
  return out;
}

LanguageSlice language_slice(unsigned long n, WordCache& cache) {
  return language_slice_at_level(n, cache.least_level_covering(Int(n)), cache);
}

std::vector<ComplexityRow> complexity_function(unsigned long n_max, WordCache& cache) {
  if (n_max == 0) throw InputError("need n_max >= 1");
  std::vector<ComplexityRow> rows;
  rows.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) {
    const LanguageSlice s = language_slice(n, cache);
    rows.push_back(ComplexityRow{n, s.count,
                                 std::log(static_cast<double>(s.count)) / static_cast<double>(n)});
  }
  return rows;
}

ReconstructionCheck reconstruction_check(unsigned long n, WordCache& cache) {
  const unsigned long len = 2 * n + 1;
  // Window sets of the per-length segment haystacks: the incremental local
  // admissibility filter. The leaf check below uses the independent
  // dictionary-pair scan; keeping the two code paths distinct is the point.
  std::vector<std::unordered_set<std::string>> windows(len + 1);
  for (unsigned long j = 1; j <= len; ++j) {
    const SliceFrame frame = make_slice_frame(j, cache);
    size_t start = 0;
    const DenseWord& hay = frame.haystack;
    while (start < hay.size()) {
      size_t stop = hay.find('#', start);
      if (stop == DenseWord::npos) stop = hay.size();
      for (size_t i = start; i + j <= stop; ++i) windows[j].insert(hay.substr(i, j));
      start = stop + 1;
    }
  }

  ReconstructionCheck out;
  out.n = n;
  out.locally_admissible_count = 0;
  out.holds = true;
  DenseWord cur;
  cur.reserve(len);
  auto dfs = [&](auto&& self) -> bool {
    if (cur.size() == len) {
      ++out.locally_admissible_count;
      if (!globally_admissible(cur, cache)) {
        out.holds = false;
        out.counterexample = cur;
        return false;
      }
      return true;
    }
    for (char c : {'0', '1', '2'}) {
      cur.push_back(c);
      bool alive = true;
      for (unsigned long j = 1; j <= cur.size(); ++j) {
        if (!windows[j].count(cur.substr(cur.size() - j))) {
          alive = false;
          break;
        }
      }
      if (alive && !self(self)) return false;
      cur.pop_back();
    }
    return true;
  };
  dfs(dfs);
  return out;
}

bool verify_reconstruction(unsigned long n, WordCache& cache) {
  return reconstruction_check(n, cache).holds;
}

}  // namespace hcs
