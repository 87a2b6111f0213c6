#include "hcs/words.hpp"

#include <algorithm>
#include <utility>

namespace hcs {

struct SuccinctWord::Node {
  enum class Kind { Run, Concat, Power };
  Kind kind;
  char sym = 0; // Run only
  Int count;    // Run count / Power exponent
  std::vector<NodePtr> kids;
  Int length;
  Int zeros;
};

SuccinctWord SuccinctWord::run(char sym, const Int& count) {
  if (!is_base_symbol(sym) && !is_duplicated_symbol(sym))
    throw InputError(std::string("run: bad symbol '") + sym + "'");
  if (count < 0) throw InputError("run: negative count");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Run;
  n->sym = sym;
  n->count = count;
  n->length = count;
  n->zeros = (sym == '0') ? count : Int(0);
  return SuccinctWord(std::move(n));
}

SuccinctWord SuccinctWord::concat(std::vector<SuccinctWord> parts) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Concat;
  n->length = 0;
  n->zeros = 0;
  for (auto& p : parts) {
    n->length += p.n_->length;
    n->zeros += p.n_->zeros;
    n->kids.push_back(p.n_);
  }
  return SuccinctWord(std::move(n));
}

SuccinctWord SuccinctWord::power(const SuccinctWord& base, const Int& exponent) {
  if (exponent < 0) throw InputError("power: negative exponent");
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Power;
  n->count = exponent;
  n->kids.push_back(base.n_);
  n->length = base.n_->length * exponent;
  n->zeros = base.n_->zeros * exponent;
  return SuccinctWord(std::move(n));
}

const Int& SuccinctWord::length() const { return n_->length; }
const Int& SuccinctWord::zeros() const { return n_->zeros; }

char SuccinctWord::letter_at(const Int& i) const {
  if (i < 1 || i > n_->length)
    throw InputError("letter_at: index " + i.get_str() + " outside 1.." + n_->length.get_str());
  const Node* node = n_.get();
  Int pos = i;
  for (;;) {
    switch (node->kind) {
      case Node::Kind::Run:
        return node->sym;
      case Node::Kind::Power: {
        pos = (pos - 1) % node->kids[0]->length + 1;
        node = node->kids[0].get();
        break;
      }
      case Node::Kind::Concat: {
        const Node* next = nullptr;
        for (const auto& kid : node->kids) {
          if (pos <= kid->length) {
            next = kid.get();
            break;
          }
          pos -= kid->length;
        }
        if (!next) throw InputError("letter_at: internal descent error");
        node = next;
        break;
      }
    }
  }
}

namespace {

// Append symbols lo..hi (1-based within node, lo <= hi guaranteed nonempty
// by callers clipping first) of node to out.
void emit(const SuccinctWord::Node* node, const Int& lo, const Int& hi, DenseWord& out) {
  if (lo > hi) return;
  switch (node->kind) {
    case SuccinctWord::Node::Kind::Run: {
      out.append(to_ulong(hi - lo + 1, "run window"), node->sym);
      return;
    }
    case SuccinctWord::Node::Kind::Concat: {
      Int off = 0;
      for (const auto& kid : node->kids) {
        const Int a = lo - off;
        const Int b = hi - off;
        if (b < 1) break;
        if (a <= kid->length) {
          const Int clipped_lo = a < 1 ? Int(1) : a;
          const Int clipped_hi = b > kid->length ? kid->length : b;
          emit(kid.get(), clipped_lo, clipped_hi, out);
        }
        off += kid->length;
      }
      return;
    }
    case SuccinctWord::Node::Kind::Power: {
      const Int& base_len = node->kids[0]->length;
      if (base_len == 0) return;
      const Int first_copy = (lo - 1) / base_len;
      const Int last_copy = (hi - 1) / base_len;
      for (Int c = first_copy; c <= last_copy; ++c) {
        const Int off = c * base_len;
        const Int a = lo - off;
        const Int b = hi - off;
        const Int clipped_lo = a < 1 ? Int(1) : a;
        const Int clipped_hi = b > base_len ? base_len : b;
        emit(node->kids[0].get(), clipped_lo, clipped_hi, out);
      }
      return;
    }
  }
}

}  // namespace

DenseWord SuccinctWord::materialize(const Int& lo, const Int& hi, unsigned long cap) const {
  if (lo > hi) return {};
  if (lo < 1 || hi > n_->length)
    throw InputError("materialize: window " + lo.get_str() + ".." + hi.get_str() +
                     " outside 1.." + n_->length.get_str());
  const Int want = hi - lo + 1;
  if (want > Int(cap))
    throw CapacityError("materialize: window size " + want.get_str() +
                        " exceeds cap " + std::to_string(cap));
  DenseWord out;
  out.reserve(to_ulong(want, "materialize window"));
  emit(n_.get(), lo, hi, out);
  return out;
}

DenseWord SuccinctWord::materialize_all(unsigned long cap) const {
  if (n_->length == 0) return {};
  return materialize(1, n_->length, cap);
}

DenseWord SuccinctWord::head(const Int& m, unsigned long cap) const {
  if (m < 0 || m > n_->length) throw InputError("head: bad length " + m.get_str());
  if (m == 0) return {};
  return materialize(1, m, cap);
}

DenseWord SuccinctWord::tail(const Int& m, unsigned long cap) const {
  if (m < 0 || m > n_->length) throw InputError("tail: bad length " + m.get_str());
  if (m == 0) return {};
  return materialize(n_->length - m + 1, n_->length, cap);
}

namespace {

void render(const SuccinctWord::Node* node, std::string& out) {
  switch (node->kind) {
    case SuccinctWord::Node::Kind::Run:
      out += "run(";
      out += node->sym;
      out += ',';
      out += node->count.get_str();
      out += ')';
      return;
    case SuccinctWord::Node::Kind::Concat: {
      out += "cat(";
      bool first = true;
      for (const auto& kid : node->kids) {
        if (!first) out += ',';
        first = false;
        render(kid.get(), out);
      }
      out += ')';
      return;
    }
    case SuccinctWord::Node::Kind::Power:
      out += "pow(";
      render(node->kids[0].get(), out);
      out += ',';
      out += node->count.get_str();
      out += ')';
      return;
  }
}

}  // namespace

std::string SuccinctWord::serialize() const {
  std::string out;
  render(n_.get(), out);
  return out;
}

namespace {

void require_levels(int k, const std::vector<ParamState>& states) {
  if (k < 0) throw InputError("level must be >= 0");
  if (states.size() <= static_cast<size_t>(k))
    throw InputError("state history covers levels 0.." +
                     std::to_string(static_cast<int>(states.size()) - 1) +
                     " but level " + std::to_string(k) + " was requested");
  for (int j = 0; j <= k; ++j) {
    const ParamState& s = states[static_cast<size_t>(j)];
    if (s.k != j) throw InputError("state history must list consecutive levels from 0");
    if (j >= 1 && (!s.n_big || !s.n_prime || !s.ell_prime))
      throw InputError("state at level " + std::to_string(j) + " lacks N, N', or l'");
  }
}

}  // namespace

LevelWords build_level(int k, const std::vector<ParamState>& states) {
  require_levels(k, states);
  SuccinctWord a = SuccinctWord::concat({SuccinctWord::run('0', 1), SuccinctWord::run('1', 1)});
  SuccinctWord b = SuccinctWord::concat({SuccinctWord::run('0', 1), SuccinctWord::run('2', 1)});
  for (int j = 1; j <= k; ++j) {
    const ParamState& s = states[static_cast<size_t>(j)];
    const Int& prev_ell = states[static_cast<size_t>(j - 1)].ell;
    const Int& n = *s.n_big;
    if (j % 2 == 1) {
      // Odd level: a is a pure power, b carries the 2-run filler between two copies.
      a = SuccinctWord::power(a, n);
      b = SuccinctWord::concat({b, SuccinctWord::run('2', (n - 2) * prev_ell), b});
    } else {
      a = SuccinctWord::concat({a, SuccinctWord::run('1', (n - 2) * prev_ell), a});
      b = SuccinctWord::power(b, n);
    }
  }
  const ParamState& top = states[static_cast<size_t>(k)];
  if (a.length() != top.ell || b.length() != top.ell)
    throw ConstraintError("level word length disagrees with the parameter state");
  if (a.zeros() != top.rho_a || b.zeros() != top.rho_b)
    throw ConstraintError("level word zero count disagrees with rho");
  return LevelWords{a, b, SuccinctWord::run('1', top.ell), SuccinctWord::run('2', top.ell)};
}

IntermediateWords build_intermediate(int k, const std::vector<ParamState>& states) {
  if (k == 0) throw InputError("intermediate scale is undefined at level 0");
  require_levels(k, states);
  const ParamState& s = states[static_cast<size_t>(k)];
  const ParamState& p = states[static_cast<size_t>(k - 1)];
  const Int& np = *s.n_prime;
  LevelWords prev = build_level(k - 1, states);

  IntermediateWords out{
      /*a_prime=*/SuccinctWord::run('1', 0), // placeholders, replaced below
      /*b_prime=*/SuccinctWord::run('2', 0),
      /*ones=*/SuccinctWord::run('1', *s.ell_prime),
      /*twos=*/SuccinctWord::run('2', *s.ell_prime),
      std::nullopt, std::nullopt};
  if (k % 2 == 1) {
    // Odd level: the a-side is a pure power; the b-side has one-sided filler,
    // in both orders.
    out.a_prime = SuccinctWord::power(prev.a, np);
    out.b_prime = SuccinctWord::concat({prev.b, SuccinctWord::run('2', (np - 1) * p.ell)});
    out.b_dprime = SuccinctWord::concat({SuccinctWord::run('2', (np - 1) * p.ell), prev.b});
  } else {
    out.a_prime = SuccinctWord::concat({prev.a, SuccinctWord::run('1', (np - 1) * p.ell)});
    out.a_dprime = SuccinctWord::concat({SuccinctWord::run('1', (np - 1) * p.ell), prev.a});
    out.b_prime = SuccinctWord::power(prev.b, np);
  }
  if (out.a_prime.length() != *s.ell_prime || out.b_prime.length() != *s.ell_prime)
    throw ConstraintError("intermediate word length disagrees with l'_k");
  return out;
}

}  // namespace hcs
