#include "aubert/jacquet.hpp"

#include <cstdint>

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace aubert {

void FormalSum::add(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum FormalSum::collect(std::vector<std::pair<Word, Int>>&& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FormalSum out;
  std::size_t i = 0;
  while (i < raw.size()) {
    Int c = std::move(raw[i].second);
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].first == raw[i].first) c += raw[j++].second;
    if (c != 0) out.terms_.emplace_hint(out.terms_.end(), std::move(raw[i].first), std::move(c));
    i = j;
  }
  return out;
}

void FormalSum::append_sorted(Word&& w, Int&& c) {
  terms_.emplace_hint(terms_.end(), std::move(w), std::move(c));
}

const Int& FormalSum::coeff(const Word& w) const {
  static const Int zero = 0;
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

void ShufflePattern::validate() const {
  int prev = 0;
  for (int c : cuts) {
    if (c < prev) throw std::invalid_argument("shuffle pattern cuts must be nondecreasing");
    prev = c;
  }
}

std::vector<int> ShufflePattern::block_sizes() const {
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  return sizes;
}

Perm Perm::identity(int K) {
  Perm p;
  p.images.resize(K);
  for (int i = 0; i < K; ++i) p.images[i] = i;
  return p;
}

namespace {

// Fills `perm` by deciding, for each target position in turn, which block
// supplies it; elements of a block land in increasing target positions, so
// the order within each block is preserved.
void shuffle_rec(int pos, int K, std::vector<int>& remaining, std::vector<int>& next_src,
                 Perm& perm, const std::function<void(const Perm&)>& fn) {
  if (pos == K) {
    fn(perm);
    return;
  }
  for (std::size_t b = 0; b < remaining.size(); ++b) {
    if (remaining[b] == 0) continue;
    int src = next_src[b];
    perm.images[src] = pos;
    --remaining[b];
    ++next_src[b];
    shuffle_rec(pos + 1, K, remaining, next_src, perm, fn);
    --next_src[b];
    ++remaining[b];
  }
}

}  // namespace

void for_each_shuffle(const ShufflePattern& p, const std::function<void(const Perm&)>& fn) {
  p.validate();
  const int K = p.total();
  std::vector<int> sizes = p.block_sizes();
  std::vector<int> next_src;
  int start = 0;
  for (int s : sizes) {
    next_src.push_back(start);
    start += s;
  }
  Perm perm;
  perm.images.assign(K, 0);
  shuffle_rec(0, K, sizes, next_src, perm, fn);
}

std::vector<Perm> enumerate_shuffles(const ShufflePattern& p) {
  std::vector<Perm> out;
  for_each_shuffle(p, [&](const Perm& s) { out.push_back(s); });
  return out;
}

Int shuffle_count(const ShufflePattern& p) {
  p.validate();
  Int count = 1;
  int placed = 0;
  for (int s : p.block_sizes()) {
    // multiply by C(placed + s, s)
    for (int i = 1; i <= s; ++i) {
      count *= placed + i;
      count /= i;
    }
    placed += s;
  }
  return count;
}

Perm z_perm(int k, int l, int K) {
  if (k < 1 || k > K + 1 || l < 0 || l > K)
    throw std::out_of_range("z permutation indices out of range");
  Perm p = Perm::identity(K);
  if (k > l) return p;
  for (int j = k; j <= l; ++j) p.images[j - 1] = k + l - j - 1;
  return p;
}

Word apply_sign(const std::vector<int>& signs, const Word& w) {
  if (signs.size() != w.size()) throw std::invalid_argument("sign vector length mismatch");
  Word out = w;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (signs[i] < 0) out[i] = -out[i];
  return out;
}

Word apply_perm(const Perm& p, const Word& w) {
  if (p.images.size() != w.size()) throw std::invalid_argument("permutation size mismatch");
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[p.images[i]] = w[i];
  return out;
}

FormalSum tail_jacquet(TemperedAtom t, const RhoSigmaContext& ctx) {
  check_tail(t, ctx);
  FormalSum out;
  switch (t) {
    case TemperedAtom::Sigma:
      out.add({}, 1);
      break;
    case TemperedAtom::DeltaCuspHalf:
      out.add({HalfInt::half()}, 1);
      break;
    case TemperedAtom::DeltaCuspOne:
      out.add({HalfInt(1)}, 1);
      break;
    case TemperedAtom::TauPlus:
      out.add({HalfInt(0), HalfInt(1)}, 1);
      break;
    case TemperedAtom::TauMinus:
      out.add({HalfInt(0), HalfInt(1)}, 1);
      out.add({HalfInt(1), HalfInt(0)}, 2);
      break;
    case TemperedAtom::RhoSigma:
      out.add({HalfInt(0)}, 2);
      break;
  }
  return out;
}

int tail_word_length(TemperedAtom t) {
  switch (t) {
    case TemperedAtom::Sigma:
      return 0;
    case TemperedAtom::DeltaCuspHalf:
    case TemperedAtom::DeltaCuspOne:
    case TemperedAtom::RhoSigma:
      return 1;
    case TemperedAtom::TauPlus:
    case TemperedAtom::TauMinus:
      return 2;
  }
  return 0;
}

namespace {

void check_cap(const FormalSum& s, std::size_t cap) {
  if (cap && s.size() > cap) throw TermLimitExceeded(cap);
}

// Applies one (signs, reversals, shuffle-pattern) block of a lemma formula.
void accumulate_term(const FormalSum& input, const std::vector<int>& signs,
                     const std::vector<Perm>& reversals, const ShufflePattern& pattern,
                     FormalSum& out, std::size_t cap) {
  Word scratch;
  for (const auto& [w, c] : input.terms()) {
    Word v = apply_sign(signs, w);
    for (const Perm& z : reversals) v = apply_perm(z, v);
    for_each_shuffle(pattern, [&](const Perm& s) {
      scratch.resize(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) scratch[s.images[i]] = v[i];
      out.add(scratch, c);
    });
    check_cap(out, cap);
  }
}

// Bulk path for the shuffle sums.  Words here are short (K <= 16) with tiny
// exponents, so each output word packs into a fixed 16-byte key that sorts
// exactly like the word itself; folding is then one flat sort plus a scan,
// avoiding a heap allocation and an ordered-map insert per generated term.
struct PackedTerm {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  long long c = 0;
};

bool packable(const FormalSum& input, int K) {
  if (K > 16) return false;
  constexpr long long kCoeffCap = 1LL << 31;
  for (const auto& [w, c] : input.terms()) {
    for (const auto& e : w)
      if (e.twice < -120 || e.twice > 120) return false;
    if (c > kCoeffCap || c < -kCoeffCap) return false;
  }
  return true;
}

void pack_set(PackedTerm& t, std::size_t pos, int twice) {
  auto byte = static_cast<std::uint64_t>(twice + 128);
  if (pos < 8)
    t.hi |= byte << (8 * (7 - pos));
  else
    t.lo |= byte << (8 * (15 - pos));
}

void accumulate_packed(const FormalSum& input, const std::vector<int>& signs,
                       const std::vector<Perm>& reversals, const ShufflePattern& pattern,
                       std::vector<PackedTerm>& raw) {
  for (const auto& [w, c] : input.terms()) {
    Word v = apply_sign(signs, w);
    for (const Perm& z : reversals) v = apply_perm(z, v);
    long long cc = c.convert_to<long long>();
    for_each_shuffle(pattern, [&](const Perm& s) {
      PackedTerm t;
      t.c = cc;
      for (std::size_t i = 0; i < v.size(); ++i) pack_set(t, s.images[i], v[i].twice);
      raw.push_back(t);
    });
  }
}

FormalSum fold_packed(std::vector<PackedTerm>& raw, int K) {
  std::sort(raw.begin(), raw.end(), [](const PackedTerm& a, const PackedTerm& b) {
    return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
  });
  FormalSum out;
  std::size_t i = 0;
  while (i < raw.size()) {
    long long c = raw[i].c;
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].hi == raw[i].hi && raw[j].lo == raw[i].lo) c += raw[j++].c;
    if (c != 0) {
      Word w(K);
      for (int pos = 0; pos < K; ++pos) {
        std::uint64_t word = pos < 8 ? raw[i].hi : raw[i].lo;
        auto byte = (word >> (8 * (pos < 8 ? 7 - pos : 15 - pos))) & 0xff;
        w[pos] = HalfInt::from_twice(static_cast<int>(byte) - 128);
      }
      out.append_sorted(std::move(w), Int(c));
    }
    i = j;
  }
  return out;
}

// Uncapped fallback when words do not pack: defers folding to one collect.
void accumulate_raw(const FormalSum& input, const std::vector<int>& signs,
                    const std::vector<Perm>& reversals, const ShufflePattern& pattern,
                    std::vector<std::pair<Word, Int>>& raw) {
  for (const auto& [w, c] : input.terms()) {
    Word v = apply_sign(signs, w);
    for (const Perm& z : reversals) v = apply_perm(z, v);
    for_each_shuffle(pattern, [&](const Perm& s) {
      Word u(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) u[s.images[i]] = v[i];
      raw.emplace_back(std::move(u), c);
    });
  }
}

}  // namespace

FormalSum jacquet_case1(int p, int K, const FormalSum& input, std::size_t max_terms) {
  if (p < 0 || p > K) throw std::invalid_argument("jacquet_case1 needs 0 <= p <= K");
  for (const auto& [w, c] : input.terms())
    if (static_cast<int>(w.size()) != K) throw std::invalid_argument("input word length != K");
  const bool packed = max_terms == 0 && packable(input, K);
  std::vector<PackedTerm> praw;
  std::vector<std::pair<Word, Int>> raw;
  FormalSum out;
  for (int q = 0; q <= p; ++q) {
    std::vector<int> signs;
    signs.insert(signs.end(), p - q, 1);
    signs.insert(signs.end(), q, -1);
    signs.insert(signs.end(), K - p, 1);
    ShufflePattern pattern{{p - q, p, K}};
    std::vector<Perm> zs{z_perm(p - q + 1, p, K)};
    if (packed)
      accumulate_packed(input, signs, zs, pattern, praw);
    else if (max_terms == 0)
      accumulate_raw(input, signs, zs, pattern, raw);
    else
      accumulate_term(input, signs, zs, pattern, out, max_terms);
  }
  if (packed) return fold_packed(praw, K);
  if (max_terms == 0) return FormalSum::collect(std::move(raw));
  return out;
}

FormalSum jacquet_case2(int p, int K, const FormalSum& input, std::size_t max_terms) {
  if (p < 0 || p > K) throw std::invalid_argument("jacquet_case2 needs 0 <= p <= K");
  for (const auto& [w, c] : input.terms())
    if (static_cast<int>(w.size()) != K) throw std::invalid_argument("input word length != K");
  const bool packed = max_terms == 0 && packable(input, K);
  std::vector<PackedTerm> praw;
  std::vector<std::pair<Word, Int>> raw;
  FormalSum out;
  for (int q = 0; q <= p; ++q) {
    for (int r = 0; r <= K - p; ++r) {
      std::vector<int> signs;
      signs.insert(signs.end(), p - q, 1);
      signs.insert(signs.end(), q, -1);
      signs.insert(signs.end(), K - p - r, 1);
      signs.insert(signs.end(), r, -1);
      ShufflePattern pattern{{p - q, p, K - r, K}};
      std::vector<Perm> zs{z_perm(p - q + 1, p, K), z_perm(K - r + 1, K, K)};
      if (packed)
        accumulate_packed(input, signs, zs, pattern, praw);
      else if (max_terms == 0)
        accumulate_raw(input, signs, zs, pattern, raw);
      else
        accumulate_term(input, signs, zs, pattern, out, max_terms);
    }
  }
  if (packed) return fold_packed(praw, K);
  if (max_terms == 0) return FormalSum::collect(std::move(raw));
  return out;
}

FormalSum full_jacquet(const InducedExpr& e, const RhoSigmaContext& ctx, std::size_t max_terms) {
  if (e.blocks.empty()) return tail_jacquet(e.tail, ctx);

  InducedExpr rest_expr{{e.blocks.begin() + 1, e.blocks.end()}, e.tail};
  FormalSum rest = full_jacquet(rest_expr, ctx, max_terms);

  std::vector<TwistedRho> head = min_word(e.blocks.front());
  const int p = static_cast<int>(head.size());
  int rest_len = 0;
  if (!rest.empty()) rest_len = static_cast<int>(rest.terms().begin()->first.size());
  const int K = p + rest_len;

  FormalSum glued;
  for (const auto& [w, c] : rest.terms()) {
    Word v;
    v.reserve(K);
    for (const auto& f : head) v.push_back(f.exponent);
    v.insert(v.end(), w.begin(), w.end());
    glued.add(v, c);
  }
  return jacquet_case1(p, K, glued, max_terms);
}

Int multiplicity(const Word& w, const FormalSum& s) { return s.coeff(w); }

std::set<Word> move_closure(const std::set<Word>& seed, const RhoSigmaContext& ctx) {
  std::set<Word> closed = seed;
  std::deque<Word> queue(seed.begin(), seed.end());
  auto visit = [&](Word w) {
    if (closed.insert(w).second) queue.push_back(std::move(w));
  };
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    // swap adjacent unlinked factors
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if ((w[i] - w[i + 1]).abs() == HalfInt(1)) continue;
      Word v = w;
      std::swap(v[i], v[i + 1]);
      visit(std::move(v));
    }
    // flip the last factor when nu^e rho x| sigma is irreducible
    if (!w.empty() && w.back().abs() != ctx.alpha) {
      Word v = w;
      v.back() = -v.back();
      visit(std::move(v));
    }
  }
  return closed;
}

FormalSum dual_sum(const FormalSum& s) {
  FormalSum out;
  for (const auto& [w, c] : s.terms()) {
    Word v = w;
    for (auto& e : v) e = -e;
    out.add(v, c);
  }
  return out;
}

}  // namespace aubert
