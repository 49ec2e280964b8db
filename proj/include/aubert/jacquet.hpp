#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aubert/segments.hpp"

namespace aubert {

using Int = boost::multiprecision::cpp_int;

// Cuspidal tensor word rho_1 (x) ... (x) rho_K (x) sigma; all factors are
// twists of the one rho of the context, so a word is its exponent list.
using Word = std::vector<HalfInt>;

// Integer-coefficient formal sum of words in the Grothendieck group.
// Terms are kept in lexicographic order; zero coefficients are dropped.
class FormalSum {
 public:
  void add(const Word& w, const Int& c);
  // Folds raw (word, coeff) pairs, repeats allowed in any order.  One sort
  // plus a linear pass; much faster than repeated add() for bulk input.
  static FormalSum collect(std::vector<std::pair<Word, Int>>&& raw);
  // Appends a term known to sort strictly after every existing one.
  void append_sorted(Word&& w, Int&& c);
  const Int& coeff(const Word& w) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::map<Word, Int>& terms() const { return terms_; }

  bool operator==(const FormalSum&) const = default;

 private:
  std::map<Word, Int> terms_;
};

// Ordered product of GL atoms over a tempered tail.
struct InducedExpr {
  std::vector<GLAtom> blocks;
  TemperedAtom tail = TemperedAtom::Sigma;
};

// Nondecreasing cuts (n_1, ..., n_q = K) defining the sets
// {1..n_1}, {n_1+1..n_2}, ...
struct ShufflePattern {
  std::vector<int> cuts;

  void validate() const;
  int total() const { return cuts.empty() ? 0 : cuts.back(); }
  std::vector<int> block_sizes() const;
};

// Permutation of {1..K}; images[i] is the (0-based) target of position i.
struct Perm {
  std::vector<int> images;

  static Perm identity(int K);
  int size() const { return static_cast<int>(images.size()); }
  bool operator==(const Perm&) const = default;
};

// Visits every order-preserving interleaving of the pattern's sets.
void for_each_shuffle(const ShufflePattern& p, const std::function<void(const Perm&)>& fn);

std::vector<Perm> enumerate_shuffles(const ShufflePattern& p);

Int shuffle_count(const ShufflePattern& p);

// Reversal of positions k..l (1-based), identity if k > l.
Perm z_perm(int k, int l, int K);

// Factor i with sign -1 is replaced by its contragredient nu^-e rho.
Word apply_sign(const std::vector<int>& signs, const Word& w);

// Push-forward: the factor at position i moves to position p(i).
Word apply_perm(const Perm& p, const Word& w);

// Minimal-Levi Jacquet module of a tempered tail (registry).
FormalSum tail_jacquet(TemperedAtom t, const RhoSigmaContext& ctx);

// Word count of the tail's Jacquet terms (0 for Sigma, 1 for ds, 2 for tau/rho*sigma).
int tail_word_length(TemperedAtom t);

// Sum_{q=0}^{p} Sh_{(p-q,p,K)} z_{(p-q+1,p)} (1_{p-q}, -1_q, 1_{K-p}) applied
// to the input, epsilon first, then z, then each shuffle.
FormalSum jacquet_case1(int p, int K, const FormalSum& input, std::size_t max_terms = 0);

// Double sum over q in [0,p], r in [0,K-p] with the two reversals and the
// sign vector (1_{p-q}, -1_q, 1_{K-p-r}, -1_r).
FormalSum jacquet_case2(int p, int K, const FormalSum& input, std::size_t max_terms = 0);

// Full Jacquet restriction to the minimal Levi: recursive peeling of the
// leftmost block via jacquet_case1 over the tail registry.
FormalSum full_jacquet(const InducedExpr& e, const RhoSigmaContext& ctx, std::size_t max_terms = 0);

Int multiplicity(const Word& w, const FormalSum& s);

// Closure of seed under commuting swaps of unlinked adjacent factors and
// flipping the last factor when |e| != alpha.
std::set<Word> move_closure(const std::set<Word>& seed, const RhoSigmaContext& ctx);

// Word-level Aubert dual: every exponent negated, order and coefficients kept.
FormalSum dual_sum(const FormalSum& s);

struct TermLimitExceeded : std::runtime_error {
  explicit TermLimitExceeded(std::size_t cap)
      : std::runtime_error("formal sum exceeded term cap " + std::to_string(cap)) {}
};

}  // namespace aubert
