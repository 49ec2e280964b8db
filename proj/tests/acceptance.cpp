// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "aubert/duality.hpp"
#include "aubert/jacquet.hpp"
#include "aubert/params.hpp"
#include "aubert/parse.hpp"
#include "aubert/segments.hpp"

using namespace aubert;

namespace {

const RhoSigmaContext kHalf = RhoSigmaContext::symbolic(HalfInt::half());
const RhoSigmaContext kZero = RhoSigmaContext::symbolic(HalfInt(0));
const RhoSigmaContext kOne = RhoSigmaContext::symbolic(HalfInt(1));

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " " << number << ": " << label;
  if (!pass && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!pass) ++failures;
}

FormalSum eq_s_sum() {
  FormalSum s;
  s.add({HalfInt(0), HalfInt(-1)}, 1);
  s.add({HalfInt(0), HalfInt(1)}, 1);
  s.add({HalfInt(1), HalfInt(0)}, 2);
  return s;
}

Word glue_min_words(const InducedExpr& e) {
  Word w;
  for (const auto& b : e.blocks)
    for (const auto& f : min_word(b)) w.push_back(f.exponent);
  return w;
}

// ---------------------------------------------------------------------------

void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  FormalSum got = full_jacquet(parse_expr("d[-1,0] |x sigma"), kOne);
  auto t1 = std::chrono::steady_clock::now();
  double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  bool pass = got == eq_s_sum() && ms < 10.0;
  report(1, "three-term golden decomposition, exact and under 10 ms", pass,
         "ms=" + std::to_string(ms));
}

void criterion2and3() {
  VerifyReport rep = verify_multiplicity_claims(4, kHalf);
  bool l43 = true, l44 = true;
  double ms43 = 0, ms44 = 0;
  for (const auto& c : rep.claims) {
    if (c.claim == "lemma4.3") {
      l43 = l43 && c.pass;
      ms43 += c.ms;
    }
    if (c.claim == "lemma4.4") {
      l44 = l44 && c.pass;
      ms44 += c.ms;
    }
  }
  report(2, "multiplicity one in the chained-deltas module, m = 1..4", l43 && ms43 < 10000.0,
         "ms=" + std::to_string(ms43));
  report(3, "multiplicity one in the split-singles variant, m = 1..4", l44 && ms44 < 10000.0,
         "ms=" + std::to_string(ms44));
}

void criterion4() {
  bool pass = true;
  std::string detail;
  for (int m = 1; m <= 4 && pass; ++m) {
    InducedExpr pi;  // nu^{m-1/2} rho x d[-m-1/2, m-3/2] x| sigma
    pi.blocks.push_back(GLAtom::single(HalfInt::from_twice(2 * m - 1)));
    pi.blocks.push_back(
        GLAtom::delta(HalfInt::from_twice(-2 * m - 1), HalfInt::from_twice(2 * m - 3)));
    InducedExpr pip;  // nu^{m+1/2} rho x d[-m+1/2, m-3/2] x| sigma
    pip.blocks.push_back(GLAtom::single(HalfInt::from_twice(2 * m + 1)));
    pip.blocks.push_back(
        GLAtom::delta(HalfInt::from_twice(-2 * m + 1), HalfInt::from_twice(2 * m - 3)));
    for (const auto* e : {&pi, &pip}) {
      Word pi0 = glue_min_words(*e);
      FormalSum seed;
      seed.add(pi0, 1);
      int p = e->blocks[0].seg.length();
      int K = static_cast<int>(pi0.size());
      FormalSum via_case2 = jacquet_case2(p, K, seed);
      FormalSum via_peel = full_jacquet(*e, kHalf);
      if (via_case2 != via_peel) {
        pass = false;
        detail = "formula mismatch at m=" + std::to_string(m);
      }
      if (multiplicity(pi0, via_case2) != 1) {
        pass = false;
        detail = "multiplicity != 1 at m=" + std::to_string(m);
      }
    }
  }
  report(4, "distinguished-word multiplicities via the double-sum formula, m = 1..4", pass, detail);
}

void criterion5() {
  struct Row {
    const RhoSigmaContext* ctx;
    int k;
    const char* expect;
  };
  const std::vector<Row> table = {
      {&kHalf, 1, "A: bg + phi*S2*S1"},
      {&kHalf, 2, "A: bg + phi*S1*S1 + phi*S1*S3"},
      {&kHalf, 3, "A: bg + phi*S2*S3"},
      {&kHalf, 4, "A: bg + phi*S1*S3 + phi*S1*S5"},
      {&kHalf, 5, "A: bg + phi*S2*S5"},
      {&kHalf, 6, "A: bg + phi*S1*S5 + phi*S1*S7"},
      {&kHalf, 7, "A: bg + phi*S2*S7"},
      {&kHalf, 8, "A: bg + phi*S1*S7 + phi*S1*S9"},
      {&kZero, 1, "A: bg + phi*S1*S2"},
      {&kZero, 2, "A: bg + phi*S2*S2"},
      {&kZero, 3, "A: bg + phi*S1*S2 + phi*S1*S4"},
      {&kZero, 4, "A: bg + phi*S2*S4"},
      {&kZero, 5, "A: bg + phi*S1*S4 + phi*S1*S6"},
      {&kZero, 6, "A: bg + phi*S2*S6"},
      {&kZero, 7, "A: bg + phi*S1*S6 + phi*S1*S8"},
      {&kZero, 8, "A: bg + phi*S2*S8"},
      {&kOne, 1, "A: bg + phi*S1*S2"},
      {&kOne, 2, "A: bg + phi*S1*S1 + phi*S3*S1"},
      {&kOne, 3, "A: bg + phi*S1*S2 + phi*S1*S4"},
      {&kOne, 4, "L: bg + phi*S1 + nu^{-3/2} phi*S2 + nu^{3/2} phi*S2 + phi*S3"},
      {&kOne, 5, "A: bg + phi*S1*S4 + phi*S1*S6"},
      {&kOne, 6,
       "L: bg + phi*S1 + nu^{-5/2} phi*S2 + nu^{-3/2} phi*S2 + nu^{3/2} phi*S2 + "
       "nu^{5/2} phi*S2 + phi*S3"},
      {&kOne, 7, "A: bg + phi*S1*S6 + phi*S1*S8"},
      {&kOne, 8,
       "L: bg + phi*S1 + nu^{-7/2} phi*S2 + nu^{-5/2} phi*S2 + nu^{-3/2} phi*S2 + "
       "nu^{3/2} phi*S2 + nu^{5/2} phi*S2 + nu^{7/2} phi*S2 + phi*S3"},
  };
  bool pass = true;
  std::string detail;
  for (const auto& row : table) {
    if (print(theorem_dual(row.k, *row.ctx)) != row.expect) {
      pass = false;
      detail = "dual mismatch at alpha=" + row.ctx->alpha.str() + " k=" + std::to_string(row.k);
    }
    bool expect_sym = (row.ctx == &kHalf && row.k % 2 == 1) || (row.ctx == &kZero && row.k % 2 == 0);
    if (symmetry_verdict(row.k, *row.ctx) != expect_sym) {
      pass = false;
      detail = "symmetry mismatch at alpha=" + row.ctx->alpha.str() + " k=" + std::to_string(row.k);
    }
  }
  report(5, "24 hand-encoded dual parameters and symmetry verdicts", pass, detail);
}

void criterion6() {
  bool pass = true;
  std::string detail;
  for (int k = 1; k <= 8; ++k) {
    for (const auto* ctx : {&kHalf, &kZero, &kOne}) {
      auto d = dual_langlands_data(k, *ctx);
      if (!d) continue;
      DualOutcome dual = theorem_dual(k, *ctx);
      LParameter expect = dual.is_a_param() ? a_to_l(dual.a_param()) : dual.l_param();
      if (lparam_of_langlands(*d, *ctx) != expect) {
        pass = false;
        detail = "data/parameter mismatch at alpha=" + ctx->alpha.str() +
                 " k=" + std::to_string(k);
      }
    }
  }
  for (int m = 2; m <= 5; ++m) {
    DualOutcome dual = theorem_dual(2 * m, kOne);
    if (dual.is_a_param() || l_is_image_of_a(dual.l_param())) {
      pass = false;
      detail = "missing-summand family failed at m=" + std::to_string(m);
    }
  }
  DualOutcome m1 = theorem_dual(2, kOne);
  if (!m1.is_a_param() ||
      m1.a_param() != parse_a_parameter("phi*S3*S1 + phi*S1*S1 + bg", kOne)) {
    pass = false;
    detail = "m=1 special value wrong";
  }
  report(6, "dual data / dual parameter consistency and the non-image family", pass, detail);
}

// --- criterion 7 helpers ---

bool prop_round_trip() {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> mn(1, 5);
  std::uniform_int_distribution<int> which(0, 2);
  for (int i = 0; i < 1000; ++i) {
    AParameter psi;
    int c = count(rng);
    for (int s = 0; s < c; ++s) {
      PhiLabel label = kHalf.phi;
      if (which(rng) == 1) label = {"zeta", std::nullopt, true};
      if (which(rng) == 2) label = {"bg", std::nullopt, true};
      psi.summands.push_back({label, mn(rng), mn(rng)});
    }
    psi.canonicalize();
    auto back = l_is_image_of_a(a_to_l(psi));
    if (!back || *back != psi) return false;
  }
  return true;
}

// Exhaustive chain-partition search, independent of the greedy code path:
// tries every centered chain through the current maximal twist.
bool brute_force_chains(std::multiset<HalfInt> twists) {
  if (twists.empty()) return true;
  HalfInt top = *twists.rbegin();
  if (top < HalfInt(0)) return false;
  std::multiset<HalfInt> rest = twists;
  for (HalfInt j = top;; j = j - HalfInt(1)) {
    auto it = rest.find(j);
    if (it == rest.end()) return false;
    rest.erase(it);
    if (j == -top) break;
  }
  return brute_force_chains(rest);
}

bool prop_greedy_vs_brute() {
  // all twist multisets of size <= 8 drawn from {-3, -5/2, ..., 3}
  std::vector<HalfInt> values;
  for (int t = -6; t <= 6; ++t) values.push_back(HalfInt::from_twice(t));
  bool ok = true;
  std::vector<int> idx;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (!ok) return;
    if (left == 0) {
      LParameter phi;
      std::multiset<HalfInt> twists;
      for (int i : idx) {
        phi.summands.push_back({kHalf.phi, values[i], 1});
        twists.insert(values[i]);
      }
      phi.canonicalize();
      auto greedy = l_is_image_of_a(phi);
      if (greedy.has_value() != brute_force_chains(twists)) ok = false;
      if (greedy && a_to_l(*greedy) != phi) ok = false;
      return;
    }
    for (std::size_t i = start; i < values.size() && ok; ++i) {
      idx.push_back(static_cast<int>(i));
      rec(i, left - 1);
      idx.pop_back();
    }
  };
  for (std::size_t size = 1; size <= 8 && ok; ++size) rec(0, size);
  return ok;
}

bool prop_shuffle_counts() {
  auto factorial = [](int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  for (int K = 1; K <= 10; ++K) {
    for (int mask = 0; mask < (1 << (K - 1)); ++mask) {
      ShufflePattern pat;
      std::vector<int> sizes;
      int last = 0;
      for (int i = 1; i <= K; ++i)
        if (i == K || (mask >> (i - 1)) & 1) {
          pat.cuts.push_back(i);
          sizes.push_back(i - last);
          last = i;
        }
      Int multinomial = factorial(K);
      for (int sz : sizes) multinomial /= factorial(sz);
      if (shuffle_count(pat) != multinomial) return false;
      if (multinomial <= 50000) {
        Int seen = 0;
        for_each_shuffle(pat, [&](const Perm&) { ++seen; });
        if (seen != multinomial) return false;
      }
    }
  }
  return true;
}

bool prop_jacquet_shape() {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> nblocks(1, 3);
  std::uniform_int_distribution<int> lo(-2, 1);
  std::uniform_int_distribution<int> len(0, 1);
  std::uniform_int_distribution<int> tail(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    InducedExpr e;
    int nb = nblocks(rng);
    for (int b = 0; b < nb; ++b) {
      int l = lo(rng);
      e.blocks.push_back(GLAtom::delta(HalfInt(l), HalfInt(l + len(rng))));
    }
    const RhoSigmaContext* ctx = &kZero;
    if (tail(rng)) {
      e.tail = TemperedAtom::TauPlus;
      ctx = &kOne;
    }
    int K = 0;
    for (const auto& b : e.blocks) K += b.seg.length();
    K += tail_word_length(e.tail);
    FormalSum out = full_jacquet(e, *ctx);
    if (out.empty()) return false;
    std::multiset<HalfInt> ref;
    bool first = true;
    for (const auto& [w, c] : out.terms()) {
      if (w.size() != static_cast<std::size_t>(K)) return false;
      if (c <= 0) return false;
      std::multiset<HalfInt> abs;
      for (const auto& x : w) abs.insert(x.abs());
      if (first) {
        ref = abs;
        first = false;
      } else if (abs != ref) {
        return false;
      }
    }
  }
  return true;
}

bool prop_involutions() {
  std::mt19937 rng(88);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> mn(1, 5);
  std::uniform_int_distribution<int> tw(-6, 6);
  std::uniform_int_distribution<int> coeff(1, 9);
  for (int i = 0; i < 300; ++i) {
    AParameter psi;
    int c = count(rng);
    for (int s = 0; s < c; ++s) psi.summands.push_back({kHalf.phi, mn(rng), mn(rng)});
    psi.canonicalize();
    if (swap_sl2_copies(swap_sl2_copies(psi)) != psi) return false;

    FormalSum sum;
    for (int t = 0; t < 4; ++t) {
      Word w;
      int wl = count(rng);
      for (int j = 0; j < wl; ++j) w.push_back(HalfInt::from_twice(tw(rng)));
      sum.add(w, coeff(rng));
    }
    if (dual_sum(dual_sum(sum)) != sum) return false;
  }
  return true;
}

bool prop_parser_fuzz() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<int> mn(1, 9);
  std::uniform_int_distribution<int> tw(-7, 7);
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> tail(0, 5);
  const TemperedAtom tails[] = {TemperedAtom::Sigma,        TemperedAtom::DeltaCuspHalf,
                                TemperedAtom::DeltaCuspOne, TemperedAtom::TauPlus,
                                TemperedAtom::TauMinus,     TemperedAtom::RhoSigma};
  for (int i = 0; i < 500; ++i) {
    AParameter psi;
    int c = count(rng);
    for (int s = 0; s < c; ++s) psi.summands.push_back({kHalf.phi, mn(rng), mn(rng)});
    psi.canonicalize();
    if (parse_a_parameter(print(psi), kHalf) != psi) return false;

    LParameter phi;
    for (int s = 0; s < c; ++s) phi.summands.push_back({kHalf.phi, HalfInt::from_twice(tw(rng)), mn(rng)});
    phi.canonicalize();
    if (parse_l_parameter(print(phi), kHalf) != phi) return false;

    InducedExpr e;
    int nb = len(rng);
    for (int b = 0; b < nb; ++b) {
      HalfInt l = HalfInt::from_twice(tw(rng));
      e.blocks.push_back(GLAtom::delta(l, l + HalfInt(len(rng))));
    }
    e.tail = tails[tail(rng)];
    InducedExpr back = parse_expr(print(e));
    if (back.blocks != e.blocks || back.tail != e.tail) return false;

    Word w;
    int wl = len(rng);
    for (int j = 0; j < wl; ++j) w.push_back(HalfInt::from_twice(tw(rng)));
    if (parse_word(print(w)) != w) return false;
  }
  return true;
}

void criterion7() {
  struct Suite {
    const char* name;
    bool (*run)();
  };
  const Suite suites[] = {
      {"a:round-trip", prop_round_trip},   {"b:greedy-vs-brute", prop_greedy_vs_brute},
      {"c:shuffle-counts", prop_shuffle_counts}, {"d:jacquet-shape", prop_jacquet_shape},
      {"e:involutions", prop_involutions}, {"f:parser-fuzz", prop_parser_fuzz},
  };
  bool pass = true;
  std::string detail;
  for (const auto& s : suites) {
    if (!s.run()) {
      pass = false;
      detail += std::string(detail.empty() ? "" : ", ") + s.name;
    }
  }
  report(7, "property suites (a)-(f)", pass, detail);
}

void criterion8() {
  bool pass = true;
  std::string detail;
  std::set<Word> seed{{HalfInt(0), HalfInt(-1)}};
  auto closed = move_closure(seed, kZero);
  if (!closed.count({HalfInt(0), HalfInt(1)})) {
    pass = false;
    detail = "flip-last move missing";
  }
  // |e| = alpha blocks the flip; the linked pair blocks the swap
  std::set<Word> stuck{{HalfInt(0), HalfInt(1)}};
  if (move_closure(stuck, kOne) != stuck) {
    pass = false;
    detail = "flip not blocked at |e| = alpha";
  }
  std::set<Word> half_stuck{{HalfInt::half()}};
  if (move_closure(half_stuck, kHalf) != half_stuck) {
    pass = false;
    detail = "flip not blocked at |e| = 1/2";
  }
  report(8, "move-closure regressions", pass, detail);
}

void criterion9() {
  bool pass = true;
  std::string detail;
  FormalSum full = full_jacquet(parse_expr("d[-1,0] |x sigma"), kZero);
  FormalSum p;  // the base point's module inside it
  p.add({HalfInt(0), HalfInt(-1)}, 1);
  p.add({HalfInt(0), HalfInt(1)}, 1);
  for (const auto& [w, c] : p.terms())
    if (full.coeff(w) < c) {
      pass = false;
      detail = "submodule terms not contained in the induced module";
    }
  FormalSum q = dual_sum(p);
  std::vector<LanglandsData> found;
  for (const auto& [w, c] : q.terms()) {
    std::vector<TwistedRho> word;
    for (const auto& e : w) word.push_back({e});
    for (const auto& d : word_to_langlands_candidates(word, kZero)) found.push_back(d);
  }
  if (found.size() != 1 || found[0] != base_point(2, kZero)) {
    pass = false;
    detail = "dual words do not single out the base point";
  }
  report(9, "k = 2 endgame: the dual module points back at the base point", pass, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2and3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
