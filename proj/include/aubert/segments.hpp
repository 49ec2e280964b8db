#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aubert/halfint.hpp"
#include "aubert/params.hpp"

namespace aubert {

// rho: irreducible unitary supercuspidal representation of GL(n,F).
struct RhoSymbol {
  std::string name = "rho";
  std::optional<int> gl_size;
  bool self_dual = true;
};

// sigma: irreducible supercuspidal generic representation of SO(2l+1,F),
// with L-parameter (+)_{i in A} phi_i (x) S_1.
struct SigmaSymbol {
  std::string name = "sigma";
  std::optional<int> so_rank;
  std::vector<PhiLabel> background;
};

// The cuspidal pair with its reducibility point alpha in {0, 1/2, 1} and
// the L-parameter phi of rho.
struct RhoSigmaContext {
  RhoSymbol rho;
  SigmaSymbol sigma;
  HalfInt alpha;
  PhiLabel phi;

  void validate() const;

  // Default symbolic context: one opaque background block "bg", dims unknown.
  static RhoSigmaContext symbolic(HalfInt alpha);
};

// nu^exponent rho
struct TwistedRho {
  HalfInt exponent;
  auto operator<=>(const TwistedRho&) const = default;
};

// [nu^lo rho, nu^hi rho], lo <= hi, hi - lo integral.
struct Segment {
  HalfInt lo;
  HalfInt hi;

  void validate() const;
  int length() const { return (hi - lo).twice / 2 + 1; }
  auto operator<=>(const Segment&) const = default;
};

// A GL factor of an induced product: either nu^e rho or delta of a segment.
// Single atoms behave as length-1 segments throughout.
struct GLAtom {
  enum class Kind { Single, Delta };
  Kind kind = Kind::Single;
  Segment seg;  // Single: lo == hi == exponent

  static GLAtom single(HalfInt e) { return {Kind::Single, {e, e}}; }
  // a length-1 segment is the twisted cuspidal itself
  static GLAtom delta(HalfInt lo, HalfInt hi) {
    return {lo == hi ? Kind::Single : Kind::Delta, {lo, hi}};
  }

  HalfInt center() const { return HalfInt::from_twice((seg.lo + seg.hi).twice / 2); }
  void validate() const;
  auto operator<=>(const GLAtom&) const = default;
};

// Tempered tail of Langlands data.
enum class TemperedAtom {
  Sigma,         // sigma itself
  DeltaCuspHalf, // delta(nu^{1/2} rho; sigma), needs alpha = 1/2
  DeltaCuspOne,  // delta(nu rho; sigma), needs alpha = 1
  TauPlus,       // the subrep of rho x| delta(nu rho; sigma) with minimal Jacquet module
  TauMinus,      // the other (generic) subrep; needs alpha = 1
  RhoSigma,      // irreducible rho x| sigma, needs alpha = 1/2
};

// Checks the tail makes sense at the context's reducibility point.
void check_tail(TemperedAtom t, const RhoSigmaContext& ctx);

// Langlands data in subrepresentation convention: entry centers strictly
// negative and nondecreasing.
struct LanglandsData {
  std::vector<GLAtom> gl_entries;
  TemperedAtom tail = TemperedAtom::Sigma;

  void validate() const;
  bool operator==(const LanglandsData&) const = default;
};

HalfInt segment_center(const Segment& s);

// [nu^lo rho, nu^hi rho] -> [nu^-hi rho, nu^-lo rho]; requires rho self-dual.
Segment contragredient_segment(const Segment& s, const RhoSymbol& rho);

// Base point: L_s(delta[nu^{-k/2} rho, nu^{k/2-1} rho], sigma).
LanglandsData base_point(int k, const RhoSigmaContext& ctx);

// Descending enumeration of a delta block; a Single is its own word.
std::vector<TwistedRho> min_word(const GLAtom& a);

// Concatenation of min_words plus the tail's distinguished Jacquet word.
// TauMinus and RhoSigma tails have no unique maximal term; nullopt.
std::optional<std::vector<TwistedRho>> leading_word(const LanglandsData& d);

// All valid Langlands data (tail Sigma) whose leading word equals w.
std::vector<LanglandsData> word_to_langlands_candidates(const std::vector<TwistedRho>& w,
                                                        const RhoSigmaContext& ctx);

}  // namespace aubert
