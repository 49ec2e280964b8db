#include "aubert/segments.hpp"

#include <stdexcept>

namespace aubert {

void RhoSigmaContext::validate() const {
  if (!rho.self_dual) throw std::invalid_argument("context requires self-dual rho");
  if (alpha != HalfInt(0) && alpha != HalfInt::half() && alpha != HalfInt(1))
    throw std::invalid_argument("alpha must be 0, 1/2 or 1");
  if (rho.gl_size && phi.dim && *rho.gl_size != *phi.dim)
    throw std::invalid_argument("dim(phi) must equal the GL size of rho");
  if (sigma.so_rank) {
    int total = 0;
    bool known = true;
    for (const auto& l : sigma.background) {
      if (!l.dim) { known = false; break; }
      total += *l.dim;
    }
    if (known && total != 2 * *sigma.so_rank)
      throw std::invalid_argument("background dimensions must sum to 2*ell");
  }
}

RhoSigmaContext RhoSigmaContext::symbolic(HalfInt alpha) {
  RhoSigmaContext ctx;
  ctx.alpha = alpha;
  ctx.phi = {"phi", std::nullopt, true};
  ctx.sigma.background = {{"bg", std::nullopt, true}};
  ctx.validate();
  return ctx;
}

void Segment::validate() const {
  if (lo > hi) throw std::invalid_argument("segment needs lo <= hi");
  if ((hi - lo).twice % 2 != 0) throw std::invalid_argument("segment endpoints must differ by an integer");
}

void GLAtom::validate() const {
  seg.validate();
  if (kind == Kind::Single && seg.lo != seg.hi)
    throw std::invalid_argument("single atom must have lo == hi");
}

void check_tail(TemperedAtom t, const RhoSigmaContext& ctx) {
  switch (t) {
    case TemperedAtom::Sigma:
      return;
    case TemperedAtom::DeltaCuspHalf:
      if (ctx.alpha != HalfInt::half()) throw std::invalid_argument("ds(1/2) requires alpha = 1/2");
      return;
    case TemperedAtom::DeltaCuspOne:
      if (ctx.alpha != HalfInt(1)) throw std::invalid_argument("ds(1) requires alpha = 1");
      return;
    case TemperedAtom::TauPlus:
    case TemperedAtom::TauMinus:
      if (ctx.alpha != HalfInt(1)) throw std::invalid_argument("tau tails require alpha = 1");
      return;
    case TemperedAtom::RhoSigma:
      if (ctx.alpha != HalfInt::half()) throw std::invalid_argument("rho*sigma tail requires alpha = 1/2");
      return;
  }
}

void LanglandsData::validate() const {
  HalfInt prev = HalfInt::from_twice(-1 << 20);
  for (const auto& a : gl_entries) {
    a.validate();
    HalfInt c = a.center();
    if (c >= HalfInt(0)) throw std::invalid_argument("Langlands entry centers must be strictly negative");
    if (c < prev) throw std::invalid_argument("Langlands entry centers must be nondecreasing");
    prev = c;
  }
}

HalfInt segment_center(const Segment& s) { return HalfInt::from_twice((s.lo + s.hi).twice / 2); }

Segment contragredient_segment(const Segment& s, const RhoSymbol& rho) {
  if (!rho.self_dual) throw std::invalid_argument("contragredient segment requires self-dual rho");
  return {-s.hi, -s.lo};
}

LanglandsData base_point(int k, const RhoSigmaContext& ctx) {
  if (k < 1) throw std::invalid_argument("base point needs k >= 1");
  (void)ctx;
  HalfInt lo = HalfInt::from_twice(-k);
  HalfInt hi = HalfInt::from_twice(k - 2);
  LanglandsData d;
  d.gl_entries.push_back(k == 1 ? GLAtom::single(lo) : GLAtom::delta(lo, hi));
  d.tail = TemperedAtom::Sigma;
  d.validate();
  return d;
}

std::vector<TwistedRho> min_word(const GLAtom& a) {
  std::vector<TwistedRho> w;
  for (int t = a.seg.hi.twice; t >= a.seg.lo.twice; t -= 2) w.push_back({HalfInt::from_twice(t)});
  return w;
}

std::optional<std::vector<TwistedRho>> leading_word(const LanglandsData& d) {
  std::vector<TwistedRho> w;
  for (const auto& a : d.gl_entries) {
    auto part = min_word(a);
    w.insert(w.end(), part.begin(), part.end());
  }
  switch (d.tail) {
    case TemperedAtom::Sigma:
      break;
    case TemperedAtom::DeltaCuspHalf:
      w.push_back({HalfInt::half()});
      break;
    case TemperedAtom::DeltaCuspOne:
      w.push_back({HalfInt(1)});
      break;
    case TemperedAtom::TauPlus:
      w.push_back({HalfInt(0)});
      w.push_back({HalfInt(1)});
      break;
    case TemperedAtom::TauMinus:
    case TemperedAtom::RhoSigma:
      // Jacquet module has no unique maximal term.
      return std::nullopt;
  }
  return w;
}

std::vector<LanglandsData> word_to_langlands_candidates(const std::vector<TwistedRho>& w,
                                                        const RhoSigmaContext& ctx) {
  (void)ctx;
  std::vector<LanglandsData> out;
  const std::size_t n = w.size();
  if (n == 0) {
    LanglandsData d;
    out.push_back(d);
    return out;
  }
  // Enumerate partitions of the word into consecutive runs; each run must
  // descend by 1 (it is the min_word of a segment) and the resulting data
  // must have strictly negative nondecreasing centers.
  const std::size_t masks = std::size_t{1} << (n - 1);
  for (std::size_t mask = 0; mask < masks; ++mask) {
    LanglandsData d;
    std::size_t start = 0;
    bool ok = true;
    HalfInt prev_center = HalfInt::from_twice(-1 << 20);
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool cut = (i == n - 1) || (mask >> i) & 1;
      if (i + 1 < n && !cut) {
        if (w[i + 1].exponent != w[i].exponent - HalfInt(1)) ok = false;
        continue;
      }
      if (!ok) break;
      HalfInt hi = w[start].exponent;
      HalfInt lo = w[i].exponent;
      GLAtom a = (start == i) ? GLAtom::single(lo) : GLAtom::delta(lo, hi);
      HalfInt c = a.center();
      if (c >= HalfInt(0) || c < prev_center) {
        ok = false;
        break;
      }
      prev_center = c;
      d.gl_entries.push_back(a);
      start = i + 1;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

}  // namespace aubert
