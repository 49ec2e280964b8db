#include "aubert/duality.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace aubert {

namespace {

void append_background_a(AParameter& psi, const RhoSigmaContext& ctx) {
  for (const auto& l : ctx.sigma.background) psi.summands.push_back({l, 1, 1});
}

void append_background_l(LParameter& phi, const RhoSigmaContext& ctx) {
  for (const auto& l : ctx.sigma.background) phi.summands.push_back({l, HalfInt(0), 1});
}

AParameter one_plus_background(int m1, int n1, const RhoSigmaContext& ctx) {
  AParameter psi;
  psi.summands.push_back({ctx.phi, m1, n1});
  append_background_a(psi, ctx);
  psi.canonicalize();
  return psi;
}

AParameter two_plus_background(int n1, int n2, const RhoSigmaContext& ctx) {
  AParameter psi;
  psi.summands.push_back({ctx.phi, 1, n1});
  psi.summands.push_back({ctx.phi, 1, n2});
  append_background_a(psi, ctx);
  psi.canonicalize();
  return psi;
}

}  // namespace

AParameter input_parameter(int k, const RhoSigmaContext& ctx) {
  if (k < 1) throw std::invalid_argument("input parameter needs k >= 1");
  return one_plus_background(k, 2, ctx);
}

DualOutcome theorem_dual(int k, const RhoSigmaContext& ctx) {
  if (k < 1) throw std::invalid_argument("theorem_dual needs k >= 1");
  ctx.validate();
  const bool even = k % 2 == 0;

  if (ctx.alpha == HalfInt::half()) {
    if (even) return {two_plus_background(k + 1, k - 1, ctx)};
    return {one_plus_background(2, k, ctx)};
  }

  if (ctx.alpha == HalfInt(0)) {
    if (k == 1) return {input_parameter(k, ctx)};
    if (!even) return {two_plus_background(k + 1, k - 1, ctx)};
    return {one_plus_background(2, k, ctx)};
  }

  // alpha = 1
  if (k == 1) return {input_parameter(k, ctx)};
  if (!even) return {two_plus_background(k + 1, k - 1, ctx)};
  // k = 2m even: L-parameter (V)
  const int m = k / 2;
  LParameter phi;
  for (int tj = 3; tj <= 2 * m - 1; tj += 2) {
    phi.summands.push_back({ctx.phi, HalfInt::from_twice(tj), 2});
    phi.summands.push_back({ctx.phi, HalfInt::from_twice(-tj), 2});
  }
  phi.summands.push_back({ctx.phi, HalfInt(0), 3});
  phi.summands.push_back({ctx.phi, HalfInt(0), 1});
  append_background_l(phi, ctx);
  phi.canonicalize();
  if (auto psi = l_is_image_of_a(phi)) return {*psi};
  return {phi};
}

std::optional<LanglandsData> dual_langlands_data(int k, const RhoSigmaContext& ctx) {
  if (k < 1) throw std::invalid_argument("dual_langlands_data needs k >= 1");
  ctx.validate();
  LanglandsData d;

  if (ctx.alpha == HalfInt::half()) {
    if (k % 2 == 0) {
      // L_s(nu^-m rho, nu^-m+1 rho, nu^-m+1 rho, ..., nu^-1 rho, nu^-1 rho, rho x| sigma)
      const int m = k / 2;
      d.gl_entries.push_back(GLAtom::single(HalfInt(-m)));
      for (int j = m - 1; j >= 1; --j) {
        d.gl_entries.push_back(GLAtom::single(HalfInt(-j)));
        d.gl_entries.push_back(GLAtom::single(HalfInt(-j)));
      }
      d.tail = TemperedAtom::RhoSigma;
    } else {
      // L_s(delta[nu^-m-1/2, nu^-m+1/2], ..., delta[nu^-3/2, nu^-1/2], ds(1/2))
      const int m = (k - 1) / 2;
      if (m >= 1)
        d.gl_entries.push_back(GLAtom::delta(HalfInt::from_twice(-2 * m - 1),
                                             HalfInt::from_twice(-2 * m + 1)));
      for (int t = -2 * m + 1; t <= -3; t += 2)
        d.gl_entries.push_back(GLAtom::delta(HalfInt::from_twice(t), HalfInt::from_twice(t + 2)));
      d.tail = TemperedAtom::DeltaCuspHalf;
    }
    d.validate();
    return d;
  }

  if (ctx.alpha == HalfInt(0)) {
    if (k % 2 != 0) return std::nullopt;  // only the parameter is recorded in this case
    const int M = k / 2;
    for (int j = M; j >= 1; --j)
      d.gl_entries.push_back(GLAtom::delta(HalfInt(-j), HalfInt(-j + 1)));
    d.tail = TemperedAtom::Sigma;
    d.validate();
    return d;
  }

  // alpha = 1
  if (k % 2 != 0) {
    // L_s(nu^-m-1/2 rho, nu^-m+1/2 rho, nu^-m+1/2 rho, ..., nu^-1/2 rho, nu^-1/2 rho, sigma)
    const int m = (k - 1) / 2;
    d.gl_entries.push_back(GLAtom::single(HalfInt::from_twice(-2 * m - 1)));
    for (int j = m - 1; j >= 0; --j) {
      d.gl_entries.push_back(GLAtom::single(HalfInt::from_twice(-2 * j - 1)));
      d.gl_entries.push_back(GLAtom::single(HalfInt::from_twice(-2 * j - 1)));
    }
    d.tail = TemperedAtom::Sigma;
  } else {
    // L_s(delta[nu^-m, nu^-m+1], ..., delta[nu^-2, nu^-1], tau+)
    const int m = k / 2;
    for (int j = m - 1; j >= 1; --j)
      d.gl_entries.push_back(GLAtom::delta(HalfInt(-j - 1), HalfInt(-j)));
    d.tail = TemperedAtom::TauPlus;
  }
  d.validate();
  return d;
}

LParameter lparam_of_langlands(const LanglandsData& d, const RhoSigmaContext& ctx) {
  d.validate();
  check_tail(d.tail, ctx);
  LParameter phi;
  for (const auto& a : d.gl_entries) {
    HalfInt c = a.center();
    int m = a.seg.length();
    phi.summands.push_back({ctx.phi, c, m});
    phi.summands.push_back({ctx.phi, -c, m});
  }
  switch (d.tail) {
    case TemperedAtom::Sigma:
      break;
    case TemperedAtom::DeltaCuspHalf:
      phi.summands.push_back({ctx.phi, HalfInt(0), 2});
      break;
    case TemperedAtom::DeltaCuspOne:
      throw std::invalid_argument("no L-parameter registry entry for ds(1) tails");
    case TemperedAtom::TauPlus:
    case TemperedAtom::TauMinus:
      phi.summands.push_back({ctx.phi, HalfInt(0), 3});
      phi.summands.push_back({ctx.phi, HalfInt(0), 1});
      break;
    case TemperedAtom::RhoSigma:
      phi.summands.push_back({ctx.phi, HalfInt(0), 1});
      phi.summands.push_back({ctx.phi, HalfInt(0), 1});
      break;
  }
  append_background_l(phi, ctx);
  phi.canonicalize();
  return phi;
}

StandardModuleStatus standard_module_status(int k, const RhoSigmaContext& ctx) {
  if (k < 1) throw std::invalid_argument("standard_module_status needs k >= 1");
  const bool even = k % 2 == 0;
  const bool irr = (ctx.alpha == HalfInt::half()) ? even : !even;
  return irr ? StandardModuleStatus::Irreducible : StandardModuleStatus::Reducible;
}

bool symmetry_verdict(int k, const RhoSigmaContext& ctx) {
  DualOutcome dual = theorem_dual(k, ctx);
  if (!dual.is_a_param()) return false;
  return is_symmetric_pair(input_parameter(k, ctx), dual.a_param());
}

bool VerifyReport::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

namespace {

Word glue(const std::vector<std::vector<TwistedRho>>& parts) {
  Word w;
  for (const auto& part : parts)
    for (const auto& f : part) w.push_back(f.exponent);
  return w;
}

// One multiplicity claim: either a single-word coefficient lookup or an
// exact comparison against a whole expected sum.
struct ClaimJob {
  std::string claim;
  int m = 0;
  InducedExpr expr;
  Word target;
  std::optional<FormalSum> expect_sum;
};

ClaimResult run_claim(const ClaimJob& job, const RhoSigmaContext& ctx, std::size_t max_terms) {
  ClaimResult res;
  res.claim = job.claim;
  res.m = job.m;
  auto t0 = std::chrono::steady_clock::now();
  FormalSum jac = full_jacquet(job.expr, ctx, max_terms);
  auto t1 = std::chrono::steady_clock::now();
  res.terms = jac.size();
  res.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  if (job.expect_sum)
    res.got = (jac == *job.expect_sum) ? 1 : 0;
  else
    res.got = multiplicity(job.target, jac);
  res.pass = res.got == res.expected;
  return res;
}

// The half case: the chained-deltas and split-singles modules plus the two displays.
void verify_half(int m_max, std::vector<ClaimJob>& jobs) {
  for (int m = 1; m <= m_max; ++m) {
    std::vector<GLAtom> chain;  // delta[nu^-m+1/2, nu^-m+3/2], ..., delta[nu^-3/2, nu^-1/2]
    for (int t = -2 * m + 1; t <= -3; t += 2)
      chain.push_back(GLAtom::delta(HalfInt::from_twice(t), HalfInt::from_twice(t + 2)));

    // Pi_0'': leading word of the corollary data
    std::vector<std::vector<TwistedRho>> parts;
    parts.push_back({{HalfInt::from_twice(-2 * m + 1)}, {HalfInt::from_twice(-2 * m - 1)}});
    for (const auto& a : chain) parts.push_back(min_word(a));
    parts.push_back({{HalfInt::half()}});
    Word pi0pp = glue(parts);

    InducedExpr pi_pp;
    pi_pp.blocks.push_back(
        GLAtom::delta(HalfInt::from_twice(-2 * m - 1), HalfInt::from_twice(-2 * m + 1)));
    pi_pp.blocks.insert(pi_pp.blocks.end(), chain.begin(), chain.end());
    pi_pp.tail = TemperedAtom::DeltaCuspHalf;
    jobs.push_back({"lemma4.3", m, pi_pp, pi0pp, std::nullopt});

    InducedExpr pi_ppp;
    pi_ppp.blocks.push_back(GLAtom::single(HalfInt::from_twice(-2 * m + 1)));
    pi_ppp.blocks.push_back(GLAtom::single(HalfInt::from_twice(-2 * m - 1)));
    pi_ppp.blocks.insert(pi_ppp.blocks.end(), chain.begin(), chain.end());
    pi_ppp.tail = TemperedAtom::DeltaCuspHalf;
    jobs.push_back({"lemma4.4", m, pi_ppp, pi0pp, std::nullopt});

    // Display (C): Pi = nu^{m-1/2} rho x delta[nu^{-m-1/2}, nu^{m-3/2}] x| sigma
    InducedExpr pi_c;
    pi_c.blocks.push_back(GLAtom::single(HalfInt::from_twice(2 * m - 1)));
    pi_c.blocks.push_back(
        GLAtom::delta(HalfInt::from_twice(-2 * m - 1), HalfInt::from_twice(2 * m - 3)));
    Word pi0 = glue({min_word(pi_c.blocks[0]), min_word(pi_c.blocks[1])});
    jobs.push_back({"displayC", m, pi_c, pi0, std::nullopt});

    // Display (D): Pi' = nu^{m+1/2} rho x delta[nu^{-m+1/2}, nu^{m-3/2}] x| sigma
    InducedExpr pi_d;
    pi_d.blocks.push_back(GLAtom::single(HalfInt::from_twice(2 * m + 1)));
    pi_d.blocks.push_back(
        GLAtom::delta(HalfInt::from_twice(-2 * m + 1), HalfInt::from_twice(2 * m - 3)));
    Word pi0p = glue({min_word(pi_d.blocks[0]), min_word(pi_d.blocks[1])});
    jobs.push_back({"displayD", m, pi_d, pi0p, std::nullopt});
  }
}

void verify_zero(int m_max, std::vector<ClaimJob>& jobs) {
  for (int m = 1; m <= m_max; ++m) {
    InducedExpr pi;
    pi.blocks.push_back(GLAtom::single(HalfInt(m)));
    pi.blocks.push_back(GLAtom::delta(HalfInt(-m - 1), HalfInt(m - 1)));
    Word pi0 = glue({min_word(pi.blocks[0]), min_word(pi.blocks[1])});
    jobs.push_back({"th5.1-Pi0", m, pi, pi0, std::nullopt});

    InducedExpr pip;
    pip.blocks.push_back(GLAtom::single(HalfInt(m + 1)));
    pip.blocks.push_back(GLAtom::delta(HalfInt(-m), HalfInt(m - 1)));
    Word pi0p = glue({min_word(pip.blocks[0]), min_word(pip.blocks[1])});
    jobs.push_back({"th5.1-Pi0'", m, pip, pi0p, std::nullopt});
  }
}

void verify_one(int m_max, std::vector<ClaimJob>& jobs) {
  // golden three-term decomposition check
  {
    InducedExpr e;
    e.blocks.push_back(GLAtom::delta(HalfInt(-1), HalfInt(0)));
    FormalSum expected;
    expected.add({HalfInt(0), HalfInt(-1)}, 1);
    expected.add({HalfInt(0), HalfInt(1)}, 1);
    expected.add({HalfInt(1), HalfInt(0)}, 2);
    jobs.push_back({"eqS", 1, e, {}, expected});
  }

  // Th 6.1 proof: Pi_0 in Pi with tail tau, multiplicity one, for each m
  for (int m = 1; m <= m_max; ++m) {
    InducedExpr pi;
    pi.blocks.push_back(GLAtom::single(HalfInt(-m)));
    pi.blocks.push_back(GLAtom::single(HalfInt(-m - 1)));
    for (int j = m - 1; j >= 1; --j)
      pi.blocks.push_back(GLAtom::delta(HalfInt(-j - 1), HalfInt(-j)));
    pi.tail = TemperedAtom::TauPlus;

    std::vector<std::vector<TwistedRho>> parts;
    for (const auto& b : pi.blocks) parts.push_back(min_word(b));
    parts.push_back({{HalfInt(0)}, {HalfInt(1)}});
    jobs.push_back({"th6.1-Pi0", m, pi, glue(parts), std::nullopt});
  }
}

}  // namespace

VerifyReport verify_multiplicity_claims(int m_max, const RhoSigmaContext& ctx,
                                        std::size_t max_terms, int threads) {
  if (m_max < 1) throw std::invalid_argument("verify needs m_max >= 1");
  ctx.validate();
  std::vector<ClaimJob> jobs;
  if (ctx.alpha == HalfInt::half())
    verify_half(m_max, jobs);
  else if (ctx.alpha == HalfInt(0))
    verify_zero(m_max, jobs);
  else
    verify_one(m_max, jobs);

  VerifyReport rep;
  rep.claims.resize(jobs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) rep.claims[i] = run_claim(jobs[i], ctx, max_terms);
    return rep;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        rep.claims[i] = run_claim(jobs[i], ctx, max_terms);
      }
    });
  for (auto& th : pool) th.join();
  return rep;
}

}  // namespace aubert
