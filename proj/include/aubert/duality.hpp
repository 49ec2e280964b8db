#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aubert/jacquet.hpp"
#include "aubert/params.hpp"
#include "aubert/segments.hpp"

namespace aubert {

// Result of applying the involution at the parameter level: either a genuine
// A-parameter, or only an L-parameter when it is not the image of one.
struct DualOutcome {
  std::variant<AParameter, LParameter> value;

  bool is_a_param() const { return std::holds_alternative<AParameter>(value); }
  const AParameter& a_param() const { return std::get<AParameter>(value); }
  const LParameter& l_param() const { return std::get<LParameter>(value); }
};

enum class StandardModuleStatus { Irreducible, Reducible };

// psi = phi (x) S_k (x) S_2 (+) background.
AParameter input_parameter(int k, const RhoSigmaContext& ctx);

// The theorem case table for the dual parameter, keyed on (alpha, parity of k).
DualOutcome theorem_dual(int k, const RhoSigmaContext& ctx);

// Explicit dual Langlands data where the corollaries give it; nullopt where
// only the parameter is known (alpha = 0, k odd).
std::optional<LanglandsData> dual_langlands_data(int k, const RhoSigmaContext& ctx);

// L-parameter of Langlands data: each delta[nu^a, nu^b] contributes the pair
// |.|^{+-(a+b)/2} phi (x) S_{b-a+1}; the tail contributes per registry.
LParameter lparam_of_langlands(const LanglandsData& d, const RhoSigmaContext& ctx);

// Tadic irreducibility of the standard module inducing the base point.
StandardModuleStatus standard_module_status(int k, const RhoSigmaContext& ctx);

// True iff the dual outcome is an A-parameter equal to the swapped input.
bool symmetry_verdict(int k, const RhoSigmaContext& ctx);

struct ClaimResult {
  std::string claim;
  int m = 0;
  Int expected = 1;
  Int got = 0;
  bool pass = false;
  std::size_t terms = 0;
  double ms = 0.0;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const;
};

// Rebuilds the proofs' induced expressions and distinguished words for each
// m <= m_max in the family selected by ctx.alpha and checks every
// multiplicity-one claim by direct computation.  Claims are independent and
// run on `threads` workers when threads > 1; report order is fixed.
VerifyReport verify_multiplicity_claims(int m_max, const RhoSigmaContext& ctx,
                                        std::size_t max_terms = 0, int threads = 1);

}  // namespace aubert
