#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aubert/halfint.hpp"

namespace aubert {

// Opaque Weil-factor label.  dim is the dimension of the factor; it may be
// unknown (symbolic), in which case total-dimension checks are skipped.
struct PhiLabel {
  std::string name;
  std::optional<int> dim;
  bool self_dual = true;

  auto operator<=>(const PhiLabel&) const = default;
};

// phi (x) S_m (x) S_n
struct AParSummand {
  PhiLabel label;
  int m = 1;
  int n = 1;

  auto operator<=>(const AParSummand&) const = default;
};

// |.|^twist phi (x) S_m
struct LParSummand {
  PhiLabel label;
  HalfInt twist;
  int m = 1;

  auto operator<=>(const LParSummand&) const = default;
};

// Multiset of summands, kept in canonical sorted order.
struct AParameter {
  std::vector<AParSummand> summands;

  void canonicalize();
  void validate() const;  // m,n >= 1; even total dimension when dims known
  std::optional<int> total_dim() const;
  bool operator==(const AParameter&) const = default;
};

struct LParameter {
  std::vector<LParSummand> summands;

  void canonicalize();
  void validate() const;
  std::optional<int> total_dim() const;
  bool operator==(const LParameter&) const = default;
};

// Centered expansion: (phi, m, n) -> { |.|^j phi (x) S_m : j = -(n-1)/2 .. (n-1)/2 }.
LParameter a_to_l(const AParameter& psi);

// Interchange the two SL(2) factors: (phi, m, n) -> (phi, n, m).  Involution.
AParameter swap_sl2_copies(const AParameter& psi);

// Inverse of a_to_l where defined.  Groups summands by (label, m) and greedily
// extracts centered twist chains {t, t-1, ..., -t} from the maximal remaining
// twist; returns nullopt if some chain is incomplete.
std::optional<AParameter> l_is_image_of_a(const LParameter& phi);

// True iff psi_hat = swap_sl2_copies(psi) as multisets.
bool is_symmetric_pair(const AParameter& psi, const AParameter& psi_hat);

}  // namespace aubert
