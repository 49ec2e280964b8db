#include "aubert/params.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace aubert {

void AParameter::canonicalize() { std::sort(summands.begin(), summands.end()); }

void LParameter::canonicalize() {
  // canonical order: label name, then m, then twist
  std::sort(summands.begin(), summands.end(), [](const LParSummand& a, const LParSummand& b) {
    return std::tie(a.label, a.m, a.twist) < std::tie(b.label, b.m, b.twist);
  });
}

std::optional<int> AParameter::total_dim() const {
  int total = 0;
  for (const auto& s : summands) {
    if (!s.label.dim) return std::nullopt;
    total += *s.label.dim * s.m * s.n;
  }
  return total;
}

std::optional<int> LParameter::total_dim() const {
  int total = 0;
  for (const auto& s : summands) {
    if (!s.label.dim) return std::nullopt;
    total += *s.label.dim * s.m;
  }
  return total;
}

void AParameter::validate() const {
  for (const auto& s : summands) {
    if (s.m < 1 || s.n < 1) throw std::invalid_argument("A-parameter summand needs m, n >= 1");
    if (s.label.dim && *s.label.dim < 1) throw std::invalid_argument("label dimension must be positive");
  }
  if (auto d = total_dim(); d && *d % 2 != 0)
    throw std::invalid_argument("A-parameter total dimension must be even");
}

void LParameter::validate() const {
  for (const auto& s : summands) {
    if (s.m < 1) throw std::invalid_argument("L-parameter summand needs m >= 1");
    if (s.label.dim && *s.label.dim < 1) throw std::invalid_argument("label dimension must be positive");
  }
  if (auto d = total_dim(); d && *d % 2 != 0)
    throw std::invalid_argument("L-parameter total dimension must be even");
}

LParameter a_to_l(const AParameter& psi) {
  LParameter out;
  for (const auto& s : psi.summands) {
    // j runs over -(n-1)/2 .. (n-1)/2 in integer steps
    for (int tj = -(s.n - 1); tj <= s.n - 1; tj += 2)
      out.summands.push_back({s.label, HalfInt::from_twice(tj), s.m});
  }
  out.canonicalize();
  return out;
}

AParameter swap_sl2_copies(const AParameter& psi) {
  AParameter out;
  for (const auto& s : psi.summands) out.summands.push_back({s.label, s.n, s.m});
  out.canonicalize();
  return out;
}

std::optional<AParameter> l_is_image_of_a(const LParameter& phi) {
  // Group twists by (label, m).
  std::map<std::pair<PhiLabel, int>, std::multiset<HalfInt>> groups;
  for (const auto& s : phi.summands) groups[{s.label, s.m}].insert(s.twist);

  AParameter out;
  for (auto& [key, twists] : groups) {
    while (!twists.empty()) {
      // The maximal remaining twist can only sit atop a chain centered at 0.
      HalfInt t = *twists.rbegin();
      if (t.twice < 0) return std::nullopt;
      for (int tj = t.twice; tj >= -t.twice; tj -= 2) {
        auto it = twists.find(HalfInt::from_twice(tj));
        if (it == twists.end()) return std::nullopt;
        twists.erase(it);
      }
      out.summands.push_back({key.first, key.second, t.twice + 1});
    }
  }
  out.canonicalize();
  return out;
}

bool is_symmetric_pair(const AParameter& psi, const AParameter& psi_hat) {
  AParameter a = swap_sl2_copies(psi);
  AParameter b = psi_hat;
  b.canonicalize();
  return a == b;
}

}  // namespace aubert
