#include "aubert/json_io.hpp"

#include <cstdint>
#include <limits>

#include <nlohmann/json.hpp>

#include "aubert/parse.hpp"

namespace aubert {

using nlohmann::json;

namespace {

json coeff_json(const Int& c) {
  // exact where JSON numbers are exact, string beyond that
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return c.convert_to<std::int64_t>();
  return c.str();
}

json dim_json(const std::optional<int>& d) {
  if (d) return *d;
  return nullptr;
}

}  // namespace

json to_json(const AParameter& psi) {
  json arr = json::array();
  for (const auto& s : psi.summands)
    arr.push_back({{"phi", s.label.name}, {"dim", dim_json(s.label.dim)}, {"m", s.m}, {"n", s.n}});
  return {{"summands", arr}};
}

json to_json(const LParameter& phi) {
  json arr = json::array();
  for (const auto& s : phi.summands)
    arr.push_back(
        {{"phi", s.label.name}, {"dim", dim_json(s.label.dim)}, {"twist", s.twist.str()}, {"m", s.m}});
  return {{"summands", arr}};
}

json to_json(const FormalSum& s) {
  json arr = json::array();
  for (const auto& [w, c] : s.terms()) {
    json word = json::array();
    for (const auto& e : w) word.push_back(e.str());
    arr.push_back({{"word", word}, {"coeff", coeff_json(c)}});
  }
  return {{"terms", arr}};
}

json to_json(const LanglandsData& d) {
  json entries = json::array();
  for (const auto& a : d.gl_entries) entries.push_back(print(a));
  return {{"entries", entries}, {"tail", print(d.tail)}};
}

json to_json(const DualOutcome& o) {
  if (o.is_a_param()) return {{"kind", "a-parameter"}, {"value", to_json(o.a_param())}};
  return {{"kind", "l-parameter-only"}, {"value", to_json(o.l_param())}};
}

json to_json(const ClaimResult& c) {
  return {{"claim", c.claim}, {"m", c.m},       {"expected", coeff_json(c.expected)},
          {"got", coeff_json(c.got)}, {"pass", c.pass}, {"terms", c.terms},
          {"ms", c.ms}};
}

}  // namespace aubert
