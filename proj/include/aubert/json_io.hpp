#pragma once

#include <nlohmann/json_fwd.hpp>

#include "aubert/duality.hpp"
#include "aubert/jacquet.hpp"
#include "aubert/params.hpp"
#include "aubert/segments.hpp"

namespace aubert {

nlohmann::json to_json(const AParameter& psi);
nlohmann::json to_json(const LParameter& phi);
nlohmann::json to_json(const FormalSum& s);
nlohmann::json to_json(const LanglandsData& d);
nlohmann::json to_json(const DualOutcome& o);
nlohmann::json to_json(const ClaimResult& c);

}  // namespace aubert
