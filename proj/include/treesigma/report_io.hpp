#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "treesigma/certificate.hpp"
#include "treesigma/lemmas.hpp"
#include "treesigma/profile.hpp"
#include "treesigma/search.hpp"

namespace treesigma {

using Json = nlohmann::ordered_json;

// Every rational is emitted as a "p/q" string; nothing is a float.

Json to_json(const DegreeProfile& p);
Json to_json(const DualCertificate& cert);
Json to_json(const LpOptimum& opt, const SigmaMaxPrediction& prediction);
Json to_json(const ExtremalTree& t);
Json to_json(const SearchReport& r);
Json to_json(const LemmaReport& r);

/// Flat scan table: one row per order.
std::string scan_csv(const std::vector<SearchReport>& reports);

/// Human status string for the LP bound at (n, delta).
std::string bound_status_text(const SigmaMaxPrediction& prediction);

}  // namespace treesigma
