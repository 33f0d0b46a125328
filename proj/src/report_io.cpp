#include "treesigma/report_io.hpp"

#include <sstream>

namespace treesigma {

namespace {

std::string pair_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

std::string join(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out.push_back(sep);
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace

Json to_json(const DegreeProfile& p) {
  Json j;
  j["n"] = p.order();
  j["delta"] = p.delta();
  Json degrees = Json::object();
  for (int i = 0; i <= p.delta(); ++i) {
    if (p.degree_count(i) != 0) degrees[std::to_string(i)] = p.degree_count(i);
  }
  j["degree_counts"] = degrees;
  Json pairs = Json::object();
  for (int a = 1; a <= p.delta(); ++a) {
    for (int b = a; b <= p.delta(); ++b) {
      if (p.pair_count(a, b) != 0) pairs[pair_key(a, b)] = p.pair_count(a, b);
    }
  }
  j["pair_counts"] = pairs;
  j["sigma"] = p.sigma();
  j["weighted_edge_sum"] = p.weighted_edge_sum().to_string();
  j["identity_violations"] = p.identity_violations();
  return j;
}

Json to_json(const DualCertificate& cert) {
  Json j;
  j["delta"] = cert.delta();
  j["lambda"] = cert.lambda().to_string();
  j["mu"] = cert.mu().to_string();
  j["a_const"] = cert.a_const().to_string();
  j["b_const"] = cert.b_const().to_string();
  Json slack = Json::array();
  Json zeros = Json::array();
  for (int a = 1; a <= cert.delta(); ++a) {
    for (int b = a; b <= cert.delta(); ++b) {
      const Rational f = cert.slack(a, b);
      slack.push_back(Json{{"i", a}, {"j", b}, {"F", f.to_string()}});
      if (f.sign() == 0) zeros.push_back(Json::array({a, b}));
    }
  }
  j["zero_set"] = zeros;
  j["slack"] = slack;
  return j;
}

std::string bound_status_text(const SigmaMaxPrediction& prediction) {
  switch (prediction.coverage) {
    case Coverage::kLpTight:
      return "tight (n≡1 mod Δ)";
    case Coverage::kPenaltyMinimum:
      return "strict; exact maximum is bound - F(Δ,Δ) (n≡0 mod Δ)";
    case Coverage::kNotCovered:
      break;
  }
  return "strict upper bound; exact maximum not covered (n≡" + std::to_string(prediction.residue) + " mod Δ)";
}

Json to_json(const LpOptimum& opt, const SigmaMaxPrediction& prediction) {
  Json j;
  j["n"] = opt.n;
  j["delta"] = opt.delta;
  j["residue"] = prediction.residue;
  j["m_1_delta"] = opt.m_1_delta.to_string();
  j["m_2_delta"] = opt.m_2_delta.to_string();
  j["integral"] = opt.integral();
  j["sigma_bound"] = opt.sigma_bound.to_string();
  j["status"] = bound_status_text(prediction);
  j["coverage"] = coverage_name(prediction.coverage);
  j["exact_sigma_max"] = prediction.value ? Json(prediction.value->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const ExtremalTree& t) {
  Json j;
  j["graph6"] = t.graph6;
  j["canonical"] = t.form.encoding;
  j["degree_set"] = t.degree_set;
  Json pairs = Json::object();
  for (const auto& [key, m] : t.pairs) pairs[pair_key(key.first, key.second)] = m;
  j["pair_counts"] = pairs;
  j["penalty"] = t.penalty ? Json(t.penalty->to_string()) : Json(nullptr);
  return j;
}

Json to_json(const SearchReport& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["degree_filter"] = filter_name(r.filter);
  j["residue"] = r.prediction.residue;
  j["tree_count"] = r.tree_count;
  j["sigma_max"] = r.sigma_max;
  j["bound"] = r.bound.to_string();
  j["bound_status"] = bound_status_name(r.bound_status);
  j["gap"] = r.gap.to_string();
  j["coverage"] = coverage_name(r.prediction.coverage);
  j["predicted_sigma_max"] = r.prediction.value ? Json(r.prediction.value->to_string()) : Json(nullptr);
  j["prediction_matches"] = r.prediction_matches ? Json(*r.prediction_matches) : Json(nullptr);
  j["observed_degrees"] = r.observed_degrees();
  Json extremal = Json::array();
  for (const auto& t : r.extremal_trees) extremal.push_back(to_json(t));
  j["extremal_count"] = r.extremal_trees.size();
  j["extremal_trees"] = extremal;
  j["family"] = r.family.empty() ? Json(nullptr) : Json(r.family);
  Json members = Json::array();
  for (const auto& t : r.family_members) members.push_back(t.graph6);
  j["family_graph6"] = members;
  j["extremal_equals_family"] = r.extremal_equals_family ? Json(*r.extremal_equals_family) : Json(nullptr);
  j["characterization_applicable"] = r.characterization_applicable;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const LemmaReport& r) {
  Json j;
  j["lemma_id"] = r.lemma_id;
  j["delta_range"] = Json::array({r.delta_range.lo, r.delta_range.hi});
  j["status"] = lemma_status_name(r.status);
  j["checks"] = r.checks;
  j["vacuous_deltas"] = r.vacuous_deltas;
  Json counters = Json::object();
  for (const auto& [name, value] : r.counters) counters[name] = value;
  j["counters"] = counters;
  j["witness_count"] = r.witness_count;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json entry = Json::object();
    for (const auto& [k, v] : w) entry[k] = v;
    witnesses.push_back(entry);
  }
  j["witnesses"] = witnesses;
  return j;
}

std::string scan_csv(const std::vector<SearchReport>& reports) {
  std::ostringstream out;
  out << "n,delta,residue,degree_filter,tree_count,sigma_max,bound,bound_status,gap,coverage,predicted_sigma_max,"
         "prediction_matches,extremal_count,observed_degrees,extremal_graph6\n";
  for (const auto& r : reports) {
    std::string g6_joined;
    for (const auto& t : r.extremal_trees) {
      if (!g6_joined.empty()) g6_joined.push_back(' ');
      g6_joined += t.graph6;
    }
    out << r.n << ',' << r.delta << ',' << r.prediction.residue << ',' << filter_name(r.filter) << ','
        << r.tree_count << ',' << r.sigma_max << ',' << r.bound << ',' << bound_status_name(r.bound_status) << ','
        << r.gap << ',' << coverage_name(r.prediction.coverage) << ','
        << (r.prediction.value ? r.prediction.value->to_string() : "") << ','
        << (r.prediction_matches ? (*r.prediction_matches ? "true" : "false") : "") << ','
        << r.extremal_trees.size() << ',' << join(r.observed_degrees(), ' ') << ',' << '"' << g6_joined << '"'
        << '\n';
  }
  return out.str();
}

}  // namespace treesigma
