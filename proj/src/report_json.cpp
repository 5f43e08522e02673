#include "grover/report_json.hpp"

#include <cmath>

namespace grover {

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(parse_rational(c.get<std::string>()));
  return Polynomial(std::move(coeffs));
}

Json to_json(const CyclotomicFactorization& fac) {
  Json factors = Json::object();
  for (const auto& [m, mult] : fac.factors) factors[std::to_string(m)] = mult;
  return {{"factors", factors}, {"order_lcm", order_lcm(fac)}};
}

Json to_json(const FamilyMatch& m) {
  Json params = Json::object();
  switch (m.family) {
    case Family::Path: params["n"] = m.n; break;
    case Family::SubdividedStar:
      params["k"] = m.k;
      params["l"] = m.l;
      break;
    case Family::SubdividedB123: params["k"] = m.k; break;
    case Family::SubdividedBs3:
      params["k"] = m.k;
      params["s"] = m.s;
      break;
    case Family::Aperiodic: break;
  }
  Json j = {{"family", to_string(m.family)}, {"parameters", params}};
  j["period"] = m.family == Family::Aperiodic ? Json(nullptr) : Json(m.period);
  return j;
}

Json to_json(const Classification& c) {
  Json j = to_json(c.primary);
  Json all = Json::array();
  for (const auto& m : c.matches) all.push_back(to_json(m));
  j["matches"] = all;
  return j;
}

Json to_json(const TransformEvidence& ev) {
  Json j = {{"label", ev.label},
            {"polynomial", to_json(ev.polynomial)},
            {"polynomial_text", ev.polynomial.to_string("x")},
            {"transform", to_json(ev.transform)},
            {"transform_text", ev.transform.to_string("z")}};
  j["cyclotomic"] = ev.factorization ? to_json(*ev.factorization) : Json(nullptr);
  return j;
}

Json to_json(const SpectralVerdict& v) {
  Json j;
  j["periodic"] = v.periodic();
  j["period"] = v.period ? Json(*v.period) : Json(nullptr);
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back(to_json(e));
  j["evidence"] = ev;
  j["witness"] = v.witness ? to_json(v.evidence[*v.witness]) : Json(nullptr);
  return j;
}

Json to_json(const BruteVerdict& b) {
  Json j;
  j["cap"] = b.cap;
  switch (b.status) {
    case BruteStatus::Period:
      j["status"] = "period";
      j["period"] = b.period;
      break;
    case BruteStatus::NoneWithinCap:
      j["status"] = "none_within_cap";
      j["period"] = nullptr;
      break;
    case BruteStatus::Skipped:
      j["status"] = "skipped";
      j["period"] = nullptr;
      break;
  }
  return j;
}

Json to_json(const LiftedSpectrum& ls) {
  Json points = Json::array();
  for (const auto& p : ls.points)
    points.push_back({{"mu", p.mu}, {"angle", std::acos(p.mu)}, {"multiplicity", p.multiplicity}});
  return {{"interior_charpoly", to_json(ls.interior)},
          {"points", points},
          {"mult_plus_one", ls.mult_plus_one},
          {"mult_minus_one", ls.mult_minus_one},
          {"total", ls.total_multiplicity()}};
}

Json to_json(const PeriodicityReport& r) {
  Json j = {{"spec", r.spec.to_string()},
            {"classifier", to_json(r.classifier)},
            {"spectral", to_json(r.spectral)},
            {"bruteforce", to_json(r.bruteforce)},
            {"agreement", r.agreement}};
  if (r.graph_spectral) j["graph_spectral"] = to_json(*r.graph_spectral);
  return j;
}

}  // namespace grover
