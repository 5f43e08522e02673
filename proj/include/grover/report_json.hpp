#pragma once

#include <json.hpp>

#include "grover/cyclotomic.hpp"
#include "grover/periodicity.hpp"
#include "grover/polynomial.hpp"
#include "grover/spectrum.hpp"

namespace grover {

using Json = nlohmann::json;

/// Coefficient array, low to high, of "num/den" strings.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"factors": {"m": multiplicity, ...}, "order_lcm": L}
Json to_json(const CyclotomicFactorization& fac);

Json to_json(const FamilyMatch& m);
Json to_json(const Classification& c);
Json to_json(const TransformEvidence& ev);
Json to_json(const SpectralVerdict& v);
Json to_json(const BruteVerdict& b);
Json to_json(const LiftedSpectrum& ls);

/// {spec, classifier, spectral, bruteforce, agreement} plus graph_spectral
/// when that route ran.
Json to_json(const PeriodicityReport& r);

}  // namespace grover
