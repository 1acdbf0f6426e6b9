#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "patmat/approx.hpp"
#include "patmat/boolfn.hpp"
#include "patmat/bounds.hpp"
#include "patmat/pattern.hpp"

namespace patmat {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// All certificate kinds carry the function (or predicate) they talk about
// and enough redundant derived data that the verifier can re-derive every
// invariant from the payload alone.
json make_dual_witness_cert(const BooleanFunction& f, const DualWitness& w);
json make_ortho_cert(const BooleanFunction& f, const OrthoDistribution& od);
json make_weight_cert(const BooleanFunction& f, const WeightCertificate& cert);
json make_spectrum_cert(const PatternSpec& spec);
json make_bound_cert(const BoundReport& rep,
                     const std::vector<int8_t>* predicate_values = nullptr);

struct VerifyOutcome {
    bool pass = false;
    std::vector<Verification> checks;
};

// Throws std::invalid_argument on malformed files or unsupported schema
// versions; invariant violations come back as failed checks.
VerifyOutcome verify_certificate(const json& cert);

json report_to_json(const BoundReport& rep);

}  // namespace patmat
