#include "patmat/certificate.hpp"

#include <cmath>
#include <stdexcept>

namespace patmat {

namespace {

json function_block(const BooleanFunction& f) {
    return json{{"t", f.arity()}, {"table_hex", f.to_hex()}};
}

BooleanFunction function_from(const json& j) {
    return BooleanFunction::from_hex(j.at("t").get<int>(),
                                     j.at("table_hex").get<std::string>());
}

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
}

std::vector<Rational> rationals_from_json(const json& arr) {
    std::vector<Rational> v;
    v.reserve(arr.size());
    for (const auto& s : arr) v.push_back(Rational::parse(s.get<std::string>()));
    return v;
}

void require_schema(const json& cert) {
    if (!cert.contains("schema_version") || cert.at("schema_version").get<int>() != kSchemaVersion)
        throw std::invalid_argument("certificate: unsupported schema version");
}

}  // namespace

json make_dual_witness_cert(const BooleanFunction& f, const DualWitness& w) {
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["kind"] = "dual-witness";
    cert["function"] = function_block(f);
    cert["params"] = {{"d", w.d}, {"eps", w.eps.str()}};
    cert["payload"] = {{"values", rationals_to_json(w.values)}, {"value", w.value.str()}};
    return cert;
}

json make_ortho_cert(const BooleanFunction& f, const OrthoDistribution& od) {
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["kind"] = "ortho-distribution";
    cert["function"] = function_block(f);
    cert["params"] = {{"d", od.d}};
    cert["payload"] = {{"weights", rationals_to_json(od.weights)}};
    return cert;
}

json make_weight_cert(const BooleanFunction& f, const WeightCertificate& cert_in) {
    json lam = json::object();
    for (const auto& [mask, v] : cert_in.lambda) lam[std::to_string(mask)] = v.get_str();
    // Redundant value table and margin: any coefficient corruption breaks
    // re-evaluation.
    std::vector<std::string> ptable;
    mpz_class margin;
    bool first = true;
    for (uint32_t x = 0; x < f.table_size(); ++x) {
        mpz_class p = 0;
        for (const auto& [mask, v] : cert_in.lambda)
            p += character(mask, x) > 0 ? v : -v;
        ptable.push_back(p.get_str());
        mpz_class fp = f(x) * p;
        if (first || fp < margin) { margin = fp; first = false; }
    }
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["kind"] = "weight-cert";
    cert["function"] = function_block(f);
    cert["params"] = {{"d", cert_in.d}};
    cert["payload"] = {{"lambda", lam},
                       {"weight", cert_in.weight.get_str()},
                       {"ptable", ptable},
                       {"margin", margin.get_str()}};
    return cert;
}

json make_spectrum_cert(const PatternSpec& spec) {
    SingularSpectrum sp = spectrum_formula(spec);
    json entries = json::array();
    for (const auto& e : sp.entries)
        entries.push_back(json{{"sigma_sq", e.sigma_sq.str()},
                               {"sigma", e.sigma},
                               {"multiplicity", e.multiplicity}});
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["kind"] = "spectrum";
    cert["params"] = {{"n", spec.n}, {"t", spec.t}};
    cert["payload"] = {{"phi", rationals_to_json(spec.phi.values)}, {"entries", entries}};
    return cert;
}

json report_to_json(const BoundReport& rep) {
    json checks = json::array();
    for (const auto& v : rep.verification) checks.push_back(json{{"name", v.name}, {"pass", v.pass}});
    json j;
    j["name"] = rep.name;
    j["inputs"] = rep.inputs;
    j["side"] = rep.side;
    j["vacuous"] = rep.vacuous;
    j["formula_only"] = rep.formula_only;
    if (!rep.vacuous || std::isfinite(rep.value)) j["value"] = rep.value;
    j["verification"] = checks;
    j["provenance"] = rep.provenance;
    return j;
}

json make_bound_cert(const BoundReport& rep, const std::vector<int8_t>* predicate_values) {
    json cert;
    cert["schema_version"] = kSchemaVersion;
    cert["kind"] = "bound-report";
    cert["payload"] = report_to_json(rep);
    if (predicate_values) {
        std::string enc;
        for (int8_t v : *predicate_values) enc.push_back(v == -1 ? '-' : '+');
        cert["payload"]["predicate"] = enc;
    }
    return cert;
}

namespace {

VerifyOutcome verify_dual_witness(const json& cert) {
    VerifyOutcome out;
    BooleanFunction f = function_from(cert.at("function"));
    int d = cert.at("params").at("d").get<int>();
    Rational eps = Rational::parse(cert.at("params").at("eps").get<std::string>());
    std::vector<Rational> psi = rationals_from_json(cert.at("payload").at("values"));
    Rational claimed = Rational::parse(cert.at("payload").at("value").get<std::string>());
    if (psi.size() != f.table_size())
        throw std::invalid_argument("dual-witness: psi length mismatch");

    Rational l1(0), corr(0);
    for (uint32_t x = 0; x < psi.size(); ++x) {
        l1 += psi[x].abs();
        corr += psi[x] * Rational(f(x));
    }
    out.checks.push_back({"unit-l1-mass", l1 == Rational(1)});
    FourierSpectrum hat = fourier_table(f.arity(), psi);
    bool orth = true;
    for (uint32_t s = 0; s < hat.coeff.size(); ++s)
        if (__builtin_popcount(s) < d && !hat.coeff[s].is_zero()) orth = false;
    out.checks.push_back({"low-levels-vanish", orth});
    out.checks.push_back({"correlation-matches", corr == claimed});
    out.checks.push_back({"correlation-above-eps", corr > eps});
    return out;
}

VerifyOutcome verify_ortho(const json& cert) {
    VerifyOutcome out;
    BooleanFunction f = function_from(cert.at("function"));
    int d = cert.at("params").at("d").get<int>();
    std::vector<Rational> mu = rationals_from_json(cert.at("payload").at("weights"));
    if (mu.size() != f.table_size())
        throw std::invalid_argument("ortho-distribution: weight length mismatch");
    Rational total(0);
    bool nonneg = true;
    for (const auto& m : mu) {
        if (m.sign() < 0) nonneg = false;
        total += m;
    }
    out.checks.push_back({"nonnegative", nonneg});
    out.checks.push_back({"total-mass-one", total == Rational(1)});
    bool orth = true;
    for (uint32_t s = 0; s < f.table_size(); ++s) {
        if (__builtin_popcount(s) >= d) continue;
        Rational c(0);
        for (uint32_t x = 0; x < mu.size(); ++x)
            c += mu[x] * Rational(f(x) * character(s, x));
        if (!c.is_zero()) orth = false;
    }
    out.checks.push_back({"correlations-vanish", orth});
    return out;
}

VerifyOutcome verify_weight(const json& cert) {
    VerifyOutcome out;
    BooleanFunction f = function_from(cert.at("function"));
    int d = cert.at("params").at("d").get<int>();
    const json& payload = cert.at("payload");
    WeightCertificate wc;
    wc.d = d;
    bool levels_ok = true;
    for (const auto& [key, val] : payload.at("lambda").items()) {
        uint32_t mask = static_cast<uint32_t>(std::stoul(key));
        if (__builtin_popcount(mask) > d) levels_ok = false;
        wc.lambda[mask] = mpz_class(val.get<std::string>());
    }
    out.checks.push_back({"degree-within-d", levels_ok});

    mpz_class weight = 0;
    for (const auto& [mask, v] : wc.lambda) weight += abs(v);
    out.checks.push_back({"weight-matches", weight.get_str() == payload.at("weight").get<std::string>()});

    const auto& ptable = payload.at("ptable");
    bool table_ok = ptable.size() == f.table_size();
    bool signs_ok = true;
    mpz_class margin;
    bool first = true;
    for (uint32_t x = 0; x < f.table_size() && table_ok; ++x) {
        mpz_class p = 0;
        for (const auto& [mask, v] : wc.lambda)
            p += character(mask, x) > 0 ? v : -v;
        if (p.get_str() != ptable[x].get<std::string>()) table_ok = false;
        if (sgn(p) != f(x)) signs_ok = false;
        mpz_class fp = f(x) * p;
        if (first || fp < margin) { margin = fp; first = false; }
    }
    out.checks.push_back({"ptable-matches", table_ok});
    out.checks.push_back({"sign-represents", signs_ok});
    out.checks.push_back(
        {"margin-matches", table_ok && margin.get_str() == payload.at("margin").get<std::string>()});
    return out;
}

VerifyOutcome verify_spectrum(const json& cert) {
    VerifyOutcome out;
    int n = cert.at("params").at("n").get<int>();
    int t = cert.at("params").at("t").get<int>();
    std::vector<Rational> phi = rationals_from_json(cert.at("payload").at("phi"));
    PatternSpec spec(n, t, PhiTable(t, std::move(phi)));
    SingularSpectrum sp = spectrum_formula(spec);
    const json& entries = cert.at("payload").at("entries");
    bool match = entries.size() == sp.entries.size();
    for (std::size_t i = 0; match && i < sp.entries.size(); ++i) {
        match = entries[i].at("sigma_sq").get<std::string>() == sp.entries[i].sigma_sq.str() &&
                entries[i].at("multiplicity").get<uint64_t>() == sp.entries[i].multiplicity;
    }
    out.checks.push_back({"spectrum-matches", match});
    return out;
}

VerifyOutcome verify_bound(const json& cert) {
    VerifyOutcome out;
    const json& payload = cert.at("payload");
    std::string name = payload.at("name").get<std::string>();
    const json& inputs = payload.at("inputs");

    auto get_rat = [&](const std::string& k) {
        return Rational::parse(inputs.at(k).get<std::string>());
    };
    auto get_int = [&](const std::string& k) { return std::stoi(inputs.at(k).get<std::string>()); };

    BoundReport fresh;
    if (name == "razborov") {
        std::string enc = payload.at("predicate").get<std::string>();
        std::vector<int8_t> values;
        for (char c : enc) values.push_back(c == '-' ? -1 : 1);
        int n = get_int("n");
        fresh = razborov_bound(Predicate(n, std::move(values)), n);
    } else {
        BooleanFunction f =
            BooleanFunction::from_hex(get_int("t"), inputs.at("fn").get<std::string>());
        int n = get_int("n"), t = get_int("t");
        if (name == "main-cc") fresh = q_lower_adeg(f, n, t, get_rat("eps"), get_rat("delta"));
        else if (name == "quantum-weight")
            fresh = q_lower_weight(f, n, t, get_int("d"), get_rat("gamma"));
        else if (name == "disc-upper") fresh = disc_upper_weight(f, n, t);
        else if (name == "disc-lower") fresh = disc_lower_weight(f, n, t, get_int("d"));
        else if (name == "disc-upper-adeg") fresh = disc_upper_adeg(f, n, t, get_rat("gamma"));
        else if (name == "bounded-error-approx-rank")
            fresh = rank_lower_adeg(f, n, t, get_rat("eps"), get_rat("delta"));
        else if (name == "small-bias-approx-rank")
            fresh = rank_lower_weight(f, n, t, get_int("d"), get_rat("gamma"));
        else if (name == "logrank") fresh = logrank_check(f, n, t);
        else throw std::invalid_argument("bound-report: unknown bound \"" + name + "\"");
    }

    bool value_ok;
    if (payload.contains("value") && std::isfinite(fresh.value)) {
        double claimed = payload.at("value").get<double>();
        value_ok = std::fabs(claimed - fresh.value) <=
                   1e-12 * std::max(1.0, std::fabs(fresh.value));
    } else {
        value_ok = payload.at("vacuous").get<bool>() == fresh.vacuous;
    }
    out.checks.push_back({"value-reproduces", value_ok});
    out.checks.push_back({"vacuous-flag-matches",
                          payload.at("vacuous").get<bool>() == fresh.vacuous});
    out.checks.push_back({"recomputed-verifications-pass", fresh.all_passed()});
    return out;
}

}  // namespace

VerifyOutcome verify_certificate(const json& cert) {
    require_schema(cert);
    std::string kind = cert.at("kind").get<std::string>();
    VerifyOutcome out;
    if (kind == "dual-witness") out = verify_dual_witness(cert);
    else if (kind == "ortho-distribution") out = verify_ortho(cert);
    else if (kind == "weight-cert") out = verify_weight(cert);
    else if (kind == "spectrum") out = verify_spectrum(cert);
    else if (kind == "bound-report") out = verify_bound(cert);
    else throw std::invalid_argument("certificate: unknown kind \"" + kind + "\"");
    out.pass = true;
    for (const auto& c : out.checks)
        if (!c.pass) out.pass = false;
    return out;
}

}  // namespace patmat
