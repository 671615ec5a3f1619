#include "swcalc/json_io.hpp"

namespace swcalc {

namespace {

std::string verdict_name(SymplecticVerdict v) {
  return v == SymplecticVerdict::nonsymplectic ? "nonsymplectic" : "unknown";
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json j;
  j["generators"] = Json::array();
  for (const Generator& g : p.generators()) j["generators"].push_back(g.name);
  j["terms"] = Json::array();
  for (std::size_t t = 0; t < p.term_count(); ++t) {
    Json term;
    term["exp"] = Json::array();
    for (std::int32_t e : p.exponents(t)) term["exp"].push_back(e);
    term["coeff"] = p.coefficient(t).get_str();
    j["terms"].push_back(std::move(term));
  }
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("terms"))
    throw DomainError("polynomial JSON needs \"generators\" and \"terms\"");
  std::vector<Generator> gens;
  for (const Json& name : j.at("generators")) gens.push_back({name.get<std::string>()});
  std::vector<std::pair<std::vector<std::int32_t>, Int>> terms;
  for (const Json& term : j.at("terms")) {
    std::vector<std::int32_t> exps;
    for (const Json& e : term.at("exp")) exps.push_back(e.get<std::int32_t>());
    terms.emplace_back(std::move(exps), Int(term.at("coeff").get<std::string>()));
  }
  return LaurentPoly::from_terms(std::move(gens), std::move(terms));
}

Json census_to_json(const FiberCensus& census) {
  Json j;
  j["necklace_k"] = census.necklace_k;
  j["i2_count"] = census.i2_count;
  j["fishtail_count"] = census.fishtail_count;
  j["right_handed_twists"] = census.right_handed_twists();
  return j;
}

Json matrix_to_json(const SL2Matrix& m) {
  Json j;
  j["matrix"] = Json::array({Json::array({m.a.get_str(), m.b.get_str()}),
                             Json::array({m.c.get_str(), m.d.get_str()})});
  j["is_identity"] = m.is_identity();
  return j;
}

Json chain_to_json(const Chain& chain, const ChainReport& report) {
  Json j;
  j["p"] = chain.p;
  j["q"] = chain.q;
  j["coefficients"] = chain.coefficients;
  j["lens_space"] = Json{{"order", chain.boundary.order}, {"twist", chain.boundary.twist}};
  Json checks;
  checks["recomposition_exact"] = report.recomposition_exact;
  checks["coefficients_ge_2"] = report.coefficients_ge_2;
  checks["negative_definite"] = report.negative_definite;
  checks["abs_det_equals_p_squared"] = report.abs_det_equals_p_squared;
  checks["determinant"] = report.determinant.get_str();
  j["checks"] = std::move(checks);
  return j;
}

Json homology_class_to_json(const HomologyClass& cls, std::size_t e_count) {
  Json j;
  j["T"] = cls.t_coeff;
  Json e = Json::array();
  for (std::size_t i = 0; i < e_count; ++i)
    e.push_back(i < cls.e_coeffs.size() ? cls.e_coeffs[i] : 0);
  j["E"] = std::move(e);
  return j;
}

Json state_to_json(const ManifoldState& m) {
  Json j;
  j["e"] = m.e();
  j["sigma"] = m.signature();
  j["b2plus"] = m.b2_plus();
  j["c1sq"] = m.c1_squared();
  j["chi_h"] = m.chi_h();
  j["simply_connected"] = m.simply_connected();
  j["sw"] = poly_to_json(m.sw());
  Json classes = Json::array();
  const std::size_t e_count = static_cast<std::size_t>(m.blowup_count());
  for (const BasicClass& bc : basic_classes(m)) {
    Json entry;
    entry["class"] = homology_class_to_json(bc.cls, e_count);
    entry["value"] = bc.value.get_str();
    classes.push_back(std::move(entry));
  }
  j["basic_classes"] = std::move(classes);
  j["verdict"] = verdict_name(symplectic_verdict(m));
  j["history"] = m.history();
  return j;
}

Json recipe_to_json(const ConstructionRecipe& rec) {
  Json j;
  j["n"] = rec.n;
  j["s"] = rec.s;
  j["r"] = rec.r;
  j["fishtail"] = rec.fishtail;
  j["extra_blowups"] = rec.extra_blowups;
  return j;
}

ConstructionRecipe recipe_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("recipe JSON must be an object");
  ConstructionRecipe rec;
  if (!j.contains("n")) throw DomainError("recipe JSON needs \"n\"");
  rec.n = j.at("n").get<std::int64_t>();
  rec.s = j.value("s", std::int64_t{0});
  if (j.contains("r")) {
    const Json& r = j.at("r");
    if (r.is_array())
      for (const Json& v : r) rec.r.push_back(v.get<std::int64_t>());
    else
      rec.r.assign(static_cast<std::size_t>(rec.s), r.get<std::int64_t>());
  }
  // A single twist parameter broadcasts across all s surgeries.
  if (rec.s > 0 && rec.r.size() == 1)
    rec.r.assign(static_cast<std::size_t>(rec.s), rec.r.front());
  rec.fishtail = j.value("fishtail", false);
  rec.extra_blowups = j.value("extra_blowups", std::int64_t{0});
  return rec;
}

Json result_to_json(const ConstructionResult& result) {
  Json j = state_to_json(result.state);
  j["recipe"] = recipe_to_json(result.recipe);
  j["top_value"] = result.top_value_abs.get_str();
  Json cert;
  Json tops = Json::array();
  const std::size_t e_count = static_cast<std::size_t>(result.state.blowup_count());
  for (const HomologyClass& cls : result.top_classes)
    tops.push_back(homology_class_to_json(cls, e_count));
  cert["top_classes"] = std::move(tops);
  cert["verdict"] = verdict_name(result.verdict);
  j["certificate"] = std::move(cert);
  return j;
}

Json geography_to_json(std::int64_t n, std::int64_t floor_c1sq,
                       const std::vector<GeographyPoint>& points) {
  Json j;
  j["n"] = n;
  j["floor"] = floor_c1sq;
  j["max_c1sq"] = points.empty() ? floor_c1sq - 1 : points.back().c1sq;
  Json arr = Json::array();
  for (const GeographyPoint& point : points) {
    Json p;
    p["chi_h"] = point.chi_h;
    p["c1sq"] = point.c1sq;
    p["witness"] = recipe_to_json(point.witness);
    p["verified"] = point.verified;
    arr.push_back(std::move(p));
  }
  j["points"] = std::move(arr);
  return j;
}

Json certificate_to_json(const DistinctnessCertificate& cert) {
  Json j;
  j["n"] = cert.n;
  j["s"] = cert.s;
  j["fishtail"] = cert.fishtail;
  j["extra_blowups"] = cert.extra_blowups;
  Json entries = Json::array();
  for (const CertificateEntry& entry : cert.entries) {
    Json e;
    e["r"] = entry.r;
    e["top_value"] = entry.top_value_abs.get_str();
    e["e"] = entry.e;
    e["sigma"] = entry.sigma;
    e["b2plus"] = entry.b2_plus;
    e["simply_connected"] = entry.simply_connected;
    e["verdict"] = verdict_name(entry.verdict);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["fingerprints_match"] = cert.fingerprints_match;
  j["pairwise_distinct"] = cert.pairwise_distinct;
  j["pass"] = cert.pass();
  return j;
}

}  // namespace swcalc
