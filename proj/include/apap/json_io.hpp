#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "apap/curvature.hpp"
#include "apap/fundamental.hpp"
#include "apap/lie_algebra.hpp"
#include "apap/special.hpp"
#include "apap/structure.hpp"
#include "apap/tensor.hpp"

namespace apap {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

template <int Rank>
Json tensor_to_json(const Tensor<Rank>& t) {
  if constexpr (Rank == 0) {
    return rational_to_json(t.value());
  } else {
    Json out = Json::array();
    for (int n = 0; n < Tensor<Rank>::entry_count; ++n) {
      // Nested arrays: index 0 varies slowest.
      Json* node = &out;
      const auto idx = Tensor<Rank>::unflatten(n);
      for (int slot = 0; slot + 1 < Rank; ++slot) {
        while (node->size() <= static_cast<size_t>(idx[slot]))
          node->push_back(Json::array());
        node = &(*node)[idx[slot]];
      }
      node->push_back(rational_to_json(t.entry(n)));
    }
    return out;
  }
}

template <int Rank>
Tensor<Rank> tensor_from_json(const Json& j) {
  Tensor<Rank> t;
  for (int n = 0; n < Tensor<Rank>::entry_count; ++n) {
    const auto idx = Tensor<Rank>::unflatten(n);
    const Json* node = &j;
    for (int slot = 0; slot < Rank; ++slot) {
      if (!node->is_array() || node->size() != kDim)
        throw std::invalid_argument("malformed tensor JSON");
      node = &(*node)[idx[slot]];
    }
    t.entry(n) = rational_from_json(*node);
  }
  return t;
}

inline Vec3 vec3_from_json(const Json& j, const char* key) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string("key '") + key +
                                "' must be an array of 3 rational strings");
  Vec3 v;
  for (int i = 0; i < kDim; ++i) v(i) = rational_from_json(j[i]);
  return v;
}

inline Json structure_constants_to_json(const StructureConstants& s) {
  auto vec = [](const Vec3& v) {
    return Json::array({v(0).str(), v(1).str(), v(2).str()});
  };
  return Json{{"C01", vec(s.c01)}, {"C02", vec(s.c02)}, {"C12", vec(s.c12)}};
}

inline CatalogEntry catalog_entry_from_json(const Json& j) {
  const auto family = family_from_name(j.at("family").get<std::string>());
  if (!family)
    throw std::invalid_argument("unknown family '" +
                                j.at("family").get<std::string>() + "'");
  CatalogEntry entry{*family, {}};
  for (const auto& [key, value] : j.items()) {
    if (key == "family") continue;
    if (key != "alpha" && key != "beta" && key != "a1" && key != "a2")
      throw std::invalid_argument("unknown key '" + key +
                                  "' in family document");
    entry.params[key] = rational_from_json(value);
  }
  // A parameter the family does not take is tolerated when it is exactly
  // zero (documents may carry the full key set); anything else is an error.
  CatalogEntry pruned{entry.family, {}};
  for (const auto& [key, value] : entry.params) {
    const bool used = [&] {
      switch (entry.family) {
        case Family::F1:
        case Family::F11: return key == "alpha" || key == "beta";
        case Family::Example: return key == "a1" || key == "a2";
        default: return key == "alpha";
      }
    }();
    if (used)
      pruned.params[key] = value;
    else if (!value.is_zero())
      throw std::invalid_argument("family " + family_name(entry.family) +
                                  " does not take parameter '" + key + "'");
  }
  return pruned;
}

/// Parses the Lie-algebra input document: either explicit constants
/// {"C01": [...], "C02": [...], "C12": [...]} or a catalog family
/// {"family": "F8", "alpha": "1"}.
inline StructureConstants structure_constants_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("input must be a JSON object");
  if (j.contains("family"))
    return catalog_instantiate(catalog_entry_from_json(j));
  StructureConstants s;
  s.c01 = vec3_from_json(j.at("C01"), "C01");
  s.c02 = vec3_from_json(j.at("C02"), "C02");
  s.c12 = vec3_from_json(j.at("C12"), "C12");
  for (const auto& [key, value] : j.items())
    if (key != "C01" && key != "C02" && key != "C12")
      throw std::invalid_argument("unknown key '" + key +
                                  "' in structure-constant document");
  return s;
}

inline Json class_decomposition_to_json(const ClassDecomposition& d) {
  Json membership = Json::array();
  for (const BasicClass c : d.membership)
    membership.push_back(basic_class_name(c));
  return Json{{"label", class_label(d.membership)},
              {"membership", membership},
              {"theta0", d.theta0.str()},
              {"theta_star0", d.theta_star0.str()},
              {"theta1", d.theta1.str()},
              {"theta2", d.theta2.str()},
              {"omega1", d.omega1.str()},
              {"omega2", d.omega2.str()},
              {"lambda", d.lambda.str()},
              {"mu", d.mu.str()},
              {"nu", d.nu.str()},
              {"residual", tensor_to_json(d.residual)}};
}

inline Json einstein_to_json(const EinsteinVerdict& v) {
  Json out{{"kind", einstein_kind_name(v.kind)}};
  if (v.lambda) out["lambda"] = v.lambda->str();
  if (v.mu) out["mu"] = v.mu->str();
  if (v.nu) out["nu"] = v.nu->str();
  return out;
}

struct PredicateReport {
  bool literal = false;
  std::optional<std::string> witness;
  bool class_condition = false;

  friend bool operator==(const PredicateReport&,
                         const PredicateReport&) = default;
};

inline Json predicate_to_json(const PredicateReport& p) {
  Json out{{"literal", p.literal}, {"class_condition", p.class_condition}};
  if (p.witness) out["witness"] = *p.witness;
  return out;
}

inline PredicateReport predicate_from_json(const Json& j) {
  PredicateReport p;
  p.literal = j.at("literal").get<bool>();
  p.class_condition = j.at("class_condition").get<bool>();
  if (j.contains("witness")) p.witness = j.at("witness").get<std::string>();
  return p;
}

/// Everything the pipeline knows about one Lie algebra.
struct GeometryReport {
  StructureConstants input;
  ClassDecomposition decomposition;
  Connection connection;
  CurvatureData curvature;
  Tensor<4> r3_residual;
  EinsteinVerdict einstein;
  PredicateReport killing_g, killing_gt, biinvariant_phi, killing_xi;
  bool flat = false;
  bool para_sasakian = false;
  bool f0 = false;

  friend bool operator==(const GeometryReport&,
                         const GeometryReport&) = default;
};

inline std::string killing_witness_string(
    const KillingMetricVerdict::Witness& w) {
  return "(E" + std::to_string(w.i) + ",E" + std::to_string(w.j) + ",E" +
         std::to_string(w.k) + "): lhs=" + w.lhs.str() +
         " rhs=" + w.rhs.str();
}

inline GeometryReport analyze(const StructureConstants& s) {
  GeometryReport r;
  r.input = s;
  const Tensor<3> F = fundamental_tensor(s);
  r.connection = levi_civita(s);
  if (fundamental_tensor_from_connection(r.connection,
                                         standard_structure()) != F)
    throw std::logic_error(
        "fundamental tensor routes disagree (bracket vs connection)");
  r.decomposition = classify(F);
  r.curvature = curvature_invariants(riemann(r.connection, s));
  r.r3_residual = r3_identity_residual(r.curvature.R, r.curvature);
  r.einstein = einstein_classify(r.curvature.rho, r.curvature.tau);

  const KillingMetricVerdict kg = is_killing_metric(s, MetricKind::G);
  r.killing_g.literal = kg.holds;
  if (kg.witness) r.killing_g.witness = killing_witness_string(*kg.witness);
  r.killing_g.class_condition =
      killing_metric_class_condition(r.decomposition, MetricKind::G);

  const KillingMetricVerdict kt = is_killing_metric(s, MetricKind::GTilde);
  r.killing_gt.literal = kt.holds;
  if (kt.witness) r.killing_gt.witness = killing_witness_string(*kt.witness);
  r.killing_gt.class_condition =
      killing_metric_class_condition(r.decomposition, MetricKind::GTilde);

  const BiinvariantVerdict bi = is_biinvariant_phi(s);
  r.biinvariant_phi.literal = bi.holds;
  if (bi.witness)
    r.biinvariant_phi.witness =
        "(E" + std::to_string(bi.witness->i) + ",E" +
        std::to_string(bi.witness->j) + "): phi[x,y]=(" +
        bi.witness->lhs(0).str() + "," + bi.witness->lhs(1).str() + "," +
        bi.witness->lhs(2).str() + ") [x,phi y]=(" + bi.witness->rhs(0).str() +
        "," + bi.witness->rhs(1).str() + "," + bi.witness->rhs(2).str() + ")";
  r.biinvariant_phi.class_condition =
      biinvariant_class_condition(r.decomposition);

  const KillingXiVerdict kx = is_killing_xi(s);
  r.killing_xi.literal = kx.holds;
  if (kx.witness)
    r.killing_xi.witness = "(E" + std::to_string(kx.witness->i) + ",E" +
                           std::to_string(kx.witness->j) +
                           "): value=" + kx.witness->value.str();
  r.killing_xi.class_condition = kx.class_condition;

  r.flat = r.curvature.R.is_zero();
  r.para_sasakian = is_para_sasakian(r.decomposition);
  r.f0 = r.decomposition.membership.empty();
  return r;
}

inline Json report_to_json(const GeometryReport& r) {
  return Json{
      {"input", structure_constants_to_json(r.input)},
      {"class", class_decomposition_to_json(r.decomposition)},
      {"connection", tensor_to_json(r.connection.gamma)},
      {"curvature",
       Json{{"R", tensor_to_json(r.curvature.R)},
            {"rho", tensor_to_json(r.curvature.rho)},
            {"rho_star", tensor_to_json(r.curvature.rho_star)},
            {"tau", r.curvature.tau.str()},
            {"tau_star", r.curvature.tau_star.str()},
            {"k01", r.curvature.k01.str()},
            {"k02", r.curvature.k02.str()},
            {"k12", r.curvature.k12.str()},
            {"r3_residual", tensor_to_json(r.r3_residual)}}},
      {"einstein", einstein_to_json(r.einstein)},
      {"predicates", Json{{"killing-g", predicate_to_json(r.killing_g)},
                          {"killing-gt", predicate_to_json(r.killing_gt)},
                          {"biinvariant-phi",
                           predicate_to_json(r.biinvariant_phi)},
                          {"killing-xi", predicate_to_json(r.killing_xi)}}},
      {"flags", Json{{"flat", r.flat},
                     {"para_sasakian", r.para_sasakian},
                     {"F0", r.f0}}}};
}

inline GeometryReport report_from_json(const Json& j) {
  GeometryReport r;
  r.input = structure_constants_from_json(j.at("input"));
  const Json& cls = j.at("class");
  r.decomposition.theta0 = Rational::parse(cls.at("theta0").get<std::string>());
  r.decomposition.theta_star0 =
      Rational::parse(cls.at("theta_star0").get<std::string>());
  r.decomposition.theta1 = Rational::parse(cls.at("theta1").get<std::string>());
  r.decomposition.theta2 = Rational::parse(cls.at("theta2").get<std::string>());
  r.decomposition.omega1 = Rational::parse(cls.at("omega1").get<std::string>());
  r.decomposition.omega2 = Rational::parse(cls.at("omega2").get<std::string>());
  r.decomposition.lambda = Rational::parse(cls.at("lambda").get<std::string>());
  r.decomposition.mu = Rational::parse(cls.at("mu").get<std::string>());
  r.decomposition.nu = Rational::parse(cls.at("nu").get<std::string>());
  for (const Json& name : cls.at("membership")) {
    const std::string text = name.get<std::string>();
    const std::optional<BasicClass> c = basic_class_from_name(text);
    if (!c) throw std::invalid_argument("unknown class " + text);
    r.decomposition.membership.insert(*c);
  }
  r.decomposition.residual = tensor_from_json<3>(cls.at("residual"));
  r.connection.gamma = tensor_from_json<3>(j.at("connection"));
  const Json& curv = j.at("curvature");
  r.curvature.R = tensor_from_json<4>(curv.at("R"));
  r.curvature.rho = tensor_from_json<2>(curv.at("rho"));
  r.curvature.rho_star = tensor_from_json<2>(curv.at("rho_star"));
  r.curvature.tau = Rational::parse(curv.at("tau").get<std::string>());
  r.curvature.tau_star =
      Rational::parse(curv.at("tau_star").get<std::string>());
  r.curvature.k01 = Rational::parse(curv.at("k01").get<std::string>());
  r.curvature.k02 = Rational::parse(curv.at("k02").get<std::string>());
  r.curvature.k12 = Rational::parse(curv.at("k12").get<std::string>());
  r.r3_residual = tensor_from_json<4>(curv.at("r3_residual"));
  const Json& einstein = j.at("einstein");
  const std::string kind = einstein.at("kind").get<std::string>();
  for (const EinsteinKind k :
       {EinsteinKind::Einstein, EinsteinKind::L1ParaEta,
        EinsteinKind::L2ParaEta, EinsteinKind::ParaEta,
        EinsteinKind::EtaParacomplex, EinsteinKind::None})
    if (einstein_kind_name(k) == kind) r.einstein.kind = k;
  if (einstein.contains("lambda"))
    r.einstein.lambda =
        Rational::parse(einstein.at("lambda").get<std::string>());
  if (einstein.contains("mu"))
    r.einstein.mu = Rational::parse(einstein.at("mu").get<std::string>());
  if (einstein.contains("nu"))
    r.einstein.nu = Rational::parse(einstein.at("nu").get<std::string>());
  const Json& preds = j.at("predicates");
  r.killing_g = predicate_from_json(preds.at("killing-g"));
  r.killing_gt = predicate_from_json(preds.at("killing-gt"));
  r.biinvariant_phi = predicate_from_json(preds.at("biinvariant-phi"));
  r.killing_xi = predicate_from_json(preds.at("killing-xi"));
  const Json& flags = j.at("flags");
  r.flat = flags.at("flat").get<bool>();
  r.para_sasakian = flags.at("para_sasakian").get<bool>();
  r.f0 = flags.at("F0").get<bool>();
  return r;
}

}  // namespace apap
