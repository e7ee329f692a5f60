#include "cmcflat/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

Json complex_list(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(Json::array({z.real(), z.imag()}));
  return out;
}

std::vector<Complex> read_complex_list(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw ParseError(std::string("MiyataData: missing array \"") + field + "\"");
  std::vector<Complex> out;
  for (const auto& e : j[field]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError(std::string("MiyataData: entries of \"") + field + "\" must be [re, im]");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

std::vector<Scalar> read_scalar_list(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw ParseError(std::string("MiyataData: missing array \"") + field + "\"");
  std::vector<Scalar> out;
  for (const auto& e : j[field]) {
    if (!e.is_number()) throw ParseError(std::string("MiyataData: entries of \"") + field + "\" must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

Json rational_json(const Rational& q) { return q.str(); }

Json case_i_json(const TorusCaseI& c) {
  return Json{{"q", rational_json(c.q)}, {"lambda2_over_lambda1", rational_json(c.q * c.q)}};
}

}  // namespace

Json to_json(const MiyataData& d) {
  Json j;
  j["h"] = d.h;
  j["mu"] = complex_list(d.mu);
  j["eta"] = complex_list(d.eta);
  j["R"] = d.r_weights;
  j["Rp"] = d.rp_weights;
  return j;
}

MiyataData miyata_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("MiyataData JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("MiyataData JSON must be an object");
  if (!j.contains("h") || !j["h"].is_number()) throw ParseError("MiyataData: missing number \"h\"");
  MiyataData d;
  d.h = j["h"].get<double>();
  d.mu = read_complex_list(j, "mu");
  d.eta = read_complex_list(j, "eta");
  d.r_weights = read_scalar_list(j, "R");
  d.rp_weights = read_scalar_list(j, "Rp");
  return d;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks())
    checks.push_back(Json{{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  return Json{{"checks", checks}, {"samples", r.sample_count()}};
}

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double out = std::stod(buf);
  return out == 0.0 ? 0.0 : out;  // no "-0.0"
}

Json vector_json(const Vec2& v) {
  // Components at rounding level relative to the vector are printed as 0.
  const double floor = 1e-14 * v.norm();
  const auto clean = [&](double c) { return std::abs(c) <= floor ? 0.0 : round15(c); };
  return Json::array({clean(v.x()), clean(v.y())});
}

Json lattice_json(const Lattice2& lat) {
  Json gens = Json::array();
  for (const Vec2& g : lat.gens()) gens.push_back(vector_json(g));
  Json j{{"rank", lat.rank()}, {"generators", gens}};
  if (lat.exact_gram()) {
    const ExactGram& g = *lat.exact_gram();
    j["gram_over_pi_squared"] = Json::array({Json::array({g.g11.str(), g.g12.str()}), Json::array({g.g12.str(), g.g22.str()})});
  }
  return j;
}

Json to_json(const TorusCaseII& c) {
  const TorusParams& p = c.params;
  return Json{{"p", p.p},
              {"q", p.q},
              {"r", p.r},
              {"t", p.t},
              {"a", p.a.str()},
              {"b", p.b.str()},
              {"h", p.h.str()},
              {"s", p.s.str()},
              {"rho", round15(c.rho)},
              {"v1", vector_json(c.v1)},
              {"v2", vector_json(c.v2)},
              {"lattice_condition", c.lattice_condition},
              {"sublattice", lattice_json(c.sublattice)["generators"]}};
}

Json to_json(const TorusVerdict& v) {
  Json j;
  j["h"] = v.h.str();
  j["verdict"] = to_string(v.kind);
  if (v.case_i) {
    j["witness"] = case_i_json(*v.case_i);
    j["generators"] = lattice_json(v.case_i->lattice)["generators"];
  } else if (v.case_ii) {
    j["witness"] = to_json(*v.case_ii);
    j["generators"] = lattice_json(v.case_ii->lattice)["generators"];
  } else {
    j["witness"] = nullptr;
    j["generators"] = Json::array();
  }
  return j;
}

Json to_json(const AdmissibilityResult& r) {
  const auto points = [](const CircleSquareSet& s) {
    Json pts = Json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i)
      pts.push_back(Json{{"square", Json::array({round15(s.points[i].real()), round15(s.points[i].imag())})},
                         {"preimage", Json::array({s.preimages[i].first, s.preimages[i].second})}});
    return pts;
  };
  Json j;
  j["h"] = r.h.str();
  j["verdict"] = to_string(r.verdict);
  j["alpha"] = Json{{"radius_sq", r.alpha.radius_sq.str()}, {"points", points(r.alpha)}};
  j["gamma"] = Json{{"radius_sq", r.gamma.radius_sq.str()}, {"points", points(r.gamma)}};
  if (r.witness && r.data) {
    Json w;
    w["R"] = Json::array();
    w["Rp"] = Json::array();
    for (const Rational& q : r.witness->r_weights) w["R"].push_back(q.str());
    for (const Rational& q : r.witness->rp_weights) w["Rp"].push_back(q.str());
    w["m"] = r.data->m();
    w["m_prime"] = r.data->m_prime();
    w["data"] = to_json(*r.data);
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cmcflat
