#include "mabar/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace mabar {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex: expected [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json to_json(const CoefficientSeries& s) {
  Json arr = Json::array();
  for (const Complex& c : s.coeffs()) arr.push_back(to_json(c));
  return arr;
}

CoefficientSeries series_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("series: expected an array");
  std::vector<Complex> c;
  for (const Json& e : j) c.push_back(complex_from_json(e));
  return CoefficientSeries(std::move(c));
}

Json to_json(const CircleZeroPolynomial& a) {
  Json zeros = Json::array();
  for (const ZeroAngle& z : a.zeros()) zeros.push_back({{"theta", z.theta}, {"mult", z.mult}});
  return Json{{"classA", zeros}};
}

CircleZeroPolynomial class_a_from_json(const Json& j) {
  const Json& zeros = j.contains("classA") ? j.at("classA") : j;
  if (!zeros.is_array()) throw std::invalid_argument("classA: expected an array of zeros");
  std::vector<ZeroAngle> out;
  for (const Json& z : zeros) {
    if (z.is_array()) {
      // compact form [theta, mult]
      out.push_back({z.at(0).get<double>(), z.size() > 1 ? z.at(1).get<int>() : 1});
    } else {
      out.push_back({z.at("theta").get<double>(),
                     z.contains("mult") ? z.at("mult").get<int>() : 1});
    }
  }
  return CircleZeroPolynomial(std::move(out));
}

Json to_json(const RationalSymbol& a) {
  return Json{{"rational", {{"num", to_json(a.num())}, {"den", to_json(a.den())}}}};
}

RationalSymbol rational_from_json(const Json& j) {
  const Json& r = j.contains("rational") ? j.at("rational") : j;
  const CoefficientSeries num = series_from_json(r.at("num"));
  const CoefficientSeries den =
      r.contains("den") ? series_from_json(r.at("den")) : CoefficientSeries::one();
  return RationalSymbol(num, den);
}

Json to_json(const SingularFactorFunction& phi) {
  Json factors = Json::array();
  for (const CircleFactor& f : phi.factors())
    factors.push_back({{"theta", f.theta}, {"alpha", f.alpha}});
  return Json{{"singular", {{"rational", to_json(phi.rational_part()).at("rational")},
                            {"factors", factors}}}};
}

SingularFactorFunction singular_from_json(const Json& j) {
  const Json& s = j.contains("singular") ? j.at("singular") : j;
  RationalSymbol rational = s.contains("rational")
                                ? rational_from_json(s.at("rational"))
                                : RationalSymbol::constant(Complex(1.0));
  std::vector<CircleFactor> factors;
  if (s.contains("factors"))
    for (const Json& f : s.at("factors"))
      factors.push_back({f.at("theta").get<double>(), f.at("alpha").get<double>()});
  return SingularFactorFunction(std::move(rational), std::move(factors));
}

Json to_json(const Decomposition& d) {
  return Json{{"decomposition",
               {{"p", to_json(d.p)},
                {"fTilde", to_json(d.f_tilde)},
                {"division_residual", d.division_residual},
                {"interpolant_condition", d.interpolant_condition}}}};
}

Json to_json(const ExponentEntry& e) {
  return Json{{"theta", e.theta}, {"zero_mult", e.zero_mult},   {"alpha", e.alpha},
              {"required", e.required}, {"analytic", e.analytic}, {"ok", e.ok}};
}

Json to_json(const MembershipResult& m) {
  Json table = Json::array();
  for (const ExponentEntry& e : m.table) table.push_back(to_json(e));
  Json out{{"member", m.member}, {"exponent_table", table}};
  if (m.interpolant) out["interpolant"] = to_json(*m.interpolant);
  if (!m.obstruction.empty()) out["obstruction"] = m.obstruction;
  return out;
}

Json to_json(const MultiplierVerdict& v) {
  Json out{{"decision", to_string(v.decision)}, {"rule", v.rule}};
  Json witnesses = Json::object();
  if (v.quotient) witnesses["quotient"] = to_json(*v.quotient);
  if (v.witness) witnesses["factor"] = to_json(*v.witness);
  if (v.interpolant) witnesses["interpolant"] = to_json(*v.interpolant);
  Json table = Json::array();
  for (const ExponentEntry& e : v.exponent_table) table.push_back(to_json(e));
  witnesses["exponent_table"] = table;
  out["witnesses"] = witnesses;
  if (!v.obstruction.empty()) out["obstruction"] = v.obstruction;
  return out;
}

Json to_json(const OntoVerdict& v) {
  return Json{{"decision", to_string(v.decision)}, {"certificate", v.certificate}};
}

Json to_json(const CrofootReport& r) {
  return Json{{"sup_norm", r.sup_norm},
              {"rho", r.rho},
              {"expansion_terms", r.expansion_terms},
              {"tail_bound", r.tail_bound},
              {"trials", r.trials},
              {"max_forward_ratio", r.max_forward_ratio},
              {"max_inverse_ratio", r.max_inverse_ratio},
              {"forward_bound", r.forward_bound},
              {"inverse_bound", r.inverse_bound}};
}

Json to_json(const RangeElement& e) {
  return Json{{"f", to_json(e.f)}, {"g", to_json(e.g)}, {"norm", e.norm}};
}

Json to_json(const ShiftReport& r) {
  Json values = Json::array();
  for (const auto& [n, sigma] : r.section_values)
    values.push_back({{"n", n}, {"sigma_max", sigma}, {"gap", r.closed_form - sigma}});
  return Json{{"closed_form", r.closed_form},
              {"sections", values},
              {"maximizer_residual", r.maximizer_residual}};
}

Json to_json(const MateResult& m, const MateResidual& res) {
  Json contact = Json::array();
  for (const ZeroAngle& z : m.contact) contact.push_back({{"theta", z.theta}, {"order", z.mult}});
  return Json{{"mate", {{"b", to_json(m.b)},
                        {"residual", res.residual},
                        {"b0", to_json(res.b0)},
                        {"tail_energy", m.tail_energy},
                        {"contact", contact}}}};
}

Json to_json(const DecayFit& f) {
  return Json{{"c", f.c},
              {"logC", f.log_c},
              {"residual", f.residual},
              {"window", {f.window.n0, f.window.n1}},
              {"samples", f.samples},
              {"geometric", f.geometric},
              {"geometric_rate", f.geometric_rate}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_report(const std::vector<std::pair<std::string, std::string>>& preamble,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& [k, v] : preamble) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  return os.str();
}

}  // namespace mabar
