#ifndef MABAR_SERIALIZE_HPP
#define MABAR_SERIALIZE_HPP

#include <json.hpp>

#include "mabar/decay.hpp"
#include "mabar/mate.hpp"
#include "mabar/multipliers.hpp"
#include "mabar/rangespace.hpp"
#include "mabar/shiftop.hpp"

namespace mabar {

using Json = nlohmann::ordered_json;

// Complex numbers serialize as [re, im]; angles are radians.
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const CoefficientSeries& s);                 // [[re,im], ...]
CoefficientSeries series_from_json(const Json& j);

Json to_json(const CircleZeroPolynomial& a);              // {"classA":[{"theta","mult"}]}
CircleZeroPolynomial class_a_from_json(const Json& j);

Json to_json(const RationalSymbol& a);                    // {"rational":{"num","den"}}
RationalSymbol rational_from_json(const Json& j);

Json to_json(const SingularFactorFunction& phi);          // {"singular":{"rational","factors"}}
SingularFactorFunction singular_from_json(const Json& j);

Json to_json(const Decomposition& d);
Json to_json(const ExponentEntry& e);
Json to_json(const MembershipResult& m);
Json to_json(const MultiplierVerdict& v);
Json to_json(const OntoVerdict& v);
Json to_json(const CrofootReport& r);
Json to_json(const RangeElement& e);
Json to_json(const ShiftReport& r);
Json to_json(const MateResult& m, const MateResidual& res);
Json to_json(const DecayFit& f);

// CSV with "# key=value" preamble lines; deterministic formatting.
std::string csv_report(const std::vector<std::pair<std::string, std::string>>& preamble,
                       const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

std::string format_double(double v);

}  // namespace mabar

#endif  // MABAR_SERIALIZE_HPP
