#ifndef RESINT_JSON_IO_HPP
#define RESINT_JSON_IO_HPP

#include <json.hpp>

#include "resint/oracle.hpp"
#include "resint/powers.hpp"
#include "resint/residual.hpp"
#include "resint/secant.hpp"
#include "resint/series.hpp"

namespace resint {

using Json = nlohmann::json;

// Numbers are emitted as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; non-integer rationals as "p/q" strings.
Json to_json(const Int& v);
Json to_json(const Rat& v);
Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);

// series literal: {"num":[[e,c],...],"pole":k}
Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);

// numerical polynomial: {"m":m,"e":[...]}
Json to_json(const NumericalPolynomial& p);
NumericalPolynomial numpoly_from_json(const Json& j);

Json to_json(const std::vector<Rat>& v);
std::vector<Rat> ratvec_from_json(const Json& j);

// ideal file: {"vars":n,"field":{"prime":p}|{"rational":true},
//              "gens":[{"deg":d,"terms":[[[e...],c],...]},...],"seed":s}
Json to_json(const IdealPresentation& p);
IdealPresentation ideal_from_json(const Json& j);

Json to_json(const HilbertFunctionTable& t);

// human-readable "numerator / (1-t)^k" rendering used in table reports
std::string series_pretty(const RationalSeries& s);

}  // namespace resint

#endif
