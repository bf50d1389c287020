#pragma once

#include <json.hpp>

#include "d21a/liealg.hpp"
#include "d21a/pairing.hpp"
#include "d21a/report.hpp"
#include "d21a/sb.hpp"
#include "d21a/superpoly.hpp"

namespace d21a {

using Json = nlohmann::json;

Json poly_to_json(const SuperPoly& p);
SuperPoly poly_from_json(const Json& j);

Json exppoly_to_json(const ExpPoly& f);
ExpPoly exppoly_from_json(const Json& j);

Json diffop_to_json(const DiffOp& d);

Json table_to_json(const StructureTable& t);

Json report_to_json(const CheckReport& r);

Json mat_to_json(const Mat& m);
Json gram_to_json(const GramMatrix& g);

Json welem_to_json(const WElem& w);
WElem welem_from_json(const Json& j);

} // namespace d21a
