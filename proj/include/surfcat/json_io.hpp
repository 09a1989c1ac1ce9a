#pragma once

#include <json.hpp>

#include "surfcat/mutation.hpp"

namespace surfcat {

using Json = nlohmann::ordered_json;

// Rationals go out as "p/q" (or "p" when integral).
std::string rational_text(const Rational& r);

Json to_json_value(const Triangulation& t);
Json to_json_value(const SurfaceInvariants& inv);
Json to_json_value(const QuiverWithPotential& qp);
Json to_json_value(const ObjectC& x);
Json to_json_value(const ARTriangle& tr);
Json to_json_value(const Component& c);
Json to_json_value(const ExtWitness& w);
Json to_json_value(const ExchangeTriangles& ex);
Json to_json_value(const CTCheck& ck);
Json to_json_value(const Band& b);

Json error_json(const Error& e);

}  // namespace surfcat
