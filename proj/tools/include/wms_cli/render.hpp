#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "wms/dynamics.hpp"
#include "wms/spec.hpp"

namespace wms::cli
{

using Json = nlohmann::ordered_json;

/// Decimal digits: WMS_PRECISION if set and valid, else 15.
int default_precision();

Json exact_json(const ExactValue& v, int digits);
Json exact_json(const Rational& v, int digits);
Json exact_json(const QuadraticNumber& v, int digits);

struct Envelope
{
    std::string command;
    std::optional<std::string> scheme_digest;
    Json parameters = Json::object();
    Json payload = Json::object();
};

/// version, digest, command, parameters, timestamp, payload; pretty printed.
std::string render(const Envelope& e);

} // namespace wms::cli
