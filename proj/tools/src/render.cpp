#include "wms_cli/render.hpp"

#include <cstdlib>
#include <ctime>

namespace wms::cli
{

int default_precision()
{
    if (const char* env = std::getenv("WMS_PRECISION"))
    {
        char* end = nullptr;
        const long p = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && p >= 1 && p <= 1000)
            return static_cast<int>(p);
    }
    return 15;
}

Json exact_json(const Rational& v, int digits)
{
    return {{"exact", to_string(v)}, {"decimal", to_decimal(v, digits)}};
}

Json exact_json(const QuadraticNumber& v, int digits)
{
    return {{"exact", to_string(v)}, {"decimal", to_decimal(v, digits)}};
}

Json exact_json(const ExactValue& v, int digits)
{
    return {{"exact", to_string(v)}, {"decimal", to_decimal(v, digits)}};
}

std::string render(const Envelope& e)
{
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);
    Json j;
    j["tool"] = "wms";
    j["version"] = WMS_VERSION;
    j["scheme_digest"] = e.scheme_digest ? Json(*e.scheme_digest) : Json(nullptr);
    j["command"] = e.command;
    j["parameters"] = e.parameters;
    j["timestamp"] = stamp;
    j["payload"] = e.payload;
    return j.dump(2) + "\n";
}

} // namespace wms::cli
