#include <doctest.h>

#include "wms/error.hpp"
#include "wms/spec.hpp"

using namespace wms;

namespace
{

const char* fib = R"J({
  "kind": "euclidean2d",
  "d": 5,
  "basis": {"v": ["1", 1], "w": ["1/2+1/2*sqrt(5)", "1/2-1/2*sqrt(5)"]},
  "window": {"intervals": [["-1", "-1/2+1/2*sqrt(5)"]]},
  "seed": 3
})J";

template <class E>
std::string invariant_of(const std::string& text)
{
    try
    {
        parse_spec(text);
    }
    catch (const ValidationError& e)
    {
        return e.invariant();
    }
    catch (const E&)
    {
        return "parse";
    }
    return "";
}

} // namespace

TEST_SUITE("spec")
{
    TEST_CASE("Euclidean spec round trip")
    {
        const auto s = parse_spec(fib);
        CHECK(s.kind == SchemeSpec::Kind::euclidean2d);
        CHECK(s.v[0] == "1");
        CHECK(s.seed == 3u);
        const auto again = parse_spec(serialize(s));
        CHECK(again == s);
        CHECK(serialize(again) == serialize(s));
        CHECK(digest(again) == digest(s));
        CHECK(digest(s).size() == 16);
        const auto m = std::get<EuclideanModel>(build(s));
        CHECK(m.scheme.d() == 5);
    }

    TEST_CASE("residue spec with preset")
    {
        const auto s = parse_spec(R"J({"kind":"residue","preset":"squarefree:3","window":{"forbidden":[[0],[0],[0]]}})J");
        CHECK(s.moduli == std::vector<std::int64_t>{4, 9, 25});
        CHECK(parse_spec(serialize(s)) == s);
        const auto m = std::get<ResidueModel>(build(s));
        CHECK(haar(m.window) == make_rational(16, 25));
        CHECK(preset_moduli("moduli:4,9,25") == std::vector<std::int64_t>{4, 9, 25});
        CHECK_THROWS_AS(preset_moduli("primes:3"), ParseError);
        CHECK_THROWS_AS(preset_moduli("moduli:4,,9"), ParseError);
    }

    TEST_CASE("validation errors are named")
    {
        CHECK(invariant_of<ParseError>(R"J({"kind":"residue","moduli":[4,6],"window":{"forbidden":[[0],[0]]}})J") ==
              "moduli-coprime");
        CHECK(invariant_of<ParseError>(R"J({"kind":"residue","moduli":[4,9],"window":{"forbidden":[[0],[0]]},"extra":1})J") ==
              "spec-unknown-key");
        CHECK(invariant_of<ParseError>(R"J({"kind":"residue","moduli":[4,9],"window":{"forbidden":[[0]]}})J") ==
              "window-arity");
        CHECK(invariant_of<ParseError>(R"J({"kind":"torus"})J") == "spec-kind");
        CHECK(invariant_of<ParseError>(R"J({"kind":"euclidean2d","d":4})J") == "field-parameter");
        CHECK(invariant_of<ParseError>(R"J({"kind":"euclidean2d","d":2,"basis":{"v":["1","sqrt(2)"],"w":["2","2*sqrt(2)"]},"window":{"intervals":[]}})J") ==
              "nonzero-determinant");
        CHECK(invariant_of<ParseError>(R"J({"kind":"euclidean2d","d":2,"basis":{"v":["1","1"],"w":["sqrt(2)","-sqrt(2)"]},"window":{"intervals":[["1","0"]]}})J") ==
              "interval-ordered");
    }

    TEST_CASE("malformed input reports a position")
    {
        try
        {
            parse_spec(R"J({"kind": "residue", "moduli": [4, 9,})J");
            FAIL("expected ParseError");
        }
        catch (const ParseError& e)
        {
            CHECK(e.position() > 30);
        }
        try
        {
            parse_spec(R"J({"kind":"euclidean2d","d":2,"basis":{"v":["1","1"],"w":["sqrt(2)","-sqrt(2)"]},"window":{"intervals":[["-1/2*sqrt(3)","1"]]}})J");
            FAIL("expected ParseError");
        }
        catch (const ParseError& e)
        {
            CHECK(std::string(e.what()).find("window.intervals[0]") != std::string::npos);
        }
    }
}
