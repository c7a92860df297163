#include "wms/spec.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wms/bfree.hpp"

namespace wms
{

using nlohmann::ordered_json;

namespace
{

void reject_unknown(const ordered_json& obj, const std::set<std::string>& known, const std::string& where)
{
    if (!obj.is_object())
        throw ValidationError("spec-shape", where + " must be an object");
    for (const auto& [key, _] : obj.items())
    {
        if (!known.contains(key))
            throw ValidationError("spec-unknown-key", "unknown key '" + key + "' in " + where);
    }
}

const ordered_json& require(const ordered_json& obj, const std::string& key, const std::string& where)
{
    if (!obj.contains(key))
        throw ValidationError("spec-missing-key", where + " needs '" + key + "'");
    return obj.at(key);
}

std::int64_t as_int(const ordered_json& j, const std::string& what)
{
    if (!j.is_number_integer())
        throw ValidationError("spec-type", what + " must be an integer");
    return j.get<std::int64_t>();
}

// Exact values may be written as strings or as JSON integers.
std::string canonical_exact(const ordered_json& j, std::int64_t d, const std::string& what)
{
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<std::int64_t>());
    else
        throw ValidationError("spec-type", what + " must be an exact string");
    try
    {
        return to_string(parse_quadratic(text, d));
    }
    catch (const ParseError& e)
    {
        throw ParseError(what + ": " + e.what(), e.position());
    }
}

std::array<std::string, 2> exact_pair(const ordered_json& j, std::int64_t d, const std::string& what)
{
    if (!j.is_array() || j.size() != 2)
        throw ValidationError("spec-shape", what + " must be a pair [g, h]");
    return {canonical_exact(j[0], d, what + "[0]"), canonical_exact(j[1], d, what + "[1]")};
}

std::vector<std::int64_t> int_list(const ordered_json& j, const std::string& what)
{
    if (!j.is_array())
        throw ValidationError("spec-shape", what + " must be a list of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : j)
        out.push_back(as_int(x, what));
    return out;
}

void parse_euclidean(const ordered_json& root, SchemeSpec& spec)
{
    reject_unknown(root, {"kind", "d", "basis", "window", "seed", "precision"}, "spec");
    spec.d = as_int(require(root, "d", "spec"), "d");
    if (!is_square_free(spec.d) || spec.d < 2)
        throw ValidationError("field-parameter", "d = " + std::to_string(spec.d) + " is not square-free and >= 2");
    const auto& basis = require(root, "basis", "spec");
    reject_unknown(basis, {"v", "w"}, "basis");
    spec.v = exact_pair(require(basis, "v", "basis"), spec.d, "basis.v");
    spec.w = exact_pair(require(basis, "w", "basis"), spec.d, "basis.w");
    const auto& window = require(root, "window", "spec");
    reject_unknown(window, {"intervals"}, "window");
    const auto& ivs = require(window, "intervals", "window");
    if (!ivs.is_array())
        throw ValidationError("spec-shape", "window.intervals must be a list of [lo, hi] pairs");
    for (std::size_t i = 0; i < ivs.size(); ++i)
        spec.intervals.push_back(exact_pair(ivs[i], spec.d, "window.intervals[" + std::to_string(i) + "]"));
}

void parse_residue(const ordered_json& root, SchemeSpec& spec)
{
    reject_unknown(root, {"kind", "moduli", "preset", "window", "seed", "precision"}, "spec");
    if (root.contains("moduli") == root.contains("preset"))
        throw ValidationError("preset-or-moduli", "residue spec needs exactly one of 'moduli' and 'preset'");
    if (root.contains("preset"))
    {
        if (!root["preset"].is_string())
            throw ValidationError("spec-type", "preset must be a string");
        spec.preset = root["preset"].get<std::string>();
        spec.moduli = preset_moduli(*spec.preset);
    }
    else
    {
        spec.moduli = int_list(root["moduli"], "moduli");
    }

    const auto& window = require(root, "window", "spec");
    reject_unknown(window, {"forbidden", "allowed"}, "window");
    if (window.contains("forbidden") == window.contains("allowed"))
        throw ValidationError("window-form", "residue window needs exactly one of 'forbidden' and 'allowed'");
    spec.form = window.contains("allowed") ? SchemeSpec::ResidueForm::allowed : SchemeSpec::ResidueForm::forbidden;
    const auto& lists = spec.form == SchemeSpec::ResidueForm::allowed ? window["allowed"] : window["forbidden"];
    if (!lists.is_array())
        throw ValidationError("spec-shape", "residue window must be a list of residue lists");
    for (std::size_t k = 0; k < lists.size(); ++k)
    {
        auto rs = int_list(lists[k], "window residues");
        std::sort(rs.begin(), rs.end());
        rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
        spec.residues.push_back(std::move(rs));
    }
}

} // namespace

std::vector<std::int64_t> preset_moduli(std::string_view preset)
{
    auto parse_int = [&](std::string_view s, std::size_t offset) {
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw ParseError("bad integer in preset '" + std::string(preset) + "'", offset);
        return value;
    };
    if (preset.starts_with("squarefree:"))
    {
        const auto k = parse_int(preset.substr(11), 11);
        if (k < 0 || k > 64)
            throw ValidationError("preset-range", "squarefree:K needs 0 <= K <= 64");
        return BFreeBasis::squarefree(static_cast<std::size_t>(k)).moduli();
    }
    if (preset.starts_with("moduli:"))
    {
        std::vector<std::int64_t> out;
        std::size_t start = 7;
        while (start <= preset.size())
        {
            const auto comma = std::min(preset.find(',', start), preset.size());
            out.push_back(parse_int(preset.substr(start, comma - start), start));
            start = comma + 1;
        }
        return out;
    }
    throw ParseError("unknown preset '" + std::string(preset) + "' (expected squarefree:K or moduli:a,b,c)", 0);
}

SchemeSpec parse_spec(std::string_view text)
{
    ordered_json root;
    try
    {
        root = ordered_json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
    }
    if (!root.is_object())
        throw ValidationError("spec-shape", "spec must be a JSON object");

    SchemeSpec spec;
    const auto& kind = require(root, "kind", "spec");
    if (kind == "euclidean2d")
    {
        spec.kind = SchemeSpec::Kind::euclidean2d;
        parse_euclidean(root, spec);
    }
    else if (kind == "residue")
    {
        spec.kind = SchemeSpec::Kind::residue;
        parse_residue(root, spec);
    }
    else
    {
        throw ValidationError("spec-kind", "kind must be 'euclidean2d' or 'residue'");
    }

    if (root.contains("seed"))
    {
        if (!root["seed"].is_number_unsigned())
            throw ValidationError("spec-type", "seed must be a nonnegative integer");
        spec.seed = root["seed"].get<std::uint64_t>();
    }
    if (root.contains("precision"))
    {
        const auto p = as_int(root["precision"], "precision");
        if (p < 1 || p > 1000)
            throw ValidationError("precision-range", "precision must be in [1, 1000]");
        spec.precision = static_cast<int>(p);
    }
    build(spec);
    return spec;
}

SchemeSpec load_spec(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("spec-readable", "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string serialize(const SchemeSpec& spec)
{
    ordered_json root;
    if (spec.kind == SchemeSpec::Kind::euclidean2d)
    {
        root["kind"] = "euclidean2d";
        root["d"] = spec.d;
        root["basis"]["v"] = spec.v;
        root["basis"]["w"] = spec.w;
        root["window"]["intervals"] = spec.intervals;
    }
    else
    {
        root["kind"] = "residue";
        if (spec.preset)
            root["preset"] = *spec.preset;
        else
            root["moduli"] = spec.moduli;
        const char* form = spec.form == SchemeSpec::ResidueForm::allowed ? "allowed" : "forbidden";
        root["window"][form] = spec.residues;
    }
    if (spec.seed)
        root["seed"] = *spec.seed;
    if (spec.precision)
        root["precision"] = *spec.precision;
    return root.dump(2) + "\n";
}

std::string digest(const SchemeSpec& spec)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize(spec))
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Model build(const SchemeSpec& spec)
{
    if (spec.kind == SchemeSpec::Kind::euclidean2d)
    {
        auto q = [&](const std::string& s) { return parse_quadratic(s, spec.d); };
        auto scheme = EuclideanScheme::build({q(spec.v[0]), q(spec.v[1])}, {q(spec.w[0]), q(spec.w[1])});
        std::vector<Interval> ivs;
        for (const auto& [lo, hi] : spec.intervals)
            ivs.push_back({q(lo), q(hi)});
        return EuclideanModel{std::move(scheme), IntervalWindow::from_intervals(std::move(ivs), spec.d)};
    }
    auto scheme = ResidueScheme::build(spec.moduli);
    auto window = spec.form == SchemeSpec::ResidueForm::allowed
                      ? ResidueWindow::from_allowed(spec.moduli, spec.residues)
                      : ResidueWindow::from_forbidden(spec.moduli, spec.residues);
    return ResidueModel{std::move(scheme), std::move(window)};
}

} // namespace wms
