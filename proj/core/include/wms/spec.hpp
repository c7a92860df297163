#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wms/scheme.hpp"
#include "wms/window.hpp"

namespace wms
{

/// Scheme description as stored in a JSON file. Exact values are kept as
/// canonical exact strings, so parse(serialize(s)) == s.
struct SchemeSpec
{
    enum class Kind
    {
        euclidean2d,
        residue,
    };
    enum class ResidueForm
    {
        forbidden,
        allowed,
    };

    Kind kind = Kind::euclidean2d;

    // euclidean2d
    std::int64_t d = 0;
    std::array<std::string, 2> v;
    std::array<std::string, 2> w;
    std::vector<std::array<std::string, 2>> intervals;

    // residue: either a preset ("squarefree:K", "moduli:a,b,c") or explicit moduli
    std::optional<std::string> preset;
    std::vector<std::int64_t> moduli;
    ResidueForm form = ResidueForm::forbidden;
    std::vector<std::vector<std::int64_t>> residues;

    std::optional<std::uint64_t> seed;
    std::optional<int> precision;

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

/// Throws ParseError (with byte offset) for malformed text and
/// ValidationError for well-formed but invalid content.
SchemeSpec parse_spec(std::string_view text);
SchemeSpec load_spec(const std::filesystem::path& path);

/// Canonical JSON, two-space indented, keys in a fixed order.
std::string serialize(const SchemeSpec& spec);
/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string digest(const SchemeSpec& spec);

/// Moduli named by a preset string.
std::vector<std::int64_t> preset_moduli(std::string_view preset);

struct EuclideanModel
{
    EuclideanScheme scheme;
    IntervalWindow window;
};

struct ResidueModel
{
    ResidueScheme scheme;
    ResidueWindow window;
};

using Model = std::variant<EuclideanModel, ResidueModel>;

Model build(const SchemeSpec& spec);

} // namespace wms
