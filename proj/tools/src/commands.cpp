#include "wms_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wms/bfree.hpp"
#include "wms/configuration.hpp"
#include "wms/dynamics.hpp"
#include "wms/rng.hpp"
#include "wms/spec.hpp"
#include "wms/vanhove.hpp"
#include "wms_cli/render.hpp"

namespace wms::cli
{

namespace
{

struct Context
{
    std::ostream& out;
    std::ostream& err;
    std::optional<int> precision_flag;
    int digits = 15;
};

// Writes to --out when given, else to the context stream.
class Sink
{
  public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty())
        {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw ValidationError("output-writable", "cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

  private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try
    {
        v = std::stoll(s, &used);
    }
    catch (const std::exception&)
    {
        throw ParseError("bad integer '" + s + "' in " + what, 0);
    }
    if (used != s.size())
        throw ParseError("bad integer '" + s + "' in " + what, used);
    return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what)
{
    std::vector<std::int64_t> out;
    for (const auto& part : split(s, ','))
        out.push_back(parse_int(part, what));
    return out;
}

bool is_origin(const std::string& p)
{
    return p.empty() || p == "0" || p == "origin";
}

// "s,t": basis coordinates of x = s*v + t*w, reduced to the fundamental domain.
EuclideanPoint parse_point(const EuclideanScheme& scheme, const std::string& text)
{
    if (is_origin(text))
        return scheme.origin();
    const auto parts = split(text, ',');
    if (parts.size() != 2)
        throw ParseError("Euclidean point must be 's,t'", 0);
    const auto s = parse_quadratic(parts[0], scheme.d());
    const auto t = parse_quadratic(parts[1], scheme.d());
    return reduce(scheme, {s * scheme.v().g + t * scheme.w().g, s * scheme.v().h + t * scheme.w().h});
}

// "r1,...,rK": internal residues with physical part 0.
ResiduePoint parse_point(const ResidueScheme& scheme, const std::string& text)
{
    if (is_origin(text))
        return scheme.origin();
    auto h = parse_int_list(text, "point");
    if (h.size() != scheme.moduli().size())
        throw SpaceMismatch("point lists " + std::to_string(h.size()) + " residues for " +
                            std::to_string(scheme.moduli().size()) + " moduli");
    return reduce(scheme, Integer(0), h);
}

Json point_json(const EuclideanScheme&, const EuclideanPoint& x)
{
    return {{"s", to_string(x.s)}, {"t", to_string(x.t)}};
}

Json point_json(const ResidueScheme&, const ResiduePoint& x)
{
    return Json(x.x);
}

// "m:n;m:n"
LatticePattern parse_pattern(const EuclideanScheme&, const std::string& text)
{
    std::vector<LatticeIndex> out;
    for (const auto& part : split(text, ';'))
    {
        const auto mn = split(part, ':');
        if (mn.size() != 2)
            throw ParseError("lattice pattern element '" + part + "' must be m:n", 0);
        out.push_back({parse_int(mn[0], "pattern"), parse_int(mn[1], "pattern")});
    }
    return LatticePattern(std::move(out));
}

ResiduePattern parse_pattern(const ResidueScheme&, const std::string& text)
{
    return ResiduePattern(parse_int_list(text, "pattern"));
}

struct Loaded
{
    SchemeSpec spec;
    Model model;
};

Loaded load(const std::string& path)
{
    auto spec = load_spec(path);
    auto model = build(spec);
    return {std::move(spec), std::move(model)};
}

int resolve_digits(const Context& ctx, const SchemeSpec* spec)
{
    if (ctx.precision_flag)
        return *ctx.precision_flag;
    if (spec && spec->precision)
        return *spec->precision;
    return default_precision();
}

const char* case_name(IntervalCase c)
{
    return c == IntervalCase::case_one ? "CaseI" : "CaseII";
}

// Topologically regular: W is the closure of its interior.
bool is_regular(const IntervalWindow& w)
{
    return std::all_of(w.intervals().begin(), w.intervals().end(), [](const Interval& iv) { return iv.lo < iv.hi; });
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(Context& ctx, const std::string& path, bool json)
{
    const auto [spec, model] = load(path);
    const int digits = resolve_digits(ctx, &spec);
    Json p;
    p["kind"] = spec.kind == SchemeSpec::Kind::euclidean2d ? "euclidean2d" : "residue";
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, EuclideanModel>)
            {
                p["d"] = m.scheme.d();
                p["determinant"] = exact_json(m.scheme.determinant(), digits);
                p["density"] = exact_json(m.scheme.density(), digits);
                p["haar"] = exact_json(haar(m.window), digits);
                p["limit_density"] = exact_json(limit_density(m.scheme, m.window), digits);
                p["aperiodic"] = is_aperiodic(m.window);
                p["regular"] = is_regular(m.window);
                if (m.window.intervals().size() == 1 && is_regular(m.window))
                    p["interval_case"] = case_name(classify_interval(m.scheme, m.window));
                else
                    p["interval_case"] = nullptr;
            }
            else
            {
                p["moduli"] = m.scheme.moduli();
                p["truncation"] = m.scheme.truncation();
                p["period"] = m.scheme.period().get_str();
                p["density"] = exact_json(m.scheme.density(), digits);
                p["haar"] = exact_json(haar(m.window), digits);
                p["limit_density"] = exact_json(limit_density(m.scheme, m.window), digits);
                p["aperiodic"] = is_aperiodic(m.window);
                // Clopen in the finite product: regular, empty boundary.
                p["regular"] = true;
                p["truncated"] = true;
            }
        },
        model);
    p["checks"] = "ok";

    if (json)
    {
        ctx.out << render({"validate", digest(spec), {{"spec", path}}, p});
        return ok;
    }
    ctx.out << "scheme: " << p["kind"].get<std::string>() << "\n";
    ctx.out << "digest: " << digest(spec) << "\n";
    for (const auto& [key, value] : p.items())
    {
        if (key == "kind")
            continue;
        if (value.is_object() && value.contains("exact"))
            ctx.out << key << ": " << value["exact"].get<std::string>() << " (" << value["decimal"].get<std::string>()
                    << ")\n";
        else if (value.is_string())
            ctx.out << key << ": " << value.get<std::string>() << "\n";
        else
            ctx.out << key << ": " << value.dump() << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(Context& ctx, const std::string& path, const std::string& point, const std::string& range,
                 const std::string& out_path)
{
    const auto [spec, model] = load(path);
    const int digits = resolve_digits(ctx, &spec);
    Sink sink(out_path, ctx.out);
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            const auto x = parse_point(m.scheme, point);
            if constexpr (std::is_same_v<M, EuclideanModel>)
            {
                const auto r = parse_quadratic(range, m.scheme.d());
                if (sign(r) <= 0)
                    throw ValidationError("range-positive", "range R must be > 0");
                const auto config = enumerate(m.scheme, x, m.window, RealRegion{-r, r});
                sink.get() << "index_m,index_n,physical_exact,physical_decimal\n";
                for (std::size_t i = 0; i < config.size(); ++i)
                    sink.get() << config.indices[i].m << ',' << config.indices[i].n << ','
                               << to_string(config.physical[i]) << ',' << to_decimal(config.physical[i], digits)
                               << '\n';
            }
            else
            {
                const auto r = parse_int(range, "range");
                if (r <= 0)
                    throw ValidationError("range-positive", "range R must be > 0");
                const auto config = enumerate(m.scheme, x, m.window, IntegerRegion{-r, r});
                sink.get() << "n,physical\n";
                for (auto n : config.points)
                    sink.get() << n << ',' << n << '\n';
            }
        },
        model);
    return ok;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(Context& ctx, const std::string& path, const std::string& point, const std::string& n_list,
                const std::string& format, const std::string& out_path)
{
    const auto [spec, model] = load(path);
    const int digits = resolve_digits(ctx, &spec);
    const auto ns = parse_int_list(n_list, "n-list");
    DensityReport report;
    Json point_j;
    std::visit(
        [&](const auto& m) {
            const auto x = parse_point(m.scheme, point);
            point_j = point_json(m.scheme, x);
            report = density_report(m.scheme, x, m.window, ns);
        },
        model);

    Sink sink(out_path, ctx.out);
    if (format == "csv")
    {
        sink.get() << "n,count,empirical,limit,deviation,bound_margin\n";
        for (const auto& r : report.rows)
            sink.get() << r.n << ',' << r.count << ',' << to_string(r.empirical) << ',' << to_string(r.limit) << ','
                       << to_string(r.deviation) << ',' << (r.bound_margin ? to_string(*r.bound_margin) : "")
                       << '\n';
        return ok;
    }

    Json rows = Json::array();
    bool bound_holds = true;
    for (const auto& r : report.rows)
    {
        Json row{{"n", r.n},
                 {"count", r.count},
                 {"measure", exact_json(r.measure, digits)},
                 {"empirical", exact_json(r.empirical, digits)},
                 {"limit", exact_json(r.limit, digits)},
                 {"deviation", exact_json(r.deviation, digits)}};
        row["correction"] = r.correction ? exact_json(*r.correction, digits) : Json(nullptr);
        row["bound_margin"] = r.bound_margin ? exact_json(*r.bound_margin, digits) : Json(nullptr);
        if (r.bound_margin && sign(*r.bound_margin) < 0)
            bound_holds = false;
        rows.push_back(std::move(row));
    }
    Json payload{{"measure_convention", report.measure_convention},
                 {"point", point_j},
                 {"rows", rows},
                 {"bound_holds", bound_holds}};
    sink.get() << render({"density", digest(spec), {{"spec", path}, {"point", point}, {"n", ns}}, payload});
    return ok;
}

// ---------------------------------------------------------------------------
// freq

int cmd_freq(Context& ctx, const std::string& path, const std::string& point, const std::string& pattern_text,
             std::int64_t n, const std::string& region_text, const std::string& out_path)
{
    const auto [spec, model] = load(path);
    const int digits = resolve_digits(ctx, &spec);
    Json payload;
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            const auto x = parse_point(m.scheme, point);
            const auto pattern = parse_pattern(m.scheme, pattern_text);
            const auto patterns = std::vector{pattern};
            GenericityReport report;
            if constexpr (std::is_same_v<M, EuclideanModel>)
            {
                RealRegion region = centered_region(m.scheme, n);
                if (!region_text.empty())
                {
                    const auto parts = split(region_text, ',');
                    if (parts.size() != 2)
                        throw ParseError("region must be 'lo,hi'", 0);
                    region = {parse_quadratic(parts[0], m.scheme.d()), parse_quadratic(parts[1], m.scheme.d())};
                }
                report = genericity_report(m.scheme, x, m.window, std::span(patterns), region);
            }
            else
            {
                IntegerRegion region = centered_region(m.scheme, n);
                if (!region_text.empty())
                {
                    const auto b = parse_int_list(region_text, "region");
                    if (b.size() != 2)
                        throw ParseError("region must be 'lo,hi'", 0);
                    region = {b[0], b[1]};
                }
                report = genericity_report(m.scheme, x, m.window, std::span(patterns), region);
            }
            const auto& r = report.rows.front();
            payload = Json{{"point", point_json(m.scheme, x)},
                           {"pattern", r.pattern},
                           {"region", r.region},
                           {"empirical", exact_json(r.empirical, digits)},
                           {"limit", exact_json(r.limit, digits)},
                           {"deviation", exact_json(r.deviation, digits)}};
        },
        model);
    Json params{{"spec", path}, {"point", point}, {"pattern", pattern_text}};
    if (region_text.empty())
        params["n"] = n;
    else
        params["region"] = region_text;
    Sink sink(out_path, ctx.out);
    sink.get() << render({"freq", digest(spec), params, payload});
    return ok;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(Context& ctx, const std::string& path, const std::string& point)
{
    const auto [spec, model] = load(path);
    Json payload;
    std::visit(
        [&](const auto& m) {
            const auto x = parse_point(m.scheme, point);
            payload["point"] = point_json(m.scheme, x);
            payload["continuity"] = is_continuity_point(m.scheme, m.window, x);
            payload["zero"] = is_zero_point(m.scheme, m.window, x);
            payload["support"] = in_support_of_mirsky(m.scheme, m.window, x);
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, ResidueModel>)
                payload["truncated"] = true;
        },
        model);
    ctx.out << render({"classify", digest(spec), {{"spec", path}, {"point", point}}, payload});
    return ok;
}

// ---------------------------------------------------------------------------
// sample

int cmd_sample(Context& ctx, const std::string& path, std::optional<std::uint64_t> seed_flag, std::int64_t count,
               std::int64_t n, std::int64_t generic_count, const std::string& out_path)
{
    const auto [spec, model] = load(path);
    const int digits = resolve_digits(ctx, &spec);
    if (count < 1)
        throw ValidationError("sample-count", "count must be >= 1");
    const std::uint64_t seed = seed_flag ? *seed_flag : spec.seed.value_or(0);
    Json payload;
    std::visit(
        [&](const auto& m) {
            const auto frac = continuity_fraction(m.scheme, m.window, seed, static_cast<std::size_t>(count));
            payload["continuity_fraction"] = exact_json(frac, digits);
            // Genericity summary: singleton-pattern density deviation at n for the first samples.
            const auto points = sample_torus(m.scheme, seed, static_cast<std::size_t>(std::min(count, generic_count)));
            const auto limit = limit_density(m.scheme, m.window);
            Json rows = Json::array();
            double worst = 0;
            for (const auto& x : points)
            {
                const Rational emp = empirical_density(m.scheme, x, m.window, n);
                ExactValue dev;
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, EuclideanModel>)
                    dev = QuadraticNumber(emp, m.scheme.d()) - limit;
                else
                    dev = Rational(emp - limit);
                worst = std::max(worst, std::abs(std::stod(to_decimal(dev, 17))));
                rows.push_back({{"point", point_json(m.scheme, x)},
                                {"empirical", exact_json(emp, digits)},
                                {"deviation", exact_json(dev, digits)}});
            }
            payload["limit_density"] = exact_json(limit, digits);
            payload["genericity"] = {{"n", n}, {"rows", rows}, {"max_abs_deviation_decimal", worst}};
        },
        model);
    payload["rng"] = SplitMix64::algorithm;
    Sink sink(out_path, ctx.out);
    sink.get() << render({"sample",
                          digest(spec),
                          {{"spec", path}, {"seed", seed}, {"count", count}, {"n", n}, {"generic_count", generic_count}},
                          payload});
    return ok;
}

// ---------------------------------------------------------------------------
// bfree

int cmd_bfree(Context& ctx, const std::string& basis_text, const std::string& pattern_text,
              const std::string& sieve_range, const std::string& y_point, std::int64_t y_periods,
              const std::string& out_path)
{
    const auto moduli = preset_moduli(basis_text);
    const auto basis = basis_text.starts_with("squarefree:") ? BFreeBasis::squarefree(moduli.size())
                                                              : BFreeBasis::from_moduli(moduli);
    const int digits = resolve_digits(ctx, nullptr);

    if (!sieve_range.empty())
    {
        const auto b = parse_int_list(sieve_range, "sieve");
        if (b.size() != 2)
            throw ParseError("sieve range must be 'lo,hi'", 0);
        Sink sink(out_path, ctx.out);
        sink.get() << "n,bfree\n";
        for (const auto& row : sieve(basis, {b[0], b[1]}))
            sink.get() << row.n << ',' << (row.bfree ? 1 : 0) << '\n';
        return ok;
    }

    SchemeSpec spec;
    spec.kind = SchemeSpec::Kind::residue;
    spec.preset = basis_text;
    spec.moduli = basis.moduli();
    spec.residues.assign(basis.truncation(), {0});

    const auto window = bfree_window(basis);
    Json payload{{"label", basis.label()},
                 {"moduli", basis.moduli()},
                 {"truncation", basis.truncation()},
                 {"period", basis.period().get_str()},
                 {"haar", exact_json(haar(window), digits)}};

    // Truncated density for every prefix of the basis; nonincreasing in K.
    Json prefix = Json::array();
    for (std::size_t k = 0; k <= basis.truncation(); ++k)
    {
        const auto sub = BFreeBasis::from_moduli({basis.moduli().begin(), basis.moduli().begin() + k});
        prefix.push_back({{"K", k}, {"density", exact_json(haar(bfree_window(sub)), digits)}});
    }
    payload["density_by_truncation"] = prefix;

    if (!pattern_text.empty())
    {
        const auto pattern = parse_int_list(pattern_text, "pattern");
        const auto pat = ResiduePattern(pattern);
        payload["pattern"] = to_string(pat);
        payload["period_frequency"] = exact_json(exact_period_frequency(basis, pattern), digits);
        payload["limit_frequency"] = exact_json(pattern_frequency_limit(basis.scheme(), window, pat), digits);
    }

    if (y_periods > 0)
    {
        const auto x = parse_point(basis.scheme(), y_point);
        const Integer span = basis.period() * y_periods;
        if (!span.fits_slong_p() || span.get_si() > 100'000'000)
            throw Unsupported("Y census region too large");
        const auto config = enumerate(basis.scheme(), x, window, IntegerRegion{-span.get_si(), span.get_si()});
        const auto verdict = y_membership(basis, config);
        Json census = Json::array();
        for (const auto& c : verdict.censuses)
            census.push_back({{"modulus", c.modulus},
                              {"observed", c.observed.size()},
                              {"required", c.required}});
        payload["y"] = {{"point", point_json(basis.scheme(), x)},
                        {"region", {verdict.region.lo, verdict.region.hi}},
                        {"spans_period", verdict.spans_period},
                        {"census", census},
                        {"verdict", to_string(verdict.verdict)},
                        {"truncated", true}};
    }

    Sink sink(out_path, ctx.out);
    sink.get() << render({"bfree",
                          digest(spec),
                          {{"basis", basis_text}, {"pattern", pattern_text}, {"y_periods", y_periods}},
                          payload});
    return ok;
}

// ---------------------------------------------------------------------------
// vanhove

int cmd_vanhove(Context& ctx, const std::string& line_text, const std::string& k_text, std::int64_t n_max,
                const std::string& format, const std::string& out_path)
{
    if (line_text != "integers" && line_text != "reals")
        throw ValidationError("line", "line must be 'integers' or 'reals'");
    if (n_max < 2)
        throw ValidationError("n-max", "n-max must be >= 2");
    const Line line = line_text == "integers" ? Line::integers : Line::reals;
    const auto parts = split(k_text, ',');
    if (parts.size() != 2)
        throw ParseError("K must be 'lo,hi'", 0);
    const ClosedInterval<Rational> k{parse_rational(parts[0]), parse_rational(parts[1])};
    if (k.empty())
        throw ValidationError("interval-ordered", "K is reversed");
    const int digits = resolve_digits(ctx, nullptr);
    const VanHoveFamily family(line);
    const auto rows = vanhove_sweep(family, k, n_max);

    Sink sink(out_path, ctx.out);
    if (format == "csv")
    {
        sink.get() << "n,boundary_measure,ratio,tempered_ratio\n";
        for (const auto& r : rows)
            sink.get() << r.n << ',' << to_string(r.boundary_measure) << ',' << to_string(r.ratio) << ','
                       << to_string(r.tempered_ratio) << '\n';
        return ok;
    }
    const auto temp = temperedness_constant(family, n_max);
    Json payload{{"line", to_string(line)},
                 {"K", {to_string(k.lo), to_string(k.hi)}},
                 {"final_ratio", exact_json(rows.back().ratio, digits)},
                 {"temperedness_constant", exact_json(temp.constant, digits)},
                 {"attained_at", temp.attained_at}};
    sink.get() << render({"vanhove", std::nullopt, {{"line", line_text}, {"K", k_text}, {"n_max", n_max}}, payload});
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weak model sets from cut-and-project schemes", "wms"};
    app.require_subcommand(1);
    Context ctx{out, err, std::nullopt};
    std::optional<int> precision;
    app.add_option("--precision", precision, "significant digits for decimal renderings")
        ->check(CLI::Range(1, 1000));

    std::string spec_path, point = "0", out_path, format = "json";
    std::function<int()> action;

    auto* validate = app.add_subcommand("validate", "check a scheme spec and print its invariants");
    bool json = false;
    validate->add_option("spec", spec_path)->required();
    validate->add_flag("--json", json, "emit a JSON report");
    validate->callback([&] { action = [&] { return cmd_validate(ctx, spec_path, json); }; });

    auto* generate = app.add_subcommand("generate", "write the configuration on [-R, R] as CSV");
    std::string range;
    generate->add_option("spec", spec_path)->required();
    generate->add_option("--point", point, "torus point: 0, 's,t' or 'r1,...,rK'");
    generate->add_option("--range", range, "half-width R")->required();
    generate->add_option("--out", out_path);
    generate->callback([&] { action = [&] { return cmd_generate(ctx, spec_path, point, range, out_path); }; });

    auto* density = app.add_subcommand("density", "empirical vs limit density over [-n, n]");
    std::string n_list;
    density->add_option("spec", spec_path)->required();
    density->add_option("--point", point);
    density->add_option("--n-list", n_list, "comma-separated n values")->required();
    density->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    density->add_option("--out", out_path);
    density->callback([&] { action = [&] { return cmd_density(ctx, spec_path, point, n_list, format, out_path); }; });

    auto* freq = app.add_subcommand("freq", "empirical vs limit pattern frequency");
    std::string pattern, region;
    std::int64_t n = 100;
    freq->add_option("spec", spec_path)->required();
    freq->add_option("--point", point);
    freq->add_option("--pattern", pattern, "'m:n;m:n' (Euclidean) or 'p1,p2' (residue)")->required();
    freq->add_option("--n", n, "anchor region [-n, n]");
    freq->add_option("--region", region, "explicit anchor region 'lo,hi'");
    freq->add_option("--out", out_path);
    freq->callback(
        [&] { action = [&] { return cmd_freq(ctx, spec_path, point, pattern, n, region, out_path); }; });

    auto* classify = app.add_subcommand("classify", "continuity, zero and support verdicts for a torus point");
    classify->add_option("spec", spec_path)->required();
    classify->add_option("--point", point);
    classify->callback([&] { action = [&] { return cmd_classify(ctx, spec_path, point); }; });

    auto* sample = app.add_subcommand("sample", "Mirsky sampling: continuity fraction and genericity summary");
    std::optional<std::uint64_t> seed;
    std::int64_t count = 1000, generic_count = 10;
    std::int64_t sample_n = 100;
    sample->add_option("spec", spec_path)->required();
    sample->add_option("--seed", seed);
    sample->add_option("--count", count);
    sample->add_option("--n", sample_n, "region index for the genericity summary");
    sample->add_option("--generic-count", generic_count, "samples included in the genericity summary");
    sample->add_option("--report", out_path);
    sample->callback([&] {
        action = [&] { return cmd_sample(ctx, spec_path, seed, count, sample_n, generic_count, out_path); };
    });

    auto* bfree = app.add_subcommand("bfree", "B-free report, sieve export and Y-set census");
    std::string basis, sieve_range;
    std::int64_t y_periods = 1;
    bfree->add_option("--basis", basis, "squarefree:K or moduli:a,b,c")->required();
    bfree->add_option("--pattern", pattern, "p1,p2,... for the exact period frequency");
    bfree->add_option("--sieve", sieve_range, "write 'n,bfree' CSV for lo,hi");
    bfree->add_option("--point", point, "torus point for the Y census");
    bfree->add_option("--y-periods", y_periods, "Y census over [-kP, kP]; 0 disables");
    bfree->add_option("--out", out_path);
    bfree->callback([&] {
        action = [&] { return cmd_bfree(ctx, basis, pattern, sieve_range, point, y_periods, out_path); };
    });

    auto* vanhove = app.add_subcommand("vanhove", "K-boundary ratios and temperedness for A_n = [-n, n]");
    std::string line = "integers", k = "-1,1";
    std::int64_t n_max = 1000;
    vanhove->add_option("--line", line)->check(CLI::IsMember({"integers", "reals"}));
    vanhove->add_option("--k", k, "K = [lo, hi]");
    vanhove->add_option("--n-max", n_max);
    vanhove->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    vanhove->add_option("--out", out_path);
    vanhove->callback([&] { action = [&] { return cmd_vanhove(ctx, line, k, n_max, format, out_path); }; });

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&)
    {
        out << app.help();
        return ok;
    }
    catch (const CLI::CallForAllHelp&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "usage error: " << e.what() << "\n";
        return validation;
    }

    ctx.precision_flag = precision;
    try
    {
        return action();
    }
    catch (const ValidationError& e)
    {
        err << "validation failed [" << e.invariant() << "]: " << e.what() << "\n";
        return validation;
    }
    catch (const ParseError& e)
    {
        err << "parse error at offset " << e.position() << ": " << e.what() << "\n";
        return validation;
    }
    catch (const Unsupported& e)
    {
        err << "unsupported: " << e.what() << "\n";
        return capability;
    }
    catch (const FieldMismatch& e)
    {
        err << "validation failed [field-mismatch]: " << e.what() << "\n";
        return validation;
    }
    catch (const SpaceMismatch& e)
    {
        err << "validation failed [space-mismatch]: " << e.what() << "\n";
        return validation;
    }
    catch (const DegenerateModule& e)
    {
        err << "validation failed [degenerate-module]: " << e.what() << "\n";
        return validation;
    }
    catch (const std::exception& e)
    {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

} // namespace wms::cli
