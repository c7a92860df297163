#include "wms/bfree.hpp"

#include <algorithm>
#include <set>

namespace wms
{

namespace
{

std::string join(const std::vector<std::int64_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

std::vector<std::int64_t> first_primes(std::size_t k)
{
    std::vector<std::int64_t> primes;
    for (std::int64_t c = 2; primes.size() < k; ++c)
    {
        if (std::none_of(primes.begin(), primes.end(), [c](std::int64_t p) { return c % p == 0; }))
            primes.push_back(c);
    }
    return primes;
}

// Period scans are capped; beyond this the CRT route is the only sane one.
constexpr std::int64_t max_scanned_period = 100'000'000;

std::int64_t scanned_period(const BFreeBasis& basis)
{
    if (!basis.period().fits_slong_p() || basis.period().get_si() > max_scanned_period)
        throw Unsupported("period " + basis.period().get_str() + " too large to scan");
    return basis.period().get_si();
}

void require_pattern(std::span<const std::int64_t> pattern)
{
    if (pattern.empty())
        throw ValidationError("pattern-nonempty", "a pattern needs at least one integer");
}

} // namespace

BFreeBasis BFreeBasis::from_moduli(std::vector<std::int64_t> moduli)
{
    std::string label = "moduli:" + join(moduli);
    return BFreeBasis(ResidueScheme::build(std::move(moduli)), std::move(label));
}

BFreeBasis BFreeBasis::squarefree(std::size_t k)
{
    std::vector<std::int64_t> moduli;
    for (auto p : first_primes(k))
        moduli.push_back(p * p);
    return BFreeBasis(ResidueScheme::build(std::move(moduli)), "squarefree:" + std::to_string(k));
}

bool is_bfree(const BFreeBasis& basis, std::int64_t n)
{
    return std::all_of(basis.moduli().begin(), basis.moduli().end(), [n](std::int64_t b) { return n % b != 0; });
}

bool is_bfree(const BFreeBasis& basis, const Integer& n)
{
    return std::all_of(basis.moduli().begin(), basis.moduli().end(),
                       [&n](std::int64_t b) { return mod_floor(n, b) != 0; });
}

ResidueWindow bfree_window(const BFreeBasis& basis)
{
    return ResidueWindow::from_forbidden(basis.moduli(),
                                         std::vector<std::vector<std::int64_t>>(basis.truncation(), {0}));
}

std::vector<SieveRow> sieve(const BFreeBasis& basis, const IntegerRegion& region)
{
    std::vector<SieveRow> rows;
    if (region.empty())
        return rows;
    rows.reserve(static_cast<std::size_t>(region.hi - region.lo + 1));
    for (std::int64_t n = region.lo;; ++n)
    {
        rows.push_back({n, true});
        if (n == region.hi)
            break;
    }
    for (auto b : basis.moduli())
    {
        for (std::int64_t n = region.lo + mod_floor(-region.lo, b); n <= region.hi; n += b)
        {
            rows[static_cast<std::size_t>(n - region.lo)].bfree = false;
            if (region.hi - n < b)
                break;
        }
    }
    return rows;
}

const char* to_string(YStatus s)
{
    switch (s)
    {
    case YStatus::member:
        return "member";
    case YStatus::non_member:
        return "non_member";
    case YStatus::inconclusive:
        return "inconclusive";
    }
    return "?";
}

YVerdict y_membership(const BFreeBasis& basis, std::span<const std::int64_t> support, const IntegerRegion& region)
{
    YVerdict out{{}, YStatus::inconclusive, region, false};
    out.spans_period = !region.empty() && Integer(region_measure(region)) >= basis.period();

    bool all_exact = true;
    bool overfull = false;
    for (auto b : basis.moduli())
    {
        std::set<std::int64_t> seen;
        for (auto n : support)
        {
            if (!region.contains(n))
                throw ValidationError("support-in-region", "point " + std::to_string(n) + " outside the region");
            seen.insert(mod_floor(n, b));
        }
        ResidueCensus c{b, {seen.begin(), seen.end()}, b - 1};
        const auto size = static_cast<std::int64_t>(c.observed.size());
        overfull = overfull || size > c.required;
        all_exact = all_exact && size == c.required;
        out.censuses.push_back(std::move(c));
    }

    if (overfull)
        out.verdict = YStatus::non_member;
    else if (out.spans_period)
        out.verdict = all_exact ? YStatus::member : YStatus::non_member;
    return out;
}

YVerdict y_membership(const BFreeBasis& basis, const ResidueConfiguration& config)
{
    if (config.window.moduli() != basis.moduli())
        throw SpaceMismatch("configuration moduli do not match the basis");
    return y_membership(basis, config.points, config.region);
}

Rational period_frequency_direct(const BFreeBasis& basis, std::span<const std::int64_t> pattern)
{
    require_pattern(pattern);
    const std::int64_t period = scanned_period(basis);
    const auto& moduli = basis.moduli();

    // forbidden[k][r]: n = r mod b_k puts some n + p on 0 mod b_k.
    std::vector<std::vector<bool>> forbidden;
    for (auto b : moduli)
    {
        std::vector<bool> f(static_cast<std::size_t>(b), false);
        for (auto p : pattern)
            f[static_cast<std::size_t>(mod_floor(-p, b))] = true;
        forbidden.push_back(std::move(f));
    }

    std::vector<std::int64_t> r(moduli.size(), 0);
    std::int64_t hits = 0;
    for (std::int64_t n = 0; n < period; ++n)
    {
        bool ok = true;
        for (std::size_t k = 0; k < moduli.size() && ok; ++k)
            ok = !forbidden[k][static_cast<std::size_t>(r[k])];
        if (ok)
            ++hits;
        for (std::size_t k = 0; k < moduli.size(); ++k)
        {
            if (++r[k] == moduli[k])
                r[k] = 0;
        }
    }
    return make_rational(hits, period);
}

Rational period_frequency_crt(const BFreeBasis& basis, std::span<const std::int64_t> pattern)
{
    require_pattern(pattern);
    Rational out = 1;
    for (auto b : basis.moduli())
    {
        std::set<std::int64_t> classes;
        for (auto p : pattern)
            classes.insert(mod_floor(p, b));
        out *= make_rational(b - static_cast<std::int64_t>(classes.size()), b);
    }
    out.canonicalize();
    return out;
}

Rational exact_period_frequency(const BFreeBasis& basis, std::span<const std::int64_t> pattern)
{
    const Rational crt = period_frequency_crt(basis, pattern);
    const Rational direct = period_frequency_direct(basis, pattern);
    if (crt != direct)
        throw Error("period scan " + to_string(direct) + " disagrees with CRT product " + to_string(crt));
    return crt;
}

} // namespace wms
