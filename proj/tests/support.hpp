#pragma once

// Independent oracles and random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "wms/configuration.hpp"
#include "wms/exact.hpp"
#include "wms/scheme.hpp"
#include "wms/window.hpp"

namespace oracle
{

using Dec = boost::multiprecision::cpp_dec_float_100;

inline Dec dec(const wms::Rational& q)
{
    return Dec(q.get_num().get_str()) / Dec(q.get_den().get_str());
}

/// a + b*sqrt(d) in 100-digit decimals, via the positive root.
inline Dec dec(const wms::QuadraticNumber& x)
{
    return dec(x.rational_part()) + dec(x.surd_part()) * boost::multiprecision::sqrt(Dec(x.d()));
}

/// Same under the other real embedding sqrt(d) -> -sqrt(d).
inline Dec dec_conj(const wms::QuadraticNumber& x)
{
    return dec(x.rational_part()) - dec(x.surd_part()) * boost::multiprecision::sqrt(Dec(x.d()));
}

inline int dec_sign(const Dec& v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

inline bool near_integer(const Dec& v, Dec& rounded)
{
    rounded = boost::multiprecision::round(v);
    return boost::multiprecision::abs(v - rounded) < Dec("1e-60");
}

/// x in Z + Z*gen, decided through the two real embeddings:
/// n = (x - x') / (gen - gen'), m = x - n*gen.
inline bool in_module(const wms::QuadraticNumber& x, const wms::QuadraticNumber& gen)
{
    const Dec n = (dec(x) - dec_conj(x)) / (dec(gen) - dec_conj(gen));
    Dec n_int, m_int;
    if (!near_integer(n, n_int))
        return false;
    return near_integer(dec(x) - n_int * dec(gen), m_int);
}

/// Double loop over |m|, |n| <= bound with exact membership tests.
inline std::vector<wms::LatticeIndex> naive_enumerate(const wms::EuclideanScheme& s, const wms::EuclideanPoint& x,
                                                      const wms::IntervalWindow& w, const wms::RealRegion& region,
                                                      std::int64_t bound)
{
    std::vector<wms::LatticeIndex> out;
    const auto xg = s.physical(x);
    const auto xh = s.internal(x);
    for (std::int64_t m = -bound; m <= bound; ++m)
    {
        for (std::int64_t n = -bound; n <= bound; ++n)
        {
            const wms::LatticeIndex l{m, n};
            if (region.contains(xg + s.physical(l)) && wms::contains(w, xh + s.internal(l)))
                out.push_back(l);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool trial_division_bfree(std::int64_t n, const std::vector<std::int64_t>& moduli)
{
    for (auto b : moduli)
    {
        if (n % b == 0)
            return false;
    }
    return true;
}

/// Pattern occurrences over [lo, hi] by direct membership: anchors a with a + p allowed for all p.
template <class Allowed>
std::int64_t naive_occurrences(std::int64_t lo, std::int64_t hi, const std::vector<std::int64_t>& pattern,
                               Allowed allowed)
{
    std::int64_t c = 0;
    for (std::int64_t a = lo; a <= hi; ++a)
    {
        if (std::all_of(pattern.begin(), pattern.end(), [&](std::int64_t p) { return allowed(a + p); }))
            ++c;
    }
    return c;
}

} // namespace oracle

namespace gen
{

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline wms::Rational rational(Rng& rng, std::int64_t num = 50, std::int64_t den = 12)
{
    return wms::make_rational(uniform(rng, -num, num), uniform(rng, 1, den));
}

inline wms::QuadraticNumber quadratic(Rng& rng, std::int64_t d, std::int64_t num = 50, std::int64_t den = 12)
{
    return {rational(rng, num, den), rational(rng, num, den), d};
}

inline std::int64_t square_free(Rng& rng)
{
    static const std::int64_t ds[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23};
    return ds[uniform(rng, 0, 14)];
}

} // namespace gen
