#include "wms/configuration.hpp"

#include <algorithm>
#include <numeric>

namespace wms
{

namespace
{

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw Error("lattice index " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

// Endpoints of {y : c*y in [lo, hi]} for nonzero c.
std::pair<QuadraticNumber, QuadraticNumber> scaled_bounds(const QuadraticNumber& lo, const QuadraticNumber& hi,
                                                          const QuadraticNumber& c)
{
    QuadraticNumber a = lo / c;
    QuadraticNumber b = hi / c;
    if (sign(c) < 0)
        std::swap(a, b);
    return {std::move(a), std::move(b)};
}

} // namespace

void for_each_column(const EuclideanScheme& scheme, const EuclideanPoint& x, const Interval& internal,
                     const RealRegion& region,
                     const std::function<void(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi)>& visit)
{
    if (region.empty() || internal.empty())
        return;
    const Vector2& v = scheme.v();
    const Vector2& w = scheme.w();
    const QuadraticNumber& det = scheme.determinant();

    // y = (s+m) v + (t+n) w, so t+n = (v_G y_H - v_H y_G) / det. Its range over
    // the rectangle region x internal is attained at the corners.
    QuadraticNumber u_min(scheme.d());
    QuadraticNumber u_max(scheme.d());
    bool first = true;
    for (const auto* yg : {&region.lo, &region.hi})
    {
        for (const auto* yh : {&internal.lo, &internal.hi})
        {
            QuadraticNumber u = (v.g * *yh - v.h * *yg) / det;
            if (first || u < u_min)
                u_min = u;
            if (first || u_max < u)
                u_max = u;
            first = false;
        }
    }
    const Integer n_lo = ceil(u_min - x.t);
    const Integer n_hi = floor(u_max - x.t);
    if (n_hi < n_lo)
        return;

    // For fixed u = t+n: (s+m) v_G in [G_lo - u w_G, G_hi - u w_G], same for H.
    const auto [g_lo, g_hi] = scaled_bounds(region.lo, region.hi, v.g);
    const auto [h_lo, h_hi] = scaled_bounds(internal.lo, internal.hi, v.h);
    const QuadraticNumber g_step = w.g / v.g;
    const QuadraticNumber h_step = w.h / v.h;

    QuadraticNumber u = x.t + Rational(n_lo);
    QuadraticNumber g_off = u * g_step;
    QuadraticNumber h_off = u * h_step;
    for (Integer n = n_lo; n <= n_hi; ++n)
    {
        const QuadraticNumber lo = max(g_lo - g_off, h_lo - h_off) - x.s;
        const QuadraticNumber hi = min(g_hi - g_off, h_hi - h_off) - x.s;
        if (!(hi < lo))
        {
            const Integer m_lo = ceil(lo);
            const Integer m_hi = floor(hi);
            if (m_lo <= m_hi)
                visit(to_int64(n), to_int64(m_lo), to_int64(m_hi));
        }
        g_off += g_step;
        h_off += h_step;
    }
}

EuclideanConfiguration enumerate(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                 const RealRegion& region)
{
    if (w.d() != scheme.d())
        throw SpaceMismatch("window field does not match the scheme");

    struct Entry
    {
        LatticeIndex index;
        QuadraticNumber phys;
        double approx;
        double scale;
    };
    std::vector<Entry> entries;
    const QuadraticNumber x_g = scheme.physical(x);
    for (const auto& iv : w.intervals())
    {
        for_each_column(scheme, x, iv, region, [&](std::int64_t n, std::int64_t m_lo, std::int64_t m_hi) {
            for (std::int64_t m = m_lo; m <= m_hi; ++m)
            {
                LatticeIndex idx{m, n};
                QuadraticNumber p = x_g + scheme.physical(idx);
                const double a = p.approx();
                const double sc = p.magnitude();
                entries.push_back({idx, std::move(p), a, sc});
            }
        });
    }

    // Doubles order the points unless two are within rounding distance; then the
    // exact comparison decides. Both paths agree with the true order.
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        const double tol = 1e-9 * (1.0 + a.scale + b.scale);
        if (a.approx + tol < b.approx)
            return true;
        if (b.approx + tol < a.approx)
            return false;
        return a.phys < b.phys;
    });

    EuclideanConfiguration out{x, w, region, {}, {}};
    out.indices.reserve(entries.size());
    out.physical.reserve(entries.size());
    for (auto& e : entries)
    {
        out.indices.push_back(e.index);
        out.physical.push_back(std::move(e.phys));
    }
    return out;
}

std::int64_t count_points(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                          const RealRegion& region)
{
    if (w.d() != scheme.d())
        throw SpaceMismatch("window field does not match the scheme");
    std::int64_t total = 0;
    for (const auto& iv : w.intervals())
    {
        for_each_column(scheme, x, iv, region,
                        [&](std::int64_t, std::int64_t m_lo, std::int64_t m_hi) { total += m_hi - m_lo + 1; });
    }
    return total;
}

namespace
{

void require_compatible(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w)
{
    if (w.moduli() != scheme.moduli())
        throw SpaceMismatch("window moduli do not match the scheme");
    if (x.x.size() != scheme.moduli().size())
        throw SpaceMismatch("torus point does not match the scheme");
}

template <class Visit>
void scan_residues(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                   const IntegerRegion& region, Visit&& visit)
{
    require_compatible(scheme, x, w);
    if (region.empty() || w.empty())
        return;
    const auto& moduli = scheme.moduli();
    // r_k = (x_k + n) mod b_k, advanced incrementally.
    std::vector<std::int64_t> r(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k)
        r[k] = mod_floor(x.x[k] + mod_floor(region.lo, moduli[k]), moduli[k]);
    for (std::int64_t n = region.lo;; ++n)
    {
        bool inside = true;
        for (std::size_t k = 0; k < moduli.size() && inside; ++k)
            inside = w.allows(k, r[k]);
        if (inside)
            visit(n);
        if (n == region.hi)
            break;
        for (std::size_t k = 0; k < moduli.size(); ++k)
        {
            if (++r[k] == moduli[k])
                r[k] = 0;
        }
    }
}

} // namespace

ResidueConfiguration enumerate(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                               const IntegerRegion& region)
{
    ResidueConfiguration out{x, w, region, {}};
    scan_residues(scheme, x, w, region, [&](std::int64_t n) { out.points.push_back(n); });
    return out;
}

std::int64_t count_points(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                          const IntegerRegion& region)
{
    std::int64_t total = 0;
    scan_residues(scheme, x, w, region, [&](std::int64_t) { ++total; });
    return total;
}

} // namespace wms
