#include "wms/dynamics.hpp"

#include <numeric>
#include <unordered_set>

#include "wms/rng.hpp"
#include "wms/vanhove.hpp"

namespace wms
{

std::string to_string(const ExactValue& v)
{
    return std::visit([](const auto& x) { return wms::to_string(x); }, v);
}

std::string to_decimal(const ExactValue& v, int digits)
{
    return std::visit([digits](const auto& x) { return wms::to_decimal(x, digits); }, v);
}

int sign(const ExactValue& v)
{
    return std::visit(
        [](const auto& x) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>)
                return sgn(x);
            else
                return wms::sign(x);
        },
        v);
}

std::string to_string(const LatticePattern& p)
{
    std::string out = "{";
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (i)
            out += ";";
        out += std::to_string(p.elements()[i].m) + ":" + std::to_string(p.elements()[i].n);
    }
    return out + "}";
}

std::string to_string(const ResiduePattern& p)
{
    std::string out = "{";
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        if (i)
            out += ",";
        out += std::to_string(p.elements()[i]);
    }
    return out + "}";
}

namespace
{

std::string region_string(const RealRegion& r)
{
    return "[" + to_string(r.lo) + "," + to_string(r.hi) + "]";
}

std::string region_string(const IntegerRegion& r)
{
    return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

void require_positive(std::int64_t n)
{
    if (n < 1)
        throw ValidationError("n-positive", "region index n must be >= 1");
}

} // namespace

// Densities -------------------------------------------------------------------

QuadraticNumber empirical_density(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                  const RealRegion& region)
{
    const QuadraticNumber m = region_measure(region);
    if (m.is_zero())
        throw ValidationError("region-positive-measure", "region has zero length");
    return QuadraticNumber(Rational(count_points(scheme, x, w, region)), scheme.d()) / m;
}

Rational empirical_density(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                           const IntegerRegion& region)
{
    const std::int64_t m = region_measure(region);
    if (m == 0)
        throw ValidationError("region-positive-measure", "region is empty");
    return make_rational(count_points(scheme, x, w, region), m);
}

Rational empirical_density(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                           std::int64_t n)
{
    require_positive(n);
    return make_rational(count_points(scheme, x, w, centered_region(scheme, n)), 2 * n);
}

Rational empirical_density(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                           std::int64_t n)
{
    require_positive(n);
    return empirical_density(scheme, x, w, centered_region(scheme, n));
}

QuadraticNumber limit_density(const EuclideanScheme& scheme, const IntervalWindow& w)
{
    return scheme.density() * haar(w);
}

Rational limit_density(const ResidueScheme& scheme, const ResidueWindow& w)
{
    return scheme.density() * haar(w);
}

// Pattern frequencies -------------------------------------------------------------

QuadraticNumber pattern_frequency_empirical(const EuclideanScheme& scheme, const EuclideanPoint& x,
                                            const IntervalWindow& w, const LatticePattern& pattern,
                                            const RealRegion& region)
{
    const QuadraticNumber m = region_measure(region);
    if (m.is_zero())
        throw ValidationError("region-positive-measure", "region has zero length");

    // Enlarge by the physical diameter so every element of an anchored occurrence is enumerated.
    QuadraticNumber diam = scheme.zero();
    for (const auto& p : pattern.elements())
        diam = max(diam, abs(scheme.physical(p)));
    const auto config = enumerate(scheme, x, w, RealRegion{region.lo - diam, region.hi + diam});

    std::unordered_set<LatticeIndex, LatticeIndexHash> present(config.indices.begin(), config.indices.end());
    const LatticeIndex pivot = pattern.elements().front();
    const QuadraticNumber pivot_g = scheme.physical(pivot);

    std::int64_t count = 0;
    for (std::size_t i = 0; i < config.size(); ++i)
    {
        const LatticeIndex anchor = config.indices[i] - pivot;
        const QuadraticNumber anchor_g = config.physical[i] - pivot_g;
        if (!region.contains(anchor_g))
            continue;
        const bool occurs = std::all_of(pattern.elements().begin(), pattern.elements().end(),
                                        [&](const LatticeIndex& p) { return present.contains(anchor + p); });
        if (occurs)
            ++count;
    }
    return QuadraticNumber(Rational(count), scheme.d()) / m;
}

Rational pattern_frequency_empirical(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                     const ResiduePattern& pattern, const IntegerRegion& region)
{
    const std::int64_t m = region_measure(region);
    if (m == 0)
        throw ValidationError("region-positive-measure", "region is empty");
    const std::int64_t lo_p = pattern.elements().front();
    const std::int64_t hi_p = pattern.elements().back();
    const std::int64_t diam = std::max(std::abs(lo_p), std::abs(hi_p));
    const IntegerRegion scan{region.lo - diam, region.hi + diam};
    const auto config = enumerate(scheme, x, w, scan);

    std::vector<bool> present(static_cast<std::size_t>(scan.hi - scan.lo + 1), false);
    for (auto n : config.points)
        present[static_cast<std::size_t>(n - scan.lo)] = true;

    std::int64_t count = 0;
    for (auto q : config.points)
    {
        const std::int64_t anchor = q - lo_p;
        if (!region.contains(anchor))
            continue;
        const bool occurs = std::all_of(pattern.elements().begin(), pattern.elements().end(), [&](std::int64_t p) {
            return present[static_cast<std::size_t>(anchor + p - scan.lo)];
        });
        if (occurs)
            ++count;
    }
    return make_rational(count, m);
}

Rational pattern_frequency_empirical(const EuclideanScheme& scheme, const EuclideanPoint& x,
                                     const IntervalWindow& w, const LatticePattern& pattern, std::int64_t n)
{
    require_positive(n);
    const QuadraticNumber f = pattern_frequency_empirical(scheme, x, w, pattern, centered_region(scheme, n));
    return f.rational_part();
}

Rational pattern_frequency_empirical(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                     const ResiduePattern& pattern, std::int64_t n)
{
    require_positive(n);
    return pattern_frequency_empirical(scheme, x, w, pattern, centered_region(scheme, n));
}

QuadraticNumber pattern_frequency_limit(const EuclideanScheme& scheme, const IntervalWindow& w,
                                        const LatticePattern& pattern)
{
    std::vector<QuadraticNumber> shifts;
    for (const auto& p : pattern.elements())
        shifts.push_back(scheme.internal(p));
    return scheme.density() * haar(intersect_translates(w, shifts));
}

Rational pattern_frequency_limit(const ResidueScheme& scheme, const ResidueWindow& w, const ResiduePattern& pattern)
{
    std::vector<ResidueVector> shifts;
    for (auto p : pattern.elements())
        shifts.push_back(scheme.iota(p));
    return scheme.density() * haar(intersect_translates(w, shifts));
}

// Classification of torus points ------------------------------------------------

bool is_continuity_point(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x)
{
    const QuadraticNumber x_h = scheme.internal(x);
    for (const auto& iv : w.intervals())
    {
        if (in_internal_projection(scheme, iv.lo - x_h) || in_internal_projection(scheme, iv.hi - x_h))
            return false;
    }
    return true;
}

bool is_continuity_point(const ResidueScheme&, const ResidueWindow&, const ResiduePoint&)
{
    return true;
}

bool is_zero_point(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x)
{
    if (w.empty())
        return true;
    // A window with interior meets every translate of the dense set pi_H(L).
    if (w.has_interior())
        return false;
    const QuadraticNumber x_h = scheme.internal(x);
    return std::none_of(w.intervals().begin(), w.intervals().end(),
                        [&](const Interval& iv) { return in_internal_projection(scheme, iv.lo - x_h); });
}

bool is_zero_point(const ResidueScheme&, const ResidueWindow& w, const ResiduePoint&)
{
    // With every S_k nonempty the CRT produces a lattice point in x + G x W.
    return w.empty();
}

bool in_support_of_mirsky(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x)
{
    if (classify_interval(scheme, w) == IntervalCase::case_one)
        return true;
    const Interval& iv = w.intervals().front();
    const QuadraticNumber x_h = scheme.internal(x);
    return !in_internal_projection(scheme, iv.lo - x_h) && !in_internal_projection(scheme, iv.hi - x_h);
}

bool in_support_of_mirsky(const ResidueScheme&, const ResidueWindow&, const ResiduePoint&)
{
    return true;
}

// Mirsky sampling -----------------------------------------------------------------

namespace
{

Rational dyadic(std::uint64_t k)
{
    Integer num;
    mpz_import(num.get_mpz_t(), 1, 1, sizeof(k), 0, 0, &k);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, 64);
    return make_rational(num, den);
}

} // namespace

std::vector<EuclideanPoint> sample_torus(const EuclideanScheme& scheme, std::uint64_t seed, std::size_t count)
{
    if (count < 1)
        throw ValidationError("sample-count", "sample count must be >= 1");
    SplitMix64 rng(seed);
    std::vector<EuclideanPoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        Rational s = dyadic(rng.next());
        Rational t = dyadic(rng.next());
        out.push_back({QuadraticNumber(s, scheme.d()), QuadraticNumber(t, scheme.d())});
    }
    return out;
}

std::vector<ResiduePoint> sample_torus(const ResidueScheme& scheme, std::uint64_t seed, std::size_t count)
{
    if (count < 1)
        throw ValidationError("sample-count", "sample count must be >= 1");
    SplitMix64 rng(seed);
    std::vector<ResiduePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        ResidueVector x;
        for (auto b : scheme.moduli())
            x.push_back(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(b))));
        out.push_back({std::move(x)});
    }
    return out;
}

namespace
{

template <class Scheme, class Window>
Rational continuity_fraction_impl(const Scheme& scheme, const Window& w, std::uint64_t seed, std::size_t samples)
{
    const auto points = sample_torus(scheme, seed, samples);
    const auto hits = std::count_if(points.begin(), points.end(),
                                    [&](const auto& x) { return is_continuity_point(scheme, w, x); });
    return make_rational(static_cast<long>(hits), static_cast<long>(samples));
}

} // namespace

Rational continuity_fraction(const EuclideanScheme& scheme, const IntervalWindow& w, std::uint64_t seed,
                             std::size_t samples)
{
    return continuity_fraction_impl(scheme, w, seed, samples);
}

Rational continuity_fraction(const ResidueScheme& scheme, const ResidueWindow& w, std::uint64_t seed,
                             std::size_t samples)
{
    return continuity_fraction_impl(scheme, w, seed, samples);
}

// Reports -------------------------------------------------------------------------

namespace
{

template <class Scheme, class Point, class Window, class PatternT, class Region, class Zero>
GenericityReport genericity_impl(const Scheme& scheme, const Point& x, const Window& w,
                                 std::span<const PatternT> patterns, const Region& region, Zero zero)
{
    GenericityReport out{{}, ExactValue(zero)};
    auto max_dev = zero;
    for (const auto& p : patterns)
    {
        auto emp = pattern_frequency_empirical(scheme, x, w, p, region);
        auto lim = pattern_frequency_limit(scheme, w, p);
        const Zero dev = emp - lim;
        Zero mag = dev;
        if (mag < zero)
            mag = -dev;
        if (max_dev < mag)
            max_dev = mag;
        out.rows.push_back({to_string(p), region_string(region), emp, lim, dev});
    }
    out.max_abs_deviation = max_dev;
    return out;
}

} // namespace

GenericityReport genericity_report(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                   std::span<const LatticePattern> patterns, const RealRegion& region)
{
    return genericity_impl(scheme, x, w, patterns, region, scheme.zero());
}

GenericityReport genericity_report(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                   std::span<const ResiduePattern> patterns, const IntegerRegion& region)
{
    return genericity_impl(scheme, x, w, patterns, region, Rational(0));
}

QuadraticNumber separation_half_width(const EuclideanScheme& scheme, const IntervalWindow& w)
{
    const auto l0 = return_vector(scheme, w);
    if (!l0)
        throw Unsupported("finite-n density bound needs a single interval with beta - alpha in pi_H(L)");
    const std::int64_t k = std::gcd(l0->m, l0->n);
    const LatticeIndex primitive{l0->m / k, l0->n / k};
    const QuadraticNumber rho = limit_density(scheme, w);
    QuadraticNumber b = abs(scheme.physical(primitive)) + QuadraticNumber(Rational(k + 1), scheme.d()) / rho;
    return b * Rational(1, 2);
}

Integer separation_half_width(const ResidueScheme& scheme, const ResidueWindow&)
{
    return ceil(make_rational(scheme.period(), 2));
}

QuadraticNumber boundary_correction(const EuclideanScheme& scheme, const IntervalWindow& w, std::int64_t n)
{
    require_positive(n);
    const QuadraticNumber b = separation_half_width(scheme, w);
    const RealRegion a = centered_region(scheme, n);
    const QuadraticNumber boundary = k_boundary_measure_reals(a, RealRegion{-b, b}, scheme.zero());
    const Interval hull = w.hull();
    return scheme.density() * (hull.hi - hull.lo) * boundary / region_measure(a);
}

Rational boundary_correction(const ResidueScheme& scheme, const ResidueWindow& w, std::int64_t n)
{
    require_positive(n);
    const Integer b = separation_half_width(scheme, w);
    const ClosedInterval<Integer> a{Integer(-n), Integer(n)};
    const Integer boundary = k_boundary_measure_integers(a, ClosedInterval<Integer>{-b, b}, Integer(0));
    // The finite product is discrete; its window is its own hull.
    return scheme.density() * haar(w) * Rational(boundary) / Rational(2 * n + 1);
}

namespace
{

template <class Scheme, class Point, class Window>
DensityReport density_report_impl(const Scheme& scheme, const Point& x, const Window& w,
                                  std::span<const std::int64_t> ns, std::string convention)
{
    DensityReport out{std::move(convention), {}};
    const auto limit = limit_density(scheme, w);
    bool bounded = true;
    for (auto n : ns)
    {
        require_positive(n);
        const auto region = centered_region(scheme, n);
        const std::int64_t count = count_points(scheme, x, w, region);
        const auto measure = region_measure(region);
        DensityRow row{n, count, {}, {}, limit, {}, std::nullopt, std::nullopt};
        if constexpr (std::is_same_v<Scheme, EuclideanScheme>)
        {
            const QuadraticNumber emp = QuadraticNumber(Rational(count), scheme.d()) / measure;
            row.measure = measure;
            row.empirical = emp;
            row.deviation = emp - limit;
            if (bounded)
            {
                try
                {
                    const QuadraticNumber c = boundary_correction(scheme, w, n);
                    row.correction = c;
                    row.bound_margin = limit + c - emp;
                }
                catch (const Unsupported&)
                {
                    bounded = false;
                }
            }
        }
        else
        {
            const Rational emp = make_rational(count, measure);
            row.measure = Rational(measure);
            row.empirical = emp;
            row.deviation = Rational(emp - limit);
            const Rational c = boundary_correction(scheme, w, n);
            row.correction = c;
            row.bound_margin = Rational(limit + c - emp);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace

DensityReport density_report(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                             std::span<const std::int64_t> ns)
{
    return density_report_impl(scheme, x, w, ns, "m_G([-n,n]) = 2n (Lebesgue measure on R)");
}

DensityReport density_report(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                             std::span<const std::int64_t> ns)
{
    return density_report_impl(scheme, x, w, ns, "m_G([-n,n]) = 2n+1 (counting measure on Z)");
}

} // namespace wms
