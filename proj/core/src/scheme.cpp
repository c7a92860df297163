#include "wms/scheme.hpp"

#include <numeric>

namespace wms
{

EuclideanScheme::EuclideanScheme(Vector2 v, Vector2 w, QuadraticNumber det)
    : v_(std::move(v)), w_(std::move(w)), det_(std::move(det)), covolume_(abs(det_)),
      density_(covolume_.inverse())
{
}

EuclideanScheme EuclideanScheme::build(Vector2 v, Vector2 w)
{
    const std::int64_t d = v.g.d();
    if (v.h.d() != d || w.g.d() != d || w.h.d() != d)
        throw ValidationError("single-field", "basis coordinates must share one field Q(sqrt(d))");

    QuadraticNumber det = v.g * w.h - w.g * v.h;
    if (det.is_zero())
        throw ValidationError("nonzero-determinant", "lattice basis v, w is degenerate");
    if (v.g.is_zero() || w.g.is_zero() || rationally_dependent(v.g, w.g))
        throw ValidationError("physical-projection-injective",
                              "v_G=" + to_string(v.g) + " and w_G=" + to_string(w.g) +
                                  " are rationally dependent");
    if (v.h.is_zero() || w.h.is_zero() || rationally_dependent(v.h, w.h))
        throw ValidationError("internal-projection-dense",
                              "v_H=" + to_string(v.h) + " and w_H=" + to_string(w.h) +
                                  " are rationally dependent");
    return EuclideanScheme(std::move(v), std::move(w), std::move(det));
}

QuadraticNumber EuclideanScheme::physical(const LatticeIndex& i) const
{
    return v_.g * Rational(i.m) + w_.g * Rational(i.n);
}

QuadraticNumber EuclideanScheme::internal(const LatticeIndex& i) const
{
    return v_.h * Rational(i.m) + w_.h * Rational(i.n);
}

QuadraticNumber EuclideanScheme::physical(const EuclideanPoint& x) const
{
    return x.s * v_.g + x.t * w_.g;
}

QuadraticNumber EuclideanScheme::internal(const EuclideanPoint& x) const
{
    return x.s * v_.h + x.t * w_.h;
}

std::pair<QuadraticNumber, QuadraticNumber> EuclideanScheme::basis_coordinates(const Vector2& p) const
{
    // Inverse of [[v_G, w_G], [v_H, w_H]].
    QuadraticNumber s = (w_.h * p.g - w_.g * p.h) / det_;
    QuadraticNumber t = (v_.g * p.h - v_.h * p.g) / det_;
    return {std::move(s), std::move(t)};
}

ResidueScheme::ResidueScheme(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)), period_(1)
{
    for (auto b : moduli_)
        period_ *= static_cast<long>(b);
}

ResidueScheme ResidueScheme::build(std::vector<std::int64_t> moduli)
{
    for (std::size_t k = 0; k < moduli.size(); ++k)
    {
        if (moduli[k] < 2)
            throw ValidationError("moduli-at-least-two", "modulus " + std::to_string(moduli[k]) + " < 2");
        if (k > 0 && moduli[k] <= moduli[k - 1])
            throw ValidationError("moduli-increasing", "moduli must be strictly increasing");
        for (std::size_t j = 0; j < k; ++j)
        {
            if (std::gcd(moduli[j], moduli[k]) != 1)
                throw ValidationError("moduli-coprime", "moduli " + std::to_string(moduli[j]) + " and " +
                                                            std::to_string(moduli[k]) + " are not coprime");
        }
    }
    return ResidueScheme(std::move(moduli));
}

std::int64_t mod_floor(std::int64_t n, std::int64_t b)
{
    const std::int64_t r = n % b;
    return r < 0 ? r + b : r;
}

std::int64_t mod_floor(const Integer& n, std::int64_t b)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), Integer(static_cast<long>(b)).get_mpz_t());
    return r.get_si();
}

ResidueVector ResidueScheme::iota(const Integer& n) const
{
    ResidueVector out;
    out.reserve(moduli_.size());
    for (auto b : moduli_)
        out.push_back(mod_floor(n, b));
    return out;
}

ResidueVector ResidueScheme::iota(std::int64_t n) const
{
    ResidueVector out;
    out.reserve(moduli_.size());
    for (auto b : moduli_)
        out.push_back(mod_floor(n, b));
    return out;
}

namespace
{

QuadraticNumber fractional_part(const QuadraticNumber& x)
{
    QuadraticNumber f = x;
    f += Rational(-floor(x));
    return f;
}

} // namespace

EuclideanPoint reduce(const EuclideanScheme& scheme, const Vector2& p)
{
    auto [s, t] = scheme.basis_coordinates(p);
    return {fractional_part(s), fractional_part(t)};
}

ResiduePoint reduce(const ResidueScheme& scheme, const Integer& g, const ResidueVector& h)
{
    const auto& moduli = scheme.moduli();
    if (h.size() != moduli.size())
        throw SpaceMismatch("residue vector has " + std::to_string(h.size()) + " entries, scheme has " +
                            std::to_string(moduli.size()) + " moduli");
    // (g, h) - (g, iota(g)) = (0, h - iota(g)).
    ResidueVector x(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k)
        x[k] = mod_floor(h[k] - mod_floor(g, moduli[k]), moduli[k]);
    return {std::move(x)};
}

EuclideanPoint shift(const EuclideanScheme& scheme, const EuclideanPoint& x, const QuadraticNumber& g)
{
    return reduce(scheme, Vector2{scheme.physical(x) + g, scheme.internal(x)});
}

ResiduePoint shift(const ResidueScheme& scheme, const ResiduePoint& x, const Integer& g)
{
    return reduce(scheme, g, x.x);
}

QuadraticNumber region_measure(const RealRegion& r)
{
    if (r.empty())
        return QuadraticNumber(r.lo.d());
    return r.hi - r.lo;
}

std::int64_t region_measure(const IntegerRegion& r)
{
    return r.empty() ? 0 : r.hi - r.lo + 1;
}

RealRegion centered_region(const EuclideanScheme& scheme, std::int64_t n)
{
    return {QuadraticNumber(Rational(-n), scheme.d()), QuadraticNumber(Rational(n), scheme.d())};
}

IntegerRegion centered_region(const ResidueScheme&, std::int64_t n)
{
    return {-n, n};
}

} // namespace wms
