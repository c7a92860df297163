#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "wms/exact.hpp"
#include "wms/interval.hpp"

namespace wms
{

/// Physical regions are closed intervals.
using RealRegion = ClosedInterval<QuadraticNumber>;
using IntegerRegion = ClosedInterval<std::int64_t>;

/// Lattice element m*v + n*w of a rank-2 lattice in R x R.
struct LatticeIndex
{
    std::int64_t m = 0;
    std::int64_t n = 0;

    friend auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
    friend LatticeIndex operator+(LatticeIndex a, LatticeIndex b) { return {a.m + b.m, a.n + b.n}; }
    friend LatticeIndex operator-(LatticeIndex a, LatticeIndex b) { return {a.m - b.m, a.n - b.n}; }
};

struct LatticeIndexHash
{
    std::size_t operator()(const LatticeIndex& i) const noexcept
    {
        auto h = static_cast<std::uint64_t>(i.m) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(i.n) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

/// A point of G x H = R x R, both coordinates in Q(sqrt(d)).
struct Vector2
{
    QuadraticNumber g;
    QuadraticNumber h;

    friend bool operator==(const Vector2&, const Vector2&) = default;
};

/// Torus point x + L of a Euclidean scheme, stored by its representative
/// x = s*v + t*w in the half-open basis parallelogram (0 <= s, t < 1).
struct EuclideanPoint
{
    QuadraticNumber s;
    QuadraticNumber t;

    friend bool operator==(const EuclideanPoint&, const EuclideanPoint&) = default;
};

/// Cut-and-project scheme with G = H = R and lattice L = Zv + Zw.
///
/// Invariants checked by build(): det(v, w) != 0, v_G and w_G rationally
/// independent (projection to G is 1-1 on L), v_H and w_H rationally
/// independent (projection to H is dense).
class EuclideanScheme
{
  public:
    static EuclideanScheme build(Vector2 v, Vector2 w);

    const Vector2& v() const { return v_; }
    const Vector2& w() const { return w_; }
    std::int64_t d() const { return v_.g.d(); }

    /// v_G*w_H - w_G*v_H
    const QuadraticNumber& determinant() const { return det_; }
    const QuadraticNumber& covolume() const { return covolume_; }
    /// dens(L) = 1 / covolume
    const QuadraticNumber& density() const { return density_; }

    QuadraticNumber physical(const LatticeIndex& i) const;
    QuadraticNumber internal(const LatticeIndex& i) const;
    QuadraticNumber physical(const EuclideanPoint& x) const;
    QuadraticNumber internal(const EuclideanPoint& x) const;

    /// Coordinates (s, t) with p = s*v + t*w.
    std::pair<QuadraticNumber, QuadraticNumber> basis_coordinates(const Vector2& p) const;

    QuadraticNumber zero() const { return QuadraticNumber(d()); }
    EuclideanPoint origin() const { return {zero(), zero()}; }

  private:
    EuclideanScheme(Vector2 v, Vector2 w, QuadraticNumber det);

    Vector2 v_;
    Vector2 w_;
    QuadraticNumber det_;
    QuadraticNumber covolume_;
    QuadraticNumber density_;
};

/// One residue per modulus, each in [0, b_k).
using ResidueVector = std::vector<std::int64_t>;

/// Torus point of a residue scheme. The fundamental domain is {0} x H, so only
/// the internal part is stored.
struct ResiduePoint
{
    ResidueVector x;

    friend bool operator==(const ResiduePoint&, const ResiduePoint&) = default;
};

/// Scheme with G = Z, H = prod_k Z/b_k Z truncated to K moduli, and
/// L = {(n, iota(n))} where iota(n) = (n mod b_k)_k.
class ResidueScheme
{
  public:
    /// Moduli must be >= 2, strictly increasing and pairwise coprime.
    static ResidueScheme build(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    std::size_t truncation() const { return moduli_.size(); }
    /// prod b_k; the period of every configuration.
    const Integer& period() const { return period_; }
    Rational density() const { return Rational(1); }

    ResidueVector iota(const Integer& n) const;
    ResidueVector iota(std::int64_t n) const;
    ResiduePoint origin() const { return {ResidueVector(moduli_.size(), 0)}; }

    friend bool operator==(const ResidueScheme& a, const ResidueScheme& b) { return a.moduli_ == b.moduli_; }

  private:
    explicit ResidueScheme(std::vector<std::int64_t> moduli);

    std::vector<std::int64_t> moduli_;
    Integer period_;
};

/// Canonical representative of p + L.
EuclideanPoint reduce(const EuclideanScheme& scheme, const Vector2& p);
/// Canonical representative of (g, h) + L; the physical part is moved into H.
ResiduePoint reduce(const ResidueScheme& scheme, const Integer& g, const ResidueVector& h);

/// (g, 0) + x, reduced.
EuclideanPoint shift(const EuclideanScheme& scheme, const EuclideanPoint& x, const QuadraticNumber& g);
ResiduePoint shift(const ResidueScheme& scheme, const ResiduePoint& x, const Integer& g);

/// Floor-mod into [0, b).
std::int64_t mod_floor(const Integer& n, std::int64_t b);
std::int64_t mod_floor(std::int64_t n, std::int64_t b);

/// m_G of a closed physical region: length on R, cardinality on Z.
QuadraticNumber region_measure(const RealRegion& r);
std::int64_t region_measure(const IntegerRegion& r);

/// [-n, n]
RealRegion centered_region(const EuclideanScheme& scheme, std::int64_t n);
IntegerRegion centered_region(const ResidueScheme& scheme, std::int64_t n);

} // namespace wms
