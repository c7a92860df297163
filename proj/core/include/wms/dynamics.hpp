#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wms/configuration.hpp"
#include "wms/exact.hpp"
#include "wms/scheme.hpp"
#include "wms/window.hpp"

namespace wms
{

/// Exact report value: rational for residue schemes, quadratic for Euclidean ones.
using ExactValue = std::variant<Rational, QuadraticNumber>;

std::string to_string(const ExactValue& v);
std::string to_decimal(const ExactValue& v, int digits = 15);
int sign(const ExactValue& v);

/// Finite nonempty set of lattice elements, kept sorted.
template <class Index>
class Pattern
{
  public:
    explicit Pattern(std::vector<Index> elements) : elements_(std::move(elements))
    {
        if (elements_.empty())
            throw ValidationError("pattern-nonempty", "a pattern needs at least one lattice element");
        std::sort(elements_.begin(), elements_.end());
        if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
            throw ValidationError("pattern-duplicate-free", "pattern lists a lattice element twice");
    }

    const std::vector<Index>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    Pattern with(Index extra) const
    {
        auto e = elements_;
        e.push_back(extra);
        return Pattern(std::move(e));
    }

  private:
    std::vector<Index> elements_;
};

using LatticePattern = Pattern<LatticeIndex>;
using ResiduePattern = Pattern<std::int64_t>;

std::string to_string(const LatticePattern& p);
std::string to_string(const ResiduePattern& p);

// Densities -------------------------------------------------------------------

/// count / m_G(region)
QuadraticNumber empirical_density(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                  const RealRegion& region);
Rational empirical_density(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                           const IntegerRegion& region);
/// Over A_n = [-n, n] with m_G(A_n) = 2n on R.
Rational empirical_density(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                           std::int64_t n);
/// Over A_n = [-n, n] with m_G(A_n) = 2n + 1 on Z.
Rational empirical_density(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                           std::int64_t n);

/// dens(L) * m_H(W)
QuadraticNumber limit_density(const EuclideanScheme& scheme, const IntervalWindow& w);
Rational limit_density(const ResidueScheme& scheme, const ResidueWindow& w);

// Pattern frequencies -------------------------------------------------------------

/// Occurrences of the pattern anchored at lattice translates x + l with
/// physical coordinate in the region, divided by m_G(region). An occurrence
/// needs x + l + p in the configuration for every pattern element p.
QuadraticNumber pattern_frequency_empirical(const EuclideanScheme& scheme, const EuclideanPoint& x,
                                            const IntervalWindow& w, const LatticePattern& pattern,
                                            const RealRegion& region);
Rational pattern_frequency_empirical(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                     const ResiduePattern& pattern, const IntegerRegion& region);
Rational pattern_frequency_empirical(const EuclideanScheme& scheme, const EuclideanPoint& x,
                                     const IntervalWindow& w, const LatticePattern& pattern, std::int64_t n);
Rational pattern_frequency_empirical(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                     const ResiduePattern& pattern, std::int64_t n);

/// dens(L) * m_H(intersection of W - p_H over the pattern)
QuadraticNumber pattern_frequency_limit(const EuclideanScheme& scheme, const IntervalWindow& w,
                                        const LatticePattern& pattern);
Rational pattern_frequency_limit(const ResidueScheme& scheme, const ResidueWindow& w, const ResiduePattern& pattern);

// Classification of torus points ------------------------------------------------

/// x in C_W: no shifted lattice point hits the boundary of W.
bool is_continuity_point(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x);
bool is_continuity_point(const ResidueScheme& scheme, const ResidueWindow& w, const ResiduePoint& x);

/// x in Z_W: the configuration is empty.
bool is_zero_point(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x);
bool is_zero_point(const ResidueScheme& scheme, const ResidueWindow& w, const ResiduePoint& x);

/// nu_W(x) in supp(Q_M). Euclidean schemes need a single nondegenerate interval
/// window (throws Unsupported otherwise).
bool in_support_of_mirsky(const EuclideanScheme& scheme, const IntervalWindow& w, const EuclideanPoint& x);
bool in_support_of_mirsky(const ResidueScheme& scheme, const ResidueWindow& w, const ResiduePoint& x);

// Mirsky sampling -----------------------------------------------------------------

/// Haar-random torus points: dyadic (s, t) = (k1, k2) / 2^64 for Euclidean
/// schemes, independent uniform residues for residue schemes.
std::vector<EuclideanPoint> sample_torus(const EuclideanScheme& scheme, std::uint64_t seed, std::size_t count);
std::vector<ResiduePoint> sample_torus(const ResidueScheme& scheme, std::uint64_t seed, std::size_t count);

Rational continuity_fraction(const EuclideanScheme& scheme, const IntervalWindow& w, std::uint64_t seed,
                             std::size_t samples);
Rational continuity_fraction(const ResidueScheme& scheme, const ResidueWindow& w, std::uint64_t seed,
                             std::size_t samples);

// Reports -------------------------------------------------------------------------

struct FrequencyReport
{
    std::string pattern;
    /// Anchor region [lo, hi], rendered exactly.
    std::string region;
    ExactValue empirical;
    ExactValue limit;
    ExactValue deviation;
};

struct GenericityReport
{
    std::vector<FrequencyReport> rows;
    /// max |deviation| over rows; zero for an empty pattern list.
    ExactValue max_abs_deviation;
};

GenericityReport genericity_report(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                   std::span<const LatticePattern> patterns, const RealRegion& region);
GenericityReport genericity_report(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                                   std::span<const ResiduePattern> patterns, const IntegerRegion& region);

/// Half-width b of the box B = [-b, b] used for the finite-n density bound
///   count(A_n) / m(A_n) <= dens(L) m_H(hull W) (1 + m(d^B A_n) / m(A_n)).
///
/// Euclidean: W = [alpha, beta] with beta - alpha = l0_H for a lattice element
/// l0 = k * l0' (l0' primitive). Each line of L parallel to l0' meets the strip
/// G x [alpha, beta) in k consecutive points whose physical coordinates are an
/// arithmetic progression perturbed by at most |l0'_G|, which gives
///   count <= rho (2n + |l0'_G|) + k + 1,     rho = dens(L) m_H(W),
/// the +1 covering the single possible hit of beta. b = (|l0'_G| + (k+1)/rho) / 2.
/// Throws Unsupported for other window shapes.
QuadraticNumber separation_half_width(const EuclideanScheme& scheme, const IntervalWindow& w);
/// Residue: configurations are P-periodic with exactly rho P points per period,
/// so count <= rho (2n+1) + rho (1 - rho) P; b = ceil(P / 2).
Integer separation_half_width(const ResidueScheme& scheme, const ResidueWindow& w);

/// dens(L) m_H(hull W) m(d^B A_n) / m(A_n)
QuadraticNumber boundary_correction(const EuclideanScheme& scheme, const IntervalWindow& w, std::int64_t n);
Rational boundary_correction(const ResidueScheme& scheme, const ResidueWindow& w, std::int64_t n);

struct DensityRow
{
    std::int64_t n;
    std::int64_t count;
    ExactValue measure;
    ExactValue empirical;
    ExactValue limit;
    /// empirical - limit
    ExactValue deviation;
    /// Unset when no finite-n bound is available for the window shape.
    std::optional<ExactValue> correction;
    /// limit + correction - empirical; nonnegative when the bound holds.
    std::optional<ExactValue> bound_margin;
};

struct DensityReport
{
    std::string measure_convention;
    std::vector<DensityRow> rows;
};

DensityReport density_report(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                             std::span<const std::int64_t> ns);
DensityReport density_report(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                             std::span<const std::int64_t> ns);

} // namespace wms
