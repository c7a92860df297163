#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wms/scheme.hpp"
#include "wms/window.hpp"

namespace wms
{

/// Restriction of nu_W(x) = sum over (x + L) cap (G x W) to a physical region.
///
/// indices[i] is the lattice element l with x + l in the support, and
/// physical[i] = x_G + l_G. Entries are sorted by strictly increasing physical
/// coordinate.
struct EuclideanConfiguration
{
    EuclideanPoint base;
    IntervalWindow window;
    RealRegion region;
    std::vector<LatticeIndex> indices;
    std::vector<QuadraticNumber> physical;

    std::size_t size() const { return indices.size(); }
};

/// Residue configurations have x_G = 0, so the lattice index n is also the
/// physical coordinate.
struct ResidueConfiguration
{
    ResiduePoint base;
    ResidueWindow window;
    IntegerRegion region;
    std::vector<std::int64_t> points;

    std::size_t size() const { return points.size(); }
};

EuclideanConfiguration enumerate(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                                 const RealRegion& region);
ResidueConfiguration enumerate(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                               const IntegerRegion& region);

/// Number of points of the configuration without materializing it.
std::int64_t count_points(const EuclideanScheme& scheme, const EuclideanPoint& x, const IntervalWindow& w,
                          const RealRegion& region);
std::int64_t count_points(const ResidueScheme& scheme, const ResiduePoint& x, const ResidueWindow& w,
                          const IntegerRegion& region);

/// Calls visit(n, m_lo, m_hi) for every column n of the index parallelogram
/// whose points m*v + n*w, m in [m_lo, m_hi], all lie in region x [lo, hi]
/// after adding x. Columns are visited in increasing n; empty ones are skipped.
void for_each_column(const EuclideanScheme& scheme, const EuclideanPoint& x, const Interval& internal,
                     const RealRegion& region,
                     const std::function<void(std::int64_t n, std::int64_t m_lo, std::int64_t m_hi)>& visit);

} // namespace wms
