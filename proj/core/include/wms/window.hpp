#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wms/exact.hpp"
#include "wms/interval.hpp"
#include "wms/scheme.hpp"

namespace wms
{

using Interval = ClosedInterval<QuadraticNumber>;

/// Compact window in H = R: a finite union of pairwise disjoint closed
/// intervals, sorted. Point intervals [a, a] are allowed and are pure boundary.
class IntervalWindow
{
  public:
    /// Sorts the intervals; throws ValidationError if any is reversed or two intersect.
    static IntervalWindow from_intervals(std::vector<Interval> intervals, std::int64_t d);
    static IntervalWindow single(QuadraticNumber lo, QuadraticNumber hi);
    static IntervalWindow empty_window(std::int64_t d) { return IntervalWindow({}, d); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::int64_t d() const { return d_; }
    bool empty() const { return intervals_.empty(); }
    bool has_interior() const;
    /// Convex hull [min lo, max hi]; requires a nonempty window.
    Interval hull() const;

    friend bool operator==(const IntervalWindow&, const IntervalWindow&) = default;

  private:
    IntervalWindow(std::vector<Interval> intervals, std::int64_t d) : intervals_(std::move(intervals)), d_(d) {}

    std::vector<Interval> intervals_;
    std::int64_t d_;
};

/// Window prod_k S_k in the truncated product prod_k Z/b_k Z.
class ResidueWindow
{
  public:
    /// allowed[k] lists the residues of S_k. The whole window is empty when some S_k is.
    static ResidueWindow from_allowed(std::vector<std::int64_t> moduli,
                                      const std::vector<std::vector<std::int64_t>>& allowed);
    static ResidueWindow from_forbidden(std::vector<std::int64_t> moduli,
                                        const std::vector<std::vector<std::int64_t>>& forbidden);
    static ResidueWindow full(std::vector<std::int64_t> moduli);

    const std::vector<std::int64_t>& moduli() const { return moduli_; }
    bool empty() const { return empty_; }
    bool allows(std::size_t k, std::int64_t residue) const { return allowed_[k][static_cast<std::size_t>(residue)]; }
    std::size_t allowed_count(std::size_t k) const;
    std::vector<std::int64_t> allowed_residues(std::size_t k) const;

    friend bool operator==(const ResidueWindow&, const ResidueWindow&) = default;

  private:
    ResidueWindow(std::vector<std::int64_t> moduli, std::vector<std::vector<bool>> allowed);

    std::vector<std::int64_t> moduli_;
    std::vector<std::vector<bool>> allowed_;
    bool empty_ = false;
};

bool contains(const IntervalWindow& w, const QuadraticNumber& h);
bool contains(const ResidueWindow& w, const ResidueVector& h);

bool on_boundary(const IntervalWindow& w, const QuadraticNumber& h);
/// The truncated internal group is discrete, so the boundary is empty.
bool on_boundary(const ResidueWindow& w, const ResidueVector& h);

QuadraticNumber haar(const IntervalWindow& w);
/// Haar measure normalized to 1 on the finite product.
Rational haar(const ResidueWindow& w);

/// W - h
IntervalWindow translate(const IntervalWindow& w, const QuadraticNumber& h);
ResidueWindow translate(const ResidueWindow& w, const ResidueVector& h);

/// Intersection of W - h over all shifts. Requires a nonempty shift list.
IntervalWindow intersect_translates(const IntervalWindow& w, std::span<const QuadraticNumber> shifts);
ResidueWindow intersect_translates(const ResidueWindow& w, std::span<const ResidueVector> shifts);

/// Stabilizer {h : W + h = W}.
struct IntervalPeriodicity
{
    bool aperiodic = true;
    /// Listed when finite and nontrivial; unset for the empty window (every h is a period).
    std::vector<QuadraticNumber> periods;
    bool all_of_h = false;
};

struct ResiduePeriodicity
{
    bool aperiodic = true;
    /// Period group as the product of these per-factor stabilizers.
    std::vector<std::vector<std::int64_t>> factor_stabilizers;
};

IntervalPeriodicity periodicity(const IntervalWindow& w);
ResiduePeriodicity periodicity(const ResidueWindow& w);
bool is_aperiodic(const IntervalWindow& w);
bool is_aperiodic(const ResidueWindow& w);

enum class IntervalCase
{
    /// beta - alpha not in pi_H(L)
    case_one,
    /// beta - alpha in pi_H(L)
    case_two,
};

/// Classifies a single nondegenerate interval window. Throws Unsupported for
/// other window shapes and ValidationError for a point interval.
IntervalCase classify_interval(const EuclideanScheme& scheme, const IntervalWindow& w);

/// Lattice element l with l_H = beta - alpha for a single interval window, if
/// one exists (exactly the Case II situation).
std::optional<LatticeIndex> return_vector(const EuclideanScheme& scheme, const IntervalWindow& w);

/// pi_H(L) = v_H Z + w_H Z
bool in_internal_projection(const EuclideanScheme& scheme, const QuadraticNumber& h);

} // namespace wms
