#pragma once

#include <algorithm>
#include <vector>

namespace wms
{

/// Closed interval [lo, hi]. Empty when hi < lo.
template <class T>
struct ClosedInterval
{
    T lo;
    T hi;

    bool empty() const { return hi < lo; }
    bool contains(const T& x) const { return !(x < lo) && !(hi < x); }
    friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

/// Sorts and merges overlapping closed intervals; empty ones are dropped.
template <class T>
std::vector<ClosedInterval<T>> merge_closed(std::vector<ClosedInterval<T>> parts)
{
    std::erase_if(parts, [](const ClosedInterval<T>& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    std::vector<ClosedInterval<T>> out;
    for (auto& p : parts)
    {
        if (!out.empty() && !(out.back().hi < p.lo))
        {
            if (out.back().hi < p.hi)
                out.back().hi = p.hi;
        }
        else
        {
            out.push_back(p);
        }
    }
    return out;
}

/// Lebesgue measure of a finite union of closed real intervals.
template <class T>
T union_length(std::vector<ClosedInterval<T>> parts, T zero)
{
    T total = zero;
    for (const auto& p : merge_closed(std::move(parts)))
        total += p.hi - p.lo;
    return total;
}

/// Counting measure of a finite union of closed integer intervals.
template <class T>
T union_cardinality(std::vector<ClosedInterval<T>> parts, T zero)
{
    T total = zero;
    for (const auto& p : merge_closed(std::move(parts)))
        total += (p.hi - p.lo) + 1;
    return total;
}

} // namespace wms
