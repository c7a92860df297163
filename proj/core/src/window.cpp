#include "wms/window.hpp"

#include <algorithm>
#include <numeric>

namespace wms
{

// ---------------------------------------------------------------------------
// IntervalWindow

IntervalWindow IntervalWindow::from_intervals(std::vector<Interval> intervals, std::int64_t d)
{
    for (const auto& iv : intervals)
    {
        if (iv.lo.d() != d || iv.hi.d() != d)
            throw FieldMismatch("window endpoint outside Q(sqrt(" + std::to_string(d) + "))");
        if (iv.hi < iv.lo)
            throw ValidationError("interval-ordered", "window interval [" + to_string(iv.lo) + ", " +
                                                          to_string(iv.hi) + "] is reversed");
    }
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < intervals.size(); ++i)
    {
        if (!(intervals[i - 1].hi < intervals[i].lo))
            throw ValidationError("intervals-disjoint", "window intervals [" + to_string(intervals[i - 1].lo) +
                                                            ", " + to_string(intervals[i - 1].hi) + "] and [" +
                                                            to_string(intervals[i].lo) + ", " +
                                                            to_string(intervals[i].hi) + "] intersect");
    }
    return IntervalWindow(std::move(intervals), d);
}

IntervalWindow IntervalWindow::single(QuadraticNumber lo, QuadraticNumber hi)
{
    const auto d = lo.d();
    return from_intervals({Interval{std::move(lo), std::move(hi)}}, d);
}

bool IntervalWindow::has_interior() const
{
    return std::any_of(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.lo < iv.hi; });
}

Interval IntervalWindow::hull() const
{
    if (intervals_.empty())
        throw Error("hull of an empty window");
    return {intervals_.front().lo, intervals_.back().hi};
}

bool contains(const IntervalWindow& w, const QuadraticNumber& h)
{
    if (h.d() != w.d())
        throw SpaceMismatch("internal coordinate and window live in different fields");
    return std::any_of(w.intervals().begin(), w.intervals().end(), [&](const Interval& iv) { return iv.contains(h); });
}

bool on_boundary(const IntervalWindow& w, const QuadraticNumber& h)
{
    if (h.d() != w.d())
        throw SpaceMismatch("internal coordinate and window live in different fields");
    return std::any_of(w.intervals().begin(), w.intervals().end(),
                       [&](const Interval& iv) { return iv.lo == h || iv.hi == h; });
}

QuadraticNumber haar(const IntervalWindow& w)
{
    QuadraticNumber total(w.d());
    for (const auto& iv : w.intervals())
        total += iv.hi - iv.lo;
    return total;
}

IntervalWindow translate(const IntervalWindow& w, const QuadraticNumber& h)
{
    if (h.d() != w.d())
        throw SpaceMismatch("translation and window live in different fields");
    std::vector<Interval> out;
    out.reserve(w.intervals().size());
    for (const auto& iv : w.intervals())
        out.push_back({iv.lo - h, iv.hi - h});
    return IntervalWindow::from_intervals(std::move(out), w.d());
}

namespace
{

// Sorted sweep over two sorted disjoint interval lists.
std::vector<Interval> intersect_sorted(const std::vector<Interval>& a, const std::vector<Interval>& b)
{
    std::vector<Interval> out;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size())
    {
        const QuadraticNumber& lo = max(a[i].lo, b[j].lo);
        const QuadraticNumber& hi = min(a[i].hi, b[j].hi);
        if (!(hi < lo))
            out.push_back({lo, hi});
        if (a[i].hi < b[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

} // namespace

IntervalWindow intersect_translates(const IntervalWindow& w, std::span<const QuadraticNumber> shifts)
{
    if (shifts.empty())
        throw Error("intersect_translates needs at least one shift");
    std::vector<Interval> acc = translate(w, shifts.front()).intervals();
    for (std::size_t k = 1; k < shifts.size() && !acc.empty(); ++k)
        acc = intersect_sorted(acc, translate(w, shifts[k]).intervals());
    return IntervalWindow::from_intervals(std::move(acc), w.d());
}

IntervalPeriodicity periodicity(const IntervalWindow& w)
{
    IntervalPeriodicity out;
    if (w.empty())
    {
        out.aperiodic = false;
        out.all_of_h = true;
        return out;
    }
    // W + h = W forces the sorted interval lists to match term by term, so the
    // first left endpoint pins h = lo_0 - lo_0 = 0. Verify the match anyway.
    const QuadraticNumber h(w.d());
    if (translate(w, -h) == w)
        out.periods.push_back(h);
    out.aperiodic = out.periods.size() == 1 && out.periods.front().is_zero();
    return out;
}

bool is_aperiodic(const IntervalWindow& w)
{
    return periodicity(w).aperiodic;
}

bool in_internal_projection(const EuclideanScheme& scheme, const QuadraticNumber& h)
{
    return in_span(h, scheme.v().h, scheme.w().h);
}

namespace
{

const Interval& single_interval(const IntervalWindow& w)
{
    if (w.intervals().size() != 1)
        throw Unsupported("operation requires a single-interval window");
    const Interval& iv = w.intervals().front();
    if (iv.lo == iv.hi)
        throw ValidationError("nondegenerate-interval", "window is a single point");
    return iv;
}

} // namespace

IntervalCase classify_interval(const EuclideanScheme& scheme, const IntervalWindow& w)
{
    const Interval& iv = single_interval(w);
    return in_internal_projection(scheme, iv.hi - iv.lo) ? IntervalCase::case_two : IntervalCase::case_one;
}

std::optional<LatticeIndex> return_vector(const EuclideanScheme& scheme, const IntervalWindow& w)
{
    const Interval& iv = single_interval(w);
    const auto c = span_coefficients(iv.hi - iv.lo, scheme.v().h, scheme.w().h);
    if (!c.integral())
        return std::nullopt;
    return LatticeIndex{c.m.get_num().get_si(), c.n.get_num().get_si()};
}

// ---------------------------------------------------------------------------
// ResidueWindow

ResidueWindow::ResidueWindow(std::vector<std::int64_t> moduli, std::vector<std::vector<bool>> allowed)
    : moduli_(std::move(moduli)), allowed_(std::move(allowed))
{
    empty_ = std::any_of(allowed_.begin(), allowed_.end(),
                         [](const std::vector<bool>& s) { return std::none_of(s.begin(), s.end(), [](bool b) { return b; }); });
}

namespace
{

std::vector<std::vector<bool>> residue_sets(const std::vector<std::int64_t>& moduli,
                                            const std::vector<std::vector<std::int64_t>>& lists, bool value)
{
    if (lists.size() != moduli.size())
        throw ValidationError("window-arity", "window lists " + std::to_string(lists.size()) +
                                                  " residue sets for " + std::to_string(moduli.size()) + " moduli");
    std::vector<std::vector<bool>> sets;
    for (std::size_t k = 0; k < moduli.size(); ++k)
    {
        if (moduli[k] < 1)
            throw ValidationError("moduli-at-least-two", "modulus must be positive");
        std::vector<bool> s(static_cast<std::size_t>(moduli[k]), !value);
        for (auto r : lists[k])
        {
            if (r < 0 || r >= moduli[k])
                throw ValidationError("residue-range", "residue " + std::to_string(r) + " outside Z/" +
                                                           std::to_string(moduli[k]) + "Z");
            s[static_cast<std::size_t>(r)] = value;
        }
        sets.push_back(std::move(s));
    }
    return sets;
}

} // namespace

ResidueWindow ResidueWindow::from_allowed(std::vector<std::int64_t> moduli,
                                          const std::vector<std::vector<std::int64_t>>& allowed)
{
    auto sets = residue_sets(moduli, allowed, true);
    return ResidueWindow(std::move(moduli), std::move(sets));
}

ResidueWindow ResidueWindow::from_forbidden(std::vector<std::int64_t> moduli,
                                            const std::vector<std::vector<std::int64_t>>& forbidden)
{
    auto sets = residue_sets(moduli, forbidden, false);
    return ResidueWindow(std::move(moduli), std::move(sets));
}

ResidueWindow ResidueWindow::full(std::vector<std::int64_t> moduli)
{
    return from_forbidden(moduli, std::vector<std::vector<std::int64_t>>(moduli.size()));
}

std::size_t ResidueWindow::allowed_count(std::size_t k) const
{
    return static_cast<std::size_t>(std::count(allowed_[k].begin(), allowed_[k].end(), true));
}

std::vector<std::int64_t> ResidueWindow::allowed_residues(std::size_t k) const
{
    std::vector<std::int64_t> out;
    for (std::size_t r = 0; r < allowed_[k].size(); ++r)
    {
        if (allowed_[k][r])
            out.push_back(static_cast<std::int64_t>(r));
    }
    return out;
}

namespace
{

void require_arity(const ResidueWindow& w, const ResidueVector& h)
{
    if (h.size() != w.moduli().size())
        throw SpaceMismatch("residue vector has " + std::to_string(h.size()) + " entries, window has " +
                            std::to_string(w.moduli().size()) + " factors");
}

} // namespace

bool contains(const ResidueWindow& w, const ResidueVector& h)
{
    require_arity(w, h);
    for (std::size_t k = 0; k < h.size(); ++k)
    {
        if (!w.allows(k, mod_floor(h[k], w.moduli()[k])))
            return false;
    }
    return true;
}

bool on_boundary(const ResidueWindow& w, const ResidueVector& h)
{
    require_arity(w, h);
    return false;
}

Rational haar(const ResidueWindow& w)
{
    Rational out = 1;
    for (std::size_t k = 0; k < w.moduli().size(); ++k)
        out *= make_rational(static_cast<long>(w.allowed_count(k)), w.moduli()[k]);
    out.canonicalize();
    return out;
}

ResidueWindow translate(const ResidueWindow& w, const ResidueVector& h)
{
    require_arity(w, h);
    std::vector<std::vector<std::int64_t>> allowed;
    for (std::size_t k = 0; k < h.size(); ++k)
    {
        std::vector<std::int64_t> s;
        for (auto r : w.allowed_residues(k))
            s.push_back(mod_floor(r - h[k], w.moduli()[k]));
        allowed.push_back(std::move(s));
    }
    return ResidueWindow::from_allowed(w.moduli(), allowed);
}

ResidueWindow intersect_translates(const ResidueWindow& w, std::span<const ResidueVector> shifts)
{
    if (shifts.empty())
        throw Error("intersect_translates needs at least one shift");
    const auto& moduli = w.moduli();
    std::vector<std::vector<std::int64_t>> allowed(moduli.size());
    for (std::size_t k = 0; k < moduli.size(); ++k)
    {
        for (std::int64_t r = 0; r < moduli[k]; ++r)
        {
            // r in S_k - h_k for every shift
            const bool keep = std::all_of(shifts.begin(), shifts.end(), [&](const ResidueVector& h) {
                require_arity(w, h);
                return w.allows(k, mod_floor(r + h[k], moduli[k]));
            });
            if (keep)
                allowed[k].push_back(r);
        }
    }
    return ResidueWindow::from_allowed(moduli, allowed);
}

ResiduePeriodicity periodicity(const ResidueWindow& w)
{
    ResiduePeriodicity out;
    const auto& moduli = w.moduli();
    for (std::size_t k = 0; k < moduli.size(); ++k)
    {
        std::vector<std::int64_t> stab;
        for (std::int64_t h = 0; h < moduli[k]; ++h)
        {
            bool fixes = true;
            for (std::int64_t r = 0; r < moduli[k] && fixes; ++r)
                fixes = w.allows(k, r) == w.allows(k, mod_floor(r + h, moduli[k]));
            if (fixes || w.empty())
                stab.push_back(h);
        }
        if (stab.size() != 1)
            out.aperiodic = false;
        out.factor_stabilizers.push_back(std::move(stab));
    }
    return out;
}

bool is_aperiodic(const ResidueWindow& w)
{
    return periodicity(w).aperiodic;
}

} // namespace wms
