#include "wms/vanhove.hpp"

namespace wms
{

const char* to_string(Line line)
{
    return line == Line::integers ? "integers" : "reals";
}

namespace
{

void require_integral(const ClosedInterval<Rational>& i, const char* what)
{
    if (i.lo.get_den() != 1 || i.hi.get_den() != 1)
        throw ValidationError("integer-endpoints", std::string(what) + " must have integer endpoints on Z");
}

} // namespace

Rational k_boundary_measure(Line line, const ClosedInterval<Rational>& a, const ClosedInterval<Rational>& k)
{
    if (a.empty() || k.empty())
        throw ValidationError("compact-nonempty", "A and K must be nonempty intervals");
    if (line == Line::reals)
        return k_boundary_measure_reals(a, k, Rational(0));
    require_integral(a, "A");
    require_integral(k, "K");
    return k_boundary_measure_integers(a, k, Rational(0));
}

ClosedInterval<Rational> VanHoveFamily::at(std::int64_t n) const
{
    return {Rational(-n), Rational(n)};
}

Rational VanHoveFamily::measure(const ClosedInterval<Rational>& a) const
{
    if (a.empty())
        return 0;
    return line_ == Line::reals ? Rational(a.hi - a.lo) : Rational(a.hi - a.lo + 1);
}

Rational vanhove_ratio(const VanHoveFamily& family, const ClosedInterval<Rational>& k, std::int64_t n)
{
    if (n < 1)
        throw ValidationError("n-positive", "van Hove index must be >= 1");
    return k_boundary_measure(family.line(), family.at(n), k) / family.measure(n);
}

Rational difference_union_measure(const VanHoveFamily& family, std::int64_t n)
{
    std::vector<ClosedInterval<Rational>> parts;
    for (std::int64_t k = 1; k < n; ++k)
    {
        const auto a = family.at(k);
        parts.push_back({a.lo - a.hi, a.hi - a.lo});
    }
    if (parts.empty())
        return 0;
    return family.line() == Line::reals ? union_length(std::move(parts), Rational(0))
                                        : union_cardinality(std::move(parts), Rational(0));
}

namespace
{

// Running union of A_k - A_k for k < n, extended one k at a time.
class DifferenceUnion
{
  public:
    explicit DifferenceUnion(const VanHoveFamily& family) : family_(family) {}

    /// Measure of the union for k < n; call with n = 2, 3, ... in order.
    Rational advance_to(std::int64_t n)
    {
        const auto a = family_.at(n - 1);
        parts_.push_back({a.lo - a.hi, a.hi - a.lo});
        parts_ = merge_closed(std::move(parts_));
        return family_.line() == Line::reals ? union_length(parts_, Rational(0))
                                             : union_cardinality(parts_, Rational(0));
    }

  private:
    const VanHoveFamily& family_;
    std::vector<ClosedInterval<Rational>> parts_;
};

} // namespace

Temperedness temperedness_constant(const VanHoveFamily& family, std::int64_t n_max)
{
    if (n_max < 2)
        throw ValidationError("n-max", "temperedness needs n_max >= 2");
    Temperedness out{Rational(0), 0};
    DifferenceUnion diffs(family);
    for (std::int64_t n = 2; n <= n_max; ++n)
    {
        Rational r = diffs.advance_to(n) / family.measure(n);
        if (out.attained_at == 0 || r > out.constant)
        {
            out.constant = r;
            out.attained_at = n;
        }
    }
    return out;
}

std::vector<VanHoveRow> vanhove_sweep(const VanHoveFamily& family, const ClosedInterval<Rational>& k,
                                      std::int64_t n_max)
{
    std::vector<VanHoveRow> rows;
    DifferenceUnion diffs(family);
    for (std::int64_t n = 1; n <= n_max; ++n)
    {
        Rational b = k_boundary_measure(family.line(), family.at(n), k);
        Rational m = family.measure(n);
        Rational diff = n >= 2 ? diffs.advance_to(n) : Rational(0);
        rows.push_back({n, b, b / m, diff / m});
    }
    return rows;
}

} // namespace wms
