#pragma once

#include <cstdint>
#include <vector>

#include "wms/exact.hpp"
#include "wms/interval.hpp"

namespace wms
{

enum class Line
{
    integers,
    reals,
};

const char* to_string(Line line);

/// m_G(d^K A) for d^K A = ((K + A) \ int A) u ((-K + closure(G \ A)) n A),
/// with A = [a1, a2] and K = [k1, k2] compact intervals in R.
template <class T>
T k_boundary_measure_reals(const ClosedInterval<T>& a, const ClosedInterval<T>& k, const T& zero)
{
    using I = ClosedInterval<T>;
    // (K + A) \ (a1, a2)
    const T p = a.lo + k.lo;
    const T q = a.hi + k.hi;
    std::vector<I> parts{I{p, q < a.lo ? q : a.lo}, I{a.hi < p ? p : a.hi, q}};
    // (-K + ((-inf, a1] u [a2, inf))) n [a1, a2]
    const T left_end = a.lo - k.lo;
    const T right_start = a.hi - k.hi;
    parts.push_back(I{a.lo, left_end < a.hi ? left_end : a.hi});
    parts.push_back(I{a.lo < right_start ? right_start : a.lo, a.hi});
    return union_length(std::move(parts), zero);
}

/// Same set on G = Z, where int A = A and closure(G \ A) = G \ A; measured by cardinality.
template <class T>
T k_boundary_measure_integers(const ClosedInterval<T>& a, const ClosedInterval<T>& k, const T& zero)
{
    using I = ClosedInterval<T>;
    const T one = zero + 1;
    // (K + A) \ A
    const T p = a.lo + k.lo;
    const T q = a.hi + k.hi;
    const T before = a.lo - one;
    const T after = a.hi + one;
    std::vector<I> parts{I{p, q < before ? q : before}, I{after < p ? p : after, q}};
    // (-K + ((-inf, a1-1] u [a2+1, inf))) n A
    const T left_end = before - k.lo;
    const T right_start = after - k.hi;
    parts.push_back(I{a.lo, left_end < a.hi ? left_end : a.hi});
    parts.push_back(I{a.lo < right_start ? right_start : a.lo, a.hi});
    return union_cardinality(std::move(parts), zero);
}

/// Exact boundary measure for integer endpoints (Line::integers) or rational ones.
Rational k_boundary_measure(Line line, const ClosedInterval<Rational>& a, const ClosedInterval<Rational>& k);

/// Centered intervals A_n = [-n, n] in Z or R.
class VanHoveFamily
{
  public:
    explicit VanHoveFamily(Line line) : line_(line) {}

    Line line() const { return line_; }
    ClosedInterval<Rational> at(std::int64_t n) const;
    /// Cardinality on Z, length on R.
    Rational measure(const ClosedInterval<Rational>& a) const;
    Rational measure(std::int64_t n) const { return measure(at(n)); }

  private:
    Line line_;
};

/// m_G(d^K A_n) / m_G(A_n)
Rational vanhove_ratio(const VanHoveFamily& family, const ClosedInterval<Rational>& k, std::int64_t n);

struct Temperedness
{
    /// max over 2 <= n <= n_max of m(U_{1<=k<n} (A_k - A_k)) / m(A_n)
    Rational constant;
    std::int64_t attained_at = 0;
};

/// Union of A_k - A_k for 1 <= k < n, measured directly.
Rational difference_union_measure(const VanHoveFamily& family, std::int64_t n);
Temperedness temperedness_constant(const VanHoveFamily& family, std::int64_t n_max);

struct VanHoveRow
{
    std::int64_t n;
    Rational boundary_measure;
    Rational ratio;
    /// Empty (zero) for n = 1, where the difference union is empty.
    Rational tempered_ratio;
};

std::vector<VanHoveRow> vanhove_sweep(const VanHoveFamily& family, const ClosedInterval<Rational>& k,
                                      std::int64_t n_max);

} // namespace wms
