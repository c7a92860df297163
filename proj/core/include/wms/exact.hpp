#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "wms/error.hpp"

namespace wms
{

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// d is square-free and >= 2, so the pair (a, b) is unique and equality is
/// structural. Every value carries its own d; combining values from different
/// fields throws FieldMismatch.
class QuadraticNumber
{
  public:
    explicit QuadraticNumber(std::int64_t d);
    QuadraticNumber(Rational a, std::int64_t d);
    QuadraticNumber(Rational a, Rational b, std::int64_t d);

    static QuadraticNumber sqrt_d(std::int64_t d) { return {Rational(0), Rational(1), d}; }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    std::int64_t d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadraticNumber conjugate() const { return {a_, -b_, d_}; }
    /// a^2 - d*b^2
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
    QuadraticNumber inverse() const;

    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const Rational& r);
    QuadraticNumber& operator+=(const Rational& r);

    friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_, x.d_}; }
    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const Rational& r) { return x *= r; }
    friend QuadraticNumber operator*(const Rational& r, QuadraticNumber x) { return x *= r; }
    friend QuadraticNumber operator+(QuadraticNumber x, const Rational& r) { return x += r; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y)
    {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Exact order of the real values. Throws FieldMismatch across fields.
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);

    /// Fast approximation; never used to decide anything.
    double approx() const;
    /// Upper bound for |a| + |b|*sqrt(d), the scale of rounding error in approx().
    double magnitude() const;

  private:
    void require_same_field(const QuadraticNumber& o) const;

    Rational a_;
    Rational b_;
    std::int64_t d_;
};

bool is_square_free(std::int64_t d);

/// Exact sign of x in {-1, 0, +1}.
int sign(const QuadraticNumber& x);
int compare(const QuadraticNumber& x, const QuadraticNumber& y);
QuadraticNumber abs(const QuadraticNumber& x);
const QuadraticNumber& min(const QuadraticNumber& x, const QuadraticNumber& y);
const QuadraticNumber& max(const QuadraticNumber& x, const QuadraticNumber& y);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Integer floor(const QuadraticNumber& x);
Integer ceil(const QuadraticNumber& x);

/// x in Z + Z*sqrt(d).
bool in_integer_span(const QuadraticNumber& x);

/// Coefficients (m, n) with x = m*g1 + n*g2 over Q; g1, g2 must be Q-independent.
struct SpanCoefficients
{
    Rational m;
    Rational n;
    bool integral() const { return m.get_den() == 1 && n.get_den() == 1; }
};
SpanCoefficients span_coefficients(const QuadraticNumber& x, const QuadraticNumber& g1,
                                   const QuadraticNumber& g2);

/// x in g1*Z + g2*Z. Throws DegenerateModule if g1, g2 are Q-dependent.
bool in_span(const QuadraticNumber& x, const QuadraticNumber& g1, const QuadraticNumber& g2);

/// x in Z + gen*Z. Throws DegenerateModule if gen is rational.
bool in_module(const QuadraticNumber& x, const QuadraticNumber& gen);

/// True iff x and y are linearly dependent over Q.
bool rationally_dependent(const QuadraticNumber& x, const QuadraticNumber& y);

// Textual forms: "p/q" and "p/q+r/s*sqrt(d)". Integer shorthand is accepted on input.
std::string to_string(const Rational& x);
std::string to_string(const QuadraticNumber& x);
Rational parse_rational(std::string_view text);
/// Parses a quadratic number. A bare rational is read into the field with parameter d.
/// A sqrt(k) term must name k == d.
QuadraticNumber parse_quadratic(std::string_view text, std::int64_t d);

/// Round-half-even decimal rendering with `digits` significant digits, decided exactly.
std::string to_decimal(const QuadraticNumber& x, int digits = 15);
std::string to_decimal(const Rational& x, int digits = 15);

} // namespace wms
