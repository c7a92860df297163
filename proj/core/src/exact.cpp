#include "wms/exact.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace wms
{

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_square_free(std::int64_t d)
{
    if (d < 1)
        return false;
    for (std::int64_t p = 2; p * p <= d; ++p)
    {
        if (d % (p * p) == 0)
            return false;
    }
    return true;
}

namespace
{

void check_field_parameter(std::int64_t d)
{
    if (d < 2 || !is_square_free(d))
        throw ValidationError("square-free-d", "field parameter d=" + std::to_string(d) +
                                                   " must be a square-free integer >= 2");
}

} // namespace

QuadraticNumber::QuadraticNumber(std::int64_t d) : QuadraticNumber(Rational(0), Rational(0), d) {}

QuadraticNumber::QuadraticNumber(Rational a, std::int64_t d) : QuadraticNumber(std::move(a), Rational(0), d)
{
}

QuadraticNumber::QuadraticNumber(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d)
{
    check_field_parameter(d_);
    a_.canonicalize();
    b_.canonicalize();
}

void QuadraticNumber::require_same_field(const QuadraticNumber& o) const
{
    if (d_ != o.d_)
        throw FieldMismatch("cannot combine values of Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" +
                            std::to_string(o.d_) + "))");
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o)
{
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o)
{
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o)
{
    require_same_field(o);
    Rational a = a_ * o.a_ + Rational(d_) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadraticNumber QuadraticNumber::inverse() const
{
    Rational n = norm();
    if (sgn(n) == 0)
        throw Error("division by zero in Q(sqrt(" + std::to_string(d_) + "))");
    return {a_ / n, -b_ / n, d_};
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o)
{
    require_same_field(o);
    return *this *= o.inverse();
}

QuadraticNumber& QuadraticNumber::operator*=(const Rational& r)
{
    a_ *= r;
    b_ *= r;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator+=(const Rational& r)
{
    a_ += r;
    return *this;
}

double QuadraticNumber::approx() const
{
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

double QuadraticNumber::magnitude() const
{
    return std::abs(a_.get_d()) + std::abs(b_.get_d()) * std::sqrt(static_cast<double>(d_));
}

int sign(const QuadraticNumber& x)
{
    const int sa = sgn(x.rational_part());
    const int sb = sgn(x.surd_part());
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    return sa * sgn(x.norm());
}

int compare(const QuadraticNumber& x, const QuadraticNumber& y)
{
    return sign(x - y);
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y)
{
    const int c = compare(x, y);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadraticNumber abs(const QuadraticNumber& x)
{
    return sign(x) < 0 ? -x : x;
}

const QuadraticNumber& min(const QuadraticNumber& x, const QuadraticNumber& y)
{
    return compare(y, x) < 0 ? y : x;
}

const QuadraticNumber& max(const QuadraticNumber& x, const QuadraticNumber& y)
{
    return compare(y, x) > 0 ? y : x;
}

Integer floor(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

namespace
{

// n <= x exactly
bool at_most(const Integer& n, const QuadraticNumber& x)
{
    QuadraticNumber diff = x;
    diff += Rational(-n);
    return sign(diff) >= 0;
}

} // namespace

Integer floor(const QuadraticNumber& x)
{
    if (x.is_rational())
        return floor(x.rational_part());

    // Try the floating-point guess first; it is only accepted after exact verification.
    const double guess = std::floor(x.approx());
    if (std::isfinite(guess) && std::abs(guess) < 1e15)
    {
        Integer g(guess);
        if (at_most(g, x) && !at_most(g + 1, x))
            return g;
    }

    // Bracket sqrt(d) in [s, s+1] and bisect on the integers.
    Integer s;
    mpz_sqrt(s.get_mpz_t(), Integer(static_cast<long>(x.d())).get_mpz_t());
    const Rational& a = x.rational_part();
    const Rational& b = x.surd_part();
    Rational e1 = a + b * Rational(s);
    Rational e2 = a + b * Rational(s + 1);
    if (e1 > e2)
        std::swap(e1, e2);
    Integer lo = floor(e1); // lo <= x
    Integer hi = ceil(e2);  // x <= hi
    while (hi - lo > 1)
    {
        Integer mid = lo + (hi - lo) / 2;
        if (at_most(mid, x))
            lo = mid;
        else
            hi = mid;
    }
    return at_most(hi, x) ? hi : lo;
}

Integer ceil(const QuadraticNumber& x)
{
    return -floor(-x);
}

bool in_integer_span(const QuadraticNumber& x)
{
    return x.rational_part().get_den() == 1 && x.surd_part().get_den() == 1;
}

bool rationally_dependent(const QuadraticNumber& x, const QuadraticNumber& y)
{
    if (x.d() != y.d())
        throw FieldMismatch("rational dependence across different fields");
    // Coordinates in the Q-basis (1, sqrt(d)).
    return sgn(x.rational_part() * y.surd_part() - x.surd_part() * y.rational_part()) == 0;
}

SpanCoefficients span_coefficients(const QuadraticNumber& x, const QuadraticNumber& g1, const QuadraticNumber& g2)
{
    if (x.d() != g1.d() || x.d() != g2.d())
        throw FieldMismatch("module membership across different fields");
    const Rational det = g1.rational_part() * g2.surd_part() - g2.rational_part() * g1.surd_part();
    if (sgn(det) == 0)
        throw DegenerateModule("module generators " + to_string(g1) + ", " + to_string(g2) +
                               " are rationally dependent");
    // Solve [g1 g2] (m, n)^T = x in the (1, sqrt(d)) basis by Cramer's rule.
    const Rational& xa = x.rational_part();
    const Rational& xb = x.surd_part();
    Rational m = (xa * g2.surd_part() - g2.rational_part() * xb) / det;
    Rational n = (g1.rational_part() * xb - xa * g1.surd_part()) / det;
    return {std::move(m), std::move(n)};
}

bool in_span(const QuadraticNumber& x, const QuadraticNumber& g1, const QuadraticNumber& g2)
{
    return span_coefficients(x, g1, g2).integral();
}

bool in_module(const QuadraticNumber& x, const QuadraticNumber& gen)
{
    if (gen.is_rational())
        throw DegenerateModule("module generator " + to_string(gen) + " is rational");
    return in_span(x, QuadraticNumber(Rational(1), x.d()), gen);
}

// ---------------------------------------------------------------------------
// Text

std::string to_string(const Rational& x)
{
    return x.get_str();
}

std::string to_string(const QuadraticNumber& x)
{
    const Rational& a = x.rational_part();
    const Rational& b = x.surd_part();
    const std::string surd = "*sqrt(" + std::to_string(x.d()) + ")";
    if (sgn(b) == 0)
        return a.get_str();
    if (sgn(a) == 0)
        return b.get_str() + surd;
    std::string out = a.get_str();
    if (sgn(b) > 0)
        out += '+';
    out += b.get_str();
    out += surd;
    return out;
}

namespace
{

class Scanner
{
  public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_spaces()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_spaces();
        return pos_ >= text_.size();
    }
    char peek()
    {
        skip_spaces();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() == c)
        {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word)
    {
        skip_spaces();
        if (text_.substr(pos_, word.size()) == word)
        {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    Integer digits()
    {
        skip_spaces();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }
    bool at_digit()
    {
        skip_spaces();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("malformed exact value '" + std::string(text_) + "': " + what, pos_);
    }
    std::size_t position() const { return pos_; }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Rational scan_unsigned_rational(Scanner& in)
{
    Integer num = in.digits();
    Integer den = 1;
    if (in.accept('/'))
    {
        den = in.digits();
        if (den == 0)
            in.fail("zero denominator");
    }
    return make_rational(num, den);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    Scanner in(text);
    bool negative = false;
    if (in.accept('-'))
        negative = true;
    else
        in.accept('+');
    Rational r = scan_unsigned_rational(in);
    if (!in.done())
        in.fail("trailing characters");
    return negative ? Rational(-r) : r;
}

QuadraticNumber parse_quadratic(std::string_view text, std::int64_t d)
{
    Scanner in(text);
    Rational a = 0;
    Rational b = 0;
    bool first = true;
    if (in.done())
        in.fail("empty value");
    while (!in.done())
    {
        int s = 1;
        if (in.accept('-'))
            s = -1;
        else if (!in.accept('+') && !first)
            in.fail("expected '+' or '-'");
        first = false;

        Rational coeff = 1;
        bool have_coeff = false;
        if (in.at_digit())
        {
            coeff = scan_unsigned_rational(in);
            have_coeff = true;
        }
        bool surd = false;
        if (have_coeff && in.accept('*'))
        {
            if (!in.accept("sqrt"))
                in.fail("expected 'sqrt' after '*'");
            surd = true;
        }
        else if (!have_coeff)
        {
            if (!in.accept("sqrt"))
                in.fail("expected a rational or 'sqrt'");
            surd = true;
        }
        if (surd)
        {
            in.expect('(');
            Integer k = in.digits();
            if (k != d)
                in.fail("sqrt(" + k.get_str() + ") does not match field parameter d=" + std::to_string(d));
            in.expect(')');
            b += s * coeff;
        }
        else
        {
            a += s * coeff;
        }
    }
    return {a, b, d};
}

// ---------------------------------------------------------------------------
// Decimal rendering

namespace
{

Integer pow10(long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

Rational pow10_signed(long e)
{
    return e >= 0 ? Rational(pow10(e)) : make_rational(1, pow10(-e));
}

} // namespace

std::string to_decimal(const QuadraticNumber& x, int digits)
{
    if (digits < 1)
        throw Error("decimal precision must be positive");
    const int s = sign(x);
    if (s == 0)
        return "0";
    const QuadraticNumber mag = s < 0 ? -x : x;

    // Exponent e with 10^e <= |x| < 10^(e+1).
    double l = std::log10(mag.approx());
    long e = std::isfinite(l) ? static_cast<long>(std::floor(l)) : 0;
    while (compare(mag, QuadraticNumber(pow10_signed(e), x.d())) < 0)
        --e;
    while (compare(mag, QuadraticNumber(pow10_signed(e + 1), x.d())) >= 0)
        ++e;

    const QuadraticNumber scaled = mag * pow10_signed(digits - 1 - e);
    Integer q = floor(scaled);
    QuadraticNumber frac = scaled;
    frac += Rational(-q);
    const int half = compare(frac, QuadraticNumber(Rational(1, 2), x.d()));
    if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t())))
        q += 1;
    if (q == pow10(digits))
    {
        q /= 10;
        ++e;
    }

    std::string ds = q.get_str(); // exactly `digits` characters
    std::string out = s < 0 ? "-" : "";
    if (e >= -5 && e < digits)
    {
        if (e >= 0)
        {
            std::string ip = ds.substr(0, static_cast<std::size_t>(e + 1));
            std::string fp = ds.substr(static_cast<std::size_t>(e + 1));
            while (!fp.empty() && fp.back() == '0')
                fp.pop_back();
            out += ip;
            if (!fp.empty())
                out += "." + fp;
        }
        else
        {
            std::string fp = std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
            while (!fp.empty() && fp.back() == '0')
                fp.pop_back();
            out += "0." + fp;
        }
    }
    else
    {
        std::string fp = ds.substr(1);
        while (!fp.empty() && fp.back() == '0')
            fp.pop_back();
        out += ds.substr(0, 1);
        if (!fp.empty())
            out += "." + fp;
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
    }
    return out;
}

std::string to_decimal(const Rational& x, int digits)
{
    // Any field works for a rational value.
    return to_decimal(QuadraticNumber(x, 2), digits);
}

} // namespace wms
