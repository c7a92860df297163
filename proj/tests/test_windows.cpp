#include <doctest.h>

#include "support.hpp"
#include "wms/error.hpp"
#include "wms/window.hpp"

using namespace wms;

namespace
{

QuadraticNumber q(const char* s, std::int64_t d)
{
    return parse_quadratic(s, d);
}

EuclideanScheme silver()
{
    return EuclideanScheme::build({q("1", 2), q("1", 2)}, {q("sqrt(2)", 2), q("-sqrt(2)", 2)});
}

EuclideanScheme fibonacci()
{
    return EuclideanScheme::build({q("1", 5), q("1", 5)}, {q("1/2+1/2*sqrt(5)", 5), q("1/2-1/2*sqrt(5)", 5)});
}

const IntervalWindow fib_window = IntervalWindow::single(q("-1", 5), q("-1/2+1/2*sqrt(5)", 5));
const IntervalWindow silver_window = IntervalWindow::single(q("-1/2*sqrt(2)", 2), q("1/2*sqrt(2)", 2));

ResidueWindow nonzero(std::vector<std::int64_t> moduli)
{
    return ResidueWindow::from_forbidden(moduli, std::vector<std::vector<std::int64_t>>(moduli.size(), {0}));
}

// Brute force: all h in the product group with S + h = S.
std::size_t brute_period_count(const ResidueWindow& w)
{
    const auto& b = w.moduli();
    std::int64_t total = 1;
    for (auto m : b)
        total *= m;
    std::size_t periods = 0;
    for (std::int64_t code = 0; code < total; ++code)
    {
        ResidueVector h;
        std::int64_t c = code;
        for (auto m : b)
        {
            h.push_back(c % m);
            c /= m;
        }
        bool fixes = true;
        for (std::int64_t y = 0; y < total && fixes; ++y)
        {
            ResidueVector r;
            std::int64_t e = y;
            for (auto m : b)
            {
                r.push_back(e % m);
                e /= m;
            }
            auto shifted = r;
            for (std::size_t k = 0; k < b.size(); ++k)
                shifted[k] = (shifted[k] + h[k]) % b[k];
            fixes = contains(w, r) == contains(w, shifted);
        }
        if (fixes)
            ++periods;
    }
    return periods;
}

} // namespace

TEST_SUITE("windows")
{
    TEST_CASE("contains and on_boundary")
    {
        CHECK(contains(fib_window, q("-1", 5)));
        CHECK_FALSE(contains(silver_window, q("1", 2)));
        CHECK(contains(nonzero({4, 9}), {2, 3}));
        CHECK_FALSE(contains(nonzero({4, 9}), {0, 3}));
        CHECK(on_boundary(fib_window, q("-1/2+1/2*sqrt(5)", 5)));
        CHECK_FALSE(on_boundary(fib_window, q("0", 5)));
        CHECK_FALSE(on_boundary(nonzero({4, 9}), {0, 0}));
        CHECK_THROWS_AS(contains(fib_window, q("0", 2)), SpaceMismatch);
        CHECK_THROWS_AS(contains(nonzero({4, 9}), {1}), SpaceMismatch);
    }

    TEST_CASE("haar")
    {
        CHECK(haar(fib_window) == q("1/2+1/2*sqrt(5)", 5));
        CHECK(oracle::dec(haar(fib_window)) > oracle::Dec("1.61803"));
        CHECK(oracle::dec(haar(fib_window)) < oracle::Dec("1.61804"));
        CHECK(haar(nonzero({4, 9, 25})) == make_rational(16, 25));
        CHECK(haar(IntervalWindow::empty_window(5)) == QuadraticNumber(5));
        CHECK(haar(ResidueWindow::from_allowed({4}, {{}})) == 0);
    }

    TEST_CASE("translate")
    {
        const auto w = IntervalWindow::single(q("0", 2), q("1", 2));
        CHECK(translate(w, q("1/2", 2)) == IntervalWindow::single(q("-1/2", 2), q("1/2", 2)));
        CHECK(translate(w, q("0", 2)) == w);
        const auto r = ResidueWindow::from_allowed({4, 9}, {{1, 2}, {0, 5, 7}});
        const auto t = translate(r, {3, 4});
        CHECK(t.allowed_count(0) == 2);
        CHECK(t.allowed_count(1) == 3);
        CHECK(haar(t) == haar(r));
        CHECK(contains(t, {mod_floor(1 - 3, 4), mod_floor(5 - 4, 9)}));
    }

    TEST_CASE("intersect_translates examples")
    {
        const auto one_plus_tau_c = q("3/2-1/2*sqrt(5)", 5);
        const std::vector<QuadraticNumber> shifts{q("0", 5), one_plus_tau_c};
        const auto i = intersect_translates(fib_window, shifts);
        CHECK(i == IntervalWindow::single(q("-1", 5), q("-2+sqrt(5)", 5) /* -1 - 2 tau' */));
        CHECK(haar(i) == q("-1+sqrt(5)", 5));

        const auto r = nonzero({4, 9});
        const auto s = ResidueScheme::build({4, 9});
        const std::vector<ResidueVector> rs{s.iota(0), s.iota(1)};
        const auto ri = intersect_translates(r, rs);
        CHECK(ri.allowed_count(0) == 2);
        CHECK(ri.allowed_count(1) == 7);
        CHECK(haar(ri) == make_rational(7, 18));

        CHECK(intersect_translates(fib_window, std::vector{q("0", 5)}) == fib_window);
    }

    TEST_CASE("intersect_translates is commutative and monotone")
    {
        gen::Rng rng(21);
        const auto w = IntervalWindow::from_intervals(
            {{q("-2", 3), q("-1", 3)}, {q("0", 3), q("sqrt(3)", 3)}, {q("2", 3), q("3+1/7*sqrt(3)", 3)}}, 3);
        for (int i = 0; i < 200; ++i)
        {
            std::vector<QuadraticNumber> shifts;
            const int k = static_cast<int>(gen::uniform(rng, 1, 4));
            for (int j = 0; j < k; ++j)
                shifts.push_back(gen::quadratic(rng, 3, 6, 4));
            auto reversed = shifts;
            std::reverse(reversed.begin(), reversed.end());
            const auto a = intersect_translates(w, shifts);
            CHECK(a == intersect_translates(w, reversed));
            shifts.push_back(gen::quadratic(rng, 3, 6, 4));
            CHECK(sign(haar(a) - haar(intersect_translates(w, shifts))) >= 0);
            // translation invariance and additivity of haar
            const auto h = gen::quadratic(rng, 3);
            CHECK(haar(translate(w, h)) == haar(w));
        }
    }

    TEST_CASE("aperiodicity")
    {
        CHECK(is_aperiodic(fib_window));
        CHECK(is_aperiodic(nonzero({4, 9})));
        const auto even = ResidueWindow::from_allowed({4}, {{0, 2}});
        CHECK_FALSE(is_aperiodic(even));
        CHECK(periodicity(even).factor_stabilizers.front() == std::vector<std::int64_t>{0, 2});
        CHECK_FALSE(is_aperiodic(IntervalWindow::empty_window(2)));
    }

    TEST_CASE("residue aperiodicity agrees with brute force")
    {
        gen::Rng rng(22);
        const std::vector<std::vector<std::int64_t>> families{{4, 9}, {2, 3, 5}, {6, 7}, {3, 8}, {4, 5, 9}};
        for (int i = 0; i < 60; ++i)
        {
            const auto& b = families[static_cast<std::size_t>(i) % families.size()];
            std::vector<std::vector<std::int64_t>> allowed;
            for (auto m : b)
            {
                std::vector<std::int64_t> s;
                for (std::int64_t r = 0; r < m; ++r)
                {
                    if (gen::uniform(rng, 0, 2) > 0)
                        s.push_back(r);
                }
                allowed.push_back(s);
            }
            const auto w = ResidueWindow::from_allowed(b, allowed);
            const auto p = periodicity(w);
            std::size_t group = 1;
            for (const auto& s : p.factor_stabilizers)
                group *= s.size();
            CHECK(group == brute_period_count(w));
            CHECK(p.aperiodic == (group == 1));
        }
    }

    TEST_CASE("interval classification")
    {
        CHECK(classify_interval(silver(), silver_window) == IntervalCase::case_two);
        CHECK(classify_interval(fibonacci(), fib_window) == IntervalCase::case_two);
        CHECK(classify_interval(silver(), IntervalWindow::single(q("0", 2), q("1/3", 2))) == IntervalCase::case_one);
        CHECK_THROWS_AS(classify_interval(silver(), IntervalWindow::single(q("1", 2), q("1", 2))), ValidationError);
        // beta - alpha = sqrt(2) = 0*v_H - 1*w_H... check against the module oracle directly
        CHECK(oracle::in_module(q("sqrt(2)", 2), q("sqrt(2)", 2)));
        CHECK_FALSE(oracle::in_module(q("1/3", 2), q("sqrt(2)", 2)));
    }

    TEST_CASE("closed windows: boundary points are members")
    {
        gen::Rng rng(23);
        for (int i = 0; i < 100; ++i)
        {
            auto lo = gen::quadratic(rng, 7);
            auto hi = lo + QuadraticNumber(make_rational(gen::uniform(rng, 0, 9), 4), 7);
            const auto w = IntervalWindow::single(lo, hi);
            const auto h = i % 2 ? lo : gen::quadratic(rng, 7);
            if (on_boundary(w, h))
                CHECK(contains(w, h));
        }
    }
}
