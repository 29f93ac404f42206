/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cmath>

#include "doctest.h"
#include "polymod/error.hpp"
#include "polymod/nonclosed.hpp"
#include "support.hpp"

using namespace polymod;
using namespace polymod::nonclosed;
using support::up;

namespace {

double as_double(const Real& r) { return r.convert_to<double>(); }

template <class F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("log arithmetic") {
    TEST_CASE("products, sums, powers") {
        widen_exponent_range();
        const LogNum two = LogNum::from_value(Real(2));
        const LogNum three = LogNum::from_value(Real(3));
        CHECK(as_double(log_mul(two, three).log_mag()) == doctest::Approx(std::log(6.0)));
        CHECK(as_double(log_add(two, three).log_mag()) == doctest::Approx(std::log(5.0)));
        const LogNum diff = log_add(two, log_neg(three));
        CHECK(diff.sign() == Sign::negative);
        CHECK(as_double(diff.log_mag()) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(log_add(two, log_neg(two)).is_zero());
        CHECK(as_double(log_pow(two, Real(10)).log_mag()) == doctest::Approx(std::log(1024.0)));
        CHECK(log_pow(log_neg(two), Real(3)).sign() == Sign::negative);
        CHECK(kind_of([&] { log_pow(log_neg(two), Real(0.5)); }) == ErrorKind::InvalidArgument);
        CHECK(log_mul(two, LogNum()).is_zero());
        CHECK(LogNum::from_value(Real(-0.25)).below_one());
    }

    TEST_CASE("upward rounding dominates the exact sum") {
        const auto a = LogNum::from_log(Real(5), Sign::positive, Rounding::upward);
        const auto b = LogNum::from_log(Real(5), Sign::negative, Rounding::upward);
        const auto s = log_add(a, b);  // bounds |a| + |b|, never cancels
        CHECK(s.sign() == Sign::positive);
        CHECK(s.log_mag() > Real(5) + log(Real(2)));
        CHECK(s.log_mag() - (Real(5) + log(Real(2))) < Real(1e-9));
    }

    TEST_CASE("tower logs") {
        CHECK(as_double(e_tower_log(1, Real(3))) == 3.0);
        CHECK(as_double(e_tower_log(2, Real(1))) == doctest::Approx(std::exp(1.0)));
        CHECK(as_double(e_tower_log(3, Real(1))) == doctest::Approx(15.1542622415));
        CHECK(as_double(e_tower_log(3, Real(2))) == doctest::Approx(std::exp(std::exp(2.0))));
        // ln e_3(4) = e^(e^4), about 10^23.7
        CHECK(as_double(log10(e_tower_log(3, Real(4)))) == doctest::Approx(std::exp(4.0) / std::log(10.0)));
        CHECK_NOTHROW(e_tower_log(3, Real(28)));
        CHECK(kind_of([] { e_tower_log(3, Real(29)); }) == ErrorKind::RangeExceeded);
        CHECK(kind_of([] { e_tower_log(4, Real(1)); }) == ErrorKind::InvalidArgument);
    }
}

TEST_SUITE("limit ratio") {
    TEST_CASE("n = 2 matches double precision") {
        const double oracle = oracle::e14_at_two();
        CHECK(oracle == doctest::Approx(-1506.2).epsilon(1e-4));
        CHECK(as_double(e14_log_ratio<Real>(2)) == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(e14_log_ratio<Real>(3) < Real(-1e8));
    }

    TEST_CASE("strictly decreasing and negative") {
        const auto r = verify_e14(20);
        REQUIRE(r.rows.size() == 19);
        CHECK(r.rows.front().n == 2);
        CHECK(r.strictly_decreasing);
        CHECK(r.negative_from == 2);
        CHECK(r.negative_onward);
        CHECK(r.rows.back().log_ratio < r.rows.front().log_ratio - Real(1e6));
        CHECK(kind_of([] { verify_e14(1); }) == ErrorKind::InvalidArgument);
        CHECK(kind_of([] { verify_e14(29); }) == ErrorKind::RangeExceeded);
    }
}

TEST_SUITE("supremum bound") {
    TEST_CASE("decreasing and negative") {
        const auto rows = sweep(5, 25, Exec::serial);
        REQUIRE(rows.size() == 21);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].n == static_cast<int>(i) + 5);
            CHECK(rows[i].certified);
            CHECK(rows[i].limit_chain);
            CHECK(rows[i].log_total.log_mag() < 0);
            for (const auto& c : rows[i].conditions) CHECK(c.holds);
            if (i > 0) CHECK(rows[i].log_total.log_mag() < rows[i - 1].log_total.log_mag());
        }
    }

    TEST_CASE("side conditions") {
        auto holds = [](int n, const std::string& name) {
            for (const auto& c : side_conditions(n))
                if (c.name == name && !c.holds) return false;
            return true;
        };
        CHECK_FALSE(holds(1, "tower_step"));
        CHECK(holds(2, "tower_step"));
        for (int n = 2; n <= 12; ++n)
            for (const char* name : {"poly_sum_below_tower", "tower_step", "factorial_power",
                                     "power_below_exp_square", "square_below_exp"})
                CHECK(holds(n, name));
        CHECK(side_conditions(1).size() == 5);
        CHECK(side_conditions(4).size() == 8);
        CHECK(empirical_n0(20) == 1);
    }

    TEST_CASE("small and out-of-range n") {
        CHECK(kind_of([] { sup_bound(0); }) == ErrorKind::InvalidArgument);
        try {
            sup_bound(1);
            FAIL("expected ThresholdUnmet");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ThresholdUnmet);
            CHECK(e.detail().at("failed").at(0).at("name") == "tower_step");
        }
        CHECK(kind_of([] { sup_bound(30); }) == ErrorKind::RangeExceeded);
        // Negative well before the sweep starts.
        CHECK(sup_bound(2).certified);
        CHECK(sup_bound(6).log_total.log_mag() < 0);
    }

    TEST_CASE("upward rounding against wider precision") {
        for (int n = 2; n <= 12; ++n) {
            const auto hi = bound_terms<WideReal>(n, Rounding::nearest);
            const auto lo = bound_terms<Real>(n, Rounding::upward);
            CHECK(WideReal(lo.linear.log_mag()) >= hi.linear.log_mag());
            CHECK(WideReal(lo.tail.log_mag()) >= hi.tail.log_mag());
            CHECK(WideReal(lo.total.log_mag()) >= hi.total.log_mag());
        }
    }

    TEST_CASE("tail dominates and sits under the limit ratio") {
        // Past n = 5 the gap is below the working precision of e_2(n).
        for (int n = 2; n <= 5; ++n) {
            const auto t = bound_terms<WideReal>(n, Rounding::nearest);
            CHECK(t.tail.log_mag() > t.linear.log_mag());
            CHECK(t.tail.log_mag() < e14_log_ratio<WideReal>(n));
        }
    }

    TEST_CASE("coefficient norm chain") {
        for (int n = 2; n <= 8; ++n) {
            const Real e2_prev = e_tower_log(3, Real(n - 1));
            const Real e2 = e_tower_log(3, Real(n));
            CHECK(abs(coeff_norm_chain(n, 1).log_mag() - (e2_prev - e2)) <= abs(e2) * ldexp(Real(1), -30));
            for (int k = 2; k <= n; ++k) {
                const Real step = coeff_norm_chain(n, k).log_mag() - coeff_norm_chain(n, k - 1).log_mag();
                CHECK(abs(step - 2 * e2_prev) <= abs(e2) * ldexp(Real(1), -30));
            }
        }
        CHECK(kind_of([] { coeff_norm_chain(3, 4); }) == ErrorKind::InvalidArgument);
    }
}

TEST_SUITE("x outside M") {
    TEST_CASE("witnesses") {
        const auto w = witness_x_not_in_m();
        CHECK_FALSE(w.member);
        CHECK(w.index == 1);
        CHECK(w.residual_degree == 0);
        CHECK(w.residual_leading_coeff == CoeffQ(1));
        CHECK(witness_not_in_m(up({7})).member);
        CHECK(witness_not_in_m(UniPoly()).member);
        const auto q = witness_not_in_m(up({1, 0, -3}));
        CHECK(q.residual_degree == 1);
        CHECK(q.residual_leading_coeff == CoeffQ(-6));
    }

    TEST_CASE("agrees with the recursion on a table with a_1 = 1") {
        // Only a_1 reaches the top degree, so any such table gives the same
        // leading residual.
        const GammaTable g = surrogate_table(4);
        oracle::Rng rng(41);
        for (int t = 0; t < 20; ++t) {
            const UniPoly f = rng.unipoly(5);
            const auto w = witness_not_in_m(f);
            const auto r = mgamma_contains(g, BiPoly::from_x(f));
            CHECK(w.member == r.member);
            if (!r.member) {
                CHECK(r.failing_index == w.index);
                CHECK(r.residual.degree() == Degree(*w.residual_degree));
                CHECK(r.residual.leading_coeff() == *w.residual_leading_coeff);
            }
        }
    }
}

TEST_SUITE("exact bridge") {
    TEST_CASE("surrogate table") {
        const GammaTable g = surrogate_table(3);
        CHECK(g.order() == 1);
        CHECK(g.at(1, 1) == CoeffQ(1));
        CHECK(g.at(1, 2) == CoeffQ(-1000));
        CHECK(g.at(1, 3) == CoeffQ(-1000000));
        CHECK(surrogate_seed(3) == UniPoly::x() + UniPoly::monomial(CoeffQ(Rational(1, 6000000)), 3));
    }

    TEST_CASE("log bounds hold against exact values") {
        for (int n = 2; n <= 4; ++n) {
            const auto r = bridge(n);
            CHECK(r.within_slack);
            REQUIRE(r.log_norm_lk.size() == static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) CHECK(r.log_norm_lk[static_cast<std::size_t>(k)] <= r.bounds.log_norm_lk[static_cast<std::size_t>(k)].log_mag());
            CHECK(r.lg_gap >= 0);
            for (const auto& dev : r.log_deviation) CHECK(dev <= r.bounds.log_sup.log_mag());
        }
    }
}
