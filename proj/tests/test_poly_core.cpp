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

#include "doctest.h"
#include "polymod/bipoly.hpp"
#include "polymod/error.hpp"
#include "support.hpp"

using namespace polymod;
using support::bp;
using support::rat;
using support::up;

TEST_SUITE("coefficients") {
    TEST_CASE("rationals normalize to lowest terms") {
        CHECK(to_string(parse_rational("-6/4")) == "-3/2");
        CHECK(to_string(parse_rational("+10/5")) == "2");
        CHECK(parse_rational("0/7") == 0);
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("1.5"), Error);
        CHECK_THROWS_AS(parse_rational("1/-2"), Error);
    }

    TEST_CASE("gaussian arithmetic") {
        const CoeffQ i = CoeffQ::imag_unit();
        CHECK(i * i == CoeffQ(-1));
        const CoeffQ z(Rational(3, 2), Rational(-2));
        CHECK(z * z.inverse() == CoeffQ(1));
        CHECK(z / z == CoeffQ(1));
        CHECK(z.conj() * z == CoeffQ(z.norm2()));
        CHECK_THROWS_AS(CoeffQ().inverse(), Error);
        CHECK(to_string(z) == "(3/2-2*i)");
    }
}

TEST_SUITE("univariate") {
    TEST_CASE("degree sentinel sits below every integer") {
        CHECK(UniPoly().degree().is_neg_inf());
        CHECK(UniPoly().degree() < Degree(0));
        CHECK(UniPoly().degree() < -1000);
        CHECK(up({0, 0, 0}).is_zero());
        CHECK(up({1, 2, 0}).degree() == Degree(1));
    }

    TEST_CASE("derivative and shift against the power rule oracle") {
        oracle::Rng rng(11);
        for (int t = 0; t < 50; ++t) {
            const UniPoly f = rng.unipoly(7);
            for (int j = 0; j <= 3; ++j) CHECK(f.derivative(static_cast<unsigned>(j)) == oracle::derive(f, j));
            const CoeffQ a = rng.small_coeff();
            const CoeffQ x0 = rng.small_coeff();
            CHECK(f.taylor_shift(a).eval(x0) == f.eval(x0 + a));
        }
    }
}

TEST_SUITE("coordinates") {
    TEST_CASE("coord reads the factorial convention") {
        CHECK(coord(bp({{1, 1, 1}}), 1) == UniPoly::x());
        CHECK(coord(bp({{1, 0, 2}}), 2) == up({2}));
        const BiPoly sq = bp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}});  // (x+y)^2
        CHECK(coord(sq, 0) == up({0, 0, 1}));
        CHECK(coord(sq, 1) == up({0, 2}));
        CHECK(coord(sq, 2) == up({2}));
        CHECK(coord(sq, 7).is_zero());
    }

    TEST_CASE("from_coords normalizes and round-trips") {
        const BiPoly sq = from_coords({up({0, 0, 1}), up({0, 2}), up({2})});
        oracle::Rng rng(12);
        for (int t = 0; t < 5; ++t) {
            const CoeffQ x = rng.small_coeff(), y = rng.small_coeff();
            CHECK(eval(sq, x, y) == (x + y) * (x + y));
        }
        CHECK(from_coords({}).is_zero());
        CHECK(from_coords({UniPoly(), UniPoly(), UniPoly()}).is_zero());
        CHECK(from_coords({up({1}), UniPoly()}) == from_coords({up({1})}));

        for (int t = 0; t < 30; ++t) {
            const BiPoly f = rng.bipoly(5, 5);
            std::vector<UniPoly> cs;
            for (int n = 0; n <= std::max(0, deg_y(f).value()); ++n) cs.push_back(coord(f, static_cast<std::size_t>(n)));
            CHECK(from_coords(cs) == f);
            CHECK(oracle::from_dict(oracle::to_dict(f)) == f);
        }
    }

    TEST_CASE("partial derivatives") {
        CHECK(d_dx(bp({{1, 2, 1}})) == bp({{2, 1, 1}}));
        CHECK(d_dx(bp({{1, 0, 3}})).is_zero());
        const BiPoly cube = bp({{1, 3, 0}, {3, 2, 1}, {3, 1, 2}, {1, 0, 3}});
        CHECK(d_dx(cube) == bp({{3, 2, 0}, {6, 1, 1}, {3, 0, 2}}));
        CHECK(d_dy(from_coords({UniPoly(), UniPoly::x(), up({7})})) == from_coords({UniPoly::x(), up({7})}));
        CHECK(d_dy(bp({{1, 2, 0}})).is_zero());
        CHECK(d_dy(bp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}})) == bp({{2, 1, 0}, {2, 0, 1}}));

        oracle::Rng rng(13);
        for (int t = 0; t < 40; ++t) {
            const BiPoly f = rng.bipoly(6, 6);
            CHECK(d_dx(f) == oracle::from_dict(oracle::d_dx(oracle::to_dict(f))));
            CHECK(d_dy(f) == oracle::from_dict(oracle::d_dy(oracle::to_dict(f))));
            CHECK(d_dx(d_dy(f)) == d_dy(d_dx(f)));
        }
    }

    TEST_CASE("shift") {
        CHECK(shift(bp({{1, 2, 0}}), CoeffQ(1), CoeffQ(0)) == bp({{1, 2, 0}, {2, 1, 0}, {1, 0, 0}}));
        CHECK(shift(bp({{1, 1, 1}}), CoeffQ(1), CoeffQ(2)) == bp({{1, 1, 1}, {2, 1, 0}, {1, 0, 1}, {2, 0, 0}}));

        oracle::Rng rng(14);
        for (int t = 0; t < 40; ++t) {
            const BiPoly f = rng.bipoly(5, 5);
            const CoeffQ a = rng.small_coeff(), b = rng.small_coeff(), c = rng.small_coeff(), d = rng.small_coeff();
            CHECK(shift(f, CoeffQ(), CoeffQ()) == f);
            CHECK(shift(f, a, b) == oracle::from_dict(oracle::shift(oracle::to_dict(f), a, b)));
            CHECK(shift(shift(f, a, b), c, d) == shift(f, a + c, b + d));
            const CoeffQ p = rng.small_coeff(), q = rng.small_coeff();
            CHECK(eval(shift(f, a, b), p, q) == eval(f, p + a, q + b));
        }
    }

    TEST_CASE("y-shift of a univariate f lists its derivatives") {
        // f(x + y) = sum_n f^(n)(x) y^n / n!
        const UniPoly f = up({3, -1, 4, 1, -5});
        std::vector<UniPoly> derivs;
        for (unsigned n = 0; n <= 4; ++n) derivs.push_back(f.derivative(n));
        const BiPoly taylor = from_coords(derivs);
        oracle::Rng rng(15);
        for (int t = 0; t < 5; ++t) {
            const CoeffQ x = rng.small_coeff(), y = rng.small_coeff();
            CHECK(eval(taylor, x, y) == f.eval(x + y));
            CHECK(eval(shift(BiPoly::from_x(f), y, CoeffQ()), x, CoeffQ(7)) == f.eval(x + y));
        }
    }

    TEST_CASE("evaluation") {
        CHECK(eval(bp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}}), CoeffQ(1), CoeffQ(2)) == CoeffQ(9));
        CHECK(eval(BiPoly(), rat(3, 7), rat(-1)).is_zero());
        CHECK(eval(from_coords({UniPoly(), UniPoly::x()}), CoeffQ(3), CoeffQ(5)) == CoeffQ(15));
        oracle::Rng rng(16);
        for (int t = 0; t < 40; ++t) {
            const BiPoly f = rng.bipoly(6, 6);
            const CoeffQ x = rng.small_coeff(), y = rng.small_coeff();
            CHECK(eval(f, x, y) == oracle::eval(oracle::to_dict(f), x, y));
        }
    }

    TEST_CASE("degrees and linear operations") {
        const BiPoly f = bp({{1, 2, 1}, {1, 0, 5}});
        CHECK(deg_x(f) == Degree(2));
        CHECK(deg_y(f) == Degree(5));
        CHECK(deg_x(BiPoly()).is_neg_inf());
        CHECK(deg_y(BiPoly()).is_neg_inf());
        const BiPoly sq = bp({{1, 2, 0}, {2, 1, 1}, {1, 0, 2}});
        CHECK(sq - bp({{1, 2, 0}}) == from_coords({UniPoly(), up({0, 2}), up({2})}));
        CHECK((sq * CoeffQ(0)).is_zero());
        CHECK(sq + (-sq) == BiPoly());
        CHECK(BiPoly::monomial(CoeffQ(1), 0, 2) == bp({{1, 0, 2}}));
        CHECK(f.monomial_coeff(0, 5) == CoeffQ(1));
    }
}
