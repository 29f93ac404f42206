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

#include "polymod/coeff.hpp"

#include <regex>

#include "polymod/error.hpp"

namespace polymod {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotAnLModule: return "NotAnLModule";
        case ErrorKind::Underdetermined: return "Underdetermined";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::UnsupportedExpr: return "UnsupportedExpr";
        case ErrorKind::RangeExceeded: return "RangeExceeded";
        case ErrorKind::ThresholdUnmet: return "ThresholdUnmet";
        case ErrorKind::Cancelled: return "Cancelled";
    }
    return "Unknown";
}

Rational parse_rational(std::string_view text) {
    static const std::regex grammar(R"(([+-]?)([0-9]+)(?:/([0-9]+))?)");
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class num(m[2].str(), 10);
    mpz_class den(1);
    if (m[3].matched) {
        den = mpz_class(m[3].str(), 10);
        if (den == 0) {
            throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
        }
    }
    if (m[1].str() == "-") num = -num;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

CoeffQ CoeffQ::inverse() const {
    Rational n2 = norm2();
    if (sgn(n2) == 0) throw Error(ErrorKind::InvalidArgument, "division by zero coefficient");
    return CoeffQ(Rational(re_ / n2), Rational(-im_ / n2));
}

CoeffQ& CoeffQ::operator*=(const CoeffQ& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string to_string(const CoeffQ& c) {
    if (c.is_real()) return to_string(c.re());
    if (sgn(c.re()) == 0) return to_string(c.im()) + "*i";
    std::string im = to_string(c.im());
    if (im.front() != '-') im.insert(0, "+");
    return "(" + to_string(c.re()) + im + "*i)";
}

std::ostream& operator<<(std::ostream& os, const CoeffQ& c) { return os << to_string(c); }

}  // namespace polymod
