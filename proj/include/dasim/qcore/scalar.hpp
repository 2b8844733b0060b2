// Copyright 2026 The dasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Scalar types used for durations and coupling constants.
 *
 * Schedules, graphs and compile targets are templated on a scalar. Two
 * scalars are supported: `double`, verified with a 1e-12 tolerance, and
 * `Rational` (arbitrary precision), for which every comparison is exact.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <type_traits>

#include "dasim/qcore/error.hpp"

namespace dasim {

using Rational = boost::multiprecision::cpp_rational;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

/// Absolute tolerance used whenever a floating-point schedule is verified.
inline constexpr double kScheduleTolerance = 1e-12;

inline double to_double(double x) { return x; }
inline double to_double(const Rational &x) { return x.convert_to<double>(); }

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational &x) { return x == 0; }

/// Equality used by verifiers: exact for rationals, absolute tolerance for doubles.
inline bool scalar_equal(const Rational &a, const Rational &b, double = 0.0) { return a == b; }
inline bool scalar_equal(double a, double b, double tol = kScheduleTolerance) {
    return std::abs(a - b) <= tol;
}

/// Shortest text that parses back to the same value.
inline std::string format_scalar(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}
inline std::string format_scalar(const Rational &x) { return x.str(); }

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

inline bool looks_rational(const std::string &s) {
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool digits = false;
    bool slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            return false;
        }
    }
    return digits;
}

inline double parse_double_strict(const std::string &s) {
    double v = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && s[0] == '+') {
        ++first;
    }
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw ParseError("not a number: '" + s + "'");
    }
    return v;
}

/// Parses "3/4", "-2", "0.25", "pi", "pi/4", "3*pi/8", "1.5e-3".
inline double parse_real_expression(const std::string &s) {
    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        if (looks_rational(s)) {
            const auto slash = s.find('/');
            if (slash == std::string::npos) {
                return parse_double_strict(s);
            }
            return parse_double_strict(s.substr(0, slash)) / parse_double_strict(s.substr(slash + 1));
        }
        return parse_double_strict(s);
    }
    double coef = 1.0;
    std::string head = trim(s.substr(0, pi_pos));
    if (head == "-") {
        coef = -1.0;
    } else if (!head.empty()) {
        if (head.back() != '*') {
            throw ParseError("bad angle expression: '" + s + "'");
        }
        head.pop_back();
        coef = parse_real_expression(trim(head));
    }
    std::string tail = trim(s.substr(pi_pos + 2));
    double denom = 1.0;
    if (!tail.empty()) {
        if (tail[0] != '/') {
            throw ParseError("bad angle expression: '" + s + "'");
        }
        denom = parse_double_strict(trim(tail.substr(1)));
    }
    return coef * M_PI / denom;
}

} // namespace detail

template <class S>
S parse_scalar(std::string_view text);

/// Accepts decimal, rational ("3/8") and multiples of pi ("pi/4").
template <>
inline double parse_scalar<double>(std::string_view text) {
    return detail::parse_real_expression(detail::trim(text));
}

/// Accepts integers and fractions only; decimals are rejected so that exact
/// mode never silently rounds.
template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
    const std::string s = detail::trim(text);
    if (!detail::looks_rational(s)) {
        throw ParseError("not an exact rational: '" + s + "'");
    }
    std::string body = (s[0] == '+') ? s.substr(1) : s;
    const auto slash = body.find('/');
    if (slash != std::string::npos && Rational(body.substr(slash + 1)) == 0) {
        throw ParseError("zero denominator: '" + s + "'");
    }
    return Rational(body);
}

/// True when the text is an exact rational literal (no decimal point, no pi).
inline bool is_rational_literal(std::string_view text) { return detail::looks_rational(detail::trim(text)); }

} // namespace dasim
