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

#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "dasim/qcore/error.hpp"

namespace dasim::text {

/// Whitespace-separated tokens of one line, with `#` comments removed.
inline std::vector<std::string> tokens(const std::string &line) {
    const std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    for (std::string t; in >> t;) {
        out.push_back(t);
    }
    return out;
}

inline int parse_int(const std::string &s, int line) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError("expected an integer, got '" + s + "'", line);
    }
    return v;
}

/// Calls `fn(tokens, line_number)` for every non-blank line of `in`.
template <class Fn>
void for_each_line(std::istream &in, Fn &&fn) {
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        auto tok = tokens(line);
        if (!tok.empty()) {
            fn(tok, no);
        }
    }
}

/// Rethrows any library error raised while handling `line` as a ParseError
/// tagged with that line number.
template <class Fn>
void at_line(int line, Fn &&fn) {
    try {
        fn();
    } catch (const ParseError &e) {
        if (e.line() > 0) {
            throw;
        }
        throw ParseError(e.what(), line);
    } catch (const Error &e) {
        throw ParseError(e.what(), line);
    }
}

} // namespace dasim::text
