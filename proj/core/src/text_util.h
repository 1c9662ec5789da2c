/*
 * Copyright 2026 The ParityForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PARITYFORGE_SRC_TEXT_UTIL_H
#define PARITYFORGE_SRC_TEXT_UTIL_H

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "parityforge/graph.h"

namespace parityforge::internal {

/// A non-blank input line split on whitespace, '#' comments removed.
struct TokenLine {
    size_t number = 0;
    std::vector<std::string_view> tokens;
};

inline std::vector<TokenLine> tokenize_lines(std::string_view text) {
    std::vector<TokenLine> out;
    size_t line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        TokenLine tl{line_no, {}};
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            if (j > i) {
                tl.tokens.push_back(line.substr(i, j - i));
            }
            i = j;
        }
        if (!tl.tokens.empty()) {
            out.push_back(std::move(tl));
        }
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

inline size_t parse_count(std::string_view token, size_t line, const char *what) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

/// Parses a 1-based label in [1, n] and returns it 0-based.
inline Vertex parse_label(std::string_view token, size_t n, size_t line, const char *what) {
    size_t value = parse_count(token, line, what);
    if (value < 1 || value > n) {
        throw ParseError(
            line, std::string(what) + " " + std::string(token) + " out of range [1," + std::to_string(n) + "]");
    }
    return static_cast<Vertex>(value - 1);
}

}  // namespace parityforge::internal

#endif  // PARITYFORGE_SRC_TEXT_UTIL_H
