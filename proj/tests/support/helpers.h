//
// Copyright (c) 2026 - present, The condasp authors
//
// This file is part of condasp.
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to
// deal in the Software without restriction, including without limitation the
// rights to use, copy, modify, merge, publish, distribute, sublicense, and/or
// sell copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in
// all copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
// FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS
// IN THE SOFTWARE.
//
#pragma once

#include <condasp/core.h>
#include <condasp/parser.h>

#include <sstream>
#include <string>
#include <vector>

namespace condasp::testing {

inline Program prog(const std::string& text) { return parseProgram(text); }

inline Literal lit(const std::string& text) { return parseLiteral(text); }

//! Comma separated literals, e.g. "p, -q". The empty string is the empty set.
inline LiteralSet lits(const std::string& text) {
    LiteralSet         out;
    std::istringstream in(text);
    for (std::string part; std::getline(in, part, ',');) {
        if (part.find_first_not_of(' ') != std::string::npos) {
            out.insert(parseLiteral(part));
        }
    }
    return out;
}

inline std::vector<LiteralSet> sets(std::initializer_list<const char*> texts) {
    std::vector<LiteralSet> out;
    for (const auto* t : texts) {
        out.push_back(lits(t));
    }
    sortCanonical(out);
    return out;
}

} // namespace condasp::testing
