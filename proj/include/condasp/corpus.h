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

#include <string>
#include <vector>

namespace condasp {

//! A worked example with a known outcome.
//! The program is optionally completed first, then `extra` is appended and `command` runs on the result.
//! `-` in `command` names the resulting program.
struct CorpusCase {
    std::string              id;
    std::string              description;
    std::string              program;
    std::string              completeMode;
    std::string              extra;
    std::vector<std::string> command;
    std::vector<std::string> expected;
};

struct CorpusOutcome {
    const CorpusCase*        test;
    bool                     passed;
    std::vector<std::string> actual;
};

[[nodiscard]] const std::vector<CorpusCase>& corpus();
[[nodiscard]] CorpusOutcome              runCorpusCase(const CorpusCase& test);
[[nodiscard]] std::vector<CorpusOutcome> runCorpus();

} // namespace condasp
