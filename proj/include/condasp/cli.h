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

#include <functional>
#include <iosfwd>
#include <span>
#include <string>

namespace condasp {

//! Returns the contents of a file; `-` names standard input. Throws std::runtime_error.
using FileReader = std::function<std::string(const std::string& path)>;

[[nodiscard]] std::string readFileOrStdin(const std::string& path);

inline constexpr int kExitOk     = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage  = 2;

//! Runs the command line tool. `args` excludes the program name.
int runCli(std::span<const std::string> args, std::ostream& out, std::ostream& err,
           const FileReader& reader = readFileOrStdin);

} // namespace condasp
