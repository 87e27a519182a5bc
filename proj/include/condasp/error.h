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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace condasp {

//! Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

//! Malformed program or literal text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected = {});

    [[nodiscard]] std::size_t                     line() const noexcept { return line_; }
    [[nodiscard]] std::size_t                     column() const noexcept { return column_; }
    [[nodiscard]] const std::string&              message() const noexcept { return message_; }
    [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t              line_;
    std::size_t              column_;
    std::string              message_;
    std::vector<std::string> expected_;
};

//! The literal base exceeds the configured enumeration bound.
class BaseTooLarge : public Error {
public:
    BaseTooLarge(std::size_t size, std::size_t bound);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t size_;
    std::size_t bound_;
};

//! Only rules with an empty positive head and a nonempty negated head can be shifted.
class NotShiftable : public Error {
public:
    using Error::Error;
};

//! A rule index outside of the program.
class BadIndex : public Error {
public:
    BadIndex(std::size_t index, std::size_t size);

    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

//! No rule of the program can explain the observation in the requested mode.
class NoApplicableRule : public Error {
public:
    using Error::Error;
};

//! A counterfactual premise that is not a fact.
class NotAFact : public Error {
public:
    using Error::Error;
};

//! A fact whose head has no positive literal cannot be negated.
class EmptyPositiveHead : public Error {
public:
    using Error::Error;
};

//! Retracted rules must be facts of the program.
class SigmaNotFacts : public Error {
public:
    using Error::Error;
};

//! Abducibles must not occur in rule heads.
class InvalidAbducible : public Error {
public:
    using Error::Error;
};

} // namespace condasp
