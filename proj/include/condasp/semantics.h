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

#include <cstddef>
#include <vector>

namespace condasp {

enum class Consistency { Consistent, Contradictory, Incoherent };

[[nodiscard]] const char* toString(Consistency c);

struct SolveOptions {
    //! Upper bound on the size of the literal base.
    std::size_t maxLiterals = 24;
    //! Literals whose atoms join the literal base, e.g. query atoms.
    LiteralSet  extraLiterals;
};

//! Result of answer set enumeration.
struct AnswerSetReport {
    //! Consistent answer sets in canonical order.
    std::vector<LiteralSet> sets;
    //! Whether the set of all literals is an answer set.
    bool                    hasLitAnswerSet = false;
    //! The literal base the enumeration ran over.
    LiteralSet              base;

    //! Consistent iff `sets` is nonempty; contradictory iff only Lit is an answer set.
    [[nodiscard]] Consistency classification() const;
};

[[nodiscard]] bool satisfies(const LiteralSet& interpretation, const Rule& rule);
[[nodiscard]] bool satisfies(const LiteralSet& interpretation, const Program& program);
[[nodiscard]] bool isConsistent(const LiteralSet& interpretation);

//! Keeps `head+ :- body+` for each rule whose negated head holds and whose negated body is false in `s`.
[[nodiscard]] Program reduct(const Program& program, const LiteralSet& s);

//! Answer sets of a program without default negation. Throws std::invalid_argument otherwise.
[[nodiscard]] AnswerSetReport answerSetsNotFree(const Program& program, const SolveOptions& options = {});
//! Answer sets of an arbitrary ground program. Throws BaseTooLarge.
[[nodiscard]] AnswerSetReport answerSets(const Program& program, const SolveOptions& options = {});

enum class Quantifier { Credulous, Skeptical };

struct Entailment {
    bool holds   = false;
    //! Skeptical entailment that holds only because there is no consistent answer set.
    bool vacuous = false;
};

//! Entailment over consistent answer sets.
[[nodiscard]] Entailment entails(const AnswerSetReport& report, const Literal& query, Quantifier quantifier);
[[nodiscard]] Entailment entails(const Program& program, const Literal& query, Quantifier quantifier,
                                 SolveOptions options = {});

//! Moves a negated head into the body: `not h :- b` becomes `:- h, b`. Throws NotShiftable.
[[nodiscard]] Rule etaShift(const Rule& rule);
//! Drops rules that can never fire and shifts the remaining rules with only negated heads.
[[nodiscard]] Program normalize(const Program& program);
//! Same consistent answer sets and same Lit status over the union of both literal bases.
[[nodiscard]] bool equivalent(const Program& lhs, const Program& rhs, SolveOptions options = {});

} // namespace condasp
