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

#include <condasp/completion.h>
#include <condasp/core.h>
#include <condasp/semantics.h>

#include <optional>
#include <span>
#include <vector>

namespace condasp {

//! A program with hypotheses that may be assumed. Throws InvalidAbducible if a hypothesis heads a rule.
class AbductiveProgram {
public:
    AbductiveProgram(Program program, LiteralSet abducibles);

    [[nodiscard]] const Program&    program() const noexcept { return program_; }
    [[nodiscard]] const LiteralSet& abducibles() const noexcept { return abducibles_; }

private:
    Program    program_;
    LiteralSet abducibles_;
};

//! A literal that was observed to hold (`naf == false`) or observed not to hold.
using Observation = Element;

//! `g ; not g.` for each hypothesis.
[[nodiscard]] Program abducibleRules(const LiteralSet& abducibles);

struct ExplainOptions {
    //! Keep only explanations without a proper subset among the results.
    bool         minimal = false;
    SolveOptions solve;
};

//! Every hypothesis set that, added as facts, yields a consistent answer set agreeing with the observation.
//! Results are in canonical order.
[[nodiscard]] std::vector<LiteralSet> explain(const AbductiveProgram& ap, const Observation& observation,
                                              const ExplainOptions& options = {});

struct CompletionExplanation {
    std::vector<LiteralSet>                 explanations;
    //! Completed program plus the observation that produced the explanations.
    Program                                 program;
    //! Indices of the rules that were completed when the full program was inconsistent.
    std::optional<std::vector<std::size_t>> subset;
};

//! Reads explanations off the answer sets of a completion (AC, SDC or WDC) plus the observation.
//! If that program has no consistent answer set, the smallest rule subset (earliest first) whose completion
//! is consistent is used instead. Throws NoApplicableRule.
[[nodiscard]] CompletionExplanation explainViaCompletion(const AbductiveProgram& ap, const Observation& observation,
                                                         CompletionMode mode, const ExplainOptions& options = {});

//! Entailment of `query` by the program used in `explainViaCompletion`.
[[nodiscard]] Entailment predict(const AbductiveProgram& ap, const Observation& observation, const Literal& query,
                                 CompletionMode mode, Quantifier quantifier, const SolveOptions& options = {});

//! Facts asserting the opposite of each head literal. Throws NotAFact, EmptyPositiveHead.
[[nodiscard]] std::vector<Rule> counterfact(const Rule& fact);

enum class CounterfactualVariant { Strict, Default };

//! The program with `retracted` replaced by its counterfacts, plus the (default) strong inverse completion.
//! Throws SigmaNotFacts.
[[nodiscard]] Program counterfactualProgram(const Program& program, std::span<const Rule> retracted,
                                            CounterfactualVariant variant = CounterfactualVariant::Strict);

[[nodiscard]] Entailment would(const Program& program, std::span<const Rule> retracted, const Literal& query,
                               CounterfactualVariant variant = CounterfactualVariant::Strict,
                               const SolveOptions& options = {});
[[nodiscard]] Entailment might(const Program& program, std::span<const Rule> retracted, const Literal& query,
                               CounterfactualVariant variant = CounterfactualVariant::Strict,
                               const SolveOptions& options = {});

//! Facts that could stand in for a goal: answers of the non-fact rules, the converse of neighbouring rules and
//! the goal, restricted to the head literals of facts. Empty if the goal has no neighbours.
[[nodiscard]] std::vector<LiteralSet> neighborhood(const Program& program, const Literal& goal,
                                                   const SolveOptions& options = {});

} // namespace condasp
