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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace condasp {

enum class CompletionMode { AC, WDC, SDC, WDA, SDA, DAC, WDDA, SDDA };

inline constexpr std::array<CompletionMode, 8> kAllCompletionModes = {
    CompletionMode::AC,  CompletionMode::WDC, CompletionMode::SDC,  CompletionMode::WDA,
    CompletionMode::SDA, CompletionMode::DAC, CompletionMode::WDDA, CompletionMode::SDDA};

[[nodiscard]] std::string_view              toString(CompletionMode mode);
[[nodiscard]] std::optional<CompletionMode> parseCompletionMode(std::string_view name);

//! A conjunction or disjunction of elements: sorted, without duplicates.
using ElementList = std::vector<Element>;

//! `(c1) ; ... ; (cp) :- key, guard` where each ci is a conjunction.
struct ConverseRule {
    std::vector<ElementList> head;
    Element                  key;
    ElementList              guard;

    friend bool operator==(const ConverseRule&, const ConverseRule&) = default;
};

//! `key :- (d1), ..., (dp), guard` where each di is a disjunction.
struct InverseRule {
    Element                  key;
    std::vector<ElementList> body;
    ElementList              guard;

    friend bool operator==(const InverseRule&, const InverseRule&) = default;
};

using ExtendedRule = std::variant<ConverseRule, InverseRule>;

//! Number of plain rules `expand` produces: the product of the group sizes.
[[nodiscard]] std::size_t expansionSize(const ExtendedRule& rule);
//! Distributes the groups into plain rules, one per choice of an element from each group.
[[nodiscard]] std::vector<Rule> expand(const ExtendedRule& rule);
[[nodiscard]] std::vector<Rule> expand(std::span<const ConverseRule> rules);
[[nodiscard]] std::vector<Rule> expand(std::span<const InverseRule> rules);

//! One converse `body :- l` per head element `l`. Empty for facts and constraints.
[[nodiscard]] std::vector<ConverseRule> conv(const Rule& rule);
//! As `conv`, guarded by the consistency guard of the rule body.
[[nodiscard]] std::vector<ConverseRule> guardedConv(const Rule& rule);
//! Weak inverses `not h :- (not b+ ; b-)` and `h' :- (not b+ ; b-)` for each head element. Empty for facts.
[[nodiscard]] std::vector<InverseRule> winv(const Rule& rule);
//! Strong inverses `-h :- (-b+ ; b-)` and `h' :- (-b+ ; b-)` for each head element. Empty for facts.
[[nodiscard]] std::vector<InverseRule> sinv(const Rule& rule);

//! Weak contrapositive `not b+ ; b- :- not h+, h-`.
[[nodiscard]] Rule wdc(const Rule& rule);
//! Strong contrapositive `-b+ ; b- :- -h+, h-`.
[[nodiscard]] Rule sdc(const Rule& rule);

//! Groups converses by key in source order.
[[nodiscard]] std::vector<ConverseRule> ac(std::span<const Rule> rules);
//! One grouped converse per source, each carrying the guard of its source.
[[nodiscard]] std::vector<ConverseRule> dac(std::span<const Rule> rules);
//! Groups inverses by key, conjoining their disjunctions.
[[nodiscard]] std::vector<InverseRule> wda(std::span<const Rule> rules);
[[nodiscard]] std::vector<InverseRule> sda(std::span<const Rule> rules);
//! As `wda` and `sda`, guarded against the complementary key.
[[nodiscard]] std::vector<InverseRule> wdda(std::span<const Rule> rules);
[[nodiscard]] std::vector<InverseRule> sdda(std::span<const Rule> rules);

//! Plain rules a completion adds for the given sources.
[[nodiscard]] std::vector<Rule> completionRules(std::span<const Rule> sources, CompletionMode mode);

//! The program together with the completion of the selected rules (0-based indices, all if empty).
//! Throws BadIndex.
[[nodiscard]] Program complete(const Program& program, CompletionMode mode,
                               const std::optional<std::vector<std::size_t>>& filter = std::nullopt);

} // namespace condasp
