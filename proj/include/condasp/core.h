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

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace condasp {

//! A ground atom. The name is canonical: no whitespace, no reserved characters outside of parentheses.
class Atom {
public:
    Atom() = default;
    explicit Atom(std::string name);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    friend auto operator<=>(const Atom&, const Atom&) = default;
    friend bool operator==(const Atom&, const Atom&) = default;

private:
    std::string name_;
};

//! An atom or its explicit negation.
struct Literal {
    Atom atom;
    bool positive = true;

    [[nodiscard]] Literal complement() const { return {atom, not positive}; }

    //! Lexicographic by atom; the positive literal precedes its complement.
    friend std::strong_ordering operator<=>(const Literal& lhs, const Literal& rhs) {
        if (auto cmp = lhs.atom <=> rhs.atom; cmp != 0) {
            return cmp;
        }
        return rhs.positive <=> lhs.positive;
    }
    friend bool operator==(const Literal&, const Literal&) = default;
};

[[nodiscard]] Literal positiveLiteral(std::string atom);
[[nodiscard]] Literal negativeLiteral(std::string atom);

//! A literal, optionally under default negation.
struct Element {
    Literal literal;
    bool    naf = false;

    friend auto operator<=>(const Element&, const Element&) = default;
};

using LiteralSet = std::set<Literal>;

//! A ground rule `head+ ; not head- :- body+, not body-`. All four parts are sets.
class Rule {
public:
    Rule() = default;
    Rule(LiteralSet headPos, LiteralSet headNaf, LiteralSet bodyPos, LiteralSet bodyNaf);

    //! Sorts elements into the four parts: naf elements go to the negated sides.
    [[nodiscard]] static Rule fromElements(std::span<const Element> head, std::span<const Element> body);
    [[nodiscard]] static Rule fact(const Literal& lit);
    [[nodiscard]] static Rule constraint(LiteralSet bodyPos, LiteralSet bodyNaf = {});

    [[nodiscard]] const LiteralSet& headPos() const noexcept { return headPos_; }
    [[nodiscard]] const LiteralSet& headNaf() const noexcept { return headNaf_; }
    [[nodiscard]] const LiteralSet& bodyPos() const noexcept { return bodyPos_; }
    [[nodiscard]] const LiteralSet& bodyNaf() const noexcept { return bodyNaf_; }

    [[nodiscard]] std::vector<Element> headElements() const;
    [[nodiscard]] std::vector<Element> bodyElements() const;

    [[nodiscard]] bool isFact() const noexcept { return bodyPos_.empty() && bodyNaf_.empty(); }
    [[nodiscard]] bool isConstraint() const noexcept { return headPos_.empty() && headNaf_.empty(); }
    [[nodiscard]] bool isNotFree() const noexcept { return headNaf_.empty() && bodyNaf_.empty(); }

    friend auto operator<=>(const Rule&, const Rule&) = default;
    friend bool operator==(const Rule&, const Rule&) = default;

private:
    LiteralSet headPos_;
    LiteralSet headNaf_;
    LiteralSet bodyPos_;
    LiteralSet bodyNaf_;
};

enum class RuleKind { Fact, Constraint, Proper };

struct RuleClass {
    RuleKind kind;
    bool     notFree;
};

[[nodiscard]] RuleClass classifyRule(const Rule& rule);

//! A finite set of rules that remembers insertion order.
class Program {
public:
    using const_iterator = std::vector<Rule>::const_iterator;

    Program() = default;
    Program(std::initializer_list<Rule> rules);
    explicit Program(std::vector<Rule> rules);

    //! Returns false if an equal rule is already present.
    bool add(Rule rule);
    void append(const Program& other);
    void append(std::span<const Rule> rules);

    [[nodiscard]] const std::vector<Rule>& rules() const noexcept { return rules_; }
    [[nodiscard]] std::size_t              size() const noexcept { return rules_.size(); }
    [[nodiscard]] bool                     empty() const noexcept { return rules_.empty(); }
    [[nodiscard]] bool                     contains(const Rule& rule) const { return index_.contains(rule); }
    [[nodiscard]] const Rule&              operator[](std::size_t i) const { return rules_[i]; }
    [[nodiscard]] const_iterator           begin() const noexcept { return rules_.begin(); }
    [[nodiscard]] const_iterator           end() const noexcept { return rules_.end(); }

    //! Set equality; insertion order is ignored.
    friend bool operator==(const Program& lhs, const Program& rhs) { return lhs.index_ == rhs.index_; }

private:
    std::vector<Rule> rules_;
    std::set<Rule>    index_;
};

//! Syntactic program classes. Each flag holds iff every rule meets the class condition.
struct ProgramClass {
    bool edp     = true; //!< no negated heads
    bool elp     = true; //!< edp with at most one head literal
    bool ndp     = true; //!< edp without explicitly negated literals
    bool pdp     = true; //!< ndp without default negation
    bool nlp     = true; //!< ndp with at most one head literal
    bool notFree = true;
};

[[nodiscard]] ProgramClass classifyProgram(const Program& program);

//! All literals over atoms of the program, closed under complement.
[[nodiscard]] LiteralSet litBase(const Program& program);
//! As above, extended by the atoms of `extra`.
[[nodiscard]] LiteralSet litBase(const Program& program, const LiteralSet& extra);

[[nodiscard]] std::string formatLiteral(const Literal& lit);
[[nodiscard]] std::string formatElement(const Element& element);
[[nodiscard]] std::string formatRule(const Rule& rule);
//! One rule per line, each terminated by a newline.
[[nodiscard]] std::string formatProgram(const Program& program);
//! `{a, -b}`; the empty set is `{}`.
[[nodiscard]] std::string formatLiteralSet(const LiteralSet& set);

std::ostream& operator<<(std::ostream& os, const Literal& lit);
std::ostream& operator<<(std::ostream& os, const Rule& rule);
std::ostream& operator<<(std::ostream& os, const Program& program);

//! Orders by size first, then lexicographically.
[[nodiscard]] bool canonicalLess(const LiteralSet& lhs, const LiteralSet& rhs);
//! Sorts canonically and drops duplicates.
void               sortCanonical(std::vector<LiteralSet>& sets);

} // namespace condasp
