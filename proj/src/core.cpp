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
#include <condasp/core.h>
#include <condasp/error.h>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace condasp {

ParseError::ParseError(std::size_t line, std::size_t column, std::string message, std::vector<std::string> expected)
    : Error([&] {
        std::ostringstream os;
        os << line << ':' << column << ": " << message;
        if (not expected.empty()) {
            os << " (expected ";
            for (std::size_t i = 0; i != expected.size(); ++i) {
                os << (i == 0 ? "" : i + 1 == expected.size() ? " or " : ", ") << expected[i];
            }
            os << ')';
        }
        return os.str();
    }())
    , line_(line)
    , column_(column)
    , message_(std::move(message))
    , expected_(std::move(expected)) {}

BaseTooLarge::BaseTooLarge(std::size_t size, std::size_t bound)
    : Error("literal base has " + std::to_string(size) + " literals, bound is " + std::to_string(bound))
    , size_(size)
    , bound_(bound) {}

BadIndex::BadIndex(std::size_t index, std::size_t size)
    : Error("rule index " + std::to_string(index) + " out of range for a program with " + std::to_string(size) +
            " rules")
    , index_(index) {}

static bool isNameChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

static bool validAtomName(const std::string& name) {
    if (name.empty() || not(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        return false;
    }
    int depth = 0;
    for (std::size_t i = 1; i != name.size(); ++i) {
        char c = name[i];
        if (c == '(') {
            ++depth;
        }
        else if (c == ')') {
            if (--depth < 0) {
                return false;
            }
        }
        else if (depth == 0 ? not isNameChar(c) : not(isNameChar(c) || c == ',' || c == '-')) {
            return false;
        }
    }
    return depth == 0 && name != "not";
}

Atom::Atom(std::string name) : name_(std::move(name)) {
    if (not validAtomName(name_)) {
        throw std::invalid_argument("invalid atom name '" + name_ + "'");
    }
}

Literal positiveLiteral(std::string atom) { return {Atom(std::move(atom)), true}; }
Literal negativeLiteral(std::string atom) { return {Atom(std::move(atom)), false}; }

Rule::Rule(LiteralSet headPos, LiteralSet headNaf, LiteralSet bodyPos, LiteralSet bodyNaf)
    : headPos_(std::move(headPos))
    , headNaf_(std::move(headNaf))
    , bodyPos_(std::move(bodyPos))
    , bodyNaf_(std::move(bodyNaf)) {}

Rule Rule::fromElements(std::span<const Element> head, std::span<const Element> body) {
    Rule r;
    for (const auto& e : head) {
        (e.naf ? r.headNaf_ : r.headPos_).insert(e.literal);
    }
    for (const auto& e : body) {
        (e.naf ? r.bodyNaf_ : r.bodyPos_).insert(e.literal);
    }
    return r;
}

Rule Rule::fact(const Literal& lit) { return Rule({lit}, {}, {}, {}); }

Rule Rule::constraint(LiteralSet bodyPos, LiteralSet bodyNaf) {
    return Rule({}, {}, std::move(bodyPos), std::move(bodyNaf));
}

static void appendElements(std::vector<Element>& out, const LiteralSet& lits, bool naf) {
    for (const auto& lit : lits) {
        out.push_back({lit, naf});
    }
}

std::vector<Element> Rule::headElements() const {
    std::vector<Element> out;
    appendElements(out, headPos_, false);
    appendElements(out, headNaf_, true);
    return out;
}

std::vector<Element> Rule::bodyElements() const {
    std::vector<Element> out;
    appendElements(out, bodyPos_, false);
    appendElements(out, bodyNaf_, true);
    return out;
}

RuleClass classifyRule(const Rule& rule) {
    RuleKind kind = rule.isFact() ? RuleKind::Fact : rule.isConstraint() ? RuleKind::Constraint : RuleKind::Proper;
    return {kind, rule.isNotFree()};
}

Program::Program(std::initializer_list<Rule> rules) {
    for (const auto& r : rules) {
        add(r);
    }
}

Program::Program(std::vector<Rule> rules) {
    for (auto& r : rules) {
        add(std::move(r));
    }
}

bool Program::add(Rule rule) {
    if (not index_.insert(rule).second) {
        return false;
    }
    rules_.push_back(std::move(rule));
    return true;
}

void Program::append(const Program& other) { append(std::span<const Rule>(other.rules())); }

void Program::append(std::span<const Rule> rules) {
    for (const auto& r : rules) {
        add(r);
    }
}

static bool hasNegative(const LiteralSet& lits) {
    return std::any_of(lits.begin(), lits.end(), [](const Literal& l) { return not l.positive; });
}

ProgramClass classifyProgram(const Program& program) {
    ProgramClass pc;
    for (const auto& r : program) {
        bool edp     = r.headNaf().empty();
        bool single  = r.headPos().size() <= 1;
        bool noNeg   = not hasNegative(r.headPos()) && not hasNegative(r.headNaf()) && not hasNegative(r.bodyPos()) &&
                     not hasNegative(r.bodyNaf());
        bool ndp     = edp && noNeg;
        pc.edp      &= edp;
        pc.elp      &= edp && single;
        pc.ndp      &= ndp;
        pc.pdp      &= ndp && r.bodyNaf().empty();
        pc.nlp      &= ndp && single;
        pc.notFree  &= r.isNotFree();
    }
    return pc;
}

static void addAtoms(LiteralSet& out, const LiteralSet& lits) {
    for (const auto& l : lits) {
        out.insert({l.atom, true});
        out.insert({l.atom, false});
    }
}

LiteralSet litBase(const Program& program) {
    LiteralSet base;
    for (const auto& r : program) {
        addAtoms(base, r.headPos());
        addAtoms(base, r.headNaf());
        addAtoms(base, r.bodyPos());
        addAtoms(base, r.bodyNaf());
    }
    return base;
}

LiteralSet litBase(const Program& program, const LiteralSet& extra) {
    LiteralSet base = litBase(program);
    addAtoms(base, extra);
    return base;
}

std::string formatLiteral(const Literal& lit) { return (lit.positive ? "" : "-") + lit.atom.name(); }

std::string formatElement(const Element& element) {
    return (element.naf ? "not " : "") + formatLiteral(element.literal);
}

static void joinElements(std::ostream& os, const std::vector<Element>& elements, const char* sep) {
    for (std::size_t i = 0; i != elements.size(); ++i) {
        os << (i == 0 ? "" : sep) << formatElement(elements[i]);
    }
}

std::string formatRule(const Rule& rule) {
    std::ostringstream os;
    auto head = rule.headElements();
    auto body = rule.bodyElements();
    joinElements(os, head, " ; ");
    if (not body.empty()) {
        os << (head.empty() ? ":- " : " :- ");
        joinElements(os, body, ", ");
    }
    else if (head.empty()) {
        os << ":-";
    }
    os << '.';
    return os.str();
}

std::string formatProgram(const Program& program) {
    std::string out;
    for (const auto& r : program) {
        out += formatRule(r);
        out += '\n';
    }
    return out;
}

std::string formatLiteralSet(const LiteralSet& set) {
    std::string out = "{";
    for (auto it = set.begin(); it != set.end(); ++it) {
        out += (it == set.begin() ? "" : ", ") + formatLiteral(*it);
    }
    return out + "}";
}

std::ostream& operator<<(std::ostream& os, const Literal& lit) { return os << formatLiteral(lit); }
std::ostream& operator<<(std::ostream& os, const Rule& rule) { return os << formatRule(rule); }
std::ostream& operator<<(std::ostream& os, const Program& program) { return os << formatProgram(program); }

bool canonicalLess(const LiteralSet& lhs, const LiteralSet& rhs) {
    if (lhs.size() != rhs.size()) {
        return lhs.size() < rhs.size();
    }
    return lhs < rhs;
}

void sortCanonical(std::vector<LiteralSet>& sets) {
    std::sort(sets.begin(), sets.end(), canonicalLess);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

} // namespace condasp
