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
#include <condasp/semantics.h>

#include <condasp/error.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace condasp {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxMaskLiterals = 64;

struct CompiledRule {
    Mask headPos = 0, headNaf = 0, bodyPos = 0, bodyNaf = 0;
};

struct PositiveRule {
    Mask head = 0, body = 0;
};

bool subsetOf(Mask a, Mask b) { return (a & ~b) == 0; }

bool isModel(const std::vector<PositiveRule>& rules, Mask t) {
    return std::all_of(rules.begin(), rules.end(),
                       [t](const PositiveRule& r) { return not subsetOf(r.body, t) || (r.head & t) != 0; });
}

//! Calls `visit` for each consistent subset of `universe` until it returns false.
//! Literal 2k is the positive and 2k+1 the negative literal of atom k.
bool forEachConsistentSubset(Mask universe, const std::function<bool(Mask)>& visit) {
    std::vector<Mask> choices;
    for (Mask rest = universe; rest != 0;) {
        int  bit  = std::countr_zero(rest);
        Mask pair = Mask(3) << (bit & ~1);
        choices.push_back(universe & pair);
        rest &= ~pair;
    }
    std::function<bool(std::size_t, Mask)> rec = [&](std::size_t k, Mask s) {
        if (k == choices.size()) {
            return visit(s);
        }
        if (not rec(k + 1, s)) {
            return false;
        }
        for (Mask c = choices[k]; c != 0; c &= c - 1) {
            if (not rec(k + 1, s | (c & -c))) {
                return false;
            }
        }
        return true;
    };
    return rec(0, 0);
}

//! Assumes `s` is a model of `rules`.
bool isMinimalModel(const std::vector<PositiveRule>& rules, Mask s) {
    std::vector<PositiveRule> relevant;
    for (const auto& r : rules) {
        if (subsetOf(r.body, s)) {
            relevant.push_back({r.head & s, r.body});
        }
    }
    // Every model below s contains the closure under rules with a single head literal.
    Mask forced = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : relevant) {
            if (std::popcount(r.head) == 1 && subsetOf(r.body, forced) && (r.head & forced) == 0) {
                forced  |= r.head;
                changed  = true;
            }
        }
    }
    if (forced == s) {
        return true;
    }
    Mask free = s & ~forced;
    Mask x    = 0;
    do {
        Mask t = forced | x;
        if (t != s && isModel(relevant, t)) {
            return false;
        }
        x = (x - free) & free;
    } while (x != 0);
    return true;
}

class Engine {
public:
    Engine(const Program& program, const SolveOptions& options) {
        LiteralSet base = litBase(program, options.extraLiterals);
        std::size_t bound = std::min(options.maxLiterals, kMaxMaskLiterals);
        if (base.size() > bound) {
            throw BaseTooLarge(base.size(), bound);
        }
        literals_.assign(base.begin(), base.end());
        for (const auto& r : program) {
            rules_.push_back({mask(r.headPos()), mask(r.headNaf()), mask(r.bodyPos()), mask(r.bodyNaf())});
        }
        report_.base = std::move(base);
    }

    AnswerSetReport run() {
        Mask universe = 0;
        for (const auto& r : rules_) {
            universe |= r.headPos;
        }
        std::vector<PositiveRule> reduced;
        forEachConsistentSubset(universe, [&](Mask s) {
            reduced.clear();
            for (const auto& r : rules_) {
                if (subsetOf(r.headNaf, s) && (r.bodyNaf & s) == 0) {
                    reduced.push_back({r.headPos, r.bodyPos});
                }
            }
            if (isModel(reduced, s) && isMinimalModel(reduced, s)) {
                report_.sets.push_back(toSet(s));
            }
            return true;
        });
        sortCanonical(report_.sets);
        report_.hasLitAnswerSet = litIsAnswerSet();
        return std::move(report_);
    }

private:
    // Lit is an answer set iff it satisfies its reduct and the reduct has no consistent model.
    [[nodiscard]] bool litIsAnswerSet() const {
        if (literals_.empty()) {
            return false;
        }
        std::vector<PositiveRule> reduced;
        Mask                      universe = 0;
        for (const auto& r : rules_) {
            if (r.bodyNaf == 0) {
                if (r.headPos == 0) {
                    return false;
                }
                reduced.push_back({r.headPos, r.bodyPos});
                universe |= r.headPos;
            }
        }
        bool noModel = forEachConsistentSubset(universe, [&](Mask s) { return not isModel(reduced, s); });
        return noModel;
    }

    [[nodiscard]] Mask mask(const LiteralSet& lits) const {
        Mask m = 0;
        for (const auto& l : lits) {
            auto it = std::lower_bound(literals_.begin(), literals_.end(), l);
            m |= Mask(1) << (it - literals_.begin());
        }
        return m;
    }

    [[nodiscard]] LiteralSet toSet(Mask m) const {
        LiteralSet out;
        for (; m != 0; m &= m - 1) {
            out.insert(literals_[std::countr_zero(m)]);
        }
        return out;
    }

    std::vector<Literal>      literals_;
    std::vector<CompiledRule> rules_;
    AnswerSetReport           report_;
};

bool intersects(const LiteralSet& a, const LiteralSet& b) {
    return std::any_of(a.begin(), a.end(), [&b](const Literal& l) { return b.contains(l); });
}

bool includes(const LiteralSet& sup, const LiteralSet& sub) {
    return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

} // namespace

const char* toString(Consistency c) {
    switch (c) {
        case Consistency::Consistent   : return "consistent";
        case Consistency::Contradictory: return "contradictory";
        case Consistency::Incoherent   : return "incoherent";
    }
    return "";
}

Consistency AnswerSetReport::classification() const {
    if (not sets.empty()) {
        return Consistency::Consistent;
    }
    return hasLitAnswerSet ? Consistency::Contradictory : Consistency::Incoherent;
}

bool satisfies(const LiteralSet& interpretation, const Rule& rule) {
    bool bodyHolds = includes(interpretation, rule.bodyPos()) && not intersects(rule.bodyNaf(), interpretation);
    return not bodyHolds || intersects(rule.headPos(), interpretation) || not includes(interpretation, rule.headNaf());
}

bool satisfies(const LiteralSet& interpretation, const Program& program) {
    return std::all_of(program.begin(), program.end(),
                       [&](const Rule& r) { return satisfies(interpretation, r); });
}

bool isConsistent(const LiteralSet& interpretation) {
    return std::none_of(interpretation.begin(), interpretation.end(), [&](const Literal& l) {
        return not l.positive && interpretation.contains(l.complement());
    });
}

Program reduct(const Program& program, const LiteralSet& s) {
    Program out;
    for (const auto& r : program) {
        if (includes(s, r.headNaf()) && not intersects(r.bodyNaf(), s)) {
            out.add(Rule(r.headPos(), {}, r.bodyPos(), {}));
        }
    }
    return out;
}

AnswerSetReport answerSetsNotFree(const Program& program, const SolveOptions& options) {
    if (not classifyProgram(program).notFree) {
        throw std::invalid_argument("program contains default negation");
    }
    return Engine(program, options).run();
}

AnswerSetReport answerSets(const Program& program, const SolveOptions& options) {
    return Engine(program, options).run();
}

Entailment entails(const AnswerSetReport& report, const Literal& query, Quantifier quantifier) {
    auto has = [&query](const LiteralSet& s) { return s.contains(query); };
    if (quantifier == Quantifier::Credulous) {
        return {std::any_of(report.sets.begin(), report.sets.end(), has), false};
    }
    if (report.sets.empty()) {
        return {true, true};
    }
    return {std::all_of(report.sets.begin(), report.sets.end(), has), false};
}

Entailment entails(const Program& program, const Literal& query, Quantifier quantifier, SolveOptions options) {
    options.extraLiterals.insert(query);
    return entails(answerSets(program, options), query, quantifier);
}

Rule etaShift(const Rule& rule) {
    if (not rule.headPos().empty() || rule.headNaf().empty()) {
        throw NotShiftable("rule '" + formatRule(rule) + "' does not have only negated head literals");
    }
    LiteralSet body = rule.bodyPos();
    body.insert(rule.headNaf().begin(), rule.headNaf().end());
    return Rule::constraint(std::move(body), rule.bodyNaf());
}

Program normalize(const Program& program) {
    Program out;
    for (const auto& r : program) {
        if (not r.headPos().empty() || r.headNaf().empty()) {
            out.add(r);
        }
        else if (not intersects(r.headNaf(), r.bodyNaf())) {
            out.add(etaShift(r));
        }
    }
    return out;
}

bool equivalent(const Program& lhs, const Program& rhs, SolveOptions options) {
    for (const auto& l : litBase(lhs)) {
        options.extraLiterals.insert(l);
    }
    for (const auto& l : litBase(rhs)) {
        options.extraLiterals.insert(l);
    }
    auto a = answerSets(lhs, options);
    auto b = answerSets(rhs, options);
    return a.sets == b.sets && a.hasLitAnswerSet == b.hasLitAnswerSet;
}

} // namespace condasp
