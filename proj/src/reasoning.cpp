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
#include <condasp/reasoning.h>

#include <condasp/error.h>

#include <algorithm>
#include <stdexcept>

namespace condasp {
namespace {

LiteralSet intersection(const LiteralSet& a, const LiteralSet& b) {
    LiteralSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool intersects(const LiteralSet& a, const LiteralSet& b) {
    return std::any_of(a.begin(), a.end(), [&b](const Literal& l) { return b.contains(l); });
}

bool properSubset(const LiteralSet& a, const LiteralSet& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void keepMinimal(std::vector<LiteralSet>& sets) {
    std::vector<LiteralSet> out;
    for (const auto& s : sets) {
        if (std::none_of(sets.begin(), sets.end(), [&s](const LiteralSet& t) { return properSubset(t, s); })) {
            out.push_back(s);
        }
    }
    sets = std::move(out);
}

std::vector<LiteralSet> restrictTo(const AnswerSetReport& report, const LiteralSet& scope) {
    std::vector<LiteralSet> out;
    for (const auto& s : report.sets) {
        out.push_back(intersection(s, scope));
    }
    sortCanonical(out);
    return out;
}

//! `:- not o.` for a positive and `:- g.` for a negative observation.
Rule observationConstraint(const Observation& o) {
    return o.naf ? Rule::constraint({o.literal}) : Rule::constraint({}, {o.literal});
}

//! `o.` for a positive and `:- g.` for a negative observation.
Rule observationRule(const Observation& o) {
    return o.naf ? Rule::constraint({o.literal}) : Rule::fact(o.literal);
}

// Whether some rule produces a completion rule whose body matches the observation.
bool applicable(std::span<const Rule> rules, const Observation& o, CompletionMode mode) {
    const Literal& l = o.literal;
    return std::any_of(rules.begin(), rules.end(), [&](const Rule& r) {
        switch (mode) {
            case CompletionMode::AC : return not o.naf && r.headPos().contains(l);
            case CompletionMode::SDC: return not o.naf && (r.headPos().contains(l.complement()) || r.headNaf().contains(l));
            case CompletionMode::WDC: return o.naf ? r.headPos().contains(l) : r.headNaf().contains(l);
            default                 : return false;
        }
    });
}

SolveOptions withLiteral(SolveOptions options, const Literal& lit) {
    options.extraLiterals.insert(lit);
    return options;
}

} // namespace

AbductiveProgram::AbductiveProgram(Program program, LiteralSet abducibles)
    : program_(std::move(program))
    , abducibles_(std::move(abducibles)) {
    for (const auto& r : program_) {
        if (intersects(r.headPos(), abducibles_) || intersects(r.headNaf(), abducibles_)) {
            throw InvalidAbducible("abducible occurs in the head of '" + formatRule(r) + "'");
        }
    }
}

Program abducibleRules(const LiteralSet& abducibles) {
    Program out;
    for (const auto& g : abducibles) {
        out.add(Rule({g}, {g}, {}, {}));
    }
    return out;
}

std::vector<LiteralSet> explain(const AbductiveProgram& ap, const Observation& observation,
                                const ExplainOptions& options) {
    Program p = ap.program();
    p.append(abducibleRules(ap.abducibles()));
    p.add(observationConstraint(observation));
    auto out = restrictTo(answerSets(p, withLiteral(options.solve, observation.literal)), ap.abducibles());
    if (options.minimal) {
        keepMinimal(out);
    }
    return out;
}

CompletionExplanation explainViaCompletion(const AbductiveProgram& ap, const Observation& observation,
                                           CompletionMode mode, const ExplainOptions& options) {
    if (mode != CompletionMode::AC && mode != CompletionMode::SDC && mode != CompletionMode::WDC) {
        throw std::invalid_argument("explanation by completion supports ac, sdc and wdc");
    }
    const auto& rules = ap.program().rules();
    if (not applicable(rules, observation, mode)) {
        throw NoApplicableRule("no rule can explain '" + formatElement(observation) + "' under " +
                               std::string(toString(mode)));
    }
    SolveOptions solve = withLiteral(options.solve, observation.literal);
    auto attempt = [&](const Program& sub) {
        CompletionExplanation r;
        r.program = complete(sub, mode);
        r.program.add(observationRule(observation));
        auto report    = answerSets(r.program, solve);
        r.explanations = restrictTo(report, ap.abducibles());
        if (options.minimal) {
            keepMinimal(r.explanations);
        }
        return r;
    };
    CompletionExplanation full = attempt(ap.program());
    if (not full.explanations.empty()) {
        return full;
    }
    // Subsets by size, then in lexicographic order of rule indices.
    const std::size_t n = rules.size();
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> idx;
            std::vector<Rule>        sub;
            for (std::size_t i = 0; i != n; ++i) {
                if (pick[i]) {
                    idx.push_back(i);
                    sub.push_back(rules[i]);
                }
            }
            if (not applicable(sub, observation, mode)) {
                continue;
            }
            CompletionExplanation r = attempt(Program(sub));
            if (not r.explanations.empty()) {
                r.subset = std::move(idx);
                return r;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return full;
}

Entailment predict(const AbductiveProgram& ap, const Observation& observation, const Literal& query,
                   CompletionMode mode, Quantifier quantifier, const SolveOptions& options) {
    auto r = explainViaCompletion(ap, observation, mode, {false, options});
    return entails(r.program, query, quantifier, withLiteral(options, observation.literal));
}

std::vector<Rule> counterfact(const Rule& fact) {
    if (not fact.isFact()) {
        throw NotAFact("'" + formatRule(fact) + "' is not a fact");
    }
    if (fact.headPos().empty()) {
        throw EmptyPositiveHead("'" + formatRule(fact) + "' has no positive head literal");
    }
    std::vector<Rule> out;
    for (const auto& l : fact.headPos()) {
        out.push_back(Rule::fact(l.complement()));
    }
    for (const auto& l : fact.headNaf()) {
        out.push_back(Rule::fact(l));
    }
    return out;
}

Program counterfactualProgram(const Program& program, std::span<const Rule> retracted, CounterfactualVariant variant) {
    for (const auto& r : retracted) {
        if (not r.isFact() || not program.contains(r)) {
            throw SigmaNotFacts("'" + formatRule(r) + "' is not a fact of the program");
        }
    }
    auto isRetracted = [&](const Rule& r) { return std::find(retracted.begin(), retracted.end(), r) != retracted.end(); };
    Program out;
    for (const auto& r : program) {
        if (not isRetracted(r)) {
            out.add(r);
        }
    }
    for (const auto& r : retracted) {
        out.append(counterfact(r));
    }
    auto inverse = variant == CounterfactualVariant::Strict ? sda(program.rules()) : sdda(program.rules());
    out.append(expand(std::span<const InverseRule>(inverse)));
    return out;
}

Entailment would(const Program& program, std::span<const Rule> retracted, const Literal& query,
                 CounterfactualVariant variant, const SolveOptions& options) {
    return entails(counterfactualProgram(program, retracted, variant), query, Quantifier::Skeptical, options);
}

Entailment might(const Program& program, std::span<const Rule> retracted, const Literal& query,
                 CounterfactualVariant variant, const SolveOptions& options) {
    return entails(counterfactualProgram(program, retracted, variant), query, Quantifier::Credulous, options);
}

std::vector<LiteralSet> neighborhood(const Program& program, const Literal& goal, const SolveOptions& options) {
    std::vector<Rule> proper, used, neighbours;
    LiteralSet        factHeads, usedHeads;
    for (const auto& r : program) {
        if (r.isFact()) {
            factHeads.insert(r.headPos().begin(), r.headPos().end());
        }
        else {
            proper.push_back(r);
            if (r.bodyPos().contains(goal)) {
                used.push_back(r);
                usedHeads.insert(r.headPos().begin(), r.headPos().end());
            }
        }
    }
    for (const auto& r : proper) {
        if (not r.bodyPos().contains(goal) && intersects(r.headPos(), usedHeads)) {
            neighbours.push_back(r);
        }
    }
    if (used.empty() || neighbours.empty()) {
        return {};
    }
    Program p(proper);
    p.append(expand(std::span<const ConverseRule>(ac(neighbours))));
    p.add(Rule::fact(goal));
    return restrictTo(answerSets(p, options), factHeads);
}

} // namespace condasp
