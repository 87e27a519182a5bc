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
// Properties of the semantics and the completions over seeded random programs. Answer sets of small programs
// are cross-checked against the definitional oracle in support/naive_semantics.h.

#include <condasp/completion.h>
#include <condasp/reasoning.h>
#include <condasp/semantics.h>

#include <support/abduction_oracle.h>
#include <support/helpers.h>
#include <support/naive_semantics.h>
#include <support/random_programs.h>

#include <catch_amalgamated.hpp>

using namespace condasp;
using namespace condasp::testing;

namespace {

bool contains(const std::vector<LiteralSet>& sets, const LiteralSet& s) { return std::ranges::count(sets, s) != 0; }

Consistency classify(const Program& p) { return answerSets(p).classification(); }

std::vector<Program> sample(std::uint32_t seed, const ProgramShape& shape, int n) {
    ProgramGenerator     gen(seed);
    std::vector<Program> out;
    for (int i = 0; i != n; ++i) {
        out.push_back(gen.program(shape));
    }
    return out;
}

std::vector<Program> contradictorySample(std::uint32_t seed, int n) {
    ProgramGenerator     gen(seed);
    std::vector<Program> out;
    while (static_cast<int>(out.size()) != n) {
        Program p = gen.program(gedpShape());
        if (classify(p) == Consistency::Contradictory) {
            out.push_back(p);
        }
    }
    return out;
}

Program added(const Program& p, CompletionMode mode) { return Program(completionRules(p.rules(), mode)); }

} // namespace

TEST_CASE("The engine agrees with the definitions on four atoms", "[property][semantics]") {
    for (const auto& p : sample(41, gedpShape(), 200)) {
        INFO(formatProgram(p));
        auto naive  = naiveAnswerSets(p);
        auto engine = answerSets(p);
        REQUIRE(engine.sets == naive.consistent);
        REQUIRE(engine.hasLitAnswerSet == naive.lit);
    }
}

TEST_CASE("The engine agrees with the definitions on completed programs", "[property][semantics]") {
    ProgramShape shape = gedpShape();
    shape.atoms        = 3;
    shape.maxRules     = 4;
    for (const auto& p : sample(42, shape, 100)) {
        for (auto mode : kAllCompletionModes) {
            Program c = complete(p, mode);
            INFO(toString(mode) << "\n" << formatProgram(c));
            auto naive  = naiveAnswerSets(c);
            auto engine = answerSets(c);
            REQUIRE(engine.sets == naive.consistent);
            REQUIRE(engine.hasLitAnswerSet == naive.lit);
        }
    }
}

TEST_CASE("Answer sets are models", "[property][semantics]") {
    for (const auto& p : sample(43, gedpShape(), 300)) {
        for (const auto& s : answerSets(p).sets) {
            REQUIRE(isConsistent(s));
            REQUIRE(satisfies(s, p));
        }
    }
}

TEST_CASE("Shifting and deleting negated-head rules preserves answer sets", "[property][semantics]") {
    for (const auto& p : sample(44, gedpShape(), 300)) {
        INFO(formatProgram(p));
        Program shifted;
        Program kept;
        for (const auto& r : p) {
            bool shiftable = r.headPos().empty() && not r.headNaf().empty();
            shifted.add(shiftable ? etaShift(r) : r);
            bool shared = std::ranges::any_of(r.headNaf(), [&](const Literal& l) { return r.bodyNaf().contains(l); });
            if (not(r.headPos().empty() && shared)) {
                kept.add(r);
            }
        }
        auto base     = naiveBase(p);
        auto original = naiveAnswerSets(p);
        for (const Program& q : {shifted, kept, normalize(p)}) {
            auto other = naiveAnswerSets(q, base);
            REQUIRE(other.consistent == original.consistent);
            REQUIRE(other.lit == original.lit);
        }
        REQUIRE(equivalent(p, normalize(p)));
        REQUIRE(normalize(normalize(p)) == normalize(p));
    }
}

TEST_CASE("Not-free programs with a constraint are not contradictory", "[property][semantics]") {
    ProgramGenerator gen(45);
    for (int i = 0; i != 300; ++i) {
        Program p = gen.program(notFreeShape());
        p.add(Rule::constraint(gen.part(notFreeShape(), 2)));
        INFO(formatProgram(p));
        REQUIRE_FALSE(naiveAnswerSets(p).lit);
        REQUIRE_FALSE(answerSets(p).hasLitAnswerSet);
    }
}

TEST_CASE("Completions of contradictory programs", "[property][completion]") {
    auto programs = contradictorySample(46, 200);
    SECTION("WDC and SDA keep the answer set Lit") {
        for (const auto& p : programs) {
            INFO(formatProgram(p));
            REQUIRE(answerSets(complete(p, CompletionMode::WDC)).hasLitAnswerSet);
            REQUIRE(answerSets(complete(p, CompletionMode::SDA)).hasLitAnswerSet);
        }
    }
    SECTION("SDC never does") {
        for (const auto& p : programs) {
            REQUIRE_FALSE(answerSets(complete(p, CompletionMode::SDC)).hasLitAnswerSet);
        }
    }
    SECTION("AC and WDA keep Lit when no rule has default negation in its body") {
        for (const auto& p : programs) {
            if (std::ranges::all_of(p, [](const Rule& r) { return r.bodyNaf().empty(); })) {
                REQUIRE(answerSets(complete(p, CompletionMode::AC)).hasLitAnswerSet);
                REQUIRE(answerSets(complete(p, CompletionMode::WDA)).hasLitAnswerSet);
            }
        }
    }
}

TEST_CASE("Counterexamples to preserving contradiction", "[completion]") {
    SECTION("the contrapositive of a fact is a constraint") {
        Program p = prog("d.\n-d.");
        REQUIRE(classify(p) == Consistency::Contradictory);
        REQUIRE(complete(p, CompletionMode::SDC) == prog("d.\n-d.\n:- -d.\n:- d."));
        REQUIRE(classify(complete(p, CompletionMode::SDC)) == Consistency::Incoherent);
    }
    SECTION("a converse over a default body becomes a constraint in the reduct by Lit") {
        Program p = prog("-b.\nb :- not -a.\nb.");
        REQUIRE(classify(p) == Consistency::Contradictory);
        REQUIRE(added(p, CompletionMode::AC) == prog("not -a :- b."));
        REQUIRE(classify(complete(p, CompletionMode::AC)) == Consistency::Incoherent);
        REQUIRE(added(p, CompletionMode::WDA) == prog("not b :- -a."));
        REQUIRE(classify(complete(p, CompletionMode::WDA)) == Consistency::Incoherent);
    }
    SECTION("weak contraposition can add a consistent answer set") {
        Program p = prog("b ; not d.\n-b ; not c.\n:- not b.");
        REQUIRE(classify(p) == Consistency::Contradictory);
        auto completed = answerSets(complete(p, CompletionMode::WDC));
        REQUIRE(completed.hasLitAnswerSet);
        REQUIRE(completed.sets == sets({"b"}));
    }
    SECTION("so can the strong inverse") {
        Program p = prog(":- not c.\n-c :- not d.\nd.\nb.\n-b ; not -a.");
        REQUIRE(classify(p) == Consistency::Contradictory);
        REQUIRE(added(p, CompletionMode::SDA) == prog("c :- d."));
        auto completed = answerSets(complete(p, CompletionMode::SDA));
        REQUIRE(completed.hasLitAnswerSet);
        REQUIRE(completed.sets == sets({"b, c, d"}));
    }
}

TEST_CASE("Contraposition keeps answer sets", "[property][completion]") {
    for (const auto& p : sample(47, gedpShape(), 300)) {
        INFO(formatProgram(p));
        auto original  = answerSets(p).sets;
        auto completed = answerSets(complete(p, CompletionMode::WDC)).sets;
        for (const auto& s : original) {
            REQUIRE(contains(completed, s));
        }
    }
}

TEST_CASE("Strong contraposition of consistent programs with not-free constraints", "[property][completion]") {
    int checked = 0;
    for (const auto& p : sample(48, gedpShape(), 400)) {
        bool notFreeConstraints =
            std::ranges::all_of(p, [](const Rule& r) { return not r.isConstraint() || r.bodyNaf().empty(); });
        if (notFreeConstraints && classify(p) == Consistency::Consistent) {
            INFO(formatProgram(p));
            REQUIRE(classify(complete(p, CompletionMode::SDC)) != Consistency::Contradictory);
            ++checked;
        }
    }
    REQUIRE(checked > 50);
    SECTION("but it may become incoherent") {
        REQUIRE(classify(complete(prog("p :- q.\np :- -q.\n-p."), CompletionMode::SDC)) == Consistency::Incoherent);
    }
}

TEST_CASE("Weak inverse of an EDP only removes answer sets", "[property][completion]") {
    for (const auto& p : sample(49, edpShape(), 300)) {
        INFO(formatProgram(p));
        auto original = answerSets(p).sets;
        for (const auto& s : answerSets(complete(p, CompletionMode::WDA)).sets) {
            REQUIRE(contains(original, s));
        }
    }
}

TEST_CASE("Converse of positive programs", "[property][completion]") {
    auto extended = [](const Program& p) {
        auto completed = answerSets(complete(p, CompletionMode::AC)).sets;
        return std::ranges::all_of(answerSets(p).sets, [&](const LiteralSet& s) {
            return std::ranges::any_of(completed, [&](const LiteralSet& t) { return std::ranges::includes(t, s); });
        });
    };
    for (const auto& p : sample(50, positiveShape(), 300)) {
        INFO(formatProgram(p));
        REQUIRE(classify(complete(p, CompletionMode::AC)) == Consistency::Consistent);
    }
    ProgramShape definite = positiveShape();
    definite.disjunction  = false;
    for (const auto& p : sample(58, definite, 300)) {
        INFO(formatProgram(p));
        REQUIRE(extended(p));
    }
    SECTION("with disjunction an answer set need not extend") {
        Program p = prog("a ; c.\nb :- c.\nb.");
        REQUIRE(answerSets(p).sets == sets({"a, b", "b, c"}));
        REQUIRE(answerSets(complete(p, CompletionMode::AC)).sets == sets({"b, c"}));
        REQUIRE_FALSE(extended(p));
    }
}

TEST_CASE("Default completions", "[property][completion]") {
    const std::vector<std::pair<CompletionMode, CompletionMode>> pairs = {
        {CompletionMode::AC, CompletionMode::DAC},
        {CompletionMode::WDA, CompletionMode::WDDA},
        {CompletionMode::SDA, CompletionMode::SDDA},
    };
    for (const auto& p : sample(51, gedpShape(), 300)) {
        INFO(formatProgram(p));
        for (auto [plain, guarded] : pairs) {
            auto kept = answerSets(complete(p, guarded));
            for (const auto& s : answerSets(complete(p, plain)).sets) {
                REQUIRE(contains(kept.sets, s));
            }
            auto original = answerSets(p);
            if (not original.sets.empty() && not original.hasLitAnswerSet) {
                REQUIRE(kept.classification() != Consistency::Contradictory);
            }
        }
    }
    SECTION("for EDPs the guards exclude Lit altogether") {
        for (const auto& p : sample(52, edpShape(), 300)) {
            if (classify(p) == Consistency::Consistent) {
                for (auto mode : {CompletionMode::DAC, CompletionMode::WDDA, CompletionMode::SDDA}) {
                    REQUIRE_FALSE(answerSets(complete(p, mode)).hasLitAnswerSet);
                }
            }
        }
    }
    SECTION("with default negation in heads they need not") {
        auto r = answerSets(complete(prog("-d ; not c.\nd."), CompletionMode::DAC));
        REQUIRE(r.sets == sets({"d"}));
        REQUIRE(r.hasLitAnswerSet);
    }
    SECTION("a consistent program that also has the answer set Lit can lose its consistent ones") {
        Program p        = prog("b ; not a ; not d :- -b.\n-b ; not a.");
        auto    original = answerSets(p);
        REQUIRE_FALSE(original.sets.empty());
        REQUIRE(original.hasLitAnswerSet);
        REQUIRE(classify(complete(p, CompletionMode::WDDA)) == Consistency::Contradictory);
    }
}

TEST_CASE("Counterfactual programs with consistent premises are not contradictory", "[property][reasoning]") {
    ProgramGenerator gen(53);
    int              checked = 0;
    for (int i = 0; i != 400; ++i) {
        Program           p = gen.program(gedpShape());
        std::vector<Rule> sigma;
        for (const auto& r : p) {
            if (r.isFact() && not r.headPos().empty() && gen.chance(0.5)) {
                sigma.push_back(r);
            }
        }
        Program premise;
        for (const auto& r : p) {
            if (std::ranges::count(sigma, r) == 0) {
                premise.add(r);
            }
        }
        for (const auto& r : sigma) {
            premise.append(counterfact(r));
        }
        if (classify(premise) != Consistency::Consistent) {
            continue;
        }
        INFO(formatProgram(p));
        REQUIRE(classify(counterfactualProgram(p, sigma, CounterfactualVariant::Default)) !=
                Consistency::Contradictory);
        ++checked;
    }
    REQUIRE(checked > 100);
}

TEST_CASE("Inverse completions ignore facts", "[property][reasoning]") {
    ProgramGenerator gen(59);
    for (int i = 0; i != 300; ++i) {
        Program           p = gen.program(gedpShape());
        Program           premise;
        std::vector<Rule> sigma;
        for (const auto& r : p) {
            if (r.isFact() && not r.headPos().empty() && gen.chance(0.5)) {
                sigma.push_back(r);
                premise.append(counterfact(r));
            }
            else {
                premise.add(r);
            }
        }
        INFO(formatProgram(p));
        for (auto mode : {CompletionMode::SDA, CompletionMode::SDDA, CompletionMode::WDA, CompletionMode::WDDA}) {
            REQUIRE(added(p, mode) == added(premise, mode));
        }
        auto variant = gen.chance(0.5) ? CounterfactualVariant::Strict : CounterfactualVariant::Default;
        auto mode    = variant == CounterfactualVariant::Strict ? CompletionMode::SDA : CompletionMode::SDDA;
        REQUIRE(counterfactualProgram(p, sigma, variant) == complete(premise, mode));
    }
}

TEST_CASE("Would implies might when the counterfactual is consistent", "[property][reasoning]") {
    ProgramGenerator gen(54);
    for (int i = 0; i != 200; ++i) {
        Program           p = gen.program(gedpShape());
        std::vector<Rule> sigma;
        for (const auto& r : p) {
            if (r.isFact() && not r.headPos().empty()) {
                sigma.push_back(r);
                break;
            }
        }
        Literal q = gen.literal(gedpShape());
        if (not answerSets(counterfactualProgram(p, sigma)).sets.empty() && would(p, sigma, q).holds) {
            REQUIRE(might(p, sigma, q).holds);
        }
    }
}

TEST_CASE("Neighbourhood of positive programs", "[property][reasoning]") {
    ProgramShape shape = positiveShape();
    shape.maxRules     = 6;
    ProgramGenerator gen(55);
    int              checked = 0;
    for (int i = 0; i != 400; ++i) {
        Program p = gen.program(shape);
        Literal g = gen.literal(shape);
        // The rules that use the goal and the other rules sharing a head with them.
        std::vector<Rule> u;
        LiteralSet        heads;
        for (const auto& r : p) {
            if (not r.isFact() && r.bodyPos().contains(g)) {
                u.push_back(r);
                heads.insert(r.headPos().begin(), r.headPos().end());
            }
        }
        bool hasV = std::ranges::any_of(p, [&](const Rule& r) {
            return not r.isFact() && std::ranges::count(u, r) == 0 &&
                   std::ranges::any_of(r.headPos(), [&](const Literal& l) { return heads.contains(l); });
        });
        if (u.empty() || not hasV) {
            continue;
        }
        INFO(formatProgram(p) << "goal " << formatLiteral(g));
        REQUIRE_FALSE(neighborhood(p, g).empty());
        ++checked;
    }
    REQUIRE(checked > 30);
}

TEST_CASE("Explanations match their definition", "[property][reasoning]") {
    ProgramShape shape = gedpShape();
    shape.maxRules     = 5;
    ProgramGenerator gen(56);
    for (int i = 0; i != 300; ++i) {
        auto c = randomAbductive(gen, shape, 2, 0.3);
        INFO(formatProgram(c.program) << "abducibles " << formatLiteralSet(c.abducibles) << " observed "
                                      << formatElement(c.observation));
        AbductiveProgram ap(c.program, c.abducibles);
        auto             expected = oracleExplanations(c);
        REQUIRE(explain(ap, c.observation) == expected);
        ExplainOptions minimal;
        minimal.minimal = true;
        for (const auto& e : explain(ap, c.observation, minimal)) {
            REQUIRE(isMinimalAmong(e, expected));
        }
    }
}

TEST_CASE("Explanations through the converse of hierarchical programs", "[property][reasoning]") {
    ProgramShape shape = notFreeShape();
    shape.maxRules     = 5;
    shape.disjunction  = false;
    ProgramGenerator gen(57);
    for (int n = 0; n != 200;) {
        auto c = randomAbductive(gen, shape, 2);
        if (not isHierarchical(c.program, c.abducibles)) {
            continue;
        }
        ++n;
        INFO(formatProgram(c.program) << "abducibles " << formatLiteralSet(c.abducibles) << " observed "
                                      << formatElement(c.observation));
        auto expected = oracleExplanations(c);
        if (std::ranges::any_of(c.program, [&](const Rule& r) { return r.headPos().contains(c.observation.literal); })) {
            for (const auto& e : acHypotheses(c.program, c)) {
                REQUIRE(isExplanation(c, e));
            }
        }
        for (const auto& e : expected) {
            if (isMinimalAmong(e, expected)) {
                REQUIRE(someSubprogramYields(c, e));
            }
        }
    }
}

TEST_CASE("Counterexamples to explanations through the converse", "[reasoning]") {
    SECTION("an undefined body literal is assumed by the converse") {
        AbductiveCase c{prog("b :- a, c."), lits("a"), parseElement("b")};
        REQUIRE(acHypotheses(c.program, c) == sets({"a"}));
        REQUIRE_FALSE(isExplanation(c, lits("a")));
    }
    SECTION("a hypothesis demanded by a constraint has no converse") {
        AbductiveCase c{prog(":- not a, not c.\n-c."), lits("a"), parseElement("-c")};
        REQUIRE(oracleExplanations(c) == sets({"a"}));
        REQUIRE_FALSE(someSubprogramYields(c, lits("a")));
    }
    SECTION("irrelevant hypotheses are never read off") {
        AbductiveCase c{prog("b."), lits("c"), parseElement("b")};
        REQUIRE(oracleExplanations(c) == sets({"", "c"}));
        REQUIRE_FALSE(someSubprogramYields(c, lits("c")));
    }
}
