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

#include <support/helpers.h>

#include <catch_amalgamated.hpp>

#include <stdexcept>

using namespace condasp;
using namespace condasp::testing;

TEST_CASE("Atoms", "[core]") {
    SECTION("valid names") {
        REQUIRE(Atom("p").name() == "p");
        REQUIRE(Atom("arrive_on_time").name() == "arrive_on_time");
        REQUIRE(Atom("travel(LHR,CDG)").name() == "travel(LHR,CDG)");
        REQUIRE(Atom("f(g(-1),x)").name() == "f(g(-1),x)");
        REQUIRE(Atom("London").name() == "London");
    }
    SECTION("invalid names") {
        for (const char* bad : {"", "-p", "p q", "p;q", "p.", "p(", "p)", "1p", "not", "p,q", "f(a b)"}) {
            INFO(bad);
            REQUIRE_THROWS_AS(Atom(bad), std::invalid_argument);
        }
    }
}

TEST_CASE("Literals", "[core]") {
    Literal p = positiveLiteral("p");
    Literal np = negativeLiteral("p");
    SECTION("complement is an involution") {
        REQUIRE(p.complement() == np);
        REQUIRE(np.complement() == p);
        REQUIRE(p.complement().complement() == p);
    }
    SECTION("ordered by atom, positive first") {
        REQUIRE(p < np);
        REQUIRE(np < positiveLiteral("q"));
        REQUIRE(positiveLiteral("London") < positiveLiteral("Paris"));
        REQUIRE(positiveLiteral("Paris") < negativeLiteral("pandemic"));
    }
    SECTION("elements compare literal first") {
        REQUIRE(Element{p, false} < Element{p, true});
        REQUIRE(Element{p, true} < Element{np, false});
    }
}

TEST_CASE("Rules", "[core]") {
    SECTION("parts are sets") {
        Rule a({lit("p"), lit("p")}, {}, {lit("q")}, {});
        Rule b({lit("p")}, {}, {lit("q")}, {});
        REQUIRE(a == b);
        REQUIRE(a.headPos().size() == 1);
    }
    SECTION("element order does not matter") {
        std::vector<Element> h1 = {{lit("q"), false}, {lit("p"), false}, {lit("r"), true}};
        std::vector<Element> h2 = {{lit("r"), true}, {lit("p"), false}, {lit("q"), false}};
        std::vector<Element> b  = {{lit("s"), true}};
        REQUIRE(Rule::fromElements(h1, b) == Rule::fromElements(h2, b));
    }
    SECTION("classification") {
        auto fact = classifyRule(parseRule("p ; not q."));
        REQUIRE(fact.kind == RuleKind::Fact);
        REQUIRE_FALSE(fact.notFree);
        auto constraint = classifyRule(parseRule(":- p, -q."));
        REQUIRE(constraint.kind == RuleKind::Constraint);
        REQUIRE(constraint.notFree);
        auto proper = classifyRule(parseRule("p :- not q."));
        REQUIRE(proper.kind == RuleKind::Proper);
        REQUIRE_FALSE(proper.notFree);
    }
    SECTION("elements list positive parts first") {
        Rule r = parseRule("p ; not q :- r, not s.");
        auto head = r.headElements();
        REQUIRE(head.size() == 2);
        REQUIRE_FALSE(head[0].naf);
        REQUIRE(head[1].naf);
        REQUIRE(r.bodyElements().size() == 2);
    }
}

TEST_CASE("Programs", "[core]") {
    SECTION("duplicates are dropped, order is kept") {
        Program p = prog("q.\np.\nq.\n");
        REQUIRE(p.size() == 2);
        REQUIRE(p[0] == parseRule("q."));
        REQUIRE(p[1] == parseRule("p."));
        REQUIRE_FALSE(p.add(parseRule("p.")));
    }
    SECTION("equality ignores order") {
        REQUIRE(prog("p.\nq.") == prog("q.\np."));
        REQUIRE_FALSE(prog("p.") == prog("p.\nq."));
    }
    SECTION("classes") {
        auto pdp = classifyProgram(prog("p ; q :- r.\nr."));
        REQUIRE((pdp.edp && pdp.ndp && pdp.pdp && not pdp.elp && not pdp.nlp && pdp.notFree));
        auto nlp = classifyProgram(prog("p :- not q."));
        REQUIRE((nlp.nlp && nlp.ndp && not nlp.pdp && nlp.elp && not nlp.notFree));
        auto elp = classifyProgram(prog("-p :- q."));
        REQUIRE((elp.elp && elp.edp && not elp.ndp && not elp.nlp));
        auto gedp = classifyProgram(prog("p ; not q."));
        REQUIRE_FALSE(gedp.edp);
        REQUIRE_FALSE(gedp.ndp);
        auto empty = classifyProgram(Program{});
        REQUIRE((empty.edp && empty.pdp && empty.nlp && empty.notFree));
    }
    SECTION("literal base is closed under complement") {
        REQUIRE(litBase(prog("p :- not -q.")) == lits("p, -p, q, -q"));
        REQUIRE(litBase(prog("p."), lits("-r")) == lits("p, -p, r, -r"));
        REQUIRE(litBase(Program{}).empty());
    }
}

TEST_CASE("Formatting", "[core]") {
    REQUIRE(formatRule(parseRule("not q ; p :- not s, r.")) == "p ; not q :- r, not s.");
    REQUIRE(formatRule(parseRule(":- q, p.")) == ":- p, q.");
    REQUIRE(formatRule(parseRule("-p ; -q.")) == "-p ; -q.");
    REQUIRE(formatRule(parseRule("p:-q.")) == "p :- q.");
    REQUIRE(formatProgram(prog("p.\nq :- p.")) == "p.\nq :- p.\n");
    REQUIRE(formatLiteralSet({}) == "{}");
    REQUIRE(formatLiteralSet(lits("q, -p, p")) == "{p, -p, q}");
}

TEST_CASE("Canonical order of literal sets", "[core]") {
    std::vector<LiteralSet> v = {lits("p, q"), lits(""), lits("r"), lits("p"), lits("p")};
    sortCanonical(v);
    REQUIRE(v == std::vector<LiteralSet>{lits(""), lits("p"), lits("r"), lits("p, q")});
}
