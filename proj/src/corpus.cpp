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
#include <condasp/corpus.h>

#include <condasp/cli.h>

#include <sstream>

namespace condasp {
namespace {

using Lines = std::vector<std::string>;

Lines solve() { return {"solve", "-"}; }
Lines skeptical(const std::string& lit) { return {"query", "-", "--literal", lit, "--skeptical"}; }
Lines credulous(const std::string& lit) { return {"query", "-", "--literal", lit, "--credulous"}; }
Lines completeWith(const std::string& mode) { return {"complete", "--mode", mode, "-"}; }

Lines consistent(Lines sets) {
    sets.push_back("classification: consistent");
    return sets;
}
const Lines kIncoherent    = {"classification: incoherent"};
const Lines kContradictory = {"Lit", "classification: contradictory"};
const Lines kTrue          = {"true"};
const Lines kFalse         = {"false"};

const std::string kLibraryFact     = "library :- essay.\nessay.\n";
const std::string kLibraryNoLib    = "library :- essay.\n-library.\n";
const std::string kLibraryLib      = "library :- essay.\nlibrary.\n";
const std::string kLibraryNoEssay  = "library :- essay.\n-essay.\n";
const std::string kAlt             = "library :- text.\n";
const std::string kOpenFact        = "library :- essay, open.\nessay.\n";
const std::string kOpenNoLib       = "library :- essay, open.\n-library.\n";
const std::string kOpenLib         = "library :- essay, open.\nlibrary.\n";
const std::string kOpenNoEssay     = "library :- essay, open.\n-essay.\n";
const std::string kCard            = "n3 :- lD.\n";
const std::string kArrive          = "arrive_on_time :- not accident.\n-arrive_on_time :- accident.\n";
const std::string kArriveOnly      = "arrive_on_time :- not accident.\n";
const std::string kTrip            = "London ; Paris :- not virtual.\nvirtual :- pandemic.\npandemic.\n";
const std::string kFlights         = "travel(LHR,CDG) :- flight(AF1681).\n"
                                     "travel(LHR,CDG) :- flight(BA306).\n"
                                     "travel(NRT,CDG) :- flight(AF275).\n"
                                     "flight(BA306).\n"
                                     "-flight(AF1681).\n"
                                     "flight(AF275).\n";

Lines tripQuery(const std::string& verdict, const std::string& lit, bool defaultVariant = false) {
    Lines cmd = {"cf", "-", "--retract", "pandemic.", "--query", lit, "--" + verdict};
    if (defaultVariant) {
        cmd.push_back("--default");
    }
    return cmd;
}

std::vector<CorpusCase> buildCorpus() {
    return {
        // Answer sets of general programs.
        {"gedp.incoherent", "no answer set at all", "p :- not q.\n-p.\n", "", "", solve(), kIncoherent},
        {"gedp.contradictory", "only Lit", "p :- q.\nq.\n-p.\n", "", "", solve(), kContradictory},
        {"gedp.non-minimal", "answer sets need not be minimal", "p ; not q.\nq ; not p.\n", "", "", solve(),
         consistent({"{}", "{p, q}"})},
        {"gedp.never-fires", "a rule that can never fire changes nothing",
         "p ; not q.\nq ; not p.\nnot p :- q, not p.\n", "", "", solve(), consistent({"{}", "{p, q}"})},

        // Abductive completion.
        {"ac.worked", "completion of a rule with a negated head", "p ; not q :- r, not s.\np :- q.\n", "ac", "p.\n",
         solve(), consistent({"{p, q}", "{p, r}"})},
        {"ac.grouping.rules", "converses with the same key are grouped", "p :- q.\np :- r.\n", "", "",
         completeWith("ac"), {"p :- q.", "p :- r.", "q ; r :- p."}},
        {"ac.grouping.sprinkler", "the remaining cause is abduced", "p :- q.\np :- r.\n", "ac", "-q.\np.\n", solve(),
         consistent({"{p, -q, r}"})},
        {"ac.grouping.no-cause", "no cause left", "p :- q.\np :- r.\n", "ac", "-q.\n-r.\np.\n", solve(),
         kContradictory},
        {"ac.disjunctive.body", "the body is abduced", "p ; q :- r.\np.\n", "ac", "", skeptical("r"), kTrue},
        {"ac.disjunctive.other-head", "the other head is not refuted", "p ; q :- r.\np.\n", "ac", "", credulous("-q"),
         kFalse},
        {"ac.naf-head", "completion depends on syntax", "not p :- q.\n", "ac", "", solve(), consistent({"{q}"})},
        {"ac.constraint", "constraints have no converse", ":- p, q.\n", "ac", "", solve(), consistent({"{}"})},
        {"ac.nonmonotonic.base", "before completion", "p :- not q.\nr :- q.\nr.\n", "", "", solve(),
         consistent({"{p, r}"})},
        {"ac.nonmonotonic", "completion retracts p", "p :- not q.\nr :- q.\nr.\n", "ac", "", solve(),
         consistent({"{q, r}"})},
        {"ac.contradiction.base", "before completion", "p :- -p.\np.\n", "", "", solve(), consistent({"{p}"})},
        {"ac.contradiction", "completion introduces a contradiction", "p :- -p.\np.\n", "ac", "", solve(),
         kContradictory},
        {"ac.coherence.base", "before completion", ":- not p.\nq :- p.\nq.\n", "", "", solve(), kIncoherent},
        {"ac.coherence", "completion makes the program consistent", ":- not p.\nq :- p.\nq.\n", "ac", "", solve(),
         consistent({"{p, q}"})},

        // Contrapositive completions.
        {"wdc.naf", "weak contraposition of a default", "p :- not q.\n", "wdc", "", solve(),
         consistent({"{p}", "{q}"})},
        {"sdc.naf", "strong contraposition of a default", "p :- not q.\n", "sdc", "", solve(), consistent({"{p}"})},
        {"wdc.constraint", "a constraint becomes a fact", ":- not p.\n", "wdc", "", solve(), consistent({"{p}"})},
        {"sdc.naf-head", "completion depends on syntax", "not p :- q.\n", "sdc", "", solve(), consistent({"{}"})},
        {"sdc.constraint", "a constraint becomes a disjunctive fact", ":- p, q.\n", "sdc", "", solve(),
         consistent({"{-p}", "{-q}"})},
        {"sdc.modus-tollens", "the premise is refuted", "p :- q.\n-p.\n", "sdc", "", skeptical("-q"), kTrue},
        {"sdc.incoherent.base", "before completion", "p :- q.\np :- -q.\n-p.\n", "", "", solve(),
         consistent({"{-p}"})},
        {"sdc.incoherent", "contraposition of both rules clashes", "p :- q.\np :- -q.\n-p.\n", "sdc", "", solve(),
         kIncoherent},

        // Inverse completions.
        {"wda.worked", "weak inversion with grouped keys", "p ; q :- r, not s.\nq ; not r :- t.\ns.\n", "wda", "",
         solve(), consistent({"{r, s}"})},
        {"wda.grouping.rules", "inverses with the same key are conjoined", "p :- q.\np :- r.\n", "", "",
         completeWith("wda"), {"p :- q.", "p :- r.", "not p :- not q, not r."}},
        {"wda.grouping.fact", "one cause suffices", "p :- q.\np :- r.\nr.\n", "wda", "", solve(),
         consistent({"{p, r}"})},
        {"wda.naf-head", "completion depends on syntax", "not p :- q.\n", "wda", "", solve(), consistent({"{p}"})},
        {"wda.constraint", "constraints have no inverse", ":- p, q.\n", "wda", "", solve(), consistent({"{}"})},
        {"wda.nonmonotonic.base", "before completion", "p :- not q.\nnot q :- p.\n", "", "", skeptical("p"), kTrue},
        {"wda.nonmonotonic", "completion loses a skeptical consequence", "p :- not q.\nnot q :- p.\n", "wda", "",
         skeptical("p"), kFalse},
        {"sda.nonmonotonic.base", "before completion", "p :- not -r.\nr :- not q.\nq.\n", "", "", credulous("p"),
         kTrue},
        {"sda.nonmonotonic", "completion loses a credulous consequence", "p :- not -r.\nr :- not q.\nq.\n", "sda", "",
         credulous("p"), kFalse},
        {"wda.incoherent", "inversion yields p :- not p", "not p :- p.\n", "wda", "", solve(), kIncoherent},
        {"sda.contradictory", "inversion yields p :- -p", "-p :- p.\n-p.\n", "sda", "", solve(), kContradictory},
        {"wda.coherence", "inversion satisfies the constraint", "not p :- q.\n:- not p.\n", "wda", "", solve(),
         consistent({"{p}"})},
        {"sda.coherence", "inversion satisfies the constraint", ":- not p.\n-p :- not q.\nq.\n", "sda", "", solve(),
         consistent({"{p, q}"})},

        // Default completions.
        {"dac.rules", "one guarded converse per source", "p :- q.\np :- r.\np.\n-r.\n", "", "", completeWith("dac"),
         {"p :- q.", "p :- r.", "p.", "-r.", "q ; r :- p, not -q.", "q ; r :- p, not -r."}},
        {"dac.worked", "the guard blocks the refuted cause", "p :- q.\np :- r.\np.\n-r.\n", "dac", "", solve(),
         consistent({"{p, q, -r}"})},
        {"dac.contradiction", "the guard avoids the contradiction", "p :- -p.\np.\n", "dac", "", solve(),
         consistent({"{p}"})},
        {"dac.incoherent.ac", "plain converse", "p :- q.\np.\n:- q.\n", "ac", "", solve(), kIncoherent},
        {"dac.incoherent", "guards do not restore coherence", "p :- q.\np.\n:- q.\n", "dac", "", solve(),
         kIncoherent},
        {"wdda.incoherent", "guards do not restore coherence", "not p :- p.\n", "wdda", "", solve(), kIncoherent},
        {"sdda.contradiction", "the guard avoids the contradiction", "-p :- p.\n-p.\n", "sdda", "", solve(),
         consistent({"{-p}"})},

        // Suppression task: affirmation, denial, converse and inverse, plain and with extra premises.
        {"suppression.simple.aa", "modus ponens", kLibraryFact, "", "", skeptical("library"), kTrue},
        {"suppression.simple.dc", "modus tollens", kLibraryNoLib, "sdc", "", skeptical("-essay"), kTrue},
        {"suppression.simple.ac", "affirming the consequent", kLibraryLib, "ac", "", skeptical("essay"), kTrue},
        {"suppression.simple.da", "denying the antecedent", kLibraryNoEssay, "sda", "", skeptical("-library"), kTrue},
        {"suppression.alt.aa", "modus ponens", kLibraryFact + kAlt, "", "", skeptical("library"), kTrue},
        {"suppression.alt.dc", "modus tollens", kLibraryNoLib + kAlt, "sdc", "", skeptical("-essay"), kTrue},
        {"suppression.alt.ac", "an alternative cause suppresses", kLibraryLib + kAlt, "ac", "", skeptical("essay"),
         kFalse},
        {"suppression.alt.da", "an alternative cause suppresses", kLibraryNoEssay + kAlt, "sda", "",
         skeptical("-library"), kFalse},
        {"suppression.add.aa", "an additional condition suppresses", kOpenFact, "", "", skeptical("library"), kFalse},
        {"suppression.add.dc", "an additional condition suppresses", kOpenNoLib, "sdc", "", skeptical("-essay"),
         kFalse},
        {"suppression.add.ac", "affirming the consequent", kOpenLib, "ac", "", skeptical("essay"), kTrue},
        {"suppression.add.da", "denying the antecedent", kOpenNoEssay, "sda", "", skeptical("-library"), kTrue},
        {"suppression.simple.dc.sets", "", kLibraryNoLib, "sdc", "", solve(), consistent({"{-essay, -library}"})},
        {"suppression.simple.ac.sets", "", kLibraryLib, "ac", "", solve(), consistent({"{essay, library}"})},
        {"suppression.simple.da.sets", "", kLibraryNoEssay, "sda", "", solve(), consistent({"{-essay, -library}"})},
        {"suppression.alt.dc.sets", "", kLibraryNoLib + kAlt, "sdc", "", solve(),
         consistent({"{-essay, -library, -text}"})},
        {"suppression.alt.ac.sets", "", kLibraryLib + kAlt, "ac", "", solve(),
         consistent({"{essay, library}", "{library, text}"})},
        {"suppression.alt.da.sets", "", kLibraryNoEssay + kAlt, "sda", "", solve(), consistent({"{-essay}"})},
        {"suppression.add.aa.sets", "", kOpenFact, "", "", solve(), consistent({"{essay}"})},
        {"suppression.add.dc.sets", "", kOpenNoLib, "sdc", "", solve(),
         consistent({"{-essay, -library}", "{-library, -open}"})},
        {"suppression.add.ac.sets", "", kOpenLib, "ac", "", solve(), consistent({"{essay, library, open}"})},
        {"suppression.add.da.sets", "", kOpenNoEssay, "sda", "", solve(), consistent({"{-essay, -library}"})},

        // Selection task: cards D, K, 3 and 7 under "if D then 3".
        {"wason.base.D", "", kCard, "", "lD.\n", solve(), consistent({"{lD, n3}"})},
        {"wason.base.K", "", kCard, "", "lK.\n", solve(), consistent({"{lK}"})},
        {"wason.base.3", "", kCard, "", "n3.\n", solve(), consistent({"{n3}"})},
        {"wason.base.7", "", kCard, "", "n7.\n", solve(), consistent({"{n7}"})},
        {"wason.base.D.hidden", "D with something other than 3 behind it", kCard, "", "lD.\n-n3.\n", solve(),
         kContradictory},
        {"wason.base.3.hidden", "3 with something other than D behind it", kCard, "", "n3.\n-lD.\n", solve(),
         consistent({"{-lD, n3}"})},
        {"wason.ac.rules", "", kCard, "", "", completeWith("ac"), {"n3 :- lD.", "lD :- n3."}},
        {"wason.ac.3", "", kCard, "ac", "n3.\n", solve(), consistent({"{lD, n3}"})},
        {"wason.ac.3.hidden", "3 must be turned", kCard, "ac", "n3.\n-lD.\n", solve(), kContradictory},
        {"wason.wdc.rules", "", kCard, "", "", completeWith("wdc"), {"n3 :- lD.", "not lD :- not n3."}},
        {"wason.wdc.7", "", kCard, "wdc", "n7.\n", solve(), consistent({"{n7}"})},
        {"wason.wdc.7.hidden", "7 must be turned", kCard, "wdc", "n7.\nlD.\n:- n3, n7.\n", solve(), kIncoherent},

        // Abduction and prediction.
        {"abduction.accident", "", kArrive, "", "",
         {"abduce", "-", "--abducibles", "accident", "--observe", "-arrive_on_time"}, {"{accident}"}},
        {"abduction.accident.ac", "", kArrive, "", "",
         {"abduce", "-", "--abducibles", "accident", "--observe", "-arrive_on_time", "--via", "ac"}, {"{accident}"}},
        {"abduction.accident.ac.sets", "", kArrive, "ac", "-arrive_on_time.\n", solve(),
         consistent({"{accident, -arrive_on_time}"})},
        {"prediction.newspaper", "", kArrive + "newspaper :- accident.\n", "ac", "-arrive_on_time.\n",
         skeptical("newspaper"), kTrue},
        {"abduction.subset", "", "p :- a.\nq :- -a.\nq.\n", "", "",
         {"abduce", "-", "--abducibles", "a,-a", "--observe", "p"}, {"{a}"}},
        {"abduction.subset.ac.sets", "the full completion is contradictory", "p :- a.\nq :- -a.\nq.\n", "ac", "p.\n",
         solve(), kContradictory},
        {"abduction.subset.ac", "a consistent subprogram explains p", "p :- a.\nq :- -a.\nq.\n", "", "",
         {"abduce", "-", "--abducibles", "a,-a", "--observe", "p", "--via", "ac"}, {"{a}"}},
        {"abduction.default.base", "nothing explains the delay", kArriveOnly, "", "",
         {"abduce", "-", "--abducibles", "accident", "--observe", "-arrive_on_time"}, {}},
        {"abduction.default.sdc", "", kArriveOnly, "", "",
         {"abduce", "-", "--abducibles", "accident", "--observe", "-arrive_on_time", "--via", "sdc"}, {"{accident}"}},
        {"abduction.default.wdc", "", kArriveOnly, "", "",
         {"abduce", "-", "--abducibles", "accident", "--observe", "not arrive_on_time", "--via", "wdc"},
         {"{accident}"}},
        {"abduction.default.wdc.sets", "", kArriveOnly, "wdc", ":- arrive_on_time.\n", solve(),
         consistent({"{accident}"})},

        // Counterfactuals.
        {"cf.would.not-virtual", "", kTrip, "", "", tripQuery("would", "-virtual"), kTrue},
        {"cf.would.no-pandemic", "", kTrip, "", "", tripQuery("would", "-pandemic"), kTrue},
        {"cf.would.London", "", kTrip, "", "", tripQuery("would", "London"), kFalse},
        {"cf.might.London", "", kTrip, "", "", tripQuery("might", "London"), kTrue},
        {"cf.might.Paris", "", kTrip, "", "", tripQuery("might", "Paris"), kTrue},
        {"cf.might.virtual", "", kTrip, "", "", tripQuery("might", "virtual"), kFalse},
        {"cf.default.would.not-virtual", "", kTrip, "", "", tripQuery("would", "-virtual", true), kTrue},

        // Neighborhood inference.
        {"neighbor.flight", "another flight on the same route", kFlights, "", "",
         {"neighbor", "-", "--goal", "flight(AF1681)"}, {"{flight(BA306)}"}},
        {"neighbor.flight.rules", "converse of the neighbouring rule only", kFlights, "", "",
         {"complete", "--mode", "ac", "--filter-rules", "2", "-"},
         {"travel(LHR,CDG) :- flight(AF1681).", "travel(LHR,CDG) :- flight(BA306).",
          "travel(NRT,CDG) :- flight(AF275).", "flight(BA306).", "-flight(AF1681).", "flight(AF275).",
          "flight(BA306) :- travel(LHR,CDG)."}},
    };
}

Lines splitLines(const std::string& text) {
    Lines              out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

struct Run {
    int         code;
    std::string out;
};

Run runOn(const std::string& program, const Lines& command) {
    std::ostringstream out, err;
    FileReader         reader = [&program](const std::string& path) -> std::string {
        if (path != "-") {
            throw std::runtime_error("corpus cases only read the embedded program");
        }
        return program;
    };
    int code = runCli(command, out, err, reader);
    return {code, out.str() + err.str()};
}

} // namespace

const std::vector<CorpusCase>& corpus() {
    static const std::vector<CorpusCase> cases = buildCorpus();
    return cases;
}

CorpusOutcome runCorpusCase(const CorpusCase& test) {
    std::string program = test.program;
    if (not test.completeMode.empty()) {
        Run completed = runOn(program, completeWith(test.completeMode));
        if (completed.code != 0) {
            return {&test, false, splitLines(completed.out)};
        }
        program = completed.out;
    }
    program += test.extra;
    Run   run    = runOn(program, test.command);
    Lines actual = splitLines(run.out);
    if (run.code != 0) {
        actual.push_back("exit code " + std::to_string(run.code));
    }
    return {&test, actual == test.expected, std::move(actual)};
}

std::vector<CorpusOutcome> runCorpus() {
    std::vector<CorpusOutcome> out;
    for (const auto& test : corpus()) {
        out.push_back(runCorpusCase(test));
    }
    return out;
}

} // namespace condasp
