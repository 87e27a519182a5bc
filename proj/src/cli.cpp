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
#include <condasp/cli.h>

#include <condasp/completion.h>
#include <condasp/corpus.h>
#include <condasp/error.h>
#include <condasp/parser.h>
#include <condasp/reasoning.h>
#include <condasp/semantics.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace condasp {
namespace {

using Json = nlohmann::ordered_json;

//! Bad flags, unreadable input or malformed text; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Options whose value may start with '-' (explicit negation), so the value is attached as `--opt=value`.
const std::set<std::string, std::less<>> kValueOptions = {
    "--abducibles", "--complete", "--filter-rules", "--goal", "--literal",
    "--mode",       "--observe",  "--query",        "--retract", "--via"};

std::vector<std::string> attachValues(std::span<const std::string> args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i != args.size(); ++i) {
        if (kValueOptions.contains(args[i]) && i + 1 != args.size()) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        }
        else {
            out.push_back(args[i]);
        }
    }
    return out;
}

//! Splits at commas outside of parentheses.
std::vector<std::string> splitTopLevel(const std::string& text) {
    std::vector<std::string> out(1);
    int                      depth = 0;
    for (char c : text) {
        if (c == ',' && depth == 0) {
            out.emplace_back();
            continue;
        }
        depth += (c == '(') - (c == ')');
        out.back() += c;
    }
    return out;
}

Json toJson(const LiteralSet& set) {
    Json arr = Json::array();
    for (const auto& l : set) {
        arr.push_back(formatLiteral(l));
    }
    return arr;
}

Json toJson(const std::vector<LiteralSet>& sets) {
    Json arr = Json::array();
    for (const auto& s : sets) {
        arr.push_back(toJson(s));
    }
    return arr;
}

struct Command {
    std::ostream&     out;
    const FileReader& reader;

    [[nodiscard]] Program load(const std::string& path) const {
        std::string text;
        try {
            text = reader(path);
        }
        catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        try {
            return parseProgram(text);
        }
        catch (const ParseError& e) {
            throw UsageError((path == "-" ? std::string("<stdin>") : path) + ":" + e.what());
        }
    }
};

Literal literalArg(const std::string& flag, const std::string& text) {
    try {
        return parseLiteral(text);
    }
    catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

Element elementArg(const std::string& flag, const std::string& text) {
    try {
        return parseElement(text);
    }
    catch (const ParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

CompletionMode modeArg(const std::string& flag, const std::string& text) {
    if (auto mode = parseCompletionMode(text)) {
        return *mode;
    }
    throw UsageError(flag + ": unknown completion '" + text + "'");
}

std::vector<std::size_t> filterArg(const std::string& text, std::size_t programSize) {
    std::vector<std::size_t> out;
    for (const auto& part : splitTopLevel(text)) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(part, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size() || value == 0) {
            throw UsageError("--filter-rules: '" + part + "' is not a rule number");
        }
        if (value > programSize) {
            throw UsageError("--filter-rules: rule " + part + " does not exist, the program has " +
                             std::to_string(programSize) + " rules");
        }
        out.push_back(value - 1);
    }
    return out;
}

void printEntailment(std::ostream& out, const Entailment& e) {
    out << (e.holds ? "true" : "false") << (e.vacuous ? " (vacuous)" : "") << '\n';
}

Json reportJson(const AnswerSetReport& report) {
    Json j;
    j["answer_sets"]    = toJson(report.sets);
    j["classification"] = toString(report.classification());
    j["vacuous"]        = report.sets.empty();
    return j;
}

void printReport(std::ostream& out, const AnswerSetReport& report) {
    for (const auto& s : report.sets) {
        out << formatLiteralSet(s) << '\n';
    }
    if (report.hasLitAnswerSet) {
        out << "Lit\n";
    }
    out << "classification: " << toString(report.classification()) << '\n';
}

void printSets(std::ostream& out, const std::vector<LiteralSet>& sets) {
    for (const auto& s : sets) {
        out << formatLiteralSet(s) << '\n';
    }
}

int runCorpusCommand(std::ostream& out, bool json) {
    auto outcomes = runCorpus();
    std::size_t passed = 0;
    Json cases = Json::array();
    for (const auto& o : outcomes) {
        passed += o.passed;
        if (json) {
            Json c;
            c["id"]       = o.test->id;
            c["passed"]   = o.passed;
            c["expected"] = o.test->expected;
            c["actual"]   = o.actual;
            cases.push_back(std::move(c));
            continue;
        }
        out << (o.passed ? "PASS " : "FAIL ") << o.test->id << '\n';
        if (not o.passed) {
            for (const auto& line : o.test->expected) {
                out << "  expected: " << line << '\n';
            }
            for (const auto& line : o.actual) {
                out << "  actual:   " << line << '\n';
            }
        }
    }
    if (json) {
        Json j;
        j["cases"]  = std::move(cases);
        j["passed"] = passed;
        j["failed"] = outcomes.size() - passed;
        out << j.dump() << '\n';
    }
    else {
        out << passed << '/' << outcomes.size() << " cases passed\n";
    }
    return passed == outcomes.size() ? kExitOk : kExitDomain;
}

} // namespace

std::string readFileOrStdin(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (not in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    buffer << in.rdbuf();
    return buffer.str();
}

int runCli(std::span<const std::string> args, std::ostream& out, std::ostream& err, const FileReader& reader) {
    CLI::App app{"Answer sets, completions and commonsense reasoning over ground programs", "condasp"};
    app.require_subcommand(1);
    bool json = false;

    std::string file;
    bool        requireModel = false;
    auto*       solve        = app.add_subcommand("solve", "Print the answer sets of a program");
    solve->add_option("file", file, "Program file, - for stdin")->required();
    solve->add_flag("--json", json);
    solve->add_flag("--require-model", requireModel, "Exit with 1 if there is no consistent answer set");

    std::string mode, filter;
    auto*       complete = app.add_subcommand("complete", "Print a completed program");
    complete->add_option("--mode", mode, "ac, wdc, sdc, wda, sda, dac, wdda or sdda")->required();
    complete->add_option("file", file)->required();
    complete->add_option("--filter-rules", filter, "Complete only these rules (1-based, comma separated)");
    complete->add_flag("--json", json);

    std::string literal;
    bool        skeptical = false, credulous = false;
    auto*       query     = app.add_subcommand("query", "Decide entailment of a literal");
    query->add_option("file", file)->required();
    query->add_option("--literal", literal)->required();
    query->add_flag("--skeptical", skeptical);
    query->add_flag("--credulous", credulous);
    query->add_option("--complete", mode, "Query the completed program");
    query->add_option("--filter-rules", filter);
    query->add_flag("--json", json);

    std::string abducibles, observe, via = "base";
    bool        minimal = false;
    auto*       abduce  = app.add_subcommand("abduce", "Explain an observation by hypotheses");
    abduce->add_option("file", file)->required();
    abduce->add_option("--abducibles", abducibles)->required();
    abduce->add_option("--observe", observe, "LIT or \"not LIT\"")->required();
    abduce->add_option("--via", via, "base, ac, sdc or wdc");
    abduce->add_flag("--minimal", minimal);
    abduce->add_flag("--json", json);

    std::vector<std::string> retract;
    bool                     wouldFlag = false, mightFlag = false, defaultVariant = false;
    auto*                    cf        = app.add_subcommand("cf", "Evaluate a counterfactual");
    cf->add_option("file", file)->required();
    cf->add_option("--retract", retract, "A fact of the program, e.g. \"p.\"")->required()->allow_extra_args(false);
    cf->add_option("--query", literal)->required();
    cf->add_flag("--would", wouldFlag);
    cf->add_flag("--might", mightFlag);
    cf->add_flag("--default", defaultVariant, "Use the default inverse completion");
    cf->add_flag("--json", json);

    std::string goal;
    auto*       neighbor = app.add_subcommand("neighbor", "Find facts that could stand in for a goal");
    neighbor->add_option("file", file)->required();
    neighbor->add_option("--goal", goal)->required();
    neighbor->add_flag("--json", json);

    auto* corpusCmd = app.add_subcommand("corpus", "Run the built-in worked examples");
    corpusCmd->add_flag("--json", json);

    std::vector<std::string> reversed = attachValues(args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Command cmd{out, reader};
    try {
        if (solve->parsed()) {
            auto report = answerSets(cmd.load(file));
            if (json) {
                out << reportJson(report).dump() << '\n';
            }
            else {
                printReport(out, report);
            }
            return requireModel && report.sets.empty() ? kExitDomain : kExitOk;
        }
        if (complete->parsed()) {
            Program program = cmd.load(file);
            std::optional<std::vector<std::size_t>> rules;
            if (not filter.empty()) {
                rules = filterArg(filter, program.size());
            }
            Program result = condasp::complete(program, modeArg("--mode", mode), rules);
            if (json) {
                Json j;
                j["program"] = formatProgram(result);
                j["rules"]   = Json::array();
                for (const auto& r : result) {
                    j["rules"].push_back(formatRule(r));
                }
                out << j.dump() << '\n';
            }
            else {
                out << result;
            }
            return kExitOk;
        }
        if (query->parsed()) {
            if (skeptical == credulous) {
                throw UsageError("query: exactly one of --skeptical or --credulous is required");
            }
            if (not filter.empty() && mode.empty()) {
                throw UsageError("--filter-rules requires --complete");
            }
            Literal lit     = literalArg("--literal", literal);
            Program program = cmd.load(file);
            if (not mode.empty()) {
                std::optional<std::vector<std::size_t>> rules;
                if (not filter.empty()) {
                    rules = filterArg(filter, program.size());
                }
                program = condasp::complete(program, modeArg("--complete", mode), rules);
            }
            SolveOptions options;
            options.extraLiterals.insert(lit);
            auto report = answerSets(program, options);
            auto result = entails(report, lit, skeptical ? Quantifier::Skeptical : Quantifier::Credulous);
            if (json) {
                Json j       = reportJson(report);
                j["vacuous"] = result.vacuous;
                j["holds"]   = result.holds;
                out << j.dump() << '\n';
            }
            else {
                printEntailment(out, result);
            }
            return kExitOk;
        }
        if (abduce->parsed()) {
            LiteralSet hypotheses;
            for (const auto& part : splitTopLevel(abducibles)) {
                hypotheses.insert(literalArg("--abducibles", part));
            }
            Observation      o = elementArg("--observe", observe);
            AbductiveProgram ap(cmd.load(file), std::move(hypotheses));
            ExplainOptions   options{minimal, {}};
            std::vector<LiteralSet>                 explanations;
            std::optional<std::vector<std::size_t>> subset;
            if (via == "base") {
                explanations = explain(ap, o, options);
            }
            else if (via == "ac" || via == "sdc" || via == "wdc") {
                auto r       = explainViaCompletion(ap, o, *parseCompletionMode(via), options);
                explanations = std::move(r.explanations);
                subset       = std::move(r.subset);
            }
            else {
                throw UsageError("--via: expected base, ac, sdc or wdc, got '" + via + "'");
            }
            if (json) {
                Json j;
                j["explanations"] = toJson(explanations);
                if (subset) {
                    Json idx = Json::array();
                    for (auto i : *subset) {
                        idx.push_back(i + 1);
                    }
                    j["rules"] = std::move(idx);
                }
                else {
                    j["rules"] = nullptr;
                }
                out << j.dump() << '\n';
            }
            else {
                printSets(out, explanations);
            }
            return kExitOk;
        }
        if (cf->parsed()) {
            if (wouldFlag == mightFlag) {
                throw UsageError("cf: exactly one of --would or --might is required");
            }
            std::vector<Rule> facts;
            for (const auto& text : retract) {
                try {
                    facts.push_back(parseRule(text));
                }
                catch (const ParseError& e) {
                    throw UsageError(std::string("--retract: ") + e.what());
                }
            }
            Literal lit     = literalArg("--query", literal);
            auto    variant = defaultVariant ? CounterfactualVariant::Default : CounterfactualVariant::Strict;
            Program omega   = counterfactualProgram(cmd.load(file), facts, variant);
            SolveOptions options;
            options.extraLiterals.insert(lit);
            auto report = answerSets(omega, options);
            auto result = entails(report, lit, wouldFlag ? Quantifier::Skeptical : Quantifier::Credulous);
            if (json) {
                Json j       = reportJson(report);
                j["vacuous"] = result.vacuous;
                j["holds"]   = result.holds;
                out << j.dump() << '\n';
            }
            else {
                printEntailment(out, result);
            }
            return kExitOk;
        }
        if (neighbor->parsed()) {
            Literal g         = literalArg("--goal", goal);
            auto    solutions = neighborhood(cmd.load(file), g);
            if (json) {
                Json j;
                j["solutions"] = toJson(solutions);
                out << j.dump() << '\n';
            }
            else {
                printSets(out, solutions);
            }
            return kExitOk;
        }
        return runCorpusCommand(out, json);
    }
    catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

} // namespace condasp
