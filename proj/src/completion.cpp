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
#include <condasp/completion.h>

#include <condasp/error.h>

#include <algorithm>

namespace condasp {
namespace {

ElementList canonical(ElementList list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
}

Element naf(const Literal& lit) { return {lit, true}; }
Element pos(const Literal& lit) { return {lit, false}; }

template <class Fn>
void forEachChoice(const std::vector<ElementList>& groups, Fn&& fn) {
    if (std::any_of(groups.begin(), groups.end(), [](const ElementList& g) { return g.empty(); })) {
        return;
    }
    std::vector<std::size_t> index(groups.size(), 0);
    ElementList              choice(groups.size());
    for (;;) {
        for (std::size_t i = 0; i != groups.size(); ++i) {
            choice[i] = groups[i][index[i]];
        }
        fn(choice);
        std::size_t k = groups.size();
        while (k != 0 && ++index[k - 1] == groups[k - 1].size()) {
            index[--k] = 0;
        }
        if (k == 0) {
            return;
        }
    }
}

void addUnique(std::vector<ElementList>& groups, ElementList group) {
    if (std::find(groups.begin(), groups.end(), group) == groups.end()) {
        groups.push_back(std::move(group));
    }
}

// Groups by key in order of first appearance.
template <class R>
std::vector<R> groupByKey(const std::vector<R>& parts) {
    std::vector<R> out;
    for (const auto& part : parts) {
        auto it = std::find_if(out.begin(), out.end(), [&](const R& r) { return r.key == part.key; });
        if (it == out.end()) {
            out.push_back(part);
            continue;
        }
        if constexpr (std::is_same_v<R, ConverseRule>) {
            addUnique(it->head, part.head.front());
        }
        else {
            addUnique(it->body, part.body.front());
        }
    }
    return out;
}

template <class Fn>
std::vector<InverseRule> collectInverses(std::span<const Rule> rules, Fn&& inverse) {
    std::vector<InverseRule> parts;
    for (const auto& r : rules) {
        auto inv = inverse(r);
        parts.insert(parts.end(), inv.begin(), inv.end());
    }
    return groupByKey(parts);
}

std::vector<ConverseRule> collectConverses(std::span<const Rule> rules) {
    std::vector<ConverseRule> parts;
    for (const auto& r : rules) {
        auto c = conv(r);
        parts.insert(parts.end(), c.begin(), c.end());
    }
    return parts;
}

template <class R>
std::vector<Rule> expandAll(std::span<const R> rules) {
    std::vector<Rule> out;
    for (const auto& r : rules) {
        auto plain = expand(ExtendedRule(r));
        out.insert(out.end(), plain.begin(), plain.end());
    }
    return out;
}

} // namespace

std::string_view toString(CompletionMode mode) {
    switch (mode) {
        case CompletionMode::AC  : return "ac";
        case CompletionMode::WDC : return "wdc";
        case CompletionMode::SDC : return "sdc";
        case CompletionMode::WDA : return "wda";
        case CompletionMode::SDA : return "sda";
        case CompletionMode::DAC : return "dac";
        case CompletionMode::WDDA: return "wdda";
        case CompletionMode::SDDA: return "sdda";
    }
    return "";
}

std::optional<CompletionMode> parseCompletionMode(std::string_view name) {
    for (auto mode : kAllCompletionModes) {
        if (toString(mode) == name) {
            return mode;
        }
    }
    return std::nullopt;
}

std::size_t expansionSize(const ExtendedRule& rule) {
    const auto& groups = std::visit(
        [](const auto& r) -> const std::vector<ElementList>& {
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, ConverseRule>) {
                return r.head;
            }
            else {
                return r.body;
            }
        },
        rule);
    std::size_t n = 1;
    for (const auto& g : groups) {
        n *= g.size();
    }
    return n;
}

std::vector<Rule> expand(const ExtendedRule& rule) {
    std::vector<Rule> out;
    if (const auto* c = std::get_if<ConverseRule>(&rule)) {
        ElementList body = c->guard;
        body.push_back(c->key);
        forEachChoice(c->head, [&](const ElementList& head) { out.push_back(Rule::fromElements(head, body)); });
    }
    else {
        const auto& inv  = std::get<InverseRule>(rule);
        ElementList head = {inv.key};
        forEachChoice(inv.body, [&](const ElementList& choice) {
            ElementList body = choice;
            body.insert(body.end(), inv.guard.begin(), inv.guard.end());
            out.push_back(Rule::fromElements(head, body));
        });
    }
    return out;
}

std::vector<Rule> expand(std::span<const ConverseRule> rules) { return expandAll(rules); }
std::vector<Rule> expand(std::span<const InverseRule> rules) { return expandAll(rules); }

std::vector<ConverseRule> conv(const Rule& rule) {
    std::vector<ConverseRule> out;
    if (rule.isFact()) {
        return out;
    }
    ElementList body = canonical(rule.bodyElements());
    for (const auto& h : rule.headElements()) {
        out.push_back({{body}, h, {}});
    }
    return out;
}

std::vector<ConverseRule> guardedConv(const Rule& rule) {
    ElementList guard;
    for (const auto& l : rule.bodyPos()) {
        guard.push_back(naf(l.complement()));
    }
    for (const auto& l : rule.bodyNaf()) {
        guard.push_back(naf(l));
    }
    guard    = canonical(std::move(guard));
    auto out = conv(rule);
    for (auto& c : out) {
        c.guard = guard;
    }
    return out;
}

std::vector<InverseRule> winv(const Rule& rule) {
    std::vector<InverseRule> out;
    if (rule.isFact()) {
        return out;
    }
    ElementList alternatives;
    for (const auto& l : rule.bodyPos()) {
        alternatives.push_back(naf(l));
    }
    for (const auto& l : rule.bodyNaf()) {
        alternatives.push_back(pos(l));
    }
    alternatives = canonical(std::move(alternatives));
    for (const auto& h : rule.headPos()) {
        out.push_back({naf(h), {alternatives}, {}});
    }
    for (const auto& h : rule.headNaf()) {
        out.push_back({pos(h), {alternatives}, {}});
    }
    return out;
}

std::vector<InverseRule> sinv(const Rule& rule) {
    std::vector<InverseRule> out;
    if (rule.isFact()) {
        return out;
    }
    ElementList alternatives;
    for (const auto& l : rule.bodyPos()) {
        alternatives.push_back(pos(l.complement()));
    }
    for (const auto& l : rule.bodyNaf()) {
        alternatives.push_back(pos(l));
    }
    alternatives = canonical(std::move(alternatives));
    for (const auto& h : rule.headPos()) {
        out.push_back({pos(h.complement()), {alternatives}, {}});
    }
    for (const auto& h : rule.headNaf()) {
        out.push_back({pos(h), {alternatives}, {}});
    }
    return out;
}

Rule wdc(const Rule& rule) {
    return Rule(rule.bodyNaf(), rule.bodyPos(), rule.headNaf(), rule.headPos());
}

Rule sdc(const Rule& rule) {
    LiteralSet head = rule.bodyNaf();
    for (const auto& l : rule.bodyPos()) {
        head.insert(l.complement());
    }
    LiteralSet body = rule.headNaf();
    for (const auto& l : rule.headPos()) {
        body.insert(l.complement());
    }
    return Rule(std::move(head), {}, std::move(body), {});
}

std::vector<ConverseRule> ac(std::span<const Rule> rules) { return groupByKey(collectConverses(rules)); }

std::vector<ConverseRule> dac(std::span<const Rule> rules) {
    std::vector<ConverseRule> sources;
    for (const auto& r : rules) {
        auto c = guardedConv(r);
        sources.insert(sources.end(), c.begin(), c.end());
    }
    std::vector<ConverseRule> out;
    for (const auto& group : groupByKey(sources)) {
        for (const auto& src : sources) {
            if (src.key != group.key) {
                continue;
            }
            ConverseRule r{group.head, group.key, src.guard};
            if (std::find(out.begin(), out.end(), r) == out.end()) {
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

std::vector<InverseRule> wda(std::span<const Rule> rules) { return collectInverses(rules, winv); }
std::vector<InverseRule> sda(std::span<const Rule> rules) { return collectInverses(rules, sinv); }

std::vector<InverseRule> wdda(std::span<const Rule> rules) {
    auto out = wda(rules);
    for (auto& r : out) {
        r.guard = {naf(r.key.naf ? r.key.literal : r.key.literal.complement())};
    }
    return out;
}

std::vector<InverseRule> sdda(std::span<const Rule> rules) {
    auto out = sda(rules);
    for (auto& r : out) {
        r.guard = {naf(r.key.literal.complement())};
    }
    return out;
}

std::vector<Rule> completionRules(std::span<const Rule> sources, CompletionMode mode) {
    std::vector<Rule> out;
    switch (mode) {
        case CompletionMode::AC  : return expand(std::span<const ConverseRule>(ac(sources)));
        case CompletionMode::DAC : return expand(std::span<const ConverseRule>(dac(sources)));
        case CompletionMode::WDA : return expand(std::span<const InverseRule>(wda(sources)));
        case CompletionMode::SDA : return expand(std::span<const InverseRule>(sda(sources)));
        case CompletionMode::WDDA: return expand(std::span<const InverseRule>(wdda(sources)));
        case CompletionMode::SDDA: return expand(std::span<const InverseRule>(sdda(sources)));
        case CompletionMode::WDC :
            std::transform(sources.begin(), sources.end(), std::back_inserter(out), wdc);
            break;
        case CompletionMode::SDC :
            std::transform(sources.begin(), sources.end(), std::back_inserter(out), sdc);
            break;
    }
    return out;
}

Program complete(const Program& program, CompletionMode mode, const std::optional<std::vector<std::size_t>>& filter) {
    std::vector<Rule> sources;
    if (filter) {
        for (auto i : *filter) {
            if (i >= program.size()) {
                throw BadIndex(i, program.size());
            }
            sources.push_back(program[i]);
        }
    }
    else {
        sources = program.rules();
    }
    Program out = program;
    out.append(completionRules(sources, mode));
    return out;
}

} // namespace condasp
