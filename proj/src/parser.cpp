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
#include <condasp/parser.h>

#include <condasp/error.h>

#include <cctype>

namespace condasp {
namespace {

bool isSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Program program() {
        Program prog;
        for (skipLayout(); not atEnd(); skipLayout()) {
            prog.add(rule());
        }
        return prog;
    }

    Rule singleRule() {
        skipLayout();
        if (atEnd()) {
            fail("empty input", {"rule"});
        }
        Rule r = rule();
        expectEnd();
        return r;
    }

    Element singleElement() {
        skipLayout();
        Element e = element();
        expectEnd();
        return e;
    }

private:
    struct Mark {
        std::size_t pos, line, column;
    };

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected = {}) const {
        failAt(mark(), message, std::move(expected));
    }
    [[noreturn]] static void failAt(const Mark& at, const std::string& message, std::vector<std::string> expected = {}) {
        throw ParseError(at.line, at.column, message, std::move(expected));
    }

    [[nodiscard]] Mark mark() const { return {pos_, line_, column_}; }
    [[nodiscard]] bool atEnd() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (text_[pos_++] == '\n') {
            ++line_;
            column_ = 1;
        }
        else {
            ++column_;
        }
    }

    void skipLayout() {
        while (not atEnd()) {
            if (isSpace(peek())) {
                advance();
            }
            else if (peek() == '%') {
                while (not atEnd() && peek() != '\n') {
                    advance();
                }
            }
            else {
                break;
            }
        }
    }

    [[nodiscard]] std::string describeNext() const {
        if (atEnd()) {
            return "end of input";
        }
        return "'" + std::string(1, peek()) + "'";
    }

    void expectEnd() {
        skipLayout();
        if (not atEnd()) {
            fail("unexpected " + describeNext(), {"end of input"});
        }
    }

    bool acceptImplies() {
        if (peek() == ':' && peek(1) == '-') {
            advance();
            advance();
            return true;
        }
        return false;
    }

    Rule rule() {
        std::vector<Element> head, body;
        if (acceptImplies()) {
            body = elements(',');
            expectDot({"','", "'.'"});
            return Rule::fromElements({}, body);
        }
        if (peek() == '.') {
            fail("empty rule", {"literal", "'not'", "':-'"});
        }
        head = elements(';');
        if (acceptImplies()) {
            body = elements(',');
            expectDot({"','", "'.'"});
        }
        else {
            expectDot({"';'", "':-'", "'.'"});
        }
        return Rule::fromElements(head, body);
    }

    void expectDot(std::vector<std::string> expected) {
        skipLayout();
        if (peek() != '.') {
            fail("unexpected " + describeNext(), std::move(expected));
        }
        advance();
    }

    std::vector<Element> elements(char separator) {
        std::vector<Element> out;
        for (;;) {
            skipLayout();
            out.push_back(element());
            skipLayout();
            if (peek() != separator) {
                return out;
            }
            advance();
        }
    }

    //! True if the next token is the keyword `not` followed by layout.
    [[nodiscard]] bool atNotKeyword() const {
        return text_.substr(pos_, 3) == "not" && (isSpace(peek(3)) || peek(3) == '%');
    }

    Element element() {
        bool naf = false;
        if (atNotKeyword()) {
            for (int i = 0; i != 3; ++i) {
                advance();
            }
            skipLayout();
            naf = true;
            if (atNotKeyword()) {
                fail("nested default negation", {"literal"});
            }
        }
        return {literal(), naf};
    }

    Literal literal() {
        bool positive = true;
        if (peek() == '-') {
            advance();
            skipLayout();
            positive = false;
        }
        return {atom(), positive};
    }

    Atom atom() {
        Mark start = mark();
        if (not isIdentStart(peek())) {
            fail("unexpected " + describeNext(), {"literal"});
        }
        std::string name = identifier();
        if (name == "not") {
            failAt(start, "'not' must be followed by whitespace", {"literal"});
        }
        if (peek() == '(') {
            name += arguments();
        }
        return Atom(std::move(name));
    }

    std::string identifier() {
        std::string out;
        while (isIdentChar(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    std::string arguments() {
        std::string out = "(";
        advance();
        for (;;) {
            skipLayout();
            out += term();
            skipLayout();
            if (peek() == ',') {
                out += ',';
                advance();
            }
            else if (peek() == ')') {
                advance();
                return out + ")";
            }
            else {
                fail("unexpected " + describeNext(), {"','", "')'"});
            }
        }
    }

    std::string term() {
        std::string out;
        if (peek() == '-') {
            out += '-';
            advance();
        }
        if (not isIdentChar(peek())) {
            fail("unexpected " + describeNext(), {"term"});
        }
        out += identifier();
        if (peek() == '(') {
            out += arguments();
        }
        return out;
    }

    std::string_view text_;
    std::size_t      pos_    = 0;
    std::size_t      line_   = 1;
    std::size_t      column_ = 1;
};

} // namespace

Program parseProgram(std::string_view text) { return Parser(text).program(); }

Rule parseRule(std::string_view text) { return Parser(text).singleRule(); }

Element parseElement(std::string_view text) { return Parser(text).singleElement(); }

Literal parseLiteral(std::string_view text) {
    Element e = parseElement(text);
    if (e.naf) {
        throw ParseError(1, 1, "default negation is not allowed here", {"literal"});
    }
    return e.literal;
}

} // namespace condasp
