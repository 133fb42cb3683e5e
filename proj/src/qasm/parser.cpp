// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "diaq/error.hpp"
#include "diaq/qasm/qasm.hpp"

namespace diaq::qasm {

Expr Expr::number(double v) {
    Expr e;
    e.kind = Kind::number;
    e.value = v;
    return e;
}

Expr Expr::pi() {
    Expr e;
    e.kind = Kind::pi;
    return e;
}

Expr Expr::param(std::string name) {
    Expr e;
    e.kind = Kind::param;
    e.name = std::move(name);
    return e;
}

Expr Expr::negate(Expr inner) {
    Expr e;
    e.kind = Kind::negate;
    e.args.push_back(std::move(inner));
    return e;
}

Expr Expr::binary(char op, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = Kind::binary;
    e.op = op;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
}

Expr Expr::call(std::string fn, Expr arg) {
    Expr e;
    e.kind = Kind::call;
    e.name = std::move(fn);
    e.args.push_back(std::move(arg));
    return e;
}

namespace {

bool is_function(std::string_view name) {
    return name == "sin" || name == "cos" || name == "tan" || name == "exp" ||
           name == "ln" || name == "sqrt";
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { ident, integer, real, string, symbol, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    double number = 0.0;
    SourceLoc loc;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space();
        Token t;
        t.loc = {line_, col_};
        if (pos_ >= src_.size()) {
            t.kind = Tok::end;
            return t;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_')) {
                advance();
            }
            t.kind = Tok::ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            return lex_number(t);
        }
        if (c == '"') {
            advance();
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"' &&
                   src_[pos_] != '\n') {
                advance();
            }
            if (pos_ >= src_.size() || src_[pos_] != '"') {
                throw ParseError("unterminated string", t.loc.line, t.loc.col);
            }
            t.kind = Tok::string;
            t.text = std::string(src_.substr(start, pos_ - start));
            advance();
            return t;
        }
        if (c == '-' && peek(1) == '>') {
            advance();
            advance();
            t.kind = Tok::symbol;
            t.text = "->";
            return t;
        }
        if (c == '=' && peek(1) == '=') {
            advance();
            advance();
            t.kind = Tok::symbol;
            t.text = "==";
            return t;
        }
        static constexpr std::string_view kSymbols = ";,[](){}+-*/^>";
        if (kSymbols.find(c) != std::string_view::npos) {
            advance();
            t.kind = Tok::symbol;
            t.text = std::string(1, c);
            return t;
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         t.loc.line, t.loc.col);
    }

  private:
    [[nodiscard]] char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    Token lex_number(Token &t) {
        const std::size_t start = pos_;
        bool real = false;
        auto digits = [&] {
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                advance();
            }
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            real = true;
            advance();
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            const char sign = peek(1);
            const bool has_sign = sign == '+' || sign == '-';
            if (std::isdigit(static_cast<unsigned char>(peek(has_sign ? 2 : 1)))) {
                real = true;
                advance();
                if (has_sign) {
                    advance();
                }
                digits();
            }
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        t.kind = real ? Tok::real : Tok::integer;
        const char *first = t.text.data();
        const char *last = first + t.text.size();
        const auto res = std::from_chars(first, last, t.number);
        if (res.ec != std::errc{} || res.ptr != last) {
            throw ParseError("malformed number '" + t.text + "'", t.loc.line,
                             t.loc.col);
        }
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) { cur_ = lex_.next(); }

    Program program() {
        Program prog;
        if (is_ident("OPENQASM")) {
            const Token kw = take();
            const Token ver = take();
            if (ver.kind != Tok::real && ver.kind != Tok::integer) {
                fail("expected a version number", ver);
            }
            if (ver.number < 2.0 || ver.number >= 3.0) {
                throw UnsupportedFeature("OPENQASM " + ver.text, kw.loc.line,
                                         kw.loc.col);
            }
            prog.version = ver.text;
            expect(";");
        }
        while (cur_.kind != Tok::end) {
            prog.statements.push_back(statement());
        }
        return prog;
    }

  private:
    [[noreturn]] static void fail(const std::string &msg, const Token &at) {
        throw ParseError(msg, at.loc.line, at.loc.col);
    }

    [[nodiscard]] bool is_symbol(std::string_view s) const {
        return cur_.kind == Tok::symbol && cur_.text == s;
    }
    [[nodiscard]] bool is_ident(std::string_view s) const {
        return cur_.kind == Tok::ident && cur_.text == s;
    }

    Token take() {
        Token t = std::move(cur_);
        cur_ = lex_.next();
        return t;
    }

    Token expect(std::string_view symbol) {
        if (!is_symbol(symbol)) {
            fail("expected '" + std::string(symbol) + "' but found " +
                     describe(cur_),
                 cur_);
        }
        return take();
    }

    Token expect_ident(std::string_view what) {
        if (cur_.kind != Tok::ident) {
            fail("expected " + std::string(what) + " but found " +
                     describe(cur_),
                 cur_);
        }
        return take();
    }

    int expect_int(std::string_view what) {
        if (cur_.kind != Tok::integer) {
            fail("expected " + std::string(what) + " but found " +
                     describe(cur_),
                 cur_);
        }
        const Token t = take();
        if (t.number > 1e9) {
            fail("integer too large", t);
        }
        return static_cast<int>(t.number);
    }

    static std::string describe(const Token &t) {
        switch (t.kind) {
        case Tok::end:
            return "end of input";
        case Tok::string:
            return "string \"" + t.text + "\"";
        default:
            return "'" + t.text + "'";
        }
    }

    Statement statement() {
        if (cur_.kind != Tok::ident) {
            fail("expected a statement but found " + describe(cur_), cur_);
        }
        const std::string &kw = cur_.text;
        if (kw == "if" || kw == "reset" || kw == "opaque") {
            throw UnsupportedFeature(kw, cur_.loc.line, cur_.loc.col);
        }
        if (kw == "OPENQASM") {
            fail("version header must come first", cur_);
        }
        if (kw == "include") {
            const Token t = take();
            if (cur_.kind != Tok::string) {
                fail("expected a file name string", cur_);
            }
            const Token path = take();
            expect(";");
            if (path.text != "qelib1.inc") {
                throw UnsupportedFeature("include \"" + path.text + "\"",
                                         t.loc.line, t.loc.col);
            }
            return Include{path.text, t.loc};
        }
        if (kw == "qreg" || kw == "creg") {
            const Token t = take();
            RegDecl decl;
            decl.quantum = t.text == "qreg";
            decl.loc = t.loc;
            decl.name = expect_ident("a register name").text;
            expect("[");
            decl.size = expect_int("a register size");
            expect("]");
            expect(";");
            if (decl.size < 1) {
                fail("register size must be positive", t);
            }
            return decl;
        }
        if (kw == "gate") {
            return gate_def();
        }
        if (kw == "barrier") {
            const Token t = take();
            Barrier b;
            b.loc = t.loc;
            b.args = operand_list(true);
            expect(";");
            return b;
        }
        if (kw == "measure") {
            const Token t = take();
            Measure m;
            m.loc = t.loc;
            m.qubit = operand(true);
            expect("->");
            m.target = operand(true);
            expect(";");
            return m;
        }
        return gate_call(true);
    }

    GateDef gate_def() {
        const Token t = take();
        GateDef def;
        def.loc = t.loc;
        def.name = expect_ident("a gate name").text;
        if (is_symbol("(")) {
            take();
            if (!is_symbol(")")) {
                def.params.push_back(expect_ident("a parameter name").text);
                while (is_symbol(",")) {
                    take();
                    def.params.push_back(expect_ident("a parameter name").text);
                }
            }
            expect(")");
        }
        def.qubits.push_back(expect_ident("a qubit name").text);
        while (is_symbol(",")) {
            take();
            def.qubits.push_back(expect_ident("a qubit name").text);
        }
        expect("{");
        while (!is_symbol("}")) {
            if (cur_.kind == Tok::end) {
                fail("unterminated gate body", cur_);
            }
            if (is_ident("barrier")) {
                const Token b = take();
                Barrier bar;
                bar.loc = b.loc;
                bar.args = operand_list(false);
                expect(";");
                def.body.emplace_back(std::move(bar));
            } else if (is_ident("if") || is_ident("reset") ||
                       is_ident("measure") || is_ident("opaque")) {
                throw UnsupportedFeature(cur_.text + " inside gate body",
                                         cur_.loc.line, cur_.loc.col);
            } else {
                def.body.emplace_back(gate_call(false));
            }
        }
        expect("}");
        return def;
    }

    GateCall gate_call(bool indexed) {
        const Token name = expect_ident("a gate name");
        GateCall call;
        call.name = name.text;
        call.loc = name.loc;
        if (is_symbol("(")) {
            take();
            if (!is_symbol(")")) {
                call.params.push_back(expr());
                while (is_symbol(",")) {
                    take();
                    call.params.push_back(expr());
                }
            }
            expect(")");
        }
        call.args = operand_list(indexed);
        expect(";");
        return call;
    }

    std::vector<Operand> operand_list(bool indexed) {
        std::vector<Operand> out;
        out.push_back(operand(indexed));
        while (is_symbol(",")) {
            take();
            out.push_back(operand(indexed));
        }
        return out;
    }

    Operand operand(bool indexed) {
        const Token name = expect_ident("a register or qubit name");
        Operand op;
        op.reg = name.text;
        op.loc = name.loc;
        if (is_symbol("[")) {
            if (!indexed) {
                fail("indexing is not allowed inside a gate body", cur_);
            }
            take();
            op.index = expect_int("a register index");
            expect("]");
        }
        return op;
    }

    // expr   := term (('+'|'-') term)*
    // term   := unary (('*'|'/') unary)*
    // unary  := '-' unary | power
    // power  := atom ('^' unary)?
    Expr expr() {
        Expr lhs = term();
        while (is_symbol("+") || is_symbol("-")) {
            const Token op = take();
            Expr rhs = term();
            lhs = Expr::binary(op.text[0], std::move(lhs), std::move(rhs));
            lhs.loc = op.loc;
        }
        return lhs;
    }

    Expr term() {
        Expr lhs = unary();
        while (is_symbol("*") || is_symbol("/")) {
            const Token op = take();
            Expr rhs = unary();
            lhs = Expr::binary(op.text[0], std::move(lhs), std::move(rhs));
            lhs.loc = op.loc;
        }
        return lhs;
    }

    Expr unary() {
        if (is_symbol("-")) {
            const Token op = take();
            Expr e = Expr::negate(unary());
            e.loc = op.loc;
            return e;
        }
        if (is_symbol("+")) {
            take();
            return unary();
        }
        return power();
    }

    Expr power() {
        Expr base = atom();
        if (is_symbol("^")) {
            const Token op = take();
            Expr e = Expr::binary('^', std::move(base), unary());
            e.loc = op.loc;
            return e;
        }
        return base;
    }

    Expr atom() {
        const Token t = cur_;
        if (t.kind == Tok::integer || t.kind == Tok::real) {
            take();
            Expr e = Expr::number(t.number);
            e.loc = t.loc;
            return e;
        }
        if (t.kind == Tok::ident) {
            take();
            Expr e;
            if (t.text == "pi") {
                e = Expr::pi();
            } else if (is_function(t.text) && is_symbol("(")) {
                take();
                Expr arg = expr();
                expect(")");
                e = Expr::call(t.text, std::move(arg));
            } else {
                e = Expr::param(t.text);
            }
            e.loc = t.loc;
            return e;
        }
        if (is_symbol("(")) {
            take();
            Expr e = expr();
            expect(")");
            return e;
        }
        fail("expected an expression but found " + describe(t), t);
    }

    Lexer lex_;
    Token cur_;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::binary:
        switch (e.op) {
        case '+':
        case '-':
            return 1;
        case '*':
        case '/':
            return 2;
        default:
            return 4;
        }
    case Expr::Kind::negate:
        return 3;
    default:
        return 5;
    }
}

void print_expr(std::ostream &os, const Expr &e);

void print_child(std::ostream &os, const Expr &child, bool parens) {
    if (parens) {
        os << '(';
    }
    print_expr(os, child);
    if (parens) {
        os << ')';
    }
}

void print_number(std::ostream &os, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
    os << text;
}

void print_expr(std::ostream &os, const Expr &e) {
    switch (e.kind) {
    case Expr::Kind::number:
        print_number(os, e.value);
        return;
    case Expr::Kind::pi:
        os << "pi";
        return;
    case Expr::Kind::param:
        os << e.name;
        return;
    case Expr::Kind::negate:
        os << '-';
        print_child(os, e.args[0], precedence(e.args[0]) < 3);
        return;
    case Expr::Kind::call:
        os << e.name << '(';
        print_expr(os, e.args[0]);
        os << ')';
        return;
    case Expr::Kind::binary: {
        const int p = precedence(e);
        if (e.op == '^') {
            print_child(os, e.args[0], precedence(e.args[0]) <= p);
            os << '^';
            print_child(os, e.args[1], precedence(e.args[1]) < 3);
        } else {
            print_child(os, e.args[0], precedence(e.args[0]) < p);
            os << ' ' << e.op << ' ';
            print_child(os, e.args[1], precedence(e.args[1]) <= p);
        }
        return;
    }
    }
}

void print_operand(std::ostream &os, const Operand &op) {
    os << op.reg;
    if (op.index) {
        os << '[' << *op.index << ']';
    }
}

template <class List> void print_operands(std::ostream &os, const List &ops) {
    for (std::size_t i = 0; i < ops.size(); ++i) {
        os << (i == 0 ? "" : ",");
        print_operand(os, ops[i]);
    }
}

void print_call(std::ostream &os, const GateCall &call) {
    os << call.name;
    if (!call.params.empty()) {
        os << '(';
        for (std::size_t i = 0; i < call.params.size(); ++i) {
            os << (i == 0 ? "" : ",");
            print_expr(os, call.params[i]);
        }
        os << ')';
    }
    os << ' ';
    print_operands(os, call.args);
    os << ';';
}

struct StatementPrinter {
    std::ostream &os;

    void operator()(const Include &s) const {
        os << "include \"" << s.path << "\";\n";
    }
    void operator()(const RegDecl &s) const {
        os << (s.quantum ? "qreg " : "creg ") << s.name << '[' << s.size
           << "];\n";
    }
    void operator()(const GateDef &s) const {
        os << "gate " << s.name;
        if (!s.params.empty()) {
            os << '(';
            for (std::size_t i = 0; i < s.params.size(); ++i) {
                os << (i == 0 ? "" : ",") << s.params[i];
            }
            os << ')';
        }
        os << ' ';
        for (std::size_t i = 0; i < s.qubits.size(); ++i) {
            os << (i == 0 ? "" : ",") << s.qubits[i];
        }
        os << " {\n";
        for (const auto &stmt : s.body) {
            os << "  ";
            if (const auto *call = std::get_if<GateCall>(&stmt)) {
                print_call(os, *call);
            } else {
                os << "barrier ";
                print_operands(os, std::get<Barrier>(stmt).args);
                os << ';';
            }
            os << '\n';
        }
        os << "}\n";
    }
    void operator()(const GateCall &s) const {
        print_call(os, s);
        os << '\n';
    }
    void operator()(const Barrier &s) const {
        os << "barrier ";
        print_operands(os, s.args);
        os << ";\n";
    }
    void operator()(const Measure &s) const {
        os << "measure ";
        print_operand(os, s.qubit);
        os << " -> ";
        print_operand(os, s.target);
        os << ";\n";
    }
};

} // namespace

Program parse(std::string_view source) { return Parser(source).program(); }

std::string print(const Expr &expr) {
    std::ostringstream os;
    print_expr(os, expr);
    return os.str();
}

std::string print(const Program &program) {
    std::ostringstream os;
    os << "OPENQASM " << program.version << ";\n";
    for (const auto &stmt : program.statements) {
        std::visit(StatementPrinter{os}, stmt);
    }
    return os.str();
}

double evaluate(const Expr &e, const std::map<std::string, double> &bindings) {
    double v = 0.0;
    switch (e.kind) {
    case Expr::Kind::number:
        v = e.value;
        break;
    case Expr::Kind::pi:
        v = std::numbers::pi;
        break;
    case Expr::Kind::param: {
        auto it = bindings.find(e.name);
        if (it == bindings.end()) {
            throw RangeError("unbound parameter '" + e.name + "'");
        }
        v = it->second;
        break;
    }
    case Expr::Kind::negate:
        v = -evaluate(e.args[0], bindings);
        break;
    case Expr::Kind::call: {
        const double a = evaluate(e.args[0], bindings);
        if (e.name == "sin") {
            v = std::sin(a);
        } else if (e.name == "cos") {
            v = std::cos(a);
        } else if (e.name == "tan") {
            v = std::tan(a);
        } else if (e.name == "exp") {
            v = std::exp(a);
        } else if (e.name == "ln") {
            v = std::log(a);
        } else if (e.name == "sqrt") {
            v = std::sqrt(a);
        } else {
            throw RangeError("unknown function '" + e.name + "'");
        }
        break;
    }
    case Expr::Kind::binary: {
        const double a = evaluate(e.args[0], bindings);
        const double b = evaluate(e.args[1], bindings);
        switch (e.op) {
        case '+':
            v = a + b;
            break;
        case '-':
            v = a - b;
            break;
        case '*':
            v = a * b;
            break;
        case '/':
            v = a / b;
            break;
        case '^':
            v = std::pow(a, b);
            break;
        default:
            throw RangeError(std::string("unknown operator '") + e.op + "'");
        }
        break;
    }
    }
    if (!std::isfinite(v)) {
        throw RangeError("expression '" + print(e) + "' is not finite");
    }
    return v;
}

} // namespace diaq::qasm
