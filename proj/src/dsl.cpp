/*
   Copyright 2026 The lcac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace lcac {

const AlgebraDecl* Document::find_algebra(const std::string& name) const {
    for (const auto& d : decls)
        if (auto* a = std::get_if<AlgebraDecl>(&d); a && a->name == name) return a;
    return nullptr;
}

const ModuleDecl* Document::find_module(const std::string& name) const {
    for (const auto& d : decls)
        if (auto* m = std::get_if<ModuleDecl>(&d); m && m->name == name) return m;
    return nullptr;
}

const CocycleDecl* Document::find_cocycle(const std::string& name) const {
    for (const auto& d : decls)
        if (auto* c = std::get_if<CocycleDecl>(&d); c && c->name == name) return c;
    return nullptr;
}

namespace {

const std::set<std::string> kKeywords = {"param", "algebra", "module", "cocycle", "task",
                                         "gen",   "basis",   "bracket", "act",     "over",
                                         "with",  "torsion", "shift",   "plus",    "minus"};

struct Token {
    enum Kind { ident, number, punct, eof } kind = eof;
    std::string text;
    int line = 0, col = 0;
};

class Lexer {
   public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

   private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++pos_, ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_, ++col_;
            } else {
                break;
            }
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::eof;
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_, ++col_;
            tok_.kind = Token::ident;
            tok_.text = text_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++col_;
            tok_.kind = Token::number;
            tok_.text = text_.substr(start, pos_ - start);
        } else {
            tok_.kind = Token::punct;
            tok_.text = std::string(1, c);
            ++pos_, ++col_;
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void parse_fail(const Token& at, const std::string& msg) {
    fail(errc::parse_error, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg);
}

/// Value of a DSL expression: a scalar polynomial plus a polynomial-linear
/// combination of context symbols (generators or basis elements).
struct EvalValue {
    Polynomial scalar;
    std::map<size_t, Polynomial> syms;

    bool pure_scalar() const { return syms.empty(); }
};

class Parser {
   public:
    explicit Parser(const std::string& text) : lex_(text) { doc_.reg = make_registry(); }

    Document run() {
        while (lex_.peek().kind != Token::eof) parse_decl();
        return std::move(doc_);
    }

   private:
    Lexer lex_;
    Document doc_;
    std::set<std::string> decl_names_;

    // expression context: symbol names of the enclosing algebra/module
    std::vector<std::string> symbols_;

    Token expect_ident() {
        Token t = lex_.take();
        if (t.kind != Token::ident) parse_fail(t, "expected an identifier");
        return t;
    }

    void expect_punct(const char* p) {
        Token t = lex_.take();
        if (t.kind != Token::punct || t.text != p)
            parse_fail(t, std::string("expected '") + p + "'" + (t.kind == Token::eof ? " before end of input" : ""));
    }

    bool accept_punct(const char* p) {
        if (lex_.peek().kind == Token::punct && lex_.peek().text == p) {
            lex_.take();
            return true;
        }
        return false;
    }

    std::string fresh_name(const Token& t, const char* what) {
        if (t.kind != Token::ident) parse_fail(t, std::string("expected a ") + what + " name");
        if (kKeywords.count(t.text)) parse_fail(t, "'" + t.text + "' is a keyword");
        if (t.text[0] == '_') parse_fail(t, "names starting with '_' are reserved");
        if (t.text == "d" || t.text == "x" || t.text == "y" || t.text == "z")
            parse_fail(t, "'" + t.text + "' is a reserved variable");
        return t.text;
    }

    void parse_decl() {
        Token t = lex_.take();
        if (t.kind != Token::ident) parse_fail(t, "expected a declaration");
        if (t.text == "param")
            parse_param();
        else if (t.text == "algebra")
            parse_algebra();
        else if (t.text == "module")
            parse_module();
        else if (t.text == "cocycle")
            parse_cocycle();
        else if (t.text == "task")
            parse_task();
        else
            parse_fail(t, "unknown declaration '" + t.text + "'");
    }

    void parse_param() {
        ParamDecl d;
        while (true) {
            Token t = lex_.take();
            std::string name = fresh_name(t, "parameter");
            if (doc_.reg->find(name)) parse_fail(t, "'" + name + "' is already declared");
            doc_.reg->declare(name);
            d.names.push_back(name);
            if (accept_punct(",")) continue;
            expect_punct(";");
            break;
        }
        doc_.decls.push_back(std::move(d));
    }

    std::string decl_name(const char* what) {
        Token t = lex_.take();
        std::string name = fresh_name(t, what);
        if (doc_.reg->find(name)) parse_fail(t, "'" + name + "' is already a parameter");
        if (!decl_names_.insert(name).second) parse_fail(t, "'" + name + "' is already declared");
        return name;
    }

    std::vector<std::string> parse_name_list(const char* what) {
        std::vector<std::string> names;
        while (true) {
            Token t = lex_.take();
            std::string n = fresh_name(t, what);
            if (doc_.reg->find(n)) parse_fail(t, "'" + n + "' is already a parameter");
            for (const auto& other : names)
                if (other == n) parse_fail(t, "duplicate name '" + n + "'");
            names.push_back(n);
            if (accept_punct(",")) continue;
            expect_punct(";");
            return names;
        }
    }

    size_t resolve_symbol(const Token& t) {
        for (size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] == t.text) return i;
        parse_fail(t, "unknown name '" + t.text + "'");
    }

    // --- expressions ---

    EvalValue ev_scalar(Polynomial p) {
        EvalValue v;
        v.scalar = std::move(p);
        return v;
    }

    EvalValue ev_add(EvalValue a, const EvalValue& b, const Token& at, int sign) {
        (void)at;
        a.scalar = sign > 0 ? a.scalar + b.scalar : a.scalar - b.scalar;
        for (const auto& [k, p] : b.syms) {
            Polynomial q = sign > 0 ? a.syms[k] + p : a.syms[k] - p;
            if (q.is_zero())
                a.syms.erase(k);
            else
                a.syms[k] = std::move(q);
        }
        return a;
    }

    EvalValue ev_mul(const EvalValue& a, const EvalValue& b, const Token& at) {
        if (!a.pure_scalar() && !b.pure_scalar())
            parse_fail(at, "cannot multiply two generator expressions");
        const EvalValue& scal = a.pure_scalar() ? a : b;
        const EvalValue& other = a.pure_scalar() ? b : a;
        EvalValue out;
        out.scalar = scal.scalar * other.scalar;
        for (const auto& [k, p] : other.syms) {
            Polynomial q = scal.scalar * p;
            if (!q.is_zero()) out.syms[k] = std::move(q);
        }
        return out;
    }

    EvalValue parse_expr() {
        Token at = lex_.peek();
        int sign = 1;
        if (accept_punct("-")) sign = -1;
        EvalValue v = parse_term(at);
        if (sign < 0) v = ev_mul(v, ev_scalar(Polynomial(Rational(-1), doc_.reg)), at);
        while (true) {
            if (accept_punct("+")) {
                Token t = lex_.peek();
                v = ev_add(std::move(v), parse_term(t), t, 1);
            } else if (accept_punct("-")) {
                Token t = lex_.peek();
                v = ev_add(std::move(v), parse_term(t), t, -1);
            } else {
                return v;
            }
        }
    }

    bool starts_factor() const {
        const Token& t = lex_.peek();
        return t.kind == Token::ident || t.kind == Token::number ||
               (t.kind == Token::punct && t.text == "(");
    }

    EvalValue parse_term(const Token& at) {
        EvalValue v = parse_factor();
        while (true) {
            if (accept_punct("*")) {
                v = ev_mul(v, parse_factor(), at);
            } else if (accept_punct("/")) {
                Token t = lex_.peek();
                EvalValue d = parse_factor();
                if (!d.pure_scalar() || !d.scalar.is_constant() || d.scalar.is_zero())
                    parse_fail(t, "division is only defined by nonzero constants");
                v = ev_mul(v, ev_scalar(Polynomial(1 / d.scalar.constant_value(), doc_.reg)), at);
            } else if (starts_factor()) {
                v = ev_mul(v, parse_factor(), at);  // juxtaposition
            } else {
                return v;
            }
        }
    }

    EvalValue parse_factor() {
        EvalValue v = parse_primary();
        if (accept_punct("^")) {
            Token t = lex_.take();
            if (t.kind != Token::number) parse_fail(t, "exponent must be a nonnegative integer");
            if (!v.pure_scalar()) parse_fail(t, "cannot raise a generator expression to a power");
            v.scalar = v.scalar.pow(uint32_t(std::stoul(t.text)));
        }
        return v;
    }

    EvalValue parse_primary() {
        Token t = lex_.take();
        if (t.kind == Token::number) return ev_scalar(Polynomial(Rational(Int(t.text)), doc_.reg));
        if (t.kind == Token::punct && t.text == "(") {
            EvalValue v = parse_expr();
            expect_punct(")");
            return v;
        }
        if (t.kind == Token::punct && t.text == "-") {
            EvalValue v = parse_factor();
            return ev_mul(v, ev_scalar(Polynomial(Rational(-1), doc_.reg)), t);
        }
        if (t.kind != Token::ident) parse_fail(t, "expected a value");
        for (size_t i = 0; i < symbols_.size(); ++i)
            if (symbols_[i] == t.text) {
                EvalValue v;
                v.scalar = Polynomial(Rational(0), doc_.reg);
                v.syms[i] = Polynomial(Rational(1), doc_.reg);
                return v;
            }
        if (auto var = doc_.reg->find(t.text)) return ev_scalar(Polynomial::variable(*var, doc_.reg));
        parse_fail(t, "unknown name '" + t.text + "'");
    }

    /// Expression that must be a polynomial-combination of the context
    /// symbols (a bracket or action right-hand side).
    std::vector<Polynomial> parse_element(const Token& at, const std::vector<Variable>& allowed) {
        EvalValue v = parse_expr();
        if (!v.scalar.is_zero()) parse_fail(at, "expression must be a combination of generators (or 0)");
        std::vector<Polynomial> out(symbols_.size());
        for (auto& p : out) p = Polynomial(Rational(0), doc_.reg);
        for (const auto& [k, p] : v.syms) {
            if (!p.uses_only(allowed))
                parse_fail(at, "coefficients here may only use d, x and parameters");
            out[k] = p;
        }
        return out;
    }

    Polynomial parse_scalar_poly(const Token& at, const std::vector<Variable>& allowed) {
        EvalValue v = parse_expr();
        if (!v.pure_scalar()) parse_fail(at, "expected a polynomial expression");
        if (!v.scalar.uses_only(allowed)) parse_fail(at, "coefficients here may only use d, x and parameters");
        return v.scalar;
    }

    std::vector<Variable> structure_vars() const {
        std::vector<Variable> vs{var_del(), var_lambda()};
        for (Variable v : doc_.reg->parameters()) vs.push_back(v);
        return vs;
    }

    void parse_algebra() {
        AlgebraDecl d;
        d.name = decl_name("algebra");
        expect_punct("{");
        bool have_gens = false;
        std::vector<std::vector<bool>> given;
        auto vars = structure_vars();
        while (!accept_punct("}")) {
            Token t = lex_.take();
            if (t.kind != Token::ident) parse_fail(t, "expected 'gen' or 'bracket'");
            if (t.text == "gen") {
                if (have_gens) parse_fail(t, "generators are already declared");
                d.pres.reg = doc_.reg;
                d.pres.gens = parse_name_list("generator");
                const size_t n = d.pres.gens.size();
                d.pres.structure.assign(n, std::vector<std::vector<Polynomial>>(n, std::vector<Polynomial>(n)));
                given.assign(n, std::vector<bool>(n, false));
                symbols_ = d.pres.gens;
                have_gens = true;
            } else if (t.text == "bracket") {
                if (!have_gens) parse_fail(t, "declare generators before brackets");
                Token ta = expect_ident();
                size_t i = resolve_symbol(ta);
                Token tb = expect_ident();
                size_t j = resolve_symbol(tb);
                if (given[i][j]) parse_fail(ta, "bracket already given for this pair");
                expect_punct("=");
                Token at = lex_.peek();
                auto elem = parse_element(at, vars);
                expect_punct(";");
                d.pres.structure[i][j] = elem;
                given[i][j] = true;
                d.brackets.push_back({{i, j}, std::move(elem)});
            } else {
                parse_fail(t, "expected 'gen' or 'bracket'");
            }
        }
        if (!have_gens) parse_fail(lex_.peek(), "algebra has no generators");
        // Unwritten transposes are completed by skew-symmetry; pairs given in
        // both directions are kept as written and left to the checkers.
        const size_t n = d.pres.gens.size();
        Polynomial sub = -Polynomial::variable(var_lambda(), doc_.reg) - Polynomial::variable(var_del(), doc_.reg);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (given[i][j] && i != j && !given[j][i])
                    for (size_t k = 0; k < n; ++k)
                        d.pres.structure[j][i][k] = -d.pres.structure[i][j][k].substitute(var_lambda(), sub);
        d.pres.validate();
        symbols_.clear();
        doc_.decls.push_back(std::move(d));
    }

    void parse_module() {
        ModuleDecl d;
        d.name = decl_name("module");
        Token t = lex_.take();
        if (t.kind != Token::ident || t.text != "over") parse_fail(t, "expected 'over'");
        Token ta = expect_ident();
        const AlgebraDecl* alg = doc_.find_algebra(ta.text);
        if (!alg) parse_fail(ta, "unknown algebra '" + ta.text + "'");
        d.algebra = ta.text;
        expect_punct("{");

        bool have_basis = false;
        std::vector<std::vector<bool>> given;
        auto vars = structure_vars();
        FreeModulePresentation mod;
        mod.algebra = alg->pres;
        while (!accept_punct("}")) {
            Token s = lex_.take();
            if (s.kind != Token::ident) parse_fail(s, "expected 'basis', 'act' or 'torsion'");
            if (s.text == "torsion") {
                if (have_basis) parse_fail(s, "torsion modules take no basis declaration");
                Token at = lex_.peek();
                Polynomial u = parse_scalar_poly(at, {});
                if (!u.is_constant()) parse_fail(at, "torsion scalar must be a rational constant");
                expect_punct(";");
                d.torsion = true;
                d.torsion_u = u.constant_value();
            } else if (s.text == "basis") {
                if (have_basis) parse_fail(s, "basis is already declared");
                if (d.torsion) parse_fail(s, "torsion modules take no basis declaration");
                mod.basis = parse_name_list("basis");
                const size_t ss = mod.basis.size();
                mod.action.assign(alg->pres.rank(), std::vector<std::vector<Polynomial>>(ss, std::vector<Polynomial>(ss)));
                given.assign(alg->pres.rank(), std::vector<bool>(ss, false));
                symbols_ = mod.basis;
                have_basis = true;
            } else if (s.text == "act") {
                if (!have_basis) parse_fail(s, "declare a basis before actions");
                Token tg = expect_ident();
                size_t gi = SIZE_MAX;
                for (size_t i = 0; i < alg->pres.gens.size(); ++i)
                    if (alg->pres.gens[i] == tg.text) gi = i;
                if (gi == SIZE_MAX) parse_fail(tg, "unknown generator '" + tg.text + "'");
                Token tv = expect_ident();
                size_t vj = resolve_symbol(tv);
                if (given[gi][vj]) parse_fail(tg, "action already given for this pair");
                expect_punct("=");
                Token at = lex_.peek();
                auto elem = parse_element(at, vars);
                expect_punct(";");
                mod.action[gi][vj] = elem;
                given[gi][vj] = true;
                d.acts.push_back({{gi, vj}, std::move(elem)});
            } else {
                parse_fail(s, "expected 'basis', 'act' or 'torsion'");
            }
        }
        symbols_.clear();
        if (d.torsion) {
            d.torsion_mod = make_trivial(alg->pres, d.torsion_u);
        } else {
            if (!have_basis) parse_fail(lex_.peek(), "module has no basis");
            mod.validate();
            d.free_mod = std::move(mod);
        }
        doc_.decls.push_back(std::move(d));
    }

    void parse_cocycle() {
        CocycleDecl d;
        d.name = decl_name("cocycle");
        Token t = lex_.take();
        if (t.kind != Token::ident || t.text != "over") parse_fail(t, "expected 'over'");
        Token ta = expect_ident();
        if (!doc_.find_algebra(ta.text)) parse_fail(ta, "unknown algebra '" + ta.text + "'");
        d.algebra = ta.text;
        t = lex_.take();
        if (t.kind != Token::ident || t.text != "with") parse_fail(t, "expected 'with'");
        Token tm = expect_ident();
        const ModuleDecl* md = doc_.find_module(tm.text);
        if (!md) parse_fail(tm, "unknown module '" + tm.text + "'");
        if (md->algebra != d.algebra) parse_fail(tm, "module is not over algebra '" + d.algebra + "'");
        if (md->torsion) parse_fail(tm, "cocycles need a free rank-one module");
        d.module = tm.text;

        auto vars = structure_vars();
        Polynomial zero(Rational(0), doc_.reg);
        d.data = {zero, zero, zero};
        expect_punct("{");
        while (!accept_punct("}")) {
            Token s = lex_.take();
            if (s.kind != Token::ident || (s.text != "q1" && s.text != "q2" && s.text != "q3"))
                parse_fail(s, "expected 'q1', 'q2' or 'q3'");
            expect_punct("=");
            Token at = lex_.peek();
            Polynomial p = parse_scalar_poly(at, vars);
            expect_punct(";");
            if (s.text == "q1") d.data.q1 = p;
            if (s.text == "q2") d.data.q2 = p;
            if (s.text == "q3") d.data.q3 = p;
        }
        doc_.decls.push_back(std::move(d));
    }

    void parse_task() {
        TaskDecl d;
        Token tk = expect_ident();
        if (tk.text == "check_skew")
            d.kind = TaskKind::check_skew;
        else if (tk.text == "check_jacobi")
            d.kind = TaskKind::check_jacobi;
        else if (tk.text == "check_module")
            d.kind = TaskKind::check_module;
        else if (tk.text == "check_cocycle")
            d.kind = TaskKind::check_cocycle;
        else if (tk.text == "classify")
            d.kind = TaskKind::classify;
        else if (tk.text == "reduce")
            d.kind = TaskKind::reduce;
        else if (tk.text == "annihilation_table")
            d.kind = TaskKind::annihilation_table;
        else if (tk.text == "center")
            d.kind = TaskKind::center;
        else
            parse_fail(tk, "unknown task '" + tk.text + "'");

        Token tt = expect_ident();
        d.target = tt.text;
        switch (d.kind) {
            case TaskKind::check_skew:
            case TaskKind::check_jacobi:
            case TaskKind::classify:
            case TaskKind::annihilation_table:
            case TaskKind::center:
                if (!doc_.find_algebra(d.target)) parse_fail(tt, "unknown algebra '" + d.target + "'");
                break;
            case TaskKind::check_module:
                if (!doc_.find_module(d.target)) parse_fail(tt, "unknown module '" + d.target + "'");
                break;
            case TaskKind::check_cocycle:
                if (!doc_.find_cocycle(d.target)) parse_fail(tt, "unknown cocycle '" + d.target + "'");
                break;
            case TaskKind::reduce: {
                const AlgebraDecl* a = doc_.find_algebra(d.target);
                const CocycleDecl* c = doc_.find_cocycle(d.target);
                if (!a && !c) parse_fail(tt, "unknown extension '" + d.target + "'");
                Token ts = lex_.take();
                if (ts.kind != Token::ident || ts.text != "shift") parse_fail(ts, "expected 'shift'");
                Token tg = expect_ident();
                const AlgebraPresentation& pres = a ? a->pres : doc_.find_algebra(c->algebra)->pres;
                bool found = false;
                for (const auto& g : pres.gens)
                    if (g == tg.text) found = true;
                if (!found) parse_fail(tg, "unknown generator '" + tg.text + "'");
                d.shift_gen = tg.text;
                if (lex_.peek().kind == Token::ident &&
                    (lex_.peek().text == "plus" || lex_.peek().text == "minus"))
                    d.direction = lex_.take().text == "plus" ? 1 : -1;
                break;
            }
        }
        expect_punct(";");
        doc_.decls.push_back(std::move(d));
    }
};

std::string element_str(const std::vector<Polynomial>& elem, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < elem.size(); ++i) {
        if (elem[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (elem[i] == Polynomial(Rational(1), elem[i].registry()))
            os << names[i];
        else
            os << "(" << elem[i].str() << ") " << names[i];
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

Document parse_document(const std::string& text) { return Parser(text).run(); }

std::string task_name(const TaskDecl& t) {
    std::string name;
    switch (t.kind) {
        case TaskKind::check_skew: name = "check_skew"; break;
        case TaskKind::check_jacobi: name = "check_jacobi"; break;
        case TaskKind::check_module: name = "check_module"; break;
        case TaskKind::check_cocycle: name = "check_cocycle"; break;
        case TaskKind::classify: name = "classify"; break;
        case TaskKind::reduce: name = "reduce"; break;
        case TaskKind::annihilation_table: name = "annihilation_table"; break;
        case TaskKind::center: name = "center"; break;
    }
    name += " " + t.target;
    if (t.kind == TaskKind::reduce)
        name += " shift " + t.shift_gen + (t.direction == 1 ? " plus" : " minus");
    return name;
}

std::string serialize_document(const Document& doc) {
    std::vector<std::string> parts;
    for (const auto& decl : doc.decls) {
        std::ostringstream os;
        if (const auto* p = std::get_if<ParamDecl>(&decl)) {
            os << "param ";
            for (size_t i = 0; i < p->names.size(); ++i) os << (i ? ", " : "") << p->names[i];
            os << ";\n";
        } else if (const auto* a = std::get_if<AlgebraDecl>(&decl)) {
            os << "algebra " << a->name << " {\n  gen ";
            for (size_t i = 0; i < a->pres.gens.size(); ++i) os << (i ? ", " : "") << a->pres.gens[i];
            os << ";\n";
            for (const auto& [ij, elem] : a->brackets)
                os << "  bracket " << a->pres.gens[ij.first] << " " << a->pres.gens[ij.second] << " = "
                   << element_str(elem, a->pres.gens) << ";\n";
            os << "}\n";
        } else if (const auto* m = std::get_if<ModuleDecl>(&decl)) {
            os << "module " << m->name << " over " << m->algebra << " {\n";
            if (m->torsion) {
                os << "  torsion " << rat_str(m->torsion_u) << ";\n";
            } else {
                os << "  basis ";
                for (size_t i = 0; i < m->free_mod->basis.size(); ++i)
                    os << (i ? ", " : "") << m->free_mod->basis[i];
                os << ";\n";
                for (const auto& [ij, elem] : m->acts)
                    os << "  act " << m->free_mod->algebra.gens[ij.first] << " "
                       << m->free_mod->basis[ij.second] << " = " << element_str(elem, m->free_mod->basis)
                       << ";\n";
            }
            os << "}\n";
        } else if (const auto* c = std::get_if<CocycleDecl>(&decl)) {
            os << "cocycle " << c->name << " over " << c->algebra << " with " << c->module << " {\n";
            os << "  q1 = " << c->data.q1.str() << ";\n";
            os << "  q2 = " << c->data.q2.str() << ";\n";
            os << "  q3 = " << c->data.q3.str() << ";\n";
            os << "}\n";
        } else if (const auto* t = std::get_if<TaskDecl>(&decl)) {
            os << "task " << task_name(*t) << ";\n";
        }
        parts.push_back(os.str());
    }
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "\n";
        out += parts[i];
    }
    return out;
}

}  // namespace lcac
