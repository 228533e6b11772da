#include "solvquot/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace solvquot {
namespace dsl {

namespace {

enum class Tok { ident, integer, plus, minus, star, slash, caret, lparen, rparen, eq, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    // Tokens of one logical line; empty result at end of input.
    std::vector<Token> next_line() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                advance();
                if (!out.empty()) break;
                continue;
            }
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
                continue;
            }
            int line = line_, col = col_;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num;
                while (pos_ < text_.size() &&
                       std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    num += text_[pos_];
                    advance();
                }
                out.push_back({Tok::integer, num, line, col});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string id;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                        text_[pos_] == '_')) {
                    id += text_[pos_];
                    advance();
                }
                out.push_back({Tok::ident, id, line, col});
                continue;
            }
            Tok k;
            switch (c) {
                case '+': k = Tok::plus; break;
                case '-': k = Tok::minus; break;
                case '*': k = Tok::star; break;
                case '/': k = Tok::slash; break;
                case '^': k = Tok::caret; break;
                case '(': k = Tok::lparen; break;
                case ')': k = Tok::rparen; break;
                case '=': k = Tok::eq; break;
                default:
                    throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
            }
            out.push_back({k, std::string(1, c), line, col});
            advance();
        }
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, size_t pos, const VarTableRef& tab)
        : toks_(toks), pos_(pos), tab_(tab) {}

    Poly parse() {
        Poly p = expr();
        if (!at_end())
            throw ParseError(cur().line, cur().col, "unexpected token '" + cur().text + "'");
        return p;
    }

private:
    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& cur() const {
        if (at_end()) throw ParseError(0, 0, "unexpected end of expression");
        return toks_[pos_];
    }
    bool accept(Tok k) {
        if (!at_end() && toks_[pos_].kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly p = term();
        while (!at_end()) {
            if (accept(Tok::plus))
                p = p + term();
            else if (accept(Tok::minus))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (!at_end()) {
            if (accept(Tok::star)) {
                p = p * factor();
            } else if (accept(Tok::slash)) {
                Token t = cur();
                Poly d = factor();
                auto cv = d.constant_value();
                if (!cv || *cv == 0)
                    throw ParseError(t.line, t.col, "division only by nonzero constants");
                p = p.scaled(tab_->field().inv(*cv));
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        if (accept(Tok::minus)) return -factor();
        Poly base = atom();
        if (accept(Tok::caret)) {
            bool neg = accept(Tok::minus);
            Token t = cur();
            if (t.kind != Tok::integer)
                throw ParseError(t.line, t.col, "expected an integer exponent");
            ++pos_;
            long e = std::stol(t.text);
            if (!neg) return base.pow(e);
            // Negative exponents only on single Laurent variables.
            if (base.term_count() == 1) {
                const auto& [m, c] = *base.terms().begin();
                int var = -1, nonzero = 0;
                for (int i = 0; i < m.size(); ++i)
                    if (m[i] != 0) {
                        ++nonzero;
                        var = i;
                    }
                if (c == 1 && nonzero == 1 && m[var] == 1 && tab_->laurent(var)) {
                    Monomial mm(tab_->size());
                    mm.set(var, static_cast<int>(-e));
                    return Poly::monomial(tab_, mm, tab_->field().one());
                }
            }
            throw ParseError(t.line, t.col,
                             "negative exponents are only allowed on torus variables");
        }
        return base;
    }

    Poly atom() {
        const Token& t = cur();
        if (accept(Tok::lparen)) {
            Poly p = expr();
            if (!accept(Tok::rparen))
                throw ParseError(t.line, t.col, "unbalanced parenthesis");
            return p;
        }
        if (t.kind == Tok::integer) {
            ++pos_;
            return Poly::constant(tab_, tab_->field().reduce(mpq_class(t.text)));
        }
        if (t.kind == Tok::ident) {
            auto v = tab_->find(t.text);
            if (!v || tab_->kind(*v) == VarKind::auxiliary ||
                tab_->kind(*v) == VarKind::slice_laurent)
                throw ParseError(t.line, t.col, "unknown variable '" + t.text + "'");
            ++pos_;
            return Poly::variable(tab_, *v);
        }
        throw ParseError(t.line, t.col, "expected a number, variable or '('");
    }

    const std::vector<Token>& toks_;
    size_t pos_;
    VarTableRef tab_;
};

std::vector<std::string> name_list(const std::vector<Token>& toks, size_t from) {
    std::vector<std::string> out;
    for (size_t i = from; i < toks.size(); ++i) {
        if (toks[i].kind != Tok::ident)
            throw ParseError(toks[i].line, toks[i].col, "expected a variable name");
        out.push_back(toks[i].text);
    }
    if (out.empty()) {
        const Token& t = toks[from - 1];
        throw ParseError(t.line, t.col, "expected at least one variable name");
    }
    return out;
}

} // namespace

Poly parse_expression(const std::string& text, const VarTableRef& table) {
    Lexer lex(text);
    std::vector<Token> toks = lex.next_line();
    if (toks.empty()) throw ParseError(1, 1, "empty expression");
    return ExprParser(toks, 0, table).parse();
}

ActionSpec parse(const std::string& text) {
    Lexer lex(text);
    std::vector<std::vector<Token>> lines;
    for (;;) {
        auto line = lex.next_line();
        if (line.empty()) break;
        lines.push_back(std::move(line));
    }

    std::optional<Field> field;
    std::vector<std::string> base, additive, torus;
    std::vector<std::pair<std::string, std::vector<Token>>> char_lines, map_lines;

    for (const auto& line : lines) {
        const Token& head = line.front();
        if (head.kind != Tok::ident)
            throw ParseError(head.line, head.col, "expected a statement keyword");
        const std::string& kw = head.text;
        if (kw == "field") {
            if (field) throw ParseError(head.line, head.col, "duplicate field line");
            if (line.size() >= 2 && line[1].kind == Tok::ident && line[1].text == "Q" &&
                line.size() == 2) {
                field = Field::rationals();
            } else if (line.size() == 3 && line[1].kind == Tok::ident &&
                       line[1].text == "Fp" && line[2].kind == Tok::integer) {
                field = Field::prime_field(std::stoul(line[2].text));
            } else {
                throw ParseError(head.line, head.col, "expected 'field Q' or 'field Fp <p>'");
            }
        } else if (kw == "vars") {
            if (!base.empty()) throw ParseError(head.line, head.col, "duplicate vars line");
            base = name_list(line, 1);
        } else if (kw == "unipotent") {
            if (!additive.empty())
                throw ParseError(head.line, head.col, "duplicate unipotent line");
            additive = name_list(line, 1);
        } else if (kw == "torus") {
            if (!torus.empty()) throw ParseError(head.line, head.col, "duplicate torus line");
            torus = name_list(line, 1);
        } else if (kw == "char" || kw == "map") {
            if (line.size() < 3 || line[1].kind != Tok::ident || line[2].kind != Tok::eq)
                throw ParseError(head.line, head.col, "expected '" + kw + " <name> = <expr>'");
            std::vector<Token> rhs(line.begin() + 3, line.end());
            if (rhs.empty())
                throw ParseError(line[2].line, line[2].col, "missing right-hand side");
            auto& dst = (kw == "char") ? char_lines : map_lines;
            dst.emplace_back(line[1].text, std::move(rhs));
        } else {
            throw ParseError(head.line, head.col, "unknown statement '" + kw + "'");
        }
    }

    if (!field) throw ParseError(1, 1, "missing field line");
    if (base.empty()) throw ParseError(1, 1, "missing vars line");

    int check_add = -1, check_tor = -1, inv_var = -1;
    VarTableRef table =
        action_input_table(*field, base, additive, torus, &check_add, &check_tor, &inv_var);

    // Characters: default trivial, overridable per additive variable.
    std::vector<Character> chars(additive.size(), Character::trivial(torus.size()));
    for (const auto& [name, rhs] : char_lines) {
        auto it = std::find(additive.begin(), additive.end(), name);
        if (it == additive.end())
            throw ParseError(rhs.front().line, rhs.front().col,
                             "char line for a non-additive variable '" + name + "'");
        Poly p = ExprParser(rhs, 0, table).parse();
        if (p.term_count() != 1 || p.leading_coeff() != 1)
            throw ParseError(rhs.front().line, rhs.front().col,
                             "characters must be monomials with coefficient 1");
        Monomial m = p.leading_monomial();
        Character chi(torus.size());
        for (size_t j = 0; j < torus.size(); ++j) {
            int tv = *table->find(torus[j]);
            chi.set(j, m[tv]);
            m.set(tv, 0);
        }
        if (!m.is_unit())
            throw ParseError(rhs.front().line, rhs.front().col,
                             "characters may only involve torus variables");
        chars[it - additive.begin()] = chi;
    }

    std::vector<Poly> images;
    for (const auto& name : base) {
        const std::vector<Token>* rhs = nullptr;
        for (const auto& [n, r] : map_lines)
            if (n == name) {
                if (rhs) throw ParseError(r.front().line, r.front().col,
                                          "duplicate map line for '" + name + "'");
                rhs = &r;
            }
        if (!rhs) throw ParseError(1, 1, "missing map line for '" + name + "'");
        images.push_back(ExprParser(*rhs, 0, table).parse());
    }
    for (const auto& [n, r] : map_lines)
        if (std::find(base.begin(), base.end(), n) == base.end())
            throw ParseError(r.front().line, r.front().col,
                             "map line for undeclared base variable '" + n + "'");

    return make_action_spec(*field, base, additive, torus, std::move(chars),
                            std::move(images));
}

std::string print(const ActionSpec& spec) {
    std::ostringstream out;
    if (spec.field.is_rationals())
        out << "field Q\n";
    else
        out << "field Fp " << spec.field.characteristic() << "\n";
    out << "vars";
    for (int v : spec.base_vars) out << " " << spec.table->name(v);
    out << "\n";
    if (spec.l() > 0) {
        out << "unipotent";
        for (int v : spec.additive_vars) out << " " << spec.table->name(v);
        out << "\n";
    }
    if (spec.m() > 0) {
        out << "torus";
        for (int v : spec.torus_vars) out << " " << spec.table->name(v);
        out << "\n";
        for (int i = 0; i < spec.l(); ++i)
            out << "char " << spec.table->name(spec.additive_vars[i]) << " = "
                << spec.character_to_string(spec.characters[i]) << "\n";
    }
    for (int k = 0; k < spec.n(); ++k)
        out << "map " << spec.table->name(spec.base_vars[k]) << " = "
            << spec.images[k].to_string() << "\n";
    return out.str();
}

std::string localized_to_string(const Localized& a) {
    if (a.is_zero()) return "0";
    if (a.denom_exp() == 0) return a.num().to_string();
    // Clear rational content on both sides so the only '/' is the separator.
    Poly den_raw = a.denom()->pow(a.denom_exp());
    mpz_class lcm(1);
    if (a.num().field().is_rationals()) {
        for (const auto& [m, c] : a.num().terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        for (const auto& [m, c] : den_raw.terms())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    FieldElem scale{mpq_class(lcm)};
    Poly num = a.num().scaled(scale);
    Poly den = den_raw.scaled(scale);

    auto needs_parens = [](const Poly& p, bool numerator) {
        if (p.term_count() > 1) return true;
        if (numerator) return false;
        const auto& [m, c] = *p.terms().begin();
        if (c != 1) return true;
        int nonzero = 0;
        for (int i = 0; i < m.size(); ++i)
            if (m[i] != 0) ++nonzero;
        return nonzero > 1 || m.is_unit();
    };
    std::string ns = num.to_string();
    std::string ds = den.to_string();
    if (needs_parens(num, true)) ns = "(" + ns + ")";
    if (needs_parens(den, false)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

bool spec_equal(const ActionSpec& a, const ActionSpec& b) {
    if (a.field != b.field) return false;
    auto names = [](const ActionSpec& s, const std::vector<int>& idx) {
        std::vector<std::string> out;
        for (int v : idx) out.push_back(s.table->name(v));
        return out;
    };
    if (names(a, a.base_vars) != names(b, b.base_vars)) return false;
    if (names(a, a.additive_vars) != names(b, b.additive_vars)) return false;
    if (names(a, a.torus_vars) != names(b, b.torus_vars)) return false;
    if (!(a.characters == b.characters)) return false;
    for (int k = 0; k < a.n(); ++k)
        if (a.images[k] != b.images[k]) return false;
    return true;
}

} // namespace dsl
} // namespace solvquot
