#include "statel/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace statel {

namespace {

enum class Tok {
    Ident,
    Number,
    LParen,
    RParen,
    Dot,
    Pipe,
    LBracket,
    RBracket,
    Comma,
    Arrow,  // =>
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/'; }

class Lexer {
public:
    Lexer(std::string_view text, int line) : text_(text), line_(line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            int col = static_cast<int>(pos_) + 1;
            if (pos_ >= text_.size() || text_[pos_] == '#') {
                out.push_back({Tok::End, "", {line_, col, 0}});
                return out;
            }
            char c = text_[pos_];
            if (ident_start(c)) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
                out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)),
                               {line_, col, static_cast<int>(pos_ - start)}});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && number_char(text_[pos_])) ++pos_;
                out.push_back({Tok::Number, std::string(text_.substr(start, pos_ - start)),
                               {line_, col, static_cast<int>(pos_ - start)}});
                continue;
            }
            if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                out.push_back({Tok::Arrow, "=>", {line_, col, 2}});
                pos_ += 2;
                continue;
            }
            Tok kind;
            switch (c) {
                case '(': kind = Tok::LParen; break;
                case ')': kind = Tok::RParen; break;
                case '.': kind = Tok::Dot; break;
                case '|': kind = Tok::Pipe; break;
                case '[': kind = Tok::LBracket; break;
                case ']': kind = Tok::RBracket; break;
                case ',': kind = Tok::Comma; break;
                default:
                    throw ParseError({line_, col, 1},
                                     std::string("unexpected character '") + c + "'");
            }
            out.push_back({kind, std::string(1, c), {line_, col, 1}});
            ++pos_;
        }
    }

private:
    void skip_space() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string_view text_;
    int line_;
    std::size_t pos_ = 0;
};

bool is_keyword(const std::string& s) {
    return s == "top" || s == "not" || s == "and" || s == "exists" || s == "or" ||
           s == "forall" || s == "bottom";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ConceptPtr concept_expr() {
        ConceptPtr c = and_expr();
        while (at_ident("or")) {
            advance();
            c = Concept::disj(c, and_expr());
        }
        return c;
    }

    Rational rational() {
        const Token& t = peek();
        if (t.kind != Tok::Number)
            throw ParseError(t.span, "expected a rational number, found '" + t.text + "'",
                             {"number"});
        advance();
        try {
            return Rational::parse(t.text);
        } catch (const Error& e) {
            throw ParseError(t.span, e.what());
        }
    }

    const Token& peek() const { return toks_[idx_]; }
    void advance() { if (idx_ + 1 < toks_.size()) ++idx_; }

    bool at(Tok k) const { return peek().kind == k; }
    bool at_ident(std::string_view s) const {
        return peek().kind == Tok::Ident && peek().text == s;
    }

    void expect(Tok k, const char* what) {
        if (!at(k))
            throw ParseError(peek().span, std::string("expected ") + what + ", found '" +
                             (peek().kind == Tok::End ? "end of input" : peek().text) + "'",
                             {what});
        advance();
    }

    void expect_end() {
        if (!at(Tok::End))
            throw ParseError(peek().span, "unexpected trailing input '" + peek().text + "'");
    }

private:
    ConceptPtr and_expr() {
        ConceptPtr c = unary();
        while (at_ident("and")) {
            advance();
            c = Concept::conj(c, unary());
        }
        return c;
    }

    ConceptPtr unary() {
        const Token& t = peek();
        if (t.kind == Tok::Ident) {
            if (t.text == "not") {
                advance();
                return Concept::negation(unary());
            }
            if (t.text == "exists" || t.text == "forall") {
                bool is_exists = t.text == "exists";
                advance();
                const Token& role = peek();
                if (role.kind != Tok::Ident || is_keyword(role.text))
                    throw ParseError(role.span, "expected a role name", {"role name"});
                advance();
                expect(Tok::Dot, "'.'");
                ConceptPtr filler = unary();
                Symbol r = Symbol::intern(role.text);
                return is_exists ? Concept::exists(r, filler) : Concept::forall(r, filler);
            }
            if (t.text == "top") {
                advance();
                return Concept::top();
            }
            if (t.text == "bottom") {
                advance();
                return Concept::bottom();
            }
            if (is_keyword(t.text))
                throw ParseError(t.span, "unexpected keyword '" + t.text + "'");
            advance();
            return Concept::name(Symbol::intern(t.text));
        }
        if (t.kind == Tok::LParen) {
            advance();
            ConceptPtr c = concept_expr();
            expect(Tok::RParen, "')'");
            return c;
        }
        throw ParseError(t.span, "expected a concept, found '" +
                         (t.kind == Tok::End ? "end of input" : t.text) + "'",
                         {"concept"});
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

Parser make_parser(std::string_view text, int line = 1) {
    return Parser(Lexer(text, line).run());
}

std::pair<Rational, Rational> parse_bounds(Parser& p) {
    p.expect(Tok::LBracket, "'['");
    Rational lo = p.rational();
    p.expect(Tok::Comma, "','");
    Rational hi = p.rational();
    p.expect(Tok::RBracket, "']'");
    return {lo, hi};
}

}  // namespace

ConceptPtr parse_concept(std::string_view text) {
    Parser p = make_parser(text);
    ConceptPtr c = p.concept_expr();
    p.expect_end();
    return c;
}

Query parse_query(std::string_view text) {
    Parser p = make_parser(text);
    ConceptPtr lhs = p.concept_expr();
    p.expect(Tok::Pipe, "'|'");
    ConceptPtr rhs = p.concept_expr();
    p.expect_end();
    return Query{lhs, rhs};
}

Conditional parse_conditional(std::string_view text) {
    Parser p = make_parser(text);
    ConceptPtr lhs = p.concept_expr();
    p.expect(Tok::Pipe, "'|'");
    ConceptPtr rhs = p.concept_expr();
    auto [lo, hi] = parse_bounds(p);
    p.expect_end();
    return Conditional(lhs, rhs, lo, hi);
}

KnowledgeBase parse_kb(std::string_view text) {
    KnowledgeBase kb;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        Parser p = make_parser(line, line_no);
        if (p.at(Tok::End)) {
            // blank or comment-only line
        } else if (p.at_ident("gci")) {
            p.advance();
            ConceptPtr sub = p.concept_expr();
            p.expect(Tok::Arrow, "'=>'");
            ConceptPtr sup = p.concept_expr();
            p.expect_end();
            kb.add_gci(sub, sup);
        } else if (p.at_ident("cond")) {
            p.advance();
            ConceptPtr lhs = p.concept_expr();
            p.expect(Tok::Pipe, "'|'");
            ConceptPtr rhs = p.concept_expr();
            auto [lo, hi] = parse_bounds(p);
            p.expect_end();
            kb.add_conditional(lhs, rhs, lo, hi);
        } else {
            throw ParseError(p.peek().span,
                             "expected 'gci' or 'cond' at start of statement, found '" +
                                 p.peek().text + "'",
                             {"gci", "cond"});
        }

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
        if (pos == text.size()) break;  // trailing newline
    }
    return kb;
}

namespace {

// precedence levels: and = 1, not/exists = 2, atoms = 3
int level_of(const Concept& c) {
    switch (c.kind()) {
        case ConceptKind::Top:
        case ConceptKind::Name:
            return 3;
        case ConceptKind::Not:
        case ConceptKind::Exists:
            return 2;
        case ConceptKind::And:
            return 1;
    }
    return 3;
}

void render(const Concept& c, int min_level, std::string& out) {
    bool parens = level_of(c) < min_level;
    if (parens) out += '(';
    switch (c.kind()) {
        case ConceptKind::Top:
            out += "top";
            break;
        case ConceptKind::Name:
            out += c.label().text();
            break;
        case ConceptKind::Not:
            out += "not ";
            render(*c.child(), 2, out);
            break;
        case ConceptKind::And:
            render(*c.lhs(), 1, out);  // left associative
            out += " and ";
            render(*c.rhs(), 2, out);
            break;
        case ConceptKind::Exists:
            out += "exists ";
            out += c.label().text();
            out += '.';
            render(*c.child(), 2, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render_concept(const ConceptPtr& c) {
    std::string out;
    render(*c, 0, out);
    return out;
}

std::string render_kb(const KnowledgeBase& kb) {
    std::string out;
    for (const Gci& g : kb.tbox()) {
        out += "gci " + render_concept(g.sub) + " => " + render_concept(g.sup) + "\n";
    }
    for (const Conditional& k : kb.conditionals()) {
        out += "cond " + render_concept(k.lhs) + " | " + render_concept(k.rhs) + " [" +
               k.lower.str() + ", " + k.upper.str() + "]\n";
    }
    return out;
}

}  // namespace statel
