#include "arglp/io.hpp"

#include <cctype>
#include <sstream>

namespace arglp {

namespace {

struct Token {
    enum class Type { Ident, LParen, RParen, Comma, Dot, KindHeader, End };
    Type type;
    std::string text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        SourceSpan span{line_, column_};
        if (pos_ >= text_.size()) return {Token::Type::End, "", span};
        char c = text_[pos_];
        if (c == '(') return simple(Token::Type::LParen, span);
        if (c == ')') return simple(Token::Type::RParen, span);
        if (c == ',') return simple(Token::Type::Comma, span);
        if (c == '.') return simple(Token::Type::Dot, span);
        if (c == '#') return kind_header(span);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ident.push_back(text_[pos_]);
                advance();
            }
            return {Token::Type::Ident, ident, span};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", span);
    }

private:
    Token simple(Token::Type type, SourceSpan span) {
        std::string text(1, text_[pos_]);
        advance();
        return {type, text, span};
    }

    Token kind_header(SourceSpan span) {
        advance();  // '#'
        std::string word;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            word.push_back(text_[pos_]);
            advance();
        }
        if (word != "kind" || pos_ >= text_.size() || text_[pos_] != ':')
            throw ParseError("expected '#kind:' header", span);
        advance();  // ':'
        return {Token::Type::KindHeader, "#kind:", span};
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct Statement {
    std::string head;               // arg | att | sup
    std::vector<std::string> args;  // 1, 2 or 3 identifiers
    SourceSpan span;
};

}  // namespace

Framework parse_framework(std::string_view text) {
    Lexer lexer(text);
    Token tok = lexer.next();

    Framework f;
    if (tok.type == Token::Type::KindHeader) {
        Token name = lexer.next();
        if (name.type != Token::Type::Ident || !kind_from_string(name.text, f.kind))
            throw ParseError("unknown framework kind '" + name.text + "'", name.span);
        tok = lexer.next();
    }

    std::vector<Statement> statements;
    while (tok.type != Token::Type::End) {
        if (tok.type != Token::Type::Ident)
            throw ParseError("expected a statement", tok.span);
        Statement stmt{tok.text, {}, tok.span};
        if (stmt.head != "arg" && stmt.head != "att" && stmt.head != "sup")
            throw ParseError("unknown statement '" + stmt.head + "'", tok.span);

        Token open = lexer.next();
        if (open.type != Token::Type::LParen) throw ParseError("expected '('", open.span);
        for (;;) {
            Token id = lexer.next();
            if (id.type != Token::Type::Ident)
                throw ParseError("expected an identifier", id.span);
            stmt.args.push_back(id.text);
            Token sep = lexer.next();
            if (sep.type == Token::Type::RParen) break;
            if (sep.type != Token::Type::Comma) throw ParseError("expected ',' or ')'", sep.span);
        }
        Token dot = lexer.next();
        if (dot.type != Token::Type::Dot) throw ParseError("expected '.'", dot.span);

        std::size_t want_min = stmt.head == "arg" ? 1 : 2;
        std::size_t want_max = stmt.head == "arg" ? 1 : 3;
        if (stmt.args.size() < want_min || stmt.args.size() > want_max)
            throw ParseError("'" + stmt.head + "' takes " +
                                 (stmt.head == "arg" ? "1 name" : "2 or 3 names"),
                             stmt.span);
        statements.push_back(std::move(stmt));
        tok = lexer.next();
    }

    // First pass: user-declared names, so generated ids can detect clashes.
    std::set<std::string> declared;
    for (const auto& stmt : statements) {
        if (stmt.head == "arg")
            declared.insert(stmt.args[0]);
        else if (stmt.args.size() == 3)
            declared.insert(stmt.args[0]);
    }

    std::vector<Violation> build_violations;
    int att_counter = 0, sup_counter = 0;
    for (const auto& stmt : statements) {
        if (stmt.head == "arg") {
            f.args.insert(stmt.args[0]);
            continue;
        }
        bool is_att = stmt.head == "att";
        std::string id;
        if (stmt.args.size() == 3) {
            id = stmt.args[0];
        } else {
            id = (is_att ? "att_" : "sup_") + std::to_string(is_att ? ++att_counter : ++sup_counter);
            if (declared.count(id))
                throw ParseError("generated id '" + id + "' collides with a declared id",
                                 stmt.span);
        }
        Interaction edge{stmt.args[stmt.args.size() - 2], stmt.args.back()};
        auto& table = is_att ? f.attacks : f.supports;
        auto [it, inserted] = table.emplace(id, edge);
        if (!inserted) {
            build_violations.push_back(Violation{
                ViolationCode::NameClash, "'" + id + "' is declared more than once", {id}});
        }
    }

    auto violations = validate(f);
    violations.insert(violations.begin(), build_violations.begin(), build_violations.end());
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return f;
}

std::string emit_framework(const Framework& f) {
    std::ostringstream out;
    out << "#kind: " << to_string(f.kind) << "\n";
    for (const auto& a : f.args) out << "arg(" << a << ").\n";
    for (const auto& [name, e] : f.attacks)
        out << "att(" << name << "," << e.source << "," << e.target << ").\n";
    for (const auto& [name, e] : f.supports)
        out << "sup(" << name << "," << e.source << "," << e.target << ").\n";
    return out.str();
}

std::string emit_model(const Interpretation& m, const std::vector<std::string>& atoms) {
    if (m.size() != atoms.size())
        throw InternalError("interpretation does not cover the atom list");
    std::ostringstream out;
    auto list = [&](TruthValue v) {
        bool first = true;
        out << "[";
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (m.values[i] != v) continue;
            if (!first) out << ",";
            out << '"' << atoms[i] << '"';
            first = false;
        }
        out << "]";
    };
    out << "{\"pos\":";
    list(TruthValue::True);
    out << ",\"neg\":";
    list(TruthValue::False);
    out << ",\"undef\":";
    list(TruthValue::Undef);
    out << "}";
    return out.str();
}

namespace {

std::string render_literal(const Formula& f, const std::vector<std::string>& atoms) {
    return (f.positive ? "" : "~") + atoms[f.atom];
}

std::string render_formula(const Formula& f, const std::vector<std::string>& atoms) {
    switch (f.tag) {
        case Formula::Tag::True:
            return "true";
        case Formula::Tag::Literal:
            return render_literal(f, atoms);
        case Formula::Tag::Or: {
            std::string out = "(";
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                if (i) out += " | ";
                out += render_formula(f.children[i], atoms);
            }
            return out + ")";
        }
        case Formula::Tag::And: {
            std::string out;
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                if (i) out += " & ";
                const Formula& c = f.children[i];
                bool wrap = c.tag == Formula::Tag::And;
                out += wrap ? "(" + render_formula(c, atoms) + ")" : render_formula(c, atoms);
            }
            return out;
        }
    }
    throw InternalError("malformed body formula");
}

}  // namespace

std::string emit_program(const PropProgram& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.rules.size(); ++i)
        out << p.atoms[i] << " <- " << render_formula(p.rules[i], p.atoms) << ".\n";
    return out.str();
}

std::string emit_program(const NormalProgram& p) {
    std::ostringstream out;
    for (const auto& rule : p.rules) {
        out << p.atoms[rule.head];
        if (!rule.body.empty()) {
            out << " :- ";
            for (std::size_t i = 0; i < rule.body.size(); ++i) {
                if (i) out << ", ";
                const Literal& lit = rule.body[i];
                out << (lit.positive ? "" : "not ") << p.atoms[lit.atom];
            }
        }
        out << ".\n";
    }
    return out.str();
}

}  // namespace arglp
