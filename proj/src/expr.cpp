#include "veronese/expr.hpp"

#include <cctype>

#include "veronese/errors.hpp"

namespace veronese {

namespace {

struct Token {
    enum Kind { Number, Variable, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBracket, RBracket, LBrace,
                RBrace, Comma, End };
    Kind kind = End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& current() const { return tok_; }

    void advance() {
        skip_space();
        tok_.line = line_;
        tok_.column = column_;
        if (pos_ >= text_.size()) {
            tok_.kind = Token::End;
            tok_.text.clear();
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': single(Token::Plus); return;
            case '-': single(Token::Minus); return;
            case '*': single(Token::Star); return;
            case '^': single(Token::Caret); return;
            case '/': single(Token::Slash); return;
            case '(': single(Token::LParen); return;
            case ')': single(Token::RParen); return;
            case '[': single(Token::LBracket); return;
            case ']': single(Token::RBracket); return;
            case '{': single(Token::LBrace); return;
            case '}': single(Token::RBrace); return;
            case ',': single(Token::Comma); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Number;
            tok_.text.clear();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take();
            return;
        }
        if (c == 'x') {
            take();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError("expected a variable index after 'x'", line_, column_);
            tok_.kind = Token::Variable;
            tok_.text.clear();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) take();
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }

private:
    void single(Token::Kind kind) {
        tok_.kind = kind;
        tok_.text = text_[pos_];
        ++pos_;
        ++column_;
    }
    void take() {
        tok_.text.push_back(text_[pos_]);
        ++pos_;
        ++column_;
    }
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                column_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++column_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token tok_;
};

class Parser {
public:
    Parser(std::string_view text, std::shared_ptr<const LyndonBasis> table, bool poisson)
        : lexer_(text), table_(std::move(table)), poisson_(poisson) {}

    PoissonElement parse() {
        PoissonElement value = parse_expr();
        expect(Token::End, "end of input");
        return value;
    }

private:
    const Token& tok() const { return lexer_.current(); }
    void next() { lexer_.advance(); }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, tok().line, tok().column); }
    void expect(Token::Kind kind, const char* what) {
        if (tok().kind != kind) fail(std::string("expected ") + what);
        if (kind != Token::End) next();
    }

    PoissonElement parse_expr() {
        bool negate = false;
        if (tok().kind == Token::Minus) {
            negate = true;
            next();
        }
        PoissonElement value = parse_term();
        if (negate) value *= Rational(-1);
        while (tok().kind == Token::Plus || tok().kind == Token::Minus) {
            const bool minus = tok().kind == Token::Minus;
            next();
            PoissonElement rhs = parse_term();
            if (minus)
                value -= rhs;
            else
                value += rhs;
        }
        return value;
    }

    PoissonElement parse_term() {
        PoissonElement value = parse_factor();
        while (tok().kind == Token::Star) {
            next();
            value *= parse_factor();
        }
        return value;
    }

    PoissonElement parse_factor() {
        PoissonElement base = parse_primary();
        if (tok().kind == Token::Caret) {
            next();
            if (tok().kind != Token::Number) fail("expected an integer exponent");
            const int e = to_int(tok().text);
            next();
            base = pow(base, e);
        }
        return base;
    }

    PoissonElement parse_primary() {
        switch (tok().kind) {
            case Token::Number: {
                Integer num(tok().text);
                next();
                if (tok().kind == Token::Slash) {
                    next();
                    if (tok().kind != Token::Number) fail("expected a denominator");
                    Integer den(tok().text);
                    if (den == 0) fail("zero denominator");
                    next();
                    Rational q(num, den);
                    q.canonicalize();
                    return PoissonElement::constant(table_, q);
                }
                return PoissonElement::constant(table_, Rational(num));
            }
            case Token::Variable: {
                const int index = to_int(tok().text);
                if (index < 1 || index > table_->n())
                    fail("variable x" + tok().text + " is outside x1..x" + std::to_string(table_->n()));
                next();
                return PoissonElement::variable(table_, index - 1);
            }
            case Token::LParen: {
                next();
                PoissonElement value = parse_expr();
                expect(Token::RParen, "')'");
                return value;
            }
            case Token::LBracket: {
                if (!poisson_) fail("bracket literals need a poisson context");
                auto [word, index] = parse_bracket_literal();
                (void)word;
                return PoissonElement::variable(table_, index);
            }
            case Token::LBrace: {
                if (!poisson_) fail("poisson brackets need a poisson context");
                next();
                PoissonElement lhs = parse_expr();
                expect(Token::Comma, "','");
                PoissonElement rhs = parse_expr();
                expect(Token::RBrace, "'}'");
                return poisson_bracket(lhs, rhs);
            }
            default:
                fail("expected a number, variable, or parenthesized expression");
        }
    }

    // Nested bracket literal; must be the standard bracketing of a Lyndon
    // word in the table.
    std::pair<Word, int> parse_bracket_literal() {
        const Token at = tok();
        if (tok().kind == Token::Variable) {
            const int index = to_int(tok().text);
            if (index < 1 || index > table_->n())
                fail("variable x" + tok().text + " is outside x1..x" + std::to_string(table_->n()));
            next();
            Word w{static_cast<std::uint8_t>(index - 1)};
            return {w, index - 1};
        }
        expect(Token::LBracket, "'['");
        auto [left_word, left_index] = parse_bracket_literal();
        expect(Token::Comma, "','");
        auto [right_word, right_index] = parse_bracket_literal();
        expect(Token::RBracket, "']'");
        Word word = left_word;
        word.insert(word.end(), right_word.begin(), right_word.end());
        const int index = table_->index_of(word);
        if (index < 0)
            throw ParseError("bracket literal is not a basis element within the table bound", at.line, at.column);
        const LyndonElement& elem = table_->element(index);
        if (elem.left != left_index || elem.right != right_index)
            throw ParseError("bracket literal is not the standard bracketing of its word", at.line, at.column);
        return {word, index};
    }

    int to_int(const std::string& digits) const {
        try {
            return std::stoi(digits);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }

    Lexer lexer_;
    std::shared_ptr<const LyndonBasis> table_;
    bool poisson_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n) {
    auto table = LyndonBasis::make(n, 1);
    Parser parser(text, table, /*poisson=*/false);
    return parser.parse().poly();
}

PoissonElement parse_poisson(std::string_view text, std::shared_ptr<const LyndonBasis> table) {
    Parser parser(text, std::move(table), /*poisson=*/true);
    return parser.parse();
}

std::string to_text(const Polynomial& p) { return to_string(p); }

std::string to_text(const PoissonElement& f) { return to_string(f); }

}  // namespace veronese
