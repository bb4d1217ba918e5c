#include "transgress/cli.hpp"

#include "transgress/error.hpp"

#include <cctype>

namespace transgress {

namespace {

enum class Tok { Number, Rational, Name, ChMacro, Tors, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < s.size() && is_digit(s[j]))
            ++j;
        return j;
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c)) {
            std::size_t j = digits(i);
            if (j + 1 < s.size() && s[j] == '/' && is_digit(s[j + 1])) {
                std::size_t end = digits(j + 1);
                out.push_back({Tok::Rational, std::string(s.substr(i, end - i)), start});
                i = end;
            } else {
                out.push_back({Tok::Number, std::string(s.substr(i, j - i)), start});
                i = j;
            }
            continue;
        }
        if (is_alpha(c)) {
            std::size_t j = i;
            while (j < s.size() && is_alpha(s[j]))
                ++j;
            std::string word(s.substr(i, j - i));
            if (word == "ch" && j < s.size() && s[j] == '[') {
                std::size_t end = digits(j + 1);
                if (end == j + 1 || end >= s.size() || s[end] != ']')
                    throw SyntaxError(j, "expected ch[<degree>]");
                out.push_back({Tok::ChMacro, std::string(s.substr(j + 1, end - j - 1)), start});
                i = end + 1;
                continue;
            }
            if (word == "Tors") {
                out.push_back({Tok::Tors, word, start});
                i = j;
                continue;
            }
            if (j < s.size() && s[j] == '_') {
                std::size_t end = digits(j + 1);
                if (end == j + 1)
                    throw SyntaxError(j + 1, "expected a degree after '_'");
                out.push_back({Tok::Name, std::string(s.substr(i, end - i)), start});
                i = end;
                continue;
            }
            std::size_t end = digits(j);
            out.push_back({Tok::Name, std::string(s.substr(i, end - i)), start});
            i = end;
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: throw SyntaxError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, RingPtr ring, std::string id, const Registry& registry)
        : tokens_(std::move(tokens)), ring_(std::move(ring)), id_(std::move(id)), registry_(registry)
    {
    }

    Element parse()
    {
        Element e = expr();
        if (peek().kind != Tok::End)
            throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }

    Element expr()
    {
        Element e = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            Element rhs = term();
            e = minus ? e - rhs : e + rhs;
        }
        return e;
    }

    Element term()
    {
        Element e = factor();
        while (peek().kind == Tok::Star) {
            next();
            e = e * factor();
        }
        return e;
    }

    Element factor()
    {
        if (peek().kind == Tok::Minus) {
            next();
            return -factor();
        }
        Element base = atom();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& t = next();
            if (t.kind != Tok::Number)
                throw SyntaxError(t.pos, "expected a nonnegative integer exponent");
            if (t.text.size() > 4)
                throw SyntaxError(t.pos, "exponent too large");
            return power(base, std::stoi(t.text));
        }
        return base;
    }

    Element atom()
    {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Number:
        case Tok::Rational:
            return Element::constant(ring_, parse_rational(t.text));
        case Tok::Name:
            return generator(t);
        case Tok::Tors:
            return Element::torsion_class(ring_);
        case Tok::ChMacro: {
            Element ch = registry_.symfunc().chern_component(std::stoi(t.text));
            return change_coefficients(ch, ring_);
        }
        case Tok::LParen: {
            Element e = expr();
            const Token& close = next();
            if (close.kind != Tok::RParen)
                throw SyntaxError(close.pos, "expected ')'");
            return e;
        }
        case Tok::End:
            throw SyntaxError(t.pos, "unexpected end of input");
        default:
            throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
        }
    }

    Element generator(const Token& t)
    {
        if (ring_->find(t.text))
            return Element::generator(ring_, t.text);
        std::size_t underscore = t.text.find('_');
        if (underscore != std::string::npos && t.text.size() - underscore <= 6 &&
            std::stoi(t.text.substr(underscore + 1)) > ring_->max_degree())
            throw Error(Errc::DegreeCapExceeded, t.text + " lies above the degree cap " +
                                                     std::to_string(ring_->max_degree()) + " of " + id_);
        throw Error(Errc::UnknownGenerator, "'" + t.text + "' is not a generator of " + id_);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    RingPtr ring_;
    std::string id_;
    const Registry& registry_;
};

}  // namespace

Element parse_element(std::string_view text, const RingPtr& ring, const Registry& registry)
{
    RingPtr shadow = ring->rational_shadow();
    Element value = Parser(tokenize(text), shadow, ring->id(), registry).parse();
    return change_coefficients(value, ring);
}

}  // namespace transgress
