#include "venkit/format.hpp"

#include <cctype>
#include <sstream>

namespace venkit {

namespace {

std::string term_body(const RingSpec& ring, const mpz_class& coeff,
                      const Monomial& mono) {
    mpz_class mag = abs(coeff);
    std::string vars;
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += ring.name(i);
        if (mono[i] != 1) {
            vars += '^';
            vars += std::to_string(mono[i]);
        }
    }
    if (vars.empty()) return mag.get_str();
    if (mag == 1) return vars;
    return mag.get_str() + "*" + vars;
}

}  // namespace

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& ring = *p.ring();
    bool first = true;
    for (const auto& t : p.terms()) {
        if (first) {
            if (t.coeff < 0) out += '-';
            first = false;
        } else {
            out += t.coeff < 0 ? " - " : " + ";
        }
        out += term_body(ring, t.coeff, t.mono);
    }
    return out;
}

std::string ring_header(const RingSpec& ring) {
    std::string out = "ring:";
    for (const auto& n : ring.names()) {
        out += ' ';
        out += n;
    }
    out += "; laurent:";
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring.laurent(i)) {
            out += ' ';
            out += ring.name(i);
        }
    return out;
}

std::string to_string(const PolyMap& m) {
    std::string out = ring_header(*m.ring);
    out += '\n';
    for (std::size_t i = 0; i < m.ring->size(); ++i) {
        out += m.ring->name(i);
        out += " -> ";
        out += to_string(m.images[i]);
        out += '\n';
    }
    return out;
}

namespace {

enum class Tok { Name, Int, Plus, Minus, Star, Caret, Colon, Semi, Arrow, Eq, End };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(std::string_view src, int line, int col0)
        : src_(src), line_(line), col_(col0) {}

    Token next() {
        skip_ws();
        int l = line_, c = col_ + 1;
        if (pos_ >= src_.size()) return {Tok::End, "", l, c};
        char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                    src_[pos_] == '_'))
                advance();
            return {Tok::Name, std::string(src_.substr(start, pos_ - start)), l, c};
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_])))
                advance();
            return {Tok::Int, std::string(src_.substr(start, pos_ - start)), l, c};
        }
        advance();
        switch (ch) {
            case '+': return {Tok::Plus, "+", l, c};
            case '-':
                if (pos_ < src_.size() && src_[pos_] == '>') {
                    advance();
                    return {Tok::Arrow, "->", l, c};
                }
                return {Tok::Minus, "-", l, c};
            case '*': return {Tok::Star, "*", l, c};
            case '^': return {Tok::Caret, "^", l, c};
            case ':': return {Tok::Colon, ":", l, c};
            case ';': return {Tok::Semi, ";", l, c};
            case '=': return {Tok::Eq, "=", l, c};
            default:
                throw parse_error(l, c, std::string("unexpected character '") + ch + "'");
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 0;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            advance();
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_, col_;
};

class PolyParser {
public:
    PolyParser(const Ring& ring, std::string_view text, int line, int col0)
        : ring_(ring), lex_(text, line, col0) {
        cur_ = lex_.next();
    }

    Poly parse() {
        std::vector<Term> terms;
        bool neg = false;
        if (cur_.kind == Tok::Minus) {
            neg = true;
            bump();
        }
        terms.push_back(parse_term(neg));
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool n = cur_.kind == Tok::Minus;
            bump();
            terms.push_back(parse_term(n));
        }
        if (cur_.kind != Tok::End)
            throw parse_error(cur_.line, cur_.col,
                              "unexpected '" + cur_.text + "' after polynomial");
        return Poly(ring_, std::move(terms));
    }

private:
    void bump() { cur_ = lex_.next(); }

    Term parse_term(bool negate) {
        mpz_class coeff = 1;
        Monomial mono(ring_->size(), 0);
        bool have_any = false;
        if (cur_.kind == Tok::Int) {
            coeff = mpz_class(cur_.text);
            have_any = true;
            bump();
            if (cur_.kind == Tok::Star) {
                bump();
                parse_factors(mono);
            }
        } else if (cur_.kind == Tok::Name) {
            parse_factors(mono);
            have_any = true;
        }
        if (!have_any)
            throw parse_error(cur_.line, cur_.col, "expected a term");
        if (negate) coeff = -coeff;
        return Term{std::move(coeff), std::move(mono)};
    }

    void parse_factors(Monomial& mono) {
        parse_varpow(mono);
        while (cur_.kind == Tok::Star) {
            bump();
            parse_varpow(mono);
        }
    }

    void parse_varpow(Monomial& mono) {
        if (cur_.kind != Tok::Name)
            throw parse_error(cur_.line, cur_.col, "expected variable name");
        auto idx = ring_->find(cur_.text);
        if (!idx)
            throw parse_error(cur_.line, cur_.col,
                              "variable '" + cur_.text + "' not in ring");
        bump();
        std::int64_t e = 1;
        if (cur_.kind == Tok::Caret) {
            bump();
            bool neg = false;
            if (cur_.kind == Tok::Minus) {
                neg = true;
                bump();
            }
            if (cur_.kind != Tok::Int)
                throw parse_error(cur_.line, cur_.col, "expected exponent");
            e = std::stoll(cur_.text);
            if (neg) e = -e;
            bump();
        }
        mono[*idx] += static_cast<std::int32_t>(e);
    }

    Ring ring_;
    Lexer lex_;
    Token cur_;
};

}  // namespace

Poly parse_poly(const Ring& ring, std::string_view text, int line_no, int col0) {
    return PolyParser(ring, text, line_no, col0).parse();
}

Ring parse_ring_header(std::string_view line, int line_no) {
    Lexer lex(line, line_no, 0);
    Token t = lex.next();
    if (t.kind != Tok::Name || t.text != "ring")
        throw parse_error(t.line, t.col, "expected 'ring:' header");
    t = lex.next();
    if (t.kind != Tok::Colon)
        throw parse_error(t.line, t.col, "expected ':' after 'ring'");
    std::vector<std::string> names;
    t = lex.next();
    while (t.kind == Tok::Name) {
        names.push_back(t.text);
        t = lex.next();
    }
    if (t.kind != Tok::Semi)
        throw parse_error(t.line, t.col, "expected ';' before 'laurent:'");
    t = lex.next();
    if (t.kind != Tok::Name || t.text != "laurent")
        throw parse_error(t.line, t.col, "expected 'laurent:' section");
    t = lex.next();
    if (t.kind != Tok::Colon)
        throw parse_error(t.line, t.col, "expected ':' after 'laurent'");
    std::vector<std::string> laurent;
    t = lex.next();
    while (t.kind == Tok::Name) {
        laurent.push_back(t.text);
        t = lex.next();
    }
    if (t.kind != Tok::End)
        throw parse_error(t.line, t.col, "unexpected trailing input in header");
    if (names.empty())
        throw parse_error(line_no, 1, "ring with no variables");
    return make_ring(std::move(names), laurent);
}

PolyMap parse_map(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;   // blank
            if (line[i] == '#') continue;           // comment
            return true;
        }
        return false;
    };
    if (!next_line()) throw parse_error(1, 1, "missing ring header");
    Ring ring = parse_ring_header(line, line_no);
    PolyMap m{ring, {}};
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (!next_line())
            throw parse_error(line_no + 1, 1,
                              "missing image line for '" + ring->name(i) + "'");
        std::size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            throw parse_error(line_no, 1, "expected 'var -> polynomial'");
        std::string lhs = line.substr(0, arrow);
        // canonical order: the i-th line names the i-th generator
        std::string name;
        for (char c : lhs)
            if (!std::isspace(static_cast<unsigned char>(c))) name += c;
        if (name != ring->name(i))
            throw parse_error(line_no, 1, "expected image of '" + ring->name(i) +
                                              "', got '" + name + "'");
        m.images.push_back(parse_poly(ring, line.substr(arrow + 2), line_no,
                                      static_cast<int>(arrow + 2)));
    }
    return m;
}

}  // namespace venkit
