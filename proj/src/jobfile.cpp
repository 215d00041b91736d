#include "ezdop/jobfile.hpp"

#include <cctype>
#include <sstream>

namespace ezdop {

namespace {

enum class Tok { Word, Int, Flag, Sym, Newline, End };

struct Token {
    Tok kind;
    std::string text;  // word/flag name, integer digits, or symbol character
    int line, col;
};

struct Lexer {
    std::string_view text;
    size_t pos = 0;
    int line = 1, col = 1;
    std::vector<Token> tokens;

    void push(Tok k, std::string t, int l, int c) { tokens.push_back({k, std::move(t), l, c}); }

    void run() {
        bool line_has_tokens = false;
        while (pos < text.size()) {
            char ch = text[pos];
            if (ch == '\n') {
                if (line_has_tokens) push(Tok::Newline, "", line, col);
                line_has_tokens = false;
                ++pos;
                ++line;
                col = 1;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
                ++col;
                continue;
            }
            if (ch == '#') {  // comment to end of line
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            int l = line, c = col;
            if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
                size_t start = pos;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '_')) {
                    ++pos;
                    ++col;
                }
                push(Tok::Word, std::string(text.substr(start, pos - start)), l, c);
            } else if (std::isdigit(static_cast<unsigned char>(ch))) {
                size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    ++pos;
                    ++col;
                }
                push(Tok::Int, std::string(text.substr(start, pos - start)), l, c);
            } else if (ch == '-' && pos + 1 < text.size() && text[pos + 1] == '-') {
                pos += 2;
                col += 2;
                size_t start = pos;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '-' || text[pos] == '_')) {
                    ++pos;
                    ++col;
                }
                push(Tok::Flag, std::string(text.substr(start, pos - start)), l, c);
            } else {
                static const std::string symbols = ",:;=/[]{}^*+-()";
                if (symbols.find(ch) == std::string::npos)
                    throw ParseError(std::string("unexpected character '") + ch + "'", l, c);
                push(Tok::Sym, std::string(1, ch), l, c);
                ++pos;
                ++col;
            }
            line_has_tokens = true;
        }
        if (line_has_tokens) push(Tok::Newline, "", line, col);
        push(Tok::End, "", line, col);
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t pos = 0;

    const Token& peek() const { return toks[pos]; }
    const Token& get() { return toks[pos++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, t.line, t.col);
    }

    void skip_newlines() {
        while (peek().kind == Tok::Newline) ++pos;
    }

    bool at_sym(const char* s) const { return peek().kind == Tok::Sym && peek().text == s; }
    bool at_word(const char* w) const { return peek().kind == Tok::Word && peek().text == w; }

    void expect_sym(const char* s) {
        if (!at_sym(s)) fail(std::string("expected '") + s + "'");
        ++pos;
    }
    std::string expect_word(const char* what) {
        if (peek().kind != Tok::Word) fail(std::string("expected ") + what);
        return get().text;
    }
    int expect_int() {
        bool neg = false;
        if (at_sym("-")) {
            neg = true;
            ++pos;
        }
        if (peek().kind != Tok::Int) fail("expected integer");
        int v = std::stoi(get().text);
        return neg ? -v : v;
    }
    void end_statement() {
        if (peek().kind == Tok::Newline) ++pos;
        else if (peek().kind != Tok::End) fail("expected end of statement");
    }

    // Polynomial text: concatenate token lexemes until a terminator.
    std::string poly_text() {
        std::ostringstream os;
        bool any = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Tok::Newline || t.kind == Tok::End || t.kind == Tok::Flag) break;
            if (t.kind == Tok::Sym && (t.text == "," || t.text == ";" || t.text == "]" ||
                                       t.text == "}" || t.text == "["))
                break;
            os << get().text;
            any = true;
        }
        if (!any) fail("expected polynomial");
        return os.str();
    }

    RingDecl parse_ring() {
        RingDecl r;
        r.name = expect_word("ring name");
        if (!at_word("vars")) fail("expected 'vars'");
        ++pos;
        while (true) {
            std::string v = expect_word("variable name");
            expect_sym(":");
            int d = expect_int();
            r.vars.emplace_back(std::move(v), d);
            if (at_sym(",")) {
                ++pos;
                continue;
            }
            break;
        }
        if (at_word("mod")) {
            ++pos;
            while (true) {
                r.relations.push_back(poly_text());
                if (at_sym(";")) {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        end_statement();
        return r;
    }

    ElemDecl parse_elem() {
        ElemDecl e;
        e.name = expect_word("element name");
        if (!at_word("in")) fail("expected 'in'");
        ++pos;
        e.ring = expect_word("ring name");
        expect_sym("=");
        e.poly = poly_text();
        end_statement();
        return e;
    }

    QuotientDecl parse_quotient() {
        QuotientDecl q;
        q.name = expect_word("ring name");
        expect_sym("=");
        q.base = expect_word("base ring name");
        expect_sym("/");
        q.elem = expect_word("element name");
        end_statement();
        return q;
    }

    std::vector<std::vector<std::string>> parse_matrix() {
        std::vector<std::vector<std::string>> rows;
        expect_sym("[");
        skip_newlines();
        while (true) {
            expect_sym("[");
            std::vector<std::string> row;
            skip_newlines();
            if (at_sym("]")) {  // empty row
                ++pos;
            } else {
                while (true) {
                    skip_newlines();
                    row.push_back(poly_text());
                    skip_newlines();
                    if (at_sym(",")) {
                        ++pos;
                        continue;
                    }
                    break;
                }
                expect_sym("]");
            }
            rows.push_back(std::move(row));
            skip_newlines();
            if (at_sym(",")) {
                ++pos;
                skip_newlines();
                continue;
            }
            break;
        }
        expect_sym("]");
        return rows;
    }

    ComplexDecl parse_complex() {
        ComplexDecl c;
        c.name = expect_word("complex name");
        if (!at_word("over")) fail("expected 'over'");
        ++pos;
        c.ring = expect_word("ring name");
        skip_newlines();
        expect_sym("{");
        while (true) {
            skip_newlines();
            if (at_sym("}")) {
                ++pos;
                break;
            }
            if (at_word("module")) {
                ++pos;
                int idx = expect_int();
                if (!at_word("twists")) fail("expected 'twists'");
                ++pos;
                expect_sym("[");
                std::vector<int> twists;
                if (!at_sym("]")) {
                    while (true) {
                        twists.push_back(expect_int());
                        if (at_sym(",")) {
                            ++pos;
                            continue;
                        }
                        break;
                    }
                }
                expect_sym("]");
                expect_sym(";");
                c.modules.emplace_back(idx, std::move(twists));
            } else if (at_word("map")) {
                ++pos;
                std::string dname = expect_word("differential name d<i>");
                if (dname.size() < 2 || dname[0] != 'd' ||
                    !std::all_of(dname.begin() + 1, dname.end(),
                                 [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
                    fail("differential must be named d<i>");
                int idx = std::stoi(dname.substr(1));
                expect_sym("=");
                skip_newlines();
                auto rows = parse_matrix();
                expect_sym(";");
                c.maps.emplace_back(idx, std::move(rows));
            } else {
                fail("expected 'module', 'map' or '}'");
            }
        }
        end_statement();
        return c;
    }

    ResolveCmd parse_resolve() {
        ResolveCmd r;
        r.ring = expect_word("ring name");
        expect_sym("/");
        if (at_sym("[")) {
            r.inline_polys = true;
            ++pos;
            while (true) {
                r.gens.push_back(poly_text());
                if (at_sym(",")) {
                    ++pos;
                    continue;
                }
                break;
            }
            expect_sym("]");
        } else {
            r.gens.push_back(expect_word("element name"));
        }
        while (peek().kind == Tok::Flag) {
            std::string flag = get().text;
            int v = expect_int();
            if (flag == "hmax") r.hmax = v;
            else if (flag == "dmax") r.dmax = v;
            else fail("unknown flag --" + flag);
        }
        end_statement();
        return r;
    }

    OperatorsCmd parse_operators() {
        if (!at_word("build")) fail("expected 'build'");
        ++pos;
        OperatorsCmd o;
        o.complex = expect_word("complex name");
        if (!at_word("pair")) fail("expected 'pair'");
        ++pos;
        o.x = expect_word("element name");
        expect_sym(",");
        o.y = expect_word("element name");
        if (at_word("z")) {
            ++pos;
            while (true) {
                o.zs.push_back(expect_word("element name"));
                if (at_sym(",")) {
                    ++pos;
                    continue;
                }
                break;
            }
        }
        end_statement();
        return o;
    }

    HomotopyCmd parse_homotopy() {
        if (!at_word("check")) fail("expected 'check'");
        ++pos;
        HomotopyCmd h;
        h.map = expect_word("map name");
        bool window_seen = false;
        while (peek().kind == Tok::Flag) {
            std::string flag = get().text;
            if (flag == "window") {
                h.window_lo = expect_int();
                expect_sym(":");
                h.window_hi = expect_int();
                window_seen = true;
            } else {
                fail("unknown flag --" + flag);
            }
        }
        if (!window_seen) fail("homotopy check needs --window a:b");
        end_statement();
        return h;
    }

    JobFile parse() {
        JobFile job;
        while (true) {
            skip_newlines();
            if (peek().kind == Tok::End) break;
            std::string kw = expect_word("statement keyword");
            if (kw == "ring") job.statements.emplace_back(parse_ring());
            else if (kw == "elem") job.statements.emplace_back(parse_elem());
            else if (kw == "quotient") job.statements.emplace_back(parse_quotient());
            else if (kw == "complex") job.statements.emplace_back(parse_complex());
            else if (kw == "check") {
                if (!at_word("ezd")) fail("expected 'ezd'");
                ++pos;
                CheckEzdCmd c;
                c.ring = expect_word("ring name");
                c.x = expect_word("element name");
                c.y = expect_word("element name");
                end_statement();
                job.statements.emplace_back(std::move(c));
            } else if (kw == "ann") {
                AnnCmd a;
                a.elem = expect_word("element name");
                if (!at_word("in")) fail("expected 'in'");
                ++pos;
                a.ring = expect_word("ring name");
                end_statement();
                job.statements.emplace_back(std::move(a));
            } else if (kw == "resolve") {
                job.statements.emplace_back(parse_resolve());
            } else if (kw == "operators") {
                job.statements.emplace_back(parse_operators());
            } else if (kw == "homotopy") {
                job.statements.emplace_back(parse_homotopy());
            } else if (kw == "reproduce") {
                expect_sym("-");
                if (!at_word("example")) fail("expected 'example'");
                ++pos;
                end_statement();
                job.statements.emplace_back(ReproduceCmd{});
            } else {
                --pos;
                fail("unknown statement '" + kw + "'");
            }
        }
        return job;
    }
};

struct Printer {
    std::ostringstream os;

    void operator()(const RingDecl& r) {
        os << "ring " << r.name << " vars ";
        for (size_t i = 0; i < r.vars.size(); ++i) {
            if (i) os << ", ";
            os << r.vars[i].first << ":" << r.vars[i].second;
        }
        if (!r.relations.empty()) {
            os << " mod ";
            for (size_t i = 0; i < r.relations.size(); ++i) {
                if (i) os << "; ";
                os << r.relations[i];
            }
        }
        os << "\n";
    }
    void operator()(const ElemDecl& e) {
        os << "elem " << e.name << " in " << e.ring << " = " << e.poly << "\n";
    }
    void operator()(const QuotientDecl& q) {
        os << "quotient " << q.name << " = " << q.base << " / " << q.elem << "\n";
    }
    void operator()(const ComplexDecl& c) {
        os << "complex " << c.name << " over " << c.ring << " {\n";
        for (const auto& [i, twists] : c.modules) {
            os << "  module " << i << " twists [";
            for (size_t k = 0; k < twists.size(); ++k) {
                if (k) os << ", ";
                os << twists[k];
            }
            os << "];\n";
        }
        for (const auto& [i, rows] : c.maps) {
            os << "  map d" << i << " = [";
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r) os << ",\n            ";
                os << "[";
                for (size_t k = 0; k < rows[r].size(); ++k) {
                    if (k) os << ", ";
                    os << rows[r][k];
                }
                os << "]";
            }
            os << "];\n";
        }
        os << "}\n";
    }
    void operator()(const CheckEzdCmd& c) {
        os << "check ezd " << c.ring << " " << c.x << " " << c.y << "\n";
    }
    void operator()(const AnnCmd& a) { os << "ann " << a.elem << " in " << a.ring << "\n"; }
    void operator()(const ResolveCmd& r) {
        os << "resolve " << r.ring << " / ";
        if (r.inline_polys) {
            os << "[";
            for (size_t i = 0; i < r.gens.size(); ++i) {
                if (i) os << ", ";
                os << r.gens[i];
            }
            os << "]";
        } else {
            os << r.gens.front();
        }
        os << " --hmax " << r.hmax << " --dmax " << r.dmax << "\n";
    }
    void operator()(const OperatorsCmd& o) {
        os << "operators build " << o.complex << " pair " << o.x << "," << o.y;
        if (!o.zs.empty()) {
            os << " z ";
            for (size_t i = 0; i < o.zs.size(); ++i) {
                if (i) os << ",";
                os << o.zs[i];
            }
        }
        os << "\n";
    }
    void operator()(const HomotopyCmd& h) {
        os << "homotopy check " << h.map << " --window " << h.window_lo << ":" << h.window_hi
           << "\n";
    }
    void operator()(const ReproduceCmd&) { os << "reproduce-example\n"; }
};

}  // namespace

JobFile parse_jobfile(std::string_view text) {
    Lexer lex{text};
    lex.run();
    Parser parser{std::move(lex.tokens)};
    return parser.parse();
}

std::string print_jobfile(const JobFile& job) {
    Printer p;
    for (const Statement& s : job.statements) std::visit(p, s);
    return p.os.str();
}

}  // namespace ezdop
