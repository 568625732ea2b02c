#include "cgeo/dsl.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

namespace cgeo {

namespace {

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
}

enum class Tok { Ident, Number, Sym, End };

struct Token {
    Tok kind;
    std::string text;  // identifiers, symbols (normalized ASCII), number text
    double value = 0;
    int line, col;
};

// UTF-8 aware lexer; columns count code points from 1.
std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto adv = [&](std::size_t bytes) {
        i += bytes;
        ++col;
    };
    auto starts = [&](const char* u) { return s.compare(i, std::char_traits<char>::length(u), u) == 0; };
    while (i < s.size()) {
        const unsigned char c = s[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            adv(1);
            continue;
        }
        if (c == '#') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        Token t{Tok::Sym, "", 0, line, col};
        if (starts("∩")) {
            t.text = "&";
            adv(3);
        } else if (starts("∪")) {
            t.text = "|";
            adv(3);
        } else if (starts("−")) {
            t.text = "-";
            adv(3);
        } else if (starts("≥")) {
            t.text = ">=";
            adv(3);
        } else if (starts("≤")) {
            t.text = "<=";
            adv(3);
        } else if (std::isalpha(c) || c == '_') {
            t.kind = Tok::Ident;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                t.text += s[i];
                adv(1);
            }
            // subscript digits: x₀ -> x0
            while (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
                   static_cast<unsigned char>(s[i + 1]) == 0x82 && static_cast<unsigned char>(s[i + 2]) >= 0x80 &&
                   static_cast<unsigned char>(s[i + 2]) <= 0x89) {
                t.text += static_cast<char>('0' + (static_cast<unsigned char>(s[i + 2]) - 0x80));
                adv(3);
            }
        } else if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            t.kind = Tok::Number;
            const char* begin = s.c_str() + i;
            char* end = nullptr;
            t.value = std::strtod(begin, &end);
            const std::size_t len = static_cast<std::size_t>(end - begin);
            t.text = s.substr(i, len);
            i += len;
            col += static_cast<int>(len);
        } else if (starts(">=") || starts("<=")) {
            t.text = s.substr(i, 2);
            adv(1);
            adv(1);
        } else if (std::string("(),{}+-*&|<>=").find(static_cast<char>(c)) != std::string::npos) {
            t.text = std::string(1, static_cast<char>(c));
            adv(1);
        } else {
            // skip the whole code point for the message
            std::size_t len = 1;
            if (c >= 0xF0) len = 4;
            else if (c >= 0xE0) len = 3;
            else if (c >= 0xC0) len = 2;
            throw ParseError("unexpected character '" + s.substr(i, len) + "'", line, col);
        }
        out.push_back(t);
    }
    out.push_back({Tok::End, "", 0, line, col});
    return out;
}

struct Linear {
    std::vector<double> coef;  // by variable index
    double c = 0;
};

class Parser {
public:
    Parser(std::vector<Token> toks, int default_n, std::optional<int> fixed = std::nullopt)
        : t_(std::move(toks)), default_n_(default_n), n_(fixed) {}

    std::optional<int> first_vector() const { return n_; }

    RegionPtr run() {
        RegionPtr r = expr();
        if (peek().kind != Tok::End) fail({"end of input", "'&'", "'|'"});
        return r;
    }

private:
    std::vector<Token> t_;
    std::size_t p_ = 0;
    int default_n_;
    std::optional<int> n_;

    const Token& peek() const { return t_[p_]; }
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        const Token& k = peek();
        const std::string got = k.kind == Tok::End ? "end of input" : "'" + k.text + "'";
        const std::string msg = "unexpected " + got + ", expected " + join(expected);
        throw ParseError(msg, k.line, k.col, std::move(expected));
    }
    [[noreturn]] void semantic(const Token& at, const std::string& msg) const {
        throw ParseError(msg, at.line, at.col);
    }
    bool accept(const std::string& sym) {
        if (peek().kind == Tok::Sym && peek().text == sym) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(const std::string& sym) {
        if (!accept(sym)) fail({"'" + sym + "'"});
    }
    int dim() { return n_ ? *n_ : default_n_; }

    double number() {
        bool neg = false;
        while (peek().kind == Tok::Sym && (peek().text == "-" || peek().text == "+")) {
            neg ^= peek().text == "-";
            ++p_;
        }
        if (peek().kind != Tok::Number) fail({"number"});
        return neg ? -t_[p_++].value : t_[p_++].value;
    }

    std::vector<double> raw_vector() {
        expect("(");
        std::vector<double> v{number()};
        while (accept(",")) v.push_back(number());
        expect(")");
        return v;
    }

    Point vector() {
        const Token at = peek();
        std::vector<double> v = raw_vector();
        if (!n_) {
            if (v.size() < 2 || static_cast<int>(v.size()) > kMaxCoords)
                semantic(at, "vectors need between 2 and " + std::to_string(kMaxCoords) + " coordinates");
            n_ = static_cast<int>(v.size());
        } else if (static_cast<int>(v.size()) != *n_) {
            semantic(at, "mixed dimensions: expected " + std::to_string(*n_) + " coordinates, got " +
                             std::to_string(v.size()));
        }
        return Point::from(v);
    }

    RegionPtr expr() {
        std::vector<RegionPtr> parts{term()};
        while (accept("|")) parts.push_back(term());
        return parts.size() == 1 ? parts[0] : make_union(parts);
    }

    RegionPtr term() {
        std::vector<RegionPtr> parts{factor()};
        while (accept("&")) parts.push_back(factor());
        return parts.size() == 1 ? parts[0] : make_intersection(parts);
    }

    template <class F>
    RegionPtr build(const Token& at, F f) {
        try {
            return f();
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            semantic(at, e.what());
        }
    }

    RegionPtr factor() {
        const Token at = peek();
        if (accept("(")) {
            RegionPtr r = expr();
            expect(")");
            return r;
        }
        if (at.kind == Tok::Sym && at.text == "{") return constraint();
        if (at.kind != Tok::Ident)
            fail({"region", "'('", "'{'"});
        const std::string& id = at.text;
        ++p_;
        if (id == "w1") return build(at, [&] { return make_w1(dim()); });
        if (id == "full") return make_full(dim());
        if (id == "empty") return make_empty(dim());
        if (id == "union" || id == "inter") {
            expect("(");
            std::vector<RegionPtr> kids{expr()};
            while (accept(",")) kids.push_back(expr());
            expect(")");
            return build(at, [&] { return id == "union" ? make_union(kids) : make_intersection(kids); });
        }
        if (id == "compl") {
            expect("(");
            RegionPtr k = expr();
            expect(")");
            return make_complement(k);
        }
        if (id == "closed") {
            expect("(");
            RegionPtr k = expr();
            expect(")");
            if (!k->is_leaf()) semantic(at, "closed() applies to primitive regions only");
            return build(at, [&] { return with_closed(k, true); });
        }
        if (id == "translate") {
            expect("(");
            RegionPtr k = expr();
            expect(",");
            Point v = vector();
            expect(")");
            return build(at, [&] { return make_translate(k, v); });
        }
        if (id == "linmap") {
            expect("(");
            RegionPtr k = expr();
            expect(",");
            std::vector<double> m = raw_vector();
            expect(")");
            return build(at, [&] { return make_linear_map(k, m); });
        }
        if (id == "dcone" || id == "box" || id == "exterior") {
            expect("(");
            Point a = vector();
            expect(",");
            Point b = vector();
            expect(")");
            return build(at, [&] {
                if (id == "dcone") return make_double_cone(a, b);
                if (id == "box") return make_box(a, b);
                return make_exterior(a, b, false);
            });
        }
        if (id == "wedge") {
            expect("(");
            Point np = vector();
            expect(",");
            double dp = number();
            expect(",");
            Point nm = vector();
            expect(",");
            double dm = number();
            expect(")");
            return build(at, [&] { return make_wedge({np, dp}, {nm, dm}); });
        }
        if (id == "timeslice" || id == "shell") {
            expect("(");
            double a = number();
            expect(",");
            double b = number();
            expect(")");
            return build(at, [&] { return id == "shell" ? make_shell(dim(), a, b) : make_time_slice(dim(), a, b); });
        }
        if (id == "ball") {
            expect("(");
            Point c = vector();
            expect(",");
            double r = number();
            expect(")");
            return build(at, [&] { return make_ball(c, r); });
        }
        if (id == "points") {
            expect("(");
            std::vector<Point> pts{vector()};
            while (accept(",")) pts.push_back(vector());
            expect(")");
            return build(at, [&] { return make_points(pts); });
        }
        --p_;
        fail({"region"});
    }

    // var index or -1
    int variable(const Token& k) const {
        if (k.kind != Tok::Ident || k.text.size() < 2 || k.text[0] != 'x') return -1;
        for (std::size_t i = 1; i < k.text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(k.text[i]))) return -1;
        return std::atoi(k.text.c_str() + 1);
    }

    Linear linear() {
        Linear l;
        bool first = true;
        for (;;) {
            double sign = 1;
            bool had_sign = false;
            while (peek().kind == Tok::Sym && (peek().text == "-" || peek().text == "+")) {
                if (peek().text == "-") sign = -sign;
                had_sign = true;
                ++p_;
            }
            if (!first && !had_sign) break;
            first = false;
            double k = 1;
            bool have_num = false;
            if (peek().kind == Tok::Number) {
                k = t_[p_++].value;
                have_num = true;
                accept("*");
            }
            const Token at = peek();
            const int v = variable(at);
            if (v >= 0) {
                ++p_;
                if (v >= dim()) semantic(at, "variable " + at.text + " exceeds the dimension " + std::to_string(dim()));
                if (static_cast<int>(l.coef.size()) <= v) l.coef.resize(v + 1, 0.0);
                l.coef[v] += sign * k;
            } else if (have_num) {
                l.c += sign * k;
            } else {
                fail({"number", "variable"});
            }
        }
        return l;
    }

    RegionPtr constraint() {
        const Token at = peek();
        expect("{");
        Linear lhs = linear();
        std::string op;
        for (const char* o : {">=", "<=", ">", "<", "="})
            if (accept(o)) {
                op = o;
                break;
            }
        if (op.empty()) fail({"'>'", "'>='", "'<'", "'<='", "'='"});
        Linear rhs = linear();
        expect("}");
        const int n = dim();
        Affine f{Point(n), lhs.c - rhs.c};
        for (int i = 0; i < n; ++i) {
            const double a = i < static_cast<int>(lhs.coef.size()) ? lhs.coef[i] : 0.0;
            const double b = i < static_cast<int>(rhs.coef.size()) ? rhs.coef[i] : 0.0;
            f.n.c[i] = a - b;
        }
        if (op == "<" || op == "<=") f = f.negated();
        return build(at, [&] {
            if (op == "=") return make_plane(f);
            return make_half_space(f, op.size() == 2);
        });
    }
};

std::string num(double v) {
    if (v == 0) v = 0;  // no "-0"
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        char b2[40];
        std::snprintf(b2, sizeof b2, "%.*g", prec, v);
        if (std::strtod(b2, nullptr) == v) return b2;
    }
    return buf;
}

std::string vec(const Point& p) {
    std::string s = "(";
    for (int i = 0; i < p.n; ++i) s += (i ? "," : "") + num(p[i]);
    return s + ")";
}

std::string linear_text(const Affine& f) {
    std::string s;
    for (int i = 0; i < f.n.n; ++i) {
        const double a = f.n[i];
        if (a == 0) continue;
        std::string term = (std::abs(a) == 1 ? "" : num(std::abs(a)) + "*") + "x" + std::to_string(i);
        s += s.empty() ? (a < 0 ? "-" : "") + term : (a < 0 ? " - " : " + ") + term;
    }
    if (f.d != 0) s += (f.d < 0 ? " - " : " + ") + num(std::abs(f.d));
    return s;
}

std::string closed_wrap(const RegionPtr& r, const std::string& body) { return r->closed ? "closed(" + body + ")" : body; }

}  // namespace

ParseError::ParseError(const std::string& msg, int l, int c, std::vector<std::string> exp)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c),
      expected(std::move(exp)) {}

RegionPtr parse_region(const std::string& src, int default_ncoords) {
    const auto toks = lex(src);
    // The first pass only finds the dimension; errors are reported by the second.
    Parser probe(toks, default_ncoords);
    try {
        probe.run();
    } catch (const std::exception&) {
    }
    Parser p(toks, default_ncoords, probe.first_vector().value_or(default_ncoords));
    return p.run();
}

std::string print_region(const RegionPtr& r) {
    auto list = [&](const char* name) {
        std::string s = name;
        s += "(";
        for (std::size_t i = 0; i < r->kids.size(); ++i) s += (i ? ", " : "") + print_region(r->kids[i]);
        return s + ")";
    };
    switch (r->kind) {
        case Kind::DoubleCone: return closed_wrap(r, "dcone(" + vec(r->a) + ", " + vec(r->b) + ")");
        case Kind::Wedge:
            return closed_wrap(r, "wedge(" + vec(r->plus.n) + ", " + num(r->plus.d) + ", " + vec(r->minus.n) + ", " +
                                      num(r->minus.d) + ")");
        case Kind::TimeSlice: return closed_wrap(r, "timeslice(" + num(r->lo) + ", " + num(r->hi) + ")");
        case Kind::HalfSpace: {
            // leading vector fixes the dimension for scripts without one
            return "{" + linear_text({r->plus.n, 0}) + (r->closed ? " >= " : " > ") + num(-r->plus.d) + "}";
        }
        case Kind::Plane: return "{" + linear_text({r->plus.n, 0}) + " = " + num(-r->plus.d) + "}";
        case Kind::Shell: return closed_wrap(r, "shell(" + num(r->lo) + ", " + num(r->hi) + ")");
        case Kind::Box: return closed_wrap(r, "box(" + vec(r->a) + ", " + vec(r->b) + ")");
        case Kind::Ball: return closed_wrap(r, "ball(" + vec(r->a) + ", " + num(r->lo) + ")");
        case Kind::Points: {
            std::string s = "points(";
            for (std::size_t i = 0; i < r->pts.size(); ++i) s += (i ? ", " : "") + vec(r->pts[i]);
            return s + ")";
        }
        case Kind::Exterior: return closed_wrap(r, "exterior(" + vec(r->a) + ", " + vec(r->b) + ")");
        case Kind::Full: return "full";
        case Kind::Empty: return "empty";
        case Kind::Sampled: throw std::invalid_argument("sampled regions have no script form");
        case Kind::Union: return list("union");
        case Kind::Intersection: return list("inter");
        case Kind::Complement: return "compl(" + print_region(r->kids[0]) + ")";
        case Kind::Translate: return "translate(" + print_region(r->kids[0]) + ", " + vec(r->a) + ")";
        case Kind::LinearMap: {
            std::string s = "linmap(" + print_region(r->kids[0]) + ", (";
            for (std::size_t i = 0; i < r->mat.size(); ++i) s += (i ? "," : "") + num(r->mat[i]);
            return s + "))";
        }
    }
    return "";
}

}  // namespace cgeo
