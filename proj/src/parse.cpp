#include "schfin/parse.hpp"

#include "schfin/errors.hpp"

#include <cctype>

namespace schfin {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string parse_identifier(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    if (start >= cur.text.size() || !ident_start(cur.text[start]))
        throw ParseError("expected identifier", start);
    std::size_t end = start;
    while (end < cur.text.size() && ident_char(cur.text[end])) ++end;
    cur.pos = end;
    return std::string(cur.text.substr(start, end - start));
}

BigInt parse_integer(Cursor& cur, bool allow_sign) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    std::string digits;
    if (allow_sign && start < cur.text.size() && (cur.text[start] == '-' || cur.text[start] == '+')) {
        if (cur.text[start] == '-') digits += '-';
        ++start;
    }
    std::size_t end = start;
    while (end < cur.text.size() && std::isdigit(static_cast<unsigned char>(cur.text[end]))) ++end;
    if (end == start) throw ParseError("expected integer", cur.pos);
    digits += std::string(cur.text.substr(start, end - start));
    cur.pos = end;
    return BigInt(digits);
}

// coeff := int ('/' posint)?
Rational parse_coeff(Cursor& cur) {
    std::size_t at = cur.pos;
    BigInt num = parse_integer(cur, true);
    if (cur.accept('/')) {
        std::size_t den_at = cur.pos;
        BigInt den = parse_integer(cur, false);
        if (den == 0) throw ParseError("malformed rational: zero denominator", den_at);
        return Rational(num, den);
    }
    (void)at;
    return Rational(num);
}

int variable_index(const std::string& name, std::span<const std::string> vars, std::size_t at) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    throw ParseError("unknown variable '" + name + "'", at);
}

// factor := var ('^' nat)?
Polynomial parse_factor(Cursor& cur, std::span<const std::string> vars) {
    cur.skip_ws();
    std::size_t at = cur.pos;
    std::string name = parse_identifier(cur);
    int idx = variable_index(name, vars, at);
    int power = 1;
    if (cur.accept('^')) {
        BigInt e = parse_integer(cur, false);
        if (e > 64) throw ParseError("exponent too large", cur.pos);
        power = static_cast<int>(e);
    }
    return Polynomial::variable(static_cast<int>(vars.size()), idx, power);
}

// term := coeff ('*' factor)* | factor ('*' factor)*
// A sign directly in front of a factor ("-x") is read as a +/-1 coefficient.
Polynomial parse_term(Cursor& cur, std::span<const std::string> vars) {
    const int n = static_cast<int>(vars.size());
    Polynomial acc(n);
    char c = cur.peek();
    if (c == '-' || c == '+') {
        std::size_t after = cur.pos + 1;
        while (after < cur.text.size() && std::isspace(static_cast<unsigned char>(cur.text[after])))
            ++after;
        if (after < cur.text.size() && ident_start(cur.text[after])) {
            bool neg = (c == '-');
            ++cur.pos;
            acc = parse_factor(cur, vars);
            if (neg) acc = -acc;
            while (cur.accept('*')) acc = acc * parse_factor(cur, vars);
            return acc;
        }
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
        acc = Polynomial::constant(n, parse_coeff(cur));
    } else if (ident_start(c)) {
        acc = parse_factor(cur, vars);
    } else {
        throw ParseError("expected coefficient or variable", cur.pos);
    }
    while (cur.accept('*')) acc = acc * parse_factor(cur, vars);
    return acc;
}

} // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty polynomial expression", 0);
    Polynomial acc = parse_term(cur, vars);
    while (!cur.done()) {
        cur.skip_ws();
        char c = cur.peek();
        if (c == '+') {
            cur.accept('+');
            acc = acc + parse_term(cur, vars);
        } else if (c == '-') {
            cur.accept('-');
            acc = acc - parse_term(cur, vars);
        } else {
            throw ParseError("unexpected input", cur.pos);
        }
    }
    return acc;
}

Rational parse_rational_number(std::string_view text) {
    Cursor cur{text};
    Rational r = parse_coeff(cur);
    if (!cur.done()) throw ParseError("trailing input after rational", cur.pos);
    return r;
}

namespace {

const std::string t_var[] = {"t"};

UniPoly to_unipoly(const Polynomial& p) {
    std::vector<Rational> coeffs;
    for (const Term& t : p.terms()) {
        int e = t.mono.exps.empty() ? 0 : t.mono.exps[0];
        if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(static_cast<std::size_t>(e) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(e)] += t.coeff;
    }
    return UniPoly(std::move(coeffs));
}

} // namespace

RationalFunction parse_rational_function(std::string_view text) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty rational function", 0);
    if (cur.peek() == '(') {
        cur.expect('(', "to open numerator");
        std::size_t start = cur.pos;
        int depth = 1;
        std::size_t end = start;
        while (end < text.size() && depth > 0) {
            if (text[end] == '(') ++depth;
            if (text[end] == ')') --depth;
            if (depth > 0) ++end;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses", start);
        UniPoly num = to_unipoly(parse_polynomial(text.substr(start, end - start), t_var));
        cur.pos = end + 1;
        if (cur.done()) return RationalFunction(std::move(num), UniPoly::constant(1));
        cur.expect('/', "between numerator and denominator");
        cur.expect('(', "to open denominator");
        std::size_t dstart = cur.pos;
        depth = 1;
        std::size_t dend = dstart;
        while (dend < text.size() && depth > 0) {
            if (text[dend] == '(') ++depth;
            if (text[dend] == ')') --depth;
            if (depth > 0) ++dend;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses", dstart);
        UniPoly den = to_unipoly(parse_polynomial(text.substr(dstart, dend - dstart), t_var));
        cur.pos = dend + 1;
        if (!cur.done()) throw ParseError("trailing input after rational function", cur.pos);
        if (den.is_zero()) throw ParseError("zero denominator", dstart);
        return RationalFunction(std::move(num), std::move(den));
    }
    UniPoly num = to_unipoly(parse_polynomial(text, t_var));
    return RationalFunction(std::move(num), UniPoly::constant(1));
}

ParsedMatrix parse_matrix(std::string_view text) {
    Cursor cur{text};
    cur.expect('[', "to open matrix");
    ParsedMatrix m;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> row;
    while (true) {
        cur.skip_ws();
        if (cur.pos >= text.size()) throw ParseError("unterminated matrix", cur.pos);
        char c = text[cur.pos];
        if (c == ']') {
            ++cur.pos;
            break;
        }
        if (c == ';') {
            ++cur.pos;
            rows.push_back(std::move(row));
            row.clear();
            continue;
        }
        row.push_back(parse_coeff(cur));
    }
    if (!row.empty() || !rows.empty()) rows.push_back(std::move(row));
    if (!cur.done()) throw ParseError("trailing input after matrix", cur.pos);
    m.rows = static_cast<int>(rows.size());
    m.cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != m.cols)
            throw ParseError("ragged matrix rows", 0);
        for (const Rational& v : r) m.entries.push_back(v);
    }
    return m;
}

} // namespace schfin
