#include "nwspec/parse.hpp"

#include <algorithm>
#include <cctype>

namespace nwspec {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

long read_uint(Cursor& c) {
    size_t start = c.i;
    long v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        if (v > 1000000) throw parse_error(start, "exponent or coefficient too large");
        ++c.i;
    }
    if (c.i == start) throw parse_error(c.i, "expected a number");
    return v;
}

// Longest declared variable name starting at the cursor; -1 if none.
int match_var(Cursor& c, const std::vector<std::string>& vars) {
    int best = -1;
    size_t best_len = 0;
    for (size_t v = 0; v < vars.size(); ++v) {
        const std::string& name = vars[v];
        if (name.size() > best_len && c.s.compare(c.i, name.size(), name) == 0) {
            best = static_cast<int>(v);
            best_len = name.size();
        }
    }
    if (best >= 0) c.i += best_len;
    return best;
}

// One term in either syntax: optional rational coefficient, then variable
// powers. Caret mode separates factors with optional '*' and uses '^';
// compressed mode reads digits after a letter as the exponent.
void parse_term(Cursor& c, bool caret, const std::vector<std::string>& vars,
                int sign, std::map<ExpVec, Rat>& acc) {
    const int n = static_cast<int>(vars.size());
    Rat coeff(sign);
    ExpVec e(n, 0);
    bool saw_factor = false;

    c.skip_ws();
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long num = read_uint(c);
        long den = 1;
        if (!c.done() && c.peek() == '/') {
            ++c.i;
            den = read_uint(c);
            if (den == 0) throw parse_error(c.i, "zero denominator");
        }
        coeff *= Rat(num, den);
        saw_factor = true;
    }

    for (;;) {
        c.skip_ws();
        if (caret && !c.done() && c.peek() == '*') {
            ++c.i;
            c.skip_ws();
            if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
                long num = read_uint(c);
                long den = 1;
                if (!c.done() && c.peek() == '/') {
                    ++c.i;
                    den = read_uint(c);
                    if (den == 0) throw parse_error(c.i, "zero denominator");
                }
                coeff *= Rat(num, den);
                saw_factor = true;
                continue;
            }
        }
        if (c.done() || c.peek() == '+' || c.peek() == '-') break;
        size_t at = c.i;
        int v = match_var(c, vars);
        if (v < 0) {
            if (std::isalpha(static_cast<unsigned char>(c.peek())))
                throw parse_error(at, std::string("unknown variable '") + c.peek() + "'");
            throw parse_error(at, "unexpected character");
        }
        long exp = 1;
        if (caret) {
            c.skip_ws();
            if (!c.done() && c.peek() == '^') {
                ++c.i;
                c.skip_ws();
                exp = read_uint(c);
            }
        } else {
            if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
                exp = read_uint(c);
        }
        e[v] += exp;
        saw_factor = true;
    }

    if (!saw_factor) throw parse_error(c.i, "empty term");
    acc[e] += coeff;
}

} // namespace

Germ parse_germ(const std::string& text, const std::vector<std::string>& variables) {
    if (variables.empty()) throw parse_error(0, "no variables declared");
    bool caret = text.find('^') != std::string::npos || text.find('*') != std::string::npos;
    for (const auto& v : variables) {
        if (v.empty()) throw parse_error(0, "empty variable name");
        if (v.size() > 1) caret = true;
    }

    Cursor c{text};
    std::map<ExpVec, Rat> acc;
    c.skip_ws();
    if (c.done()) throw parse_error(0, "empty input");

    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = (c.peek() == '-') ? -1 : 1;
        ++c.i;
    }
    parse_term(c, caret, variables, sign, acc);
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+') sign = 1;
        else if (c.peek() == '-') sign = -1;
        else throw parse_error(c.i, "expected '+' or '-'");
        ++c.i;
        parse_term(c, caret, variables, sign, acc);
    }

    Germ g;
    g.n = static_cast<int>(variables.size());
    g.vars = variables;
    ExpVec zero(g.n, 0);
    for (auto& [e, coeff] : acc) {
        if (coeff == 0) continue; // cancelled terms are dropped
        if (e == zero) throw parse_error(0, "constant term present; germ must vanish at the origin");
        g.terms.emplace(e, coeff);
    }
    if (g.terms.empty()) throw parse_error(0, "empty or constant-only input");
    return g;
}

std::string format_germ(const Germ& g) {
    std::string out;
    // Descending lex over exponents matches the usual written order.
    for (auto it = g.terms.rbegin(); it != g.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (out.empty()) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? "-" : "+";
            if (a < 0) a = -a;
        }
        bool is_const_monomial = expvec_deg(e) == 0;
        bool need_coeff = (a != 1) || is_const_monomial;
        bool first = true;
        if (need_coeff) {
            out += rat_str(a);
            first = false;
        }
        for (int i = 0; i < g.n; ++i) {
            if (e[i] == 0) continue;
            if (!first) out += "*";
            out += g.vars[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
            first = false;
        }
    }
    return out;
}

std::string format_monomial_compressed(const ExpVec& e, const std::vector<std::string>& vars) {
    std::string out;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        out += vars[i];
        if (e[i] > 1) out += std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

} // namespace nwspec
