// Exponent vectors and polynomial germs with exact rational coefficients.
#pragma once

#include "nwspec/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nwspec {

// Monomial exponent vector; dimension is fixed per germ.
using ExpVec = std::vector<long>;

inline ExpVec expvec_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline ExpVec expvec_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline long expvec_deg(const ExpVec& a) {
    long d = 0;
    for (long c : a) d += c;
    return d;
}

inline std::string expvec_str(const ExpVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

// Raised when a germ violates a pipeline precondition (not convenient,
// not simplicial, degenerate). CLI maps this to exit code 3.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. basis cardinality != Milnor number).
// CLI maps this to exit code 4.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Germ {
    int n = 0;
    std::vector<std::string> vars;
    std::map<ExpVec, Rat> terms; // no zero coefficients, no constant term

    bool has_term(const ExpVec& e) const { return terms.count(e) != 0; }

    std::vector<ExpVec> support() const {
        std::vector<ExpVec> s;
        s.reserve(terms.size());
        for (const auto& [e, c] : terms) s.push_back(e);
        return s;
    }
};

// True iff every axis carries a pure power of that variable.
inline bool is_convenient(const Germ& g) {
    for (int i = 0; i < g.n; ++i) {
        bool found = false;
        for (const auto& [e, c] : g.terms) {
            if (e[i] <= 0) continue;
            bool pure = true;
            for (int j = 0; j < g.n; ++j)
                if (j != i && e[j] != 0) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

// Name of the first axis with no pure power, for error reporting.
inline std::string missing_axis(const Germ& g) {
    for (int i = 0; i < g.n; ++i) {
        bool found = false;
        for (const auto& [e, c] : g.terms) {
            if (e[i] <= 0) continue;
            bool pure = true;
            for (int j = 0; j < g.n; ++j)
                if (j != i && e[j] != 0) { pure = false; break; }
            if (pure) { found = true; break; }
        }
        if (!found) return g.vars[i];
    }
    return "";
}

} // namespace nwspec
