// Germ input language: caret syntax ("x^2+2*x*y") and the compressed
// convention ("x15y2" meaning x^15*y^2). Single-letter variables only in
// compressed form; multi-letter names force caret mode.
#pragma once

#include "nwspec/germ.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace nwspec {

struct parse_error : std::runtime_error {
    size_t pos;
    parse_error(size_t p, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

Germ parse_germ(const std::string& text, const std::vector<std::string>& variables);

// Canonical caret-syntax form; parse_germ(format_germ(g), g.vars) == g.
std::string format_germ(const Germ& g);

// Compressed form of a single monomial, e.g. (15,2) -> "x15y2"; the
// zero vector formats as "1". Variables must be single letters.
std::string format_monomial_compressed(const ExpVec& e, const std::vector<std::string>& vars);

} // namespace nwspec
