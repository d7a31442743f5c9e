#include "nwspec/spp_io.hpp"

#include <cctype>
#include <sstream>

namespace nwspec {

namespace {

struct SppCursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw parse_error(i, std::string("expected '") + c + "' in spectral pair list");
        ++i;
    }
    long integer() {
        skip_ws();
        size_t start = i;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        long v = 0;
        size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
            ++digits;
        }
        if (!digits) throw parse_error(start, "expected an integer");
        return neg ? -v : v;
    }
    Rat rational() {
        long num = integer();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            long den = integer();
            if (den == 0) throw parse_error(i, "zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }
};

} // namespace

SpectralPairs parse_spp_text(const std::string& text) {
    SpectralPairs spp;
    SppCursor c{text};
    bool first = true;
    while (!c.done()) {
        if (!first) c.expect(',');
        first = false;
        c.expect('(');
        c.expect('(');
        Rat alpha = c.rational();
        c.expect(',');
        long w = c.integer();
        c.expect(')');
        c.expect(',');
        long m = c.integer();
        if (m <= 0) throw parse_error(c.i, "multiplicity must be positive");
        c.expect(')');
        spp[SppKey{alpha, static_cast<int>(w)}] += m;
    }
    return spp;
}

std::string emit_spp(const SpectralPairs& spp) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, m] : spp) {
        if (!first) os << ",";
        os << "((" << rat_str(key.alpha) << "," << key.w << ")," << m << ")";
        first = false;
    }
    return os.str();
}

std::vector<SppDiffEntry> diff_spp(const SpectralPairs& computed, const SpectralPairs& reference) {
    std::vector<SppDiffEntry> diff;
    for (const auto& [key, m] : computed) {
        auto it = reference.find(key);
        long ref = it == reference.end() ? 0 : it->second;
        if (m != ref) diff.push_back({key, m, ref});
    }
    for (const auto& [key, m] : reference) {
        if (computed.count(key)) continue;
        diff.push_back({key, 0, m});
    }
    return diff;
}

std::string diff_report(const std::vector<SppDiffEntry>& diff) {
    if (diff.empty()) return "identical";
    std::ostringstream os;
    for (const auto& d : diff) {
        os << "((" << rat_str(d.key.alpha) << "," << d.key.w << ")): computed " << d.computed
           << ", reference " << d.reference << "\n";
    }
    return os.str();
}

} // namespace nwspec
