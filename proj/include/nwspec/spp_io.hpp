// Text and JSON serialization of spectral pairs; SINGULAR-style reference
// ingestion and exact diffing.
#pragma once

#include "nwspec/classify.hpp"
#include "nwspec/parse.hpp"

#include <string>
#include <vector>

namespace nwspec {

// Comma-separated "((a/b,w),m)" tuples; duplicate (alpha,w) entries sum.
SpectralPairs parse_spp_text(const std::string& text);

std::string emit_spp(const SpectralPairs& spp);

struct SppDiffEntry {
    SppKey key;
    long computed = 0;
    long reference = 0;
};

// Symmetric multiset difference; empty result means exact agreement.
std::vector<SppDiffEntry> diff_spp(const SpectralPairs& computed, const SpectralPairs& reference);

std::string diff_report(const std::vector<SppDiffEntry>& diff);

} // namespace nwspec
