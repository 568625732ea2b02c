#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cgeo/grid.hpp"

namespace cgeo {

// Text format, one header field per line, then the run lengths:
//   cgeo-bitmap 1
//   window <T> <X> <h> <s>
//   topology <open|closed|unknown>
//   hash <16 hex digits>          FNV-1a of the member bytes
//   label <text>                  optional
//   runs <count>
//   <run lengths, alternating 0-runs and 1-runs, starting with a 0-run>
std::uint64_t bitmap_hash(const Bitmap& b);
void write_bitmap(std::ostream& os, const SampledRegion& r);
SampledRegion read_bitmap(std::istream& is);
std::string to_rle_string(const SampledRegion& r);
SampledRegion from_rle_string(const std::string& text);

}  // namespace cgeo
