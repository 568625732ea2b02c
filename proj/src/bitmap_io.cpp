#include "cgeo/bitmap_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cgeo {

std::uint64_t bitmap_hash(const Bitmap& b) {
    std::uint64_t h = 14695981039346656037ull;
    for (auto v : b) {
        h ^= v ? 1u : 0u;
        h *= 1099511628211ull;
    }
    return h;
}

void write_bitmap(std::ostream& os, const SampledRegion& r) {
    const GridWindow& g = r.grid;
    if (r.members.size() != g.size()) throw std::invalid_argument("bitmap size does not match its window");
    char buf[128];
    std::snprintf(buf, sizeof buf, "window %.17g %.17g %.17g %d", g.T, g.X, g.h, g.s);
    os << "cgeo-bitmap 1\n" << buf << "\n";
    os << "topology " << to_string(r.topology) << "\n";
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(bitmap_hash(r.members)));
    os << "hash " << buf << "\n";
    if (!r.label.empty()) os << "label " << r.label << "\n";
    std::vector<std::size_t> runs;
    std::uint8_t cur = 0;
    std::size_t len = 0;
    for (auto v : r.members) {
        const std::uint8_t bit = v ? 1 : 0;
        if (bit != cur) {
            runs.push_back(len);
            cur = bit;
            len = 0;
        }
        ++len;
    }
    runs.push_back(len);
    os << "runs " << runs.size() << "\n";
    for (std::size_t i = 0; i < runs.size(); ++i) os << runs[i] << ((i + 1) % 16 == 0 || i + 1 == runs.size() ? "\n" : " ");
}

SampledRegion read_bitmap(std::istream& is) {
    auto fail = [](const std::string& m) { throw std::runtime_error("bitmap: " + m); };
    std::string line, key;
    if (!std::getline(is, line) || line != "cgeo-bitmap 1") fail("missing or unsupported header");
    SampledRegion r;
    double T = 0, X = 0, h = 0;
    int s = 0;
    bool have_window = false, have_hash = false;
    std::uint64_t hash = 0;
    std::size_t nruns = 0;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        ls >> key;
        if (key == "window") {
            if (!(ls >> T >> X >> h >> s)) fail("bad window line");
            have_window = true;
        } else if (key == "topology") {
            std::string t;
            ls >> t;
            r.topology = t == "open" ? Topology::Open : t == "closed" ? Topology::Closed : Topology::Unknown;
        } else if (key == "hash") {
            std::string hex;
            ls >> hex;
            hash = std::stoull(hex, nullptr, 16);
            have_hash = true;
        } else if (key == "label") {
            r.label = line.size() > 6 ? line.substr(6) : "";
        } else if (key == "runs") {
            if (!(ls >> nruns)) fail("bad runs line");
            break;
        } else {
            fail("unknown header field '" + key + "'");
        }
    }
    if (!have_window) fail("missing window");
    r.grid = GridWindow(T, X, h, s);
    r.members.reserve(r.grid.size());
    std::uint8_t bit = 0;
    for (std::size_t i = 0; i < nruns; ++i) {
        std::size_t len;
        if (!(is >> len)) fail("truncated run list");
        if (r.members.size() + len > r.grid.size()) fail("runs exceed the window size");
        r.members.insert(r.members.end(), len, bit);
        bit ^= 1;
    }
    if (r.members.size() != r.grid.size()) fail("runs do not cover the window");
    if (have_hash && hash != bitmap_hash(r.members)) fail("hash mismatch");
    return r;
}

std::string to_rle_string(const SampledRegion& r) {
    std::ostringstream os;
    write_bitmap(os, r);
    return os.str();
}

SampledRegion from_rle_string(const std::string& text) {
    std::istringstream is(text);
    return read_bitmap(is);
}

}  // namespace cgeo
