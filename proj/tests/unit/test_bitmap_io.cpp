#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "cgeo/bitmap_io.hpp"
#include "cgeo/dsl.hpp"

using namespace cgeo;

TEST(BitmapIo, RoundTripPreservesEverything) {
    const GridWindow g(1.5, 2, 0.25, 2);
    SampledRegion s = sample(parse_region("dcone((-1,0,0),(1,0.5,0)) | {x2 > 1.5}"), g);
    s.label = "two pieces";
    std::stringstream ss;
    write_bitmap(ss, s);
    const SampledRegion r = read_bitmap(ss);
    EXPECT_EQ(r.members, s.members);
    EXPECT_EQ(r.topology, s.topology);
    EXPECT_EQ(r.label, s.label);
    EXPECT_EQ(r.grid.size(), g.size());
    EXPECT_EQ(r.grid.h, g.h);
}

TEST(BitmapIo, RandomBitmapsProperty) {
    std::mt19937_64 rng(31);
    const GridWindow g(1, 1, 0.2, 2);
    for (double p : {0.0, 0.01, 0.5, 0.99, 1.0}) {
        std::bernoulli_distribution B(p);
        SampledRegion s;
        s.grid = g;
        s.members.resize(g.size());
        for (auto& b : s.members) b = B(rng);
        s.topology = Topology::Closed;
        EXPECT_EQ(from_rle_string(to_rle_string(s)).members, s.members);
    }
}

TEST(BitmapIo, DetectsCorruption) {
    const GridWindow g(1, 1, 0.5, 2);
    const SampledRegion s = sample(parse_region("w1"), g);
    std::string text = to_rle_string(s);
    const auto pos = text.find("hash ");
    ASSERT_NE(pos, std::string::npos);
    text[pos + 5] = text[pos + 5] == '0' ? '1' : '0';
    EXPECT_ANY_THROW(from_rle_string(text));
    EXPECT_ANY_THROW(from_rle_string("cgeo-bitmap 2\n"));
}

TEST(BitmapIo, HashIsFnv1a) {
    EXPECT_EQ(bitmap_hash({}), 0xcbf29ce484222325ull);
    EXPECT_EQ(bitmap_hash({1}), (0xcbf29ce484222325ull ^ 1) * 0x100000001b3ull);
}
