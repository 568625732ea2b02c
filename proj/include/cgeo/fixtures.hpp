#pragma once

#include <string>
#include <vector>

#include "cgeo/predicates.hpp"

namespace cgeo {

struct Fixture {
    std::string name;
    std::string script;
    RegionPtr region;
};

// Named regions used across the tests, the CLI and the acceptance run (s = 2).
std::vector<Fixture> fixture_corpus();
RegionPtr fixture(const std::string& name);

// X = W1 + e1 and its rotations by 120 and 240 degrees in the 1-2 plane.
std::vector<RegionPtr> x120_wedges();

struct FixtureCheck {
    std::string fixture, check;
    bool expected = false, got = false;
    std::string detail;
    bool pass() const { return expected == got; }
};

// The counterexample suite on window g.
std::vector<FixtureCheck> run_fixture_suite(const GridWindow& g);

}  // namespace cgeo
