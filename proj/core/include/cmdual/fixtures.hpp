#ifndef CMDUAL_FIXTURES_HPP
#define CMDUAL_FIXTURES_HPP

#include <string>
#include <vector>

#include "cmdual/trits.hpp"

namespace cm {

/// A worked example with its published expected values. The expected data
/// is embedded verbatim, never recomputed at build time; the runner diffs
/// fresh computation against it.
struct Fixture {
    std::string id;
    int n = 0;
    int k = 0;
    Int d = -1;            // -1: not part of the fixture
    int w = -1;
    int parity_count = -1;
    std::vector<std::string> u_set; // empty: not part of the fixture
    std::vector<std::string> v_set;
    Int s0_size = -1;
    Int s1_size = -1;
    Int term_count = -1;
};

const std::vector<Fixture>& worked_examples();

struct FixtureResult {
    std::string id;
    bool ok = true;
    std::vector<std::string> diffs; // one line per mismatching field
};

FixtureResult run_fixture(const Fixture& fx);
std::vector<FixtureResult> run_fixtures();

} // namespace cm

#endif
