#pragma once

#include <string>
#include <vector>

#include "amalg/oracle.hpp"
#include "amalg/report.hpp"
#include "amalg/theory.hpp"
#include "amalg/vformation.hpp"

namespace amalg::fixtures {

enum class Expected { WITNESS, EXHAUSTED };

/// One catalogued instance with its theory, search mode, bounds and the
/// outcome it must reproduce.
struct Fixture {
    std::string name;
    VFormation v;
    Theory theory;
    construct::AmalgamMode mode = construct::AmalgamMode::AP;
    oracle::SearchConfig config;
    Expected expected = Expected::EXHAUSTED;
    /// Run through free_amalgamate (non-transitive regime) in addition to the
    /// oracle.
    bool useFreeAmalgamate = false;
    std::string note;
};

std::vector<std::string> fixture_names();

/// Throws InvalidInput for unknown names.
Fixture fixture(const std::string& name);

struct FixtureOutcome {
    std::string name;
    Expected expected;
    Expected actual;
    bool match = false;
    oracle::SearchResult result;
};

FixtureOutcome run_fixture(const Fixture& f);

std::vector<FixtureOutcome> run_all_detailed(int jobs = 1);

/// ok iff every fixture reproduces its expected outcome.
Report run_all(int jobs = 1);

}  // namespace amalg::fixtures
