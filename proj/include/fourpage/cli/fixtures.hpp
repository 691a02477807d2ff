#ifndef FOURPAGE_CLI_FIXTURES_HPP
#define FOURPAGE_CLI_FIXTURES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fourpage/diagram.hpp"

namespace fourpage::cli {

// Reference values copied from public knot tables. They are inputs for
// consistency checks, not results of this library.
struct KnownValues {
    std::optional<int> crossing_number;
    std::optional<int> arc_index;
    std::optional<int> components;
    std::optional<bool> alternating;
    std::string source;
};

struct KnotFixture {
    std::string name;
    Diagram diagram;
    KnownValues known;
};

// Reads a `.json` diagram (optionally with a "known" object) or a PD text
// file. Text fixtures are named after the file stem.
KnotFixture load_fixture(const std::filesystem::path& path);

// Diagram files in a directory (.json, .pd, .txt), sorted by file name.
std::vector<std::filesystem::path> fixture_files(const std::filesystem::path& dir);

}  // namespace fourpage::cli

#endif  // FOURPAGE_CLI_FIXTURES_HPP
