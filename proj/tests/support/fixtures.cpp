#include "fixtures.hpp"

#include "oracles.hpp"

namespace fourpage::testing {

cli::KnotFixture table(const std::string& name) {
    return cli::load_fixture(oracle::data_dir() + "/fixtures/" + name + ".json");
}

const std::vector<cli::KnotFixture>& all_tables() {
    static const std::vector<cli::KnotFixture> all = [] {
        std::vector<cli::KnotFixture> out;
        for (const auto& path : cli::fixture_files(oracle::data_dir() + "/fixtures")) {
            out.push_back(cli::load_fixture(path));
        }
        return out;
    }();
    return all;
}

Diagram sample(const std::string& file) {
    return cli::load_fixture(oracle::data_dir() + "/samples/" + file).diagram;
}

Diagram trefoil() { return parse_pd("X 1 4 2 5; X 3 6 4 1; X 5 2 6 3"); }
Diagram hopf() { return parse_pd("X 4 1 3 2; X 2 3 1 4"); }
Diagram figure_eight() { return sample("figure_eight.pd"); }

}  // namespace fourpage::testing
