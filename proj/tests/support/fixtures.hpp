#ifndef FOURPAGE_TESTS_FIXTURES_HPP
#define FOURPAGE_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "fourpage/cli/fixtures.hpp"

namespace fourpage::testing {

// Bundled table diagram by name, e.g. "3_1" or "L2a1".
cli::KnotFixture table(const std::string& name);
// Every bundled table diagram, in file-name order.
const std::vector<cli::KnotFixture>& all_tables();

Diagram sample(const std::string& file);  // from data/samples

Diagram trefoil();
Diagram hopf();
Diagram figure_eight();

}  // namespace fourpage::testing

#endif  // FOURPAGE_TESTS_FIXTURES_HPP
