#pragma once

#include <span>
#include <string_view>

namespace eulerweft {

/// Bundled example inputs, shipped inside the binary so the CLI can
/// materialize a working corpus anywhere. `expected` carries frozen
/// reference values (JSON) that the test suite re-derives.
struct Fixture {
    std::string_view name;
    std::string_view kind;  // "graph" | "circuit" | "ising"
    std::string_view contents;
    std::string_view expected;  // "" when nothing is frozen
};

std::span<const Fixture> corpus();
const Fixture* find_fixture(std::string_view name);

}  // namespace eulerweft
