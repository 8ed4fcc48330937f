// SPDX-License-Identifier: MIT
//
// Minimal library example: estimate how fast the detection error drops as
// the verifier challenges more slots, for the collinear attacker preset.

#include <cstdio>

#include <orbitauth/orbitauth.hpp>

int main() {
    using namespace orbitauth;

    const Scenario fixed = materialize(preset_scenario("scenario-2"));
    const Scenario random = materialize(preset_scenario("scenario-3"));

    const std::vector<std::size_t> ns{1, 2, 5, 10, 20, 50};
    constexpr std::size_t kTrials = 2'000;
    constexpr std::uint64_t kSeed = 42;

    const auto dep_fixed = dep_versus_n(fixed, ns, kTrials, kSeed);
    const auto dep_random = dep_versus_n(random, ns, kTrials, kSeed);

    std::printf("%6s %18s %18s\n", "N", "min DEP (fixed)", "min DEP (random)");
    for (std::size_t k = 0; k < ns.size(); ++k)
        std::printf("%6zu %18.4f %18.4f\n", ns[k], dep_fixed[k].min_dep, dep_random[k].min_dep);
    return 0;
}
