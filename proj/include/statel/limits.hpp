#pragma once

#include <cstdint>

namespace statel {

// Capacity knobs shared by the reasoning and oracle pipelines.  The defaults
// are sized for desk-scale knowledge bases; the CLI exposes them via --budget
// and the STATEL_BUDGET environment variable.
struct Limits {
    int max_concept_names = 24;            // type-space bit width cap
    int max_choice_sets = 20;              // cap on E/F choice sets per KB
    long max_pivots = 1'000'000;           // simplex pivot cap per solve
    std::uint64_t enum_budget = std::uint64_t{1} << 26;  // oracle enumeration cap
    int jobs = 0;                          // 0 = use all hardware threads
};

}  // namespace statel
