#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sprp/instance.hpp"
#include "sprp/instance_io.hpp"

namespace sprp {

// Benchmark-style instance generator. Instances are pure functions of
// (spec, seed); see rng.hpp for the stream layout.
struct GeneratorSpec {
    std::string variant = "standard";  // standard | scattered | decoupling | multidepot
    std::int64_t num_aisles = 5;       // m
    std::int64_t positions = 45;       // n
    std::int64_t picks = 30;           // a: required positions / pick-list SKUs
    std::int64_t cross_gap = 5;        // geometry unit cell

    // scattered
    std::int64_t alpha = 5;  // SKU duplication factor; sku count = max(a, ceil(m*n/alpha))

    // decoupling
    std::int64_t capacity = 2;
    Rat beta = Rat(1, 2);
    std::int64_t items_per_pick = 1;

    // multidepot: candidate probability sigma = sigma_num/sigma_den per entry
    std::int64_t sigma_num = 1, sigma_den = 2;
};

// Number of distinct SKUs stored in a scattered warehouse.
std::int64_t scattered_sku_count(const GeneratorSpec& spec);

AnyInstance generate_instance(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace sprp
