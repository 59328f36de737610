#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "sprp/instance.hpp"

namespace sprp {

using AnyInstance =
    std::variant<StandardInstance, ScatteredInstance, DecouplingInstance, MultiDepotInstance>;

std::string variant_name(const AnyInstance& inst);
const Geometry& geometry_of(const AnyInstance& inst);

// sprp-v1 instance files: UTF-8 JSON, aisles 0-indexed left to right,
// positions 0-indexed top to bottom. See README for the field reference.
std::string write_instance_json(const AnyInstance& inst);
AnyInstance read_instance_json(const std::string& text);

void save_instance(const AnyInstance& inst, const std::string& path);
AnyInstance load_instance(const std::string& path);

}  // namespace sprp
