#pragma once

#include "lff/network.hpp"

#include <string>

namespace lff {

/// JSON checkpoint of named parameter arrays with shapes; layers appear in
/// network order (fourier first when present, then affine0, affine1, ...),
/// so the format is stable across versions. Doubles round-trip exactly.
void save_checkpoint(const Network& net, const std::string& path);

Network load_checkpoint(const std::string& path);

std::string checkpoint_to_json(const Network& net);
Network checkpoint_from_json(const std::string& json_text);

} // namespace lff
