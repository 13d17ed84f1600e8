#pragma once

#include <string>

#include "json.hpp"

#include "diskmap/map_zoo.hpp"

namespace diskmap {

/*
 * Map-spec JSON: {"type": T, "params": {...}} with
 *
 *   identity | half_plane | strip | koebe      no params
 *   sector                                     {"alpha": a}, 0 < a <= 1
 *   polygon                                    {"n": n}, n >= 3
 *   series                                     {"coeffs": [[re, im], ...], "rmax": r}
 *   herglotz                                   {"phi": PHI, "order": M, "rmax": r}
 *
 * PHI is one of
 *   {"kind": "polynomial", "coeffs": [[re, im], ...]}
 *   {"kind": "blaschke", "zeros": [[re, im], ...], "theta": t}
 *   {"kind": "unimodular", "theta": t}
 *
 * Every variant also accepts, inside params,
 *   "automorphism": {"a": [re, im], "theta": t}     pre-composition
 *   "affine": {"scale": [re, im], "offset": [re, im]} post-composition
 *
 * Malformed input raises Error(InvalidArgument).
 */
[[nodiscard]] MapSpec map_spec_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json map_spec_to_json(const MapSpec& map);

[[nodiscard]] PhiSpec phi_spec_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json phi_spec_to_json(const PhiSpec& phi);

[[nodiscard]] MapSpec load_map_spec(const std::string& path);

} // namespace diskmap
