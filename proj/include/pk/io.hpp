/*
 * Copyright 2026 The pk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef PK_IO_HPP
#define PK_IO_HPP

// Instance files, schema "pk-instance-v1":
//
//   {
//     "schema": "pk-instance-v1",
//     "name": "c2-in-c4",
//     "n": 4,                 order of the root of unity; K = Q(zeta_n)
//     "m": 2,                 components of S = K^m
//     "group": [4],           invariant factors, each dividing the next
//     "actions": [            one entry per element with a nonzero domain
//       {"element": [2], "domain": [1, 2], "sigma": [2, 1]}
//     ],
//     "cochains": [           optional torsion 1-cochains, exponents of zeta_order
//       {"name": "f", "order": 4, "exponents": [[0, 0], [null, null], [2, 2], [null, null]]}
//     ],
//     "coordinates": {"x": [...], "y": [...]}   optional, elements of K^m
//   }
//
// Components are 1-based. "domain" lists D_{g^-1} and "sigma" the image of each listed
// component. Elements missing from "actions" have empty domain, except the identity, which
// defaults to the identity map. Field entries are integers, "p/q" strings, or arrays of those
// read as coefficients of 1, z, z^2, ...

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pk/cohomology.hpp"
#include "pk/partial_action.hpp"

namespace pk::io {

inline constexpr std::string_view kInstanceSchema = "pk-instance-v1";

struct NamedCochain {
  std::string name;
  TorsionCochain cochain;
};

struct Instance {
  std::string name;
  std::string digest;
  std::shared_ptr<const PartialAction> action;
  std::vector<NamedCochain> cochains;
  std::optional<GaloisCoordinates> coordinates;
};

/// "fnv1a64:" followed by 16 hex digits.
std::string digest(std::string_view bytes);

/// Line (1-based) where the value at each JSON pointer starts. Expects well-formed JSON.
std::map<std::string, int> value_lines(std::string_view text);

/// Throws InputError with the line of the offending value.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

}  // namespace pk::io

#endif  // PK_IO_HPP
