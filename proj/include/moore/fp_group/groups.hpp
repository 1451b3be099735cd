#pragma once

#include <string>
#include <string_view>

#include "moore/fp_group/finite_group.hpp"

namespace moore {

FiniteGroupPtr cyclic_group(std::size_t n);
/// Labels e, (12), (13), (23), (123), (132); permutations compose right to left.
FiniteGroupPtr symmetric_group_3();
/// Z/2 x Z/2 with labels e, a, b, ab.
FiniteGroupPtr klein_four();
FiniteGroupPtr dihedral_8();
FiniteGroupPtr quaternion_8();

/// Parses `{ "order": n, "table": [[...]], "labels": [...] }`; labels optional.
FiniteGroupPtr group_from_json(std::string_view text, std::string name = "json");

/// Resolves `z<n>`, `s3`, `k4`, `d8`, `q8`, or a path to a JSON table file.
FiniteGroupPtr group_by_name(std::string_view name);

}  // namespace moore
