#pragma once

#include "projpair/group.hpp"

namespace projpair {

/// Built-in groups resolvable by name anywhere a group file is accepted:
/// C2..C12, S3..S5, A4, A5, D4, D6, Q8, V4. Dn is the dihedral group of
/// order 2n. Results are cached; repeated lookups return the same object.
GroupPtr catalog_group(const std::string& name);

bool is_catalog_name(const std::string& name);

std::vector<std::string> catalog_names();

GroupPtr cyclic_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr dihedral_group(int n);  // order 2n
GroupPtr quaternion_group();
GroupPtr klein_four_group();

}  // namespace projpair
