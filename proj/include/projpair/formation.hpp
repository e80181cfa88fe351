#pragma once

#include "projpair/hom.hpp"

namespace projpair {

/// Conjugacy classes, identity class first, ordered by least member.
std::vector<std::vector<Elem>> conjugacy_classes(GroupPtr group);

/// All normal subgroups, computed as lattice joins of normal closures of
/// conjugacy classes. Sorted by (order, member list).
std::vector<Subgroup> normal_subgroups(GroupPtr group);

/// All subgroups (desk scale only). Sorted by (order, member list).
std::vector<Subgroup> all_subgroups(GroupPtr group);

Subgroup derived_subgroup(GroupPtr group);
bool is_abelian(GroupPtr group);
bool is_solvable(GroupPtr group);
bool is_simple(GroupPtr group);
int exponent_of(GroupPtr group);

/// (order, abelian flag, exponent) — the cheap isomorphism fingerprint.
struct GroupFingerprint {
    int order;
    bool abelian;
    int exponent;
    bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(GroupPtr group);

bool isomorphic(GroupPtr a, GroupPtr b);

/// Composition factors via repeated maximal-normal-subgroup extraction.
std::vector<GroupPtr> composition_factors(GroupPtr group);

struct FormationSpec {
    enum class Kind { All, PGroup, Solvable, CompositionFactorsIn };
    Kind kind = Kind::All;
    int p = 0;                       // for PGroup
    std::vector<GroupPtr> factors;   // for CompositionFactorsIn

    static FormationSpec all() { return {}; }
    static FormationSpec p_group(int p);
    static FormationSpec solvable();
    static FormationSpec composition_factors_in(std::vector<GroupPtr> factors);
};

bool formation_member(GroupPtr group, const FormationSpec& spec);

}  // namespace projpair
