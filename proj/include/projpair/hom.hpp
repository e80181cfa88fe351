#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "projpair/group.hpp"

namespace projpair {

/// A homomorphism stored as a total element map with cached kernel/image.
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<Elem> map;
    Subgroup kernel;
    Subgroup image;

    Elem operator()(Elem x) const { return map[std::size_t(x)]; }
    bool is_surjective() const { return image.size() == target->order; }
    bool is_injective() const { return kernel.size() == 1; }
};

/// A homomorphism defined on a subgroup of its source, kept in the ambient
/// group's element indices (values land in the target group).
struct SubHom {
    Subgroup domain;
    GroupPtr target;
    std::vector<Elem> map;  // size domain.parent->order, -1 outside the domain

    Elem operator()(Elem x) const { return map[std::size_t(x)]; }
    bool defined(Elem x) const { return domain.contains(x); }
};

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<Elem> map);
GroupHom identity_hom(GroupPtr group);
GroupHom trivial_hom(GroupPtr source, GroupPtr target);
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom hom_from_generator_images(GroupPtr source, GroupPtr target,
                                   const std::vector<Elem>& images);

SubHom make_subhom(Subgroup domain, GroupPtr target, std::vector<Elem> map);
/// Restriction of a full homomorphism to a subgroup of its source.
SubHom restrict_hom(const GroupHom& hom, const Subgroup& domain);
SubHom compose(const GroupHom& outer, const SubHom& inner);

/// Image of a subgroup under a homomorphism, as a subgroup of the target.
Subgroup image_of(const GroupHom& hom, const Subgroup& sub);
Subgroup preimage_of(const GroupHom& hom, const Subgroup& sub);
Subgroup image_of(const SubHom& hom);

/// Search-side conditions for enumerate_homs. All optional parts compose.
struct HomConstraints {
    /// Demand after(theta(x)) == equals(x): `after` maps from the search
    /// target, `equals` from the search source, into a common group.
    struct Commuting {
        GroupHom after;
        GroupHom equals;
    };
    std::optional<Commuting> commuting;

    /// Demand theta(of_source) <= into.
    struct ImageIn {
        Subgroup of_source;  // subgroup of the search source
        Subgroup into;       // subgroup of the search target
    };
    std::optional<ImageIn> image_in;

    /// Demand theta agrees with a given partial homomorphism pointwise.
    std::optional<SubHom> restriction;

    /// Demand theta(first) == second for each pair.
    std::vector<std::pair<Elem, Elem>> pin;
};

using HomVisitor = std::function<bool(const GroupHom&)>;  // return false to stop

/// Enumerate every homomorphism source -> target satisfying the constraints,
/// exactly once, in lexicographic order of the generator-image tuple.
/// Backtracking over generator images with pruning by element-order
/// divisibility and by incremental constraint propagation on the partial
/// closure. Returns the number of homomorphisms visited.
long long enumerate_homs(GroupPtr source, GroupPtr target,
                         const HomConstraints& constraints,
                         bool surjective_only, const HomVisitor& visit);

std::vector<GroupHom> all_homs(GroupPtr source, GroupPtr target,
                               const HomConstraints& constraints = {},
                               bool surjective_only = false);

std::optional<GroupHom> first_hom(GroupPtr source, GroupPtr target,
                                  const HomConstraints& constraints = {},
                                  bool surjective_only = false);

/// All sections of a surjective homomorphism: homs s with epi∘s = id.
std::vector<GroupHom> sections_of(const GroupHom& epi);
std::optional<GroupHom> first_section_of(const GroupHom& epi);

/// A subgroup materialized as a group of its own, with the inclusion map.
struct EmbeddedGroup {
    GroupPtr group;
    GroupHom inclusion;  // group -> parent of the subgroup
};
EmbeddedGroup subgroup_as_group(const Subgroup& sub);

/// Quotient by a normal subgroup; cosets ordered by least representative.
struct QuotientGroup {
    GroupPtr group;
    GroupHom projection;  // parent -> quotient
};
QuotientGroup quotient_group(GroupPtr group, const Subgroup& normal_sub);

}  // namespace projpair
