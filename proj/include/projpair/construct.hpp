#pragma once

#include "projpair/hom.hpp"

namespace projpair {

struct DirectProduct {
    GroupPtr group;
    GroupHom inject_left, inject_right;   // G -> G x H, H -> G x H
    GroupHom project_left, project_right; // G x H -> G, G x H -> H
};

/// Componentwise product; elements indexed mixed-radix (left index major).
DirectProduct direct_product(GroupPtr left, GroupPtr right,
                             int cap = kDefaultOrderCap);

struct FiberProduct {
    GroupPtr total;       // {(h, g) : left_over(h) == right_over(g)}
    GroupHom left_proj;   // total -> H
    GroupHom right_proj;  // total -> G
    GroupHom left_over;   // H -> common quotient (beta)
    GroupHom right_over;  // G -> common quotient (alpha)
};

FiberProduct fiber_product(const GroupHom& beta, const GroupHom& alpha,
                           int cap = kDefaultOrderCap);

/// Lift through a cartesian square: theta(x) is the unique total-group
/// element projecting to (theta_bar(x), mu(x)). Throws InvalidInput with a
/// witness if some pair (theta_bar(x), mu(x)) is not in the fiber product.
GroupHom fiber_lift(const GroupHom& theta_bar, const GroupHom& mu,
                    const FiberProduct& square);

/// An action of Q on A by automorphisms, stored as a dense table.
struct GroupAction {
    GroupPtr actor;  // Q
    GroupPtr space;  // A
    std::vector<std::uint16_t> table;  // |Q| x |A|

    Elem act(Elem q, Elem a) const { return table[std::size_t(q) * space->order + a]; }
};

GroupAction make_action(GroupPtr actor, GroupPtr space,
                        std::vector<std::uint16_t> table);
GroupAction trivial_action(GroupPtr actor, GroupPtr space);
/// Action from one automorphism image-vector per actor generator.
GroupAction action_from_generator_automorphisms(
    GroupPtr actor, GroupPtr space, const std::vector<std::vector<Elem>>& images);
/// Conjugation action of a group on a normal subgroup of itself.
GroupAction conjugation_action(GroupPtr group, const Subgroup& normal_sub);
/// Restrict the actor to a subgroup (materialized as its own group).
GroupAction restrict_action(const GroupAction& action, const Subgroup& sub);

struct SemidirectProduct {
    GroupPtr group;        // A ⋊ Q, element index a * |Q| + q
    GroupHom embed_space;  // A -> A ⋊ Q
    GroupHom embed_actor;  // Q -> A ⋊ Q
    GroupHom quot;         // A ⋊ Q -> Q, kernel = embedded A
};

SemidirectProduct semidirect_product(const GroupAction& action,
                                     int cap = kDefaultOrderCap);

struct WreathProduct {
    GroupPtr group;        // A ≀ G = A^G ⋊ G
    GroupPtr base_group;   // A^G, coordinates in canonical element order of G
    GroupHom base_embed;   // A^G -> A ≀ G
    GroupHom top_quot;     // A ≀ G -> G
    GroupHom coord_embed;  // A -> A ≀ G as the coordinate subgroup A^1
};

WreathProduct wreath_product(GroupPtr space, GroupPtr top,
                             int cap = kDefaultOrderCap);

struct FiberPower {
    GroupHom base;  // beta: H -> B
    int n = 1;
    GroupPtr total;  // Delta_n = {(h_1..h_n) : beta(h_i) all equal}
    std::vector<GroupHom> projections;
    GroupHom beta_hat;  // Delta_n -> B
};

FiberPower fiber_power(const GroupHom& beta, int n, int cap = kDefaultOrderCap);

}  // namespace projpair
