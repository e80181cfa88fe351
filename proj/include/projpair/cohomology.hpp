#pragma once

#include "projpair/construct.hpp"

namespace projpair {

/// A 1-cocycle of the actor Q with values in the space A:
/// x(q1 q2) = x(q1) · (q1 . x(q2)), forcing x(1) = 1.
struct Cocycle {
    GroupAction action;
    std::vector<Elem> values;  // length |Q|, entries in A

    Elem operator()(Elem q) const { return values[std::size_t(q)]; }
};

Cocycle make_cocycle(GroupAction action, std::vector<Elem> values);

/// All cocycles, lexicographic by the value tuple on Q's generators.
std::vector<Cocycle> enumerate_cocycles(const GroupAction& action);

/// beta'(q) = (x(q), q): the section of A⋊Q -> Q attached to a cocycle.
GroupHom cocycle_to_section(const Cocycle& x, const SemidirectProduct& sd);

/// x(q) = beta'(q)·q^-1: the inverse identification.
Cocycle section_to_cocycle(const GroupHom& beta_prime, const GroupAction& action,
                           const SemidirectProduct& sd);

/// Twisted-conjugation equivalence: y(q) = a^-1 · x(q) · (q . a) for some a.
bool cohomologous(const Cocycle& x, const Cocycle& y);

struct RestrictionReport {
    bool surjective = false;
    /// On success: for Gm-cocycle i, extensions[i] is an extending L-cocycle.
    std::vector<std::pair<Cocycle, Cocycle>> extensions;
    /// On failure: a Gm-cocycle that extends to no L-cocycle.
    std::optional<Cocycle> unextendable;
    long long actor_cocycles = 0;
    long long sub_cocycles = 0;
};

/// Is every cocycle of the restricted action (sub on A) the restriction of
/// a cocycle of the full actor? `class_level` relaxes equality of the
/// restriction to cohomologous-equivalence.
RestrictionReport restriction_surjective(const GroupAction& action, const Subgroup& sub,
                                         bool class_level = false);

}  // namespace projpair
