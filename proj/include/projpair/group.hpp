#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace projpair {

using Elem = int;

inline constexpr int kDefaultOrderCap = 5000;

class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group as an indexed element set with a dense multiplication
/// table. Element 0 is always the identity. Enumeration order of elements
/// built from permutation generators is breadth-first over generator words.
struct FiniteGroup {
    int order = 1;
    std::string name;
    std::vector<std::uint16_t> table;  // row-major, order x order
    std::vector<Elem> inverse;
    std::vector<Elem> generators;      // empty only for the trivial group
    std::vector<std::string> labels;   // optional, element names

    // Spanning tree from the identity: element i != 0 satisfies
    // i == mul(tree_parent[i], generators[tree_gen[i]]).
    std::vector<Elem> tree_parent;
    std::vector<int> tree_gen;

    std::vector<int> element_order;

    Elem mul(Elem a, Elem b) const { return table[std::size_t(a) * order + b]; }
    Elem inv(Elem a) const { return inverse[a]; }
    Elem conj(Elem a, Elem x) const { return mul(inv(x), mul(a, x)); }

    /// Word in generator indices producing element a (from the BFS tree).
    std::vector<int> word_of(Elem a) const;
};

struct Subgroup {
    GroupPtr parent;
    std::vector<Elem> members;  // sorted, contains 0
    std::vector<char> mask;     // size parent->order

    bool contains(Elem x) const { return mask[std::size_t(x)] != 0; }
    int size() const { return int(members.size()); }
    bool is_trivial() const { return members.size() == 1; }
    bool is_whole() const { return int(members.size()) == parent->order; }
};

/// Finite model of a pair (Gamma, Lambda): an ambient group with a
/// distinguished subgroup.
struct FinitePair {
    GroupPtr ambient;
    Subgroup distinguished;
};

// -- construction ----------------------------------------------------------

/// Build a group from permutation generators acting on `degree` points.
/// Each generator is an image vector of length `degree`.
GroupPtr build_group_from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       const std::string& name = "",
                                       int cap = kDefaultOrderCap);

/// Build a group from an explicit multiplication table (0 = identity).
/// If `generators` is empty a minimal generating set is chosen greedily
/// in canonical element order.
GroupPtr build_group_from_table(const std::vector<std::vector<int>>& table,
                                std::vector<Elem> generators = {},
                                const std::string& name = "",
                                int cap = kDefaultOrderCap);

/// Convert a cycle list (e.g. {{0,1},{2,3}}) to an image vector.
std::vector<int> cycles_to_permutation(int degree,
                                       const std::vector<std::vector<int>>& cycles);

// -- subgroup machinery ----------------------------------------------------

Subgroup make_subgroup(GroupPtr group, std::vector<Elem> members);
Subgroup trivial_subgroup(GroupPtr group);
Subgroup whole_subgroup(GroupPtr group);

/// Smallest subgroup containing `seed`.
Subgroup subgroup_closure(GroupPtr group, const std::vector<Elem>& seed);

/// Largest subgroup of `sub` normal in `group`: the intersection of all
/// conjugates of `sub`.
Subgroup normal_core(const Subgroup& sub);

/// Normal closure of `seed` in `group`.
Subgroup normal_closure(GroupPtr group, const std::vector<Elem>& seed);

bool is_normal(const Subgroup& sub);

Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// Product set Gm * M; a subgroup when one factor is normal.
std::vector<Elem> product_set(const Subgroup& a, const Subgroup& b);

/// A Sylow p-subgroup, deterministic (first found in canonical order).
Subgroup sylow_subgroup(GroupPtr group, int p);

bool is_prime(int p);

/// Minimal generating sequence for a subgroup, greedy in element order.
std::vector<Elem> greedy_generators(const Subgroup& sub);

}  // namespace projpair
