#pragma once

#include <json.hpp>

#include "projpair/cohomology.hpp"
#include "projpair/dep.hpp"
#include "projpair/sampler.hpp"

namespace projpair {

using Json = nlohmann::json;

/// Every file format carries {"format_version": 1}. Throws InvalidInput
/// with `where` in the message when absent or wrong.
void require_format_version(const Json& j, const std::string& where);

/// Resolve a group reference: a built-in catalog name, an inline JSON
/// object, or a path to a group file.
GroupPtr load_group_ref(const Json& ref, int cap = kDefaultOrderCap);
GroupPtr parse_group(const Json& j, int cap = kDefaultOrderCap);
Json group_to_json(GroupPtr group, Json meta = Json());

/// Generator words: lists of indices into group->generators; the value
/// -(i+1) denotes the inverse of generator i. An empty word is the identity.
Elem eval_word(const FiniteGroup& group, const std::vector<int>& word);
std::vector<Elem> eval_words(const FiniteGroup& group, const Json& words,
                             const std::string& where);

GroupHom parse_gen_images(const Json& j, GroupPtr source, GroupPtr target,
                          const std::string& where);

struct DepFile {
    DoubleEmbeddingProblem dep;
    std::vector<Elem> distinguished_gens;  // word values, in file order
};
DepFile parse_dep(const Json& j, int cap = kDefaultOrderCap);

FinitePair parse_pair(const Json& j, int cap = kDefaultOrderCap);

struct ActionFile {
    GroupAction action;
    std::optional<Subgroup> sub;  // optional "sub": actor subgroup words
};
ActionFile parse_action(const Json& j, int cap = kDefaultOrderCap);

ExperimentSpec parse_experiment(const Json& j, int cap = kDefaultOrderCap);

/// A full homomorphism from explicit images of listed elements: the unique
/// hom pinning each generator (element of `source`) to its image, or throws.
GroupHom hom_from_pins(GroupPtr source, GroupPtr target,
                       const std::vector<std::pair<Elem, Elem>>& pins,
                       const std::string& where);

Json hom_to_json(const GroupHom& hom);
Json subhom_to_json(const SubHom& hom);
Json subgroup_to_json(const Subgroup& sub);
Json rational_to_json(const Rational& r);
Json report_to_json(const ExperimentReport& report);
Json solution_to_json(const WeakSolution& sol);

Json read_json_file(const std::string& path);

}  // namespace projpair
