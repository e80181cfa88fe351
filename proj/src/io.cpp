#include "projpair/io.hpp"

#include <fstream>

#include "projpair/catalog.hpp"

namespace projpair {

namespace {

const Json& need(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw InvalidInput(where + ": missing required field \"" + key + "\"");
    return *it;
}

int need_int(const Json& j, const std::string& key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number_integer())
        throw InvalidInput(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

void require_format_version(const Json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("format_version") ||
        !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1)
        throw InvalidInput(where + ": expected \"format_version\": 1");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw InvalidInput("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

GroupPtr parse_group(const Json& j, int cap) {
    const std::string where = "group";
    if (!j.is_object()) throw InvalidInput("group: expected a JSON object");
    std::string kind = need(j, "kind", where).get<std::string>();
    std::string name = j.value("name", std::string());
    if (kind == "permutation") {
        int degree = need_int(j, "degree", where);
        const Json& gens = need(j, "generators", where);
        if (!gens.is_array()) throw InvalidInput("group: \"generators\" must be a list");
        std::vector<std::vector<int>> perms;
        for (const Json& cycles : gens) {
            std::vector<std::vector<int>> cycle_list;
            for (const Json& cyc : cycles)
                cycle_list.push_back(cyc.get<std::vector<int>>());
            perms.push_back(cycles_to_permutation(degree, cycle_list));
        }
        return build_group_from_permutations(degree, perms, name, cap);
    }
    if (kind == "table") {
        const Json& rows = need(j, "table", where);
        std::vector<std::vector<int>> table;
        for (const Json& row : rows) table.push_back(row.get<std::vector<int>>());
        std::vector<Elem> gens;
        if (j.contains("generators")) gens = j["generators"].get<std::vector<Elem>>();
        return build_group_from_table(table, std::move(gens), name, cap);
    }
    throw InvalidInput("group: unknown kind \"" + kind +
                       "\" (expected \"permutation\" or \"table\")");
}

GroupPtr load_group_ref(const Json& ref, int cap) {
    if (ref.is_string()) {
        std::string s = ref.get<std::string>();
        if (is_catalog_name(s)) return catalog_group(s);
        Json j = read_json_file(s);
        require_format_version(j, s);
        return parse_group(j, cap);
    }
    if (ref.is_object()) return parse_group(ref, cap);
    throw InvalidInput("group reference must be a catalog name, a file path, "
                       "or an inline group object");
}

Json group_to_json(GroupPtr group, Json meta) {
    Json j;
    j["format_version"] = 1;
    j["name"] = group->name;
    j["kind"] = "table";
    Json rows = Json::array();
    for (Elem a = 0; a < group->order; ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < group->order; ++b) row.push_back(group->mul(a, b));
        rows.push_back(std::move(row));
    }
    j["table"] = std::move(rows);
    j["generators"] = group->generators;
    if (!meta.is_null()) j["meta"] = std::move(meta);
    return j;
}

Elem eval_word(const FiniteGroup& group, const std::vector<int>& word) {
    Elem x = 0;
    for (int letter : word) {
        int idx = letter >= 0 ? letter : -letter - 1;
        if (idx >= int(group.generators.size()))
            throw InvalidInput("generator word: index " + std::to_string(letter) +
                               " out of range for a group with " +
                               std::to_string(group.generators.size()) + " generators");
        Elem g = group.generators[std::size_t(idx)];
        x = group.mul(x, letter >= 0 ? g : group.inv(g));
    }
    return x;
}

std::vector<Elem> eval_words(const FiniteGroup& group, const Json& words,
                             const std::string& where) {
    if (!words.is_array())
        throw InvalidInput(where + ": expected a list of generator words");
    std::vector<Elem> out;
    for (const Json& w : words) {
        if (!w.is_array())
            throw InvalidInput(where + ": each generator word must be a list of "
                               "generator indices");
        out.push_back(eval_word(group, w.get<std::vector<int>>()));
    }
    return out;
}

GroupHom parse_gen_images(const Json& j, GroupPtr source, GroupPtr target,
                          const std::string& where) {
    const Json& imgs = need(j, "gen_images", where);
    std::vector<Elem> images = imgs.get<std::vector<Elem>>();
    if (images.size() != source->generators.size())
        throw InvalidInput(where + ": expected " +
                           std::to_string(source->generators.size()) +
                           " generator images, got " + std::to_string(images.size()));
    for (Elem v : images)
        if (v < 0 || v >= target->order)
            throw InvalidInput(where + ": generator image " + std::to_string(v) +
                               " is not a target element");
    try {
        return hom_from_generator_images(source, target, images);
    } catch (const InvalidInput& e) {
        throw InvalidInput(where + ": " + e.what());
    }
}

FinitePair parse_pair(const Json& j, int cap) {
    GroupPtr ambient = load_group_ref(need(j, "ambient", "pair"), cap);
    std::vector<Elem> gens =
        eval_words(*ambient, need(j, "distinguished", "pair"), "pair.distinguished");
    return FinitePair{ambient, subgroup_closure(ambient, gens)};
}

DepFile parse_dep(const Json& j, int cap) {
    const Json& pair_j = need(j, "pair", "dep");
    FinitePair pair = parse_pair(pair_j, cap);
    GroupPtr L = pair.ambient;
    std::vector<Elem> dist_gens =
        eval_words(*L, need(pair_j, "distinguished", "dep"), "dep.pair.distinguished");

    GroupPtr H = load_group_ref(need(j, "H", "dep"), cap);
    GroupPtr B = load_group_ref(need(j, "B", "dep"), cap);
    Subgroup G = subgroup_closure(H, eval_words(*H, need(j, "G", "dep"), "dep.G"));
    Subgroup A = subgroup_closure(B, eval_words(*B, need(j, "A", "dep"), "dep.A"));
    GroupHom beta = parse_gen_images(need(j, "beta", "dep"), H, B, "dep.beta");
    GroupHom nu = parse_gen_images(need(j, "nu", "dep"), L, B, "dep.nu");

    DepFile file;
    file.dep = DoubleEmbeddingProblem{std::move(pair), H, B, std::move(G),
                                      std::move(A), std::move(beta), std::move(nu)};
    file.distinguished_gens = std::move(dist_gens);
    return file;
}

ActionFile parse_action(const Json& j, int cap) {
    GroupPtr actor = load_group_ref(need(j, "actor", "action"), cap);
    GroupPtr space = load_group_ref(need(j, "space", "action"), cap);
    const Json& act = need(j, "act", "action");
    const Json& imgs = need(act, "gen_images", "action.act");
    std::vector<std::vector<Elem>> autos;
    for (const Json& img : imgs) autos.push_back(img.get<std::vector<Elem>>());
    if (autos.size() != actor->generators.size())
        throw InvalidInput("action.act: expected one automorphism per actor "
                           "generator (" + std::to_string(actor->generators.size()) +
                           "), got " + std::to_string(autos.size()));
    ActionFile file{action_from_generator_automorphisms(actor, space, autos), {}};
    if (j.contains("sub"))
        file.sub = subgroup_closure(actor, eval_words(*actor, j["sub"], "action.sub"));
    return file;
}

ExperimentSpec parse_experiment(const Json& j, int cap) {
    const Json& beta_j = need(j, "beta", "experiment");
    GroupPtr H = load_group_ref(need(beta_j, "source", "experiment.beta"), cap);
    GroupPtr B = load_group_ref(need(beta_j, "target", "experiment.beta"), cap);
    ExperimentSpec spec;
    spec.beta = parse_gen_images(beta_j, H, B, "experiment.beta");
    spec.e = need_int(j, "e", "experiment");
    spec.n = need_int(j, "n", "experiment");
    spec.b = need(j, "b", "experiment").get<std::vector<Elem>>();
    spec.h = need(j, "h", "experiment").get<std::vector<Elem>>();
    spec.trials = need(j, "trials", "experiment").get<long long>();
    spec.seed = need(j, "seed", "experiment").get<std::uint64_t>();
    spec.cap = cap;
    return spec;
}

GroupHom hom_from_pins(GroupPtr source, GroupPtr target,
                       const std::vector<std::pair<Elem, Elem>>& pins,
                       const std::string& where) {
    std::vector<Elem> pinned;
    for (const auto& [x, y] : pins) {
        if (x < 0 || x >= source->order)
            throw InvalidInput(where + ": pinned element out of range");
        if (y < 0 || y >= target->order)
            throw InvalidInput(where + ": pinned image out of range");
        pinned.push_back(x);
    }
    if (!subgroup_closure(source, pinned).is_whole())
        throw InvalidInput(where + ": pinned elements do not generate the source, "
                           "so the homomorphism is underdetermined");
    HomConstraints constraints;
    constraints.pin = pins;
    std::optional<GroupHom> hom = first_hom(source, target, constraints);
    if (!hom)
        throw InvalidInput(where + ": the prescribed generator images do not "
                           "extend to a homomorphism");
    return *hom;
}

Json hom_to_json(const GroupHom& hom) {
    Json imgs = Json::array();
    for (Elem g : hom.source->generators) imgs.push_back(hom(g));
    return Json{{"gen_images", std::move(imgs)}};
}

Json subhom_to_json(const SubHom& hom) {
    std::vector<Elem> gens = greedy_generators(hom.domain);
    Json imgs = Json::array();
    for (Elem g : gens) imgs.push_back(hom(g));
    return Json{{"domain_generators", gens}, {"gen_images", std::move(imgs)}};
}

Json subgroup_to_json(const Subgroup& sub) {
    return Json{{"generators", greedy_generators(sub)},
                {"members", sub.members},
                {"order", sub.size()}};
}

Json rational_to_json(const Rational& r) {
    return Json{{"den", r.den}, {"num", r.num}, {"value", r.value()}};
}

Json report_to_json(const ExperimentReport& report) {
    Json j;
    j["exact_fraction"] =
        report.exact_fraction ? rational_to_json(*report.exact_fraction) : Json();
    j["estimate"] = report.estimate;
    j["std_error"] = report.std_error;
    j["lower_bound"] = rational_to_json(report.lower_bound);
    j["independence_verified"] = report.independence_verified;
    j["samples_in_C"] = report.samples_in_C;
    j["sigma_hits"] = report.sigma_hits;
    j["coset_size"] = report.coset_size;
    j["model_order"] = report.model_order;
    return j;
}

Json solution_to_json(const WeakSolution& sol) {
    return Json{{"theta", hom_to_json(sol.theta)}, {"verified", true}};
}

}  // namespace projpair
