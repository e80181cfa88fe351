#include "projpair/catalog.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace projpair {

GroupPtr cyclic_group(int n) {
    if (n < 1) throw InvalidInput("cyclic group order must be positive");
    if (n == 1)
        return build_group_from_permutations(1, {}, "C1");
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    return build_group_from_permutations(n, {cycles_to_permutation(n, {cycle})},
                                         "C" + std::to_string(n));
}

GroupPtr symmetric_group(int n) {
    if (n < 3) throw InvalidInput("symmetric_group expects n >= 3");
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    return build_group_from_permutations(
        n,
        {cycles_to_permutation(n, {{0, 1}}), cycles_to_permutation(n, {cycle})},
        "S" + std::to_string(n));
}

GroupPtr alternating_group(int n) {
    if (n == 4)
        return build_group_from_permutations(
            4, {cycles_to_permutation(4, {{0, 1, 2}}), cycles_to_permutation(4, {{1, 2, 3}})},
            "A4");
    if (n == 5)
        return build_group_from_permutations(
            5, {cycles_to_permutation(5, {{0, 1, 2, 3, 4}}), cycles_to_permutation(5, {{0, 1, 2}})},
            "A5");
    throw InvalidInput("alternating_group supports n = 4, 5");
}

GroupPtr dihedral_group(int n) {
    if (n < 2) throw InvalidInput("dihedral_group expects n >= 2");
    std::vector<int> rot(n);
    std::iota(rot.begin(), rot.end(), 0);
    std::vector<int> refl(n);
    for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
    return build_group_from_permutations(n, {cycles_to_permutation(n, {rot}), refl},
                                         "D" + std::to_string(n));
}

GroupPtr quaternion_group() {
    // Elements 1, i, -1, -i, j, k, -j, -k encoded as (basis, sign) with the
    // standard quaternion relations; generators i and j.
    struct Q {
        int b;  // 0=1, 1=i, 2=j, 3=k
        int s;  // +1 / -1
    };
    auto qmul = [](Q a, Q b) -> Q {
        static const int basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        return {basis[a.b][b.b], a.s * b.s * sign[a.b][b.b]};
    };
    std::vector<Q> elems;
    auto idx = [&](Q q) -> int {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i].b == q.b && elems[i].s == q.s) return int(i);
        elems.push_back(q);
        return int(elems.size()) - 1;
    };
    idx({0, 1});
    // BFS over words in {i, j} to match the canonical enumeration order.
    Q gens[2] = {{1, 1}, {2, 1}};
    for (std::size_t qi = 0; qi < elems.size(); ++qi)
        for (const Q& g : gens) idx(qmul(elems[qi], g));
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            table[a][b] = idx(qmul(elems[a], elems[b]));
    return build_group_from_table(table, {idx({1, 1}), idx({2, 1})}, "Q8");
}

GroupPtr klein_four_group() {
    return build_group_from_permutations(
        4, {cycles_to_permutation(4, {{0, 1}}), cycles_to_permutation(4, {{2, 3}})}, "V4");
}

namespace {

GroupPtr build_catalog(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'C') {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= 12) return cyclic_group(n);
    }
    if (name == "S3" || name == "S4" || name == "S5") return symmetric_group(name[1] - '0');
    if (name == "A4" || name == "A5") return alternating_group(name[1] - '0');
    if (name == "D4") return dihedral_group(4);
    if (name == "D6") return dihedral_group(6);
    if (name == "Q8") return quaternion_group();
    if (name == "V4") return klein_four_group();
    throw InvalidInput("unknown catalog group: " + name);
}

}  // namespace

bool is_catalog_name(const std::string& name) {
    for (const auto& n : catalog_names())
        if (n == name) return true;
    return false;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 2; n <= 12; ++n) names.push_back("C" + std::to_string(n));
    for (const char* n : {"S3", "S4", "S5", "A4", "A5", "D4", "D6", "Q8", "V4"})
        names.push_back(n);
    return names;
}

GroupPtr catalog_group(const std::string& name) {
    static std::mutex mtx;
    static std::map<std::string, GroupPtr> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    GroupPtr g = build_catalog(name);
    cache[name] = g;
    return g;
}

}  // namespace projpair
