#include <doctest.h>

#include <set>

#include "projpair/catalog.hpp"
#include "projpair/formation.hpp"

using namespace projpair;

TEST_CASE("conjugacy classes of S3") {
    auto classes = conjugacy_classes(catalog_group("S3"));
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<Elem>{0});
    std::multiset<std::size_t> sizes;
    for (const auto& c : classes) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
}

TEST_CASE("normal subgroup enumeration") {
    CHECK(normal_subgroups(catalog_group("S3")).size() == 3);
    CHECK(normal_subgroups(catalog_group("A5")).size() == 2);
    CHECK(normal_subgroups(catalog_group("V4")).size() == 5);
    CHECK(normal_subgroups(catalog_group("S4")).size() == 4);  // 1, V4, A4, S4
    CHECK(normal_subgroups(catalog_group("Q8")).size() == 6);
    for (const Subgroup& n : normal_subgroups(catalog_group("D4")))
        CHECK(is_normal(n));
}

TEST_CASE("all_subgroups of S3 and C12") {
    CHECK(all_subgroups(catalog_group("S3")).size() == 6);
    CHECK(all_subgroups(catalog_group("C12")).size() == 6);  // divisors of 12
    auto subs = all_subgroups(catalog_group("D4"));
    CHECK(subs.size() == 10);
}

TEST_CASE("derived subgroup and solvability") {
    CHECK(derived_subgroup(catalog_group("S3")).size() == 3);
    CHECK(derived_subgroup(catalog_group("A5")).size() == 60);
    CHECK(derived_subgroup(catalog_group("C12")).size() == 1);
    CHECK(is_solvable(catalog_group("S4")));
    CHECK(is_solvable(catalog_group("Q8")));
    CHECK(!is_solvable(catalog_group("A5")));
    CHECK(!is_solvable(catalog_group("S5")));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(catalog_group("A5")));
    CHECK(is_simple(catalog_group("C5")));
    CHECK(!is_simple(catalog_group("C4")));
    CHECK(!is_simple(catalog_group("S3")));
}

TEST_CASE("abelian flag and exponent") {
    CHECK(is_abelian(catalog_group("C12")));
    CHECK(is_abelian(catalog_group("V4")));
    CHECK(!is_abelian(catalog_group("Q8")));
    CHECK(exponent_of(catalog_group("S3")) == 6);
    CHECK(exponent_of(catalog_group("V4")) == 2);
    CHECK(exponent_of(catalog_group("Q8")) == 4);
    CHECK(exponent_of(catalog_group("C8")) == 8);
}

TEST_CASE("fingerprints and isomorphism testing") {
    CHECK(fingerprint(catalog_group("D4")) == fingerprint(catalog_group("Q8")));
    CHECK(!isomorphic(catalog_group("D4"), catalog_group("Q8")));
    CHECK(!isomorphic(catalog_group("C4"), catalog_group("V4")));
    CHECK(isomorphic(catalog_group("S3"), dihedral_group(3)));
    CHECK(isomorphic(catalog_group("C6"), catalog_group("C6")));
}

TEST_CASE("composition factors") {
    auto s4 = composition_factors(catalog_group("S4"));
    REQUIRE(s4.size() == 4);
    std::multiset<int> orders;
    for (const auto& f : s4) orders.insert(f->order);
    CHECK(orders == std::multiset<int>{2, 2, 2, 3});

    auto a5 = composition_factors(catalog_group("A5"));
    REQUIRE(a5.size() == 1);
    CHECK(a5[0]->order == 60);

    auto c6 = composition_factors(catalog_group("C6"));
    std::multiset<int> c6_orders;
    for (const auto& f : c6) c6_orders.insert(f->order);
    CHECK(c6_orders == std::multiset<int>{2, 3});
}

TEST_CASE("formation membership") {
    CHECK(formation_member(catalog_group("S3"), FormationSpec::solvable()));
    CHECK(!formation_member(catalog_group("A5"), FormationSpec::solvable()));
    CHECK(formation_member(catalog_group("C8"), FormationSpec::p_group(2)));
    CHECK(!formation_member(catalog_group("C6"), FormationSpec::p_group(2)));
    CHECK(formation_member(catalog_group("A5"), FormationSpec::all()));
    CHECK_THROWS_AS((void)FormationSpec::p_group(6), InvalidInput);

    auto s_c2c3 = FormationSpec::composition_factors_in(
        {catalog_group("C2"), catalog_group("C3")});
    CHECK(formation_member(catalog_group("S3"), s_c2c3));
    CHECK(formation_member(catalog_group("C12"), s_c2c3));
    CHECK(!formation_member(catalog_group("C10"), s_c2c3));
    auto only_a5 = FormationSpec::composition_factors_in({catalog_group("A5")});
    CHECK(formation_member(catalog_group("A5"), only_a5));
    CHECK(!formation_member(catalog_group("S5"), only_a5));
}
