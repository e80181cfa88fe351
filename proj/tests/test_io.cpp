#include <doctest.h>

#include "projpair/catalog.hpp"
#include "projpair/io.hpp"

using namespace projpair;

TEST_CASE("parse permutation and table group files") {
    Json perm = Json::parse(R"({
      "format_version": 1, "name": "S3", "kind": "permutation",
      "degree": 3, "generators": [[[0, 1]], [[0, 1, 2]]]
    })");
    GroupPtr s3 = parse_group(perm);
    CHECK(s3->order == 6);

    Json table = Json::parse(R"({
      "format_version": 1, "kind": "table",
      "table": [[0, 1], [1, 0]]
    })");
    CHECK(parse_group(table)->order == 2);

    Json bad = Json::parse(R"({"format_version": 1, "kind": "matrix"})");
    CHECK_THROWS_AS((void)parse_group(bad), InvalidInput);
}

TEST_CASE("group_to_json round-trips through the table format") {
    GroupPtr d4 = catalog_group("D4");
    Json j = group_to_json(d4, Json{{"construction", "catalog"}});
    CHECK(j["format_version"] == 1);
    CHECK(j["kind"] == "table");
    CHECK(j["meta"]["construction"] == "catalog");
    GroupPtr back = parse_group(j);
    CHECK(back->order == 8);
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) CHECK(back->mul(a, b) == d4->mul(a, b));
}

TEST_CASE("load_group_ref resolves catalog names") {
    CHECK(load_group_ref(Json("Q8"))->order == 8);
    CHECK_THROWS_AS((void)load_group_ref(Json("NoSuchFile.json")), InvalidInput);
    CHECK_THROWS_AS((void)load_group_ref(Json(7)), InvalidInput);
}

TEST_CASE("generator words with inverses") {
    GroupPtr s3 = catalog_group("S3");
    // word [1] is the 3-cycle; [-2] is its inverse; [1,-2] is the identity
    CHECK(eval_word(*s3, {1}) == 2);
    CHECK(eval_word(*s3, {-2}) == s3->inv(2));
    CHECK(eval_word(*s3, {1, -2}) == 0);
    CHECK(eval_word(*s3, {}) == 0);
    CHECK(eval_word(*s3, {0, 0}) == 0);
    CHECK_THROWS_AS((void)eval_word(*s3, {5}), InvalidInput);
}

TEST_CASE("parse_dep builds a validated problem") {
    Json j = Json::parse(R"({
      "format_version": 1,
      "pair": {"ambient": "S3", "distinguished": [[1]]},
      "H": "C2", "B": "C2", "G": [], "A": [],
      "beta": {"gen_images": [1]},
      "nu": {"gen_images": [1, 0]}
    })");
    DepFile file = parse_dep(j);
    CHECK(validate_dep(file.dep).empty());
    CHECK(file.dep.Gm().size() == 3);
    CHECK(file.dep.G.size() == 1);
    CHECK(file.distinguished_gens == std::vector<Elem>{2});

    Json broken = j;
    broken["beta"]["gen_images"] = Json::array({1, 1});
    CHECK_THROWS_AS((void)parse_dep(broken), InvalidInput);
    broken = j;
    broken.erase("nu");
    CHECK_THROWS_AS((void)parse_dep(broken), InvalidInput);
}

TEST_CASE("parse_action validates automorphisms") {
    Json j = Json::parse(R"({
      "format_version": 1,
      "actor": "C2", "space": "C3",
      "act": {"gen_images": [[0, 2, 1]]},
      "sub": []
    })");
    ActionFile file = parse_action(j);
    CHECK(file.action.act(1, 1) == 2);
    REQUIRE(file.sub.has_value());
    CHECK(file.sub->size() == 1);

    Json bad = j;
    bad["act"]["gen_images"] = Json::array({Json::array({0, 1, 1})});
    CHECK_THROWS_AS((void)parse_action(bad), InvalidInput);
}

TEST_CASE("parse_experiment") {
    Json j = Json::parse(R"({
      "format_version": 1,
      "beta": {"source": "S3", "target": "C2", "gen_images": [1, 0]},
      "e": 1, "n": 2, "b": [1], "h": [1], "trials": 100, "seed": 11
    })");
    ExperimentSpec spec = parse_experiment(j);
    CHECK(spec.beta.source->order == 6);
    CHECK(spec.n == 2);
    CHECK(spec.seed == 11);
    ExperimentReport report = run_experiment(spec);
    CHECK(report.samples_in_C == 100);
}

TEST_CASE("format_version is mandatory") {
    CHECK_THROWS_AS(require_format_version(Json::parse(R"({"kind":"table"})"), "x"),
                    InvalidInput);
    CHECK_THROWS_AS(require_format_version(Json::parse(R"({"format_version":2})"), "x"),
                    InvalidInput);
    CHECK_NOTHROW(require_format_version(Json::parse(R"({"format_version":1})"), "x"));
}

TEST_CASE("hom_from_pins determines the hom or reports why not") {
    GroupPtr s3 = catalog_group("S3");
    GroupPtr c2 = catalog_group("C2");
    GroupHom sign = hom_from_pins(s3, c2, {{1, 1}, {2, 0}}, "t");
    CHECK(sign.is_surjective());
    // pins that do not generate
    CHECK_THROWS_AS((void)hom_from_pins(s3, c2, {{2, 0}}, "t"), InvalidInput);
    // pins that generate but extend to no hom
    CHECK_THROWS_AS((void)hom_from_pins(s3, c2, {{1, 1}, {2, 1}}, "t"), InvalidInput);
}

TEST_CASE("serialization helpers emit the documented shapes") {
    GroupPtr s3 = catalog_group("S3");
    GroupHom sign = hom_from_generator_images(s3, catalog_group("C2"), {1, 0});
    Json hj = hom_to_json(sign);
    CHECK(hj["gen_images"] == Json::array({1, 0}));

    Json sj = subgroup_to_json(subgroup_closure(s3, {2}));
    CHECK(sj["order"] == 3);

    Json rj = rational_to_json(make_rational(19, 27));
    CHECK(rj["num"] == 19);
    CHECK(rj["den"] == 27);
}
