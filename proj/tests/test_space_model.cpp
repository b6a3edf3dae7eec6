#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "esw/space_model.hpp"

using namespace esw;

TEST_CASE("wallach descriptors match the catalog data") {
    SUBCASE("W2(1,1,1)") {
        auto d = wallach_descriptor(WallachFamily::W2, {1, 1, 1});
        CHECK(d.r == 3);
        CHECK(d.dims == std::vector<long long>{2, 2, 2});
        CHECK(d.constants.value(1, 2, 3).rational() == Rational(1, 3));
        CHECK(d.killing[0].rational() == Rational(1));
    }
    SUBCASE("W1(3,1,1)") {
        auto d = wallach_descriptor(WallachFamily::W1, {3, 1, 1});
        CHECK(d.dims == std::vector<long long>{1, 3, 3});
        CHECK(d.constants.value(1, 2, 3).rational() == Rational(1, 2));
    }
    SUBCASE("W1 excludes (k,2,2) and permutations") {
        CHECK_THROWS_AS(wallach_descriptor(WallachFamily::W1, {5, 2, 2}), std::invalid_argument);
        CHECK_THROWS_AS(wallach_descriptor(WallachFamily::W1, {2, 7, 2}), std::invalid_argument);
        CHECK_NOTHROW(wallach_descriptor(WallachFamily::W1, {2, 3, 4}));
    }
    SUBCASE("W4 dims are integral and total 3l^2-1") {
        for (long long l = 2; l <= 8; ++l) {
            auto d = wallach_descriptor(WallachFamily::W4, {l});
            CHECK(d.dims == std::vector<long long>{l * l - 1, l * (l + 1), l * (l - 1)});
            CHECK(d.n() == 3 * l * l - 1);
            CHECK(d.constants.value(1, 2, 3).rational() == Rational(l * l - 1, 4));
        }
        CHECK_THROWS_AS(wallach_descriptor(WallachFamily::W4, {1}), std::invalid_argument);
    }
    SUBCASE("W5") {
        auto d = wallach_descriptor(WallachFamily::W5, {5});
        CHECK(d.dims == std::vector<long long>{8, 8, 12});
        CHECK(d.constants.value(1, 2, 3).rational() == Rational(3, 2));
        CHECK_THROWS_AS(wallach_descriptor(WallachFamily::W5, {3}), std::invalid_argument);
    }
}

TEST_CASE("exceptional descriptors") {
    auto w6 = exceptional_wallach_descriptor(6);
    CHECK(w6.dims == std::vector<long long>{16, 16, 24});
    CHECK(w6.constants.value(1, 2, 3).rational() == Rational(4));
    auto w8 = exceptional_wallach_descriptor(8);
    CHECK(w8.dims == std::vector<long long>{14, 28, 12});
    auto w11 = exceptional_wallach_descriptor(11);
    CHECK(w11.dims == std::vector<long long>{35, 35, 35});
    CHECK(w11.constants.value(1, 2, 3).rational() == Rational(175, 18));
    auto w15 = exceptional_wallach_descriptor(15);
    CHECK(w15.dims == std::vector<long long>{8, 8, 8});
    CHECK_THROWS_AS(exceptional_wallach_descriptor(5), std::invalid_argument);
    CHECK_THROWS_AS(exceptional_wallach_descriptor(16), std::invalid_argument);
}

TEST_CASE("flag_r2 descriptor") {
    auto d = flag_r2_descriptor(4, 1);
    CHECK(d.constants.value(1, 1, 2).rational() == Rational(1, 2));
    CHECK(d.constants.value(1, 2, 2).is_zero());
    CHECK(d.constants.value(2, 2, 2).is_zero());
    CHECK(d.constants.value(1, 1, 1).is_zero());
    auto d2 = flag_r2_descriptor(8, 2);
    CHECK(d2.constants.value(1, 1, 2).rational() == Rational(1));
}

TEST_CASE("full flag of SU(n)") {
    auto d3 = full_flag_sun_descriptor(3);
    CHECK(d3.r == 3);
    CHECK(d3.dims == std::vector<long long>{2, 2, 2});
    CHECK(d3.constants.size() == 1);
    CHECK(d3.constants.value(1, 2, 3).rational() == Rational(1, 3));

    auto d4 = full_flag_sun_descriptor(4);
    CHECK(d4.r == 6);
    CHECK(d4.constants.size() == 4);  // C(4,3) triangles
    for (const auto& [t, v] : d4.constants.entries()) CHECK(v.rational() == Rational(1, 4));

    auto d5 = full_flag_sun_descriptor(5);
    CHECK(d5.r == 10);
    CHECK(d5.constants.size() == 10);  // C(5,3)

    // triangle {1,2},{1,3},{2,3} carries a constant; a non-triangle does not
    int i12 = full_flag_pair_index(4, 1, 2);
    int i13 = full_flag_pair_index(4, 1, 3);
    int i23 = full_flag_pair_index(4, 2, 3);
    int i34 = full_flag_pair_index(4, 3, 4);
    CHECK_FALSE(d4.constants.value(i12, i13, i23).is_zero());
    CHECK(d4.constants.value(i12, i13, i34).is_zero());
}

TEST_CASE("descriptor validation names the offending field") {
    SpaceDescriptor d;
    d.name = "bad";
    d.r = 3;
    d.dims = {2, 2, 2};
    d.killing = {Scalar(1), Scalar(1), Scalar(1)};
    d.constants = StructureConstants(3);
    CHECK_THROWS_WITH_AS(d.constants.set(1, 2, 4, Scalar(1)),
                         doctest::Contains("triple (1,2,4)"), ValidationError);
    CHECK_THROWS_WITH_AS(d.constants.set(1, 2, 3, Scalar(-1)), doctest::Contains("negative"),
                         ValidationError);

    d.dims = {2, 2};
    CHECK_THROWS_WITH_AS((void)validate_descriptor(d), doctest::Contains("dims"), ValidationError);
    d.dims = {2, 2, 2};

    SUBCASE("zero killing entry on a bracketed summand warns but passes") {
        d.constants.set(1, 2, 3, Scalar::ratio(1, 3));
        d.killing[1] = Scalar(0);
        auto warnings = validate_descriptor(d);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("killing[1]") != std::string::npos);
    }
}

TEST_CASE("descriptor files round-trip rationals bit-exactly") {
    auto d = exceptional_wallach_descriptor(11);
    d.trivial_dim = 0;
    std::string path =
        (std::filesystem::temp_directory_path() / "esw_test_descriptor.json").string();
    save_descriptor(d, path);
    auto back = load_descriptor(path);
    CHECK(back.name == d.name);
    CHECK(back.r == d.r);
    CHECK(back.dims == d.dims);
    for (int i = 0; i < 3; ++i) CHECK(back.killing[i].rational() == d.killing[i].rational());
    CHECK(back.constants.value(1, 2, 3).rational() == Rational(175, 18));
    CHECK(back.notes == d.notes);
    std::remove(path.c_str());
}

TEST_CASE("descriptor parsing errors") {
    SUBCASE("minimal r=1 file") {
        auto d = descriptor_from_json_text(
            R"({"name":"irr","r":1,"dims":[3],"killing":["1"]})");
        CHECK(d.r == 1);
        CHECK(d.constants.empty());
    }
    SUBCASE("duplicate triples rejected") {
        CHECK_THROWS_WITH_AS(
            (void)descriptor_from_json_text(
                R"({"name":"x","r":3,"dims":[2,2,2],"killing":["1","1","1"],
                    "constants":[{"triple":[1,2,3],"value":"1/3"},{"triple":[1,2,3],"value":"1/4"}]})"),
            doctest::Contains("duplicate triple"), ParseError);
    }
    SUBCASE("out-of-range triple named") {
        CHECK_THROWS_WITH_AS(
            (void)descriptor_from_json_text(
                R"({"name":"x","r":3,"dims":[2,2,2],"killing":["1","1","1"],
                    "constants":[{"triple":[1,2,4],"value":"1/3"}]})"),
            doctest::Contains("(1,2,4)"), ValidationError);
    }
    SUBCASE("bare numbers become approximate scalars") {
        auto d = descriptor_from_json_text(
            R"({"name":"x","r":2,"dims":[2,3],"killing":[1,"1"],
                "constants":[{"triple":[1,1,2],"value":0.25}]})");
        CHECK_FALSE(d.killing[0].is_exact());
        CHECK(d.killing[1].is_exact());
        CHECK_FALSE(d.constants.value(1, 1, 2).is_exact());
    }
    SUBCASE("unsorted triple rejected") {
        CHECK_THROWS_AS((void)descriptor_from_json_text(
                            R"({"name":"x","r":3,"dims":[2,2,2],"killing":["1","1","1"],
                                "constants":[{"triple":[2,1,3],"value":"1/3"}]})"),
                        ParseError);
    }
    SUBCASE("total dimension must be at least 2") {
        CHECK_THROWS_AS(
            (void)descriptor_from_json_text(R"({"name":"x","r":1,"dims":[1],"killing":["1"]})"),
            ValidationError);
    }
}

TEST_CASE("full_flag_sun(3) equals W2(1,1,1) up to relabeling") {
    auto a = full_flag_sun_descriptor(3);
    auto b = wallach_descriptor(WallachFamily::W2, {1, 1, 1});
    CHECK(a.dims == b.dims);
    CHECK(a.constants.value(1, 2, 3).rational() == b.constants.value(1, 2, 3).rational());
}

TEST_CASE("catalog has 17 entries") { CHECK(catalog_entries().size() == 17); }
