#include <catch2/catch_amalgamated.hpp>

#include <superflag/flag.hpp>

#include <functional>

using namespace superflag;

namespace {

// brute-force chain counter: test every subset of the grid
long long chains_by_subsets(const std::vector<FlagStep>& grid) {
    REQUIRE(grid.size() <= 22);
    long long total = 0;
    for (std::uint32_t mask = 1; mask < (1u << grid.size()); ++mask) {
        std::vector<FlagStep> pick;
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (1u << i)) pick.push_back(grid[i]);
        std::sort(pick.begin(), pick.end(), [](auto a, auto b) {
            return std::pair(a.d0, a.d1) < std::pair(b.d0, b.d1);
        });
        bool chain = true;
        for (std::size_t i = 0; i + 1 < pick.size(); ++i)
            if (!step_lt(pick[i], pick[i + 1])) chain = false;
        if (chain) ++total;
    }
    return total;
}

} // namespace

TEST_CASE("rational parsing round trips") {
    CHECK(rat_str(parse_rat("3/6")) == "1/2");
    CHECK(rat_str(parse_rat("-4/2")) == "-2");
    CHECK(rat_str(Rat(0)) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("weight arithmetic and pairings") {
    Weight a = Weight::zero(2, 1), b = Weight::zero(2, 1);
    a.x[0] = 1;
    a.y[0] = -1; // x1 - y1
    b.x[0] = 1;  // x1
    CHECK(inner(a, b) == 1);
    CHECK(inner(a, a) == 0); // isotropic odd root
    Weight xi = Weight::zero(2, 1);
    xi.x[0] = 2;
    xi.x[1] = 1;
    xi.y[0] = 1;
    CHECK(eval(a, xi) == 1); // natural pairing does not flip the y sign
    CHECK(inner(a, xi) == 3);
    CHECK((a + b).x[0] == 2);
    CHECK((a - b).y[0] == -1);
    CHECK((Rat(2) * a).y[0] == -2);
    CHECK((-a).x[0] == -1);
    CHECK(weight_str(a) == "(1,0|-1)");
}

TEST_CASE("flag parsing and formatting") {
    FlagType d = parse_flag("1|0,2|1");
    REQUIRE(d.steps.size() == 2);
    CHECK(d.steps[0] == FlagStep{1, 0});
    CHECK(d.steps[1] == FlagStep{2, 1});
    CHECK(flag_str(d) == "1|0,2|1");
    CHECK_THROWS_AS(parse_flag(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_flag("1|"), std::invalid_argument);
    CHECK_THROWS_AS(parse_flag("a|b"), std::invalid_argument);
}

TEST_CASE("flag validation") {
    FamilyDescriptor a21{Family::A, 2, 1};
    CHECK(validate_flag_type(a21, parse_flag("1|0")).ok());
    CHECK(validate_flag_type(a21, parse_flag("1|0,2|0")).ok());
    CHECK_FALSE(validate_flag_type(a21, parse_flag("2|1")).ok());    // whole space
    CHECK_FALSE(validate_flag_type(a21, parse_flag("0|0")).ok());    // zero subspace
    CHECK_FALSE(validate_flag_type(a21, parse_flag("3|0")).ok());    // out of grid
    CHECK_FALSE(validate_flag_type(a21, parse_flag("1|1,1|0")).ok()); // not a chain
    CHECK_FALSE(validate_flag_type(a21, parse_flag("1|0,1|0")).ok()); // not strict

    // the top isotropic step is a proper subspace for osp families
    FamilyDescriptor d21{Family::D, 2, 1};
    CHECK(validate_flag_type(d21, parse_flag("2|1")).ok());
    CHECK(validate_flag_type(d21, parse_flag("1|0,2|1")).ok());
    FamilyDescriptor b11{Family::B, 1, 1};
    CHECK(validate_flag_type(b11, parse_flag("1|1")).ok());

    FamilyDescriptor q3{Family::Q, 3, 0};
    CHECK(validate_flag_type(q3, parse_flag("1|1,2|2")).ok());
    CHECK_FALSE(validate_flag_type(q3, parse_flag("1|0")).ok()); // off diagonal
    CHECK_FALSE(validate_flag_type(q3, parse_flag("3|3")).ok()); // whole space

    FamilyDescriptor p4{Family::P, 4, 0};
    CHECK(validate_flag_type(p4, parse_flag("1|0,2|2")).ok());
    CHECK_FALSE(validate_flag_type(p4, parse_flag("4|4")).ok());

    FamilyDescriptor c2{Family::C, 1, 2};
    CHECK(validate_flag_type(c2, parse_flag("1|2")).ok());
    CHECK_FALSE(validate_flag_type(c2, parse_flag("2|1")).ok());
}

TEST_CASE("flag enumeration agrees with subset brute force") {
    for (FamilyDescriptor f : {FamilyDescriptor{Family::A, 2, 1}, {Family::A, 1, 1},
                               {Family::A, 2, 2}, {Family::B, 1, 1}, {Family::C, 1, 2},
                               {Family::D, 2, 1}, {Family::P, 3, 0}, {Family::Q, 2, 0},
                               {Family::Q, 3, 0}}) {
        auto grid = flag_grid(f);
        auto flags = enumerate_flag_types(f);
        INFO(f.name());
        CHECK((long long)flags.size() == chains_by_subsets(grid));
        CHECK(count_flag_types(f) == (std::uint64_t)flags.size());
        for (const auto& d : flags) CHECK(validate_flag_type(f, d).ok());
        CHECK(std::adjacent_find(flags.begin(), flags.end()) == flags.end());
    }
}

TEST_CASE("frozen enumeration values") {
    CHECK(count_flag_types({Family::A, 2, 1}) == 7);
    auto a11 = enumerate_flag_types({Family::A, 1, 1});
    REQUIRE(a11.size() == 2);
    CHECK(flag_str(a11[0]) == "0|1");
    CHECK(flag_str(a11[1]) == "1|0");
    auto q2 = enumerate_flag_types({Family::Q, 2, 0});
    REQUIRE(q2.size() == 1);
    CHECK(flag_str(q2[0]) == "1|1");
}

TEST_CASE("enumeration refuses above the cap") {
    CHECK_THROWS_AS(enumerate_flag_types({Family::A, 4, 3}, 50), std::length_error);
}

TEST_CASE("symmetry profiles") {
    FamilyDescriptor a22{Family::A, 2, 2};
    auto prof = symmetry_profile(a22, parse_flag("1|1"));
    CHECK(prof.even_symmetric);
    CHECK(prof.even_symmetrizable);
    CHECK(prof.pi_symmetric);

    prof = symmetry_profile(a22, parse_flag("1|0"));
    CHECK_FALSE(prof.even_symmetric);
    CHECK(prof.even_symmetrizable); // closure {1|0, 1|2} is a chain
    CHECK_FALSE(prof.pi_symmetric);
    CHECK(prof.odd_symmetrizable); // odd mirror of (1,0) is (2,1); {1|0, 2|1} chains

    FamilyDescriptor a31{Family::A, 3, 1};
    prof = symmetry_profile(a31, parse_flag("1|0,2|1"));
    CHECK(prof.even_symmetric);

    prof = symmetry_profile(a22, parse_flag("2|0"));
    CHECK_FALSE(prof.even_symmetric);
    CHECK_FALSE(prof.even_symmetrizable); // mirror (0,2) is incomparable with (2,0)

    FamilyDescriptor a33{Family::A, 3, 3};
    prof = symmetry_profile(a33, parse_flag("1|1,2|2"));
    CHECK(prof.even_symmetric);
    CHECK(prof.pi_symmetric);
}
