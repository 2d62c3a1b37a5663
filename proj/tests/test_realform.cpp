#include <superflag/realform.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace superflag;

namespace {

std::vector<FamilyDescriptor> sample_families() {
    return {
        {Family::A, 2, 1}, {Family::A, 3, 2},          {Family::A, 2, 2},
        {Family::A, 2, 2, true}, {Family::A, 3, 3, true},
        {Family::B, 1, 1}, {Family::B, 2, 1},          {Family::C, 1, 2},
        {Family::C, 1, 3}, {Family::D, 2, 1},          {Family::D, 2, 2},
        {Family::P, 3},    {Family::P, 4},             {Family::Q, 2},
        {Family::Q, 3},    {Family::Q, 4},
    };
}

bool has_key(const std::vector<RealFormDescriptor>& cat, const std::string& key) {
    return std::any_of(cat.begin(), cat.end(),
                       [&](const RealFormDescriptor& rf) { return rf.key == key; });
}

} // namespace

TEST_CASE("tau is an involution on every catalogued real form") {
    for (const auto& f : sample_families()) {
        auto roots = build_roots(f);
        for (const auto& rf : catalog(f)) {
            INFO(f.name() << " " << rf.key);
            for (const auto& a : roots) {
                Root image = rf.tau(a);
                CHECK(rf.tau(image) == a);
            }
        }
    }
}

TEST_CASE("tau permutes the root system") {
    for (const auto& f : sample_families()) {
        auto roots = build_roots(f);
        for (const auto& rf : catalog(f)) {
            INFO(f.name() << " " << rf.key);
            std::vector<Root> images;
            for (const auto& a : roots) {
                Root image = rf.tau(a);
                REQUIRE(contains_root(roots, image));
                images.push_back(image);
            }
            std::sort(images.begin(), images.end());
            CHECK(images == roots);
        }
    }
}

TEST_CASE("catalog membership") {
    FamilyDescriptor a32{Family::A, 3, 2};
    auto cat = catalog(a32);
    CHECK(has_key(cat, "su:1,2|1,1"));
    CHECK(has_key(cat, "su:0,3|0,2"));
    CHECK(has_key(cat, "sl_R"));
    CHECK_FALSE(has_key(cat, "sl_H")); // needs n and m even
    CHECK(has_key(cat, "even_su:1,2|1,1"));
    CHECK(has_key(cat, "even_sl_RH")); // m = 2 is even
    CHECK_FALSE(has_key(cat, "0pq"));
    CHECK_FALSE(has_key(cat, "uspi"));
    // su rows: p in {0,1} x r in {0,1,2}, mirrored by even_su, plus sl_R and even_sl_RH
    CHECK(cat.size() == 14);

    FamilyDescriptor psl33{Family::A, 3, 3, true};
    auto cat33 = catalog(psl33);
    CHECK(has_key(cat33, "0pq"));
    CHECK(has_key(cat33, "uspi"));
    CHECK(has_key(cat33, "even_slC"));
    CHECK_FALSE(has_key(cat33, "even_sl_RH")); // both blocks odd
    CHECK_FALSE(has_key(cat33, "sl_H"));

    FamilyDescriptor a22{Family::A, 2, 2};
    CHECK(has_key(catalog(a22), "sl_H"));
    CHECK_FALSE(has_key(catalog(a22), "0pq")); // sl, not psl

    FamilyDescriptor d21{Family::D, 2, 1};
    auto catd = catalog(d21);
    CHECK(has_key(catd, "osp:0,4"));
    CHECK(has_key(catd, "osp_oo:1,3"));
    CHECK(has_key(catd, "osp:2,2"));
    CHECK(has_key(catd, "osp_star:0,1"));
    CHECK(has_key(catd, "even_so_sp:1,3,0,1"));
    CHECK(has_key(catd, "even_sostar_sp"));
    CHECK(catd.size() == 8);

    FamilyDescriptor c3{Family::C, 1, 3};
    auto catc = catalog(c3);
    CHECK(has_key(catc, "osp11"));
    CHECK(has_key(catc, "osp:0,2"));
    CHECK(has_key(catc, "osp_star:1,2"));
    CHECK(has_key(catc, "even_sostar_sp"));
    auto osp11 = find_real_form(c3, "osp11");
    CHECK(osp11.table == TableKey::osp_oo);

    FamilyDescriptor b21{Family::B, 2, 1};
    for (const auto& rf : catalog(b21)) {
        CHECK(rf.table != TableKey::osp_oo); // odd signature sum: no odd-odd split
        CHECK_FALSE(rf.key == "even_sostar_sp");
    }

    FamilyDescriptor p3{Family::P, 3};
    auto catp = catalog(p3);
    CHECK(catp.size() == 1);
    CHECK(catp[0].key == "p_R");
    CHECK(has_key(catalog({Family::P, 4}), "p_H"));

    FamilyDescriptor q3{Family::Q, 3};
    auto catq = catalog(q3);
    CHECK(has_key(catq, "q_R"));
    CHECK_FALSE(has_key(catq, "q_H"));
    CHECK(has_key(catq, "upq:1,2"));
    CHECK(catq.size() == 3);
    CHECK(has_key(catalog({Family::Q, 4}), "q_H"));

    // no even rows outside A/B/C/D
    for (const auto& rf : catp) CHECK(rf.kind == RealFormKind::real);
    for (const auto& rf : catq) CHECK(rf.kind == RealFormKind::real);
}

TEST_CASE("tau actions match the catalogue conventions") {
    FamilyDescriptor psl22{Family::A, 2, 2, true};
    auto uspi = find_real_form(psl22, "uspi");
    Root r{detail::ex(psl22, 1) - detail::ey(psl22, 1), Parity::odd};
    CHECK(uspi.tau(r) == r); // x1 - y1 is fixed by x -> -y, y -> -x

    FamilyDescriptor a31{Family::A, 3, 1};
    auto slr = find_real_form(a31, "sl_R");
    Root r12{detail::ex(a31, 1) - detail::ex(a31, 2), Parity::even};
    Root r32{detail::ex(a31, 3) - detail::ex(a31, 2), Parity::even};
    CHECK(slr.tau(r12) == r32);
    CHECK(slr.tau.apply(Weight::zero(3, 1)) == Weight::zero(3, 1));

    FamilyDescriptor psl33{Family::A, 3, 3, true};
    auto pq = find_real_form(psl33, "0pq");
    CHECK(pq.conv.reverse_y);
    Root e12{detail::ex(psl33, 1) - detail::ex(psl33, 2), Parity::even};
    Root y12{detail::ey(psl33, 1) - detail::ey(psl33, 2), Parity::even};
    CHECK(pq.tau(e12) == y12);

    FamilyDescriptor d21{Family::D, 2, 1};
    auto oo = find_real_form(d21, "osp_oo:1,3");
    Root diff{detail::ex(d21, 2) - detail::ex(d21, 1), Parity::even};
    Root sum{detail::ex(d21, 2) + detail::ex(d21, 1), Parity::even};
    CHECK(oo.tau(diff) == sum); // x_n fixed, the rest negated
    Root oddr{detail::ex(d21, 2) - detail::ey(d21, 1), Parity::odd};
    Root oddsum{detail::ex(d21, 2) + detail::ey(d21, 1), Parity::odd};
    CHECK(oo.tau(oddr) == oddsum);
    Root first{detail::ex(d21, 1) - detail::ey(d21, 1), Parity::odd};
    CHECK(oo.tau(first) == Root{-(detail::ex(d21, 1) - detail::ey(d21, 1)), Parity::odd});

    auto ospev = find_real_form(d21, "osp:2,2");
    CHECK(ospev.tau(diff) == Root{-diff.w, Parity::even});

    FamilyDescriptor p4{Family::P, 4};
    auto pr = find_real_form(p4, "p_R");
    Root p2x{Rat(2) * detail::ex(p4, 1), Parity::odd};
    CHECK(pr.tau(p2x) == Root{Rat(2) * detail::ex(p4, 4), Parity::odd});
}

TEST_CASE("key canonicalization and lookup") {
    FamilyDescriptor a32{Family::A, 3, 2};
    CHECK(find_real_form(a32, "su:2,1|1,1").key == "su:1,2|1,1");
    CHECK(find_real_form(a32, "su:3,0|2,0").key == "su:0,3|0,2");
    CHECK_THROWS_AS(find_real_form(a32, "su:1,1|1,1"), std::invalid_argument);
    CHECK_THROWS_AS(find_real_form(a32, "0pq"), std::invalid_argument);
    CHECK_THROWS_AS(find_real_form(a32, "nonsense"), std::invalid_argument);

    FamilyDescriptor d21{Family::D, 2, 1};
    CHECK(find_real_form(d21, "osp_oo:3,1").key == "osp_oo:1,3");
    CHECK(find_real_form(d21, "even_so_sp:3,1,1,0").key == "even_so_sp:1,3,0,1");
    CHECK_THROWS_AS(find_real_form(d21, "osp:1,3"), std::invalid_argument);

    FamilyDescriptor d22{Family::D, 2, 2};
    CHECK(find_real_form(d22, "even_so_sp:0,4,2,0").key == "even_so_sp:0,4,0,2");
}

TEST_CASE("associated real form") {
    FamilyDescriptor a32{Family::A, 3, 2};
    for (const auto& rf : catalog(a32)) {
        if (rf.kind != RealFormKind::even_real) continue;
        auto partner = associated_real_form(a32, rf);
        REQUIRE(partner.has_value());
        CHECK(partner->kind == RealFormKind::real);
        CHECK(partner->tau == rf.tau); // identical action on the root system
        CHECK(partner->conv.reverse_y == rf.conv.reverse_y);
    }
    auto evsu = find_real_form(a32, "even_su:1,2|0,2");
    CHECK(associated_real_form(a32, evsu)->key == "su:1,2|0,2");
    CHECK(associated_real_form(a32, find_real_form(a32, "even_sl_RH"))->key == "sl_R");

    FamilyDescriptor psl33{Family::A, 3, 3, true};
    CHECK(associated_real_form(psl33, find_real_form(psl33, "even_slC"))->key == "0pq");
    CHECK_FALSE(associated_real_form(psl33, find_real_form(psl33, "uspi")).has_value());

    FamilyDescriptor d21{Family::D, 2, 1};
    auto evoo = find_real_form(d21, "even_so_sp:1,3,0,1");
    CHECK(associated_real_form(d21, evoo)->key == "osp_oo:1,3");
    CHECK(associated_real_form(d21, find_real_form(d21, "even_sostar_sp"))->key ==
          "osp_star:0,1");
    auto evev = find_real_form(d21, "even_so_sp:2,2,0,1");
    CHECK(associated_real_form(d21, evev)->key == "osp:2,2");

    FamilyDescriptor c3{Family::C, 1, 3};
    auto evc = find_real_form(c3, "even_so_sp:1,1,1,2");
    CHECK(associated_real_form(c3, evc)->key == "osp11");
}

TEST_CASE("even rows exist exactly for the partnered families") {
    for (const auto& f : sample_families()) {
        bool expect_even = f.fam == Family::A || f.fam == Family::B || f.fam == Family::C ||
                           f.fam == Family::D;
        bool saw_even = false;
        std::set<std::string> keys;
        for (const auto& rf : catalog(f)) {
            CHECK(keys.insert(rf.key).second); // keys unique
            if (rf.kind == RealFormKind::even_real) saw_even = true;
        }
        CHECK(saw_even == expect_even);
    }
}
