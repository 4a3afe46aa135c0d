#include "doctest.h"

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/notation.hpp"
#include "abelorb/orbits.hpp"
#include "reference.hpp"

using namespace abelorb;

namespace {

std::vector<SimpleType> types_up_to(int max_rank) {
    std::vector<SimpleType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

int long_simple_roots(const RootSystem& rs) {
    int k = 0;
    for (int i = 0; i < rs.rank(); ++i) k += rs.is_long(i);
    return k;
}

}  // namespace

TEST_CASE("generated ideals") {
    RootSystem a5(SimpleType::parse("A5"));
    CHECK(ideal_generated(a5, RootSet{}).empty());
    CHECK(ideal_generated(a5, RootSet::of({a5.theta()})) == RootSet::of({a5.theta()}));
    RootSet gens = parse_root_list(a5, "e2-e4,e3-e6");
    RootSet a = ideal_generated(a5, gens);
    CHECK(a.size() == 7);
    CHECK(a == young_shape_ideal(a5, {3, 3, 1}));
    CHECK(a5.min_elements(a) == gens);
    CHECK(is_abelian(a5, a));
    CHECK_THROWS_AS(young_shape_ideal(a5, {1, 3}), DomainError);
    CHECK_THROWS_AS(young_shape_ideal(a5, {6}), DomainError);
}

TEST_CASE("abelian predicate") {
    RootSystem a2(SimpleType::parse("A2"));
    CHECK_FALSE(is_abelian(a2, RootSet::of({0, 1, 2})));
    CHECK(is_abelian(a2, RootSet::of({0, 2})));
    RootSystem g2(SimpleType::parse("G2"));
    RootSet top = parse_root_list(g2, "[2,1],[3,1],[3,2]");
    CHECK(is_ideal(g2, top));
    CHECK(is_abelian(g2, top));
}

TEST_CASE("enumeration matches the reference and has 2^rank members") {
    for (const auto& t : types_up_to(7)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        auto ideals = enumerate_abelian_ideals(rs);
        CHECK(ideals.size() == (std::size_t{1} << t.rank));
        CHECK(enumerate_abelian_ideals_parallel(rs) == ideals);
        auto ref = reference::abelian_ideals(rs);
        std::set<reference::Ideal> mine;
        for (const auto& a : ideals) {
            reference::Ideal r;
            a.for_each([&](int g) { r.insert(rs.coeffs(g)); });
            mine.insert(r);
        }
        CHECK(mine == ref);
        CHECK(std::is_sorted(ideals.begin(), ideals.end(), canonical_less));
    }
    RootSystem a2(SimpleType::parse("A2"));
    auto a2_ideals = enumerate_abelian_ideals(a2);
    CHECK(a2_ideals == std::vector<RootSet>{RootSet{}, RootSet::of({2}), RootSet::of({0, 2}), RootSet::of({1, 2})});
}

TEST_CASE("ideal properties") {
    for (const auto& t : types_up_to(5)) {
        RootSystem rs(t);
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            CHECK(is_ideal(rs, a));
            CHECK(ideal_generated(rs, rs.min_elements(a)) == a);
            if (!a.empty()) CHECK(rs.max_elements(a) == RootSet::of({rs.theta()}));
            // min and max of any subset of an abelian ideal are strongly orthogonal
            CHECK(is_orth_set(rs, rs.min_elements(a)));
            RootSet half;
            int k = 0;
            a.for_each([&](int g) {
                if (k++ % 2 == 0) half.insert(g);
            });
            CHECK(is_abelian(rs, ideal_generated(rs, half)));
            CHECK(rs.min_elements(ideal_generated(rs, half)) == rs.min_elements(half));
            CHECK(is_orth_set(rs, rs.min_elements(half)));
            CHECK(is_orth_set(rs, rs.max_elements(half)));
        }
    }
}

TEST_CASE("maximal abelian ideals and nilradicals") {
    for (const auto& t : types_up_to(6)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        auto maximal = maximal_abelian_ideals(rs);
        CHECK(static_cast<int>(maximal.size()) == long_simple_roots(rs));
        for (const auto& nr : abelian_nilradicals(rs))
            CHECK(std::find(maximal.begin(), maximal.end(), nr.roots) != maximal.end());
    }
    RootSystem d4(SimpleType::parse("D4"));
    auto maximal = maximal_abelian_ideals(d4);
    std::vector<int> sizes;
    for (const auto& a : maximal) sizes.push_back(a.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{5, 6, 6, 6});
    CHECK(maximal_abelian_ideals(RootSystem(SimpleType::parse("C4"))).size() == 1);
    for (int n = 2; n <= 7; ++n) {
        RootSystem an(SimpleType{Family::A, n});
        auto rects = maximal_abelian_ideals(an);
        CHECK(static_cast<int>(rects.size()) == n);
        for (int k = 1; k <= n; ++k)
            CHECK(std::find(rects.begin(), rects.end(),
                            young_shape_ideal(an, std::vector<int>(static_cast<std::size_t>(k), n + 1 - k))) !=
                  rects.end());
    }

    RootSystem b4(SimpleType::parse("B4"));
    auto b_nr = abelian_nilradicals(b4);
    REQUIRE(b_nr.size() == 1);
    CHECK(b_nr[0].node == 0);
    CHECK(b_nr[0].roots.size() == 7);
    RootSystem d5(SimpleType::parse("D5"));
    std::vector<int> nodes;
    for (const auto& nr : abelian_nilradicals(d5)) nodes.push_back(nr.node);
    CHECK(nodes == std::vector<int>{0, 3, 4});
    for (auto name : {"G2", "F4", "E8"}) CHECK(abelian_nilradicals(RootSystem(SimpleType::parse(name))).empty());
    CHECK_THROWS_AS(abelian_nilradical(d5, 1), DomainError);
}
