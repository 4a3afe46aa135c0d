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

// Cascade sizes from the classification of Borel indices.
int expected_cascade_size(const SimpleType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return (n + 1) / 2;
        case Family::D: return 2 * (n / 2);
        case Family::E: return n == 6 ? 4 : n;
        default: return n;
    }
}

struct A5Example {
    RootSystem rs{SimpleType::parse("A5")};
    RootSet a = young_shape_ideal(rs, {3, 3, 1});
    RootSet set(const char* text) const { return parse_root_list(rs, text); }
};

}  // namespace

TEST_CASE("the (3,3,1) ideal in A5") {
    A5Example ex;
    const auto& rs = ex.rs;
    CHECK(strongly_orth_subsets(rs, ex.a).size() == 20);
    CHECK(rs.min_elements(ex.a) == ex.set("e2-e4,e3-e6"));
    CHECK(lower_canonical(rs, ex.a) == ex.set("e2-e4,e3-e6,e1-e5"));
    CHECK(upper_canonical(rs, ex.a) == ex.set("e1-e6,e2-e5"));
    CHECK(upper_canonical(rs, ex.a) == (kostant_cascade(rs) & ex.a));

    RootSet s = ex.set("e1-e4,e2-e6");
    CHECK(shift_up(rs, s) == ex.set("e1-e5,e1-e6"));
    CHECK(pyasetskii_dual(rs, ex.a, s) == ex.set("e2-e5,e3-e6"));
    CHECK(upper_canonical(rs, residual_set(rs, ex.a, s)) == ex.set("e2-e5,e3-e6"));
    CHECK(pyasetskii_dual(rs, ex.a, RootSet{}) == upper_canonical(rs, ex.a));
    CHECK(pyasetskii_dual(rs, ex.a, lower_canonical(rs, ex.a)).empty());

    RootSet theta = RootSet::of({rs.theta()});
    CHECK(shift_up(rs, theta).empty());
    CHECK(shift_down(rs, ex.a, theta) == reference::shift_down(rs, ex.a, theta));
    CHECK(shift_down(rs, ex.a, theta) == ex.set("e1-e4,e1-e5,e2-e6,e3-e6"));

    auto k = krull_dims(rs, ex.a);
    CHECK(k.p == 3);
    CHECK(k.m == 2);
    CHECK(orbit_dims(rs, ex.a, lower_canonical(rs, ex.a)).in_a == 7);
    CHECK(orbit_dims(rs, ex.a, RootSet{}).in_a == 0);
    CHECK_THROWS_AS(orbit_dims(rs, ex.a, ex.set("e1-e2")), DomainError);
    CHECK_THROWS_AS(pyasetskii_dual(rs, ex.a, ex.set("e1-e5,e1-e6")), DomainError);
}

TEST_CASE("G2 maximal abelian ideal") {
    RootSystem g2(SimpleType::parse("G2"));
    RootSet a = parse_root_list(g2, "[2,1],[3,1],[3,2]");
    auto subsets = strongly_orth_subsets(g2, a);
    CHECK(subsets.size() == 4);
    for (const auto& s : subsets) CHECK(s.size() <= 1);
    CHECK(lower_canonical(g2, a) == parse_root_list(g2, "[2,1]"));
    CHECK(upper_canonical(g2, a) == RootSet::of({g2.theta()}));
    auto d = dim_estimate_report(g2, a);
    CHECK(d.lhs == 6);
    CHECK(d.rhs == 8);
    CHECK_FALSE(d.equality);
}

TEST_CASE("cascade and Borel index") {
    for (const auto& t : types_up_to(8)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        RootSet k = kostant_cascade(rs);
        CHECK(k.size() == expected_cascade_size(t));
        CHECK(is_orth_set(rs, k));
        CHECK(borel_index(rs) == t.rank - k.size());
    }
    for (int n = 2; n <= 9; ++n) {
        RootSystem rs(SimpleType{Family::A, n - 1});
        CHECK(borel_index(rs) == (n - 1) / 2);
        RootSet anti;
        for (int i = 1; i <= n / 2; ++i) {
            std::string r = "e" + std::to_string(i) + "-e" + std::to_string(n + 1 - i);
            anti.insert(parse_root(rs, r));
        }
        CHECK(kostant_cascade(rs) == anti);
    }
    for (int n = 2; n <= 6; ++n) {
        RootSystem rs(SimpleType{Family::C, n});
        RootSet longs;
        for (int i = 1; i <= n; ++i) longs.insert(parse_root(rs, "2e" + std::to_string(i)));
        CHECK(kostant_cascade(rs) == longs);
        CHECK(borel_index(rs) == 0);
    }
    RootSystem a1(SimpleType::parse("A1"));
    CHECK(kostant_cascade(a1) == RootSet::of({0}));
}

TEST_CASE("D4 five-dimensional maximal ideal") {
    RootSystem d4(SimpleType::parse("D4"));
    RootSet a = parse_root_list(d4, "e1-e4,e1+e4,e1+e3,e2+e3,e1+e2");
    CHECK(is_ideal(d4, a));
    CHECK(is_abelian(d4, a));
    RootSet s = d4.min_elements(a);
    CHECK(s == parse_root_list(d4, "e1-e4,e1+e4,e2+e3"));
    CHECK(s == lower_canonical(d4, a));
    auto dims = orbit_dims(d4, a, s);
    CHECK(dims.in_a == 5);
    CHECK(dims.in_a_star == 3);
    CHECK(shift_down(d4, a, s).empty());
    CHECK(upper_canonical(d4, a) == RootSet::of({d4.theta()}));
}

TEST_CASE("orbit structure across all abelian ideals") {
    for (const auto& t : types_up_to(5)) {
        CAPTURE(t.name());
        RootSystem rs(t);
        RootSet cascade = kostant_cascade(rs);
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            auto sets = strongly_orth_subsets(rs, a);
            if (a.size() <= 14) CHECK(static_cast<long>(sets.size()) == reference::count_strongly_orthogonal_subsets(rs, a));
            int singletons = 0, empties = 0;
            for (const auto& s : sets) {
                singletons += s.size() == 1;
                empties += s.empty();
            }
            CHECK(empties == 1);
            CHECK(singletons == a.size());

            // strongly orthogonal roots of a are raised and lowered by disjoint sets of roots
            a.for_each([&](int g1) {
                a.for_each([&](int g2) {
                    if (g1 >= g2 || !rs.strongly_orthogonal(g1, g2)) return;
                    CHECK_FALSE(raising_roots(rs, g1).intersects(raising_roots(rs, g2)));
                    CHECK_FALSE(lowering_roots(rs, a, g1).intersects(lowering_roots(rs, a, g2)));
                });
            });

            RootSet cl = lower_canonical(rs, a);
            RootSet cu = upper_canonical(rs, a);
            CHECK(cu == (cascade & a));
            CHECK(orbit_dims(rs, a, cl).in_a == a.size());
            CHECK(orbit_dims(rs, a, cu).in_a_star == a.size());

            auto table = duality_table(rs, a);
            CHECK(table.bijective);
            int codim1_primal = 0, codim1_dual = 0;
            for (std::size_t i = 0; i < sets.size(); ++i) {
                const auto& s = sets[i];
                if (rs.rank() <= 4) {
                    CHECK(shift_up(rs, s) == reference::shift_up(rs, s));
                    CHECK(shift_down(rs, a, s) == reference::shift_down(rs, a, s));
                }
                auto dims = orbit_dims(rs, a, s);
                codim1_primal += dims.in_a == a.size() - 1;
                codim1_dual += dims.in_a_star == a.size() - 1;
                const auto& dual = sets[static_cast<std::size_t>(table.dual[i])];
                CHECK(orbit_dims(rs, a, dual).in_a_star >= a.size() - dims.in_a);
                CHECK(table.inverse[static_cast<std::size_t>(table.dual[i])] == static_cast<int>(i));
            }
            auto k = krull_dims(rs, a);
            CHECK(k.p == codim1_primal);
            CHECK(k.m == codim1_dual);
            CHECK(pyasetskii_dual(rs, a, RootSet{}) == cu);
            CHECK(pyasetskii_dual(rs, a, cl).empty());

            auto est = dim_estimate_report(rs, a);
            CHECK(est.lhs <= est.rhs);
            if (est.equality) CHECK(est.cascade_inside);
        }
    }
}

TEST_CASE("nilradical canonical sets") {
    for (const auto& t : types_up_to(6)) {
        RootSystem rs(t);
        for (const auto& nr : abelian_nilradicals(rs)) {
            RootSet cl = lower_canonical(rs, nr.roots), cu = upper_canonical(rs, nr.roots);
            CHECK(cl.size() == cu.size());
            cl.for_each([&](int g) { CHECK(rs.is_long(g)); });
            cu.for_each([&](int g) { CHECK(rs.is_long(g)); });
        }
    }
    RootSystem c2(SimpleType::parse("C2"));
    auto nr = abelian_nilradicals(c2);
    REQUIRE(nr.size() == 1);
    auto k = krull_dims(c2, nr[0].roots);
    CHECK(k.p == 2);
    CHECK(k.m == 2);
}

TEST_CASE("upper construction outside abelian ideals") {
    RootSystem a3(SimpleType::parse("A3"));
    CHECK_THROWS_AS(upper_canonical(a3, a3.all()), DomainError);
    auto layers = upper_canonical_unchecked(a3, a3.all());
    CHECK(layers.strongly_orthogonal);
    CHECK(layers.set == kostant_cascade(a3));
    // two adjacent simple roots: both maximal, not strongly orthogonal
    auto bad = upper_canonical_unchecked(a3, RootSet::of({0, 1}));
    CHECK_FALSE(bad.strongly_orthogonal);
}

TEST_CASE("parallel orbit table matches the serial one") {
    RootSystem e6(SimpleType::parse("E6"));
    auto nr = abelian_nilradicals(e6);
    REQUIRE(!nr.empty());
    auto serial = orbit_table(e6, nr[0].roots);
    auto parallel = orbit_table_parallel(e6, nr[0].roots);
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial.size() == 57);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].s == parallel[i].s);
        CHECK(serial[i].dual == parallel[i].dual);
        CHECK(serial[i].sigma_length == parallel[i].sigma_length);
        CHECK(serial[i].sigma_abs_length == serial[i].s.size());
        CHECK(serial[i].j_s == (nr[0].roots - (serial[i].s | serial[i].m_s)));
    }
}
