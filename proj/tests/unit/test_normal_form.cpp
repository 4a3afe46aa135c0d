#include "doctest.h"

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/normal_form.hpp"
#include "abelorb/notation.hpp"

using namespace abelorb;

namespace {

const char* kSmallTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};

RootSet random_subset(const RootSet& a, Rng& rng) {
    RootSet out;
    a.for_each([&](int g) {
        if (rng.coin()) out.insert(g);
    });
    return out;
}

}  // namespace

TEST_CASE("reduction examples in A5") {
    RootSystem rs(SimpleType::parse("A5"));
    StructureTable table(rs);
    RootSet a = young_shape_ideal(rs, {3, 3, 1});

    IdealVector single = parse_vector(rs, a, "e1-e5:7/3");
    auto r1 = reduce_in_ideal(table, single);
    CHECK(r1.s == parse_root_list(rs, "e1-e5"));
    CHECK(r1.transcript.steps.empty());
    CHECK(replay(table, single, r1.transcript, Side::Primal) == IdealVector::indicator(rs, a, r1.s));

    // The all-ones matrix is not generic: its minor on rows 1-2, columns 4-5
    // vanishes, so it misses the dense orbit. Random coefficients hit it.
    IdealVector ones = IdealVector::indicator(rs, a, a);
    CHECK(orbit_of_vector(table, ones, Side::Primal).dim_in_a < a.size());
    Rng generic_rng(11);
    IdealVector generic = random_vector(rs, a, a, generic_rng);
    CHECK(reduce_in_ideal(table, generic).s == parse_root_list(rs, "e2-e4,e3-e6,e1-e5"));

    IdealVector two = parse_vector(rs, a, "e1-e4:1,e2-e4:1");
    auto r2 = reduce_in_ideal(table, two);
    CHECK(r2.s == parse_root_list(rs, "e2-e4"));
    REQUIRE(r2.transcript.steps.size() == 1);
    CHECK(r2.transcript.steps[0].delta == parse_root(rs, "e1-e2"));
    CHECK(replay(table, two, r2.transcript, Side::Primal) == IdealVector::indicator(rs, a, r2.s));

    IdealVector theta = IdealVector::indicator(rs, a, RootSet::of({rs.theta()}));
    CHECK(reduce_in_dual(table, theta).s == RootSet::of({rs.theta()}));
    CHECK(reduce_in_dual(table, generic).s == upper_canonical(rs, a));

    // generic covector on J_S reduces to S^vee
    Rng rng(7);
    RootSet s = parse_root_list(rs, "e1-e4,e2-e6");
    RootSet js = residual_set(rs, a, s);
    for (int trial = 0; trial < 20; ++trial) {
        IdealVector xi = random_vector(rs, a, js, rng);
        auto r = reduce_in_dual(table, xi, js);
        CHECK(r.s == parse_root_list(rs, "e2-e5,e3-e6"));
        CHECK(r.confinement_violations == 0);
    }

    CHECK(orbit_of_vector(table, IdealVector(rs, a), Side::Primal).s.empty());
    CHECK(orbit_of_vector(table, generic, Side::Primal).dim_in_a == a.size());
    CHECK(orbit_of_vector(table, generic, Side::Dual).dim_in_a_star == a.size());
}

TEST_CASE("reduction properties on all small abelian ideals") {
    Rng rng(20260101);
    for (auto name : kSmallTypes) {
        CAPTURE(name);
        RootSystem rs(SimpleType::parse(name));
        StructureTable table(rs);
        StructureTable flipped = table.negated();
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            if (a.empty()) continue;
            RootSet cl = lower_canonical(rs, a), cu = upper_canonical(rs, a);
            for (int trial = 0; trial < 10; ++trial) {
                IdealVector generic = random_vector(rs, a, a, rng);
                CHECK(reduce_in_ideal(table, generic).s == cl);
                CHECK(reduce_in_dual(table, generic).s == cu);

                IdealVector v = random_vector(rs, a, random_subset(a, rng), rng);
                for (Side side : {Side::Primal, Side::Dual}) {
                    auto r = reduce(table, v, side);
                    CHECK(is_orth_set(rs, r.s));
                    CHECK(replay(table, v, r.transcript, side) == IdealVector::indicator(rs, a, r.s));
                    CHECK(reduce(flipped, v, side).s == r.s);
                    BorelElement b = random_borel_element(rs, rng);
                    CHECK(reduce(table, act(table, b, v, side), side).s == r.s);
                }
            }
            // covectors on J_S reduce to the combinatorial dual
            auto sets = strongly_orth_subsets(rs, a);
            const auto& s = sets[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sets.size()) - 1))];
            RootSet js = residual_set(rs, a, s);
            auto r = reduce_in_dual(table, random_vector(rs, a, js, rng), js);
            CHECK(r.s == pyasetskii_dual(rs, a, s));
            CHECK(r.confinement_violations == 0);
        }
    }
}

TEST_CASE("dual reduction stays in J_S for every S at rank <= 3") {
    // G2 is the case with root strings of length 3 along delta.
    Rng rng(5);
    for (const char* name : {"A2", "B2", "G2", "B3", "C3"}) {
        RootSystem rs(SimpleType::parse(name));
        StructureTable table(rs);
        for (const auto& a : enumerate_abelian_ideals(rs))
            for (const auto& s : strongly_orth_subsets(rs, a)) {
                const RootSet js = residual_set(rs, a, s);
                for (int trial = 0; trial < 5; ++trial) {
                    auto r = reduce_in_dual(table, random_vector(rs, a, js, rng), js);
                    CHECK(r.s == pyasetskii_dual(rs, a, s));
                    CHECK(r.confinement_violations == 0);
                }
            }
    }
}

TEST_CASE("reduction input checks") {
    RootSystem rs(SimpleType::parse("A3"));
    StructureTable table(rs);
    RootSet a = RootSet::of({rs.theta()});
    IdealVector v(rs, a);
    CHECK_THROWS_AS(v.set(0, 1), DomainError);
    CHECK(reduce_in_ideal(table, v).s.empty());
}
