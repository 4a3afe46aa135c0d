#include "doctest.h"

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/notation.hpp"

using namespace abelorb;

TEST_CASE("epsilon strings round-trip") {
    for (auto name : {"A4", "B3", "C3", "D4"}) {
        RootSystem rs(SimpleType::parse(name));
        for (int i = 0; i < rs.num_positive(); ++i) {
            CHECK(parse_root(rs, format_root(rs, i)) == i);
            CHECK(parse_root(rs, format_tuple(rs, rs.coeffs(i))) == i);
        }
    }
    RootSystem c2(SimpleType::parse("C2"));
    CHECK(format_root(c2, c2.theta()) == "2e1");
    CHECK(parse_root(c2, " 2e1 ") == c2.theta());
    CHECK_THROWS_AS(parse_root(c2, "e1"), DomainError);
    CHECK_THROWS_AS(parse_root(c2, "e2-e1"), DomainError);
    CHECK_THROWS_AS(parse_root(c2, "e3"), DomainError);
    CHECK_THROWS_AS(parse_root(c2, "[1,1,0]"), DomainError);
    RootSystem e6(SimpleType::parse("E6"));
    CHECK_THROWS_AS(parse_root(e6, "e1-e2"), DomainError);
    CHECK(parse_root(e6, format_tuple(e6, e6.coeffs(e6.theta()))) == e6.theta());
}

TEST_CASE("numbering in tuples") {
    RootSystem e7(SimpleType::parse("E7"));
    // the minuscule node is Bourbaki 7 and node 1 in the other convention
    CHECK(format_tuple(e7, e7.coeffs(6), Numbering::Bourbaki) == "[0,0,0,0,0,0,1]");
    CHECK(format_tuple(e7, e7.coeffs(6), Numbering::VinbergOnishchik) == "[1,0,0,0,0,0,0]");
    CHECK(parse_root(e7, "[1,0,0,0,0,0,0]", Numbering::VinbergOnishchik) == 6);
}

TEST_CASE("lists and vectors") {
    RootSystem a5(SimpleType::parse("A5"));
    CHECK(split_top_level("[1,0],[0,1]") == std::vector<std::string>{"[1,0]", "[0,1]"});
    CHECK_THROWS_AS(split_top_level("[1,0"), DomainError);
    CHECK_THROWS_AS(split_top_level("e1-e2,,e3-e4"), DomainError);
    RootSet a = young_shape_ideal(a5, {3, 3, 1});
    IdealVector v = parse_vector(a5, a, "e1-e4:3/2, e2-e6:-1");
    CHECK(v.support().size() == 2);
    CHECK(v.at(parse_root(a5, "e1-e4")) == Rational(3, 2));
    CHECK(format_vector(a5, v) == "e1-e4:3/2,e2-e6:-1");
    CHECK_THROWS_AS(parse_vector(a5, a, "e1-e2:1"), DomainError);
    CHECK_THROWS_AS(parse_vector(a5, a, "e1-e4:1/0"), DomainError);
    CHECK_THROWS_AS(parse_vector(a5, a, "e1-e4"), DomainError);
    CHECK(parse_int_list("3,3,1") == std::vector<int>{3, 3, 1});
}

TEST_CASE("ideal specs") {
    RootSystem d4(SimpleType::parse("D4"));
    IdealSpec spec;
    spec.kind = IdealSpec::Kind::Nilradical;
    spec.index = 1;
    CHECK(resolve_ideal(d4, spec).size() == 6);
    spec.index = 2;
    CHECK_THROWS_AS(resolve_ideal(d4, spec), DomainError);
    spec.kind = IdealSpec::Kind::MaxAbelian;
    spec.index = 5;
    CHECK_THROWS_AS(resolve_ideal(d4, spec), DomainError);
    spec.kind = IdealSpec::Kind::Generators;
    spec.generators = "e2-e3";
    CHECK_THROWS_AS(resolve_ideal(d4, spec), DomainError);  // not abelian
}
