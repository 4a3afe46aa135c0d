#include <algorithm>
#include <numeric>

#include "doctest.h"

#include "abelorb/anr.hpp"
#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/notation.hpp"
#include "abelorb/orbits.hpp"
#include "reference.hpp"

using namespace abelorb;

namespace {

// Point configurations on {0..n-1}: each point is unused, a fixed point
// (allowed only when `singles`), or paired with a later point. Tallied by the
// number of pairs plus fixed points.
void tally_matchings(int point, int n, std::vector<bool>& used, bool singles, int size,
                     std::vector<std::uint64_t>& tally) {
    if (point == n) {
        ++tally[static_cast<std::size_t>(size)];
        return;
    }
    if (used[static_cast<std::size_t>(point)]) {
        tally_matchings(point + 1, n, used, singles, size, tally);
        return;
    }
    tally_matchings(point + 1, n, used, singles, size, tally);
    if (singles) tally_matchings(point + 1, n, used, singles, size + 1, tally);
    used[static_cast<std::size_t>(point)] = true;
    for (int q = point + 1; q < n; ++q) {
        if (used[static_cast<std::size_t>(q)]) continue;
        used[static_cast<std::size_t>(q)] = true;
        tally_matchings(point + 1, n, used, singles, size + 1, tally);
        used[static_cast<std::size_t>(q)] = false;
    }
    used[static_cast<std::size_t>(point)] = false;
}

std::vector<std::uint64_t> matchings(int n, bool singles) {
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    tally_matchings(0, n, used, singles, 0, tally);
    return tally;
}

// Partial permutation matrices of shape m x n, by number of ones.
std::vector<std::uint64_t> rook_placements(int m, int n) {
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(std::min(m, n)) + 1, 0);
    std::vector<bool> col_used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int row, int k) -> void {
        if (row == m) {
            ++tally[static_cast<std::size_t>(k)];
            return;
        }
        self(self, row + 1, k);
        for (int c = 0; c < n; ++c) {
            if (col_used[static_cast<std::size_t>(c)]) continue;
            col_used[static_cast<std::size_t>(c)] = true;
            self(self, row + 1, k + 1);
            col_used[static_cast<std::size_t>(c)] = false;
        }
    };
    rec(rec, 0, 0);
    return tally;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

std::vector<SimpleType> anr_types(int max_rank) {
    std::vector<SimpleType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    if (max_rank >= 6) out.push_back({Family::E, 6});
    return out;
}

std::vector<std::uint64_t> trim(std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

TEST_CASE("closed-form counts against brute-force combinatorics") {
    for (int n = 0; n <= 9; ++n) {
        auto inv = matchings(n, false);
        auto sym = matchings(n, true);
        for (int k = 0; k <= n; ++k) {
            CHECK(d_count(n, k) == inv[static_cast<std::size_t>(k)]);
            CHECK(c_count(n, k) == sym[static_cast<std::size_t>(k)]);
        }
        CHECK(d_count(n, n + 1) == 0);
    }
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto rooks = rook_placements(m, n);
            for (int k = 0; k <= 6; ++k)
                CHECK(rectangle_count(m, n, k) ==
                      (k <= std::min(m, n) ? rooks[static_cast<std::size_t>(k)] : 0));
        }
}

TEST_CASE("closed-form examples") {
    CHECK(d_count(4, 2) == 3);
    CHECK(c_count(2, 1) == 3);
    CHECK(rectangle_count(1, 1, 1) == 1);
    CHECK(rectangle_count(2, 3, 2) == 6);
    std::uint64_t square = 0;
    for (int k = 0; k <= 3; ++k) square += rectangle_count(3, 3, k);
    CHECK(square == 34);

    const std::vector<std::uint64_t> d_totals{1, 2, 4, 10, 26, 76, 232};
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t total = 0;
        for (int k = 0; 2 * k <= n; ++k) total += d_count(n, k);
        CHECK(total == d_totals[static_cast<std::size_t>(n - 1)]);
    }
    const std::vector<std::uint64_t> c_totals{2, 5, 14, 43, 142, 499};
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t total = 0;
        for (int k = 0; k <= n; ++k) total += c_count(n, k);
        CHECK(total == c_totals[static_cast<std::size_t>(n - 1)]);
    }
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(c_count(n, k) == c_count(n, n - k));
}

TEST_CASE("closed-form input checks") {
    CHECK_THROWS_AS(d_count(-1, 0), DomainError);
    CHECK_THROWS_AS(c_count(3, -1), DomainError);
    CHECK_THROWS_AS(rectangle_count(0, 2, 1), DomainError);
    CHECK(c_count(3, 4) == 0);
    CHECK_THROWS_AS(d_count(60, 30), DomainError);
}

TEST_CASE("enumerated statistics match the predictions") {
    std::vector<SimpleType> types = anr_types(6);
    types.push_back({Family::A, 7});
    types.push_back({Family::D, 7});
    types.push_back({Family::E, 7});
    for (const auto& t : types) {
        RootSystem rs(t);
        for (const auto& nil : abelian_nilradicals(rs)) {
            CAPTURE(t.name());
            CAPTURE(nil.node);
            auto table = anr_statistic(rs, nil.node);
            CHECK(table.counts[0] == 1);
            CHECK(table.counts[1] == static_cast<std::uint64_t>(nil.roots.size()));
            CHECK(table.total == sum(table.counts));
            auto expected = expected_anr_counts(t, nil.node);
            REQUIRE(expected.has_value());
            CHECK(table.counts == trim(*expected));
            if (rs.num_positive() <= 20)
                CHECK(static_cast<long>(table.total) ==
                      reference::count_strongly_orthogonal_subsets(rs, nil.roots));
        }
    }
}

TEST_CASE("exceptional tables") {
    RootSystem e7(SimpleType::parse("E7"));
    auto t7 = anr_statistic(e7, 6);
    CHECK(t7.counts == std::vector<std::uint64_t>{1, 27, 135, 45});
    CHECK(t7.total == 208);
    RootSystem e6(SimpleType::parse("E6"));
    for (int node : {0, 5}) {
        auto t6 = anr_statistic(e6, node);
        CHECK(t6.counts == std::vector<std::uint64_t>{1, 16, 40});
        CHECK(t6.total == 57);
    }
    CHECK_THROWS_AS(anr_statistic(e6, 1), DomainError);
    CHECK_THROWS_AS(anr_statistic(RootSystem(SimpleType::parse("G2")), 0), DomainError);
}

TEST_CASE("symmetry bijection on C_n") {
    RootSystem c2(SimpleType::parse("C2"));
    CHECK(symmetry_bijection(c2, {}) == parse_root_list(c2, "2e1,2e2"));
    RootSet s = parse_root_list(c2, "e1+e2");
    CHECK(symmetry_bijection(c2, s) == s);

    for (int n = 2; n <= 5; ++n) {
        RootSystem rs(SimpleType::make(Family::C, n));
        const RootSet anr = abelian_nilradical(rs, n - 1);
        std::vector<RootSet> images;
        for (const RootSet& x : strongly_orth_subsets(rs, anr)) {
            RootSet y = symmetry_bijection(rs, x);
            CHECK(y.size() == n - x.size());
            CHECK(is_orth_set(rs, y));
            CHECK(symmetry_bijection(rs, y) == x);
            images.push_back(y);
        }
        std::sort(images.begin(), images.end(), canonical_less);
        CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    }
    CHECK_THROWS_AS(symmetry_bijection(RootSystem(SimpleType::parse("B3")), {}), DomainError);
    CHECK_THROWS_AS(symmetry_bijection(c2, parse_root_list(c2, "e1-e2")), DomainError);
}

TEST_CASE("w0L action") {
    for (const auto& t : anr_types(6)) {
        RootSystem rs(t);
        for (const auto& nil : abelian_nilradicals(rs)) {
            CAPTURE(t.name());
            CAPTURE(nil.node);
            RootSet theta = RootSet::of({rs.theta()});
            CHECK(w0L_action(rs, nil.node, theta) == RootSet::of({nil.node}));
            CHECK(w0L_action(rs, nil.node, {}).empty());
            CHECK(w0L_action(rs, nil.node, upper_canonical(rs, nil.roots)) ==
                  lower_canonical(rs, nil.roots));
            for (const RootSet& s : strongly_orth_subsets(rs, nil.roots)) {
                RootSet image = w0L_action(rs, nil.node, s);
                CHECK(image.size() == s.size());
                CHECK(is_orth_set(rs, image));
                CHECK(w0L_action(rs, nil.node, image) == s);
                CHECK(orbit_dims(rs, nil.roots, s).in_a ==
                      orbit_dims(rs, nil.roots, image).in_a_star);
            }
        }
    }
}

TEST_CASE("conjecture evidence on small nilradicals") {
    RootSystem c2(SimpleType::parse("C2"));
    auto rep = conjecture_check(c2, 1);
    CHECK(rep.rows.size() == 5);
    CHECK(rep.consistent());
    CHECK(rep.rows.front().s.empty());
    CHECK(rep.rows.front().dim_actual == 0);
    CHECK(rep.rows.front().formula_twice == 0);

    for (const auto& t : anr_types(4)) {
        RootSystem rs(t);
        for (const auto& nil : abelian_nilradicals(rs)) {
            CAPTURE(t.name());
            CAPTURE(nil.node);
            auto r = conjecture_check(rs, nil.node);
            CHECK(r.consistent());
            CHECK(r.coincident_involutions.empty());
            CHECK(r.graded);
            CHECK(r.rank_is_formula);
            // The dense dual orbit fills the nilradical.
            auto top = std::find_if(r.rows.begin(), r.rows.end(),
                                    [&](const ConjectureRow& row) { return row.s == r.top; });
            REQUIRE(top != r.rows.end());
            CHECK(top->dim_actual == nil.roots.size());
            CHECK(top->formula_twice == 2 * nil.roots.size());

            auto serial = conjecture_check_serial(rs, nil.node);
            CHECK(serial.covers == r.covers);
            CHECK(serial.bruhat_violations == r.bruhat_violations);
        }
    }
}

TEST_CASE("Bruhat matrix serial and parallel agree") {
    RootSystem rs(SimpleType::parse("C4"));
    std::vector<Involution> sigmas;
    for (const RootSet& s : strongly_orth_subsets(rs, abelian_nilradical(rs, 3)))
        sigmas.push_back(sigma_of_orth_set(rs, s));
    auto par = bruhat_matrix(rs, sigmas);
    auto ser = bruhat_matrix_serial(rs, sigmas);
    CHECK(par == ser);
    const std::size_t n = sigmas.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(ser[i * n + i] == 1);
        CHECK(ser[i] == 1);  // identity is the bottom
    }
}

TEST_CASE("non-nilradical maximal ideal in D4") {
    RootSystem d4(SimpleType::parse("D4"));
    const RootSet a = parse_root_list(d4, "e1-e4,e1+e4,e1+e3,e2+e3,e1+e2");
    REQUIRE(a.size() == 5);
    auto rep = maximal_ideal_report(d4, a);
    CHECK(rep.top == parse_root_list(d4, "e1+e2"));
    CHECK_FALSE(rep.consistent());

    const RootSet s = d4.min_elements(a);
    CHECK(s == parse_root_list(d4, "e1-e4,e1+e4,e2+e3"));
    auto row = std::find_if(rep.rows.begin(), rep.rows.end(),
                            [&](const ConjectureRow& r) { return r.s == s; });
    REQUIRE(row != rep.rows.end());
    CHECK(row->dim_in_a == 5);
    CHECK(row->dim_actual == 3);
    CHECK(row->sigma_length == 11);
    CHECK(row->sigma_abs_length == 3);
    CHECK(row->formula_twice == 14);
    CHECK_FALSE(row->match);
    const int idx = static_cast<int>(row - rep.rows.begin());
    CHECK(std::find(rep.not_below_top.begin(), rep.not_below_top.end(), idx) !=
          rep.not_below_top.end());

    CHECK_THROWS_AS(maximal_ideal_report(d4, abelian_nilradical(d4, 0)), DomainError);
    CHECK_THROWS_AS(maximal_ideal_report(d4, parse_root_list(d4, "e1+e2")), DomainError);
    CHECK_THROWS_AS(conjecture_check(d4, 1), DomainError);
}

TEST_CASE("Hasse diagram output") {
    RootSystem c2(SimpleType::parse("C2"));
    auto rep = conjecture_check(c2, 1);
    std::string dot = hasse_dot(c2, rep);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(rep.covers.size()));
    CHECK(dot.find("{2e2,2e1}") != std::string::npos);
    for (const auto& c : rep.covers)
        CHECK(rep.rows[static_cast<std::size_t>(c.lower)].sigma_length <
              rep.rows[static_cast<std::size_t>(c.upper)].sigma_length);
}
