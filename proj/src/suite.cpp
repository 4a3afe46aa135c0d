#include "abelorb/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <set>
#include <sstream>

#include "abelorb/anr.hpp"
#include "abelorb/chevalley.hpp"
#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/normal_form.hpp"
#include "abelorb/notation.hpp"
#include "abelorb/orbits.hpp"
#include "abelorb/random.hpp"

namespace abelorb {

namespace {

/// Counts checks and keeps the first few failure messages.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (messages_.size() < 3) messages_.push_back(what);
    }
    [[nodiscard]] bool ok() const { return failures_ == 0; }
    [[nodiscard]] std::string summary(const std::string& extra = {}) const {
        std::ostringstream out;
        out << checks_ << " checks";
        if (failures_ > 0) {
            out << ", " << failures_ << " failed";
            for (const auto& m : messages_) out << "; " << m;
        }
        if (!extra.empty()) out << "; " << extra;
        return out.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> messages_;
};

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome finish(const Tally& t, const std::string& extra = {}) { return {t.ok(), t.summary(extra)}; }

/// Every simple type with rank <= max_rank.
std::vector<SimpleType> all_types(int max_rank) {
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

std::string vec_string(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v) {
    std::uint64_t s = 0;
    for (auto x : v) s += x;
    return s;
}

std::vector<std::uint64_t> trimmed(std::vector<std::uint64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/// Abelian ideals by a separate route: every antichain of the dominance
/// order generates an ideal, kept when no two members sum to a root. Sums
/// are tested on coefficient vectors, not through the root tables.
std::set<std::vector<int>> abelian_ideals_by_antichains(const RootSystem& rs) {
    const int p = rs.num_positive();
    std::set<Coeffs> roots;
    for (int i = 0; i < p; ++i) roots.insert(rs.coeffs(i));
    auto leq = [&](int i, int j) {
        for (int k = 0; k < rs.rank(); ++k)
            if (rs.coeffs(i)[static_cast<std::size_t>(k)] > rs.coeffs(j)[static_cast<std::size_t>(k)])
                return false;
        return true;
    };
    std::set<std::vector<int>> out;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int next) {
        std::vector<int> ideal;
        for (int j = 0; j < p; ++j)
            if (std::any_of(chosen.begin(), chosen.end(), [&](int g) { return leq(g, j); }))
                ideal.push_back(j);
        bool abelian = true;
        for (std::size_t x = 0; x < ideal.size() && abelian; ++x)
            for (std::size_t y = x; y < ideal.size() && abelian; ++y) {
                Coeffs s = rs.coeffs(ideal[x]);
                for (int k = 0; k < rs.rank(); ++k)
                    s[static_cast<std::size_t>(k)] += rs.coeffs(ideal[y])[static_cast<std::size_t>(k)];
                if (roots.count(s)) abelian = false;
            }
        if (abelian) out.insert(ideal);
        for (int i = next; i < p; ++i) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](int g) { return leq(g, i) || leq(i, g); }))
                continue;
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

// Equality in 2 dim a <= |Delta+| + #cascade is expected for the largest
// abelian ideals of A_{n-1} (dimension [n^2/4]) and the maximal ideal of
// C_n (dimension n(n+1)/2), and for the same ideals under B2 = C2, D3 = A3.
bool equality_expected(const SimpleType& t, int dim) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: return dim == (n + 1) * (n + 1) / 4;
        case Family::C: return dim == n * (n + 1) / 2;
        case Family::B: return n == 2 && dim == 3;
        case Family::D: return n == 3 && dim == 4;
        default: return false;
    }
}

// ---------------------------------------------------------------------------

Outcome criterion_orbit_count() {
    Tally t;
    RootSystem rs(SimpleType::parse("A5"));
    RootSet a = young_shape_ideal(rs, {3, 3, 1});
    const auto n = strongly_orth_subsets(rs, a).size();
    t.expect(n == 20, "#(a/B) = " + std::to_string(n));
    t.expect(orbit_table(rs, a).size() == 20, "orbit table size");
    return finish(t, "#(a/B) = " + std::to_string(n));
}

Outcome criterion_g2() {
    Tally t;
    RootSystem rs(SimpleType::parse("G2"));
    auto maximal = maximal_abelian_ideals(rs);
    t.expect(maximal.size() == 1, "G2 has " + std::to_string(maximal.size()) + " maximal abelian ideals");
    if (maximal.empty()) return finish(t);
    const RootSet& a = maximal.front();
    t.expect(a.size() == 3, "dimension " + std::to_string(a.size()));
    int pairs = 0;
    a.for_each([&](int x) {
        a.for_each([&](int y) { pairs += x < y && rs.strongly_orthogonal(x, y); });
    });
    t.expect(pairs == 0, std::to_string(pairs) + " strongly orthogonal pairs");
    const auto orbits = strongly_orth_subsets(rs, a).size();
    t.expect(orbits == 4, std::to_string(orbits) + " orbits");
    return finish(t, "dim 3, 0 orthogonal pairs, " + std::to_string(orbits) + " orbits");
}

Outcome criterion_canonical_sets() {
    Tally t;
    RootSystem rs(SimpleType::parse("A5"));
    RootSet a = young_shape_ideal(rs, {3, 3, 1});
    RootSet cl = lower_canonical(rs, a);
    RootSet cu = upper_canonical(rs, a);
    t.expect(cl == parse_root_list(rs, "e2-e4,e3-e6,e1-e5"), "C^l = " + format_root_set(rs, cl));
    t.expect(cu == parse_root_list(rs, "e1-e6,e2-e5"), "C^u = " + format_root_set(rs, cu));
    return finish(t, "C^l = {" + format_root_set(rs, cl) + "}, C^u = {" + format_root_set(rs, cu) + "}");
}

Outcome criterion_duality() {
    Tally t;
    for (const auto& type : all_types(5)) {
        RootSystem rs(type);
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            const RootSet cu = upper_canonical(rs, a);
            const RootSet cl = lower_canonical(rs, a);
            t.expect(pyasetskii_dual(rs, a, RootSet{}) == cu, type.name() + ": dual of the empty set");
            t.expect(pyasetskii_dual(rs, a, cl).empty(), type.name() + ": dual of C^l");
        }
    }
    RootSystem rs(SimpleType::parse("A5"));
    RootSet a = young_shape_ideal(rs, {3, 3, 1});
    RootSet dual = pyasetskii_dual(rs, a, parse_root_list(rs, "e1-e4,e2-e6"));
    t.expect(dual == parse_root_list(rs, "e2-e5,e3-e6"), "S^vee = " + format_root_set(rs, dual));
    return finish(t, "{e1-e4,e2-e6}^vee = {" + format_root_set(rs, dual) + "}");
}

Outcome criterion_anr_tables() {
    Tally t;
    auto enumerated = [](const char* name, int node) { return anr_statistic(RootSystem(SimpleType::parse(name)), node); };

    for (int n = 2; n <= 6; ++n) {
        auto table = anr_statistic(RootSystem(SimpleType::make(Family::B, n)), 0);
        const std::vector<std::uint64_t> want{1, static_cast<std::uint64_t>(2 * n - 1),
                                              static_cast<std::uint64_t>(n - 1)};
        t.expect(table.counts == want && table.total == static_cast<std::uint64_t>(3 * n - 1),
                 "B" + std::to_string(n) + ": " + vec_string(table.counts));
    }
    for (int n = 3; n <= 7; ++n) {
        auto table = anr_statistic(RootSystem(SimpleType::make(Family::D, n)), 0);
        const std::vector<std::uint64_t> want{1, static_cast<std::uint64_t>(2 * n - 2),
                                              static_cast<std::uint64_t>(n - 1)};
        t.expect(table.counts == want && table.total == static_cast<std::uint64_t>(3 * n - 2),
                 "D" + std::to_string(n) + " alpha_1: " + vec_string(table.counts));
    }

    const std::vector<std::uint64_t> d_totals{1, 2, 4, 10, 26, 76, 232};
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t formula = 0;
        for (int k = 0; 2 * k <= n; ++k) formula += d_count(n, k);
        t.expect(formula == d_totals[static_cast<std::size_t>(n - 1)], "d total n=" + std::to_string(n));
        if (n < 3) continue;  // D1, D2 are not simple
        RootSystem rs(SimpleType::make(Family::D, n));
        for (int node : {n - 2, n - 1}) {
            auto table = anr_statistic(rs, node);
            t.expect(table.total == formula, "D" + std::to_string(n) + " spinor total");
            for (std::size_t k = 0; k < table.counts.size(); ++k)
                t.expect(table.counts[k] == d_count(n, static_cast<int>(k)), "D spinor count");
        }
    }

    const std::vector<std::uint64_t> c_totals{2, 5, 14, 43, 142, 499};
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t formula = 0;
        for (int k = 0; k <= n; ++k) formula += c_count(n, k);
        t.expect(formula == c_totals[static_cast<std::size_t>(n - 1)], "c total n=" + std::to_string(n));
        // C1 is A1.
        auto table = n == 1 ? enumerated("A1", 0) : anr_statistic(RootSystem(SimpleType::make(Family::C, n)), n - 1);
        t.expect(table.total == formula, "C" + std::to_string(n) + " total " + std::to_string(table.total));
        for (std::size_t k = 0; k < table.counts.size(); ++k)
            t.expect(table.counts[k] == c_count(n, static_cast<int>(k)), "C count");
    }

    RootSystem e6(SimpleType::parse("E6"));
    auto e6_nodes = abelian_nilradicals(e6);
    t.expect(e6_nodes.size() == 2, "E6 nilradical nodes");
    for (const auto& nil : e6_nodes) {
        auto table = anr_statistic(e6, nil.node);
        t.expect(table.counts == std::vector<std::uint64_t>{1, 16, 40} && table.total == 57,
                 "E6: " + vec_string(table.counts));
    }
    RootSystem e7(SimpleType::parse("E7"));
    auto e7_nodes = abelian_nilradicals(e7);
    t.expect(e7_nodes.size() == 1, "E7 nilradical nodes");
    std::string e7_row;
    for (const auto& nil : e7_nodes) {
        auto table = anr_statistic(e7, nil.node);
        e7_row = vec_string(table.counts) + " | " + std::to_string(table.total);
        t.expect(table.counts == std::vector<std::uint64_t>{1, 27, 135, 45} && table.total == 208, "E7: " + e7_row);
    }

    // Enumeration against every closed form on record.
    std::vector<SimpleType> types;
    for (int n = 1; n <= 7; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Family::B, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Family::C, n});
    for (int n = 3; n <= 7; ++n) types.push_back({Family::D, n});
    types.push_back({Family::E, 6});
    types.push_back({Family::E, 7});
    int tables = 0;
    for (const auto& type : types) {
        RootSystem rs(type);
        for (const auto& nil : abelian_nilradicals(rs)) {
            auto expected = expected_anr_counts(type, nil.node);
            t.expect(expected.has_value(), type.name() + ": no closed form");
            if (!expected) continue;
            auto table = anr_statistic(rs, nil.node);
            t.expect(table.counts == trimmed(*expected) && table.total == sum(*expected),
                     type.name() + " node " + std::to_string(nil.node + 1));
            ++tables;
        }
    }
    return finish(t, std::to_string(tables) + " tables; E7 row " + e7_row);
}

Outcome criterion_c_symmetry() {
    Tally t;
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            t.expect(c_count(n, k) == c_count(n, n - k), "c(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (int n = 2; n <= 5; ++n) {
        RootSystem rs(SimpleType::make(Family::C, n));
        const RootSet anr = abelian_nilradical(rs, n - 1);
        std::vector<std::uint64_t> image_sizes(static_cast<std::size_t>(n) + 1, 0);
        std::set<RootSet, decltype(&canonical_less)> images(&canonical_less);
        for (const auto& s : strongly_orth_subsets(rs, anr)) {
            RootSet image = symmetry_bijection(rs, s);
            t.expect(image.size() == n - s.size(), "size of S'");
            t.expect(is_orth_set(rs, image) && image.subset_of(anr), "S' is strongly orthogonal");
            t.expect(symmetry_bijection(rs, image) == s, "S'' = S");
            images.insert(image);
            ++image_sizes[static_cast<std::size_t>(image.size())];
        }
        for (int k = 0; k <= n; ++k)
            t.expect(image_sizes[static_cast<std::size_t>(k)] == c_count(n, n - k), "image count by size");
        t.expect(images.size() == strongly_orth_subsets(rs, anr).size(), "bijection is injective");
    }
    return finish(t);
}

Outcome criterion_krull() {
    Tally t;
    RootSystem rs(SimpleType::parse("A5"));
    RootSet a = young_shape_ideal(rs, {3, 3, 1});
    auto k = krull_dims(rs, a);
    t.expect(k.p == 3 && k.m == 2, "(p, m) = (" + std::to_string(k.p) + ", " + std::to_string(k.m) + ")");
    int ideals = 0;
    for (const auto& type : all_types(5)) {
        RootSystem r(type);
        for (const auto& ideal : enumerate_abelian_ideals(r)) {
            auto dims = krull_dims(r, ideal);
            int primal = 0, dual = 0;
            for (const auto& rec : orbit_table(r, ideal)) {
                primal += rec.dim_in_a == ideal.size() - 1;
                dual += rec.dim_in_a_star == ideal.size() - 1;
            }
            t.expect(primal == dims.p, type.name() + ": codimension-one orbits in a");
            t.expect(dual == dims.m, type.name() + ": codimension-one orbits in a*");
            ++ideals;
        }
    }
    return finish(t, "(p, m) = (3, 2); " + std::to_string(ideals) + " ideals");
}

Outcome criterion_index() {
    Tally t;
    for (int n = 2; n <= 8; ++n) {
        RootSystem rs(SimpleType::make(Family::A, n - 1));
        t.expect(borel_index(rs) == (n - 1) / 2, "ind b for A" + std::to_string(n - 1));
    }
    t.expect(borel_index(RootSystem(SimpleType::parse("A1"))) == 0, "ind b for C1 = A1");
    for (int n = 2; n <= 6; ++n)
        t.expect(borel_index(RootSystem(SimpleType::make(Family::C, n))) == 0, "ind b for C" + std::to_string(n));

    int equalities = 0, strict = 0;
    for (const auto& type : all_types(6)) {
        RootSystem rs(type);
        int max_dim = 0;
        int expected_hits = 0;
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            max_dim = std::max(max_dim, a.size());
            auto est = dim_estimate_report(rs, a);
            const bool want = equality_expected(type, a.size());
            expected_hits += want;
            t.expect(est.lhs <= est.rhs, type.name() + ": estimate violated");
            t.expect(est.equality == want, type.name() + ": equality at dim " + std::to_string(a.size()));
            if (est.equality) t.expect(est.cascade_inside, type.name() + ": equality without the cascade");
            equalities += est.equality;
            strict += !est.equality;
        }
        if (type.family == Family::A) {
            const int n = type.rank + 1;
            t.expect(max_dim == n * n / 4, type.name() + ": largest abelian ideal");
            t.expect(expected_hits >= 1, type.name() + ": no equality case");
        }
        if (type.family == Family::C) {
            auto maximal = maximal_abelian_ideals(rs);
            t.expect(maximal.size() == 1 && maximal.front().size() == type.rank * (type.rank + 1) / 2,
                     type.name() + ": maximal ideal");
            t.expect(expected_hits == 1, type.name() + ": equality cases");
        }
    }
    return finish(t, std::to_string(equalities) + " equalities, " + std::to_string(strict) + " strict");
}

Outcome criterion_d4() {
    Tally t;
    RootSystem rs(SimpleType::parse("D4"));
    const RootSet a = parse_root_list(rs, "e1-e4,e1+e4,e1+e3,e2+e3,e1+e2");
    t.expect(is_ideal(rs, a) && is_abelian(rs, a), "ideal is abelian");
    const RootSet s = rs.min_elements(a);
    t.expect(s == parse_root_list(rs, "e1-e4,e1+e4,e2+e3"), "S = min");
    auto dims = orbit_dims(rs, a, s);
    auto sigma = sigma_of_orth_set(rs, s);
    const int len = length(rs, sigma.element);
    const int rk = absolute_length(sigma.element);
    const RootSet top = upper_canonical(rs, a);
    t.expect(top == RootSet::of({rs.theta()}) && top == parse_root_list(rs, "e1+e2"), "C^u = {theta}");
    auto sigma_top = sigma_of_orth_set(rs, top);
    const int len_top = length(rs, sigma_top.element);
    const bool below = bruhat_leq(rs, sigma.element, sigma_top.element);
    t.expect(dims.in_a == 5, "dim O_S");
    t.expect(dims.in_a_star == 3, "dim O*_S");
    t.expect(len == 11, "l(sigma_S)");
    t.expect(rk == 3, "rk(1 - sigma_S)");
    t.expect(len_top == 9, "l(sigma_theta)");
    t.expect(!below, "sigma_S <= sigma_{C^u}");

    auto report = maximal_ideal_report(rs, a);
    auto row = std::find_if(report.rows.begin(), report.rows.end(), [&](const ConjectureRow& r) { return r.s == s; });
    t.expect(row != report.rows.end() && row->formula_twice == 14 && row->dim_actual == 3 && !row->match,
             "report row");
    std::ostringstream extra;
    extra << "dim O_S=" << dims.in_a << ", dim O*_S=" << dims.in_a_star << ", l=" << len << ", rk=" << rk
          << ", l(sigma_theta)=" << len_top << ", sigma_S <= sigma_theta: " << (below ? "yes" : "no");
    return finish(t, extra.str());
}

Outcome criterion_conjecture() {
    Tally t;
    std::vector<SimpleType> types;
    for (int n = 1; n <= 6; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Family::B, n});
    for (int n = 2; n <= 6; ++n) types.push_back({Family::C, n});
    for (int n = 3; n <= 6; ++n) types.push_back({Family::D, n});
    types.push_back({Family::E, 6});
    int reports = 0, graded = 0;
    long orbits = 0;
    for (const auto& type : types) {
        RootSystem rs(type);
        for (const auto& nil : abelian_nilradicals(rs)) {
            auto rep = conjecture_check(rs, nil.node);
            const std::string where = type.name() + " node " + std::to_string(nil.node + 1);
            t.expect(rep.formula_mismatches.empty(), where + ": dimension formula");
            t.expect(rep.parity_failures.empty(), where + ": parity");
            t.expect(rep.bruhat_violations.empty(), where + ": Bruhat/dimension monotonicity");
            t.expect(rep.cover_violations.empty(), where + ": cover gap");
            ++reports;
            graded += rep.graded;
            orbits += static_cast<long>(rep.rows.size());
        }
    }
    return finish(t, "evidence over " + std::to_string(reports) + " nilradicals, " + std::to_string(orbits) +
                         " orbits; sub-poset graded in " + std::to_string(graded) + "/" + std::to_string(reports));
}

Outcome criterion_normal_form(std::uint64_t seed) {
    Tally t;
    Rng rng(seed);
    struct Entry {
        std::unique_ptr<RootSystem> rs;
        std::unique_ptr<StructureTable> table;
        std::vector<RootSet> ideals;
    };
    std::vector<Entry> entries;
    for (const auto& type : all_types(4)) {
        Entry e;
        e.rs = std::make_unique<RootSystem>(type);
        e.table = std::make_unique<StructureTable>(*e.rs);
        e.ideals = enumerate_abelian_ideals(*e.rs);
        entries.push_back(std::move(e));
    }

    constexpr int kBorelDraws = 1000;
    long ideals = 0;
    for (auto& e : entries) {
        const RootSystem& rs = *e.rs;
        for (const auto& a : e.ideals) {
            if (a.empty()) continue;
            ++ideals;
            const RootSet cl = lower_canonical(rs, a);
            const RootSet cu = upper_canonical(rs, a);
            for (int trial = 0; trial < 3; ++trial) {
                IdealVector generic = random_vector(rs, a, a, rng);
                t.expect(reduce_in_ideal(*e.table, generic).s == cl, rs.type().name() + ": generic -> C^l");
                t.expect(reduce_in_dual(*e.table, generic).s == cu, rs.type().name() + ": generic -> C^u");
            }
            const auto members = a.indices();
            for (int draw = 0; draw < kBorelDraws; ++draw) {
                RootSet support;
                for (int g : members)
                    if (rng.coin()) support.insert(g);
                IdealVector v = random_vector(rs, a, support, rng);
                const Side side = draw % 2 == 0 ? Side::Primal : Side::Dual;
                auto r = reduce(*e.table, v, side);
                t.expect(replay(*e.table, v, r.transcript, side) == IdealVector::indicator(rs, a, r.s),
                         rs.type().name() + ": replay");
                BorelElement b = random_borel_element(rs, rng);
                t.expect(reduce(*e.table, act(*e.table, b, v, side), side).s == r.s,
                         rs.type().name() + ": B-invariance");
            }
        }
    }

    constexpr int kDualPairs = 100;
    std::vector<std::pair<std::size_t, std::size_t>> pool;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < entries[i].ideals.size(); ++j)
            if (!entries[i].ideals[j].empty()) pool.emplace_back(i, j);
    for (int pair = 0; pair < kDualPairs; ++pair) {
        const auto [ei, ai] = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))];
        const auto& e = entries[ei];
        const RootSystem& rs = *e.rs;
        const RootSet& a = e.ideals[ai];
        auto sets = strongly_orth_subsets(rs, a);
        const RootSet& s = sets[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(sets.size()) - 1))];
        const RootSet js = residual_set(rs, a, s);
        auto r = reduce_in_dual(*e.table, random_vector(rs, a, js, rng), js);
        t.expect(r.s == pyasetskii_dual(rs, a, s), rs.type().name() + ": J_S reduces to S^vee");
        t.expect(r.confinement_violations == 0, rs.type().name() + ": support left J_S");
    }
    return finish(t, std::to_string(ideals) + " ideals x " + std::to_string(kBorelDraws) + " B-elements, " +
                         std::to_string(kDualPairs) + " (ideal, S) pairs");
}

Outcome criterion_structure() {
    Tally t;
    long ideals5 = 0;
    for (const auto& type : all_types(5)) {
        RootSystem rs(type);
        const RootSet cascade = kostant_cascade(rs);
        for (const auto& a : enumerate_abelian_ideals(rs)) {
            ++ideals5;
            a.for_each([&](int g1) {
                a.for_each([&](int g2) {
                    if (g1 >= g2 || !rs.strongly_orthogonal(g1, g2)) return;
                    t.expect(!raising_roots(rs, g1).intersects(raising_roots(rs, g2)),
                             type.name() + ": raising roots overlap");
                    t.expect(!lowering_roots(rs, a, g1).intersects(lowering_roots(rs, a, g2)),
                             type.name() + ": lowering roots overlap");
                });
            });
            t.expect(upper_canonical(rs, a) == (cascade & a), type.name() + ": C^u != cascade cap a");
        }
    }
    for (const auto& type : all_types(7)) {
        RootSystem rs(type);
        auto ideals = enumerate_abelian_ideals(rs);
        t.expect(ideals.size() == (std::size_t{1} << type.rank), type.name() + ": 2^rank");
        std::set<std::vector<int>> ours;
        for (const auto& a : ideals) ours.insert(a.indices());
        t.expect(ours == abelian_ideals_by_antichains(rs), type.name() + ": antichain enumerator disagrees");
    }
    for (const auto& type : all_types(6)) {
        RootSystem rs(type);
        int long_simple = 0;
        for (int i = 0; i < rs.rank(); ++i) long_simple += rs.is_long(i);
        t.expect(static_cast<int>(maximal_abelian_ideals(rs).size()) == long_simple,
                 type.name() + ": maximal abelian ideals");
    }
    return finish(t, std::to_string(ideals5) + " ideals at rank <= 5");
}

struct Criterion {
    int id;
    const char* group;
    const char* title;
    std::function<Outcome(const SuiteOptions&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "classification", "orbit count of the (3,3,1) ideal in A5", [](const SuiteOptions&) { return criterion_orbit_count(); }},
        {2, "classification", "G2 maximal abelian ideal", [](const SuiteOptions&) { return criterion_g2(); }},
        {3, "classification", "canonical sets of the (3,3,1) ideal", [](const SuiteOptions&) { return criterion_canonical_sets(); }},
        {4, "duality", "Pyasetskii duality", [](const SuiteOptions&) { return criterion_duality(); }},
        {5, "counting", "abelian nilradical tables", [](const SuiteOptions&) { return criterion_anr_tables(); }},
        {6, "counting", "symmetry of c(n,k)", [](const SuiteOptions&) { return criterion_c_symmetry(); }},
        {7, "invariants", "Krull dimensions and codimension-one orbits", [](const SuiteOptions&) { return criterion_krull(); }},
        {8, "invariants", "index of b and the dimension estimate", [](const SuiteOptions&) { return criterion_index(); }},
        {9, "conjecture", "D4 counterexample", [](const SuiteOptions&) { return criterion_d4(); }},
        {10, "conjecture", "conjecture evidence on nilradicals of rank <= 6", [](const SuiteOptions&) { return criterion_conjecture(); }},
        {11, "normal-form", "normal form properties", [](const SuiteOptions& o) { return criterion_normal_form(o.seed); }},
        {12, "structure", "structural properties", [](const SuiteOptions&) { return criterion_structure(); }},
    };
    return list;
}

}  // namespace

const std::vector<std::string>& suite_groups() {
    static const std::vector<std::string> groups = {"classification", "duality",     "counting", "invariants",
                                                    "conjecture",     "normal-form", "structure"};
    return groups;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
    if (options.only) {
        const auto& g = suite_groups();
        require(std::find(g.begin(), g.end(), *options.only) != g.end(), "unknown suite group '" + *options.only + "'");
    }
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (options.only && *options.only != c.group) continue;
        CriterionResult r;
        r.id = c.id;
        r.group = c.group;
        r.title = c.title;
        const auto start = std::chrono::steady_clock::now();
        try {
            Outcome o = c.run(options);
            r.pass = o.pass;
            r.detail = std::move(o.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << " [" << (r.id < 10 ? " " : "") << r.id << "] " << r.group << ": " << r.title
        << " (" << r.detail << ")";
    return out.str();
}

}  // namespace abelorb
