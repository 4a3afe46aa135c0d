#include "abelorb/anr.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <boost/dynamic_bitset.hpp>

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/notation.hpp"
#include "abelorb/orbits.hpp"
#include "abelorb/parallel.hpp"

namespace abelorb {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    require(!__builtin_mul_overflow(a, b, &out), "count exceeds 64 bits");
    return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    require(!__builtin_add_overflow(a, b, &out), "count exceeds 64 bits");
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 0; i < k; ++i) {
        // c = C(n, i) stays integral after each step.
        c = c * static_cast<unsigned>(n - i) / static_cast<unsigned>(i + 1);
        require(c <= std::numeric_limits<std::uint64_t>::max(), "count exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(c);
}

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

void require_anr_node(const RootSystem& rs, int node) {
    require(node >= 0 && node < rs.rank(), "node out of range");
    require(rs.coeffs(rs.theta())[node] == 1,
            "node " + std::to_string(node + 1) + " of " + rs.type().name() +
                " is not an abelian-nilradical node; other maximal abelian ideals go through "
                "maximal_ideal_report (CLI: conjecture-check --ideal)");
}

bool is_maximal_abelian(const RootSystem& rs, const RootSet& a) {
    if (!is_ideal(rs, a) || !is_abelian(rs, a)) return false;
    // A larger abelian ideal contains some nu outside a whose up-shift lies in a.
    for (int nu = 0; nu < rs.num_positive(); ++nu) {
        if (a.contains(nu) || !rs.up_shift(nu).subset_of(a)) continue;
        RootSet b = a;
        b.insert(nu);
        if (is_abelian(rs, b)) return false;
    }
    return true;
}

std::vector<char> bruhat_matrix_impl(const RootSystem& rs, const std::vector<Involution>& sigmas,
                                     [[maybe_unused]] bool parallel) {
    std::vector<int> lengths(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) lengths[i] = length(rs, sigmas[i].element);
    const auto n = static_cast<long>(sigmas.size());
    const auto un = sigmas.size();
    std::vector<char> leq(un * un, 0);
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (long i = 0; i < n; ++i) {
        slot.run([&] {
            const auto ui = static_cast<std::size_t>(i);
            for (std::size_t uj = 0; uj < un; ++uj)
                leq[ui * un + uj] =
                    bruhat_leq(rs, sigmas[ui].element, lengths[ui], sigmas[uj].element, lengths[uj]);
        });
    }
    slot.rethrow();
    return leq;
}

ConjectureReport build_report(const RootSystem& rs, const RootSet& a, std::optional<int> node,
                              bool parallel) {
    ConjectureReport rep;
    rep.type = rs.type();
    rep.node = node;
    rep.ideal = a;
    rep.top = upper_canonical(rs, a);

    const auto sets = strongly_orth_subsets(rs, a);
    const auto n = static_cast<long>(sets.size());
    const auto un = sets.size();
    rep.rows.resize(un);
    std::vector<Involution> sigmas(un);
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (long i = 0; i < n; ++i) {
        slot.run([&] {
            const auto k = static_cast<std::size_t>(i);
            sigmas[k] = sigma_of_orth_set(rs, sets[k]);
            auto& row = rep.rows[k];
            row.s = sets[k];
            row.sigma_length = length(rs, sigmas[k].element);
            row.sigma_abs_length = absolute_length(sigmas[k].element);
            const auto dims = orbit_dims(rs, a, sets[k]);
            row.dim_in_a = dims.in_a;
            row.dim_actual = dims.in_a_star;
            row.formula_twice = row.sigma_length + sets[k].size();
            row.parity_ok = row.formula_twice % 2 == 0;
            row.match = row.parity_ok && row.formula_twice / 2 == row.dim_actual;
        });
    }
    slot.rethrow();

    std::unordered_map<RootSet, int> index;
    for (long i = 0; i < n; ++i) index.emplace(sets[static_cast<std::size_t>(i)], static_cast<int>(i));

    for (long i = 0; i < n; ++i) {
        const auto& row = rep.rows[static_cast<std::size_t>(i)];
        if (!row.parity_ok) rep.parity_failures.push_back(static_cast<int>(i));
        if (!row.match) rep.formula_mismatches.push_back(static_cast<int>(i));
    }

    const auto leq = bruhat_matrix_impl(rs, sigmas, parallel);
    auto at = [&](long i, long j) {
        return leq[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] != 0;
    };
    auto same = [&](long i, long j) {
        return sigmas[static_cast<std::size_t>(i)].element == sigmas[static_cast<std::size_t>(j)].element;
    };

    // lt_from[i] = {j : sigma_i < sigma_j}, lt_to[j] = {i : sigma_i < sigma_j}
    std::vector<boost::dynamic_bitset<>> lt_from(un, boost::dynamic_bitset<>(un));
    std::vector<boost::dynamic_bitset<>> lt_to(un, boost::dynamic_bitset<>(un));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (i == j) continue;
            if (same(i, j)) {
                if (i < j) rep.coincident_involutions.push_back({static_cast<int>(i), static_cast<int>(j)});
                continue;
            }
            if (at(i, j)) {
                lt_from[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                lt_to[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }
        }

    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            if (!lt_from[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j))) continue;
            const auto& lo = rep.rows[static_cast<std::size_t>(i)];
            const auto& hi = rep.rows[static_cast<std::size_t>(j)];
            const RowPair pair{static_cast<int>(i), static_cast<int>(j)};
            if (lo.dim_actual >= hi.dim_actual) rep.bruhat_violations.push_back(pair);
            if (!lt_from[static_cast<std::size_t>(i)].intersects(lt_to[static_cast<std::size_t>(j)])) {
                rep.covers.push_back(pair);
                if (hi.dim_actual - lo.dim_actual != 1) rep.cover_violations.push_back(pair);
            }
        }

    for (long j = 0; j < n; ++j) {
        const RootSet& s = sets[static_cast<std::size_t>(j)];
        for (int g : s.indices()) {
            RootSet smaller = s;
            smaller.erase(g);
            const int i = index.at(smaller);
            if (!lt_from[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)))
                rep.subset_violations.push_back({i, static_cast<int>(j)});
        }
    }

    const long top = index.at(rep.top);
    for (long i = 0; i < n; ++i)
        if (!at(i, top)) rep.not_below_top.push_back(static_cast<int>(i));

    // Chain lengths from the bottom (S empty, sigma = 1) along covers; the
    // covers are visited in order of increasing upper length.
    ensure(sets.front().empty(), "orthogonal sets must start with the empty set");
    std::vector<int> shortest(un, -1), longest(un, -1);
    shortest[0] = longest[0] = 0;
    auto covers = rep.covers;
    std::stable_sort(covers.begin(), covers.end(), [&](const RowPair& x, const RowPair& y) {
        return rep.rows[static_cast<std::size_t>(x.upper)].sigma_length <
               rep.rows[static_cast<std::size_t>(y.upper)].sigma_length;
    });
    for (const auto& c : covers) {
        const auto lo = static_cast<std::size_t>(c.lower);
        const auto hi = static_cast<std::size_t>(c.upper);
        if (shortest[lo] < 0) continue;
        shortest[hi] = shortest[hi] < 0 ? shortest[lo] + 1 : std::min(shortest[hi], shortest[lo] + 1);
        longest[hi] = std::max(longest[hi], longest[lo] + 1);
    }
    rep.graded = rep.coincident_involutions.empty();
    rep.rank_is_formula = true;
    for (std::size_t i = 0; i < un; ++i) {
        if (shortest[i] < 0 || shortest[i] != longest[i]) rep.graded = false;
        const auto& row = rep.rows[i];
        if (!row.parity_ok || shortest[i] != row.formula_twice / 2) rep.rank_is_formula = false;
    }
    rep.rank_is_formula = rep.rank_is_formula && rep.graded;
    return rep;
}

}  // namespace

std::uint64_t d_count(int n, int k) {
    require(n >= 0 && k >= 0, "d_count: negative input");
    if (2 * k > n) return 0;
    // (2k)! / (k! 2^k) = (2k-1)!!
    std::uint64_t odd = 1;
    for (int i = 1; i < 2 * k; i += 2) odd = checked_mul(odd, static_cast<std::uint64_t>(i));
    return checked_mul(binomial(n, 2 * k), odd);
}

std::uint64_t c_count(int n, int k) {
    require(n >= 0 && k >= 0, "c_count: negative input");
    if (k > n) return 0;
    std::uint64_t sum = 0;
    for (int t = 0; t <= std::min(k, n - k); ++t)
        sum = checked_add(sum, checked_mul(binomial(n - 2 * t, k - t), d_count(n, t)));
    return sum;
}

std::uint64_t rectangle_count(int m, int n, int k) {
    require(m >= 1 && n >= 1, "rectangle_count: sides must be positive");
    require(k >= 0, "rectangle_count: negative k");
    if (k > std::min(m, n)) return 0;
    return checked_mul(checked_mul(factorial(k), binomial(m, k)), binomial(n, k));
}

CountTable anr_statistic(const RootSystem& rs, int node) {
    require_anr_node(rs, node);
    CountTable table;
    table.type = rs.type();
    table.node = node;
    for (const RootSet& s : strongly_orth_subsets(rs, abelian_nilradical(rs, node))) {
        const auto k = static_cast<std::size_t>(s.size());
        if (table.counts.size() <= k) table.counts.resize(k + 1, 0);
        ++table.counts[k];
        ++table.total;
    }
    return table;
}

std::optional<std::vector<std::uint64_t>> expected_anr_counts(const SimpleType& t, int node) {
    const RootSystem rs(t);
    require_anr_node(rs, node);
    const int n = t.rank;
    std::vector<std::uint64_t> out;
    switch (t.family) {
        case Family::A: {
            // The nilradical is an (i+1) x (n-i) rectangle.
            const int rows = node + 1;
            const int cols = n - node;
            for (int k = 0; k <= std::min(rows, cols); ++k) out.push_back(rectangle_count(rows, cols, k));
            return out;
        }
        case Family::B:
            return std::vector<std::uint64_t>{1, static_cast<std::uint64_t>(2 * n - 1),
                                              static_cast<std::uint64_t>(n - 1)};
        case Family::C:
            for (int k = 0; k <= n; ++k) out.push_back(c_count(n, k));
            return out;
        case Family::D:
            if (node == 0)
                return std::vector<std::uint64_t>{1, static_cast<std::uint64_t>(2 * n - 2),
                                                  static_cast<std::uint64_t>(n - 1)};
            for (int k = 0; 2 * k <= n; ++k) out.push_back(d_count(n, k));
            return out;
        case Family::E:
            if (n == 6) return std::vector<std::uint64_t>{1, 16, 40};
            if (n == 7) return std::vector<std::uint64_t>{1, 27, 135, 45};
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

RootSet symmetry_bijection(const RootSystem& rs, const RootSet& s) {
    require(rs.type().family == Family::C, "the symmetry bijection is defined for type C only");
    const int n = rs.rank();
    const RootSet anr = abelian_nilradical(rs, n - 1);
    require(s.subset_of(anr) && is_orth_set(rs, s),
            "set is not strongly orthogonal in the abelian nilradical");
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    RootSet out;
    for (int g : s.indices()) {
        const auto e = rs.to_eps(rs.coeffs(g));
        for (int i = 0; i < n; ++i)
            if (e[static_cast<std::size_t>(i)] != 0) used[static_cast<std::size_t>(i)] = true;
        if (!rs.is_long(g)) out.insert(g);
    }
    for (int i = 0; i < n; ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 2;
        out.insert(*rs.find_positive(*rs.from_eps(e)));
    }
    ensure(out.size() == n - s.size(), "symmetry bijection changed the wrong number of roots");
    return out;
}

WeylElement levi_longest_element(const RootSystem& rs, int node) {
    require(node >= 0 && node < rs.rank(), "node out of range");
    std::vector<int> levi;
    for (int i = 0; i < rs.rank(); ++i)
        if (i != node) levi.push_back(i);
    return longest_element(rs, levi);
}

RootSet w0L_action(const RootSystem& rs, int node, const RootSet& s) {
    const RootSet anr = abelian_nilradical(rs, node);
    require(s.subset_of(anr), "set is not inside the abelian nilradical");
    const WeylElement w = levi_longest_element(rs, node);
    RootSet out;
    for (int g : s.indices()) {
        auto image = rs.find_positive(w.apply(rs.coeffs(g)));
        ensure(image.has_value() && anr.contains(*image), "w_{0,L} moved a root out of the nilradical");
        out.insert(*image);
    }
    return out;
}

ConjectureReport conjecture_check(const RootSystem& rs, int node) {
    require_anr_node(rs, node);
    return build_report(rs, abelian_nilradical(rs, node), node, true);
}

ConjectureReport conjecture_check_serial(const RootSystem& rs, int node) {
    require_anr_node(rs, node);
    return build_report(rs, abelian_nilradical(rs, node), node, false);
}

ConjectureReport maximal_ideal_report(const RootSystem& rs, const RootSet& a) {
    require(is_maximal_abelian(rs, a), "ideal is not a maximal abelian ideal");
    for (const auto& nil : abelian_nilradicals(rs))
        require(nil.roots != a, "ideal is an abelian nilradical (node " + std::to_string(nil.node + 1) +
                                    "); use conjecture_check");
    return build_report(rs, a, std::nullopt, true);
}

std::vector<char> bruhat_matrix(const RootSystem& rs, const std::vector<Involution>& sigmas) {
    return bruhat_matrix_impl(rs, sigmas, true);
}

std::vector<char> bruhat_matrix_serial(const RootSystem& rs, const std::vector<Involution>& sigmas) {
    return bruhat_matrix_impl(rs, sigmas, false);
}

std::string hasse_dot(const RootSystem& rs, const ConjectureReport& report, Numbering numbering) {
    std::ostringstream out;
    out << "digraph bruhat {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        out << "  s" << i << " [label=\"{" << format_root_set(rs, row.s, numbering) << "}\\ndim O="
            << row.dim_in_a << ", dim O*=" << row.dim_actual << ", l=" << row.sigma_length << "\"];\n";
    }
    for (const auto& c : report.covers) out << "  s" << c.lower << " -> s" << c.upper << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace abelorb
