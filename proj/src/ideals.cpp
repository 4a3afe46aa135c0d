#include "abelorb/ideals.hpp"

#include <algorithm>

#include "abelorb/errors.hpp"
#include "abelorb/parallel.hpp"

namespace abelorb {

RootSet ideal_generated(const RootSystem& rs, const RootSet& m) {
    RootSet out;
    m.for_each([&](int i) { out |= rs.above(i); });
    return out;
}

bool is_ideal(const RootSystem& rs, const RootSet& s) {
    bool ok = true;
    s.for_each([&](int i) { ok = ok && rs.above(i).subset_of(s); });
    return ok;
}

std::vector<RootSet> sum_partners(const RootSystem& rs) {
    const int p = rs.num_positive();
    std::vector<RootSet> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (rs.sum_index(i, j) >= 0) out[i].insert(j);
    return out;
}

bool is_abelian(const RootSystem& rs, const RootSet& s) {
    bool ok = true;
    s.for_each([&](int i) {
        s.for_each([&](int j) { ok = ok && rs.sum_index(i, j) < 0; });
    });
    return ok;
}

namespace {

// Depth-first search over antichains of generators taken in increasing index
// order. Since the order refines height, a later generator can never lie
// below an earlier one, so it only has to avoid the current ideal.
class AbelianSearch {
public:
    explicit AbelianSearch(const RootSystem& rs) : rs_(rs), partners_(sum_partners(rs)) {}

    // Extends `ideal` by root `nu` if the result stays abelian.
    bool extend(const RootSet& ideal, int nu, RootSet& out) const {
        const RootSet& up = rs_.above(nu);
        out = ideal | up;
        RootSet fresh = up - ideal;
        bool ok = true;
        fresh.for_each([&](int x) { ok = ok && !partners_[x].intersects(out); });
        return ok;
    }

    void descend(const RootSet& ideal, int next, std::vector<RootSet>& sink) const {
        sink.push_back(ideal);
        RootSet grown;
        for (int nu = next; nu < rs_.num_positive(); ++nu) {
            if (ideal.contains(nu)) continue;
            if (extend(ideal, nu, grown)) descend(grown, nu + 1, sink);
        }
    }

private:
    const RootSystem& rs_;
    std::vector<RootSet> partners_;
};

void sort_canonical(std::vector<RootSet>& v) {
    std::sort(v.begin(), v.end(), canonical_less);
}

}  // namespace

std::vector<RootSet> enumerate_abelian_ideals(const RootSystem& rs) {
    AbelianSearch search(rs);
    std::vector<RootSet> out;
    search.descend(RootSet{}, 0, out);
    sort_canonical(out);
    return out;
}

std::vector<RootSet> enumerate_abelian_ideals_parallel(const RootSystem& rs) {
    AbelianSearch search(rs);
    const int p = rs.num_positive();
    std::vector<std::vector<RootSet>> parts(static_cast<std::size_t>(p));
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first < p; ++first) {
        slot.run([&] {
            RootSet grown;
            if (search.extend(RootSet{}, first, grown))
                search.descend(grown, first + 1, parts[static_cast<std::size_t>(first)]);
        });
    }
    slot.rethrow();
    std::vector<RootSet> out{RootSet{}};
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    sort_canonical(out);
    return out;
}

std::vector<RootSet> maximal_abelian_ideals(const RootSystem& rs) {
    auto all = enumerate_abelian_ideals(rs);
    std::vector<RootSet> out;
    for (const auto& a : all) {
        bool maximal = std::none_of(all.begin(), all.end(), [&](const RootSet& b) {
            return a != b && a.subset_of(b);
        });
        if (maximal) out.push_back(a);
    }
    return out;
}

RootSet abelian_nilradical(const RootSystem& rs, int node) {
    require(node >= 0 && node < rs.rank(), "node out of range");
    require(rs.coeffs(rs.theta())[node] == 1,
            "node " + std::to_string(node + 1) + " of " + rs.type().name() +
                " does not give an abelian nilradical");
    RootSet out;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (rs.coeffs(i)[node] == 1) out.insert(i);
    return out;
}

std::vector<Nilradical> abelian_nilradicals(const RootSystem& rs) {
    std::vector<Nilradical> out;
    const auto& theta = rs.coeffs(rs.theta());
    for (int i = 0; i < rs.rank(); ++i)
        if (theta[i] == 1) out.push_back({i, abelian_nilradical(rs, i)});
    return out;
}

RootSet young_shape_ideal(const RootSystem& rs, const std::vector<int>& rows) {
    require(rs.type().family == Family::A, "Young shapes are only defined for type A");
    const int n = rs.rank() + 1;
    require(!rows.empty(), "empty shape");
    RootSet out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int i = static_cast<int>(r) + 1;
        require(rows[r] >= 0 && rows[r] <= n - i, "row " + std::to_string(i) + " too long");
        require(r == 0 || rows[r] <= rows[r - 1], "row lengths must be non-increasing");
        for (int j = n - rows[r] + 1; j <= n; ++j) {
            std::vector<int> e(static_cast<std::size_t>(n), 0);
            e[i - 1] = 1;
            e[j - 1] = -1;
            out.insert(*rs.find_positive(*rs.from_eps(e)));
        }
    }
    ensure(is_ideal(rs, out), "right-justified shape is not an ideal");
    return out;
}

}  // namespace abelorb
