#include "abelorb/orbits.hpp"

#include <algorithm>
#include <unordered_map>

#include "abelorb/errors.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/parallel.hpp"

namespace abelorb {

bool is_orth_set(const RootSystem& rs, const RootSet& s) {
    bool ok = true;
    s.for_each([&](int i) { ok = ok && (s - RootSet::of({i})).subset_of(rs.strongly_orthogonal_to(i)); });
    return ok;
}

namespace {

void extend_orth(const RootSystem& rs, const RootSet& current, const RootSet& candidates,
                 std::vector<RootSet>& out) {
    out.push_back(current);
    candidates.for_each([&](int g) {
        RootSet later = candidates & rs.strongly_orthogonal_to(g);
        // keep only indices after g so each subset is produced once
        RootSet tail;
        later.for_each([&](int h) {
            if (h > g) tail.insert(h);
        });
        RootSet next = current;
        next.insert(g);
        extend_orth(rs, next, tail, out);
    });
}

void require_orth_subset(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    require(s.subset_of(a), "set is not contained in the ideal");
    require(is_orth_set(rs, s), "set is not strongly orthogonal");
}

}  // namespace

std::vector<RootSet> strongly_orth_subsets(const RootSystem& rs, const RootSet& a) {
    std::vector<RootSet> out;
    extend_orth(rs, RootSet{}, a, out);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

RootSet shift_up(const RootSystem& rs, const RootSet& s) {
    RootSet out;
    s.for_each([&](int g) { out |= rs.up_shift(g); });
    return out;
}

RootSet shift_down(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    RootSet out;
    s.for_each([&](int g) { out |= rs.down_shift(g); });
    return out & a;
}

RootSet raising_roots(const RootSystem& rs, int gamma) {
    RootSet out;
    for (int d = 0; d < rs.num_positive(); ++d)
        if (rs.sum_index(gamma, d) >= 0) out.insert(d);
    return out;
}

RootSet lowering_roots(const RootSystem& rs, const RootSet& a, int gamma) {
    RootSet out;
    for (int d = 0; d < rs.num_positive(); ++d)
        if (int r = rs.diff_index(gamma, d); r >= 0 && a.contains(r)) out.insert(d);
    return out;
}

RootSet residual_set(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    return a - (s | shift_up(rs, s));
}

OrbitDims orbit_dims(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    require_orth_subset(rs, a, s);
    return {s.size() + (shift_up(rs, s) & a).size(), s.size() + shift_down(rs, a, s).size()};
}

CanonicalLayers canonical_layers(const RootSystem& rs, const RootSet& carrier, LayerDirection dir) {
    CanonicalLayers out;
    RootSet covered;
    while (!(carrier - covered).empty()) {
        RootSet rest = carrier - covered;
        RootSet layer = dir == LayerDirection::Lower ? rs.min_elements(rest) : rs.max_elements(rest);
        RootSet hook;
        layer.for_each([&](int g) {
            hook |= dir == LayerDirection::Lower ? rs.up_shift(g) : rs.down_shift(g);
        });
        covered |= layer | (hook & carrier);
        out.layers.push_back(layer);
        out.set |= layer;
    }
    out.strongly_orthogonal = is_orth_set(rs, out.set);
    return out;
}

RootSet lower_canonical(const RootSystem& rs, const RootSet& a) {
    auto layers = canonical_layers(rs, a, LayerDirection::Lower);
    ensure(layers.strongly_orthogonal, "lower canonical set is not strongly orthogonal");
    return layers.set;
}

RootSet upper_canonical(const RootSystem& rs, const RootSet& subset) {
    require(is_abelian(rs, ideal_generated(rs, subset)),
            "subset does not lie in an abelian ideal");
    auto layers = canonical_layers(rs, subset, LayerDirection::Upper);
    ensure(layers.strongly_orthogonal, "upper canonical set is not strongly orthogonal");
    return layers.set;
}

CanonicalLayers upper_canonical_unchecked(const RootSystem& rs, const RootSet& subset) {
    return canonical_layers(rs, subset, LayerDirection::Upper);
}

RootSet kostant_cascade(const RootSystem& rs) {
    auto layers = canonical_layers(rs, rs.all(), LayerDirection::Upper);
    ensure(layers.strongly_orthogonal, "cascade is not strongly orthogonal");
    return layers.set;
}

RootSet pyasetskii_dual(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    require_orth_subset(rs, a, s);
    return upper_canonical(rs, residual_set(rs, a, s));
}

DualityTable duality_table(const RootSystem& rs, const RootSet& a) {
    DualityTable t;
    t.sets = strongly_orth_subsets(rs, a);
    std::unordered_map<RootSet, int> index;
    for (std::size_t i = 0; i < t.sets.size(); ++i) index.emplace(t.sets[i], static_cast<int>(i));
    const std::size_t n = t.sets.size();
    t.dual.assign(n, -1);
    t.inverse.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = index.find(pyasetskii_dual(rs, a, t.sets[i]));
        ensure(it != index.end(), "dual set is not in the orbit table");
        t.dual[i] = it->second;
    }
    t.bijective = true;
    for (std::size_t i = 0; i < n; ++i) {
        int& slot = t.inverse[static_cast<std::size_t>(t.dual[i])];
        if (slot >= 0) t.bijective = false;
        slot = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (t.dual[static_cast<std::size_t>(t.dual[i])] != static_cast<int>(i)) ++t.non_involutive;
    return t;
}

KrullDims krull_dims(const RootSystem& rs, const RootSet& a) {
    return {lower_canonical(rs, a).size(), upper_canonical(rs, a).size()};
}

int borel_index(const RootSystem& rs) { return rs.rank() - kostant_cascade(rs).size(); }

DimEstimate dim_estimate_report(const RootSystem& rs, const RootSet& a) {
    RootSet cascade = kostant_cascade(rs);
    DimEstimate d;
    d.lhs = 2 * a.size();
    d.rhs = rs.num_positive() + cascade.size();
    d.equality = d.lhs == d.rhs;
    d.cascade_inside = cascade.subset_of(a);
    return d;
}

OrbitRecord orbit_record(const RootSystem& rs, const RootSet& a, const RootSet& s) {
    require_orth_subset(rs, a, s);
    OrbitRecord r;
    r.s = s;
    r.m_s = shift_up(rs, s);
    ensure(r.m_s.subset_of(a), "upward shift left the ideal");
    r.m_star_s = shift_down(rs, a, s);
    r.j_s = a - (s | r.m_s);
    r.dim_in_a = s.size() + r.m_s.size();
    r.dim_in_a_star = s.size() + r.m_star_s.size();
    r.dual = upper_canonical(rs, r.j_s);
    auto sigma = sigma_of_orth_set(rs, s);
    r.sigma_length = length(rs, sigma.element);
    r.sigma_abs_length = absolute_length(sigma.element);
    return r;
}

std::vector<OrbitRecord> orbit_table(const RootSystem& rs, const RootSet& a) {
    std::vector<OrbitRecord> out;
    for (const auto& s : strongly_orth_subsets(rs, a)) out.push_back(orbit_record(rs, a, s));
    return out;
}

std::vector<OrbitRecord> orbit_table_parallel(const RootSystem& rs, const RootSet& a) {
    auto sets = strongly_orth_subsets(rs, a);
    std::vector<OrbitRecord> out(sets.size());
    const auto n = static_cast<long>(sets.size());
    ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        slot.run([&] { out[k] = orbit_record(rs, a, sets[k]); });
    }
    slot.rethrow();
    return out;
}

}  // namespace abelorb
