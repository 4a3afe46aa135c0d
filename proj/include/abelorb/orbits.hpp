#pragma once

#include <vector>

#include "abelorb/root_system.hpp"
#include "abelorb/weyl.hpp"

namespace abelorb {

/// Pairwise strongly orthogonal.
bool is_orth_set(const RootSystem& rs, const RootSet& s);

/// Every strongly orthogonal subset of a, including the empty set, ordered by
/// canonical_less. Its size is the number of B-orbits in a (and in a*).
std::vector<RootSet> strongly_orth_subsets(const RootSystem& rs, const RootSet& a);

/// M_S = (S + Delta+) cap Delta+
RootSet shift_up(const RootSystem& rs, const RootSet& s);
/// M*_S = (S - Delta+) cap Delta_a
RootSet shift_down(const RootSystem& rs, const RootSet& a, const RootSet& s);
/// {delta in Delta+ : gamma + delta in Delta+}
RootSet raising_roots(const RootSystem& rs, int gamma);
/// {delta in Delta+ : gamma - delta in Delta_a}
RootSet lowering_roots(const RootSystem& rs, const RootSet& a, int gamma);
/// J_S = Delta_a minus (S u M_S)
RootSet residual_set(const RootSystem& rs, const RootSet& a, const RootSet& s);

struct OrbitDims {
    int in_a = 0;       // #S + #M_S
    int in_a_star = 0;  // #S + #M*_S
};
OrbitDims orbit_dims(const RootSystem& rs, const RootSet& a, const RootSet& s);

enum class LayerDirection { Lower, Upper };

/// Iterated peeling of a carrier set. Lower: Gamma = min of the uncovered
/// part, which then covers Gamma and (Gamma + Delta+) cap carrier. Upper: the
/// same with max and (Gamma - Delta+) cap carrier.
struct CanonicalLayers {
    std::vector<RootSet> layers;
    RootSet set;  // union of the layers
    bool strongly_orthogonal = true;
};
CanonicalLayers canonical_layers(const RootSystem& rs, const RootSet& carrier, LayerDirection dir);

/// C^l of an abelian ideal.
RootSet lower_canonical(const RootSystem& rs, const RootSet& a);

/// C^u of a subset lying in an abelian ideal. Throws DomainError if the
/// ideal generated by `subset` is not abelian.
RootSet upper_canonical(const RootSystem& rs, const RootSet& subset);

/// Upper construction on an arbitrary subset; the result may fail to be
/// strongly orthogonal, which the returned flag reports.
CanonicalLayers upper_canonical_unchecked(const RootSystem& rs, const RootSet& subset);

/// The cascade: upper construction on all of Delta+.
RootSet kostant_cascade(const RootSystem& rs);

/// S^vee = C^u(J_S). Throws DomainError unless S is a strongly orthogonal
/// subset of a.
RootSet pyasetskii_dual(const RootSystem& rs, const RootSet& a, const RootSet& s);

/// The duality map on all of 𝔖_a, with its inverse by table lookup.
struct DualityTable {
    std::vector<RootSet> sets;   // 𝔖_a in canonical order
    std::vector<int> dual;       // index of S^vee
    std::vector<int> inverse;    // index of the unique S' with S'^vee = S, or -1
    bool bijective = false;
    int non_involutive = 0;      // count of S with (S^vee)^vee != S
};
DualityTable duality_table(const RootSystem& rs, const RootSet& a);

struct KrullDims {
    int p = 0;  // #C^l
    int m = 0;  // #C^u
};
KrullDims krull_dims(const RootSystem& rs, const RootSet& a);

/// rank - #cascade
int borel_index(const RootSystem& rs);

struct DimEstimate {
    int lhs = 0;  // 2 dim a
    int rhs = 0;  // |Delta+| + #cascade
    bool equality = false;
    bool cascade_inside = false;
};
DimEstimate dim_estimate_report(const RootSystem& rs, const RootSet& a);

struct OrbitRecord {
    RootSet s;
    int dim_in_a = 0;
    int dim_in_a_star = 0;
    RootSet m_s;
    RootSet m_star_s;
    RootSet j_s;
    RootSet dual;
    int sigma_length = 0;
    int sigma_abs_length = 0;
};
OrbitRecord orbit_record(const RootSystem& rs, const RootSet& a, const RootSet& s);

/// Records for all of 𝔖_a in canonical order.
std::vector<OrbitRecord> orbit_table(const RootSystem& rs, const RootSet& a);
std::vector<OrbitRecord> orbit_table_parallel(const RootSystem& rs, const RootSet& a);

}  // namespace abelorb
