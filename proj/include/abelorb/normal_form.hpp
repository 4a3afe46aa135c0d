#pragma once

#include <optional>
#include <vector>

#include "abelorb/chevalley.hpp"
#include "abelorb/ideal_vector.hpp"
#include "abelorb/orbits.hpp"
#include "abelorb/random.hpp"

namespace abelorb {

enum class Side { Primal, Dual };

/// Apply exp(t e_delta).
struct RootStep {
    int delta = 0;
    Rational t;
};

/// Final normalisation: multiply the coefficient at `root` by `factor`.
/// For strongly orthogonal S the required character values are independent,
/// so some torus element realises all of them at once.
struct TorusFactor {
    int root = 0;
    Rational factor;
};

struct ReductionTranscript {
    std::vector<RootStep> steps;
    std::vector<TorusFactor> torus;
};

struct Reduction {
    RootSet s;
    ReductionTranscript transcript;
    /// Steps at which the support left the confinement region (dual side,
    /// when a region was given).
    int confinement_violations = 0;
};

/// Reduce v in a to e_S with S strongly orthogonal and e_S in B.v.
Reduction reduce_in_ideal(const StructureTable& table, const IdealVector& v);

/// Reduce xi in a* to xi_S. If `region` is set, every intermediate support
/// is checked against it.
Reduction reduce_in_dual(const StructureTable& table, const IdealVector& xi,
                         const std::optional<RootSet>& region = std::nullopt);

Reduction reduce(const StructureTable& table, const IdealVector& v, Side side);

/// Replays the transcript on the input.
IdealVector replay(const StructureTable& table, const IdealVector& v, const ReductionTranscript& tr, Side side);

OrbitRecord orbit_of_vector(const StructureTable& table, const IdealVector& v, Side side);

/// Element of B as a word in root-group and torus factors.
struct BorelElement {
    struct Factor {
        bool torus = false;
        RootStep root;
        std::vector<Rational> torus_values;  // t_i, acting on e_gamma by prod t_i^{c_i}
    };
    std::vector<Factor> factors;
};

BorelElement random_borel_element(const RootSystem& rs, Rng& rng, int max_factors = 10);

/// b.v on a (Primal) or on a* (Dual, torus acting by the inverse character).
IdealVector act(const StructureTable& table, const BorelElement& b, const IdealVector& v, Side side);

/// Random coefficients (positive_rational with random sign) on the given support.
IdealVector random_vector(const RootSystem& rs, const RootSet& ambient, const RootSet& support, Rng& rng);

}  // namespace abelorb
