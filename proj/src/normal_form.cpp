#include "abelorb/normal_form.hpp"

#include "abelorb/errors.hpp"

namespace abelorb {

namespace {

constexpr int kMaxSteps = 100000;

// Coefficient at root + k*delta*sign for k = 1..3 must vanish, so that the
// kill equation is linear in t.
void ensure_linear(const RootSystem& rs, const IdealVector& v, int root, int delta, int sign) {
    Coeffs c = rs.coeffs(root);
    for (int k = 1; k <= 3; ++k) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += sign * rs.coeffs(delta)[i];
        if (auto idx = rs.find_positive(c)) ensure(v.at(*idx) == 0, "kill step is not linear");
    }
}

void ensure_fixed(const IdealVector& before, const IdealVector& after, const RootSet& fixed) {
    fixed.for_each([&](int g) { ensure(before.at(g) == after.at(g), "kill step moved a fixed coefficient"); });
}

void normalise(IdealVector& v, const RootSet& s, ReductionTranscript& tr) {
    s.for_each([&](int g) {
        Rational f = 1 / v.at(g);
        tr.torus.push_back({g, f});
        v.set(g, 1);
    });
}

}  // namespace

Reduction reduce_in_ideal(const StructureTable& table, const IdealVector& v_in) {
    const RootSystem& rs = table.roots();
    const RootSet& a = v_in.ambient();
    require(v_in.support().subset_of(a), "support outside the ideal");
    Reduction out;
    IdealVector v = v_in;
    RootSet fixed;
    for (int guard = 0;; ++guard) {
        ensure(guard < kMaxSteps, "reduction did not terminate");
        const RootSet supp = v.support();
        const RootSet kill = shift_up(rs, fixed) & supp;
        if (!kill.empty()) {
            const int nu = rs.min_elements(kill).front();
            int gamma = -1, delta = -1;
            fixed.for_each([&](int g) {
                if (gamma < 0 && rs.diff_index(nu, g) >= 0) {
                    gamma = g;
                    delta = rs.diff_index(nu, g);
                }
            });
            ensure(gamma >= 0, "no fixed root below the killed root");
            ensure_linear(rs, v, gamma, delta, -1);
            const Rational t = -v.at(nu) / (table.n(delta, gamma) * v.at(gamma));
            IdealVector next = ad_exp_action(table, delta, t, v);
            ensure(next.at(nu) == 0, "kill step missed its target");
            ensure_fixed(v, next, fixed);
            out.transcript.steps.push_back({delta, t});
            v = std::move(next);
            continue;
        }
        const RootSet rest = supp - fixed;
        if (rest.empty()) break;
        fixed |= rs.min_elements(rest);
    }
    ensure(is_orth_set(rs, fixed), "reduced support is not strongly orthogonal");
    normalise(v, fixed, out.transcript);
    out.s = fixed;
    return out;
}

Reduction reduce_in_dual(const StructureTable& table, const IdealVector& xi_in,
                         const std::optional<RootSet>& region) {
    const RootSystem& rs = table.roots();
    const RootSet& a = xi_in.ambient();
    require(xi_in.support().subset_of(a), "support outside the ideal");
    Reduction out;
    IdealVector xi = xi_in;
    RootSet fixed;
    for (int guard = 0;; ++guard) {
        ensure(guard < kMaxSteps, "reduction did not terminate");
        const RootSet supp = xi.support();
        const RootSet kill = shift_down(rs, a, fixed) & supp;
        if (!kill.empty()) {
            const int nu = rs.max_elements(kill).front();
            int gamma = -1, delta = -1;
            fixed.for_each([&](int g) {
                if (gamma < 0 && rs.diff_index(g, nu) >= 0) {
                    gamma = g;
                    delta = rs.diff_index(g, nu);
                }
            });
            ensure(gamma >= 0, "no fixed root above the killed root");
            ensure_linear(rs, xi, gamma, delta, +1);
            const Rational t = -xi.at(nu) / (table.n(delta, negative(gamma)) * xi.at(gamma));
            IdealVector next = coad_exp_action(table, delta, t, xi);
            ensure(next.at(nu) == 0, "kill step missed its target");
            ensure_fixed(xi, next, fixed);
            out.transcript.steps.push_back({delta, t});
            xi = std::move(next);
            if (region && !xi.support().subset_of(*region)) ++out.confinement_violations;
            continue;
        }
        const RootSet rest = supp - fixed;
        if (rest.empty()) break;
        fixed |= rs.max_elements(rest);
    }
    ensure(is_orth_set(rs, fixed), "reduced support is not strongly orthogonal");
    normalise(xi, fixed, out.transcript);
    out.s = fixed;
    return out;
}

Reduction reduce(const StructureTable& table, const IdealVector& v, Side side) {
    return side == Side::Primal ? reduce_in_ideal(table, v) : reduce_in_dual(table, v);
}

IdealVector replay(const StructureTable& table, const IdealVector& v, const ReductionTranscript& tr, Side side) {
    IdealVector out = v;
    for (const auto& step : tr.steps)
        out = side == Side::Primal ? ad_exp_action(table, step.delta, step.t, out)
                                   : coad_exp_action(table, step.delta, step.t, out);
    for (const auto& f : tr.torus) out.set(f.root, out.at(f.root) * f.factor);
    return out;
}

OrbitRecord orbit_of_vector(const StructureTable& table, const IdealVector& v, Side side) {
    return orbit_record(table.roots(), v.ambient(), reduce(table, v, side).s);
}

BorelElement random_borel_element(const RootSystem& rs, Rng& rng, int max_factors) {
    BorelElement b;
    const auto count = rng.uniform(1, max_factors);
    for (std::int64_t k = 0; k < count; ++k) {
        BorelElement::Factor f;
        f.torus = rng.uniform(0, 3) == 0;
        if (f.torus) {
            for (int i = 0; i < rs.rank(); ++i) f.torus_values.push_back(rng.nonzero_rational());
        } else {
            f.root.delta = static_cast<int>(rng.uniform(0, rs.num_positive() - 1));
            f.root.t = rng.nonzero_rational();
        }
        b.factors.push_back(std::move(f));
    }
    return b;
}

namespace {

Rational character(const Coeffs& c, const std::vector<Rational>& t) {
    Rational value = 1;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int k = 0; k < c[i]; ++k) value *= t[i];
    return value;
}

}  // namespace

IdealVector act(const StructureTable& table, const BorelElement& b, const IdealVector& v, Side side) {
    const RootSystem& rs = table.roots();
    IdealVector out = v;
    for (const auto& f : b.factors) {
        if (f.torus) {
            out.support().for_each([&](int g) {
                Rational chi = character(rs.coeffs(g), f.torus_values);
                out.set(g, side == Side::Primal ? Rational(out.at(g) * chi) : Rational(out.at(g) / chi));
            });
        } else {
            out = side == Side::Primal ? ad_exp_action(table, f.root.delta, f.root.t, out)
                                       : coad_exp_action(table, f.root.delta, f.root.t, out);
        }
    }
    return out;
}

IdealVector random_vector(const RootSystem& rs, const RootSet& ambient, const RootSet& support, Rng& rng) {
    IdealVector v(rs, ambient);
    support.for_each([&](int g) { v.set(g, rng.nonzero_rational()); });
    return v;
}

}  // namespace abelorb
