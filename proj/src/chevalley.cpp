#include "abelorb/chevalley.hpp"

#include "abelorb/errors.hpp"

namespace abelorb {

namespace {

Coeffs signed_coeffs(const RootSystem& rs, int code) {
    Coeffs c = rs.coeffs(root_of(code));
    if (is_negative(code))
        for (int& x : c) x = -x;
    return c;
}

}  // namespace

StructureTable::StructureTable(const RootSystem& rs) : rs_(&rs) {
    width_ = 2 * static_cast<std::size_t>(rs.num_positive());
    table_.assign(width_ * width_, 0);
    sums_.assign(width_ * width_, kNone);
    for (std::size_t i = 0; i < width_; ++i)
        for (std::size_t j = 0; j < width_; ++j) {
            Coeffs c = signed_coeffs(rs, code_of_slot(i));
            Coeffs d = signed_coeffs(rs, code_of_slot(j));
            for (std::size_t k = 0; k < c.size(); ++k) c[k] += d[k];
            if (auto pos = rs.find_positive(c)) {
                sums_[i * width_ + j] = *pos;
                continue;
            }
            for (int& x : c) x = -x;
            if (auto neg = rs.find_positive(c)) sums_[i * width_ + j] = negative(*neg);
        }
    build();
}

// N(a,b) for a mixed-sign or all-negative pair, reduced to positive pairs
// whose sum has smaller height via N(-a,-b) = -N(a,b) and the cyclic rule
// N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y) for x+y+z = 0.
int StructureTable::derived(int a, int b) const {
    const RootSystem& rs = *rs_;
    const int c = sum_code(a, b);
    if (c == kNone) return 0;
    if (!is_negative(a) && !is_negative(b)) return n(a, b);
    if (is_negative(a) && is_negative(b)) return -n(root_of(a), root_of(b));
    if (is_negative(a)) return -derived(b, a);
    const int beta = root_of(b);
    auto len = [&](int r) { return rs.scaled_inner(r, r); };
    long num = 0, den = 0;
    if (!is_negative(c)) {
        // a = beta + c: N(a,-beta) = -(c,c)/(a,a) N(beta,c)
        num = -len(c) * n(beta, c);
        den = len(a);
    } else {
        // beta = a + g: N(a,-beta) = (g,g)/(beta,beta) N(g,a)
        const int g = root_of(c);
        num = len(g) * n(g, a);
        den = len(beta);
    }
    ensure(num % den == 0, "non-integral derived structure constant");
    return static_cast<int>(num / den);
}

void StructureTable::build() {
    const RootSystem& rs = *rs_;
    const int p = rs.num_positive();
    auto set_pair = [&](int a, int b, int value) {
        table_[slot(a) * width_ + slot(b)] = value;
        table_[slot(b) * width_ + slot(a)] = -value;
    };
    auto len = [&](int code) { return Rational(rs.scaled_inner(root_of(code), root_of(code))); };
    for (int xi = 0; xi < p; ++xi) {
        // special pairs (alpha, beta), alpha before beta, alpha + beta = xi
        std::vector<std::pair<int, int>> pairs;
        for (int alpha = 0; alpha < xi; ++alpha) {
            int beta = rs.diff_index(xi, alpha);
            if (beta > alpha) pairs.emplace_back(alpha, beta);
        }
        if (pairs.empty()) continue;
        const auto [a1, b1] = pairs.front();
        // p = max{k : beta1 - k alpha1 is a root}
        int p_string = 0;
        for (Coeffs cur = rs.coeffs(b1);; ++p_string) {
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= rs.coeffs(a1)[i];
            if (!rs.is_root(cur)) break;
        }
        set_pair(a1, b1, p_string + 1);
        const Rational n11 = p_string + 1;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            const auto [al, be] = pairs[k];
            const int na1 = negative(a1), nb1 = negative(b1);
            Rational sum = 0;
            if (int d = sum_code(be, na1); d != kNone)
                sum += Rational(derived(be, na1) * derived(al, nb1)) / len(d);
            if (int d = sum_code(al, na1); d != kNone)
                sum += Rational(derived(na1, al) * derived(be, nb1)) / len(d);
            Rational value = len(xi) * sum / n11;
            ensure(value.get_den() == 1, "non-integral structure constant");
            set_pair(al, be, static_cast<int>(value.get_num().get_si()));
        }
    }
    // fill the remaining pairs from the positive ones
    for (std::size_t i = 0; i < width_; ++i)
        for (std::size_t j = 0; j < width_; ++j) {
            const int a = code_of_slot(i), b = code_of_slot(j);
            if (is_negative(a) || is_negative(b)) table_[i * width_ + j] = derived(a, b);
        }
    for (std::size_t i = 0; i < width_; ++i)
        for (std::size_t j = 0; j < width_; ++j) {
            const int v = table_[i * width_ + j];
            ensure((v != 0) == (sums_[i * width_ + j] != kNone), "structure constant support mismatch");
        }
}

StructureTable StructureTable::negated() const {
    StructureTable out = *this;
    for (int& v : out.table_) v = -v;
    return out;
}

std::vector<std::pair<int, long>> StructureTable::bracket_basis(int x, int y) const {
    const RootSystem& rs = *rs_;
    const int n_rank = rs.rank();
    std::vector<std::pair<int, long>> out;
    if (x < n_rank && y < n_rank) return out;
    if (x < n_rank || y < n_rank) {
        // [h_i, e_a] = <a, alpha_i^vee> e_a
        const bool h_first = x < n_rank;
        const int i = h_first ? x : y;
        const int e = h_first ? y : x;
        const int code = code_of_slot(static_cast<std::size_t>(e - n_rank));
        const Coeffs c = signed_coeffs(rs, code);
        long value = 0;
        for (int j = 0; j < n_rank; ++j) value += static_cast<long>(c[j]) * rs.cartan()[j][i];
        if (value != 0) out.emplace_back(e, h_first ? value : -value);
        return out;
    }
    const int a = code_of_slot(static_cast<std::size_t>(x - n_rank));
    const int b = code_of_slot(static_cast<std::size_t>(y - n_rank));
    if (root_of(a) == root_of(b)) {
        if (a == b) return out;
        // [e_a, e_{-a}] = h_a = sum c_i (alpha_i, alpha_i)/(a, a) h_i
        const Coeffs c = signed_coeffs(rs, a);
        const long aa = rs.scaled_inner(root_of(a), root_of(a));
        for (int i = 0; i < n_rank; ++i) {
            if (c[i] == 0) continue;
            const long num = c[i] * rs.scaled_inner(i, i);
            ensure(num % aa == 0, "coroot not integral");
            out.emplace_back(i, num / aa);
        }
        return out;
    }
    const int s = sum_code(a, b);
    if (s != kNone) out.emplace_back(basis_of(s), n(a, b));
    return out;
}

namespace {

template <typename Step>
IdealVector exp_series(const IdealVector& v, const Rational& t, Step step, int& depth) {
    IdealVector total = v;
    IdealVector term = v;
    depth = 0;
    if (t == 0) return total;
    for (int k = 1;; ++k) {
        term = step(term);
        if (term.is_zero()) break;
        depth = k;
        const Rational scale = t / k;
        term.support().for_each([&](int g) { term.set(g, term.at(g) * scale); });
        term.support().for_each([&](int g) { total.add(g, term.at(g)); });
        ensure(k <= 4, "exponential series did not terminate");
    }
    return total;
}

}  // namespace

IdealVector ad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& v) {
    const RootSystem& rs = table.roots();
    require(delta >= 0 && delta < rs.num_positive(), "delta must be a positive root");
    auto step = [&](const IdealVector& x) {
        IdealVector out(rs, x.ambient());
        x.support().for_each([&](int g) {
            const int s = rs.sum_index(delta, g);
            if (s < 0) return;
            ensure(x.ambient().contains(s), "ideal is not closed under the adjoint action");
            out.add(s, x.at(g) * table.n(delta, g));
        });
        return out;
    };
    int depth = 0;
    return exp_series(v, t, step, depth);
}

IdealVector coad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& xi,
                            SeriesDepth& depth) {
    const RootSystem& rs = table.roots();
    require(delta >= 0 && delta < rs.num_positive(), "delta must be a positive root");
    auto step = [&](const IdealVector& x) {
        IdealVector out(rs, x.ambient());
        x.support().for_each([&](int mu) {
            // e_delta . e_{-mu} = N(delta,-mu) e_{-(mu - delta)}, kept only
            // when mu - delta is in a; other weights lie in a^perp.
            const int d = rs.diff_index(mu, delta);
            if (d < 0 || !x.ambient().contains(d)) return;
            out.add(d, x.at(mu) * table.n(delta, negative(mu)));
        });
        return out;
    };
    return exp_series(xi, t, step, depth.depth);
}

IdealVector coad_exp_action(const StructureTable& table, int delta, const Rational& t, const IdealVector& xi) {
    SeriesDepth depth;
    return coad_exp_action(table, delta, t, xi, depth);
}

Rational invariant_pairing(const RootSystem& rs, const IdealVector& xi, const IdealVector& v) {
    Rational total = 0;
    (xi.support() & v.support()).for_each([&](int g) {
        total += xi.at(g) * v.at(g) * (rs.is_long(g) ? 1 : rs.lacing());
    });
    return total;
}

}  // namespace abelorb
