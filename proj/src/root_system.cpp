#include "abelorb/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

#include "abelorb/errors.hpp"

namespace abelorb {

bool canonical_less(const RootSet& a, const RootSet& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.indices() < b.indices();
}

// ---------------------------------------------------------------------------
// SimpleType

SimpleType SimpleType::make(Family family, int rank) {
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1; break;
        case Family::B:
        case Family::C: ok = rank >= 2; break;
        case Family::D: ok = rank >= 3; break;
        case Family::E: ok = rank >= 6 && rank <= 8; break;
        case Family::F: ok = rank == 4; break;
        case Family::G: ok = rank == 2; break;
    }
    SimpleType t{family, rank};
    require(ok, "invalid rank " + std::to_string(rank) + " for family " + t.name().substr(0, 1));
    return t;
}

SimpleType SimpleType::parse(std::string_view text) {
    require(text.size() >= 2, "bad root system type '" + std::string(text) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    static constexpr std::string_view kFamilies = "ABCDEFG";
    auto pos = kFamilies.find(f);
    require(pos != std::string_view::npos, "unknown family in '" + std::string(text) + "'");
    int rank = 0;
    auto digits = text.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
    require(ec == std::errc{} && ptr == digits.data() + digits.size(),
            "bad rank in '" + std::string(text) + "'");
    return make(static_cast<Family>(pos), rank);
}

std::string SimpleType::name() const {
    static constexpr const char* kNames = "ABCDEFG";
    return std::string(1, kNames[static_cast<int>(family)]) + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(SimpleType type) : type_(SimpleType::make(type.family, type.rank)) {
    build_cartan();
    generate_roots();
    build_tables();
}

void RootSystem::build_cartan() {
    const int n = rank();
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto edge = [&](int i, int j, int aij = -1, int aji = -1) {
        cartan_[i - 1][j - 1] = aij;
        cartan_[j - 1][i - 1] = aji;
    };
    switch (type_.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
            edge(n - 1, n, -2, -1);  // alpha_n short
            break;
        case Family::C:
            for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
            edge(n - 1, n, -1, -2);  // alpha_n long
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) edge(i, i + 1);
            edge(n - 2, n);
            break;
        case Family::E:
            edge(1, 3);
            edge(2, 4);
            for (int i = 3; i < n; ++i) edge(i, i + 1);
            break;
        case Family::F:
            edge(1, 2);
            edge(2, 3, -2, -1);  // alpha_3 short
            edge(3, 4);
            break;
        case Family::G:
            edge(1, 2, -1, -3);  // alpha_1 short
            break;
    }

    // Relative squared lengths from |a_i|^2 / |a_j|^2 = A_ij / A_ji along edges.
    std::vector<int> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || cartan_[i][j] == 0 || num[j] != 0) continue;
            // len_j = len_i * A_ji / A_ij
            num[j] = num[i] * cartan_[j][i];
            den[j] = den[i] * cartan_[i][j];
            int g = std::gcd(num[j], den[j]);
            num[j] /= g;
            den[j] /= g;
            if (den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
            stack.push_back(j);
        }
    }
    // Scale so the shortest simple root has scaled length 2.
    long lcm_den = 1;
    for (int j = 0; j < n; ++j) lcm_den = std::lcm(lcm_den, static_cast<long>(den[j]));
    std::vector<long> len(n);
    for (int j = 0; j < n; ++j) len[j] = num[j] * (lcm_den / den[j]);
    long mn = *std::min_element(len.begin(), len.end());
    long mx = *std::max_element(len.begin(), len.end());
    for (int j = 0; j < n; ++j) len[j] = len[j] * 2 / mn;
    lacing_ = static_cast<int>(mx / mn);
    gram_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = cartan_[i][j] * len[j] / 2;

    const int dim = [&] {
        switch (type_.family) {
            case Family::A: return n + 1;
            case Family::B:
            case Family::C:
            case Family::D: return n;
            default: return 0;
        }
    }();
    eps_basis_.assign(dim, std::vector<int>(n, 0));
    if (dim > 0) {
        for (int i = 0; i < n; ++i) {
            if (i < n - 1 || type_.family == Family::A) {
                eps_basis_[i][i] = 1;
                eps_basis_[i + 1][i] = -1;
            }
        }
        switch (type_.family) {
            case Family::B: eps_basis_[n - 1][n - 1] = 1; break;
            case Family::C: eps_basis_[n - 1][n - 1] = 2; break;
            case Family::D:
                eps_basis_[n - 2][n - 1] = 1;
                eps_basis_[n - 1][n - 1] = 1;
                break;
            default: break;
        }
    }
}

long RootSystem::scaled_inner(const Coeffs& a, const Coeffs& b) const {
    long s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

int RootSystem::pairing(const Coeffs& a, const Coeffs& b) const {
    long bb = scaled_inner(b, b);
    long ab = scaled_inner(a, b);
    ensure(bb > 0 && (2 * ab) % bb == 0, "pairing with a non-root");
    return static_cast<int>(2 * ab / bb);
}

void RootSystem::generate_roots() {
    const int n = rank();
    std::vector<Coeffs> found;
    std::unordered_map<Coeffs, int, CoeffsHash> seen;
    std::vector<Coeffs> level;
    for (int i = 0; i < n; ++i) {
        Coeffs c(n, 0);
        c[i] = 1;
        level.push_back(c);
        seen.emplace(c, 0);
    }
    std::vector<Coeffs> alpha(n, Coeffs(n, 0));
    for (int i = 0; i < n; ++i) alpha[i][i] = 1;

    while (!level.empty()) {
        std::vector<Coeffs> next;
        for (const auto& beta : level) {
            found.push_back(beta);
            for (int i = 0; i < n; ++i) {
                if (beta == alpha[i]) continue;
                int p = 0;
                Coeffs down = beta;
                while (true) {
                    down[i] -= 1;
                    if (down[i] < 0 || !seen.contains(down)) break;
                    ++p;
                }
                int q = p - pairing(beta, alpha[i]);
                if (q > 0) {
                    Coeffs up = beta;
                    up[i] += 1;
                    if (seen.emplace(up, 0).second) next.push_back(up);
                }
            }
        }
        level = std::move(next);
    }
    require(static_cast<int>(found.size()) <= RootSet::kCapacity,
            type_.name() + " has more positive roots than the supported capacity of " +
                std::to_string(RootSet::kCapacity));

    std::sort(found.begin(), found.end(), [](const Coeffs& a, const Coeffs& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    roots_.clear();
    for (auto& c : found) {
        Root r;
        r.height = std::accumulate(c.begin(), c.end(), 0);
        long len = scaled_inner(c, c);
        ensure(len == 2 || len == 2L * lacing_, "unexpected root length");
        r.length = (len == 2L * lacing_) ? LengthClass::Long : LengthClass::Short;
        r.coeffs = std::move(c);
        index_.emplace(r.coeffs, static_cast<int>(roots_.size()));
        roots_.push_back(std::move(r));
    }
}

void RootSystem::build_tables() {
    const int P = num_positive();
    const int n = rank();
    gram_roots_.resize(static_cast<std::size_t>(P) * P);
    sum_.assign(static_cast<std::size_t>(P) * P, -1);
    diff_.assign(static_cast<std::size_t>(P) * P, -1);
    Coeffs tmp(n);
    for (int i = 0; i < P; ++i) {
        for (int j = 0; j < P; ++j) {
            gram_roots_[idx(i, j)] = scaled_inner(coeffs(i), coeffs(j));
            for (int k = 0; k < n; ++k) tmp[k] = coeffs(i)[k] + coeffs(j)[k];
            if (auto it = index_.find(tmp); it != index_.end()) sum_[idx(i, j)] = it->second;
            for (int k = 0; k < n; ++k) tmp[k] = coeffs(i)[k] - coeffs(j)[k];
            if (auto it = index_.find(tmp); it != index_.end()) diff_[idx(i, j)] = it->second;
        }
    }
    above_.assign(P, RootSet{});
    below_.assign(P, RootSet{});
    up_shift_.assign(P, RootSet{});
    down_shift_.assign(P, RootSet{});
    so_.assign(P, RootSet{});
    for (int i = 0; i < P; ++i) {
        for (int j = 0; j < P; ++j) {
            bool geq = true;
            for (int k = 0; k < n && geq; ++k) geq = coeffs(j)[k] >= coeffs(i)[k];
            if (geq) {
                above_[i].insert(j);
                below_[j].insert(i);
            }
            if (int s = sum_index(i, j); s >= 0) up_shift_[i].insert(s);
            if (int d = diff_index(i, j); d >= 0) down_shift_[i].insert(d);
            if (i != j && sum_index(i, j) < 0 && diff_index(i, j) < 0 && diff_index(j, i) < 0) {
                so_[i].insert(j);
                ensure(scaled_inner(i, j) == 0, "strongly orthogonal roots with nonzero product");
            }
        }
    }
}

std::optional<int> RootSystem::find_positive(const Coeffs& v) const {
    if (auto it = index_.find(v); it != index_.end()) return it->second;
    return std::nullopt;
}

bool RootSystem::is_root(const Coeffs& v) const {
    require(static_cast<int>(v.size()) == rank(),
            "vector has " + std::to_string(v.size()) + " coordinates, expected " +
                std::to_string(rank()));
    if (find_positive(v)) return true;
    Coeffs neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), std::negate<>{});
    return find_positive(neg).has_value();
}

bool RootSystem::strongly_orthogonal(int i, int j) const {
    require(i != j, "strong orthogonality is defined for two different roots");
    return so_[i].contains(j);
}

RootSet RootSystem::min_elements(const RootSet& m) const {
    RootSet out;
    m.for_each([&](int i) {
        RootSet strictly_below = below_[i];
        strictly_below.erase(i);
        if (!strictly_below.intersects(m)) out.insert(i);
    });
    return out;
}

RootSet RootSystem::max_elements(const RootSet& m) const {
    RootSet out;
    m.for_each([&](int i) {
        RootSet strictly_above = above_[i];
        strictly_above.erase(i);
        if (!strictly_above.intersects(m)) out.insert(i);
    });
    return out;
}

int RootSystem::eps_dimension() const { return static_cast<int>(eps_basis_.size()); }

std::vector<int> RootSystem::to_eps(const Coeffs& c) const {
    std::vector<int> e(eps_basis_.size(), 0);
    for (std::size_t k = 0; k < eps_basis_.size(); ++k)
        for (int i = 0; i < rank(); ++i) e[k] += eps_basis_[k][i] * c[i];
    return e;
}

std::optional<Coeffs> RootSystem::from_eps(const std::vector<int>& e) const {
    if (!has_eps() || static_cast<int>(e.size()) != eps_dimension()) return std::nullopt;
    const int n = rank();
    Coeffs c(n, 0);
    // Partial sums recover the chain alpha_i = e_i - e_{i+1}; the last one or
    // two simple roots need family-specific handling.
    std::vector<int> partial(e.size() + 1, 0);
    for (std::size_t k = 0; k < e.size(); ++k) partial[k + 1] = partial[k] + e[k];
    switch (type_.family) {
        case Family::A:
        case Family::B:
            for (int i = 0; i < n; ++i) c[i] = partial[i + 1];
            break;
        case Family::C:
            for (int i = 0; i < n - 1; ++i) c[i] = partial[i + 1];
            if (partial[n] % 2 != 0) return std::nullopt;
            c[n - 1] = partial[n] / 2;
            break;
        case Family::D: {
            for (int i = 0; i < n - 2; ++i) c[i] = partial[i + 1];
            int base = partial[n - 2];
            int s = e[n - 2] + e[n - 1] + base;
            int d = e[n - 2] - e[n - 1] + base;
            if (s % 2 != 0 || d % 2 != 0) return std::nullopt;
            c[n - 1] = s / 2;
            c[n - 2] = d / 2;
            break;
        }
        default: return std::nullopt;
    }
    if (to_eps(c) != e) return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------
// Numbering conventions

Numbering parse_numbering(std::string_view text) {
    if (text == "bourbaki") return Numbering::Bourbaki;
    if (text == "vo" || text == "vinberg-onishchik") return Numbering::VinbergOnishchik;
    throw DomainError("unknown numbering convention '" + std::string(text) +
                      "' (expected bourbaki or vo)");
}

std::string to_string(Numbering n) {
    return n == Numbering::Bourbaki ? "bourbaki" : "vo";
}

namespace {

// vo_to_bourbaki[k] = Bourbaki node (1-based) of Vinberg-Onishchik node k+1.
const std::vector<int>* vo_table(const SimpleType& t) {
    static const std::vector<int> e6{1, 3, 4, 5, 6, 2};
    static const std::vector<int> e7{7, 6, 5, 4, 3, 1, 2};
    static const std::vector<int> e8{8, 7, 6, 5, 4, 3, 1, 2};
    if (t.family != Family::E) return nullptr;
    switch (t.rank) {
        case 6: return &e6;
        case 7: return &e7;
        default: return &e8;
    }
}

}  // namespace

int node_to_internal(const SimpleType& t, Numbering n, int node) {
    require(node >= 1 && node <= t.rank, "node index " + std::to_string(node) +
                                             " out of range 1.." + std::to_string(t.rank));
    const auto* table = vo_table(t);
    if (n == Numbering::Bourbaki || table == nullptr) return node - 1;
    return (*table)[node - 1] - 1;
}

int node_to_external(const SimpleType& t, Numbering n, int internal) {
    const auto* table = vo_table(t);
    if (n == Numbering::Bourbaki || table == nullptr) return internal + 1;
    for (int k = 0; k < t.rank; ++k)
        if ((*table)[k] == internal + 1) return k + 1;
    throw InvariantViolation("node outside numbering table");
}

}  // namespace abelorb
