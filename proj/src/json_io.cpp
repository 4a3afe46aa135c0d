#include "abelorb/json_io.hpp"

#include "abelorb/notation.hpp"
#include "abelorb/rational.hpp"

namespace abelorb {

namespace {

Json pairs_json(const std::vector<RowPair>& pairs) {
    Json out = Json::array();
    for (const auto& p : pairs) out.push_back({p.lower, p.upper});
    return out;
}

}  // namespace

Json coeffs_json(const RootSystem& rs, const Coeffs& c, Numbering numbering) {
    Json coeffs = Json::array();
    for (int node = 1; node <= rs.rank(); ++node)
        coeffs.push_back(c[static_cast<std::size_t>(node_to_internal(rs.type(), numbering, node))]);
    Json out;
    out["coeffs"] = std::move(coeffs);
    auto eps = eps_string(rs, c);
    out["eps"] = eps ? Json(*eps) : Json(nullptr);
    return out;
}

Json root_json(const RootSystem& rs, int root, Numbering numbering) {
    return coeffs_json(rs, rs.coeffs(root), numbering);
}

Json signed_root_json(const RootSystem& rs, int code, Numbering numbering) {
    Coeffs c = rs.coeffs(root_of(code));
    if (is_negative(code))
        for (int& x : c) x = -x;
    return coeffs_json(rs, c, numbering);
}

Json root_set_json(const RootSystem& rs, const RootSet& s, Numbering numbering) {
    Json out = Json::array();
    s.for_each([&](int g) { out.push_back(root_json(rs, g, numbering)); });
    return out;
}

Json roots_table_json(const RootSystem& rs, Numbering numbering) {
    Json out;
    out["type"] = rs.type().name();
    out["rank"] = rs.rank();
    out["numbering"] = to_string(numbering);
    Json cartan = Json::array();
    for (int i = 1; i <= rs.rank(); ++i) {
        Json row = Json::array();
        const int ii = node_to_internal(rs.type(), numbering, i);
        for (int j = 1; j <= rs.rank(); ++j)
            row.push_back(rs.cartan()[static_cast<std::size_t>(ii)]
                                     [static_cast<std::size_t>(node_to_internal(rs.type(), numbering, j))]);
        cartan.push_back(std::move(row));
    }
    out["cartan"] = std::move(cartan);
    out["num_positive"] = rs.num_positive();
    out["theta"] = root_json(rs, rs.theta(), numbering);
    Json roots = Json::array();
    for (int i = 0; i < rs.num_positive(); ++i) {
        Json r = root_json(rs, i, numbering);
        r["index"] = i;
        r["height"] = rs.height(i);
        r["length"] = rs.is_long(i) ? "long" : "short";
        roots.push_back(std::move(r));
    }
    out["roots"] = std::move(roots);
    return out;
}

Json ideals_json(const RootSystem& rs, const std::vector<RootSet>& ideals, Numbering numbering) {
    Json out;
    out["type"] = rs.type().name();
    out["count"] = ideals.size();
    Json list = Json::array();
    for (const auto& a : ideals) {
        Json item;
        item["dimension"] = a.size();
        item["generators"] = root_set_json(rs, rs.min_elements(a), numbering);
        item["roots"] = root_set_json(rs, a, numbering);
        list.push_back(std::move(item));
    }
    out["ideals"] = std::move(list);
    return out;
}

Json involution_json(const RootSystem& rs, const RootSet& orth_set, int length, int abs_length,
                     Numbering numbering) {
    Json out;
    out["orth_set"] = root_set_json(rs, orth_set, numbering);
    out["length"] = length;
    out["abs_length"] = abs_length;
    return out;
}

Json orbit_record_json(const RootSystem& rs, const OrbitRecord& record, Numbering numbering) {
    Json out;
    out["s"] = root_set_json(rs, record.s, numbering);
    out["dim_in_a"] = record.dim_in_a;
    out["dim_in_a_star"] = record.dim_in_a_star;
    out["m_s"] = root_set_json(rs, record.m_s, numbering);
    out["m_star_s"] = root_set_json(rs, record.m_star_s, numbering);
    out["j_s"] = root_set_json(rs, record.j_s, numbering);
    out["dual"] = root_set_json(rs, record.dual, numbering);
    out["sigma"] = involution_json(rs, record.s, record.sigma_length, record.sigma_abs_length, numbering);
    return out;
}

Json orbit_table_json(const RootSystem& rs, const RootSet& ideal,
                      const std::vector<OrbitRecord>& records, Numbering numbering) {
    Json out;
    out["type"] = rs.type().name();
    out["ideal"] = root_set_json(rs, ideal, numbering);
    out["count"] = records.size();
    Json list = Json::array();
    for (const auto& r : records) list.push_back(orbit_record_json(rs, r, numbering));
    out["orbits"] = std::move(list);
    return out;
}

Json count_table_json(const RootSystem& rs, const CountTable& table, Numbering numbering) {
    Json out;
    out["type"] = table.type.name();
    out["node"] = node_to_external(rs.type(), numbering, table.node);
    out["counts"] = table.counts;
    out["total"] = table.total;
    return out;
}

Json structure_table_json(const StructureTable& table, Numbering numbering) {
    const RootSystem& rs = table.roots();
    Json out;
    out["type"] = rs.type().name();
    out["dimension"] = table.dimension();
    Json list = Json::array();
    const int p = rs.num_positive();
    std::vector<int> codes;
    for (int i = 0; i < p; ++i) codes.push_back(i);
    for (int i = 0; i < p; ++i) codes.push_back(negative(i));
    for (int a : codes)
        for (int b : codes) {
            const int n = table.n(a, b);
            if (n == 0) continue;
            Json item;
            item["alpha"] = signed_root_json(rs, a, numbering);
            item["beta"] = signed_root_json(rs, b, numbering);
            item["sum"] = signed_root_json(rs, table.sum_code(a, b), numbering);
            item["n"] = n;
            list.push_back(std::move(item));
        }
    out["constants"] = std::move(list);
    return out;
}

Json conjecture_report_json(const RootSystem& rs, const ConjectureReport& report, Numbering numbering) {
    Json out;
    out["kind"] = "evidence";
    out["type"] = report.type.name();
    out["node"] = report.node ? Json(node_to_external(rs.type(), numbering, *report.node)) : Json(nullptr);
    out["ideal"] = root_set_json(rs, report.ideal, numbering);
    out["top"] = root_set_json(rs, report.top, numbering);
    Json rows = Json::array();
    for (const auto& r : report.rows) {
        Json row;
        row["s"] = root_set_json(rs, r.s, numbering);
        row["sigma_length"] = r.sigma_length;
        row["abs_length"] = r.sigma_abs_length;
        row["dim_in_a"] = r.dim_in_a;
        row["dim_formula"] = r.parity_ok ? Json(r.formula_twice / 2) : Json(nullptr);
        row["dim_actual"] = r.dim_actual;
        row["parity_ok"] = r.parity_ok;
        row["match"] = r.match;
        rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    out["formula_mismatches"] = report.formula_mismatches;
    out["parity_failures"] = report.parity_failures;
    out["bruhat_violations"] = pairs_json(report.bruhat_violations);
    out["cover_violations"] = pairs_json(report.cover_violations);
    out["subset_violations"] = pairs_json(report.subset_violations);
    out["not_below_top"] = report.not_below_top;
    out["coincident_involutions"] = pairs_json(report.coincident_involutions);
    out["covers"] = pairs_json(report.covers);
    out["graded"] = report.graded;
    out["rank_is_formula"] = report.rank_is_formula;
    out["consistent"] = report.consistent();
    return out;
}

Json reduction_json(const RootSystem& rs, const IdealVector& input, const Reduction& reduction,
                    Side side, Numbering numbering) {
    Json out;
    out["type"] = rs.type().name();
    out["side"] = side == Side::Primal ? "primal" : "dual";
    out["input"] = format_vector(rs, input, numbering);
    out["s"] = root_set_json(rs, reduction.s, numbering);
    Json steps = Json::array();
    for (const auto& st : reduction.transcript.steps) {
        Json step;
        step["delta"] = root_json(rs, st.delta, numbering);
        step["t"] = to_string(st.t);
        steps.push_back(std::move(step));
    }
    Json torus = Json::array();
    for (const auto& f : reduction.transcript.torus) {
        Json item;
        item["root"] = root_json(rs, f.root, numbering);
        item["factor"] = to_string(f.factor);
        torus.push_back(std::move(item));
    }
    out["transcript"] = {{"steps", std::move(steps)}, {"torus", std::move(torus)}};
    return out;
}

}  // namespace abelorb
