#pragma once

#include <fstream>

#include <json.hpp>

#include "rankzeta/classify.hpp"
#include "rankzeta/hamming.hpp"
#include "rankzeta/invariants.hpp"
#include "rankzeta/zeta.hpp"

namespace rankzeta {

using json = nlohmann::json;

inline json field_to_json(const FieldSpec& f) {
    return json{{"q", f.q()},
                {"p", f.characteristic()},
                {"e", f.extension_degree()},
                {"modulus", f.modulus()}};
}

// ---- codes: {"q": int, "n": int, "m": int, "generators": [[[int]]]} ----

inline json code_to_json(const RankMetricCode& c) {
    json gens = json::array();
    for (const auto& g : c.basis_matrices()) {
        json rows = json::array();
        for (long i = 0; i < g.rows(); ++i) {
            json row = json::array();
            for (long j = 0; j < g.cols(); ++j) row.push_back(unsigned(g.at(i, j)));
            rows.push_back(std::move(row));
        }
        gens.push_back(std::move(rows));
    }
    return json{{"q", c.field()->q()}, {"n", c.n()}, {"m", c.m()}, {"generators", std::move(gens)}};
}

inline RankMetricCode code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("m") ||
        !j.contains("generators"))
        throw std::invalid_argument("code object needs fields q, n, m, generators");
    unsigned q = j.at("q").get<unsigned>();
    long n = j.at("n").get<long>();
    long m = j.at("m").get<long>();
    FieldPtr field = FieldSpec::make(q);
    std::vector<FqMatrix> gens;
    const json& garr = j.at("generators");
    if (!garr.is_array()) throw std::invalid_argument("generators must be an array of matrices");
    for (size_t gi = 0; gi < garr.size(); ++gi) {
        const json& gm = garr[gi];
        if (!gm.is_array() || static_cast<long>(gm.size()) != n)
            throw std::invalid_argument("generator " + std::to_string(gi) + ": expected " +
                                        std::to_string(n) + " rows");
        FqMatrix mat(field, n, m);
        for (long r = 0; r < n; ++r) {
            const json& row = gm[static_cast<size_t>(r)];
            if (!row.is_array() || static_cast<long>(row.size()) != m)
                throw std::invalid_argument("generator " + std::to_string(gi) + " row " +
                                            std::to_string(r) + ": expected " + std::to_string(m) +
                                            " entries");
            for (long cidx = 0; cidx < m; ++cidx) {
                long v = row[static_cast<size_t>(cidx)].get<long>();
                if (v < 0 || v >= static_cast<long>(q))
                    throw std::invalid_argument("generator " + std::to_string(gi) + " entry (" +
                                                std::to_string(r) + "," + std::to_string(cidx) +
                                                ") outside [0, q-1]");
                mat.set(r, cidx, static_cast<Fe>(v));
            }
        }
        gens.push_back(std::move(mat));
    }
    return RankMetricCode(field, n, m, std::move(gens));
}

inline RankMetricCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return code_from_json(j);
}

// ---- block codes: {"q": int, "n": int, "generators": [[int]]} ----

inline json block_code_to_json(const hamming::BlockCode& c) {
    json gens = json::array();
    for (long i = 0; i < c.k(); ++i) {
        json row = json::array();
        for (long jx = 0; jx < c.n(); ++jx) row.push_back(unsigned(c.generator().at(i, jx)));
        gens.push_back(std::move(row));
    }
    return json{{"q", c.field()->q()}, {"n", c.n()}, {"generators", std::move(gens)}};
}

inline hamming::BlockCode block_code_from_json(const json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("n") || !j.contains("generators"))
        throw std::invalid_argument("block code object needs fields q, n, generators");
    unsigned q = j.at("q").get<unsigned>();
    long n = j.at("n").get<long>();
    std::vector<std::vector<Fe>> gens;
    for (const json& row : j.at("generators")) {
        std::vector<Fe> r;
        for (const json& v : row) {
            long x = v.get<long>();
            if (x < 0 || x >= static_cast<long>(q))
                throw std::invalid_argument("block code entry outside [0, q-1]");
            r.push_back(static_cast<Fe>(x));
        }
        gens.push_back(std::move(r));
    }
    return hamming::BlockCode(FieldSpec::make(q), n, std::move(gens));
}

// ---- rationals as strings; polynomials as ascending-Y coefficient arrays ----

inline json rat_vector_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v) a.push_back(rat_to_string(r));
    return a;
}

inline std::vector<Rat> rat_vector_from_json(const json& a) {
    std::vector<Rat> v;
    for (const json& x : a) v.push_back(rat_from_string(x.get<std::string>()));
    return v;
}

inline json poly_to_json(const HomogeneousPoly& p) {
    return json{{"degree", p.degree()}, {"coeffs", rat_vector_to_json(p.coeffs())}};
}

inline HomogeneousPoly poly_from_json(const json& j) {
    return HomogeneousPoly(j.at("degree").get<long>(), rat_vector_from_json(j.at("coeffs")));
}

inline json series_to_json(const TruncatedSeries& s) {
    return json{{"order", s.order()}, {"coeffs", rat_vector_to_json(s.coeffs())}};
}

inline json profile_to_json(const InvariantProfile& p) {
    return json{{"i", p.i},
                {"d_i", p.d_i},
                {"B", rat_vector_to_json(p.B)},
                {"A", rat_vector_to_json(p.A)},
                {"b", rat_vector_to_json(p.b)},
                {"W", poly_to_json(p.W)}};
}

inline json zeta_to_json(const ZetaProfile& z) {
    json out{{"i", z.i},
             {"order", z.order},
             {"Z", rat_vector_to_json(z.Z.coeffs())},
             {"P", rat_vector_to_json(z.P.coeffs())},
             {"degree_bound", z.degree_bound}};
    if (z.tau) out["beta"] = json{{"tau", *z.tau}, {"values", rat_vector_to_json(z.beta)}};
    return out;
}

inline json report_to_json(const ClassificationReport& r) {
    json out{{"q", r.params.q},
             {"n", r.params.n},
             {"m", r.params.m},
             {"k", r.params.k},
             {"weights", std::vector<long>(r.weights.begin() + 1, r.weights.end())},
             {"dual_weights", std::vector<long>(r.dual_weights.begin() + 1, r.dual_weights.end())},
             {"d", r.d},
             {"d_dual", r.d_dual},
             {"alpha", r.alpha},
             {"rho", r.rho},
             {"is_iBMD", std::vector<bool>(r.is_ibmd.begin(), r.is_ibmd.end())},
             {"is_iMRD", std::vector<bool>(r.is_imrd.begin(), r.is_imrd.end())},
             {"is_MRD", r.is_mrd},
             {"is_QMRD", r.is_qmrd},
             {"is_DQMRD", r.is_dqmrd}};
    out["minimal_BMD"] = r.minimal_bmd ? json(*r.minimal_bmd) : json(nullptr);
    return out;
}

}  // namespace rankzeta
