// rankzeta: invariants of matrix rank-metric codes with exact arithmetic.
//
// Subcommands: invariants, zeta, classify, oracle-check. Exit codes:
// 0 success, 1 usage error, 2 computation error, 3 oracle mismatch.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "rankzeta/rankzeta.hpp"

namespace rz = rankzeta;
using rz::Rat;

namespace {

struct GlobalOpts {
    std::string format = "json";
    unsigned long long budget = 0;  // 0 = defaults

    rz::Budget make_budget() const {
        return budget ? rz::Budget::uniform(budget) : rz::Budget{};
    }
};

void emit(const rz::json& j, const GlobalOpts& g, const std::string& table_text) {
    if (g.format == "json")
        std::cout << j.dump(1) << "\n";
    else
        std::cout << table_text;
}

std::string profile_table(const rz::RankMetricCode& code, const rz::InvariantProfile& p) {
    std::ostringstream os;
    os << "i = " << p.i << "  (q=" << code.field()->q() << ", n=" << code.n() << ", m=" << code.m()
       << ", k=" << code.k() << ")\n";
    os << "  d_" << p.i << " = " << p.d_i << ",  d(dual) = " << p.d_dual << "\n";
    auto line = [&os](const char* name, const std::vector<Rat>& v) {
        os << "  " << name << " =";
        for (const Rat& x : v) os << " " << rz::rat_to_string(x);
        os << "\n";
    };
    line("B", p.B);
    line("A", p.A);
    line("b", p.b);
    os << "  W = " << p.W.to_string() << "\n";
    return os.str();
}

std::string zeta_table(const rz::ZetaProfile& z) {
    std::ostringstream os;
    os << "i = " << z.i << ", order = " << z.order << ", degree bound = " << z.degree_bound << "\n";
    auto line = [&os](const char* name, const std::vector<Rat>& v) {
        os << "  " << name << " =";
        for (const Rat& x : v) os << " " << rz::rat_to_string(x);
        os << "\n";
    };
    line("Z", z.Z.coeffs());
    line("P", z.P.coeffs());
    if (z.tau) {
        os << "  tau = " << *z.tau << "\n";
        line("beta", z.beta);
    }
    return os.str();
}

std::string report_table(const rz::ClassificationReport& r) {
    std::ostringstream os;
    os << "q=" << r.params.q << " n=" << r.params.n << " m=" << r.params.m << " k=" << r.params.k
       << "  (k = " << r.alpha << "*m + " << r.rho << ")\n";
    os << "  weights      =";
    for (size_t i = 1; i < r.weights.size(); ++i) os << " " << r.weights[i];
    os << "\n  dual weights =";
    for (size_t i = 1; i < r.dual_weights.size(); ++i) os << " " << r.dual_weights[i];
    os << "\n  i    :";
    for (size_t i = 0; i < r.is_ibmd.size(); ++i) os << " " << i;
    os << "\n  iBMD :";
    for (bool b : r.is_ibmd) os << " " << (b ? "y" : ".");
    os << "\n  iMRD :";
    for (bool b : r.is_imrd) os << " " << (b ? "y" : ".");
    os << "\n  minimal BMD index: ";
    if (r.minimal_bmd)
        os << *r.minimal_bmd;
    else
        os << "none";
    os << "\n  MRD: " << (r.is_mrd ? "yes" : "no") << "  QMRD: " << (r.is_qmrd ? "yes" : "no")
       << "  DQMRD: " << (r.is_dqmrd ? "yes" : "no") << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// oracle-check: every fast-formula-vs-independent-recomputation pair in
// scope, with budget overruns reported as SKIP.
// ---------------------------------------------------------------------------

struct CheckOutcome {
    std::string name;
    std::string status;  // PASS / FAIL / SKIP
    std::string detail;
};

class OracleHarness {
public:
    explicit OracleHarness(rz::Budget budget) : budget_(budget) {}

    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        try {
            fn();
            results_.push_back({name, "PASS", ""});
        } catch (const rz::budget_exceeded& e) {
            results_.push_back({name, "SKIP", e.what()});
        } catch (const std::exception& e) {
            results_.push_back({name, "FAIL", e.what()});
        }
    }

    void require(bool ok, const std::string& what) {
        if (!ok) throw std::runtime_error(what);
    }

    const std::vector<CheckOutcome>& results() const { return results_; }
    const rz::Budget& budget() const { return budget_; }

    bool any_failed() const {
        for (const auto& r : results_)
            if (r.status == "FAIL") return true;
        return false;
    }

private:
    rz::Budget budget_;
    std::vector<CheckOutcome> results_;
};

void oracle_checks_for_code(OracleHarness& h, const rz::RankMetricCode& code) {
    const rz::Budget& bud = h.budget();
    rz::Int q(code.field()->q());
    long n = code.n(), m = code.m(), k = code.k();

    h.run("dual-involution", [&] {
        h.require(code.dual().dual() == code, "double dual differs from the code");
        h.require(code.dual().k() == n * m - k, "dual dimension is not nm-k");
    });

    auto weights = rz::generalized_weights(code, bud.subspace_cap);
    rz::RankMetricCode dual = code.dual();
    auto dual_weights = rz::generalized_weights(dual, bud.subspace_cap);
    long d_dual = dual.k() == 0 ? n + 1 : dual_weights[1];

    h.run("weight-tuple-invariants", [&] {
        h.require(rz::weight_tuple_valid(weights, n, m), "weight tuple violates its bounds");
    });

    h.run("min-distance-vs-first-weight", [&] {
        if (k == 0) {
            h.require(rz::min_distance(code, bud.codeword_cap) == n + 1, "zero code convention");
            return;
        }
        h.require(rz::min_distance(code, bud.codeword_cap) == weights[1],
                  "codeword sweep disagrees with the anticode definition of d");
    });

    h.run("wei-duality", [&] {
        h.require(rz::wei_dual_weights(weights, n, m) == dual_weights,
                  "dual weights differ from the duality reconstruction");
    });

    h.run("supports-vs-codeword-sweep", [&] {
        rz::Int total = rz::pow_int(q, static_cast<unsigned long>(k));
        if (total > rz::int_from_ull(bud.codeword_cap))
            throw rz::budget_exceeded("codeword sweep", total.get_str());
        auto fast = rz::code_supports(code);
        std::vector<rz::FqMatrix> col_rows, row_rows;
        rz::for_each_codeword(code, [&](const rz::FqMatrix& w) {
            col_rows.push_back(w.transposed());
            row_rows.push_back(w);
        }, bud.codeword_cap);
        auto col = rz::Subspace::span_of(rz::stack_rows(code.field(), n, col_rows));
        auto row = rz::Subspace::span_of(rz::stack_rows(code.field(), m, row_rows));
        h.require(fast.first == col && fast.second == row,
                  "generator supports differ from the codeword sweep");
    });

    h.run("supported-subcode-vs-filter", [&] {
        rz::Int total = rz::pow_int(q, static_cast<unsigned long>(k));
        if (total > rz::int_from_ull(bud.codeword_cap))
            throw rz::budget_exceeded("codeword sweep", total.get_str());
        for (long u = 0; u <= n; ++u) {
            rz::for_each_subspace(code.field(), n, u, [&](const rz::Subspace& s) {
                long fast = rz::dim_supported_col(code, s);
                rz::Subspace perp = s.complement();
                long count = 0;
                rz::for_each_codeword(code, [&](const rz::FqMatrix& w) {
                    for (long hh = 0; hh < perp.dim(); ++hh)
                        for (long j = 0; j < m; ++j) {
                            rz::Fe acc = 0;
                            for (long i = 0; i < n; ++i)
                                acc = code.field()->add(
                                    acc, code.field()->mul(perp.basis().at(hh, i), w.at(i, j)));
                            if (acc) return;
                        }
                    ++count;
                }, bud.codeword_cap);
                long dim = 0;
                while (count > 1) { count /= static_cast<long>(code.field()->q()); ++dim; }
                h.require(fast == dim, "supported subcode solve differs from codeword filter");
            }, bud.subspace_cap);
        }
    });

    h.run("intersection-cardinality-duality", [&] {
        for (long u = 0; u <= n; ++u)
            rz::for_each_subspace(code.field(), n, u, [&](const rz::Subspace& s) {
                long lhs = rz::dim_supported_col(code, s);
                long rhs = rz::dim_supported_col(dual, s.complement()) + k - m * (n - u);
                h.require(lhs == rhs, "|C cap A| duality fails (column type)");
                if (code.is_square()) {
                    long lr = rz::dim_supported_row(code, s);
                    long rr = rz::dim_supported_row(dual, s.complement()) + k - m * (n - u);
                    h.require(lr == rr, "|C cap A| duality fails (row type)");
                }
            }, bud.subspace_cap);
    });

    h.run("intersection-dim-regimes", [&] {
        long d = k == 0 ? n + 1 : weights[1];
        for (long u = 0; u <= n; ++u)
            rz::for_each_subspace(code.field(), n, u, [&](const rz::Subspace& s) {
                long dim = rz::dim_supported_col(code, s);
                if (u < d) h.require(dim == 0, "nonzero intersection below d");
                if (u > n - d_dual)
                    h.require(dim == k - m * (n - u), "intersection off the forced value");
            }, bud.subspace_cap);
    });

    std::vector<rz::InvariantProfile> profiles;
    for (long i = 0; i <= k; ++i) profiles.push_back(rz::invariant_profile(code, i));

    h.run("distribution-vs-subcode-oracle", [&] {
        for (long i = 0; i <= k; ++i) {
            h.require(profiles[static_cast<size_t>(i)].A ==
                          rz::rank_distribution_oracle(code, i, bud.subcode_cap),
                      "inversion distribution differs from subcode enumeration at i=" +
                          std::to_string(i));
        }
    });

    h.run("moment-inversion-roundtrip", [&] {
        for (long i = 0; i <= k; ++i) {
            const auto& p = profiles[static_cast<size_t>(i)];
            h.require(rz::moments_from_distribution(n, q, p.A) == p.B, "B -> A -> B drifts");
        }
    });

    h.run("moment-regimes", [&] {
        for (long i = 0; i <= k; ++i) {
            const auto& p = profiles[static_cast<size_t>(i)];
            for (long u = 0; u < p.d_i; ++u)
                h.require(p.B[static_cast<size_t>(u)] == Rat(0), "nonzero moment below d_i");
            for (long u = n - d_dual + 1; u <= n; ++u)
                h.require(p.B[static_cast<size_t>(u)] ==
                              rz::qbin(n, u, q) * rz::qbin(k - m * (n - u), i, q),
                          "moment misses its closed form above n-d(dual)");
            Rat total(0);
            for (const Rat& x : p.A) total += x;
            h.require(total == rz::qbin(k, i, q), "distribution does not total qbin(k, i)");
            h.require(p.d_i == 0 || p.A[static_cast<size_t>(p.d_i)] != Rat(0),
                      "distribution vanishes at d_i");
        }
    });

    h.run("moment-integrality-note", [&] {
        // soft observation for square ambients: never a failure
        for (const auto& p : profiles)
            for (const Rat& x : p.B)
                if (!rz::is_integer(x)) {
                    std::cerr << "note: non-integer moment encountered (n = m case)\n";
                    return;
                }
    });

    h.run("bernstein-reconstruction", [&] {
        for (const auto& p : profiles) {
            rz::HomogeneousPoly rebuilt(n);
            for (long u = p.d_i; u <= n; ++u)
                rebuilt += p.b[static_cast<size_t>(u - p.d_i)] * rz::bernstein(n, u, q);
            h.require(rebuilt == p.W, "Bernstein expansion misses the enumerator");
        }
    });

    long order = rz::default_series_order(n);
    h.run("zeta-polynomial-bound-and-product", [&] {
        for (const auto& p : profiles) {
            rz::TruncatedSeries Z = rz::zeta_series(p, order);
            rz::TruncatedSeries P = rz::zeta_polynomial(p, order);
            h.require(P.is_polynomial_of_degree_at_most(rz::zeta_degree_bound(p)),
                      "zeta polynomial exceeds its degree bound");
            h.require(Z * rz::zeta_denominator(p.i, code.field()->q(), m, order) == P,
                      "zeta polynomial is not Z times the product factor");
        }
    });

    h.run("zeta-phi-enumerator", [&] {
        for (const auto& p : profiles)
            h.require(rz::enumerator_from_zeta(p) == p.W,
                      "phi extraction differs from the direct enumerator");
    });

    h.run("zeta-cross-multiplication", [&] {
        for (const auto& p : profiles) {
            rz::TruncatedSeries Z = rz::zeta_series(p, order);
            rz::TruncatedSeries P = rz::zeta_polynomial(p, order);
            for (long tau = 0; tau < m; ++tau) {
                rz::TruncatedSeries Zt(order), Pt(order);
                for (long u = 0; u <= order; ++u) {
                    Zt[u] = rz::bmd_reference_b(tau, p.i, u, q, m);
                    Pt[u] = rz::bmd_reference_p(tau, p.i, u, q, m);
                }
                h.require(Zt * P == Z * Pt, "reference cross-multiplication fails");
            }
        }
    });

    h.run("beta-routes-and-reconstruction", [&] {
        for (const auto& p : profiles) {
            for (long tau = 0; tau < m; ++tau) {
                rz::beta_coefficients(p, tau, order);  // throws on route disagreement
                h.require(rz::enumerator_from_beta(p, tau) == p.W,
                          "beta expansion misses the enumerator");
            }
        }
    });

    h.run("reciprocal-bell-vs-division", [&] {
        for (long tau = 0; tau < m; ++tau) {
            rz::TruncatedSeries Zt(order);
            for (long u = 0; u <= order; ++u) Zt[u] = rz::bmd_reference_b(tau, 1, u, q, m);
            h.require(rz::series_reciprocal_bell(Zt) == rz::series_reciprocal(Zt),
                      "Bell reciprocal differs from long division");
        }
    });

    h.run("macwilliams-forward-and-back", [&] {
        rz::MomentTable bd, bc;
        for (long j = 0; j <= k; ++j) bc.push_back(profiles[static_cast<size_t>(j)].B);
        for (long j = 0; j <= dual.k(); ++j) bd.push_back(rz::binomial_moments(dual, j, bud.subspace_cap));
        for (long i = 0; i <= k; ++i)
            h.require(rz::moments_of_dual_to_primal(bd, code.params(), i) ==
                          profiles[static_cast<size_t>(i)].B,
                      "MacWilliams identity fails at i=" + std::to_string(i));
        rz::MomentTable solved = rz::primal_to_dual_moments(bc, code.params(), k);
        for (long j = 0; j <= k && j <= dual.k(); ++j)
            h.require(solved[static_cast<size_t>(j)] == bd[static_cast<size_t>(j)],
                      "triangular solve differs from direct dual moments");
    });

    h.run("dual-zeta-and-distribution", [&] {
        rz::MomentTable b_dual, a_dual;
        long top = std::min<long>(k, dual.k());
        for (long j = 0; j <= top; ++j) {
            rz::InvariantProfile pd = rz::invariant_profile(dual, j);
            b_dual.push_back(pd.b);
            a_dual.push_back(pd.A);
        }
        for (long i = 0; i <= top; ++i) {
            const auto& p = profiles[static_cast<size_t>(i)];
            h.require(rz::dual_zeta(b_dual, dual_weights, code.params(), i, p.d_i, order) ==
                          rz::zeta_series(p, order),
                      "dual-side zeta differs from the direct series");
            h.require(rz::dual_rank_distribution(a_dual, code.params(), i) == p.A,
                      "dual-side distribution differs from the direct one");
        }
    });

    h.run("classification-implications", [&] {
        rz::ClassificationReport r = rz::classify(code, bud.subspace_cap);
        long top = static_cast<long>(r.is_ibmd.size()) - 1;
        for (long i = 1; i <= top; ++i) {
            if (r.is_ibmd[static_cast<size_t>(i)])
                h.require(r.is_imrd[static_cast<size_t>(i)], "BMD without MRD");
            if (i + m <= top && r.is_imrd[static_cast<size_t>(i)])
                h.require(r.is_imrd[static_cast<size_t>(i + m)], "MRD fails to step by m");
            if (i < top && r.is_ibmd[static_cast<size_t>(i)])
                h.require(r.is_ibmd[static_cast<size_t>(i + 1)], "BMD not monotone");
            if (i > 1 && r.is_ibmd[static_cast<size_t>(i)] && !r.is_ibmd[static_cast<size_t>(i - 1)])
                h.require(!r.is_imrd[static_cast<size_t>(i - 1)],
                          "minimally BMD yet MRD one step below");
        }
        if (k >= 1 && r.is_ibmd[static_cast<size_t>(k)])
            h.require(r.weights[static_cast<size_t>(k)] == n, "k-BMD without d_k = n");
        bool all_imrd = k >= 1;
        for (long i = 1; i <= k; ++i) all_imrd = all_imrd && r.is_imrd[static_cast<size_t>(i)];
        h.require(r.is_dqmrd == (k % m != 0 && all_imrd), "DQMRD characterization fails");
    });
}

// verification of a stored profile file against recomputation
void profile_checks(OracleHarness& h, const rz::RankMetricCode& code, const rz::json& stored) {
    long i = stored.at("i").get<long>();
    rz::InvariantProfile p = rz::invariant_profile(code, i);
    h.run("profile-d_i", [&] {
        h.require(stored.at("d_i").get<long>() == p.d_i, "stored d_i differs from recomputation");
    });
    h.run("profile-moments", [&] {
        h.require(rz::rat_vector_from_json(stored.at("B")) == p.B,
                  "stored B differs from recomputation");
    });
    h.run("profile-distribution", [&] {
        h.require(rz::rat_vector_from_json(stored.at("A")) == p.A,
                  "stored A differs from recomputation");
    });
    h.run("profile-normalized", [&] {
        h.require(rz::rat_vector_from_json(stored.at("b")) == p.b,
                  "stored b differs from recomputation");
    });
    h.run("profile-enumerator", [&] {
        h.require(rz::poly_from_json(stored.at("W")) == p.W,
                  "stored W differs from recomputation");
    });
}

int run_oracle_check(const std::string& code_file, const std::string& profile_file,
                     const std::vector<std::string>& random_spec, const GlobalOpts& g) {
    OracleHarness h(g.make_budget());
    rz::json out = rz::json::object();
    try {
        std::optional<rz::RankMetricCode> code;
        if (!random_spec.empty()) {
            long n = 0, m = 0, k = 0;
            unsigned q = 0;
            unsigned long long seed = 0;
            for (const std::string& kv : random_spec) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw CLI::ValidationError("--random expects key=value tokens");
                std::string key = kv.substr(0, eq);
                long long val = std::stoll(kv.substr(eq + 1));
                if (key == "n") n = val;
                else if (key == "m") m = val;
                else if (key == "k") k = val;
                else if (key == "q") q = static_cast<unsigned>(val);
                else if (key == "seed") seed = static_cast<unsigned long long>(val);
                else throw CLI::ValidationError("unknown --random key: " + key);
            }
            if (n <= 0 || m <= 0 || q < 2)
                throw CLI::ValidationError("--random needs n, m, k, q (and optional seed)");
            auto field = rz::FieldSpec::make(q);
            std::mt19937_64 gen(seed);
            std::vector<rz::FqMatrix> gens;
            while (true) {
                gens.clear();
                for (long t = 0; t < k; ++t) {
                    rz::FqMatrix mtx(field, n, m);
                    for (long r = 0; r < n; ++r)
                        for (long c = 0; c < m; ++c) mtx.set(r, c, static_cast<rz::Fe>(gen() % q));
                    gens.push_back(std::move(mtx));
                }
                rz::RankMetricCode cand(field, n, m, gens,
                                        rz::RankMetricCode::DependentGenerators::Reduce);
                if (cand.k() == k) {
                    code = cand;
                    break;
                }
            }
        } else {
            code = rz::load_code(code_file);
        }
        out["code"] = rz::code_to_json(*code);
        oracle_checks_for_code(h, *code);
        if (!profile_file.empty()) {
            std::ifstream in(profile_file);
            if (!in) throw std::invalid_argument("cannot open profile file: " + profile_file);
            rz::json stored;
            in >> stored;
            profile_checks(h, *code, stored);
        }
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const rz::budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    rz::json checks = rz::json::array();
    size_t width = 0;
    for (const auto& r : h.results()) width = std::max(width, r.name.size());
    std::string first_failure;
    for (const auto& r : h.results()) {
        checks.push_back({{"name", r.name}, {"status", r.status}, {"detail", r.detail}});
        if (g.format != "json") {
            std::cout << r.name << std::string(width - r.name.size() + 2, ' ') << r.status;
            if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
            std::cout << "\n";
        }
        if (r.status == "FAIL" && first_failure.empty()) first_failure = r.name + ": " + r.detail;
    }
    out["checks"] = checks;
    out["ok"] = !h.any_failed();
    if (g.format == "json") std::cout << out.dump(1) << "\n";
    if (h.any_failed()) {
        std::cerr << "first violated identity -- " << first_failure << "\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of matrix rank-metric codes"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--budget", g.budget, "cap for every enumeration (0 = defaults)")
        ->envname("RANKZETA_BUDGET");

    std::string code_file;
    long index = -1;
    bool all_i = false;
    auto* inv = app.add_subcommand("invariants", "moments, distributions and enumerators");
    inv->add_option("--code", code_file, "code JSON file")->required();
    auto* iopt = inv->add_option("--i", index, "moment index");
    inv->add_flag("--all-i", all_i, "all indices 0..k");
    inv->callback([&] {
        if (!all_i && index < 0) throw CLI::RequiredError("--i or --all-i");
        (void)iopt;
    });

    std::string zcode_file;
    long zi = 0;
    long zorder = -1;
    long ztau = -1;
    bool zbeta = false;
    auto* zcmd = app.add_subcommand("zeta", "zeta series, zeta polynomial, beta expansion");
    zcmd->add_option("--code", zcode_file, "code JSON file")->required();
    zcmd->add_option("--i", zi, "moment index")->required();
    zcmd->add_option("--order", zorder, "series truncation order (default 2n+2)");
    zcmd->add_option("--tau", ztau, "reference residue in [0, m-1]");
    zcmd->add_flag("--beta", zbeta, "expand over the reference basis (needs --tau)");

    std::string ccode_file;
    bool with_dual = false;
    auto* ccmd = app.add_subcommand("classify", "BMD/MRD classification report");
    ccmd->add_option("--code", ccode_file, "code JSON file")->required();
    ccmd->add_flag("--dual", with_dual, "also classify the dual and cross-check duality");

    std::string ocode_file, oprofile_file;
    std::vector<std::string> orandom;
    auto* ocmd = app.add_subcommand("oracle-check", "fast-path vs brute-force matrix");
    ocmd->add_option("--code", ocode_file, "code JSON file");
    ocmd->add_option("--profile", oprofile_file, "stored profile JSON to verify");
    ocmd->add_option("--random", orandom, "deterministic random code: n= m= k= q= seed=")
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (inv->parsed()) {
            rz::RankMetricCode code = rz::load_code(code_file);
            rz::Budget bud = g.make_budget();
            std::vector<long> indices;
            if (all_i)
                for (long i = 0; i <= code.k(); ++i) indices.push_back(i);
            else
                indices.push_back(index);
            rz::json profiles = rz::json::array();
            std::string text;
            for (long i : indices) {
                rz::InvariantProfile p = rz::invariant_profile(code, i, bud);
                profiles.push_back(rz::profile_to_json(p));
                text += profile_table(code, p);
            }
            rz::json out{{"code", rz::code_to_json(code)},
                         {"field", rz::field_to_json(*code.field())},
                         {"profiles", profiles}};
            emit(out, g, text);
            return 0;
        }
        if (zcmd->parsed()) {
            rz::RankMetricCode code = rz::load_code(zcode_file);
            if (zbeta && ztau < 0) throw CLI::RequiredError("--tau (required with --beta)");
            std::optional<long> tau;
            if (ztau >= 0) {
                if (ztau >= code.m()) throw CLI::ValidationError("--tau must lie in [0, m-1]");
                tau = ztau;
            }
            rz::ZetaProfile z = rz::zeta_profile(code, zi, zorder, zbeta ? tau : std::nullopt,
                                                 g.make_budget());
            rz::json out = rz::zeta_to_json(z);
            emit(out, g, zeta_table(z));
            return 0;
        }
        if (ccmd->parsed()) {
            rz::RankMetricCode code = rz::load_code(ccode_file);
            rz::Budget bud = g.make_budget();
            rz::ClassificationReport r = rz::classify(code, bud.subspace_cap);
            rz::json out{{"report", rz::report_to_json(r)}};
            std::string text = report_table(r);
            if (with_dual) {
                rz::ClassificationReport rd = rz::classify(code.dual(), bud.subspace_cap);
                out["dual_report"] = rz::report_to_json(rd);
                bool wei_ok = rz::wei_dual_weights(r.weights, r.params.n, r.params.m) ==
                              rd.weights;
                out["wei_duality_consistent"] = wei_ok;
                text += "-- dual --\n" + report_table(rd);
                text += std::string("wei duality consistent: ") + (wei_ok ? "yes" : "no") + "\n";
                if (!wei_ok) {
                    emit(out, g, text);
                    return 3;
                }
            }
            emit(out, g, text);
            return 0;
        }
        if (ocmd->parsed()) {
            if (orandom.empty() && ocode_file.empty())
                throw CLI::RequiredError("--code or --random");
            return run_oracle_check(ocode_file, oprofile_file, orandom, g);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const rz::budget_exceeded& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 2;
    } catch (const rz::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
