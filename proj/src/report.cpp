#include "octachain/report.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "octachain/closed_forms.hpp"
#include "octachain/decomposition.hpp"
#include "octachain/invariants.hpp"

namespace octachain {

namespace {

using nlohmann::ordered_json;

void render_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

std::string cubic_to_string(const std::vector<Rational>& desc) {
    static const char* power[] = {"n^3", "n^2", "n", ""};
    std::string s;
    for (size_t i = 0; i < desc.size(); ++i) {
        if (desc[i] == 0) continue;
        Rational c = desc[i];
        if (s.empty()) {
            if (c < 0) s += "-", c = -c;
        } else {
            s += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        }
        if (c != 1 || i == 3) s += rational_to_string(c);
        s += power[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
    if (text == "table") return OutputFormat::Table;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw UsageError("unknown format '" + text + "' (expected table, csv, or json)");
}

int cmd_table(const std::string& which, int n_max, OutputFormat format, std::ostream& out) {
    if (n_max < 1) throw UsageError("table: --n-max must be >= 1");
    if (which != "kf" && which != "kfstar" && which != "tau") {
        throw UsageError("table: expected kf, kfstar, or tau, got '" + which + "'");
    }

    struct Row {
        long n;
        std::string exact;
        std::string display;
    };
    std::vector<Row> rows;
    for (long n = 1; n <= n_max; ++n) {
        const ChainGraph g(static_cast<int>(n));
        if (which == "kf") {
            const Rational v = kirchhoff_block_route(g);
            rows.push_back({n, rational_to_string(v), to_decimal_string(v)});
        } else if (which == "kfstar") {
            const Rational v = mult_kirchhoff_block_route(g);
            rows.push_back({n, rational_to_string(v), to_decimal_string(v)});
        } else {
            const BigInt v = spanning_trees_product_route(g);
            rows.push_back({n, v.get_str(), v.get_str()});
        }
    }

    const bool integer_table = (which == "tau");
    switch (format) {
        case OutputFormat::Table: {
            std::vector<std::vector<std::string>> cells;
            cells.push_back(integer_table ? std::vector<std::string>{"n", which}
                                          : std::vector<std::string>{"n", "exact", which});
            for (const auto& r : rows) {
                if (integer_table) {
                    cells.push_back({std::to_string(r.n), r.exact});
                } else {
                    cells.push_back({std::to_string(r.n), r.exact, r.display});
                }
            }
            render_rows(out, cells);
            break;
        }
        case OutputFormat::Csv: {
            out << (integer_table ? "n,value\n" : "n,exact,display\n");
            for (const auto& r : rows) {
                if (integer_table) {
                    out << r.n << "," << r.exact << "\n";
                } else {
                    out << r.n << "," << r.exact << "," << r.display << "\n";
                }
            }
            break;
        }
        case OutputFormat::Json: {
            ordered_json doc = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json item;
                item["n"] = r.n;
                item["exact"] = r.exact;
                if (!integer_table) item["display"] = r.display;
                doc.push_back(item);
            }
            out << doc.dump(2) << "\n";
            break;
        }
    }
    return 0;
}

namespace {

struct VerifyCounter {
    int pass = 0, warn = 0, fail = 0;

    void check(std::ostream& out, long n, const std::string& name, bool ok,
               const std::string& detail = "") {
        (ok ? pass : fail)++;
        out << (ok ? "PASS" : "FAIL") << " n=" << n << " " << name;
        if (!ok && !detail.empty()) out << ": " << detail;
        out << "\n";
    }

    void warning(std::ostream& out, long n, const std::string& name, const std::string& detail) {
        ++warn;
        out << "WARN n=" << n << " " << name << ": " << detail << "\n";
    }
};

bool diagonal_content_matches(const RationalMatrix& m,
                              const std::vector<std::pair<Rational, long>>& expected) {
    std::map<Rational, long> want(expected.begin(), expected.end());
    std::map<Rational, long> got;
    for (int i = 0; i < m.rows(); ++i) ++got[m.at(i, i)];
    for (auto it = want.begin(); it != want.end();) {
        it = (it->second == 0) ? want.erase(it) : std::next(it);
    }
    return got == want;
}

bool leading_minor_sequences_hold(const MirrorDecomposition& d, long n) {
    const int len = static_cast<int>(3 * n);
    std::vector<Rational> w(len + 1), m(len + 1);
    w[0] = 1;
    m[0] = 1;
    for (int i = 1; i <= len; ++i) {
        w[i] = determinant(d.sum.leading_principal(i));
        m[i] = determinant(d.norm_sum.leading_principal(i));
    }
    BigInt two_i = 1;
    for (int i = 1; i <= len; ++i) {
        two_i *= 2;
        if (w[i] != two_i) return false;
        if (i >= 2 && w[i] != 4 * w[i - 1] - 4 * w[i - 2]) return false;
    }
    Rational tenth_k = 1;
    const Rational tenth = make_rational(1, 10);
    for (long k = 0; 3 * k <= len; ++k) {
        if (k >= 1 && m[3 * k] != make_rational(5, 3) * tenth_k) return false;
        if (3 * k + 1 <= len && m[3 * k + 1] != make_rational(2, 3) * tenth_k) return false;
        if (3 * k + 2 <= len && m[3 * k + 2] != make_rational(1, 3) * tenth_k) return false;
        tenth_k *= tenth;
    }
    for (long k = 1; k <= n; ++k) {
        if (3 * k <= len && m[3 * k] != m[3 * k - 1] - make_rational(1, 4) * m[3 * k - 2])
            return false;
        if (3 * k + 1 <= len &&
            m[3 * k + 1] != make_rational(4, 5) * m[3 * k] - make_rational(1, 5) * m[3 * k - 1])
            return false;
        if (3 * k + 2 <= len &&
            m[3 * k + 2] != m[3 * k + 1] - make_rational(1, 5) * m[3 * k])
            return false;
    }
    return true;
}

}  // namespace

int cmd_verify(int n_max, std::ostream& out, bool inject_fault, int edge_cap) {
    if (n_max < 1) throw UsageError("verify: --n-max must be >= 1");
    VerifyCounter counter;

    // closed-form comparisons for the whole range in one sweep
    const TheoremReport theorems = verify_theorems(n_max);
    std::map<std::pair<std::string, long>, const FormulaCheck*> by_key;
    for (const auto& e : theorems.entries) by_key[{e.name, e.n}] = &e;
    auto formula_check = [&](long n, const std::string& name) {
        const FormulaCheck* e = by_key.at({name, n});
        counter.check(out, n, "closed_form:" + name, e->match,
                      "formula " + e->formula_value + " != computed " + e->computed_value);
    };

    const std::string w_fit = cubic_to_string(corrected_wiener_cubic());
    const std::string g_fit = cubic_to_string(corrected_gutman_cubic());

    for (long n = 1; n <= n_max; ++n) {
        const ChainGraph g(static_cast<int>(n));
        MirrorDecomposition d = decompose(g);
        if (inject_fault) d.sum.at(0, 0) += 1;

        counter.check(out, n, "factorization", factorization_holds(g, d));
        counter.check(out, n, "diff_block_spectrum",
                      diagonal_content_matches(d.diff, {{Rational(4), 2 * n + 2},
                                                        {Rational(6), n - 1}}) &&
                          diagonal_content_matches(d.norm_diff,
                                                   {{make_rational(4, 3), 2},
                                                    {Rational(1), 2 * n},
                                                    {make_rational(6, 5), n - 1}}));

        for (const char* name :
             {"kf", "kfstar", "tau", "sum_block_minor_full", "sum_block_minor_drop1",
              "norm_sum_minor_full", "norm_sum_minor_drop1", "sum_block_recip_eigensum",
              "norm_sum_recip_eigensum", "diff_block_recip_sum", "norm_diff_recip_sum"}) {
            formula_check(n, name);
        }

        if (n <= 6) {
            counter.check(out, n, "leading_minor_sequences", leading_minor_sequences_hold(d, n));
        }

        if (n <= 8) {
            ResistanceSolver solver(g);
            Rational foster = 0;
            for (const auto& [u, v] : g.edges()) foster += solver.resistance(u, v);
            counter.check(out, n, "foster_identity", foster == Rational(6 * n + 1),
                          "edge resistance sum " + rational_to_string(foster));

            Rational kf_res = 0, kfstar_res = 0;
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = u + 1; v < g.vertex_count(); ++v) {
                    const Rational r = solver.resistance(u, v);
                    kf_res += r;
                    kfstar_res += Rational(g.degree(u)) * g.degree(v) * r;
                }
            counter.check(out, n, "kf_route_agreement", kf_res == kirchhoff_spectral_route(g));
            counter.check(out, n, "kfstar_route_agreement",
                          kfstar_res == mult_kirchhoff_spectral_route(g));
        }

        if (n <= 12) {
            counter.check(out, n, "tau_route_agreement",
                          spanning_trees_matrix_tree(g) == spanning_trees_product_route(g));
        }
        if (g.edge_count() <= edge_cap) {
            counter.check(out, n, "tau_deletion_contraction",
                          spanning_trees_deletion_contraction(g, edge_cap) ==
                              spanning_trees_product_route(g));
        }

        // known errata: published cubics vs BFS
        for (const char* name : {"wiener_claimed", "gutman_claimed"}) {
            const FormulaCheck* e = by_key.at({name, n});
            if (e->match) {
                counter.check(out, n, std::string("closed_form:") + name, true);
            } else {
                const bool is_wiener = std::string(name) == "wiener_claimed";
                counter.warning(out, n, std::string("closed_form:") + name,
                                "formula " + e->formula_value + " != computed " +
                                    e->computed_value + " (known discrepancy; corrected fit: " +
                                    (is_wiener ? w_fit : g_fit) + ")");
            }
        }
    }

    out << "verify: " << (counter.pass + counter.warn + counter.fail) << " checks, "
        << counter.pass << " pass, " << counter.warn << " warn, " << counter.fail << " fail\n";
    return counter.fail == 0 ? 0 : 1;
}

int cmd_resistance(int n, const std::string& u_text, const std::string& v_text,
                   std::ostream& out) {
    if (n < 1) throw UsageError("resistance: --n must be >= 1");
    const ChainGraph g(n);
    VertexId u, v;
    try {
        u = parse_vertex(u_text, n);
        v = parse_vertex(v_text, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (u == v) throw UsageError("resistance: vertices must differ");
    const Rational r = effective_resistance(g, u, v);
    out << "r(" << to_string(u) << ", " << to_string(v) << ") = " << rational_to_string(r)
        << " = " << to_decimal_string(r, 6) << "\n";
    return 0;
}

int cmd_export(int n_max, OutputFormat format, std::ostream& out) {
    if (n_max < 1) throw UsageError("export: --n-max must be >= 1");

    struct Row {
        long n;
        Rational kf, kfstar;
        BigInt tau;
        long long wiener, gutman;
    };
    std::vector<Row> rows;
    for (long n = 1; n <= n_max; ++n) {
        const ChainGraph g(static_cast<int>(n));
        rows.push_back({n, kirchhoff_block_route(g), mult_kirchhoff_block_route(g),
                        spanning_trees_product_route(g), wiener(g), gutman(g)});
    }

    if (format == OutputFormat::Json) {
        ordered_json doc = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json item;
            item["n"] = r.n;
            item["kf_num"] = r.kf.get_num().get_str();
            item["kf_den"] = r.kf.get_den().get_str();
            item["kf_2dp"] = to_decimal_string(r.kf);
            item["kfstar_num"] = r.kfstar.get_num().get_str();
            item["kfstar_den"] = r.kfstar.get_den().get_str();
            item["kfstar_2dp"] = to_decimal_string(r.kfstar);
            item["tau"] = r.tau.get_str();
            item["wiener"] = r.wiener;
            item["gutman"] = r.gutman;
            doc.push_back(item);
        }
        out << doc.dump(2) << "\n";
    } else {
        // CSV is the default export format; "table" falls through to it too.
        out << "n,kf_num,kf_den,kf_2dp,kfstar_num,kfstar_den,kfstar_2dp,tau,wiener,gutman\n";
        for (const auto& r : rows) {
            out << r.n << "," << r.kf.get_num().get_str() << "," << r.kf.get_den().get_str()
                << "," << to_decimal_string(r.kf) << "," << r.kfstar.get_num().get_str() << ","
                << r.kfstar.get_den().get_str() << "," << to_decimal_string(r.kfstar) << ","
                << r.tau.get_str() << "," << r.wiener << "," << r.gutman << "\n";
        }
    }
    return 0;
}

int cmd_ratio(int n_max, std::ostream& out) {
    if (n_max < 1) throw UsageError("ratio: --n-max must be >= 1");
    const auto series = ratio_series(n_max);
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "kf/wiener", "", "kfstar/gutman", ""});
    for (const auto& p : series) {
        cells.push_back({std::to_string(p.n), rational_to_string(p.kf_over_wiener),
                         to_decimal_string(p.kf_over_wiener, 6),
                         rational_to_string(p.kfstar_over_gutman),
                         to_decimal_string(p.kfstar_over_gutman, 6)});
    }
    render_rows(out, cells);
    return 0;
}

}  // namespace octachain
