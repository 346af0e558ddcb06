#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "octachain/report.hpp"

// Exit codes: 0 success, 1 check failure, 2 usage error.

int main(int argc, char** argv) {
    CLI::App app{"Exact resistance-distance invariants of linear crossed octagonal chains"};
    app.require_subcommand(1);

    std::string format_text = "table";
    std::string out_path;
    int edge_cap = 14;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");
        if (with_format) {
            cmd->add_option("--format", format_text, "Output format: table, csv, or json")
                ->capture_default_str();
        }
    };

    int table_n_max = 0;  // 0 = per-table default below
    std::string table_which;
    auto* table = app.add_subcommand("table", "Print an invariant table for n = 1..n_max");
    table->add_option("which", table_which, "Invariant: kf, kfstar, or tau")->required();
    table->add_option("--n-max", table_n_max, "Largest chain length (default 20; 8 for tau)");
    add_common(table, true);

    int verify_n_max = 6;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--n-max", verify_n_max, "Largest chain length")->capture_default_str();
    verify->add_option("--edge-cap", edge_cap,
                       "Edge limit for the deletion-contraction spanning-tree oracle")
        ->capture_default_str();
    verify->add_flag("--inject-fault", inject_fault,
                     "Corrupt one decomposition entry first (exercises the failure path)")
        ->group("");  // hidden
    add_common(verify, false);

    int res_n = 1;
    std::string res_u, res_v;
    auto* resistance =
        app.add_subcommand("resistance", "Effective resistance between two vertices");
    resistance->add_option("--n", res_n, "Chain length")->required();
    resistance->add_option("--u", res_u, "First vertex, e.g. 2 or 3'")->required();
    resistance->add_option("--v", res_v, "Second vertex")->required();
    add_common(resistance, false);

    int export_n_max = 8;
    std::string export_format = "csv";
    auto* exp = app.add_subcommand("export", "Machine-readable dump of every invariant");
    exp->add_option("--n-max", export_n_max, "Largest chain length")->capture_default_str();
    exp->add_option("--format", export_format, "Output format: csv or json")
        ->capture_default_str();
    exp->add_option("--out", out_path, "Write output to PATH instead of stdout");

    int ratio_n_max = 50;
    auto* ratio = app.add_subcommand("ratio", "Kirchhoff/Wiener and degree-weighted ratios");
    ratio->add_option("--n-max", ratio_n_max, "Largest chain length")->capture_default_str();
    add_common(ratio, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw octachain::UsageError("cannot open '" + out_path + "' for writing");
            out = &file;
        }

        if (table->parsed()) {
            if (table_n_max == 0) table_n_max = (table_which == "tau") ? 8 : 20;
            return octachain::cmd_table(table_which, table_n_max,
                                        octachain::parse_format(format_text), *out);
        }
        if (verify->parsed()) {
            return octachain::cmd_verify(verify_n_max, *out, inject_fault, edge_cap);
        }
        if (resistance->parsed()) {
            return octachain::cmd_resistance(res_n, res_u, res_v, *out);
        }
        if (exp->parsed()) {
            return octachain::cmd_export(export_n_max, octachain::parse_format(export_format),
                                         *out);
        }
        if (ratio->parsed()) {
            return octachain::cmd_ratio(ratio_n_max, *out);
        }
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
