#pragma once

// CLI-facing rendering and aggregate verification. All output is
// deterministic: identical invocations produce byte-identical streams.
// Exit-code contract: 0 = all mandatory checks pass, 1 = check failure,
// 2 = usage error (thrown as UsageError and mapped by the CLI driver).

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace octachain {

enum class OutputFormat { Table, Csv, Json };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

OutputFormat parse_format(const std::string& text);

// which is one of kf | kfstar | tau. Columns: n, exact value, two-decimal
// display (tau renders as a plain integer).
int cmd_table(const std::string& which, int n_max, OutputFormat format, std::ostream& out);

// Aggregate verification: factorization, block spectra, coefficient and
// reciprocal-sum identities, closed forms vs computed routes, Foster
// identity and route agreements. The two published distance cubics that
// disagree with BFS are reported as WARN, never FAIL. Expensive checks are
// capped: resistance routes at n <= 8, matrix-tree cross-check at n <= 12,
// leading-minor sequences at n <= 6. inject_fault corrupts one block entry
// before checking (test hook for the failure path).
int cmd_verify(int n_max, std::ostream& out, bool inject_fault = false, int edge_cap = 14);

int cmd_resistance(int n, const std::string& u_text, const std::string& v_text,
                   std::ostream& out);

// CSV header: n,kf_num,kf_den,kf_2dp,kfstar_num,kfstar_den,kfstar_2dp,tau,
// wiener,gutman. JSON mirrors the fields, with every value that can exceed
// 53 bits serialized as a decimal string.
int cmd_export(int n_max, OutputFormat format, std::ostream& out);

int cmd_ratio(int n_max, std::ostream& out);

}  // namespace octachain
