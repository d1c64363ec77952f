// The operations behind the CLI: table reproduction with per-cell budgets and
// the statement-verification reports.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "metdim/solver.hpp"

namespace metdim {

struct Cell {
    enum class Status { exact, timeout, skipped };
    Status status = Status::skipped;
    std::optional<std::int64_t> value; // set only when exact
    std::optional<std::int64_t> upper; // best bound carried out of a timeout
    std::optional<std::int64_t> lower;
};
const char* to_string(Cell::Status s);

struct TableRow {
    int n = 0, k = 0;
    std::int64_t vertices = 0, edges = 0;
    Cell beta, beta_e, beta_m;
    int ed = 0, mi1 = 0, mi2 = 0;
    Cell mhsp, mhs_less;
    bool remapped = false;
    std::string error; // non-empty: the row was rejected, all cells unset
};

struct Table1Options {
    std::vector<std::pair<int, int>> rows;
    double bound_budget_s = 60.0;
    double exact_budget_s = 600.0;
    // Exact edge/mixed cells run by default only on small rows (|V| <= 35);
    // extended turns them on everywhere.
    bool extended = false;
    int threads = 1;
};

std::vector<std::pair<int, int>> default_table1_rows();
TableRow table1_row(int n, int k, const Table1Options& opt);
std::vector<TableRow> cmd_table1(const Table1Options& opt);

std::string table1_csv(const std::vector<TableRow>& rows);
nlohmann::json table1_json(const std::vector<TableRow>& rows);
bool table1_any_timeout(const std::vector<TableRow>& rows);

struct VerifyReport {
    bool pass = false;
    std::string summary;
    nlohmann::json details;
};

// Constructive side plus the hitting-set optimality side (the punctured-set
// family's optimum sandwiches the dimension); with_exact also runs the exact
// solver on both kinds.
VerifyReport verify_theorem1(int n, bool with_exact = false, double budget_s = 600.0);

// Randomized draws of (x,y,z,T*): witness edges exist, share coordinates
// w.r.t. S'_{x,y,z}, and |S'| matches its closed form.
VerifyReport verify_lemma1(int n, int k, int samples, std::uint64_t seed);

// Total enumeration and the exact solver agree on J(4,2), and the listed
// mixed basis verifies.
VerifyReport verify_observation1();

// Computes both dimensions per row and reports equality; empirical evidence
// only, never a proof.
VerifyReport verify_hypothesis1(const std::vector<std::pair<int, int>>& rows, double budget_s);

// The J(11,5) sandwich: exact MHSP and a VNS mixed resolving set meeting it.
VerifyReport verify_observation2(double mhsp_budget_s, double vns_budget_s, int vns_seeds,
                                 int threads);

} // namespace metdim
