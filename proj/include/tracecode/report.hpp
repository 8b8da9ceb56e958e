#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracecode/curves.hpp"
#include "tracecode/quadform.hpp"
#include "tracecode/field.hpp"

namespace tracecode::report {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::optional<std::uint32_t> modulus; // default modulus when absent
    std::string preset;                   // "" = family default
    std::vector<std::string> a_tuple;     // explicit hex a-tuple, overrides preset
    std::optional<int> rmax;              // table rows to print
    std::uint64_t max_ops = std::uint64_t{1} << 28;
    int jobs = 1;
    bool exhaustive = false; // ghw: demand exhaustive confirmation
    std::optional<std::string> case_override;
    bool deep = false; // verify
};

struct TableRowOut {
    int r = 0;
    std::int64_t genus = 0;
    std::int64_t n_points = 0;
    std::int64_t serre_bound = 0;
    bool attains_serre = false;
    bool attains_hasse_weil = false;
    std::string wirtz; // inert reference interval, may be empty
    bool constructive_match = false;
    std::int64_t built_genus = 0; // what the constructed fibre product gave
    std::int64_t built_n_points = 0;
};

struct TableReport {
    int m = 0;
    std::uint32_t modulus = 0;
    int h = 0;
    std::string case_name;
    std::string preset;
    int dim_s = 0, dim_v = 0, big_m = 0, max_r = 0;
    std::uint64_t d1 = 0;
    std::vector<TableRowOut> rows;
    bool all_pass = false;
};

struct GhwRung {
    int r = 0;
    std::uint64_t d_r = 0;
    bool witness_checked = false;
    std::optional<std::uint64_t> exhaustive; // set when the oracle ran
};

struct GhwReport {
    int m = 0;
    std::uint32_t modulus = 0;
    int h = 0;
    std::uint64_t d1 = 0;
    bool d1_exhaustive_confirmed = false;
    int dim_s = 0, dim_v = 0, big_m = 0, max_r = 0;
    std::vector<std::string> a_tuple;                    // hex
    std::vector<GhwRung> ladder;
    std::vector<std::vector<std::string>> witness_b;     // selected solution tuples, hex
    std::vector<std::vector<std::string>> witness_basis; // max-r witness, hex coefficients
    std::vector<std::uint64_t> witness_weights;
    bool all_pass = false;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    int m = 0;
    std::uint32_t modulus = 0;
    bool deep = false;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

TableReport run_table(int m, int h, const Options& opt = {});
GhwReport run_ghw(int m, int h, const Options& opt = {});
VerifyReport run_verify(int m, const Options& opt = {});

ordered_json to_json(const TableReport& r);
ordered_json to_json(const GhwReport& r);
ordered_json to_json(const VerifyReport& r);

std::string to_text(const TableReport& r);
std::string to_text(const GhwReport& r);
std::string to_text(const VerifyReport& r);

std::string to_csv(const TableReport& r);

/// Reference interval from the published tables for (q, genus), or nullptr.
/// Quoted verbatim as annotations; never recomputed.
const char* wirtz_interval(std::uint64_t q, std::int64_t genus);

/// Form serialization: {"kind": "from_R"|"from_pairs", coefficients as hex}
/// plus an optional classification block.
ordered_json form_to_json(const QuadraticForm& q, bool with_classification = false);

} // namespace tracecode::report
