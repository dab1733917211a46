#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "qsw/stockwell.hpp"

namespace qsw {

struct RunConfig {
    std::size_t n = 64;            // samples per axis, power of two in [16, 256]
    double half_extent = 8.0;      // spatial window [-L, L)
    std::size_t xi_count = 16;     // xi nodes per axis (half-step-offset grid)
    double xi_extent = 4.0;
    double window_alpha = 0.5;     // canonical admissible_dog parameters
    double window_beta = 2.0;
    std::size_t threads = 0;       // 0: QSW_THREADS or 1
    std::string out_dir;

    Axis axis() const { return desk_axis(n, half_extent); }
    void validate() const;
};

RunConfig config_from_kv(const std::map<std::string, std::string>& kv);

struct VerifyRecord {
    std::string name;
    int criterion = 0;  // acceptance criterion this record belongs to; 0 = invariant
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    std::string label;
};

std::vector<VerifyRecord> verify_qft_suite(const RunConfig& cfg);
std::vector<VerifyRecord> verify_stockwell_suite(const RunConfig& cfg);
std::vector<VerifyRecord> verify_uncertainty_suite(const RunConfig& cfg);
std::vector<VerifyRecord> verify_all(const RunConfig& cfg);

/// Machine-readable report, one record per line, stable formatting.
std::string render_report(const std::vector<VerifyRecord>& records);
void print_summary(std::ostream& os, const std::vector<VerifyRecord>& records);
bool all_pass(const std::vector<VerifyRecord>& records);

/// Deterministic test-field generator (xorshift-based, seed-stable).
QField random_field(std::size_t n, double half_extent, std::uint64_t seed);

}  // namespace qsw
