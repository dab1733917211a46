// Acceptance suite: runs every verification record on the canonical
// configuration (N=64, L=8, xi grid 16x16 half-step-offset in [-4,4],
// b grid = spatial grid, admissible_dog(0.5,2) window) and prints one
// pass/fail line per criterion.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "qsw/verify.hpp"

namespace {

const char* kCriterionText[16] = {
    nullptr,
    "QFT oracle equivalence (fast vs direct, <= 1e-10)",
    "Gaussian fixed point (<= 1e-6)",
    "QFT Plancherel/Parseval (<= 1e-8)",
    "QFT inversion round trip (<= 1e-8)",
    "Convolution theorem & energy identity (<= 1e-8)",
    "Modulation/translation/dilation operator identities (1e-10 / 1e-8)",
    "Stockwell basic properties (linearity/anti-linearity/parity/scaling)",
    "forward_fast = forward (<= 1e-8 relative)",
    "Stockwell inversion (relative L2 <= 1e-3)",
    "Stockwell Plancherel ratio in [0.95, 1.05], deviation shrinks on refinement",
    "Resolution-of-identity constancy of the window xi-integral (<= 2%)",
    "Admissibility: dog converges (<= 2%), gaussian flagged divergent",
    "Lieb product (p in {1,2,4}) and L^p membership (p in {2,4,8})",
    "Uncertainty suite (Beckner, Heisenberg, local, Donoho-Stark, Lieb)",
    "Determinism: verify output byte-identical for 1 and 4 workers",
};

}  // namespace

int main() {
    qsw::RunConfig cfg;
    cfg.threads = 4;

    std::vector<qsw::VerifyRecord> records = qsw::verify_all(cfg);

    // criterion 15: rerun the slice-parallel suite with one worker and with
    // four and compare the rendered reports byte for byte
    qsw::RunConfig c1;
    c1.n = 32;
    c1.xi_count = 8;
    qsw::RunConfig c4 = c1;
    c1.threads = 1;
    c4.threads = 4;
    std::string rep1 = qsw::render_report(qsw::verify_stockwell_suite(c1));
    std::string rep4 = qsw::render_report(qsw::verify_stockwell_suite(c4));
    qsw::VerifyRecord det;
    det.name = "determinism_1_vs_4_workers";
    det.criterion = 15;
    det.lhs = rep1 == rep4 ? 1.0 : 0.0;
    det.rhs = 1.0;
    det.pass = rep1 == rep4;
    records.push_back(det);

    std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
    for (const auto& r : records) {
        if (r.criterion == 0) continue;
        auto& t = tally[r.criterion];
        t.first += r.pass ? 1 : 0;
        t.second += 1;
    }

    bool all_ok = true;
    for (int c = 1; c <= 15; ++c) {
        auto it = tally.find(c);
        bool ok = it != tally.end() && it->second.first == it->second.second;
        all_ok = all_ok && ok;
        std::printf("[%2d] %s  %s (%d/%d records)\n", c, ok ? "PASS" : "FAIL",
                    kCriterionText[c], it == tally.end() ? 0 : it->second.first,
                    it == tally.end() ? 0 : it->second.second);
    }

    std::printf("---\n");
    for (const auto& r : records) {
        if (r.pass) continue;
        std::printf("failing record: %s (criterion %d) lhs=%.6g rhs=%.6g %s\n",
                    r.name.c_str(), r.criterion, r.lhs, r.rhs, r.label.c_str());
    }
    // module-example records (criterion 0) are reported but informational
    for (const auto& r : records)
        if (r.criterion == 0)
            std::printf("invariant: %-32s %s (lhs=%.6g rhs=%.6g)\n", r.name.c_str(),
                        r.pass ? "pass" : "FAIL", r.lhs, r.rhs);

    return all_ok ? 0 : 1;
}
