#ifndef SWB_REPORT_HPP
#define SWB_REPORT_HPP

#include <string>
#include <vector>

#include "swb/verify.hpp"

namespace swb {

struct RunConfig {
    double that = 2.0;
    std::vector<double> that_list{8.0, 16.0, 32.0, 64.0};
    double T = 100.0;
    std::vector<double> T_list{100.0, 1e4};
    std::string kappa = "both";  // "1", "4" or "both"
    int c_max = 500;
    std::string input_form_path;  // empty: the bundled delta input
    std::string output = "json";  // json, csv or text
    std::string out_path;         // empty: stdout
    unsigned seed = 4711;
};

// JSON file with any subset of the RunConfig keys; unknown keys rejected
RunConfig load_run_config(const std::string& path);

// deterministic serializations: fixed key order, shortest round-trip
// number formatting, newline-terminated
std::string report_json(const std::vector<VerificationReport>& reports);
std::string report_csv(const std::vector<VerificationReport>& reports);
std::string report_text(const std::vector<VerificationReport>& reports);

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format);

// true iff every hard report passes (soft reports never gate)
bool all_hard_pass(const std::vector<VerificationReport>& reports);

}  // namespace swb

#endif
