#include "swb/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace swb {

namespace {

std::string g17(double x) {
    char b[48];
    std::snprintf(b, sizeof b, "%.17g", x);
    return b;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    RunConfig c;
    for (auto& [k, v] : j.items()) {
        if (k == "that")
            c.that = v.get<double>();
        else if (k == "that_list")
            c.that_list = v.get<std::vector<double>>();
        else if (k == "T")
            c.T = v.get<double>();
        else if (k == "T_list")
            c.T_list = v.get<std::vector<double>>();
        else if (k == "kappa")
            c.kappa = v.is_string() ? v.get<std::string>()
                                    : v.dump();
        else if (k == "c_max")
            c.c_max = v.get<int>();
        else if (k == "input_form_path")
            c.input_form_path = v.get<std::string>();
        else if (k == "output")
            c.output = v.get<std::string>();
        else if (k == "out_path")
            c.out_path = v.get<std::string>();
        else if (k == "seed")
            c.seed = v.get<unsigned>();
        else
            throw std::runtime_error("unknown config key " + k);
    }
    if (c.kappa != "1" && c.kappa != "4" && c.kappa != "both")
        throw std::runtime_error("config kappa must be 1, 4 or both");
    if (c.output != "json" && c.output != "csv" && c.output != "text")
        throw std::runtime_error("config output must be json, csv or text");
    return c;
}

std::string report_json(const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const VerificationReport& r : reports) {
        nlohmann::ordered_json j;
        j["identity_id"] = r.identity_id;
        j["lhs"] = {{"re", r.lhs.real()}, {"im", r.lhs.imag()}};
        j["rhs"] = {{"re", r.rhs.real()}, {"im", r.rhs.imag()}};
        j["abs_err"] = r.abs_err;
        j["rel_err"] = r.rel_err;
        j["pass"] = r.pass;
        j["notes"] = r.notes;
        nlohmann::ordered_json cfg;
        cfg["lhs_path"] = r.lhs_path;
        cfg["rhs_path"] = r.rhs_path;
        cfg["tolerance"] = r.tolerance;
        cfg["absolute_mode"] = r.absolute_mode;
        cfg["hard"] = r.hard;
        for (const auto& [k, v] : r.config) cfg[k] = v;
        j["config"] = cfg;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string report_csv(const std::vector<VerificationReport>& reports) {
    std::string out =
        "identity_id,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass\n";
    for (const VerificationReport& r : reports) {
        out += r.identity_id + "," + g17(r.lhs.real()) + "," +
               g17(r.lhs.imag()) + "," + g17(r.rhs.real()) + "," +
               g17(r.rhs.imag()) + "," + g17(r.abs_err) + "," +
               g17(r.rel_err) + "," + (r.pass ? "true" : "false") + "\n";
    }
    return out;
}

std::string report_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const VerificationReport& r : reports) {
        out += (r.pass ? "[pass] " : "[FAIL] ") + r.identity_id +
               (r.hard ? "" : " (informational)") + "\n";
        out += "  lhs  " + g17(r.lhs.real());
        if (r.lhs.imag() != 0.0) out += " + " + g17(r.lhs.imag()) + " i";
        out += "  (" + r.lhs_path + ")\n";
        out += "  rhs  " + g17(r.rhs.real());
        if (r.rhs.imag() != 0.0) out += " + " + g17(r.rhs.imag()) + " i";
        out += "  (" + r.rhs_path + ")\n";
        out += "  abs_err " + g17(r.abs_err) + "  rel_err " + g17(r.rel_err) +
               "  tol " + g17(r.tolerance) +
               (r.absolute_mode ? " (absolute)" : " (relative)") + "\n";
        for (const auto& [k, v] : r.config)
            out += "  config " + k + " = " + v + "\n";
        for (const std::string& n : r.notes) out += "  note " + n + "\n";
    }
    return out;
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           const std::string& format) {
    if (format == "json") return report_json(reports);
    if (format == "csv") return report_csv(reports);
    if (format == "text") return report_text(reports);
    throw std::runtime_error("unknown report format " + format);
}

bool all_hard_pass(const std::vector<VerificationReport>& reports) {
    for (const VerificationReport& r : reports)
        if (r.hard && !r.pass) return false;
    return true;
}

}  // namespace swb
