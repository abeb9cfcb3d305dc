#include "spwn/series_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string_view>
#include <utility>

#include <json.hpp>

namespace spwn {

namespace {

using nlohmann::json;

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

bool parse_finite(std::string_view s, double& out) {
    if (s.empty()) return false;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (*begin == '+') ++begin;  // from_chars rejects an explicit plus
    if (begin == end) return false;
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

// Fixed 17 significant digits: enough to reproduce any double exactly.
std::string format_sig17(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string format_rate(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

const char* model_type_name(const ModelSpec& m) {
    return std::holds_alternative<ArchSpec>(m) ? "arch1" : "mar";
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string to_string(WCorrection c) {
    return c == WCorrection::n_over_n_minus_i ? "n_over_n_minus_i" : "one";
}

WCorrection correction_from_string(const std::string& s) {
    if (s == "n_over_n_minus_i") return WCorrection::n_over_n_minus_i;
    if (s == "one") return WCorrection::one;
    throw std::runtime_error("unknown correction '" + s +
                             "' (expected n_over_n_minus_i or one)");
}

SeriesFile read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");

    std::vector<double> values;
    std::optional<std::string> header;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = trimmed(line);
        double v;
        if (parse_finite(body, v)) {
            values.push_back(v);
        } else if (line_no == 1 && !body.empty()) {
            header = std::string(body);
        } else {
            throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                     ": cannot parse '" + std::string(body) +
                                     "' as a finite number");
        }
    }
    if (values.empty()) {
        throw std::runtime_error(path + ": no observations (empty series file)");
    }
    return {TimeSeries(std::move(values)), std::move(header)};
}

void write_series_csv(const std::string& path, const TimeSeries& xs,
                      const std::optional<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (header) out << *header << '\n';
    for (double v : xs.values()) out << format_sig17(v) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

std::string diagnostics_to_json(const DiagnosticsReport& report) {
    json j;
    j["n"] = report.n;
    j["max_lag"] = report.max_lag;
    j["level"] = report.level;
    j["correction"] = to_string(report.correction);
    json results = json::array();
    for (const LambdaDiagnostics& block : report.blocks) {
        json lags = json::array();
        for (std::size_t i = 0; i < block.diag.max_lag; ++i) {
            lags.push_back({{"lag", i + 1},
                            {"rho", block.diag.rho_hat[i]},
                            {"w", block.diag.w_hat[i]},
                            {"band", block.diag.band_halfwidth[i]}});
        }
        results.push_back({{"lambda", block.lambda},
                           {"lags", std::move(lags)},
                           {"portmanteau",
                            {{"statistic", block.diag.portmanteau_stat},
                             {"df", block.diag.max_lag},
                             {"p_value", block.diag.portmanteau_pvalue}}}});
    }
    j["results"] = std::move(results);
    return j.dump(2);
}

DiagnosticsReport diagnostics_from_json(const std::string& text) {
    json j = json::parse(text);
    DiagnosticsReport report;
    report.n = j.at("n").get<std::size_t>();
    report.max_lag = j.at("max_lag").get<std::size_t>();
    report.level = j.at("level").get<double>();
    report.correction = correction_from_string(j.at("correction").get<std::string>());
    for (const json& r : j.at("results")) {
        LambdaDiagnostics block;
        block.lambda = r.at("lambda").get<double>();
        block.diag.level = report.level;
        const json& lags = r.at("lags");
        block.diag.max_lag = lags.size();
        for (const json& lag : lags) {
            block.diag.rho_hat.push_back(lag.at("rho").get<double>());
            block.diag.w_hat.push_back(lag.at("w").get<double>());
            block.diag.band_halfwidth.push_back(lag.at("band").get<double>());
        }
        block.diag.portmanteau_stat = r.at("portmanteau").at("statistic").get<double>();
        block.diag.portmanteau_pvalue = r.at("portmanteau").at("p_value").get<double>();
        report.blocks.push_back(std::move(block));
    }
    return report;
}

std::string diagnostics_to_text(const DiagnosticsReport& report) {
    std::string out = "n = " + std::to_string(report.n) +
                      ", level = " + format_double(report.level) +
                      ", correction = " + to_string(report.correction) + "\n";
    char buf[160];
    for (const LambdaDiagnostics& block : report.blocks) {
        out += "\nlambda = " + format_double(block.lambda) + "\n";
        out += "    lag        rho_hat          w_hat           band\n";
        for (std::size_t i = 0; i < block.diag.max_lag; ++i) {
            bool outside =
                std::fabs(block.diag.rho_hat[i]) > block.diag.band_halfwidth[i];
            std::snprintf(buf, sizeof buf, "  %5zu  %13.6f  %13.6f  %13.6f%s\n", i + 1,
                          block.diag.rho_hat[i], block.diag.w_hat[i],
                          block.diag.band_halfwidth[i], outside ? "  *" : "");
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "  portmanteau: Q = %.4f, df = %zu, p-value = %.4f\n",
                      block.diag.portmanteau_stat, block.diag.max_lag,
                      block.diag.portmanteau_pvalue);
        out += buf;
    }
    return out;
}

std::string experiment_to_csv(const ExperimentReport& report) {
    bool any_arch = false;
    bool any_mar = false;
    for (const ModelSpec& m : report.config.models) {
        (std::holds_alternative<ArchSpec>(m) ? any_arch : any_mar) = true;
    }

    std::string out = any_arch && !any_mar ? "alpha1" : (!any_arch && any_mar ? "sigma2" : "param");
    if (any_arch) out += ",w11_theory";
    for (double l : report.config.lambda_grid) out += ",lambda=" + format_double(l);
    out += '\n';

    for (std::size_t g = 0; g < report.param_values.size(); ++g) {
        out += format_double(report.param_values[g]);
        if (any_arch) {
            out += ',';
            out += report.theoretical_w11[g] ? format_rate(*report.theoretical_w11[g]) : "NA";
        }
        for (double r : report.rejection_rate[g]) {
            out += ',';
            out += format_rate(r);
        }
        out += '\n';
    }
    return out;
}

std::string experiment_to_json(const ExperimentReport& report) {
    const ExperimentConfig& cfg = report.config;
    json models = json::array();
    for (const ModelSpec& m : cfg.models) {
        json jm;
        jm["type"] = model_type_name(m);
        if (const auto* arch = std::get_if<ArchSpec>(&m)) {
            jm["omega"] = arch->omega;
            jm["alpha1"] = arch->alpha1;
        } else {
            const auto& mar = std::get<MarSpec>(m);
            jm["weight1"] = mar.weight1;
            jm["phi1"] = mar.phi1;
            jm["phi2"] = mar.phi2;
            jm["sigma2"] = mar.sigma2;
        }
        models.push_back(std::move(jm));
    }

    json j;
    j["config"] = {{"n", cfg.n},
                   {"reps", cfg.reps},
                   {"level", cfg.level},
                   {"seed", cfg.seed},
                   {"correction", to_string(cfg.correction)},
                   {"burn_in", cfg.burn_in},
                   {"models", std::move(models)},
                   {"lambda_grid", cfg.lambda_grid}};
    j["param_values"] = report.param_values;

    json w11 = json::array();
    for (const auto& w : report.theoretical_w11) {
        if (w) {
            w11.push_back(round3(*w));
        } else {
            w11.push_back(nullptr);
        }
    }
    j["theoretical_w11"] = std::move(w11);

    json rates = json::array();
    for (const auto& row : report.rejection_rate) {
        json jrow = json::array();
        for (double r : row) jrow.push_back(round3(r));
        rates.push_back(std::move(jrow));
    }
    j["rejection_rate"] = std::move(rates);
    return j.dump(2);
}

}  // namespace spwn
