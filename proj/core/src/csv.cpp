#include "neyman/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "neyman/errors.hpp"

namespace neyman {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return os;
}

void finish(std::ofstream& os, const std::filesystem::path& path) {
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void emit_comparison_csv(const ExperimentResult& result,
                         const std::filesystem::path& path) {
    std::ofstream os = open_for_write(path);
    os << "instance,strategy,T,variance,mean_estimate,mean_regret,"
          "regret_q05,regret_q50,regret_q95\n";
    for (const auto& c : result.cells) {
        os << csv_field(c.instance) << ',' << csv_field(c.strategy) << ','
           << c.horizon << ',' << format_real(c.variance) << ','
           << format_real(c.mean_estimate) << ',' << format_real(c.mean_regret)
           << ',' << format_real(c.regret_q05) << ','
           << format_real(c.regret_q50) << ',' << format_real(c.regret_q95)
           << '\n';
    }
    finish(os, path);
}

void emit_clip_csv(const ExperimentResult& result,
                   const std::filesystem::path& path) {
    std::ofstream os = open_for_write(path);
    os << "instance,alpha,empirical_q95,predicted,ratio,valid\n";
    for (const auto& r : result.clip_rows) {
        os << csv_field(r.instance) << ',' << format_real(r.alpha) << ','
           << format_real(r.empirical_q95) << ',' << format_real(r.predicted)
           << ',' << format_real(r.ratio) << ','
           << (r.valid ? "true" : "false") << '\n';
    }
    finish(os, path);
}

void emit_prediction_csv(const std::vector<ClipPrediction>& rows,
                         std::ostream& os) {
    os << "instance,t_lower,t_upper,t_clip,valid\n";
    for (const auto& r : rows) {
        os << csv_field(r.instance) << ',' << format_real(r.t_lower) << ','
           << format_real(r.t_upper) << ',' << format_real(r.t_clip) << ','
           << (r.valid ? "true" : "false") << '\n';
    }
}

std::vector<std::filesystem::path> emit_csv(const ExperimentResult& result,
                                            const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> written;
    if (!result.cells.empty() || result.clip_rows.empty()) {
        const auto path = dir / "comparison.csv";
        emit_comparison_csv(result, path);
        written.push_back(path);
    }
    if (!result.clip_rows.empty()) {
        const auto path = dir / "clip.csv";
        emit_clip_csv(result, path);
        written.push_back(path);
    }
    return written;
}

}  // namespace neyman
