#include "rotlab/series_io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace rotlab {

void write_series_csv(const std::string& path, const OrbitSeries& series,
                      const DriftSeries& drift) {
    if (series.n.size() != drift.n.size())
        throw precondition_error("write_series_csv: series and drift lengths differ");
    std::ofstream out(path);
    if (!out) throw io_error("write_series_csv: cannot open '" + path + "'");
    out << "n,x1,r,drift\n";
    char buf[160];
    for (std::size_t i = 0; i < series.n.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g\n", series.n[i],
                      series.p[i].x1, series.p[i].r, drift.values[i]);
        out << buf;
    }
    if (!out) throw io_error("write_series_csv: write failed for '" + path + "'");
}

std::string summary_json(const OrbitSeries& series, const DriftSeries& drift,
                         const RotationEstimate& fit, const DriftClass& klass) {
    nlohmann::json j;
    j["rotation_estimate"] = fit.estimate;
    j["tail_slope"] = fit.tail_slope;
    j["residual"] = fit.residual;
    j["drift_max"] = drift.max;
    j["drift_min"] = drift.min;
    j["min_r"] = series.min_r;
    j["classification"] = to_string(klass.kind);
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw io_error("write_text_file: cannot open '" + path + "'");
    out << content;
    if (!out) throw io_error("write_text_file: write failed for '" + path + "'");
}

}  // namespace rotlab
