#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lavrentiev/experiment.hpp"

namespace lavr {

struct PlotSeries {
    std::string label;
    std::string color;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG with one polyline per series.
std::string svg_plot(const std::vector<PlotSeries>& series, const std::string& title,
                     const std::string& x_label, const std::string& y_label);

/// Metadata sidecar {alpha, m, sigma, residual_sigma, iterations, wall_time_s, method, ...}.
nlohmann::json run_metadata(const RunResult& run);

/// Writes run.csv and run.json (and run.svg when `plot` is set) into dir.
void write_run(const std::filesystem::path& dir, const RunResult& run, bool plot = true);

/// Long-format table delta,method,m,alpha,error,residual,time.
void write_rate_csv(std::ostream& os, const RateStudyResult& result);

/// Writes rate.csv and rate.svg into dir.
void write_rate(const std::filesystem::path& dir, const RateStudyResult& result);

}  // namespace lavr
