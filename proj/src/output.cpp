#include "lavrentiev/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lavr {

namespace {

std::ofstream open_out(const std::filesystem::path& path)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return os;
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string coord(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// At most `limit` evenly spaced points of a polyline.
std::vector<std::size_t> thin(std::size_t n, std::size_t limit)
{
    std::vector<std::size_t> idx;
    const std::size_t stride = std::max<std::size_t>(1, n / limit);
    for (std::size_t i = 0; i < n; i += stride)
        idx.push_back(i);
    if (!idx.empty() && idx.back() != n - 1)
        idx.push_back(n - 1);
    return idx;
}

}  // namespace

std::string svg_plot(const std::vector<PlotSeries>& series, const std::string& title,
                     const std::string& x_label, const std::string& y_label)
{
    constexpr double W = 640, H = 420, L = 70, R = 150, T = 40, B = 55;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (double v : s.x) {
            xmin = std::min(xmin, v);
            xmax = std::max(xmax, v);
        }
        for (double v : s.y) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = ymin = 0.0;
        xmax = ymax = 1.0;
    }
    if (xmax == xmin)
        xmax = xmin + 1.0;
    if (ymax == ymin)
        ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << title
       << "</text>\n"
       << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\""
       << H - T - B << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = xmin + i * (xmax - xmin) / 4, yv = ymin + i * (ymax - ymin) / 4;
        os << "<text x=\"" << coord(px(xv)) << "\" y=\"" << H - B + 16
           << "\" text-anchor=\"middle\">" << coord(xv) << "</text>\n"
           << "<text x=\"" << L - 6 << "\" y=\"" << coord(py(yv) + 4)
           << "\" text-anchor=\"end\">" << coord(yv) << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">"
       << x_label << "</text>\n"
       << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (T + H - B) / 2 << ")\">" << y_label << "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i : thin(std::min(s.x.size(), s.y.size()), 1000))
            os << coord(px(s.x[i])) << ',' << coord(py(s.y[i])) << ' ';
        os << "\"/>\n";
        const double ly = T + 16 + 18 * static_cast<double>(k);
        os << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30
           << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << W - R + 36 << "\" y=\"" << ly + 4 << "\">" << s.label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

nlohmann::json run_metadata(const RunResult& run)
{
    nlohmann::json j;
    j["method"] = to_string(run.method);
    j["alpha"] = run.alpha;
    j["m"] = run.m;
    j["sigma"] = run.sigma;
    j["delta"] = run.delta;
    j["residual_sigma"] = run.solve.residual_sigma;
    j["iterations"] = run.solve.iterations;
    j["wall_time_s"] = run.wall_time;
    j["x_star"] = run.x_star;
    j["l2_error"] = run.l2_error;
    if (run.method == Method::PcSmoothed)
        j["smoothing_m"] = run.smoothing_m;
    return j;
}

void write_run(const std::filesystem::path& dir, const RunResult& run, bool plot)
{
    std::filesystem::create_directories(dir);
    {
        auto os = open_out(dir / "run.csv");
        write_csv(os, run.solve.reconstruction);
    }
    {
        auto os = open_out(dir / "run.json");
        os << run_metadata(run).dump(2) << '\n';
    }
    if (!plot)
        return;
    try {
        const auto& g = run.x0.grid();
        std::vector<double> t(g.size());
        for (std::size_t k = 0; k < t.size(); ++k)
            t[k] = g.node(k);
        const auto& rec = run.solve.reconstruction.values();
        std::vector<PlotSeries> s{
            {"x0", "black", t, {run.x0.values().begin(), run.x0.values().end()}},
            {to_string(run.method), "red", t, {rec.begin(), rec.end()}}};
        auto os = open_out(dir / "run.svg");
        os << svg_plot(s, "reconstruction, delta = " + fmt(run.delta), "t", "x(t)");
    } catch (const std::exception& e) {
        std::cerr << "warning: plot not written: " << e.what() << '\n';
    }
}

void write_rate_csv(std::ostream& os, const RateStudyResult& result)
{
    os << "delta,method,m,alpha,error,residual,time\n";
    for (const auto& r : result.rows)
        os << fmt(r.delta) << ',' << to_string(r.method) << ',' << r.m << ',' << fmt(r.alpha) << ','
           << fmt(r.l2_error) << ',' << fmt(r.residual) << ',' << fmt(r.wall_time) << '\n';
}

void write_rate(const std::filesystem::path& dir, const RateStudyResult& result)
{
    std::filesystem::create_directories(dir);
    {
        auto os = open_out(dir / "rate.csv");
        write_rate_csv(os, result);
    }
    try {
        const std::map<Method, std::string> colors{
            {Method::Pc, "red"}, {Method::PcSmoothed, "blue"}, {Method::Cubic, "black"}};
        std::vector<PlotSeries> series;
        for (const auto& [method, slope] : result.fitted_slopes) {
            PlotSeries s{to_string(method) + " (" + coord(slope) + ")", colors.at(method), {}, {}};
            for (const auto& r : result.rows) {
                if (r.method != method)
                    continue;
                s.x.push_back(-std::log(r.delta));
                s.y.push_back(-std::log(r.l2_error));
            }
            series.push_back(std::move(s));
        }
        auto os = open_out(dir / "rate.svg");
        os << svg_plot(series, "convergence rate", "-ln delta", "-ln error");
    } catch (const std::exception& e) {
        std::cerr << "warning: plot not written: " << e.what() << '\n';
    }
}

}  // namespace lavr
