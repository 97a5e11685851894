#include "mptone/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace mptone::render {

std::string stars(double p, const std::array<double, 3>& levels) {
    if (std::isnan(p)) return "";
    if (p < levels[2]) return "***";
    if (p < levels[1]) return "**";
    if (p < levels[0]) return "*";
    return "";
}

std::string cell(double v) {
    if (std::isnan(v)) return "NA";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    const double a = std::fabs(v);
    if (a > 0.0 && a < 1e-3) return fmt::format("{:.2E}", v);
    std::string s = fmt::format("{:.4f}", v);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

std::string full(double v) {
    if (std::isnan(v)) return "";
    return fmt::format("{:.17g}", v);
}

std::string TextTable::str() const {
    std::vector<std::size_t> width(header_.size(), 0);
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& r : rows_)
        for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::size_t total = 0;
    for (auto w : width) total += w;
    total += 2 * (width.empty() ? 0 : width.size() - 1);

    auto line = [&](const std::vector<std::string>& r) {
        std::string out;
        for (std::size_t c = 0; c < width.size(); ++c) {
            const std::string& v = c < r.size() ? r[c] : std::string();
            if (c) out += "  ";
            out += c == 0 ? fmt::format("{:<{}}", v, width[c]) : fmt::format("{:>{}}", v, width[c]);
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        return out + "\n";
    };
    const std::string rule(total, '-');
    std::string out = line(header_) + rule + "\n";
    for (const auto& r : rows_) out += r.empty() ? rule + "\n" : line(r);
    return out;
}

std::string regression_table(std::string_view title, const RegressionResult& r, const std::array<double, 3>& levels) {
    std::string out = fmt::format("{}\nDependent variable: {}    Observations: {}\n\n", title, r.dependent, r.n);
    TextTable t({"Variable", "Coefficient", "Std. Error", "t-Statistic", "Prob."});
    for (std::size_t i = 0; i < r.names.size(); ++i) {
        const auto j = static_cast<Eigen::Index>(i);
        t.add_row({r.names[i], cell(r.coefficients(j)) + stars(r.p_values(j), levels), cell(r.std_errors(j)),
                   cell(r.t_stats(j)), cell(r.p_values(j))});
    }
    out += t.str();
    TextTable s({"Statistic", "Value", "Statistic", "Value"});
    s.add_row({"R-squared", cell(r.r_squared), "Mean dependent var", cell(r.mean_dependent)});
    s.add_row({"Adjusted R-squared", cell(r.adj_r_squared), "S.D. dependent var", cell(r.sd_dependent)});
    s.add_row({"F-statistic", cell(r.f_stat), "Prob(F-statistic)", cell(r.f_p_value)});
    s.add_row({"Log likelihood", cell(r.log_likelihood), "Durbin-Watson stat", cell(r.durbin_watson)});
    s.add_row({"Akaike info criterion", cell(r.aic), "S.E. of regression", cell(r.sigma)});
    out += "\n" + s.str();
    out += fmt::format("*, **, *** denote significance at the {:g}%, {:g}% and {:g}% levels.\n", levels[0] * 100,
                       levels[1] * 100, levels[2] * 100);
    return out;
}

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 110;

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Frame2d {
    double lo;
    double hi;
    std::size_t n;
    double x(std::size_t i) const {
        const double span = kWidth - kLeft - kRight;
        return n <= 1 ? kLeft + span / 2 : kLeft + span * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    double slot(std::size_t i) const {
        const double span = kWidth - kLeft - kRight;
        return kLeft + span * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    }
    double y(double v) const { return kTop + (kHeight - kTop - kBottom) * (hi - v) / (hi - lo); }
};

Frame2d scale(const std::vector<Point>& pts, bool include_zero) {
    double lo = include_zero ? 0.0 : std::numeric_limits<double>::infinity();
    double hi = include_zero ? 0.0 : -std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        if (!std::isfinite(p.value)) continue;
        lo = std::min(lo, p.value);
        hi = std::max(hi, p.value);
    }
    if (!std::isfinite(lo)) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    return {include_zero && lo == 0.0 ? 0.0 : lo - pad, hi + pad, pts.size()};
}

std::string open(std::string_view title, std::string_view y_label, const Frame2d& f,
                 const std::vector<Point>& pts, bool slots) {
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\" "
        "font-family=\"sans-serif\" font-size=\"11\">\n",
        kWidth, kHeight);
    s += fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
    s += fmt::format("<text x=\"{:.1f}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n", kWidth / 2,
                     escape(title));
    const double y0 = kTop;
    const double y1 = kHeight - kBottom;
    s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", kLeft, y0, y1);
    s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n", kLeft, y1,
                     kWidth - kRight);
    for (int i = 0; i <= 5; ++i) {
        const double v = f.lo + (f.hi - f.lo) * i / 5.0;
        const double y = f.y(v);
        s += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"#dddddd\"/>\n", kLeft,
                         y, kWidth - kRight);
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n", kLeft - 6, y + 4,
                         escape(fmt::format("{:.4g}", v)));
    }
    s += fmt::format(
        "<text x=\"16\" y=\"{0:.1f}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0:.1f})\">{1}</text>\n",
        (y0 + y1) / 2, escape(y_label));
    const std::size_t every = std::max<std::size_t>(1, (pts.size() + 23) / 24);
    for (std::size_t i = 0; i < pts.size(); i += every) {
        const double x = slots ? f.slot(i) : f.x(i);
        s += fmt::format(
            "<text x=\"{0:.1f}\" y=\"{1:.1f}\" text-anchor=\"end\" transform=\"rotate(-60 {0:.1f} {1:.1f})\">{2}</text>\n",
            x, y1 + 14, escape(pts[i].label));
    }
    return s;
}

std::string polyline(const Frame2d& f, const std::vector<Point>& pts) {
    std::string s = "<polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!std::isfinite(pts[i].value)) continue;
        s += fmt::format("{}{:.1f},{:.1f}", first ? "" : " ", f.x(i), f.y(pts[i].value));
        first = false;
    }
    return s + "\"/>\n";
}

}  // namespace

std::string svg_line_chart(std::string_view title, std::string_view y_label, const std::vector<Point>& points) {
    const Frame2d f = scale(points, false);
    return open(title, y_label, f, points, false) + polyline(f, points) + "</svg>\n";
}

std::string svg_bar_chart(std::string_view title, std::string_view y_label, const std::vector<Point>& bars) {
    const Frame2d f = scale(bars, true);
    std::string s = open(title, y_label, f, bars, true);
    const double span = kWidth - kLeft - kRight;
    const double w = 0.7 * span / static_cast<double>(std::max<std::size_t>(1, bars.size()));
    const double base = f.y(std::max(0.0, f.lo));
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double top = f.y(bars[i].value);
        s += fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"#4a7ab0\"/>\n",
                         f.slot(i) - w / 2, std::min(top, base), w, std::fabs(base - top));
        s += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", f.slot(i),
                         std::min(top, base) - 4, escape(fmt::format("{:.4g}", bars[i].value)));
    }
    return s + "</svg>\n";
}

std::string svg_scatter_line(std::string_view title, std::string_view y_label, const std::vector<Point>& points) {
    const Frame2d f = scale(points, false);
    std::string s = open(title, y_label, f, points, false) + polyline(f, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].value)) continue;
        s += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"3.5\" fill=\"#c0392b\"/>\n", f.x(i),
                         f.y(points[i].value));
    }
    return s + "</svg>\n";
}

}  // namespace mptone::render
