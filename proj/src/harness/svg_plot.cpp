// Copyright 2026 The QLGA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlga/harness/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

namespace qlga::harness {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 70;
constexpr std::array<const char*, 4> kColors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_loglog_svg(const std::vector<PlotSeries>& series, const std::string& x_label,
                      const std::string& y_label, std::ostream& out) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) throw std::invalid_argument("series length mismatch");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!(s.x[i] > 0.0) || !(s.y[i] > 0.0)) throw std::invalid_argument("log plot needs positive data");
            x0 = std::min(x0, std::log10(s.x[i]));
            x1 = std::max(x1, std::log10(s.x[i]));
            y0 = std::min(y0, std::log10(s.y[i]));
            y1 = std::max(y1, std::log10(s.y[i]));
        }
    }
    if (!std::isfinite(x0)) throw std::invalid_argument("nothing to plot");
    x0 = std::floor(x0);
    x1 = std::max(std::ceil(x1), x0 + 1);
    y0 = std::floor(y0);
    y1 = std::max(std::ceil(y1), y0 + 1);
    auto px = [&](double lx) { return kMargin + (lx - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
    auto py = [&](double ly) { return kHeight - kMargin - (ly - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight);
    out << fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
                       kMargin, kMargin, kWidth - 2 * kMargin, kHeight - 2 * kMargin);
    for (int e = int(x0); e <= int(x1); ++e) {
        out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">1e{}</text>\n",
                           px(e), kHeight - kMargin + 18, e);
    }
    for (int e = int(y0); e <= int(y1); ++e) {
        out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">1e{}</text>\n",
                           kMargin - 6, py(e) + 4, e);
    }
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                       kWidth / 2, kHeight - 20, escape(x_label));
    out << fmt::format(
        "<text x=\"20\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2f})\">{}</text>\n",
        kHeight / 2, kHeight / 2, escape(y_label));

    if (!series.empty() && !series.front().x.empty()) {
        const double ax = std::log10(series.front().x.front());
        const double ay = std::log10(series.front().y.front());
        for (double slope : {0.5, 2.5}) {
            // Clip the guide to the plot box.
            double lo = x0, hi = x1;
            for (double yb : {y0, y1}) {
                const double xb = ax + (yb - ay) / slope;
                if (yb == y0) lo = std::max(lo, xb);
                else hi = std::min(hi, xb);
            }
            if (lo >= hi) continue;
            out << fmt::format(
                "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"gray\" "
                "stroke-dasharray=\"6,4\"/>\n",
                px(lo), py(ay + slope * (lo - ax)), px(hi), py(ay + slope * (hi - ax)));
            out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"gray\">slope {}</text>\n",
                               px(hi) - 60, py(ay + slope * (hi - ax)) + 14, slope);
        }
    }

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kColors[k % kColors.size()];
        std::string points;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            points += fmt::format("{:.2f},{:.2f} ", px(std::log10(s.x[i])), py(std::log10(s.y[i])));
        }
        out << fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                           points, color);
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            out << fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n",
                               px(std::log10(s.x[i])), py(std::log10(s.y[i])), color);
        }
        out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"{}\">{}</text>\n", kMargin + 10,
                           kMargin + 18 + 16 * double(k), color, escape(s.name));
    }
    out << "</svg>\n";
}

}  // namespace qlga::harness
