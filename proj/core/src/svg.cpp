// Copyright 2026 The cbundle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbundle/svg.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cbundle {

namespace {

struct DPoly {
  std::vector<std::pair<std::array<unsigned, 3>, double>> terms;
  explicit DPoly(const MPoly& p) {
    for (const auto& [m, c] : p.terms()) terms.push_back({{mono::exp(m, 0), mono::exp(m, 1), mono::exp(m, 2)}, c.get_d()});
  }
  double operator()(const std::array<double, 3>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms) s += c * std::pow(x[0], e[0]) * std::pow(x[1], e[1]) * std::pow(x[2], e[2]);
    return s;
  }
};

// Disk coordinates (x, y) with x^2 + y^2 <= 1 to a hemisphere point.
std::array<double, 3> lift(double x, double y) {
  double r2 = x * x + y * y;
  return {x, y, std::sqrt(std::max(0.0, 1.0 - r2))};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const CoverSpec& spec, const RealCurveTopology& topo, const RegionReport& report, int grid) {
  const double size = 480, pad = 10, scale = (size - 2 * pad) / 2;
  auto px = [&](double x) { return pad + (x + 1) * scale; };
  auto py = [&](double y) { return pad + (1 - y) * scale; };
  DPoly delta(spec.delta), q1(spec.q1.poly());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  os << "<title>" << to_string(topo.configuration) << "</title>\n";
  os << "<circle cx=\"" << num(px(0)) << "\" cy=\"" << num(py(0)) << "\" r=\"" << num(scale)
     << "\" fill=\"#f4f4f4\" stroke=\"#888\"/>\n";

  double h = 2.0 / grid;
  std::vector<double> dv((grid + 1) * (grid + 1));
  auto at = [&](int i, int j) -> double& { return dv[i * (grid + 1) + j]; };
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j) at(i, j) = delta(lift(-1 + i * h, -1 + j * h));

  os << "<g fill=\"#9cc3e6\" stroke=\"none\">\n";
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double x = -1 + (i + 0.5) * h, y = -1 + (j + 0.5) * h;
      if (x * x + y * y > 1) continue;
      auto p = lift(x, y);
      double d = delta(p), a = q1(p);
      if (a >= 0 || d > 0)
        os << "<rect x=\"" << num(px(x - h / 2)) << "\" y=\"" << num(py(y + h / 2)) << "\" width=\""
           << num(h * scale) << "\" height=\"" << num(h * scale) << "\"/>\n";
    }
  os << "</g>\n";

  // Marching squares on delta; segment style from the sign of Q1 on it.
  std::ostringstream solid, dashed;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double xs[4] = {-1 + i * h, -1 + (i + 1) * h, -1 + (i + 1) * h, -1 + i * h};
      double ys[4] = {-1 + j * h, -1 + j * h, -1 + (j + 1) * h, -1 + (j + 1) * h};
      double vs[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      std::vector<std::pair<double, double>> cut;
      for (int e = 0; e < 4; ++e) {
        int f = (e + 1) % 4;
        if ((vs[e] > 0) == (vs[f] > 0)) continue;
        double t = vs[e] / (vs[e] - vs[f]);
        double x = xs[e] + t * (xs[f] - xs[e]), y = ys[e] + t * (ys[f] - ys[e]);
        if (x * x + y * y > 1) continue;
        cut.push_back({x, y});
      }
      for (size_t k = 0; k + 1 < cut.size(); k += 2) {
        double mx = (cut[k].first + cut[k + 1].first) / 2, my = (cut[k].second + cut[k + 1].second) / 2;
        std::ostringstream& out = q1(lift(mx, my)) >= 0 ? solid : dashed;
        out << "M" << num(px(cut[k].first)) << " " << num(py(cut[k].second)) << "L" << num(px(cut[k + 1].first))
            << " " << num(py(cut[k + 1].second));
      }
    }
  os << "<path d=\"" << solid.str() << "\" stroke=\"#1f3b73\" stroke-width=\"2\" fill=\"none\"/>\n";
  os << "<path d=\"" << dashed.str() << "\" stroke=\"#b22222\" stroke-width=\"2\" stroke-dasharray=\"4 3\" fill=\"none\"/>\n";

  for (size_t c = 0; c < topo.cells.size(); ++c) {
    const auto& s = topo.cells[c].sample;
    double x = s[0].get_d(), y = s[1].get_d(), z = s[2].get_d();
    double n = std::sqrt(x * x + y * y + z * z);
    if (z < 0) n = -n;
    bool in = c < report.cell_in.size() && report.cell_in[c];
    os << "<circle cx=\"" << num(px(x / n)) << "\" cy=\"" << num(py(y / n)) << "\" r=\"4\" fill=\""
       << (in ? "#1f3b73" : "#ffffff") << "\" stroke=\"#000\"><title>cell " << c << " depth "
       << topo.cells[c].depth << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cbundle
