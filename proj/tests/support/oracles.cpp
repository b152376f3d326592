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

#include "oracles.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <numeric>
#include <tuple>

namespace cbundle::testing {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

struct Lifter {
  long a, b, p;
  int k;
  std::vector<long> pk;  // p^j

  bool ok(long x, long y, long z, int j) const {
    long m = pk[j];
    __int128 v = static_cast<__int128>(a) * x * x + static_cast<__int128>(b) * y * y - static_cast<__int128>(z) * z;
    return static_cast<long>(((v % m) + m) % m) == 0;
  }

  // Depth-first lifting of (x, y, z) from mod p^j to mod p^k.
  bool lift(long x, long y, long z, int j, int fixed) const {
    if (j == k) return true;
    for (long dx = 0; dx < p; ++dx)
      for (long dy = 0; dy < p; ++dy)
        for (long dz = 0; dz < p; ++dz) {
          if ((fixed == 0 && dx) || (fixed == 1 && dy) || (fixed == 2 && dz)) continue;
          long nx = x + dx * pk[j], ny = y + dy * pk[j], nz = z + dz * pk[j];
          if (ok(nx, ny, nz, j + 1) && lift(nx, ny, nz, j + 1, fixed)) return true;
        }
    return false;
  }
};

}  // namespace

int hilbert_bruteforce(long a, long b, long p) {
  auto strip = [p](long x) {
    while (x % (p * p) == 0) x /= p * p;
    return x;
  };
  a = strip(a);
  b = strip(b);
  Lifter L{a, b, p, p == 2 ? 5 : 3, {}};
  L.pk.push_back(1);
  for (int j = 0; j <= L.k; ++j) L.pk.push_back(L.pk.back() * p);
  static std::map<std::tuple<long, long, long>, int> cache;
  auto key = std::make_tuple(p, mod(a, L.pk[L.k]), mod(b, L.pk[L.k]));
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int result = -1;
  // Primitive: some coordinate is a unit; scale it to 1.
  for (int fixed = 0; fixed < 3 && result < 0; ++fixed) {
    for (long s = 0; s < p && result < 0; ++s)
      for (long t = 0; t < p && result < 0; ++t) {
        std::array<long, 3> v{};
        v[fixed] = 1;
        v[(fixed + 1) % 3] = s;
        v[(fixed + 2) % 3] = t;
        if (L.ok(v[0], v[1], v[2], 1) && L.lift(v[0], v[1], v[2], 1, fixed)) result = 1;
      }
  }
  cache[key] = result;
  return result;
}

int grid_sign_changes(const UPoly& p, const Rat& lo, const Rat& hi, int n) {
  int changes = 0, last = 0;
  for (int i = 0; i <= n; ++i) {
    Rat x = lo + (hi - lo) * i / n;
    Rat v = p.eval(x);
    int s = sgn(v);
    if (s == 0) {
      ++changes;  // exact rational root on the grid
      last = 0;
      continue;
    }
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_singular_points_mod_p(const MPoly& f, long p) {
  std::array<MPoly, 4> g{f, f.partial(0), f.partial(1), f.partial(2)};
  auto vanish = [&](long x, long y, long z) {
    for (const auto& h : g) {
      Rat v = h.evaluate({Rat(x), Rat(y), Rat(z)});
      Int r = v.get_num() % Int(p);
      if (r != 0) return false;
    }
    return true;
  };
  int count = 0;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if (vanish(1, x, y)) ++count;
  for (long y = 0; y < p; ++y)
    if (vanish(0, 1, y)) ++count;
  if (vanish(0, 0, 1)) ++count;
  return count;
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FloodFillTopology flood_fill_topology(const MPoly& delta, int n) {
  // Six faces of the cube [-1,1]^3; cell centers at odd multiples of 1/n.
  // Point on face f with coordinates (s, t): axis = f / 2, sign = +-1.
  auto point = [n](int f, int i, int j) {
    std::array<double, 3> p{};
    int axis = f / 2;
    double sign = (f % 2) ? -1.0 : 1.0;
    double s = -1.0 + (2.0 * i + 1.0) / n, t = -1.0 + (2.0 * j + 1.0) / n;
    p[axis] = sign;
    p[(axis + 1) % 3] = s;
    p[(axis + 2) % 3] = t;
    return p;
  };
  std::vector<std::pair<std::array<unsigned, 3>, double>> terms;
  for (const auto& [m, c] : delta.terms())
    terms.push_back({{mono::exp(m, 0), mono::exp(m, 1), mono::exp(m, 2)}, c.get_d()});
  auto eval = [&](const std::array<double, 3>& p) {
    double s = 0, scale = 0;
    for (const auto& [e, c] : terms) {
      double t = c;
      for (int k = 0; k < 3; ++k)
        for (unsigned r = 0; r < e[k]; ++r) t *= p[k];
      s += t;
      scale += std::abs(t);
    }
    return std::make_pair(s, scale);
  };
  size_t total = static_cast<size_t>(6) * n * n;
  auto id = [n](int f, int i, int j) { return (f * n + i) * n + j; };
  std::vector<int> sign(total);
  FloodFillTopology out;
  out.ok = true;
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto [v, scale] = eval(point(f, i, j));
        if (std::abs(v) <= 1e-9 * scale) out.ok = false;
        sign[id(f, i, j)] = v > 0 ? 1 : -1;
      }
  DSU dsu(total);
  // Locate a neighbour by projecting a slightly displaced point back onto the cube.
  auto locate = [n](std::array<double, 3> p) {
    int axis = 0;
    for (int k = 1; k < 3; ++k)
      if (std::abs(p[k]) > std::abs(p[axis])) axis = k;
    double m = std::abs(p[axis]);
    for (auto& x : p) x /= m;
    int f = 2 * axis + (p[axis] < 0 ? 1 : 0);
    double s = p[(axis + 1) % 3], t = p[(axis + 2) % 3];
    int i = std::min(n - 1, std::max(0, static_cast<int>((s + 1.0) * n / 2.0)));
    int j = std::min(n - 1, std::max(0, static_cast<int>((t + 1.0) * n / 2.0)));
    return std::array<int, 3>{f, i, j};
  };
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto p = point(f, i, j);
        int axis = f / 2;
        for (int d = 0; d < 4; ++d) {
          auto q = p;
          double step = 2.0 / n;
          int k = (d < 2) ? (axis + 1) % 3 : (axis + 2) % 3;
          q[k] += (d % 2) ? -step : step;
          auto c = locate(q);
          int a = id(f, i, j), b = id(c[0], c[1], c[2]);
          if (sign[a] == sign[b]) dsu.unite(a, b);
        }
      }
  // Components, adjacency between components, antipodal pairing.
  std::map<int, int> comp_index;
  for (size_t x = 0; x < total; ++x) comp_index.emplace(dsu.find(static_cast<int>(x)), 0);
  int c = 0;
  for (auto& [root, idx] : comp_index) idx = c++;
  out.components = c;
  out.ovals = (c - 1) / 2;
  // The antipode of cell (f, i, j) is (f ^ 1, i', j') found by locate(-p).
  std::vector<int> anti(c, -1);
  std::vector<std::set<int>> adj(c);
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto p = point(f, i, j);
        auto q = p;
        for (auto& x : q) x = -x;
        auto a = locate(q);
        int ci = comp_index[dsu.find(id(f, i, j))];
        int cj = comp_index[dsu.find(id(a[0], a[1], a[2]))];
        anti[ci] = cj;
        int axis = f / 2;
        for (int d = 0; d < 4; ++d) {
          auto r = p;
          int k = (d < 2) ? (axis + 1) % 3 : (axis + 2) % 3;
          r[k] += (d % 2) ? -2.0 / n : 2.0 / n;
          auto b = locate(r);
          int ck = comp_index[dsu.find(id(b[0], b[1], b[2]))];
          if (ck != ci) adj[ci].insert(ck);
        }
      }
  int outside = -1;
  for (int i = 0; i < c; ++i)
    if (anti[i] == i) outside = i;
  if (outside < 0) {
    out.ok = out.ok && c == 1;
    return out;
  }
  // Each oval lifts to two circles; the outside touches 2 circles per oval
  // bounding it, so its degree counts those ovals twice.
  out.outside_degree = static_cast<int>(adj[outside].size()) / 2;
  out.nested = out.ovals == 2 && out.outside_degree == 1;
  return out;
}

}  // namespace cbundle::testing
