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

#include "cbundle/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cbundle/errors.hpp"
#include "cbundle/matrix.hpp"
#include "cbundle/random.hpp"

namespace cbundle {

std::vector<std::string> BrauerClass2::to_strings() const {
  std::vector<std::string> out;
  for (const auto& p : ram_) out.push_back(p.to_string());
  return out;
}

std::string BrauerClass2::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& p : ram_) {
    s += (first ? "" : ", ") + p.to_string();
    first = false;
  }
  return s + "}";
}

BrauerClass2& BrauerClass2::operator+=(const BrauerClass2& o) {
  for (const auto& p : o.ram_) {
    auto it = ram_.find(p);
    if (it != ram_.end()) ram_.erase(it);
    else ram_.insert(p);
  }
  return *this;
}

namespace {

Int pollard_brent(const Int& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Int y = 2, x, g = 1, q = 1, ys;
  unsigned long r = 1, m = 64;
  auto f = [&](const Int& v) {
    Int t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(Int(x - y));
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(abs(Int(x - ys)), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const Int& n, std::vector<Int>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Int d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_into(d, primes);
      factor_into(n / d, primes);
      return;
    }
  }
}

// Integer representative of the square class of a nonzero rational.
Int int_rep(const Rat& a) { return a.get_num() * a.get_den(); }

int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

unsigned split_valuation(Int& x, const Int& p) {
  unsigned v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    ++v;
  }
  return v;
}

int mod_small(const Int& x, unsigned long m) {
  return static_cast<int>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor(const Int& n_in) {
  Int n = abs(n_in);
  if (n == 0) throw InputError("factorization of zero");
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 1000 && n > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.push_back(Int(p));
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.push_back({p, 1});
  }
  return out;
}

int hilbert(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw InputError("Hilbert symbol of zero");
  if (v.infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.p;
  Int u = int_rep(a), w = int_rep(b);
  unsigned alpha = split_valuation(u, p), beta = split_valuation(w, p);
  int e = 0;
  if (p == 2) {
    auto eps = [](const Int& x) { return mod_small(x, 4) == 3 ? 1 : 0; };
    auto omega = [](const Int& x) {
      int r = mod_small(x, 8);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    e = eps(u) * eps(w) + static_cast<int>(alpha) * omega(w) + static_cast<int>(beta) * omega(u);
    return (e % 2) ? -1 : 1;
  }
  int s = 1;
  if ((alpha % 2) && (beta % 2) && mod_small(p, 4) == 3) s = -s;
  if (beta % 2) s *= legendre(u, p);
  if (alpha % 2) s *= legendre(w, p);
  return s;
}

BrauerClass2 class_of(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw InputError("quaternion symbol with a zero entry");
  std::set<Place> candidates{Place::prime(2)};
  for (const auto& x : {int_rep(a), int_rep(b)})
    for (const auto& [p, e] : factor(x))
      if (e % 2) candidates.insert(Place::prime(p));
  std::set<Place> ram;
  for (const auto& v : candidates)
    if (hilbert(a, b, v) < 0) ram.insert(v);
  if (hilbert(a, b, Place::infinity()) < 0) ram.insert(Place::infinity());
  if (ram.size() % 2) throw InternalError("Hilbert reciprocity violated for (" + to_string(a) + ", " + to_string(b) + ")");
  return BrauerClass2(std::move(ram));
}

BrauerClass2 hamilton() { return class_of(-1, -1); }

BrauerClass2 class_of_form(const TernaryForm& q) {
  auto d = diagonalize(q.matrix()).d;
  if (d[2] != 0) return class_of(-d[0] / d[2], -d[1] / d[2]);
  if (d[1] != 0) return class_of(d[0], d[1]);
  throw InputError("class of a form of rank < 2");
}

BrauerClass2 specialize(const FunctionSymbol& sym, const std::vector<Rat>& point) {
  BrauerClass2 out;
  for (const auto& [f, g] : sym.terms) {
    Rat x = f.evaluate(point), y = g.evaluate(point);
    if (x == 0 || y == 0) throw SamplingError("bad specialization point: a symbol entry vanishes");
    out += class_of(x, y);
  }
  return out;
}

std::string ComparisonResult::summary() const {
  std::ostringstream os;
  if (constant) os << "constant " << diff.to_string() << " at " << witnesses.size() << " points";
  else if (refutation) os << "refuted: " << values[refutation->first].to_string() << " vs " << values[refutation->second].to_string();
  else os << "no samples";
  return os.str();
}

namespace {

bool entries_nonzero(const FunctionSymbol& s, const std::vector<Rat>& p) {
  for (const auto& [f, g] : s.terms)
    if (f.evaluate(p) == 0 || g.evaluate(p) == 0) return false;
  return true;
}

template <class Sampler>
ComparisonResult sample_classes(const FunctionSymbol& s1, const FunctionSymbol* s2, const MPoly& delta, int n,
                                Sampler&& draw) {
  if (n < 1) throw InputError("sample count must be positive");
  ComparisonResult res;
  int budget = 200 * n + 2000;
  while (static_cast<int>(res.witnesses.size()) < n) {
    if (budget-- <= 0) throw SamplingError("could not find enough admissible sample points");
    std::vector<Rat> p = draw(budget);
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
    if (!delta.is_zero() && delta.evaluate(p) == 0) continue;
    if (!entries_nonzero(s1, p) || (s2 && !entries_nonzero(*s2, p))) continue;
    BrauerClass2 c = specialize(s1, p);
    if (s2) c += specialize(*s2, p);
    res.witnesses.push_back(p);
    res.values.push_back(c);
  }
  res.constant = true;
  res.diff = res.values[0];
  for (size_t i = 1; i < res.values.size(); ++i) {
    if (res.values[i] != res.values[0]) {
      res.constant = false;
      res.refutation = std::make_pair(size_t{0}, i);
      res.diff = BrauerClass2();
      break;
    }
  }
  return res;
}

}  // namespace

ComparisonResult compare_by_specialization(const FunctionSymbol& s1, const FunctionSymbol& s2, const MPoly& delta,
                                           int n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_classes(s1, &s2, delta, n, [&](int budget) {
    std::int64_t h = budget > 1000 ? 6 : 20;
    return std::vector<Rat>{Rat(rng.uniform(-h, h)), Rat(rng.uniform(-h, h)), Rat(rng.uniform(-h, h))};
  });
}

unsigned multiplicity(const MPoly& f, const MPoly& divisor) {
  if (f.is_zero()) throw InputError("multiplicity of the zero polynomial");
  if (divisor.is_constant()) throw InputError("divisor must be non-constant");
  unsigned m = 0;
  MPoly x = f;
  while (auto q = x.divide_exact(divisor)) {
    x = *q;
    ++m;
  }
  return m;
}

ResidueClass tame_residue(const FunctionSymbol& sym, const MPoly& divisor) {
  MPoly rep(1);
  for (const auto& [f, g] : sym.terms) {
    if (f.is_zero() || g.is_zero()) throw InputError("symbol entry is zero");
    unsigned m = multiplicity(f, divisor), n = multiplicity(g, divisor);
    MPoly f0 = f, g0 = g;
    for (unsigned i = 0; i < m; ++i) f0 = exact_div(f0, divisor);
    for (unsigned i = 0; i < n; ++i) g0 = exact_div(g0, divisor);
    // Exponents only matter modulo 2 in the square class.
    if ((m * n) % 2) rep = -rep;
    if (n % 2) rep *= f0;
    if (m % 2) rep *= g0;
  }
  MPoly reduced = rep.rem(divisor);
  if (reduced.is_zero()) throw InternalError("residue representative divisible by the divisor");
  return {divisor, reduced};
}

ComparisonResult constant_class_along_line(const FunctionSymbol& sym, const MPoly& line, const MPoly& delta, int n,
                                           std::uint64_t seed) {
  MPoly l = line.with_ring(Ring::uvw());
  if (l.total_degree() != 1 || !l.is_homogeneous()) throw InputError("line must be a nonzero linear form");
  RatMatrix row(1, 3);
  for (size_t i = 0; i < 3; ++i) row(0, i) = l.partial(i).constant_term();
  auto basis = kernel(row);
  for (auto& v : basis) {
    Int den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    for (auto& x : v) x *= den;
  }
  Rng rng(seed);
  return sample_classes(sym, nullptr, delta, n, [&](int budget) {
    std::int64_t h = budget > 1000 ? 8 : 30;
    Int s, t;
    do {
      s = rng.uniform(-h, h);
      t = rng.uniform(-h, h);
    } while (gcd(s, t) != 1);
    std::vector<Rat> p(3);
    for (size_t i = 0; i < 3; ++i) p[i] = s * basis[0][i] + t * basis[1][i];
    return p;
  });
}

}  // namespace cbundle
