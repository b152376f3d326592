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

#include "cbundle/rational.hpp"

#include <cctype>

#include "cbundle/errors.hpp"

namespace cbundle {

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw InputError("empty integer literal");
  size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) throw InputError("bad integer literal '" + std::string(s) + "'");
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("bad integer literal '" + std::string(s) + "'");
  }
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

int sign(const Rat& r) { return sgn(r); }
int sign(const Int& z) { return sgn(z); }

bool is_square(const Int& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

bool is_square(const Rat& r) { return r >= 0 && is_square(r.get_num()) && is_square(r.get_den()); }

std::optional<Rat> sqrt_exact(const Rat& r) {
  if (!is_square(r)) return std::nullopt;
  Int n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(n, d);
}

Int squarefree_part(const Rat& r) {
  if (r == 0) return 0;
  // r = n/d ~ n*d modulo squares.
  Int m = r.get_num() * r.get_den();
  int s = sgn(m);
  m = abs(m);
  Int out = 1;
  Int p = 2;
  while (p * p <= m) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
    p += (p == 2) ? 1 : 2;
  }
  if (m > 1) out *= m;
  return s * out;
}

long valuation(const Rat& r, const Int& p) {
  if (r == 0) throw InputError("valuation of zero");
  long v = 0;
  Int n = r.get_num();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++v;
  }
  Int d = r.get_den();
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    --v;
  }
  return v;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace cbundle
