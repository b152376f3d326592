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

#include "cbundle/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "cbundle/errors.hpp"

namespace cbundle {

const Ring* Ring::get(const std::vector<std::string>& names) {
  if (names.size() > kMaxArity) throw InputError("too many variables in ring");
  static std::mutex mu;
  static std::map<std::vector<std::string>, std::unique_ptr<Ring>> pool;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = pool[names];
  if (!slot) slot = std::make_unique<Ring>(names);
  return slot.get();
}

const Ring* Ring::uvw() { return get({"u", "v", "w"}); }
const Ring* Ring::t0t1() { return get({"t0", "t1"}); }
const Ring* Ring::T() { return get({"T"}); }
const Ring* Ring::x6() { return get({"x0", "x1", "x2", "x3", "x4", "x5"}); }
const Ring* Ring::xy() { return get({"x", "y"}); }

int Ring::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace mono {

Mono make(const std::vector<unsigned>& exps) {
  if (exps.size() > Ring::kMaxArity) throw InputError("exponent vector too long");
  unsigned tot = 0;
  Mono m = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    tot += exps[i];
    m |= static_cast<Mono>(exps[i]) << (8 * (6 - i));
  }
  if (tot > 255) throw InputError("total degree exceeds 255");
  return m | (static_cast<Mono>(tot) << 56);
}

bool divides(Mono d, Mono m, size_t arity) {
  for (size_t i = 0; i < arity; ++i)
    if (exp(d, i) > exp(m, i)) return false;
  return true;
}

}  // namespace mono

namespace {

Mono mono_mul(Mono a, Mono b) {
  if (mono::total(a) + mono::total(b) > 255) throw InputError("total degree exceeds 255");
  return a + b;
}

void sort_and_combine(std::vector<MPoly::Term>& t) {
  std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  size_t out = 0;
  for (size_t i = 0; i < t.size();) {
    Mono m = t[i].first;
    Rat c = t[i].second;
    size_t j = i + 1;
    for (; j < t.size() && t[j].first == m; ++j) c += t[j].second;
    if (c != 0) t[out++] = {m, c};
    i = j;
  }
  t.resize(out);
}

}  // namespace

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.push_back({0, c});
}

MPoly MPoly::variable(const Ring* ring, size_t index) {
  if (index >= ring->arity()) throw InputError("variable index out of range");
  std::vector<unsigned> e(ring->arity(), 0);
  e[index] = 1;
  return MPoly(ring, {{mono::make(e), Rat(1)}});
}

MPoly MPoly::variable(const Ring* ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw InputError("unknown variable '" + std::string(name) + "'");
  return variable(ring, static_cast<size_t>(i));
}

MPoly MPoly::monomial(const Ring* ring, const std::vector<unsigned>& exps, const Rat& c) {
  if (exps.size() != ring->arity()) throw InputError("exponent vector length does not match ring");
  if (c == 0) return MPoly(ring, {});
  return MPoly(ring, {{mono::make(exps), c}});
}

MPoly MPoly::from_terms(const Ring* ring, std::vector<Term> terms) {
  sort_and_combine(terms);
  return MPoly(ring, std::move(terms));
}

Rat MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == 0) return terms_.back().second;
  return 0;
}

int MPoly::degree(size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono::exp(m, var)));
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& [m, c] : terms_)
    if (mono::total(m) != mono::total(terms_[0].first)) return false;
  return true;
}

Rat MPoly::coeff(Mono m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Mono key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Ring* MPoly::unify(const MPoly& a, const MPoly& b) {
  if (a.ring_ == b.ring_) return a.ring_;
  if (a.is_constant()) return b.ring_ ? b.ring_ : a.ring_;
  if (b.is_constant()) return a.ring_;
  throw InputError("variable-set mismatch");
}

MPoly MPoly::merge(const MPoly& a, const MPoly& b, bool subtract) {
  const Ring* r = unify(a, b);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first > b.terms_[j].first)) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first > a.terms_[i].first) {
      out.push_back({b.terms_[j].first, subtract ? Rat(-b.terms_[j].second) : b.terms_[j].second});
      ++j;
    } else {
      Rat c = subtract ? Rat(a.terms_[i].second - b.terms_[j].second) : Rat(a.terms_[i].second + b.terms_[j].second);
      if (c != 0) out.push_back({a.terms_[i].first, c});
      ++i;
      ++j;
    }
  }
  return MPoly(r, std::move(out));
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) { return *this = merge(*this, o, false); }
MPoly& MPoly::operator-=(const MPoly& o) { return *this = merge(*this, o, true); }
MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  const Ring* r = MPoly::unify(a, b);
  if (a.is_zero() || b.is_zero()) return MPoly(r, {});
  std::vector<MPoly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.push_back({mono_mul(ma, mb), ca * cb});
  sort_and_combine(out);
  return MPoly(r, std::move(out));
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_ != b.terms_) return false;
  return a.ring_ == b.ring_ || a.is_constant();
}

MPoly MPoly::scaled(const Rat& c) const {
  if (c == 0) return MPoly(ring_, {});
  MPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1);
  result.ring_ = ring_;
  MPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

Rat MPoly::evaluate(const std::vector<Rat>& point) const {
  if (terms_.empty()) return 0;
  size_t n = ring_ ? ring_->arity() : 0;
  if (!is_constant() && point.size() != n) throw InputError("evaluation point has wrong dimension");
  std::vector<std::vector<Rat>> powers(n);
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < n; ++i) {
      unsigned e = mono::exp(m, i);
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      t *= pw[e];
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (is_constant()) return *this;
  if (images.size() != ring_->arity()) throw InputError("substitution arity does not match ring");
  size_t n = images.size();
  std::vector<std::vector<MPoly>> powers(n);
  MPoly sum;
  for (const auto& img : images) sum.ring_ = unify(sum, img);
  for (const auto& [m, c] : terms_) {
    MPoly t(c);
    for (size_t i = 0; i < n; ++i) {
      unsigned e = mono::exp(m, i);
      if (!e) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(MPoly(1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      t *= pw[e];
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::partial(size_t var) const {
  std::vector<Term> out;
  Mono unit = ring_ ? mono::make([&] {
    std::vector<unsigned> e(ring_->arity(), 0);
    e[var] = 1;
    return e;
  }()) : 0;
  for (const auto& [m, c] : terms_) {
    unsigned e = mono::exp(m, var);
    if (e) out.push_back({m - unit, c * e});
  }
  // Lowering one exponent by one keeps grlex order within a fixed degree
  // but can interleave degrees, so re-sort.
  return from_terms(ring_, std::move(out));
}

std::vector<MPoly> MPoly::coefficients(size_t var) const {
  int d = degree(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : d + 1);
  for (const auto& [m, c] : terms_) {
    unsigned e = mono::exp(m, var);
    Mono stripped = m - (static_cast<Mono>(e) << (8 * (6 - var))) - (static_cast<Mono>(e) << 56);
    buckets[e].push_back({stripped, c});
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

MPoly MPoly::with_ring(const Ring* target) const {
  if (target == ring_ || is_constant()) {
    MPoly r = *this;
    if (is_constant()) r.ring_ = target;
    return r;
  }
  std::vector<int> map(ring_->arity(), -1);
  for (size_t i = 0; i < ring_->arity(); ++i) map[i] = target->index_of(ring_->names()[i]);
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(target->arity(), 0);
    for (size_t i = 0; i < ring_->arity(); ++i) {
      unsigned k = mono::exp(m, i);
      if (!k) continue;
      if (map[i] < 0) throw InputError("variable '" + ring_->names()[i] + "' missing from target ring");
      e[map[i]] = k;
    }
    out.push_back({mono::make(e), c});
  }
  return from_terms(target, std::move(out));
}

std::pair<MPoly, MPoly> MPoly::divmod(const MPoly& d) const {
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  const Ring* r = unify(*this, d);
  size_t n = r ? r->arity() : 0;
  Mono dm = d.leading_mono();
  const Rat& dc = d.leading_coeff();
  MPoly p = *this;
  std::vector<Term> q, rem;
  while (!p.is_zero()) {
    Mono pm = p.leading_mono();
    if (mono::divides(dm, pm, n)) {
      Term t{pm - dm, p.leading_coeff() / dc};
      q.push_back(t);
      MPoly td(r, {t});
      p -= td * d;
    } else {
      rem.push_back(p.terms_.front());
      p.terms_.erase(p.terms_.begin());
    }
  }
  return {MPoly(r, std::move(q)), MPoly(r, std::move(rem))};
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("inexact polynomial division");
  return *q;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (a != 1 || m == 0) {
      os << cbundle::to_string(a);
      need_star = true;
    }
    for (size_t i = 0; ring_ && i < ring_->arity(); ++i) {
      unsigned e = mono::exp(m, i);
      if (!e) continue;
      if (need_star) os << "*";
      os << ring_->names()[i];
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(const Ring* ring, std::string_view s) : ring_(ring), s_(s) {}

  MPoly run() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p.with_ring(ring_);
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly p = term();
    for (;;) {
      if (eat('+')) p += term();
      else if (eat('-')) p -= term();
      else return p;
    }
  }

  MPoly term() {
    MPoly p = unary();
    for (;;) {
      if (eat('*')) {
        p *= unary();
      } else if (eat('/')) {
        MPoly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p = p.scaled(1 / d.constant_term());
      } else {
        return p;
      }
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly(Rat(Int(std::string(s_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      if (ring_->index_of(name) < 0) fail("unknown variable '" + std::string(name) + "'");
      return MPoly::variable(ring_, name);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const Ring* ring_;
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(const Ring* ring, std::string_view text) { return Parser(ring, text).run(); }

}  // namespace cbundle
