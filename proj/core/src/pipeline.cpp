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

#include "cbundle/pipeline.hpp"

#include <chrono>
#include <functional>

#include "cbundle/errors.hpp"
#include "cbundle/quadric_builder.hpp"
#include "cbundle/random.hpp"
#include "cbundle/svg.hpp"

namespace cbundle {

void apply_pgl2(const std::vector<Rat>& m, TernaryForm& q1, TernaryForm& q2, TernaryForm& q3) {
  if (m.size() != 4 || m[0] * m[3] - m[1] * m[2] == 0) throw InputError("PGL2 substitution must be invertible");
  const Rat &a = m[0], &b = m[1], &c = m[2], &d = m[3];
  const RatMatrix &M1 = q1.matrix(), &M2 = q2.matrix(), &M3 = q3.matrix();
  RatMatrix n1 = (a * a) * M1 + (2 * a * c) * M2 + (c * c) * M3;
  RatMatrix n2 = (a * b) * M1 + (a * d + b * c) * M2 + (c * d) * M3;
  RatMatrix n3 = (b * b) * M1 + (2 * b * d) * M2 + (d * d) * M3;
  q1 = TernaryForm(n1);
  q2 = TernaryForm(n2);
  q3 = TernaryForm(n3);
}

std::optional<Pgl2Move> pgl2_search(const TernaryForm& q1, const TernaryForm& q2, const TernaryForm& q3, int bound) {
  auto good = [&](const Int& p, const Int& q) {
    RatMatrix m = Rat(p * p) * q1.matrix() + Rat(2 * p * q) * q2.matrix() + Rat(q * q) * q3.matrix();
    auto rd = rank_disc(TernaryForm(m));
    return rd.rank == 3 && rd.disc_is_square;
  };
  auto move = [](const Int& p, const Int& q) {
    Pgl2Move mv;
    mv.point = {Rat(p), Rat(q)};
    if (p == 0) {
      mv.matrix = {0, 1, 1, 0};
      return mv;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    // p s + q t = 1, so (a b; c d) = (p -t; q s) has determinant 1.
    mv.matrix = {Rat(p), Rat(-t), Rat(q), Rat(s)};
    return mv;
  };
  if (good(1, 0)) return move(1, 0);
  if (bound >= 1 && good(0, 1)) return move(0, 1);
  for (int h = 1; h <= bound; ++h)
    for (int q = 1; q <= h; ++q)
      for (int p = -h; p <= h; ++p) {
        if (p == 0 || std::max(std::abs(p), q) != h || gcd(Int(p), Int(q)) != 1) continue;
        if (good(p, q)) return move(p, q);
      }
  return std::nullopt;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification_failed";
    case Status::rejected: return "rejected";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::verification_failed: return 1;
    case Status::rejected: return 2;
  }
  return 2;
}

namespace {

struct Halt {};

class Run {
 public:
  Run(AnalysisReport& rep, const AnalyzeOptions& opt) : rep_(rep), opt_(opt) {}

  void reject(const std::string& stage, const std::string& msg) {
    rep_.status = Status::rejected;
    rep_.stage = stage;
    rep_.message = msg;
    throw Halt{};
  }
  void fail(const std::string& stage, const std::string& msg) {
    rep_.status = Status::verification_failed;
    rep_.stage = stage;
    rep_.message = msg;
    throw Halt{};
  }
  // Counts one named check and halts on failure.
  void check(const std::string& stage, const std::string& name, bool pass, const std::string& residual = "0") {
    ++rep_.checks_total;
    if (pass) {
      ++rep_.checks_passed;
      return;
    }
    fail(stage, name + " failed, residual " + residual);
  }
  void checks(const std::string& stage, const VerificationReport& vr) {
    for (const auto& c : vr.checks) check(stage, c.name, c.pass, c.residual);
  }
  template <class F>
  void timed(const std::string& stage, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    if (opt_.timings) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rep_.doc["timings_ms"][stage] = ms;
    }
  }

 private:
  AnalysisReport& rep_;
  const AnalyzeOptions& opt_;
};

}  // namespace

AnalysisReport analyze(const InstanceInput& in, const AnalyzeOptions& opt) {
  AnalysisReport rep;
  Json& doc = rep.doc;
  doc["schema"] = "1";
  doc["seed"] = opt.seed;
  doc["samples"] = opt.samples;
  doc["input"] = to_json(in);
  doc["hypotheses_assumed"] = Json::array({
      "the intermediate Jacobian torsor obstruction vanishes (not decided here)",
      "the rational point of the Prym curve is the one at [1:0] after normalization",
  });
  Run run(rep, opt);
  TernaryForm q1 = in.q1, q2 = in.q2, q3 = in.q3;
  try {
    try {
      if (in.pgl2) {
        apply_pgl2(*in.pgl2, q1, q2, q3);
        Json j;
        j["source"] = "input";
        for (const auto& x : *in.pgl2) j["matrix"].push_back(to_string(x));
        doc["pgl2"] = j;
      } else if (opt.height_bound > 0) {
        auto rd = rank_disc(q1);
        if (rd.rank == 3 && !rd.disc_is_square) {
          Json j;
          j["source"] = "search";
          j["height_bound"] = opt.height_bound;
          auto mv = pgl2_search(q1, q2, q3, opt.height_bound);
          if (mv) {
            apply_pgl2(mv->matrix, q1, q2, q3);
            for (const auto& x : mv->matrix) j["matrix"].push_back(to_string(x));
            j["point"] = Json::array({to_string(mv->point[0]), to_string(mv->point[1])});
            j["disc_after"] = to_string(rank_disc(q1).disc);
          } else {
            j["found"] = false;
          }
          doc["pgl2"] = j;
        }
      }

      CoverSpec spec;
      run.timed("cover", [&] {
        spec = build_cover(q1, q2, q3, derive_seed(opt.seed, 1));
        Json c;
        c["delta"] = to_json(spec.delta);
        c["W"] = to_json(spec.W);
        c["separable"] = spec.separable_certified;
        c["smooth"] = to_json(spec.smooth);
        doc["cover"] = c;
      });
      if (!spec.separable_certified) run.reject("separability", "the sextic det(t0^2 M1 + 2 t0 t1 M2 + t1^2 M3) is not separable");
      if (!spec.smooth_certified) {
        if (spec.smooth.verdict == SmoothVerdict::inconclusive_retry)
          run.reject("smoothness", "smoothness of the quartic could not be certified");
        run.reject("smoothness", "the quartic Q2^2 - Q1 Q3 is singular");
      }
      run.check("cover", "smooth", true);
      run.check("cover", "separable", true);

      std::optional<QuadricPencil> pencil;
      if (opt.pencil || opt.verify || opt.brauer) {
        run.timed("pencil", [&] {
          try {
            pencil = build_pencil(spec);
          } catch (const DispatchError& e) {
            run.reject("dispatch", e.what());
          }
          Json p;
          p["case"] = to_string(pencil->kase);
          p["a"] = to_string(pencil->a);
          p["b"] = to_string(pencil->b);
          p["change"]["g"] = to_json(pencil->change.g);
          p["change"]["scale2"] = to_string(pencil->change.scale2);
          p["change"]["scale3"] = to_string(pencil->change.scale3);
          p["A0"] = to_json(pencil->A0);
          p["Ainf"] = to_json(pencil->Ainf);
          p["q0"] = to_json(pencil->q0);
          p["qinf"] = to_json(pencil->qinf);
          doc["pencil"] = p;
        });
      }

      if (opt.verify) {
        run.timed("verify", [&] {
          auto vr = verify_pencil(*pencil, spec);
          doc["pencil"]["checks"] = to_json(vr);
          run.checks("pencil", vr);
          auto mr = verify_minors(fiber_form(*pencil), *pencil);
          doc["minors"] = to_json(mr);
          run.checks("minors", mr);
        });
      }

      if (opt.brauer) {
        run.timed("brauer", [&] {
          auto sym = generic_fiber_symbol(*pencil);
          doc["symbols"]["Y"] = to_json(sym.y_symbol);
          doc["symbols"]["BlCZ"] = to_json(sym.raw);
          BrauerClass2 expected = class_of(pencil->a, pencil->b);
          ComparisonResult cmp;
          try {
            cmp = compare_by_specialization(sym.raw, sym.y_symbol, sym.delta, opt.samples, derive_seed(opt.seed, 2));
          } catch (const SamplingError& e) {
            run.fail("constant_difference", e.what());
          }
          Json cd = to_json(cmp);
          cd["expected"] = to_json(expected);
          doc["constant_difference"] = cd;
          run.check("constant_difference", "constant", cmp.constant, cmp.summary());
          rep.constant_difference = cmp.diff;
          run.check("constant_difference", "equals_class_of_ab", cmp.diff == expected, cmp.diff.to_string());

          BrauerClass2 fiber = class_of_form(TernaryForm::from_poly(sym.q1));
          Json fc;
          fc["class_of_fiber_at_infinity"] = to_json(fiber);
          fc["pass"] = fiber == expected;
          doc["fiber_consistency"] = fc;
          run.check("fiber_consistency", "fiber_class", fiber == expected, fiber.to_string());

          auto res = tame_residue(sym.y_symbol, sym.delta);
          bool same = (res.rep - sym.q1).rem(sym.delta).is_zero();
          Json rj;
          rj["representative"] = to_json(res.rep);
          rj["equals_Q1_mod_delta"] = same;
          doc["residue"] = rj;
          run.check("residue", "residue_is_Q1", same, res.rep.to_string());

          if (in.line) {
            // The line is given in input coordinates; move it with the normalization.
            MPoly l = in.line->substitute({MPoly::variable(Ring::uvw(), 0), MPoly::variable(Ring::uvw(), 1),
                                           MPoly::variable(Ring::uvw(), 2)});
            std::vector<MPoly> img(3);
            const RatMatrix& g = pencil->change.g;
            for (size_t i = 0; i < 3; ++i)
              for (size_t j = 0; j < 3; ++j) img[i] += MPoly::variable(Ring::uvw(), j).scaled(g(i, j));
            MPoly ln = l.substitute(img);
            auto lc = constant_class_along_line(sym.raw, ln, sym.delta, opt.samples, derive_seed(opt.seed, 4));
            Json lj = to_json(lc, false);
            lj["line"] = ln.to_string();
            // Only meaningful when the line comes from a point of the torsor,
            // which cannot be checked here; recorded, never counted.
            lj["counted"] = false;
            doc["line_class"] = lj;
          }
        });
      }

      if (opt.real) {
        run.timed("real", [&] {
          auto prof = signature_profile(spec);
          RealCurveTopology topo;
          try {
            topo = quartic_topology(spec, derive_seed(opt.seed, 3));
          } catch (const NonGenericError& e) {
            run.fail("real", e.what());
          }
          auto region = region_report(spec, topo);
          auto verdict = rationality_verdict(spec, prof, topo, region);
          Json r;
          r["profile"] = to_json(prof);
          r["topology"] = to_json(topo);
          r["region"] = to_json(region);
          r["section_exists"] = verdict.section_exists;
          r["gamma_real"] = verdict.gamma_real;
          r["verdict"] = to_string(verdict.verdict);
          int one_sign = 0, pairs = 0;
          for (const auto& cp : crossing_pairs(topo)) {
            ++pairs;
            Signature a = fiber_signature(spec, cp.below), b = fiber_signature(spec, cp.above);
            one_sign += a.zero == 0 && b.zero == 0 && std::abs(a.plus - b.plus) == 1;
          }
          r["one_sign_crossings"] = Json::array({one_sign, pairs});
          doc["real"] = r;
          rep.verdict = verdict;
          run.check("real", "boundary_law", region.consistent,
                    region.problems.empty() ? "" : region.problems.front());
          run.check("real", "one_sign_crossings", one_sign == pairs,
                    std::to_string(pairs - one_sign) + " bad pairs");
          if (opt.svg) rep.svg = render_svg(spec, topo, region);
        });
      }
    } catch (const InputError& e) {
      run.reject("input", e.what());
    }
  } catch (const Halt&) {
  }
  doc["status"] = to_string(rep.status);
  if (rep.status != Status::ok) {
    doc["stopped_at"] = rep.stage;
    doc["message"] = rep.message;
  }
  doc["summary"]["checks_passed"] = rep.checks_passed;
  doc["summary"]["checks_total"] = rep.checks_total;
  return rep;
}

}  // namespace cbundle
