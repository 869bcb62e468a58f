// Copyright 2026 The dudekit Authors
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

#include "dude/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dude/errors.hpp"
#include "dude/philox.hpp"

namespace dude {
namespace {

// Stream ids keep every random purpose on its own counter sequence, so
// e.g. adding an extra fading draw can never shift station positions.
constexpr uint16_t kStreamMacro = 1;
constexpr uint16_t kStreamFemto = 2;
constexpr uint16_t kStreamUsers = 3;
constexpr uint16_t kStreamFading = 4;
constexpr uint16_t kStreamScheduling = 5;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Uniform grid over the window for nearest-neighbor queries.  Points
// are bucketed once (counting sort) and queried with an expanding ring
// around the probe cell; the ring radius at which a cell can still
// beat the incumbent bounds the scan.
class PointGrid {
 public:
  void build(const std::vector<std::array<double, 2>>& pts,
             double half_width) {
    pts_ = &pts;
    hw_ = half_width;
    const int target = static_cast<int>(std::sqrt(
        static_cast<double>(std::max<std::size_t>(pts.size(), 1))));
    n_ = std::clamp(target, 1, 256);
    cell_ = 2.0 * hw_ / n_;
    starts_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);
    order_.resize(pts.size());
    for (const auto& p : pts) ++starts_[flat(cell_of(p[0]), cell_of(p[1])) + 1];
    for (std::size_t i = 1; i < starts_.size(); ++i) starts_[i] += starts_[i - 1];
    std::vector<int> fill(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      const std::size_t c = flat(cell_of(pts[i][0]), cell_of(pts[i][1]));
      order_[starts_[c] + fill[c]++] = i;
    }
  }

  // Squared distance to the nearest point and its index; {+inf, -1}
  // when the grid is empty.
  std::pair<double, int> nearest2(double x, double y) const {
    double best_d2 = kInf;
    int best = -1;
    if (pts_->empty()) return {kInf, -1};
    const int ci = cell_of(x);
    const int cj = cell_of(y);
    const int max_ring = std::max(std::max(ci, n_ - 1 - ci),
                                  std::max(cj, n_ - 1 - cj));
    for (int ring = 0; ring <= max_ring; ++ring) {
      if (best >= 0) {
        // Any cell at Chebyshev ring distance `ring` is at least
        // (ring - 1) * cell_ away from a point inside the probe cell.
        const double reach = (ring - 1) * cell_;
        if (reach > 0.0 && reach * reach >= best_d2) break;
      }
      auto scan = [&](int i, int j) {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) return;
        const std::size_t c = flat(i, j);
        for (int k = starts_[c]; k < starts_[c + 1]; ++k) {
          const auto& p = (*pts_)[order_[k]];
          const double dx = p[0] - x;
          const double dy = p[1] - y;
          const double d2 = dx * dx + dy * dy;
          if (d2 < best_d2) {
            best_d2 = d2;
            best = order_[k];
          }
        }
      };
      if (ring == 0) {
        scan(ci, cj);
        continue;
      }
      for (int i = ci - ring; i <= ci + ring; ++i) {
        scan(i, cj - ring);
        scan(i, cj + ring);
      }
      for (int j = cj - ring + 1; j <= cj + ring - 1; ++j) {
        scan(ci - ring, j);
        scan(ci + ring, j);
      }
    }
    return {best_d2, best};
  }

 private:
  int cell_of(double v) const {
    return std::clamp(static_cast<int>((v + hw_) / cell_), 0, n_ - 1);
  }
  std::size_t flat(int i, int j) const {
    return static_cast<std::size_t>(j) * n_ + i;
  }

  const std::vector<std::array<double, 2>>* pts_ = nullptr;
  double hw_ = 0.0;
  double cell_ = 0.0;
  int n_ = 1;
  std::vector<int> starts_;
  std::vector<int> order_;
};

void draw_points(PhiloxRng& rng, double density, double half_width,
                 std::vector<std::array<double, 2>>* out) {
  const double area = 4.0 * half_width * half_width;
  const uint64_t n = rng.next_poisson(density * area);
  out->resize(n);
  for (auto& p : *out) {
    p[0] = (2.0 * rng.next_uniform() - 1.0) * half_width;
    p[1] = (2.0 * rng.next_uniform() - 1.0) * half_width;
  }
}

// One sampling attempt; empty processes make the attempt unusable and
// the caller retries under the next salt.
std::optional<Realization> realize_once(const NetworkConfig& cfg,
                                        double ue_density, double window_km,
                                        uint64_t seed, uint64_t drop,
                                        uint16_t salt) {
  Realization r;
  r.half_width = 0.5 * window_km;
  r.seed = seed;
  r.drop = drop;
  r.salt = salt;
  PhiloxRng macro_rng(seed, drop, kStreamMacro, salt);
  PhiloxRng femto_rng(seed, drop, kStreamFemto, salt);
  PhiloxRng user_rng(seed, drop, kStreamUsers, salt);
  draw_points(macro_rng, cfg.macro.density, r.half_width, &r.macro_bs);
  draw_points(femto_rng, cfg.femto.density, r.half_width, &r.femto_bs);
  draw_points(user_rng, ue_density, r.half_width, &r.ues);
  if (r.macro_bs.empty() || r.femto_bs.empty() || r.ues.empty()) {
    return std::nullopt;
  }
  return r;
}

void check_window(const NetworkConfig& cfg, double window_km) {
  if (!(window_km > 0.0) || !std::isfinite(window_km)) {
    throw ConfigError("window_km must be positive and finite");
  }
  const double area = window_km * window_km;
  const double sparse = std::min(cfg.macro.density, cfg.femto.density);
  if (sparse * area < 50.0) {
    throw ConfigError(
        "window side " + std::to_string(window_km) +
        " km gives the sparser tier an expected station count below 50; "
        "enlarge the window");
  }
}

struct TaggedEval {
  DropResult result;
  bool ul_macro_mixed = false;  // downlink femto, uplink macro
  std::array<double, 2> ue_pos{};
  std::array<double, 2> bs_pos{};
};

// Full pipeline for one snapshot: associate every user on the uplink
// rule, schedule one user per occupied station, and evaluate the
// tagged user's SIR against every scheduled co-channel transmitter.
TaggedEval evaluate_drop(const Realization& r, const NetworkConfig& cfg,
                         const AssociationLaw& law, FadingMode fading) {
  const int n_m = static_cast<int>(r.macro_bs.size());
  const int n_f = static_cast<int>(r.femto_bs.size());
  const int n_u = static_cast<int>(r.ues.size());
  const int n_bs = n_m + n_f;
  if (n_u == 0 || n_bs == 0) {
    throw ConfigError("realization has no users or no stations");
  }

  PointGrid macro_grid, femto_grid;
  macro_grid.build(r.macro_bs, r.half_width);
  femto_grid.build(r.femto_bs, r.half_width);

  // Uplink association: tier by biased weight over the nearest station
  // of each tier (macro wins exact ties), station = nearest in tier.
  // With one shared path-loss exponent the weight comparison
  //   w_m d_m^-a >= w_f d_f^-a   <=>   d_f^2 >= (w_f / w_m)^(2/a) d_m^2
  // runs on squared distances with no pow per user; unequal exponents
  // fall back to evaluating the weights directly.
  const bool equal_alpha = law.alpha_m == law.alpha_f;
  const double ul_ratio2 =
      equal_alpha
          ? std::pow(law.ul_weight_f / law.ul_weight_m, 2.0 / law.alpha_m)
          : 0.0;
  auto ul_macro_wins = [&](double dm2, double df2) {
    if (equal_alpha) return df2 >= ul_ratio2 * dm2;
    return law.ul_weight_m * std::pow(dm2, -0.5 * law.alpha_m) >=
           law.ul_weight_f * std::pow(df2, -0.5 * law.alpha_f);
  };
  std::vector<int> ul_bs(n_u, -1);
  std::vector<double> ul_d2(n_u, 0.0);
  std::vector<int> bs_load(n_bs, 0);
  int tagged = 0;
  double tagged_d2 = kInf;
  for (int u = 0; u < n_u; ++u) {
    const auto& p = r.ues[u];
    const auto [dm2, im] = macro_grid.nearest2(p[0], p[1]);
    const auto [df2, jf] = femto_grid.nearest2(p[0], p[1]);
    if (ul_macro_wins(dm2, df2)) {
      ul_bs[u] = im;
      ul_d2[u] = dm2;
    } else {
      ul_bs[u] = n_m + jf;
      ul_d2[u] = df2;
    }
    ++bs_load[ul_bs[u]];
    const double c2 = p[0] * p[0] + p[1] * p[1];
    if (c2 < tagged_d2) {
      tagged_d2 = c2;
      tagged = u;
    }
  }

  // Bucket users by station for scheduling.
  std::vector<int> starts(n_bs + 1, 0);
  for (int g = 0; g < n_bs; ++g) starts[g + 1] = starts[g] + bs_load[g];
  std::vector<int> members(n_u);
  {
    std::vector<int> fill(n_bs, 0);
    for (int u = 0; u < n_u; ++u) {
      const int g = ul_bs[u];
      members[starts[g] + fill[g]++] = u;
    }
  }

  // Tagged user's two-sided association.
  const auto& tp = r.ues[tagged];
  const auto [dm2, im] = macro_grid.nearest2(tp[0], tp[1]);
  const auto [df2, jf] = femto_grid.nearest2(tp[0], tp[1]);
  (void)im;
  (void)jf;
  bool dl_macro;
  if (equal_alpha) {
    dl_macro = df2 >= std::pow(law.dl_weight_f / law.dl_weight_m,
                               2.0 / law.alpha_m) *
                          dm2;
  } else {
    dl_macro = law.dl_weight_m * std::pow(dm2, -0.5 * law.alpha_m) >=
               law.dl_weight_f * std::pow(df2, -0.5 * law.alpha_f);
  }
  const int tagged_bs = ul_bs[tagged];
  const bool ul_macro = tagged_bs < n_m;

  TaggedEval out;
  out.ue_pos = tp;
  out.bs_pos = ul_macro ? r.macro_bs[tagged_bs] : r.femto_bs[tagged_bs - n_m];
  if (dl_macro && ul_macro) {
    out.result.tagged_case = AssociationCase::kMacroBoth;
  } else if (!dl_macro && !ul_macro) {
    out.result.tagged_case = AssociationCase::kFemtoBoth;
  } else if (dl_macro && !ul_macro) {
    out.result.tagged_case = AssociationCase::kMacroDlFemtoUl;
  } else {
    // Downlink femto with uplink macro: representable only as a flag,
    // not as an AssociationCase; run_drop turns it into a throw.
    out.ul_macro_mixed = true;
    out.result.tagged_case = AssociationCase::kMacroDlFemtoUl;
  }

  const Tier serving = ul_macro ? Tier::kMacro : Tier::kFemto;
  const TierConfig& st = cfg.tier(serving);
  const double alpha_k = st.alpha;
  const double x0 = std::sqrt(ul_d2[tagged]);
  out.result.serving_tier = serving;
  out.result.serving_distance = x0;
  out.result.load = static_cast<uint64_t>(bs_load[tagged_bs]);

  // Schedule one user per occupied station (uniformly), conditioning
  // the tagged station on serving the tagged user.
  std::vector<int> scheduled(n_bs, -1);
  PhiloxRng sched_rng(r.seed, r.drop, kStreamScheduling, r.salt);
  for (int g = 0; g < n_bs; ++g) {
    const int k = bs_load[g];
    if (k == 0) continue;
    const int pick = std::min(
        static_cast<int>(sched_rng.next_uniform() * k), k - 1);
    scheduled[g] = members[starts[g] + pick];
  }
  scheduled[tagged_bs] = tagged;

  // Channel draws: the receiver combines its antennas toward the
  // served user, so the signal picks up the full vector norm while
  // each interferer projects onto the (unit-power) combining direction.
  PhiloxRng fade_rng(r.seed, r.drop, kStreamFading, r.salt);
  const int n_ant = st.antennas;
  double signal_gain = 1.0;
  std::vector<double> h_re, h_im;
  double h_norm2 = 1.0;
  switch (fading) {
    case FadingMode::kDistribution:
      signal_gain = fade_rng.next_gamma(n_ant);
      break;
    case FadingMode::kExplicitVectors: {
      h_re.resize(n_ant);
      h_im.resize(n_ant);
      h_norm2 = 0.0;
      for (int a = 0; a < n_ant; ++a) {
        const auto z = fade_rng.next_normal_pair();
        h_re[a] = z[0] * M_SQRT1_2;
        h_im[a] = z[1] * M_SQRT1_2;
        h_norm2 += h_re[a] * h_re[a] + h_im[a] * h_im[a];
      }
      signal_gain = h_norm2;
      break;
    }
    case FadingMode::kUnit:
      signal_gain = 1.0;
      break;
  }

  const double eta = cfg.eta;
  double interference = 0.0;
  for (int g = 0; g < n_bs; ++g) {
    if (g == tagged_bs || scheduled[g] < 0) continue;
    const int u = scheduled[g];
    double gain = 1.0;
    switch (fading) {
      case FadingMode::kDistribution:
        gain = fade_rng.next_exp();
        break;
      case FadingMode::kExplicitVectors: {
        double dot_re = 0.0;
        double dot_im = 0.0;
        for (int a = 0; a < n_ant; ++a) {
          const auto z = fade_rng.next_normal_pair();
          const double g_re = z[0] * M_SQRT1_2;
          const double g_im = z[1] * M_SQRT1_2;
          dot_re += h_re[a] * g_re + h_im[a] * g_im;
          dot_im += h_re[a] * g_im - h_im[a] * g_re;
        }
        gain = (dot_re * dot_re + dot_im * dot_im) / h_norm2;
        break;
      }
      case FadingMode::kUnit:
        gain = 1.0;
        break;
    }
    const double alpha_tx = (ul_bs[u] < n_m) ? law.alpha_m : law.alpha_f;
    const auto& up = r.ues[u];
    const double dx = up[0] - out.bs_pos[0];
    const double dy = up[1] - out.bs_pos[1];
    const double d2 = dx * dx + dy * dy;
    const double inverted =
        eta == 0.0 ? 1.0 : std::pow(ul_d2[u], 0.5 * eta * alpha_tx);
    interference += gain * inverted * std::pow(d2, -0.5 * alpha_k);
  }

  // The common power-control constant cancels from the ratio.
  const double signal = signal_gain * std::pow(x0, -alpha_k * (1.0 - eta));
  double sir = interference > 0.0 ? signal / interference : kInf;
  if (std::isnan(sir)) sir = 0.0;  // inf/inf, measure-zero geometry
  out.result.sir = sir;
  out.result.rate = cfg.bandwidth_hz /
                    static_cast<double>(out.result.load) * std::log2(1.0 + sir);
  return out;
}

struct Tallies {
  uint64_t drops = 0;
  std::vector<uint64_t> sir_succ;
  std::array<std::vector<uint64_t>, 2> sir_succ_tier;
  std::vector<uint64_t> rate_succ;
  std::array<std::vector<uint64_t>, 2> rate_succ_tier;
  std::array<uint64_t, 2> tier_drops{};
  std::array<uint64_t, 3> case_counts{};
  uint64_t violations = 0;
  uint64_t load_sum = 0;
  uint64_t resamples = 0;

  void init(std::size_t n_tau, std::size_t n_rho) {
    sir_succ.assign(n_tau, 0);
    sir_succ_tier[0].assign(n_tau, 0);
    sir_succ_tier[1].assign(n_tau, 0);
    rate_succ.assign(n_rho, 0);
    rate_succ_tier[0].assign(n_rho, 0);
    rate_succ_tier[1].assign(n_rho, 0);
  }

  void merge(const Tallies& o) {
    drops += o.drops;
    for (std::size_t i = 0; i < sir_succ.size(); ++i) {
      sir_succ[i] += o.sir_succ[i];
      sir_succ_tier[0][i] += o.sir_succ_tier[0][i];
      sir_succ_tier[1][i] += o.sir_succ_tier[1][i];
    }
    for (std::size_t i = 0; i < rate_succ.size(); ++i) {
      rate_succ[i] += o.rate_succ[i];
      rate_succ_tier[0][i] += o.rate_succ_tier[0][i];
      rate_succ_tier[1][i] += o.rate_succ_tier[1][i];
    }
    tier_drops[0] += o.tier_drops[0];
    tier_drops[1] += o.tier_drops[1];
    for (int i = 0; i < 3; ++i) case_counts[i] += o.case_counts[i];
    violations += o.violations;
    load_sum += o.load_sum;
    resamples += o.resamples;
  }
};

void validate_options(const NetworkConfig& cfg, const SimOptions& opt) {
  cfg.validate();
  check_window(cfg, opt.window_km);
  if (opt.n_drops == 0) throw ConfigError("n_drops must be at least 1");
  if (!(opt.guard_fraction >= 0.0) || opt.guard_fraction > 0.45) {
    throw ConfigError("guard_fraction must lie in [0, 0.45]");
  }
  if (opt.max_resample < 1) throw ConfigError("max_resample must be >= 1");
  if (opt.ue_density_override < 0.0 ||
      !std::isfinite(opt.ue_density_override)) {
    throw ConfigError("ue_density_override must be finite and >= 0");
  }
  for (double t : opt.tau_grid) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw ConfigError("tau grid entries must be finite and >= 0");
    }
  }
  for (double t : opt.rho_grid) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw ConfigError("rho grid entries must be finite and >= 0");
    }
  }
  const double ue_density =
      opt.ue_density_override > 0.0 ? opt.ue_density_override : cfg.ue_density;
  const double area = opt.window_km * opt.window_km;
  const double points =
      (cfg.macro.density + cfg.femto.density + ue_density) * area;
  if (points > 5e7) {
    throw ConfigError("expected point count exceeds 5e7 per drop; "
                      "shrink the window or the densities");
  }
}

// Runs drops [lo, hi) into `tal`.  Each drop retries under fresh salts
// until the snapshot is non-degenerate and the tagged link clears the
// border guard.
void run_drop_range(const NetworkConfig& cfg, const AssociationLaw& law,
                    const SimOptions& opt, double ue_density, uint64_t lo,
                    uint64_t hi, Tallies* tal) {
  const double inner = (1.0 - opt.guard_fraction) * 0.5 * opt.window_km;
  for (uint64_t d = lo; d < hi; ++d) {
    bool done = false;
    for (int salt = 0; salt < opt.max_resample; ++salt) {
      auto r = realize_once(cfg, ue_density, opt.window_km, opt.seed, d,
                            static_cast<uint16_t>(salt));
      if (!r) {
        ++tal->resamples;
        continue;
      }
      const TaggedEval ev = evaluate_drop(*r, cfg, law, opt.fading);
      if (std::fabs(ev.ue_pos[0]) > inner || std::fabs(ev.ue_pos[1]) > inner ||
          std::fabs(ev.bs_pos[0]) > inner || std::fabs(ev.bs_pos[1]) > inner) {
        ++tal->resamples;
        continue;
      }
      ++tal->drops;
      const int tier_idx = ev.result.serving_tier == Tier::kMacro ? 0 : 1;
      ++tal->tier_drops[tier_idx];
      for (std::size_t i = 0; i < opt.tau_grid.size(); ++i) {
        if (ev.result.sir > opt.tau_grid[i]) {
          ++tal->sir_succ[i];
          ++tal->sir_succ_tier[tier_idx][i];
        }
      }
      for (std::size_t i = 0; i < opt.rho_grid.size(); ++i) {
        if (ev.result.rate > opt.rho_grid[i]) {
          ++tal->rate_succ[i];
          ++tal->rate_succ_tier[tier_idx][i];
        }
      }
      ++tal->case_counts[static_cast<int>(ev.result.tagged_case) - 1];
      if (ev.ul_macro_mixed) ++tal->violations;
      tal->load_sum += ev.result.load;
      done = true;
      break;
    }
    if (!done) {
      throw NumericError("drop " + std::to_string(d) +
                         ": resample budget exhausted (degenerate window?)");
    }
  }
}

SimEstimate finalize(const SimOptions& opt, const Tallies& tal) {
  SimEstimate est;
  est.drops = tal.drops;
  est.sir_successes = tal.sir_succ;
  est.sir_successes_tier = tal.sir_succ_tier;
  est.rate_successes = tal.rate_succ;
  est.rate_successes_tier = tal.rate_succ_tier;
  est.tier_drops = tal.tier_drops;
  est.case_counts = tal.case_counts;
  est.violation_count = tal.violations;
  est.load_sum = tal.load_sum;
  est.resample_total = tal.resamples;

  const double n = static_cast<double>(std::max<uint64_t>(tal.drops, 1));
  est.sir_coverage.resize(opt.tau_grid.size());
  est.sir_ci.resize(opt.tau_grid.size());
  for (std::size_t i = 0; i < opt.tau_grid.size(); ++i) {
    est.sir_coverage[i] = static_cast<double>(tal.sir_succ[i]) / n;
    est.sir_ci[i] = wilson_half_width(tal.sir_succ[i], tal.drops);
  }
  est.rate_coverage.resize(opt.rho_grid.size());
  est.rate_ci.resize(opt.rho_grid.size());
  for (std::size_t i = 0; i < opt.rho_grid.size(); ++i) {
    est.rate_coverage[i] = static_cast<double>(tal.rate_succ[i]) / n;
    est.rate_ci[i] = wilson_half_width(tal.rate_succ[i], tal.drops);
  }
  for (int i = 0; i < 3; ++i) {
    est.case_fraction[i] = static_cast<double>(tal.case_counts[i]) / n;
  }
  est.mean_load = static_cast<double>(tal.load_sum) / n;
  return est;
}

}  // namespace

double wilson_half_width(uint64_t successes, uint64_t trials) {
  if (trials == 0) return 1.0;
  constexpr double z = 1.959963984540054;  // 97.5% normal quantile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  return z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) /
         (1.0 + z2 / n);
}

Realization realize(const NetworkConfig& cfg, double window_km, uint64_t seed,
                    uint64_t drop) {
  cfg.validate();
  check_window(cfg, window_km);
  for (int salt = 0; salt < 64; ++salt) {
    auto r = realize_once(cfg, cfg.ue_density, window_km, seed, drop,
                          static_cast<uint16_t>(salt));
    if (r) {
      r->resample_attempts = salt;
      return *std::move(r);
    }
  }
  throw NumericError("realize: resample budget exhausted; the window holds "
                     "too few points on average");
}

DropResult run_drop(const Realization& r, const NetworkConfig& cfg,
                    FadingMode fading) {
  cfg.validate();
  const AssociationLaw law = resolve_law(cfg);
  const TaggedEval ev = evaluate_drop(r, cfg, law, fading);
  if (ev.ul_macro_mixed) {
    throw AssociationViolation(
        "tagged user takes downlink from a femto station but uplink to a "
        "macro station; no AssociationCase names this pair");
  }
  return ev.result;
}

SimEstimate estimate_serial(const NetworkConfig& cfg, const SimOptions& opt) {
  validate_options(cfg, opt);
  const AssociationLaw law = resolve_law(cfg);
  const double ue_density =
      opt.ue_density_override > 0.0 ? opt.ue_density_override : cfg.ue_density;
  Tallies tal;
  tal.init(opt.tau_grid.size(), opt.rho_grid.size());
  run_drop_range(cfg, law, opt, ue_density, 0, opt.n_drops, &tal);
  return finalize(opt, tal);
}

SimEstimate estimate(const NetworkConfig& cfg, const SimOptions& opt) {
  validate_options(cfg, opt);
  const AssociationLaw law = resolve_law(cfg);
  const double ue_density =
      opt.ue_density_override > 0.0 ? opt.ue_density_override : cfg.ue_density;
  Tallies tal;
  tal.init(opt.tau_grid.size(), opt.rho_grid.size());

  std::string error;
#ifdef _OPENMP
#pragma omp parallel
  {
    Tallies local;
    local.init(opt.tau_grid.size(), opt.rho_grid.size());
    const int nt = omp_get_num_threads();
    const int id = omp_get_thread_num();
    const uint64_t chunk = (opt.n_drops + nt - 1) / nt;
    const uint64_t lo = std::min<uint64_t>(id * chunk, opt.n_drops);
    const uint64_t hi = std::min<uint64_t>(lo + chunk, opt.n_drops);
    try {
      run_drop_range(cfg, law, opt, ue_density, lo, hi, &local);
    } catch (const std::exception& e) {
#pragma omp critical
      if (error.empty()) error = e.what();
    }
    // Tally merging is pure integer addition, so the merge order (and
    // hence the thread count) cannot change the result.
#pragma omp critical
    tal.merge(local);
  }
#else
  try {
    run_drop_range(cfg, law, opt, ue_density, 0, opt.n_drops, &tal);
  } catch (const std::exception& e) {
    error = e.what();
  }
#endif
  if (!error.empty()) throw NumericError(error);
  return finalize(opt, tal);
}

}  // namespace dude
