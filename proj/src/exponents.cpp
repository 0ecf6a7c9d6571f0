#include "vmvt/exponents.hpp"

#include <algorithm>
#include <tuple>

#include "vmvt/errors.hpp"

namespace vmvt {

namespace {

Rational half_k_k1(int k) { return Rational(long(k) * (k + 1), 2); }

long diagonal_cap(int k) {
  // floor((k+1)^2/4). For k = 2 this is s <= k (Newton-Girard), for k = 3 it is s = k + 1.
  return (long(k) + 1) * (k + 1) / 4;
}

EtaBound eta_families(long s, int k) {
  EtaBound best{s, k, half_k_k1(k) - Rational(std::min(s, diagonal_cap(k))), Provenance::diagonal, -1};
  // eta(s) <= eta(s') for s' <= s, so every threshold already passed applies.
  for (int m = 0; 2 * m <= k; ++m) {
    auto d = delta(k, m, DeltaCase::pronic);
    if (s >= d.threshold && d.value < best.value) {
      best.value = d.value;
      best.provenance = Provenance::pronic_threshold;
      best.m = m;
    }
  }
  for (int m = 0; 2 * m <= k - 1; ++m) {
    auto d = delta(k, m, DeltaCase::square_minus_one);
    if (s >= d.threshold && d.value < best.value) {
      best.value = d.value;
      best.provenance = Provenance::square_minus_one_threshold;
      best.m = m;
    }
  }
  return best;
}

struct Anchor {
  long s;
  Rational eta;
};

std::vector<Anchor> envelope_anchors(int k) {
  std::vector<Anchor> out;
  out.push_back({0, half_k_k1(k)});
  out.push_back({diagonal_cap(k), eta_families(diagonal_cap(k), k).value});
  for (int m = 0; 2 * m <= k; ++m) {
    auto d = delta(k, m, DeltaCase::pronic);
    out.push_back({d.threshold, eta_families(d.threshold, k).value});
  }
  for (int m = 0; 2 * m <= k - 1; ++m) {
    auto d = delta(k, m, DeltaCase::square_minus_one);
    if (d.threshold >= 1) out.push_back({d.threshold, eta_families(d.threshold, k).value});
  }
  for (int t = 2; t <= k; ++t) {
    for (int r = 1; r <= k; ++r) {
      VinogradovParams p{k, r, t};
      if (!p.admissible()) continue;
      Rational e = half_k_k1(k) - kappa(p);
      if (e.sign() < 0) e = Rational(0);
      out.push_back({long(r) * (t + 1), e});
    }
  }
  return out;
}

/// Lower convex hull of the anchors, sorted by s.
std::vector<Anchor> lower_hull(std::vector<Anchor> pts) {
  std::sort(pts.begin(), pts.end(), [](const Anchor& a, const Anchor& b) {
    return a.s != b.s ? a.s < b.s : a.eta < b.eta;
  });
  std::vector<Anchor> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && hull.back().s == p.s) continue;
    while (hull.size() >= 2) {
      const Anchor& a = hull[hull.size() - 2];
      const Anchor& b = hull.back();
      // drop b when it lies on or above the chord from a to p
      if ((b.eta - a.eta) * Rational(p.s - a.s) >= (p.eta - a.eta) * Rational(b.s - a.s)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  return hull;
}

EtaBound eta_envelope(long s, int k) {
  EtaBound best = eta_families(s, k);
  const auto anchors = envelope_anchors(k);
  auto improve = [&](const Rational& v) {
    if (v < best.value) {
      best.value = v;
      best.provenance = Provenance::convexity;
      best.m = -1;
    }
  };
  for (const auto& a : anchors) {
    if (a.s <= s) improve(a.eta);
  }
  const auto hull = lower_hull(anchors);
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const Anchor& a = hull[i];
    const Anchor& b = hull[i + 1];
    if (a.s < s && s < b.s) improve(a.eta + (b.eta - a.eta) * Rational(s - a.s, b.s - a.s));
  }
  return best;
}

}  // namespace

Rational kappa(const VinogradovParams& p) {
  p.validate();
  const long excess = long(p.t) + p.r - p.k;
  Rational inner = Rational(excess - 1) + Rational(2L * p.r - 2, p.t - 1);
  return Rational(long(p.r) * (p.t + 1)) - Rational(excess, 2) * inner;
}

MuNu mu_nu(const VinogradovParams& p) {
  p.validate();
  const long e = long(p.t) + p.r - p.k;
  const long mu2 = e * (e - 1);
  const long nu2 = e * (long(p.k) + p.r - p.t - 1);
  // e + (k+r-t-1) = 2r - 1 is odd, so one factor of nu2 is even.
  if (mu2 % 2 != 0 || nu2 % 2 != 0) throw InternalError("mu or nu not integral");
  return {mu2 / 2, nu2 / 2};
}

DeltaBound delta(int k, int m, DeltaCase which) {
  require(k >= 2, "delta: k >= 2 required");
  require(m >= 0, "delta: m >= 0 required");
  const long km = long(k) - m;
  if (which == DeltaCase::pronic) {
    require(2 * m <= k, "delta: 2m <= k required");
    return {Rational(long(m) * m), km * km + km};
  }
  require(2 * m <= k - 1, "delta: 2m <= k-1 required");
  require(km - 1 != 0, "delta: k - m - 1 must be nonzero");
  return {Rational(long(m) * m + m) + Rational(m, km - 1), km * km - 1};
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::diagonal: return "diagonal";
    case Provenance::pronic_threshold: return "pronic-threshold";
    case Provenance::square_minus_one_threshold: return "square-minus-one-threshold";
    case Provenance::pronic_family: return "pronic-family";
    case Provenance::square_minus_one_family: return "square-minus-one-family";
    case Provenance::convexity: return "convexity";
  }
  return "unknown";
}

EtaBound eta_known(long s, int k, EtaMode mode) {
  require(s >= 1, "eta: s >= 1 required");
  require(k >= 2, "eta: k >= 2 required");
  return mode == EtaMode::envelope ? eta_envelope(s, k) : eta_families(s, k);
}

std::string to_string(Family f) {
  switch (f) {
    case Family::pronic: return "pronic";
    case Family::square_minus_one: return "square-minus-one";
    case Family::none: return "none";
  }
  return "unknown";
}

bool family_admits(Family family, int k, int m) {
  if (m < 1) return false;
  if (family == Family::pronic) return 2 * m <= k;
  if (family == Family::square_minus_one) return 2 * m <= k - 1 && k - m - 1 > 0;
  return false;
}

long family_v(Family family, int k, int m) {
  require(family_admits(family, k, m), "family parameter m out of range");
  const long km = long(k) - m;
  return family == Family::pronic ? km * km + km : km * km - 1;
}

Rational family_delta_star(Family family, int k, int m) {
  require(family_admits(family, k, m), "family parameter m out of range");
  if (family == Family::pronic) return Rational(long(m) * m - 1);
  return Rational(long(m) * m + m - 1) + Rational(m, long(k) - m - 1);
}

std::optional<std::pair<Family, int>> classify_v(long v, int k) {
  for (int m = 1; 2 * m <= k; ++m) {
    if (family_v(Family::pronic, k, m) == v) return std::pair{Family::pronic, m};
  }
  for (int m = 1; 2 * m <= k - 1; ++m) {
    if (family_v(Family::square_minus_one, k, m) == v) return std::pair{Family::square_minus_one, m};
  }
  return std::nullopt;
}

Rational delta_star_generic(long v, int k, EtaMode mode) {
  require(v >= 1, "delta_star: v >= 1 required");
  require(k >= 3, "delta_star: k >= 3 required");
  return max(eta_known(v, k, mode).value - Rational(1), eta_known(v, k - 1, mode).value);
}

Rational delta_star(long v, int k, EtaMode mode) {
  require(v >= 1, "delta_star: v >= 1 required");
  require(k >= 3, "delta_star: k >= 3 required");
  if (mode == EtaMode::families) {
    if (auto fam = classify_v(v, k)) return family_delta_star(fam->first, k, fam->second);
  }
  return delta_star_generic(v, k, mode);
}

Rational s0_with(int k, long v, int w, const Rational& ds) {
  require(k >= 3, "s0: k >= 3 required");
  require(v >= 1, "s0: v >= 1 required");
  require(1 <= w && w <= k - 1, "s0: 1 <= w <= k-1 required");
  const long top = 2L * k * k - 2;
  const long gap = 2 * v + long(w) * w - w;
  require(gap < top, "s0: 2v + w^2 - w < 2k^2 - 2 required");
  require(ds.sign() >= 0, "s0: Delta* must be non-negative");
  return Rational(top) - Rational(top - gap) / (Rational(1) + ds / Rational(w));
}

Rational s0(int k, long v, int w, EtaMode mode) {
  require(k >= 3, "s0: k >= 3 required");
  return s0_with(k, v, w, delta_star(v, k, mode));
}

BigInt gtilde_from(const Rational& x) { return x.floor() + 1; }

namespace {

struct Candidate {
  Rational value;
  int w;
  long v;
  Family family;
  int m;
};

bool better(const Candidate& a, const Candidate& b) {
  // Family enum order puts pronic before square_minus_one before none.
  return std::tie(a.value, a.w, a.v, a.family) < std::tie(b.value, b.w, b.v, b.family);
}

}  // namespace

S1Result s1(int k, S1Search search) {
  require(k >= 3, "s1: k >= 3 required");
  const long top = 2L * k * k - 2;
  std::optional<Candidate> best;
  auto offer = [&](Candidate c) {
    if (!best || better(c, *best)) best = std::move(c);
  };

  if (search == S1Search::families) {
    for (Family fam : {Family::pronic, Family::square_minus_one}) {
      for (int m = 1; family_admits(fam, k, m); ++m) {
        const long v = family_v(fam, k, m);
        const Rational ds = family_delta_star(fam, k, m);
        for (int w = 1; w <= k - 1; ++w) {
          if (2 * v + long(w) * w - w >= top) continue;
          offer({s0_with(k, v, w, ds), w, v, fam, m});
        }
      }
    }
  } else {
    for (int w = 1; w <= k - 1; ++w) {
      for (long v = 1; 2 * v + long(w) * w - w < top; ++v) {
        auto fam = classify_v(v, k);
        offer({s0_with(k, v, w, delta_star(v, k)), w, v, fam ? fam->first : Family::none,
               fam ? fam->second : -1});
      }
    }
  }
  if (!best) throw InternalError("s1: empty admissible grid");
  return {k, best->value, best->m, best->w, best->v, best->family, gtilde_from(best->value)};
}

Rational eta_r_star(int r, long s, int w, EtaMode mode) {
  require(r >= 1, "eta_r_star: r >= 1 required");
  const long reduced = s - long(r) * (r - 1) / 2;
  require(reduced >= 1, "eta_r_star: s - r(r-1)/2 >= 1 required");
  return eta_known(reduced, w, mode).value / Rational(r);
}

}  // namespace vmvt
