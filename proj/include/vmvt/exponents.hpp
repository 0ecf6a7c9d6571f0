#pragma once

// Closed-form exponent bounds for Vinogradov's mean value J_{s,k}(X) and the
// minor-arc optimisation that turns them into bounds for G~(k).
//
// Everything here is exact rational arithmetic. Conventions: eta(s,k) is the
// excess over the main-conjecture exponent, i.e. J_{s,k}(X) << X^{2s - k(k+1)/2 + eta}.

#include <optional>
#include <string>
#include <vector>

#include "vmvt/params.hpp"
#include "vmvt/rational.hpp"

namespace vmvt {

/// kappa(r,t,k) = r(t+1) - (t+r-k)/2 * (t+r-k-1 + (2r-2)/(t-1)).
Rational kappa(const VinogradovParams& params);

struct MuNu {
  long mu = 0;
  long nu = 0;
  friend bool operator==(const MuNu&, const MuNu&) = default;
};

/// mu = (t+r-k)(t+r-k-1)/2, nu = (t+r-k)(k+r-t-1)/2. Both integral on admissible params.
MuNu mu_nu(const VinogradovParams& params);

/// The two threshold shapes of the large-s bounds: s >= (k-m)^2 + (k-m) ("pronic")
/// and s >= (k-m)^2 - 1 ("square-minus-one").
enum class DeltaCase { pronic, square_minus_one };

struct DeltaBound {
  Rational value;
  long threshold = 0;  // the bound holds only for s >= threshold
};

/// pronic: (m^2, (k-m)^2 + (k-m)) with 2m <= k.
/// square_minus_one: (m^2 + m + m/(k-m-1), (k-m)^2 - 1) with 2m <= k-1.
DeltaBound delta(int k, int m, DeltaCase which);

enum class EtaMode {
  families,  // diagonal range plus the two large-s families
  envelope,  // additionally interpolates between kappa anchor points (Hoelder)
};

enum class Provenance {
  diagonal,                   // s <= floor((k+1)^2/4): eta = k(k+1)/2 - s
  pronic_threshold,           // delta bound with pronic threshold
  square_minus_one_threshold, // delta bound with (k-m)^2 - 1 threshold
  pronic_family,              // Delta*_v closed form at v = (k-m)^2 + (k-m)
  square_minus_one_family,    // Delta*_v closed form at v = (k-m)^2 - 1
  convexity,                  // envelope interpolation strictly beat the families
};

std::string to_string(Provenance p);

struct EtaBound {
  long s = 0;
  int k = 0;
  Rational value;
  Provenance provenance = Provenance::diagonal;
  int m = -1;  // family parameter when provenance is a delta bound, else -1
};

/// Best known upper bound for eta(s,k). Accepts k >= 2 so that degree k-1 bounds are
/// available for k = 3. Non-increasing in s.
EtaBound eta_known(long s, int k, EtaMode mode = EtaMode::families);

enum class Family { pronic, square_minus_one, none };

std::string to_string(Family f);

/// Delta*_v closed form on a family point, i.e. m^2 - 1 (pronic) or
/// m^2 + m - 1 + m/(k-m-1) (square-minus-one).
Rational family_delta_star(Family family, int k, int m);

/// v for the family point with parameter m.
long family_v(Family family, int k, int m);

/// True when m is a valid family parameter for degree k (m >= 1 and the 2m constraint).
bool family_admits(Family family, int k, int m);

/// Which family (and m) v belongs to at degree k, if any.
std::optional<std::pair<Family, int>> classify_v(long v, int k);

/// max{eta(v,k) - 1, eta(v,k-1)} from eta_known, never short-circuited by family forms.
Rational delta_star_generic(long v, int k, EtaMode mode = EtaMode::families);

/// Delta*_v. In families mode a family point returns its closed form; elsewhere
/// the generic max.
Rational delta_star(long v, int k, EtaMode mode = EtaMode::families);

/// s_0(k,v,w) = 2k^2 - 2 - (2k^2 - 2 - (2v + w^2 - w)) / (1 + Delta*_v / w).
/// Requires 1 <= w <= k-1 and 2v + w^2 - w < 2k^2 - 2.
Rational s0(int k, long v, int w, EtaMode mode = EtaMode::families);
/// Same with a caller-supplied Delta*_v.
Rational s0_with(int k, long v, int w, const Rational& delta_star_v);

enum class S1Search {
  families,  // v restricted to the two family shapes
  all_v,     // every v >= 1 using the generic Delta*_v
};

struct S1Result {
  int k = 0;
  Rational value;
  int m = -1;
  int w = 0;
  long v = 0;
  Family family = Family::none;
  BigInt gtilde;  // floor(value) + 1, also when value is an integer
};

/// Minimises s_0 over the admissible grid. Ties go to the smallest w, then the smallest v,
/// then the pronic family.
S1Result s1(int k, S1Search search = S1Search::families);

/// floor(x) + 1.
BigInt gtilde_from(const Rational& s1_value);

/// eta*_r(s,w) = eta(s - r(r-1)/2, w) / r.
Rational eta_r_star(int r, long s, int w, EtaMode mode = EtaMode::families);

}  // namespace vmvt
