#ifndef SNELLFAGNANO_WEIGHTS_HPP
#define SNELLFAGNANO_WEIGHTS_HPP

#include <array>

namespace sf {

// Stiffness per chord of an inscribed triangle. lam_A weights the chord B'C'
// (the one not touching side a) and cyclically.
struct Weights {
  double lam_A = 1.0;
  double lam_B = 1.0;
  double lam_C = 1.0;

  // Throws InvalidArgument unless all three are positive and finite.
  static Weights make(double la, double lb, double lc);

  double operator[](int i) const;
  std::array<double, 3> as_array() const { return {lam_A, lam_B, lam_C}; }
  Weights reciprocal() const { return {1.0 / lam_A, 1.0 / lam_B, 1.0 / lam_C}; }
  Weights scaled(double mu) const { return {mu * lam_A, mu * lam_B, mu * lam_C}; }
};

// Snell coefficients attached to the sides a, b, c.
struct RefractionCoeffs {
  double kap_a = 1.0;
  double kap_b = 1.0;
  double kap_c = 1.0;

  double operator[](int i) const;
  double product() const { return kap_a * kap_b * kap_c; }
  RefractionCoeffs reciprocal() const { return {1.0 / kap_a, 1.0 / kap_b, 1.0 / kap_c}; }
};

// kap_c = lam_A/lam_B, kap_a = lam_B/lam_C, kap_b = lam_C/lam_A.
RefractionCoeffs coeffs_from_weights(const Weights& w);

}  // namespace sf

#endif  // SNELLFAGNANO_WEIGHTS_HPP
