#include "snellfagnano/weights.hpp"

#include <cmath>

#include "snellfagnano/error.hpp"

namespace sf {

Weights Weights::make(double la, double lb, double lc) {
  for (double v : {la, lb, lc}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::InvalidArgument, "weights must be positive and finite");
    }
  }
  return {la, lb, lc};
}

double Weights::operator[](int i) const {
  switch (((i % 3) + 3) % 3) {
    case 0: return lam_A;
    case 1: return lam_B;
    default: return lam_C;
  }
}

double RefractionCoeffs::operator[](int i) const {
  switch (((i % 3) + 3) % 3) {
    case 0: return kap_a;
    case 1: return kap_b;
    default: return kap_c;
  }
}

RefractionCoeffs coeffs_from_weights(const Weights& w) {
  return {w.lam_B / w.lam_C, w.lam_C / w.lam_A, w.lam_A / w.lam_B};
}

}  // namespace sf
