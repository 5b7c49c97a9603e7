#include "htg/params.hpp"

#include <algorithm>

#include "htg/errors.hpp"

namespace htg {

std::string HtgParams::to_string() const {
  return "HTG(" + std::to_string(m_) + "," + std::to_string(n_) + "," +
         std::to_string(ell_) + ")";
}

HtgParams validate_params(int m, int n, int ell) {
  const std::string triple = "(" + std::to_string(m) + "," + std::to_string(n) +
                             "," + std::to_string(ell) + ")";
  if (m < 1) throw HtgError(Errc::BadParameter, "m must be >= 1 in " + triple);
  if (n % 2 != 0) throw HtgError(Errc::NOdd, "n must be even in " + triple);
  if (n < 4) throw HtgError(Errc::NTooSmall, "n must be >= 4 in " + triple);
  if (ell < 0 || ell >= n) {
    throw HtgError(Errc::EllRange, "ell must be in 0..n-1 in " + triple);
  }
  if ((ell - m) % 2 != 0) {
    throw HtgError(Errc::ParityMismatch,
                   "ell and m must have the same parity in " + triple);
  }
  if (m == 1 && (ell == 1 || ell == n - 1)) {
    throw HtgError(Errc::DegenerateMultigraph,
                   "wrap edges duplicate cycle edges in " + triple);
  }
  return HtgParams(m, n, ell);
}

HtgParams normal_form(const HtgParams& p) {
  return validate_params(p.m(), p.n(), std::min(p.ell(), p.n() - p.ell()));
}

}  // namespace htg
