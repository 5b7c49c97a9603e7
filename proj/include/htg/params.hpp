#pragma once

#include <compare>
#include <string>

namespace htg {

/// Validated parameter triple (m, n, ell) of HTG(m, n, ell).
///
/// Invariants: n even and >= 4, m >= 1, 0 <= ell < n, ell = m (mod 2), and
/// not (m = 1 and ell in {1, n-1}), which would force a doubled edge.
/// ell is kept as given; normal_form() is the explicit reduction step.
class HtgParams {
 public:
  int m() const { return m_; }
  int n() const { return n_; }
  int ell() const { return ell_; }
  int order() const { return m_ * n_; }

  bool is_normal_form() const { return 2 * ell_ <= n_; }

  std::string to_string() const;

  auto operator<=>(const HtgParams&) const = default;

 private:
  friend HtgParams validate_params(int m, int n, int ell);
  HtgParams(int m, int n, int ell) : m_(m), n_(n), ell_(ell) {}

  int m_;
  int n_;
  int ell_;
};

/// Throws HtgError with NOdd, NTooSmall, EllRange, ParityMismatch or
/// DegenerateMultigraph.
HtgParams validate_params(int m, int n, int ell);

/// Replaces ell by min(ell, n - ell); HTG(m,n,ell) and HTG(m,n,n-ell) are
/// isomorphic.
HtgParams normal_form(const HtgParams& p);

}  // namespace htg
