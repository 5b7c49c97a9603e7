#pragma once

#include <vector>

#include "htg/errors.hpp"
#include "htg/params.hpp"

namespace htg::testing {

// Every valid triple with m*n <= max_order, including ell > n/2.
inline std::vector<HtgParams> all_valid_triples(int max_order) {
  std::vector<HtgParams> out;
  for (int m = 1; 4 * m <= max_order; ++m) {
    for (int n = 4; m * n <= max_order; n += 2) {
      for (int ell = 0; ell < n; ++ell) {
        try {
          out.push_back(validate_params(m, n, ell));
        } catch (const HtgError&) {
        }
      }
    }
  }
  return out;
}

}  // namespace htg::testing
