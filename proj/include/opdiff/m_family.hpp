#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opdiff/linear_backend.hpp"

namespace opdiff {

/// Configuration of the anti-diagonal raising/lowering family on an
/// even-dimensional space.  rho must be set if and only if all coefficients
/// share the same modulus; the rho-scaling identities and the closed forms
/// are only available then.
struct MFamilyConfig {
  int dim = 0;                  // N, even and positive
  std::vector<Complex> coeffs;  // c_1 .. c_{N/2}
  std::optional<double> rho;
};

/// Throws InvalidConfigError when N is not even positive, the coefficient
/// count is not N/2, or rho is set but some |c_i| deviates from it by more
/// than 1e-12.
void validate(const MFamilyConfig& cfg);

struct MFamilyOperators {
  LinearMap m_plus;   // c_i at (i, N-i+1), 1-based labels
  LinearMap m_minus;  // adjoint of m_plus
  LinearMap d_plus;   // |c_i|^2 on the top half of the diagonal
  LinearMap d_minus;  // mirrored moduli on the bottom half
  LinearMap m_zero;   // d_plus - d_minus
  LinearMap d_sum;    // d_plus + d_minus
};

MFamilyOperators build_operators(const MFamilyConfig& cfg);

struct IdentityCheck {
  std::string name;
  bool requires_constant_modulus = false;
  bool checked = true;   // false when the identity needs rho and none is set
  bool passed = true;
  double deviation = 0.0;  // max-abs entry deviation (0 when unchecked)
};

struct PropertyReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Verifies the family's algebraic identities by direct matrix arithmetic.
/// M+^2 = 0, M-^2 = 0, [M+,M-] = M0, M+M- = D+, M-M+ = D-, and the four
/// vanishing mixed products hold for any coefficients; the four rho^2
/// scaling identities are checked only when rho is set.
PropertyReport check_properties(const MFamilyConfig& cfg, double tolerance = 1e-12);

/// The alternating coefficient families: L0(n) is M+ for even n and M- for
/// odd n; L1(n) is the swap.  Both are periodic with period 2.
std::pair<OperatorFamily, OperatorFamily> parity_families(const MFamilyConfig& cfg);

/// Closed form of Y_n for Y0 = 0, Y1 = y1_bar under the parity families:
///   n = 0: 0,  n = 1: y1_bar,  n = 2: M- y1_bar,
///   n > 2 even: (rho^(n-4) D+ + rho^(n-2) M-) y1_bar,
///   n > 2 odd:  rho^(n-3) (D+ + M-) y1_bar.
/// Requires rho; throws InvalidConfigError otherwise.
StateVector closed_form_case_one(const MFamilyConfig& cfg, int n, const StateVector& y1_bar);

/// Closed form for arbitrary initial data.  The y0_bar contribution is
/// L0(0) y0_bar at n = 2 and vanishes for every n > 2.
StateVector closed_form_general(const MFamilyConfig& cfg, int n, const StateVector& y0_bar,
                                const StateVector& y1_bar);

}  // namespace opdiff
