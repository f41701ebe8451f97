#include "opdiff/m_family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace opdiff {

void validate(const MFamilyConfig& cfg) {
  if (cfg.dim < 2 || cfg.dim % 2 != 0) {
    throw InvalidConfigError("space dimension must be even and positive, got " +
                             std::to_string(cfg.dim));
  }
  if (static_cast<int>(cfg.coeffs.size()) != cfg.dim / 2) {
    throw InvalidConfigError("expected " + std::to_string(cfg.dim / 2) + " coefficients, got " +
                             std::to_string(cfg.coeffs.size()));
  }
  if (cfg.rho) {
    if (*cfg.rho < 0.0) {
      throw InvalidConfigError("rho must be non-negative");
    }
    for (const auto& c : cfg.coeffs) {
      if (std::abs(std::abs(c) - *cfg.rho) > 1e-12) {
        throw InvalidConfigError("coefficient modulus deviates from the declared rho");
      }
    }
  }
}

MFamilyOperators build_operators(const MFamilyConfig& cfg) {
  validate(cfg);
  const int n = cfg.dim;
  const int half = n / 2;

  MFamilyOperators ops{LinearMap::zero(n), LinearMap::zero(n), LinearMap::zero(n),
                       LinearMap::zero(n), LinearMap::zero(n), LinearMap::zero(n)};

  // Basis labels run 1..N; storage is 0-based, so label k lives at index
  // k - 1.  This is the single conversion point.
  for (int i = 1; i <= half; ++i) {
    const Complex c = cfg.coeffs[i - 1];
    ops.m_plus.at(i - 1, n - i) = c;                     // |i><N-i+1|
    ops.d_plus.at(i - 1, i - 1) = std::norm(c);          // |c_i|^2 |i><i|
    ops.d_minus.at(n - i, n - i) = std::norm(c);         // |c_i|^2 |N-i+1><N-i+1|
  }
  ops.m_minus = ops.m_plus.adjoint();
  ops.m_zero = ops.d_plus - ops.d_minus;
  ops.d_sum = ops.d_plus + ops.d_minus;
  return ops;
}

bool PropertyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

PropertyReport check_properties(const MFamilyConfig& cfg, double tolerance) {
  const MFamilyOperators ops = build_operators(cfg);
  PropertyReport report;

  auto check = [&](std::string name, const LinearMap& lhs, const LinearMap& rhs,
                   bool needs_rho) {
    IdentityCheck c;
    c.name = std::move(name);
    c.requires_constant_modulus = needs_rho;
    if (needs_rho && !cfg.rho) {
      c.checked = false;
      report.checks.push_back(std::move(c));
      return;
    }
    c.deviation = (lhs - rhs).max_abs();
    c.passed = c.deviation <= tolerance;
    report.checks.push_back(std::move(c));
  };

  const int n = cfg.dim;
  const LinearMap zero = LinearMap::zero(n);
  const double rho2 = cfg.rho ? *cfg.rho * *cfg.rho : 0.0;

  check("M+^2 = 0", ops.m_plus * ops.m_plus, zero, false);
  check("M-^2 = 0", ops.m_minus * ops.m_minus, zero, false);
  check("[M+,M-] = M0", ops.m_plus * ops.m_minus - ops.m_minus * ops.m_plus, ops.m_zero, false);
  check("M+M- = D+", ops.m_plus * ops.m_minus, ops.d_plus, false);
  check("M-M+ = D-", ops.m_minus * ops.m_plus, ops.d_minus, false);

  check("M+D+ = 0", ops.m_plus * ops.d_plus, zero, false);
  check("D+M- = 0", ops.d_plus * ops.m_minus, zero, false);
  check("M-D- = 0", ops.m_minus * ops.d_minus, zero, false);
  check("D-M+ = 0", ops.d_minus * ops.m_plus, zero, false);

  check("M-D+ = rho^2 M-", ops.m_minus * ops.d_plus, Complex{rho2} * ops.m_minus, true);
  check("D+M+ = rho^2 M+", ops.d_plus * ops.m_plus, Complex{rho2} * ops.m_plus, true);
  check("M+D- = rho^2 M+", ops.m_plus * ops.d_minus, Complex{rho2} * ops.m_plus, true);
  check("D-M- = rho^2 M-", ops.d_minus * ops.m_minus, Complex{rho2} * ops.m_minus, true);

  return report;
}

std::pair<OperatorFamily, OperatorFamily> parity_families(const MFamilyConfig& cfg) {
  const MFamilyOperators ops = build_operators(cfg);
  OperatorFamily fam0 = OperatorFamily::periodic({ops.m_plus, ops.m_minus});
  OperatorFamily fam1 = OperatorFamily::periodic({ops.m_minus, ops.m_plus});
  return {std::move(fam0), std::move(fam1)};
}

StateVector closed_form_case_one(const MFamilyConfig& cfg, int n, const StateVector& y1_bar) {
  validate(cfg);
  if (!cfg.rho) {
    throw InvalidConfigError("the closed forms require a constant coefficient modulus (rho)");
  }
  if (n < 0) {
    throw std::invalid_argument("sequence index must be non-negative");
  }
  const MFamilyOperators ops = build_operators(cfg);
  const double rho = *cfg.rho;

  if (n == 0) return StateVector::zero(cfg.dim);
  if (n == 1) return y1_bar;
  if (n == 2) return ops.m_minus.apply(y1_bar);
  if (n % 2 == 0) {
    const LinearMap combined = Complex{std::pow(rho, n - 4)} * ops.d_plus +
                               Complex{std::pow(rho, n - 2)} * ops.m_minus;
    return combined.apply(y1_bar);
  }
  const LinearMap combined = Complex{std::pow(rho, n - 3)} * (ops.d_plus + ops.m_minus);
  return combined.apply(y1_bar);
}

StateVector closed_form_general(const MFamilyConfig& cfg, int n, const StateVector& y0_bar,
                                const StateVector& y1_bar) {
  validate(cfg);
  if (!cfg.rho) {
    throw InvalidConfigError("the closed forms require a constant coefficient modulus (rho)");
  }
  if (n < 0) {
    throw std::invalid_argument("sequence index must be non-negative");
  }
  if (n == 0) return y0_bar;
  if (n == 1) return y1_bar;
  if (n == 2) {
    const MFamilyOperators ops = build_operators(cfg);
    // L0(0) is M+ under the parity rule.
    return add(ops.m_plus.apply(y0_bar), ops.m_minus.apply(y1_bar));
  }
  // The y0_bar contribution vanishes identically for n > 2.
  return closed_form_case_one(cfg, n, y1_bar);
}

}  // namespace opdiff
