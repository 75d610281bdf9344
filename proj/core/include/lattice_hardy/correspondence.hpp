#pragma once

#include <string>

#include "lattice_hardy/constants.hpp"
#include "lattice_hardy/lattice.hpp"
#include "lattice_hardy/trig_poly.hpp"

namespace lattice_hardy {

/// Which lattice-to-torus transfer: hardy uses the weight |n|^{4k+2} and
/// the operator grad Delta^k, rellich the weight |n|^{4k} and Delta^k.
struct CorrespondenceKind {
  InequalityKind kind = InequalityKind::hardy;
  int k = 0;
};

/// Weight exponent 4k+2 (hardy) or 4k (rellich).
int correspondence_weight(CorrespondenceKind kind);

/// Fourier image with the e^{-i n.x} convention:
///   u^(x) = (2 pi)^{-d/2} sum_n u(n) e^{-i n.x},  i.e. coefficient u(n) (2 pi)^{-d/2} at frequency -n.
TrigPoly fourier_image(const LatticeFunction& u);

/// The torus function psi whose derivatives of order s = 2k+1 (hardy) or 2k
/// (rellich) are the Fourier images of n -> n_{j_1}...n_{j_s} u(n) / |n|^{2s}.
/// Coefficient at frequency -n:  i^s (2 pi)^{-d/2} u(n) / |n|^{2s}.
/// The factor i^s compensates d_{x_j} e^{-i n.x} = -i n_j e^{-i n.x}.
/// Requires u(0) = 0.
TrigPoly build_psi(const LatticeFunction& u, CorrespondenceKind kind);

struct CorrespondenceReport {
  std::string identity;
  CorrespondenceKind kind;
  int dim = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};

double relative_error(double a, double b);

/// sum |u|^2/|n|^{4k+2} = int |grad Delta^k psi|^2 (hardy);
/// sum |u|^2/|n|^{4k} = int |Delta^k psi|^2 (rellich).
CorrespondenceReport verify_norm_identity(const LatticeFunction& u, CorrespondenceKind kind);

/// sum |D Delta^k u|^2 = 4^{2k+1} int |Delta^{2k+1} psi|^2 omega^{2k+1} (hardy);
/// sum |Delta^k u|^2 = 4^{2k} int |Delta^{2k} psi|^2 omega^{2k} (rellich).
CorrespondenceReport verify_form_identity(const LatticeFunction& u, CorrespondenceKind kind);

/// Largest coefficient mismatch between fourier_image(Delta u) and
/// 4 omega fourier_image(u), relative to the largest coefficient.
double symbol_identity_error(const LatticeFunction& u);

}  // namespace lattice_hardy
