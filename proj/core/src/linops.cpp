// Copyright 2026 The geoqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geoqm/linops.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace geoqm {

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw ValidationError("HermitianOperator: matrix must be square and non-empty");
  if (!all_finite(m_)) throw ValidationError("HermitianOperator: non-finite entry");
  const double dev = max_abs(m_ - m_.adjoint());
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "HermitianOperator: |A - A^dagger|_max = " << dev << " exceeds " << kHermitianTol;
    throw ValidationError(os.str());
  }
}

HermitianOperator HermitianOperator::hermitian_part(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw ValidationError("hermitian_part: matrix must be square and non-empty");
  return {ComplexMatrix(0.5 * (m + m.adjoint())), Unchecked{}};
}

StateVector::StateVector(ComplexVector amplitudes)
    : v_(std::move(amplitudes)), norm_(Normalization::raw) {
  if (v_.size() == 0) throw ValidationError("StateVector: empty amplitude vector");
  if (!all_finite(v_)) throw ValidationError("StateVector: non-finite amplitude");
}

StateVector StateVector::normalized(const ComplexVector& amplitudes) {
  if (amplitudes.size() == 0) throw ValidationError("StateVector: empty amplitude vector");
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("StateVector: cannot normalize zero vector");
  return {ComplexVector(amplitudes / n), Normalization::unit};
}

DensityState::DensityState(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols())
    throw ValidationError("DensityState: matrix must be square and non-empty");
  if (!all_finite(rho_)) throw ValidationError("DensityState: non-finite entry");
  if (max_abs(rho_ - rho_.adjoint()) > kDensityTol)
    throw ValidationError("DensityState: matrix is not Hermitian");
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > kDensityTol) {
    std::ostringstream os;
    os << "DensityState: trace " << tr << " differs from 1";
    throw ValidationError(os.str());
  }
  const auto dec = eig_herm(HermitianOperator::hermitian_part(rho_));
  if (dec.values(0) < -kDensityTol) {
    std::ostringstream os;
    os << "DensityState: negative eigenvalue " << dec.values(0);
    throw ValidationError(os.str());
  }
}

DensityState DensityState::pure(const StateVector& psi) {
  const double n2 = psi.amplitudes().squaredNorm();
  if (!(n2 > 0.0)) throw ValidationError("DensityState::pure: zero vector");
  return DensityState(outer(psi.amplitudes()) / n2);
}

RealVector DensityState::spectrum() const {
  RealVector ev = eig_herm(HermitianOperator::hermitian_part(rho_)).values;
  return ev.cwiseMax(0.0);
}

EigenDecomposition eig_herm(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_herm: eigensolver failed");
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  // Phase convention: first significant component real and positive.
  for (Eigen::Index c = 0; c < out.vectors.cols(); ++c) {
    auto col = out.vectors.col(c);
    const double scale = col.cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      if (std::abs(col(r)) > 1e-10 * scale) {
        col *= std::conj(col(r)) / std::abs(col(r));
        col(r) = std::abs(col(r));
        break;
      }
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

cplx trace_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a.adjoint() * b).trace();
}

ComplexMatrix outer(const ComplexVector& psi) { return psi * psi.adjoint(); }

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const auto dec = eig_herm(HermitianOperator::hermitian_part(m));
  if (dec.values(0) < -kDensityTol) {
    std::ostringstream os;
    os << "matrix_sqrt_psd: eigenvalue " << dec.values(0) << " is not PSD";
    throw ValidationError(os.str());
  }
  const RealVector s = dec.values.cwiseMax(0.0).cwiseSqrt();
  return dec.vectors * s.asDiagonal() * dec.vectors.adjoint();
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, BipartiteDims dims, Subsystem traced) {
  const auto d1 = dims.first;
  const auto d2 = dims.second;
  if (d1 <= 0 || d2 <= 0 || rho.rows() != d1 * d2 || rho.cols() != d1 * d2)
    throw ValidationError("partial_trace: dimension does not factor as declared");
  if (traced == Subsystem::second) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += rho(i * d2 + k, j * d2 + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += rho(k * d2 + i, k * d2 + j);
  return out;
}

DensityState partial_trace(const DensityState& rho, BipartiteDims dims, Subsystem traced) {
  ComplexMatrix r = partial_trace(rho.matrix(), dims, traced);
  // Restore exact Hermiticity lost to summation order.
  r = 0.5 * (r + r.adjoint()).eval();
  return DensityState(std::move(r));
}

ComplexMatrix propagator_matrix(const HermitianOperator& h, double t, double hbar) {
  if (!(hbar > 0.0)) throw ValidationError("propagator_matrix: hbar must be positive");
  const auto dec = eig_herm(h);
  ComplexVector phases(dec.values.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(-kI * dec.values(k) * t / hbar);
  return dec.vectors * phases.asDiagonal() * dec.vectors.adjoint();
}

StateVector evolve(const HermitianOperator& h, const StateVector& psi0, double t, double hbar) {
  if (h.dim() != psi0.dim()) throw ValidationError("evolve: dimension mismatch");
  if (t == 0.0) return psi0;
  ComplexVector out = propagator_matrix(h, t, hbar) * psi0.amplitudes();
  if (psi0.normalization() == Normalization::unit) return StateVector::normalized(out);
  return StateVector(std::move(out));
}

const ComplexMatrix& pauli(int k) {
  static const std::array<ComplexMatrix, 4> sigma = [] {
    std::array<ComplexMatrix, 4> s;
    for (auto& m : s) m = ComplexMatrix::Zero(2, 2);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -kI, kI, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  if (k < 0 || k > 3) throw ValidationError("pauli: index must be 0..3");
  return sigma[static_cast<std::size_t>(k)];
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())) <= tol;
}

}  // namespace geoqm
