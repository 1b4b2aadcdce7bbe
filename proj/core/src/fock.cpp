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

#include "geoqm/fock.hpp"

#include <cmath>
#include <sstream>

namespace geoqm {

FockSpace::FockSpace(Eigen::Index dim, double hbar) : m_(dim), hbar_(hbar) {
  if (dim < 2) throw ValidationError("FockSpace: truncation dimension must be at least 2");
  if (!(hbar > 0.0)) throw ValidationError("FockSpace: hbar must be positive");
  a_ = ComplexMatrix::Zero(m_, m_);
  for (Eigen::Index n = 1; n < m_; ++n) a_(n - 1, n) = std::sqrt(static_cast<double>(n));
}

ComplexMatrix FockSpace::position() const { return std::sqrt(0.5 * hbar_) * (a_ + a_.adjoint()); }

ComplexMatrix FockSpace::momentum() const { return -kI * std::sqrt(0.5 * hbar_) * (a_ - a_.adjoint()); }

ComplexMatrix exp_i_hermitian(const HermitianOperator& h) {
  const auto dec = eig_herm(h);
  ComplexVector ph(dec.values.size());
  for (Eigen::Index k = 0; k < ph.size(); ++k) ph(k) = std::polar(1.0, dec.values(k));
  return dec.vectors * ph.asDiagonal() * dec.vectors.adjoint();
}

ComplexMatrix FockSpace::displacement(cplx z) const {
  // z a^dagger - z* a = i H with H Hermitian.
  const ComplexMatrix gen = z * a_.adjoint() - std::conj(z) * a_;
  return exp_i_hermitian(HermitianOperator::hermitian_part(-kI * gen));
}

ComplexMatrix FockSpace::weyl(double x, double alpha, WeylOrdering ordering) const {
  const ComplexMatrix q = position(), p = momentum();
  switch (ordering) {
    case WeylOrdering::symmetric:
      return exp_i_hermitian(HermitianOperator::hermitian_part((x * p + alpha * q) / hbar_));
    case WeylOrdering::q_first:
      return exp_i_hermitian(HermitianOperator::hermitian_part(alpha * q / hbar_)) *
             exp_i_hermitian(HermitianOperator::hermitian_part(x * p / hbar_));
    case WeylOrdering::p_first:
      return exp_i_hermitian(HermitianOperator::hermitian_part(x * p / hbar_)) *
             exp_i_hermitian(HermitianOperator::hermitian_part(alpha * q / hbar_));
  }
  throw ValidationError("FockSpace::weyl: unknown ordering");
}

cplx ordering_phase(double x, double alpha, WeylOrdering ordering, double hbar) {
  switch (ordering) {
    case WeylOrdering::symmetric:
      return 1.0;
    case WeylOrdering::q_first:
      return std::polar(1.0, -x * alpha / (2.0 * hbar));
    case WeylOrdering::p_first:
      return std::polar(1.0, x * alpha / (2.0 * hbar));
  }
  throw ValidationError("ordering_phase: unknown ordering");
}

CoherentState coherent_state(cplx z, const FockSpace& fock) {
  const Eigen::Index m = fock.dim();
  ComplexVector c(m);
  const double r2 = std::norm(z);
  c(0) = std::exp(-0.5 * r2);
  for (Eigen::Index n = 1; n < m; ++n) c(n) = c(n - 1) * z / std::sqrt(static_cast<double>(n));
  const double kept = c.squaredNorm();
  CoherentState out{StateVector::normalized(c), std::max(0.0, 1.0 - kept), std::nullopt};
  // 1 - kept loses precision once the tail is tiny; sum the next terms directly.
  if (out.tail_weight < 1e-8) {
    double term = std::norm(c(m - 1)), tail = 0.0;
    for (Eigen::Index n = m; n < m + 200 && term > 0.0; ++n) {
      term *= r2 / static_cast<double>(n);
      tail += term;
    }
    out.tail_weight = tail;
  }
  if (out.tail_weight > 1e-12 || std::abs(z) > std::sqrt(static_cast<double>(m)) / 4.0) {
    std::ostringstream os;
    os << "coherent_state: |z| = " << std::abs(z) << " with M = " << m << " drops Poisson weight "
       << out.tail_weight;
    out.warning = os.str();
  }
  return out;
}

cplx berezin_symbol(const ComplexMatrix& a, cplx z, const FockSpace& fock) {
  if (a.rows() != fock.dim() || a.cols() != fock.dim())
    throw ValidationError("berezin_symbol: operator dimension does not match the Fock truncation");
  const ComplexVector& v = coherent_state(z, fock).state.amplitudes();
  return v.dot(a * v);
}

}  // namespace geoqm
