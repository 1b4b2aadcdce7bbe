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

#include "geoqm/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace geoqm {

namespace {

// Plan creation in FFTW is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct Plan {
  fftw_plan p = nullptr;
  ~Plan() {
    if (p) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(p);
    }
  }
};

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

int sign_of(FftDirection dir) { return dir == FftDirection::forward ? FFTW_FORWARD : FFTW_BACKWARD; }

cplx ipow(cplx z, int k) {
  cplx out = 1.0;
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

}  // namespace

ComplexVector fft(const ComplexVector& x, FftDirection dir) {
  ComplexVector in = x;
  ComplexVector out(x.size());
  if (x.size() == 0) return out;
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.p = fftw_plan_dft_1d(static_cast<int>(x.size()), as_fftw(in.data()), as_fftw(out.data()), sign_of(dir),
                              FFTW_ESTIMATE);
  }
  fftw_execute(plan.p);
  return out;
}

ComplexMatrix fft2(const ComplexMatrix& x, FftDirection dir) {
  ComplexMatrix in = x;
  ComplexMatrix out(x.rows(), x.cols());
  if (x.size() == 0) return out;
  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    // Column-major storage: the column index is the slow dimension.
    plan.p = fftw_plan_dft_2d(static_cast<int>(x.cols()), static_cast<int>(x.rows()), as_fftw(in.data()),
                              as_fftw(out.data()), sign_of(dir), FFTW_ESTIMATE);
  }
  fftw_execute(plan.p);
  return out;
}

RealVector wavenumbers(Eigen::Index n, double length) {
  RealVector k(n);
  for (Eigen::Index m = 0; m < n; ++m) {
    const Eigen::Index s = (2 * m < n) ? m : m - n;
    k(m) = 2.0 * std::numbers::pi * static_cast<double>(s) / length;
  }
  return k;
}

ComplexVector spectral_derivative(const ComplexVector& f, double length, int order) {
  if (order < 0) throw ValidationError("spectral_derivative: negative order");
  if (order == 0) return f;
  const auto n = f.size();
  ComplexVector hat = fft(f, FftDirection::forward);
  const RealVector k = wavenumbers(n, length);
  for (Eigen::Index m = 0; m < n; ++m) {
    // Odd derivatives of the Nyquist mode are not representable.
    if (n % 2 == 0 && m == n / 2 && order % 2 == 1) hat(m) = 0.0;
    else hat(m) *= ipow(kI * k(m), order);
  }
  return fft(hat, FftDirection::backward) / static_cast<double>(n);
}

ComplexMatrix spectral_derivative(const ComplexMatrix& f, double length_q, double length_p, int mq, int mp) {
  if (mq < 0 || mp < 0) throw ValidationError("spectral_derivative: negative order");
  if (mq == 0 && mp == 0) return f;
  ComplexMatrix hat = fft2(f, FftDirection::forward);
  const RealVector kq = wavenumbers(f.rows(), length_q);
  const RealVector kp = wavenumbers(f.cols(), length_p);
  const auto nq = f.rows(), np = f.cols();
  for (Eigen::Index l = 0; l < np; ++l) {
    const bool nyq_p = np % 2 == 0 && l == np / 2 && mp % 2 == 1;
    const cplx fp = ipow(kI * kp(l), mp);
    for (Eigen::Index j = 0; j < nq; ++j) {
      const bool nyq_q = nq % 2 == 0 && j == nq / 2 && mq % 2 == 1;
      hat(j, l) = (nyq_p || nyq_q) ? cplx(0.0) : hat(j, l) * fp * ipow(kI * kq(j), mq);
    }
  }
  return fft2(hat, FftDirection::backward) / static_cast<double>(nq * np);
}

}  // namespace geoqm
