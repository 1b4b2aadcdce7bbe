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

#pragma once

#include "geoqm/linops.hpp"

namespace geoqm {

enum class FftDirection { forward, backward };

/// Unnormalised DFT, forward = exp(-2 pi i jk / N). Thin FFTW wrappers.
ComplexVector fft(const ComplexVector& x, FftDirection dir);
/// 2D DFT over both indices of a matrix.
ComplexMatrix fft2(const ComplexMatrix& x, FftDirection dir);

/// Angular wavenumbers 2 pi m / L in FFT order (m = 0, 1, .., -1); the
/// Nyquist entry is taken as negative.
RealVector wavenumbers(Eigen::Index n, double length);

/// d^order f / dx^order for periodic samples on a domain of the given length.
ComplexVector spectral_derivative(const ComplexVector& f, double length, int order);

/// Mixed partial d^mq/dq^mq d^mp/dp^mp; rows index q, columns index p.
ComplexMatrix spectral_derivative(const ComplexMatrix& f, double length_q, double length_p, int mq, int mp);

}  // namespace geoqm
