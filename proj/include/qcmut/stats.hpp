// Copyright 2026 The qcmut authors
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

namespace qcmut::stats {

// Regularized upper incomplete gamma function Q(a, x) for a > 0, x >= 0,
// via the standard series / continued-fraction split. Relative accuracy is
// far below the 1e-6 the kill analysis needs.
double regularized_gamma_q(double a, double x);

// Chi-square survival function P(X >= stat) with df degrees of freedom.
double chi_square_sf(double stat, int df);

}  // namespace qcmut::stats
