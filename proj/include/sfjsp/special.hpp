// Copyright 2026 The sfjsp Authors
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

#ifndef SFJSP_SPECIAL_HPP_
#define SFJSP_SPECIAL_HPP_

namespace sfjsp::special {

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// x such that P(a, x) = p, for 0 <= p < 1.
double gamma_p_inverse(double a, double p);

/// Regularized incomplete beta I_x(a, b).
double beta_inc(double a, double b, double x);

/// x in [0, 1] such that I_x(a, b) = p.
double beta_inc_inverse(double a, double b, double p);

/// Two-sided tail probability of Student's t with `dof` degrees of freedom.
double student_t_two_sided(double t, double dof);

}  // namespace sfjsp::special

#endif  // SFJSP_SPECIAL_HPP_
