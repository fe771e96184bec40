// Copyright 2026 The qpc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpc/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace qpc {

namespace {

using Mat2 = std::array<std::array<complex, 2>, 2>;

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int r = 0; r < 2; ++r) {
    for (int s = 0; s < 2; ++s) {
      c[r][s] = a[r][0] * b[0][s] + a[r][1] * b[1][s];
    }
  }
  return c;
}

complex trace(const Mat2& a) { return a[0][0] + a[1][1]; }

// |psi><psi|, entry (r, s) = psi_r conj(psi_s).
Mat2 projector(const QubitState& s) {
  const std::array<complex, 2> v{s.c0(), s.c1()};
  Mat2 rho{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) rho[r][c] = v[r] * std::conj(v[c]);
  }
  return rho;
}

void check_indices(const StateFamily& f, std::size_t i, std::size_t j, std::size_t k) {
  if (i >= f.size() || j >= f.size() || k >= f.size()) {
    throw std::invalid_argument("oracle index out of range");
  }
  if (i == j || j == k || k == i) throw std::invalid_argument("oracle indices must be pairwise distinct");
}

int levi_civita(int a, int b, int c) {
  if (a == b || b == c || c == a) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

complex oracle_bargmann_direct(const StateFamily& f, std::size_t i, std::size_t j, std::size_t k) {
  check_indices(f, i, j, k);
  const QubitState& a = f[i];
  const QubitState& b = f[j];
  const QubitState& c = f[k];
  const double ar0 = a.c0().real(), ai0 = a.c0().imag(), ar1 = a.c1().real(), ai1 = a.c1().imag();
  const double br0 = b.c0().real(), bi0 = b.c0().imag(), br1 = b.c1().real(), bi1 = b.c1().imag();
  const double cr0 = c.c0().real(), ci0 = c.c0().imag(), cr1 = c.c1().real(), ci1 = c.c1().imag();
  // (x - iy)(u + iv) = (xu + yv) + i(xv - yu), summed over both components.
  const double ab_re = ar0 * br0 + ai0 * bi0 + ar1 * br1 + ai1 * bi1;
  const double ab_im = ar0 * bi0 - ai0 * br0 + ar1 * bi1 - ai1 * br1;
  const double bc_re = br0 * cr0 + bi0 * ci0 + br1 * cr1 + bi1 * ci1;
  const double bc_im = br0 * ci0 - bi0 * cr0 + br1 * ci1 - bi1 * cr1;
  const double ca_re = cr0 * ar0 + ci0 * ai0 + cr1 * ar1 + ci1 * ai1;
  const double ca_im = cr0 * ai0 - ci0 * ar0 + cr1 * ai1 - ci1 * ar1;
  const double p_re = ab_re * bc_re - ab_im * bc_im;
  const double p_im = ab_re * bc_im + ab_im * bc_re;
  return {p_re * ca_re - p_im * ca_im, p_re * ca_im + p_im * ca_re};
}

complex oracle_trace_product(const StateFamily& f, std::size_t i, std::size_t j, std::size_t k) {
  check_indices(f, i, j, k);
  return trace(multiply(multiply(projector(f[i]), projector(f[j])), projector(f[k])));
}

double oracle_trace_pair(const StateFamily& f, std::size_t i, std::size_t j) {
  if (i >= f.size() || j >= f.size()) throw std::invalid_argument("oracle index out of range");
  return trace(multiply(projector(f[i]), projector(f[j]))).real();
}

OracleReport oracle_pauli_traces() {
  const complex I(0.0, 1.0);
  const std::array<Mat2, 3> sigma{{
      {{{0.0, 1.0}, {1.0, 0.0}}},
      {{{0.0, -I}, {I, 0.0}}},
      {{{1.0, 0.0}, {0.0, -1.0}}},
  }};
  OracleReport report{"pauli_traces", 0, 0.0, 1e-15, false};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      const complex expected = a == b ? 2.0 : 0.0;
      report.max_discrepancy =
          std::max(report.max_discrepancy, std::abs(trace(multiply(sigma[a], sigma[b])) - expected));
      ++report.cases_run;
      for (int c = 0; c < 3; ++c) {
        const complex expected3 = 2.0 * I * static_cast<double>(levi_civita(a, b, c));
        const complex got = trace(multiply(multiply(sigma[a], sigma[b]), sigma[c]));
        report.max_discrepancy = std::max(report.max_discrepancy, std::abs(got - expected3));
        ++report.cases_run;
      }
    }
  }
  report.pass = report.max_discrepancy <= report.tolerance;
  return report;
}

}  // namespace qpc
