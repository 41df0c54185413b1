/*
 * Copyright 2026 The fusionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// SL2 over finite fields and the 2-local pieces built from a quaternion
// subgroup: C, Q = <C, B>, S0 = Q^3 / <(-I,-I,-I)>, U and z, together with
// the finite checks about them.

#ifndef FUSIONKIT_SOLOMON_HPP
#define FUSIONKIT_SOLOMON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusionkit {

/// F_{q^m}. Elements are 0 .. q^m - 1, read as coefficient vectors in base q
/// (constant term lowest), so the prime field sits at 0 .. q-1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  unsigned characteristic() const noexcept { return q_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t size() const noexcept { return n_; }
  /// Monic modulus, coefficients from the constant term up (length m + 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;  // InvalidArgument for 0
  Elem pow(Elem a, std::uint64_t e) const;
  Elem one() const noexcept { return 1; }

 private:
  friend FiniteField build_field(unsigned q, unsigned m);
  unsigned q_ = 0, m_ = 0;
  std::uint32_t n_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_, mul_, neg_;
};

/// Modulus is the least monic irreducible of degree m, comparing
/// coefficients from the top down. Throws NotOddPrime, and CapExceeded past
/// 2^12 elements.
FiniteField build_field(unsigned q, unsigned m);

/// 2x2 matrix [[a, b], [c, d]]; ordered lexicographically by (a, b, c, d).
struct Mat {
  FiniteField::Elem a = 0, b = 0, c = 0, d = 0;
  auto operator<=>(const Mat&) const = default;
};

Mat mat_mul(const FiniteField& F, const Mat& x, const Mat& y);
Mat mat_inv(const FiniteField& F, const Mat& x);  // determinant 1 assumed
Mat mat_neg(const FiniteField& F, const Mat& x);
Mat mat_identity();
std::uint64_t mat_order(const FiniteField& F, const Mat& x);
std::string format_mat(const Mat& x);

/// Every element of SL2(F), sorted. Throws CapExceeded beyond cap.
std::vector<Mat> sl2_elements(const FiniteField& F, std::uint64_t cap);

/// Least (A, B) in SL2(q) with A, B of order 4, B A B^-1 = A^-1 and
/// |<A, B>| = 8.
std::pair<Mat, Mat> build_q8(const FiniteField& prime_field);

/// Class of (X1, X2, X3) modulo (-I, -I, -I), stored as the smaller of the
/// two representatives.
using Triple = std::array<Mat, 3>;
Triple triple_canonical(const FiniteField& F, const Triple& t);
Triple triple_mul(const FiniteField& F, const Triple& x, const Triple& y);

struct SolomonPieces {
  FiniteField field;
  Mat A, B;
  std::vector<Mat> sl2;       // SL2(q^m), sorted
  std::vector<Mat> C;         // 2-torsion of C_SL2(A), sorted
  std::vector<Mat> Q;         // <C, B>, sorted
  std::vector<Triple> S0;     // canonical classes, sorted
  std::vector<Triple> U;      // image of {+-I}^3, sorted
  Triple z;
  std::size_t omega_kernel = 0;    // |Q^3| / |S0|, counted directly
  std::vector<Triple> generators;  // of S0, one coordinate at a time
};

/// Throws NotOddPrime, or CapExceeded when |SL2(q^m)| or |S0| exceeds cap.
SolomonPieces build_solomon_pieces(unsigned q, unsigned m, std::uint64_t cap);

struct SolomonCheck {
  bool ok = true;
  std::string witness;  // formatted matrix, triple or subgroup on failure
  std::string detail;
};

/// (1) C_SL2(X) cyclic for every X of order 4; (2) C_SL2(<A, B>) = {+-I}.
SolomonCheck check_quaternion_lemma(const SolomonPieces& pieces);

/// The Klein four subgroups normal in S0 are exactly {U}.
SolomonCheck check_klein_uniqueness(const SolomonPieces& pieces);

/// Z(S0), sorted.
std::vector<Triple> center_of_s0(const SolomonPieces& pieces);

enum class CentralizerMode { Full, Coordinatewise };

/// C(S0) inside SL2(q^m)^3 / <(-I,-I,-I)> equals Z(S0). Full mode scans the
/// whole quotient on `jobs` threads (CapExceeded past cap); coordinatewise
/// mode assembles C_SL2(Q) per coordinate and confirms the result on
/// `samples` seeded random triples.
SolomonCheck check_centralizer_in_h(const SolomonPieces& pieces, CentralizerMode mode,
                                    unsigned jobs, std::uint64_t cap, std::size_t samples = 2000);

std::string format_triple(const Triple& t);

}  // namespace fusionkit

#endif  // FUSIONKIT_SOLOMON_HPP
