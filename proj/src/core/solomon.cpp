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

#include "fusionkit/solomon.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "fusionkit/error.hpp"

namespace fusionkit {

namespace {

using Poly = std::vector<unsigned>;  // constant term first

constexpr std::uint32_t kMaxFieldSize = 1024;

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Poly digits(std::uint64_t code, unsigned q, unsigned len) {
  Poly out(len);
  for (unsigned i = 0; i < len; ++i, code /= q) out[i] = static_cast<unsigned>(code % q);
  return out;
}

/// Remainder of f modulo the monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned q) {
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const unsigned lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = (f[shift + i] + q - lead * g[i] % q) % q;
    f.pop_back();
  }
  return f;
}

bool irreducible(const Poly& f, unsigned q) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = digits(code, q, d);
      g.push_back(1);
      Poly r = poly_mod(f, g, q);
      if (std::all_of(r.begin(), r.end(), [](unsigned c) { return c == 0; })) return false;
    }
  }
  return true;
}

bool commutes_mod_center(const FiniteField& F, const Triple& x, const Triple& g) {
  return triple_canonical(F, triple_mul(F, x, g)) == triple_canonical(F, triple_mul(F, g, x));
}

bool is_two_power(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::vector<Mat> closure(const FiniteField& F, const std::vector<Mat>& gens) {
  std::set<Mat> seen{mat_identity()};
  std::vector<Mat> frontier{mat_identity()};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& x : frontier)
      for (const Mat& g : gens) {
        Mat y = mat_mul(F, x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Mat> centralizer_in(const FiniteField& F, const std::vector<Mat>& ambient,
                                const std::vector<Mat>& of) {
  std::vector<Mat> out;
  for (const Mat& x : ambient)
    if (std::all_of(of.begin(), of.end(),
                    [&](const Mat& y) { return mat_mul(F, x, y) == mat_mul(F, y, x); }))
      out.push_back(x);
  return out;
}

std::string format_subgroup(const std::vector<Triple>& K) {
  std::string out = "{";
  for (std::size_t i = 0; i < K.size(); ++i) out += (i ? ", " : "") + format_triple(K[i]);
  return out + "}";
}

}  // namespace

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow(a, n_ - 2);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

FiniteField build_field(unsigned q, unsigned m) {
  if (q == 2 || !is_prime(q)) throw Error(ErrorCode::NotOddPrime, std::to_string(q) + " is not an odd prime");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  std::uint64_t n = 1;
  for (unsigned i = 0; i < m; ++i) {
    n *= q;
    if (n > kMaxFieldSize) throw Error(ErrorCode::CapExceeded, "field has more than 1024 elements");
  }
  FiniteField F;
  F.q_ = q;
  F.m_ = m;
  F.n_ = static_cast<std::uint32_t>(n);
  // ascending code = lexicographic from the top coefficient down
  for (std::uint64_t code = 0; code < n; ++code) {
    Poly f = digits(code, q, m);
    f.push_back(1);
    if (irreducible(f, q)) {
      F.modulus_ = f;
      break;
    }
  }
  auto encode = [&](const Poly& p) {
    std::uint32_t v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * q + p[i];
    return v;
  };
  F.add_.resize(n * n);
  F.mul_.resize(n * n);
  F.neg_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    const Poly pa = digits(a, q, m);
    Poly na(m);
    for (unsigned i = 0; i < m; ++i) na[i] = (q - pa[i]) % q;
    F.neg_[a] = encode(na);
    for (std::uint32_t b = 0; b < n; ++b) {
      const Poly pb = digits(b, q, m);
      Poly s(m), prod(2 * m - 1, 0);
      for (unsigned i = 0; i < m; ++i) s[i] = (pa[i] + pb[i]) % q;
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % q;
      F.add_[a * n + b] = encode(s);
      F.mul_[a * n + b] = encode(poly_mod(prod, F.modulus_, q));
    }
  }
  return F;
}

Mat mat_mul(const FiniteField& F, const Mat& x, const Mat& y) {
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat mat_inv(const FiniteField& F, const Mat& x) { return {x.d, F.neg(x.b), F.neg(x.c), x.a}; }

Mat mat_neg(const FiniteField& F, const Mat& x) {
  return {F.neg(x.a), F.neg(x.b), F.neg(x.c), F.neg(x.d)};
}

Mat mat_identity() { return {1, 0, 0, 1}; }

std::uint64_t mat_order(const FiniteField& F, const Mat& x) {
  std::uint64_t k = 1;
  for (Mat y = x; y != mat_identity(); y = mat_mul(F, y, x)) ++k;
  return k;
}

std::string format_mat(const Mat& x) {
  std::ostringstream os;
  os << '[' << x.a << ' ' << x.b << "; " << x.c << ' ' << x.d << ']';
  return os.str();
}

std::vector<Mat> sl2_elements(const FiniteField& F, std::uint64_t cap) {
  const std::uint64_t n = F.size();
  if (n * (n * n - 1) > cap)
    throw Error(ErrorCode::CapExceeded, "|SL2| = " + std::to_string(n * (n * n - 1)) + " exceeds the element cap");
  std::vector<Mat> out;
  const auto minus_one = F.neg(1);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c) {
        if (a != 0) {
          out.push_back({a, b, c, F.mul(F.add(1, F.mul(b, c)), F.inv(a))});
        } else if (F.mul(b, c) == minus_one) {
          for (std::uint32_t d = 0; d < n; ++d) out.push_back({a, b, c, d});
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Mat, Mat> build_q8(const FiniteField& prime_field) {
  const FiniteField& F = prime_field;
  std::vector<Mat> order4;
  for (const Mat& x : sl2_elements(F, UINT64_MAX))
    if (mat_order(F, x) == 4) order4.push_back(x);
  for (const Mat& A : order4) {
    const Mat Ainv = mat_inv(F, A);
    for (const Mat& B : order4) {
      if (B == A || B == Ainv) continue;  // B outside <A>
      if (mat_mul(F, mat_mul(F, B, A), mat_inv(F, B)) == Ainv) return {A, B};
    }
  }
  // SL2(q) always holds a quaternion subgroup for odd q
  throw Error(ErrorCode::InvalidArgument, "no quaternion subgroup found");
}

Triple triple_canonical(const FiniteField& F, const Triple& t) {
  Triple n{mat_neg(F, t[0]), mat_neg(F, t[1]), mat_neg(F, t[2])};
  return std::min(t, n);
}

Triple triple_mul(const FiniteField& F, const Triple& x, const Triple& y) {
  return {mat_mul(F, x[0], y[0]), mat_mul(F, x[1], y[1]), mat_mul(F, x[2], y[2])};
}

std::string format_triple(const Triple& t) {
  return "(" + format_mat(t[0]) + ", " + format_mat(t[1]) + ", " + format_mat(t[2]) + ")";
}

SolomonPieces build_solomon_pieces(unsigned q, unsigned m, std::uint64_t cap) {
  SolomonPieces P{build_field(q, m), {}, {}, {}, {}, {}, {}, {}, {}, 0, {}};
  const FiniteField& F = P.field;
  std::tie(P.A, P.B) = build_q8(build_field(q, 1));
  P.sl2 = sl2_elements(F, cap);

  for (const Mat& x : centralizer_in(F, P.sl2, {P.A}))
    if (is_two_power(mat_order(F, x))) P.C.push_back(x);
  // C is cyclic: any element of maximal order generates it
  Mat c = P.C.front();
  for (const Mat& x : P.C)
    if (mat_order(F, x) > mat_order(F, c)) c = x;
  P.Q = closure(F, {c, P.B});

  const std::uint64_t q3 = static_cast<std::uint64_t>(P.Q.size()) * P.Q.size() * P.Q.size();
  if (q3 / 2 > cap) throw Error(ErrorCode::CapExceeded, "|S0| exceeds the element cap");
  const Mat I = mat_identity(), minus_I = mat_neg(F, I);
  const Triple e = triple_canonical(F, {I, I, I});
  P.S0.reserve(q3);
  for (const Mat& x : P.Q)
    for (const Mat& y : P.Q)
      for (const Mat& w : P.Q) {
        Triple t = triple_canonical(F, {x, y, w});
        P.omega_kernel += t == e;
        P.S0.push_back(t);
      }
  std::sort(P.S0.begin(), P.S0.end());
  P.S0.erase(std::unique(P.S0.begin(), P.S0.end()), P.S0.end());

  for (const Mat& x : {I, minus_I})
    for (const Mat& y : {I, minus_I})
      for (const Mat& w : {I, minus_I}) P.U.push_back(triple_canonical(F, {x, y, w}));
  std::sort(P.U.begin(), P.U.end());
  P.U.erase(std::unique(P.U.begin(), P.U.end()), P.U.end());
  P.z = triple_canonical(F, {I, I, minus_I});

  for (int i = 0; i < 3; ++i)
    for (const Mat& g : {c, P.B}) {
      Triple t{I, I, I};
      t[i] = g;
      P.generators.push_back(triple_canonical(F, t));
    }
  return P;
}

SolomonCheck check_quaternion_lemma(const SolomonPieces& P) {
  const FiniteField& F = P.field;
  SolomonCheck out;
  std::size_t order4 = 0;
  for (const Mat& x : P.sl2) {
    if (mat_order(F, x) != 4) continue;
    ++order4;
    const auto cent = centralizer_in(F, P.sl2, {x});
    const bool cyclic = std::any_of(cent.begin(), cent.end(),
                                    [&](const Mat& y) { return mat_order(F, y) == cent.size(); });
    if (!cyclic) {
      out.ok = false;
      out.witness = format_mat(x);
      out.detail = "centralizer of an element of order 4 is not cyclic";
      return out;
    }
  }
  const auto cq = centralizer_in(F, P.sl2, {P.A, P.B});
  const std::vector<Mat> expected = {std::min(mat_identity(), mat_neg(F, mat_identity())),
                                     std::max(mat_identity(), mat_neg(F, mat_identity()))};
  if (cq != expected) {
    out.ok = false;
    for (const Mat& x : cq)
      if (!std::binary_search(expected.begin(), expected.end(), x)) out.witness = format_mat(x);
    out.detail = "centralizer of the quaternion subgroup has order " + std::to_string(cq.size());
    return out;
  }
  out.detail = "elements of order 4: " + std::to_string(order4) + "; |C(Q8)| = 2";
  return out;
}

SolomonCheck check_klein_uniqueness(const SolomonPieces& P) {
  const FiniteField& F = P.field;
  const Mat I = mat_identity();
  const Triple e = triple_canonical(F, {I, I, I});
  std::vector<Triple> inv;
  for (const Triple& t : P.S0)
    if (t != e && triple_canonical(F, triple_mul(F, t, t)) == e) inv.push_back(t);

  std::vector<Triple> gen_inv;
  for (const Triple& g : P.generators)
    gen_inv.push_back(triple_canonical(F, {mat_inv(F, g[0]), mat_inv(F, g[1]), mat_inv(F, g[2])}));

  std::set<std::vector<Triple>> normal;
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t j = i + 1; j < inv.size(); ++j) {
      const Triple& a = inv[i];
      const Triple& b = inv[j];
      if (!commutes_mod_center(F, a, b)) continue;
      std::vector<Triple> K = {e, a, b, triple_canonical(F, triple_mul(F, a, b))};
      std::sort(K.begin(), K.end());
      if (normal.count(K)) continue;
      bool is_normal = true;
      for (std::size_t g = 0; g < P.generators.size() && is_normal; ++g)
        for (const Triple& x : {a, b}) {
          Triple y = triple_canonical(F, triple_mul(F, triple_mul(F, P.generators[g], x), gen_inv[g]));
          if (!std::binary_search(K.begin(), K.end(), y)) {
            is_normal = false;
            break;
          }
        }
      if (is_normal) normal.insert(K);
    }

  SolomonCheck out;
  out.detail = "|C| = " + std::to_string(P.C.size()) + "; involutions: " + std::to_string(inv.size()) +
               "; normal Klein subgroups: " + std::to_string(normal.size());
  if (normal.size() != 1 || *normal.begin() != P.U) {
    out.ok = false;
    for (const auto& K : normal)
      if (K != P.U) {
        out.witness = format_subgroup(K);
        break;
      }
    if (out.witness.empty()) out.witness = format_subgroup(P.U);  // U itself is missing
  }
  return out;
}

std::vector<Triple> center_of_s0(const SolomonPieces& P) {
  std::vector<Triple> out;
  for (const Triple& t : P.S0)
    if (std::all_of(P.generators.begin(), P.generators.end(),
                    [&](const Triple& g) { return commutes_mod_center(P.field, t, g); }))
      out.push_back(t);
  return out;
}

SolomonCheck check_centralizer_in_h(const SolomonPieces& P, CentralizerMode mode, unsigned jobs,
                                    std::uint64_t cap, std::size_t samples) {
  const FiniteField& F = P.field;
  auto centralizes = [&](const Triple& t) {
    return std::all_of(P.generators.begin(), P.generators.end(),
                       [&](const Triple& g) { return commutes_mod_center(F, t, g); });
  };
  const std::vector<Triple> center = center_of_s0(P);
  std::vector<Triple> found;
  SolomonCheck out;

  if (mode == CentralizerMode::Full) {
    const std::uint64_t n = P.sl2.size();
    if (n * n * n / 2 > cap)
      throw Error(ErrorCode::CapExceeded, "|H| = " + std::to_string(n * n * n / 2) + " exceeds the element cap");
    jobs = std::max(1u, jobs);
    std::vector<std::vector<Triple>> partial(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += jobs)
          for (const Mat& y : P.sl2)
            for (const Mat& x : P.sl2) {
              Triple t{P.sl2[i], y, x};
              if (triple_canonical(F, t) == t && centralizes(t)) partial[w].push_back(t);
            }
      });
    for (auto& t : workers) t.join();
    for (auto& part : partial) found.insert(found.end(), part.begin(), part.end());
    std::sort(found.begin(), found.end());
    out.detail = "scanned " + std::to_string(n * n * n / 2) + " classes";
  } else {
    // A class centralizing the one-coordinate generators has every
    // coordinate in C_SL2(Q): the commutator sign is + off that coordinate.
    const auto cq = centralizer_in(F, P.sl2, P.Q);
    for (const Mat& x : cq)
      for (const Mat& y : cq)
        for (const Mat& w : cq) found.push_back(triple_canonical(F, {x, y, w}));
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    for (const Triple& t : found)
      if (!centralizes(t)) {
        out.ok = false;
        out.witness = format_triple(t);
        out.detail = "assembled element does not centralize S0";
        return out;
      }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, P.sl2.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) {
      Triple t = triple_canonical(F, {P.sl2[pick(rng)], P.sl2[pick(rng)], P.sl2[pick(rng)]});
      if (centralizes(t) != std::binary_search(found.begin(), found.end(), t)) {
        out.ok = false;
        out.witness = format_triple(t);
        out.detail = "sampled element disagrees with the coordinatewise centralizer";
        return out;
      }
    }
    out.detail = "|C_SL2(Q)| = " + std::to_string(cq.size()) + "; " + std::to_string(samples) +
                 " samples agree";
  }

  out.detail += "; |C(S0)| = " + std::to_string(found.size()) + "; |Z(S0)| = " + std::to_string(center.size());
  if (found != center) {
    out.ok = false;
    std::vector<Triple> diff;
    std::set_symmetric_difference(found.begin(), found.end(), center.begin(), center.end(),
                                  std::back_inserter(diff));
    out.witness = format_triple(diff.front());
  }
  return out;
}

}  // namespace fusionkit
