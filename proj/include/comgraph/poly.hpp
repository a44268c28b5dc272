/*
   Copyright 2026 the comgraph authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef COMGRAPH_POLY_HPP
#define COMGRAPH_POLY_HPP

#include <optional>
#include <utility>

#include "comgraph/field.hpp"

namespace comgraph {

Poly poly_add(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_sub(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_neg(const FieldCtx& F, const Poly& a);
Poly poly_mul(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_scale(const FieldCtx& F, Elem s, const Poly& a);

/// Euclidean division a = q*b + r with deg r < deg b.  Throws on b = 0.
std::pair<Poly, Poly> poly_divmod(const FieldCtx& F, const Poly& a, const Poly& b);
Poly poly_mod(const FieldCtx& F, const Poly& a, const Poly& b);

/// Monic gcd.  Throws when both inputs are zero.
Poly poly_gcd(const FieldCtx& F, const Poly& a, const Poly& b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
struct PolyXgcd {
    Poly g, u, v;
};
PolyXgcd poly_xgcd(const FieldCtx& F, const Poly& a, const Poly& b);

Poly poly_monic(const FieldCtx& F, const Poly& a);
Elem poly_eval(const FieldCtx& F, const Poly& a, Elem x);
Poly poly_derivative(const FieldCtx& F, const Poly& a);

/// a^e mod m (m nonconstant).
Poly poly_powmod(const FieldCtx& F, const Poly& a, std::uint64_t e, const Poly& m);
/// x^(q^reps) mod m, iterating the q-power Frobenius on residues.
Poly poly_frobenius_powmod(const FieldCtx& F, const Poly& m, std::uint32_t reps);

/// Irreducibility over GF(q) by the gcd-with-Frobenius-powers criterion:
/// f of degree n is irreducible iff x^(q^n) = x (mod f) and, for every prime
/// l | n, gcd(x^(q^(n/l)) - x mod f, f) = 1.  Requires f monic, deg f >= 1.
bool is_irreducible(const FieldCtx& F, const Poly& f);

/// Lexicographically smallest monic irreducible of degree d (coefficients
/// compared highest degree first).  Deterministic across runs.
Poly find_irreducible(const FieldCtx& F, std::uint32_t d);

/// For monic f over a field of characteristic 3: the unique g with g^3 = f
/// when f is a perfect cube, nullopt otherwise.  Over GF(3^k) a monic f is a
/// cube exactly when every exponent carrying a nonzero coefficient is
/// divisible by 3 (coefficient cube roots always exist in a perfect field).
std::optional<Poly> cube_root_poly(const FieldCtx& F, const Poly& f);

/// Substitution f(t^e); the result has degree e * deg f.
Poly compose_power(const Poly& f, std::uint32_t e);

std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

}  // namespace comgraph

#endif  // COMGRAPH_POLY_HPP
