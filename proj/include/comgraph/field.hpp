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

#ifndef COMGRAPH_FIELD_HPP
#define COMGRAPH_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace comgraph {

/// A field element, encoded as an integer in [0, q).  The base-p digits of
/// the value, least significant first, are the coordinates of the element in
/// the polynomial basis of GF(p^k).
using Elem = std::uint32_t;

/// Dense univariate polynomial; coeffs[i] multiplies t^i.  Canonical form
/// never stores trailing zeros, so the zero polynomial has an empty vector.
/// deg() returns -1 for the zero polynomial (a sentinel standing in for the
/// degree of zero, which keeps `deg r < deg b` comparisons well defined).
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(Elem v) { return v == 0 ? Poly{} : Poly{{v}}; }
    static Poly x() { return Poly{{0, 1}}; }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Elem lc() const {
        if (c.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c.back();
    }
    Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const { return c == o.c; }
    bool operator!=(const Poly& o) const { return c != o.c; }
    bool operator<(const Poly& o) const {  // degree, then high-to-low coefficients
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (std::size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

/// Arithmetic context for GF(p^k), presented by a monic irreducible modulus
/// of degree k over GF(p).  Immutable after construction; all element
/// operations are pure, so a context can be shared freely between threads.
///
/// Construct through field_make()/field_make_with_modulus(); those factories
/// verify primality, irreducibility and the size limit.
class FieldCtx {
  public:
    /// Hard ceiling on q = p^k.  Keeps every exhaustive sweep at desk scale.
    static constexpr std::uint64_t kDefaultSizeLimit = std::uint64_t{1} << 20;

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint64_t q() const { return q_; }
    bool is_prime_field() const { return k_ == 1; }

    /// Modulus coefficients over GF(p), low to high, length k+1, monic.
    const std::vector<Elem>& modulus_coeffs() const { return mod_; }
    Poly modulus() const { return Poly{std::vector<Elem>(mod_)}; }

    bool valid(Elem a) const { return a < q_; }

    Elem add(Elem a, Elem b) const {
        if (k_ == 1) {
            Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return digitwise(a, b, /*subtract=*/false);
    }
    Elem sub(Elem a, Elem b) const {
        if (k_ == 1) return a >= b ? a - b : a + p_ - b;
        return digitwise(a, b, /*subtract=*/true);
    }
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;
    /// The Frobenius map x -> x^p (an automorphism of GF(p^k)).
    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// Scalar multiple n*a with n an ordinary integer (used when a formula
    /// multiplies by a characteristic-dependent integer such as a derivative
    /// exponent).
    Elem int_mul(std::uint64_t n, Elem a) const { return mul(static_cast<Elem>(n % p_), a); }

    /// Coordinates of a in the polynomial basis, least significant first,
    /// always length k.
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(const std::vector<Elem>& d) const;

    bool operator==(const FieldCtx& o) const { return p_ == o.p_ && mod_ == o.mod_; }
    bool operator!=(const FieldCtx& o) const { return !(*this == o); }

    friend FieldCtx field_make(std::uint32_t p, std::uint32_t k, std::uint64_t size_limit);
    friend FieldCtx field_make_with_modulus(std::uint32_t p, const Poly& modulus,
                                            std::uint64_t size_limit);

  private:
    FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<Elem> mod);

    Elem digitwise(Elem a, Elem b, bool subtract) const;

    std::uint32_t p_ = 0;
    std::uint32_t k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<Elem> mod_;  // monic, degree k, over GF(p)
};

/// Builds GF(p^k) with the canonical modulus: the lexicographically smallest
/// monic irreducible of degree k over GF(p) (coefficients compared from the
/// highest degree down).  Deterministic, so serialized elements mean the same
/// thing everywhere.
FieldCtx field_make(std::uint32_t p, std::uint32_t k,
                    std::uint64_t size_limit = FieldCtx::kDefaultSizeLimit);

/// Same, but with a caller-chosen monic irreducible modulus over GF(p).
FieldCtx field_make_with_modulus(std::uint32_t p, const Poly& modulus,
                                 std::uint64_t size_limit = FieldCtx::kDefaultSizeLimit);

bool is_prime_u64(std::uint64_t n);

}  // namespace comgraph

#endif  // COMGRAPH_FIELD_HPP
