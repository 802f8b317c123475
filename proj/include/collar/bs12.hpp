#pragma once

#include <string>

#include "collar/common.hpp"
#include "collar/presentation.hpp"

namespace collar {

/// Exact dyadic rational m·2^e with m odd or zero (unique representation).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, long exponent) : m_(std::move(mantissa)), e_(exponent) { normalize(); }
  static Dyadic from_int(long v) { return Dyadic(BigInt(v), 0); }

  const BigInt& mantissa() const { return m_; }
  long exponent() const { return e_; }
  bool is_zero() const { return m_ == 0; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long e = std::min(a.e_, b.e_);
    BigInt m = (a.m_ << static_cast<unsigned>(a.e_ - e)) + (b.m_ << static_cast<unsigned>(b.e_ - e));
    return Dyadic(std::move(m), e);
  }

  Dyadic operator-() const { return Dyadic(-m_, e_); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

  /// Multiply by 2^s.
  Dyadic scaled(long s) const { return is_zero() ? *this : Dyadic(m_, e_ + s); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

  std::string str() const {
    if (e_ >= 0) return BigInt(m_ << static_cast<unsigned>(e_)).str();
    return m_.str() + "/2^" + std::to_string(-e_);
  }

 private:
  void normalize() {
    if (m_ == 0) {
      e_ = 0;
      return;
    }
    while ((m_ & 1) == 0) {
      m_ >>= 1;
      ++e_;
    }
  }

  BigInt m_ = 0;
  long e_ = 0;
};

/// An element of BS(1,2) = ⟨t, x | x = t x² t⁻¹⟩ as the matrix
/// [[2^{-k}, a], [0, 1]] with k the t-exponent and a ∈ Z[1/2].
/// Multiplication is the exact 2x2 matrix product:
/// (k₁,a₁)·(k₂,a₂) = (k₁+k₂, a₁ + 2^{-k₁}·a₂).
struct BSElement {
  long k = 0;
  Dyadic a;

  friend BSElement operator*(const BSElement& x, const BSElement& y) {
    return BSElement{x.k + y.k, x.a + y.a.scaled(-x.k)};
  }

  BSElement inverse() const { return BSElement{-k, (-a).scaled(k)}; }

  friend bool operator==(const BSElement& x, const BSElement& y) = default;

  static BSElement t() { return BSElement{1, Dyadic()}; }
  static BSElement x() { return BSElement{0, Dyadic::from_int(1)}; }
  static BSElement identity() { return BSElement{0, Dyadic()}; }

  std::string str() const { return "(k=" + std::to_string(k) + ", a=" + a.str() + ")"; }
};

inline BSElement bs_multiply(const BSElement& a, const BSElement& b) { return a * b; }
inline BSElement bs_inverse(const BSElement& a) { return a.inverse(); }

/// The t-exponent; a homomorphism onto Z with kernel exactly {k = 0} ≅ Z[1/2].
inline long bs_project(const BSElement& a) { return a.k; }

/// Group-model interface for verify_hom and friends.
struct BSGroupModel {
  using Element = BSElement;
  Element identity() const { return BSElement::identity(); }
  Element multiply(const Element& a, const Element& b) const { return a * b; }
  Element inverse(const Element& a) const { return a.inverse(); }
  bool is_identity(const Element& a) const { return a == BSElement::identity(); }
};

/// The presentation ⟨t, x | x⁻¹ t x² t⁻¹⟩ of BS(1,2) (relator form of x = t x² t⁻¹).
inline Presentation bs12_presentation() {
  Presentation p;
  p.generators = {"t", "x"};
  GenWord rel = GenWord::gen("x", -1) * GenWord::gen("t") * GenWord::gen("x") *
                GenWord::gen("x") * GenWord::gen("t", -1);
  p.relators = {rel.free_reduce()};
  return p;
}

}  // namespace collar
