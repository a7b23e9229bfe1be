#pragma once

// Table-driven arithmetic for GF(q) and its cubic extension GF(q^3).
//
// Elements are small integers.  A prime field GF(p) uses 0..p-1; an extension
// K[x]/(m) stores c_0 + c_1 x + ... + c_{k-1} x^{k-1} as sum c_i |K|^i.  With
// this encoding the subfield K sits inside the extension as the indices
// 0..|K|-1, so a vector over GF(q) is already a vector over GF(q^3).

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsplash {

using Elem = std::uint16_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FiniteField {
 public:
  /// GF(p) for a prime p.
  static std::shared_ptr<const FiniteField> prime(int p);

  /// base[x] / (x^k - rule[k-1] x^{k-1} - ... - rule[0]).  The polynomial must
  /// be irreducible over base; only k <= 3 is supported (root test).
  static std::shared_ptr<const FiniteField> extension(std::shared_ptr<const FiniteField> base,
                                                       std::vector<Elem> rule);

  int size() const { return n_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }  // over base(), 1 for a prime field
  const FiniteField* base() const { return base_.get(); }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * n_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Coefficient i of a over base() (a itself for a prime field, i == 0).
  Elem coeff(Elem a, int i) const;
  Elem from_coeffs(const std::vector<Elem>& c) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Elem a) const;

 private:
  FiniteField() = default;

  int n_ = 0;
  int p_ = 0;
  int k_ = 1;
  std::shared_ptr<const FiniteField> base_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

/// A field element bound to its field.  Fq and Fq3 are distinct types so that
/// a GF(q) scalar cannot silently be used where a GF(q^3) one is expected.
template <int Level>
class Element {
 public:
  Element() = default;
  Element(const FiniteField* f, Elem v) : f_(f), v_(v) {}

  Elem value() const { return v_; }
  const FiniteField& field() const { return *f_; }
  bool is_zero() const { return v_ == 0; }

  friend Element operator+(Element a, Element b) { return {a.f_, a.f_->add(a.v_, b.v_)}; }
  friend Element operator-(Element a, Element b) { return {a.f_, a.f_->sub(a.v_, b.v_)}; }
  friend Element operator*(Element a, Element b) { return {a.f_, a.f_->mul(a.v_, b.v_)}; }
  friend Element operator/(Element a, Element b) { return {a.f_, a.f_->div(a.v_, b.v_)}; }
  Element operator-() const { return {f_, f_->neg(v_)}; }
  Element& operator+=(Element b) { return *this = *this + b; }
  Element& operator-=(Element b) { return *this = *this - b; }
  Element& operator*=(Element b) { return *this = *this * b; }
  Element inverse() const { return {f_, f_->inv(v_)}; }
  Element pow(std::uint64_t e) const { return {f_, f_->pow(v_, e)}; }

  friend bool operator==(Element a, Element b) { return a.v_ == b.v_; }
  friend auto operator<=>(Element a, Element b) { return a.v_ <=> b.v_; }

 private:
  const FiniteField* f_ = nullptr;
  Elem v_ = 0;
};

using Fq = Element<1>;
using Fq3 = Element<3>;

/// tau^3 = t0 + t1 tau + t2 tau^2, i.e. tau is a root of x^3 - t2 x^2 - t1 x - t0.
struct CubicPoly {
  Elem t0 = 0, t1 = 0, t2 = 0;
  bool operator==(const CubicPoly&) const = default;
};

/// Parameters of GF(q) and GF(q^3) = GF(q)[tau].  Cheap to copy; the tables
/// are shared and immutable.
class FieldCtx {
 public:
  /// Uses the shipped default polynomials for q.
  static FieldCtx create(int q);
  /// base_modulus: low coefficients m_0..m_{k-1} of the monic polynomial
  /// defining GF(q) over GF(p) (ignored when q is prime).
  static FieldCtx create(int q, CubicPoly t, std::optional<std::vector<Elem>> base_modulus = {});

  static CubicPoly default_cubic(int q);
  static std::vector<Elem> default_base_modulus(int q);
  static bool is_supported(int q);

  int p() const { return impl_->p; }
  int q() const { return impl_->q; }
  const CubicPoly& poly() const { return impl_->t; }
  const std::vector<Elem>& base_modulus() const { return impl_->base_modulus; }

  const FiniteField& base() const { return *impl_->base; }
  const FiniteField& ext() const { return *impl_->ext; }

  Fq fq(Elem v) const { return {impl_->base.get(), v}; }
  Fq3 fq3(Elem v) const { return {impl_->ext.get(), v}; }
  Fq3 fq3(Fq a0, Fq a1, Fq a2) const;
  Fq3 embed(Fq a) const { return fq3(a.value()); }
  Fq3 tau() const { return fq3(static_cast<Elem>(q())); }
  Fq t0() const { return fq(poly().t0); }
  Fq t1() const { return fq(poly().t1); }
  Fq t2() const { return fq(poly().t2); }

  /// Coefficients (a0, a1, a2) of x = a0 + a1 tau + a2 tau^2.
  std::array<Fq, 3> coeffs(Fq3 x) const;
  bool in_subfield(Fq3 x) const { return x.value() < q(); }
  /// The GF(q) element equal to x; throws if x is not in the subfield.
  Fq to_fq(Fq3 x) const;

  Fq3 frobenius(Fq3 x) const { return fq3(impl_->frob[x.value()]); }
  Elem frobenius(Elem x) const { return impl_->frob[x]; }

  /// (e + tau)(e + tau^q)(e + tau^{q^2}), an element of GF(q).
  Fq theta(Fq e) const;
  /// (e + tau^q)(e + tau^{q^2}).
  Fq3 theta_minus(Fq e) const;

  std::vector<Fq> fq_elements() const;
  std::vector<Fq3> fq3_elements() const;

 private:
  struct Impl {
    int p = 0, q = 0;
    CubicPoly t;
    std::vector<Elem> base_modulus;
    std::shared_ptr<const FiniteField> base, ext;
    std::vector<Elem> frob;
  };
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Decomposes q = p^k for prime p; nullopt if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

}  // namespace tsplash
