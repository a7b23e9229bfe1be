#include "tsplash/field.hpp"

#include <numeric>

namespace tsplash {

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::shared_ptr<const FiniteField> FiniteField::prime(int p) {
  auto pp = prime_power(p);
  if (!pp || pp->second != 1) throw FieldError("GF(p) needs a prime, got " + std::to_string(p));
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->n_ = p;
  f->p_ = p;
  f->k_ = 1;
  f->add_.resize(p * p);
  f->mul_.resize(p * p);
  f->neg_.resize(p);
  for (int a = 0; a < p; ++a) {
    f->neg_[a] = static_cast<Elem>((p - a) % p);
    for (int b = 0; b < p; ++b) {
      f->add_[a * p + b] = static_cast<Elem>((a + b) % p);
      f->mul_[a * p + b] = static_cast<Elem>((a * b) % p);
    }
  }
  f->inv_.assign(p, 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if ((a * b) % p == 1) f->inv_[a] = static_cast<Elem>(b);
  return f;
}

std::shared_ptr<const FiniteField> FiniteField::extension(std::shared_ptr<const FiniteField> base,
                                                           std::vector<Elem> rule) {
  const int k = static_cast<int>(rule.size());
  if (k < 2 || k > 3) throw FieldError("extension degree must be 2 or 3");
  const FiniteField& K = *base;
  // Degree <= 3: irreducible iff no root in K.
  for (int x = 0; x < K.size(); ++x) {
    Elem val = 1;  // x^k - sum rule[i] x^i
    for (int i = 0; i < k; ++i) val = K.mul(val, static_cast<Elem>(x));
    Elem xp = 1;
    for (int i = 0; i < k; ++i) {
      val = K.sub(val, K.mul(rule[i], xp));
      xp = K.mul(xp, static_cast<Elem>(x));
    }
    if (val == 0) throw FieldError("extension polynomial has a root in the base field");
  }

  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  const int b = K.size();
  int n = 1;
  for (int i = 0; i < k; ++i) n *= b;
  f->n_ = n;
  f->p_ = K.characteristic();
  f->k_ = k;
  f->base_ = base;

  auto digits = [&](int a) {
    std::vector<Elem> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = static_cast<Elem>(a % b);
      a /= b;
    }
    return d;
  };
  auto encode = [&](const std::vector<Elem>& d) {
    int v = 0;
    for (int i = k - 1; i >= 0; --i) v = v * b + d[i];
    return static_cast<Elem>(v);
  };

  f->add_.resize(static_cast<size_t>(n) * n);
  f->mul_.resize(static_cast<size_t>(n) * n);
  f->neg_.resize(n);
  for (int a = 0; a < n; ++a) {
    auto da = digits(a);
    std::vector<Elem> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = K.neg(da[i]);
    f->neg_[a] = encode(dn);
    for (int c = 0; c < n; ++c) {
      auto dc = digits(c);
      std::vector<Elem> s(k);
      for (int i = 0; i < k; ++i) s[i] = K.add(da[i], dc[i]);
      f->add_[static_cast<size_t>(a) * n + c] = encode(s);
      // Schoolbook product then reduce x^j for j >= k using the rule.
      std::vector<Elem> prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) prod[i + j] = K.add(prod[i + j], K.mul(da[i], dc[j]));
      for (int j = 2 * k - 2; j >= k; --j) {
        Elem top = prod[j];
        prod[j] = 0;
        if (top == 0) continue;
        for (int i = 0; i < k; ++i) prod[j - k + i] = K.add(prod[j - k + i], K.mul(top, rule[i]));
      }
      prod.resize(k);
      f->mul_[static_cast<size_t>(a) * n + c] = encode(prod);
    }
  }
  f->inv_.assign(n, 0);
  for (int a = 1; a < n; ++a) {
    if (f->inv_[a] != 0) continue;
    for (int c = 1; c < n; ++c) {
      if (f->mul_[static_cast<size_t>(a) * n + c] == 1) {
        f->inv_[a] = static_cast<Elem>(c);
        f->inv_[c] = static_cast<Elem>(a);
        break;
      }
    }
  }
  return f;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  return inv_[a];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

Elem FiniteField::coeff(Elem a, int i) const {
  if (!base_) return i == 0 ? a : 0;
  int b = base_->size();
  int v = a;
  for (int j = 0; j < i; ++j) v /= b;
  return static_cast<Elem>(v % b);
}

Elem FiniteField::from_coeffs(const std::vector<Elem>& c) const {
  if (!base_) return c.empty() ? 0 : c[0];
  int b = base_->size();
  int v = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * b + c[i];
  return static_cast<Elem>(v);
}

std::uint64_t FiniteField::order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t k = 1;
  Elem x = a;
  while (x != 1) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------

bool FieldCtx::is_supported(int q) {
  auto pp = prime_power(q);
  return pp && pp->second <= 3 && q <= 9;
}

std::vector<Elem> FieldCtx::default_base_modulus(int q) {
  switch (q) {
    case 4: return {1, 1};     // x^2 + x + 1
    case 8: return {1, 1, 0};  // x^3 + x + 1
    case 9: return {2, 1};     // x^2 + x + 2
    default: return {};
  }
}

namespace {

std::shared_ptr<const FiniteField> make_base(int q, const std::vector<Elem>& modulus) {
  auto pp = prime_power(q);
  if (!pp) throw FieldError("q must be a prime power, got " + std::to_string(q));
  auto [p, k] = *pp;
  auto prime = FiniteField::prime(p);
  if (k == 1) return prime;
  if (static_cast<int>(modulus.size()) != k)
    throw FieldError("base modulus for q=" + std::to_string(q) + " needs " + std::to_string(k) +
                     " coefficients");
  std::vector<Elem> rule(k);
  for (int i = 0; i < k; ++i) {
    if (modulus[i] >= p) throw FieldError("base modulus coefficient out of range");
    rule[i] = prime->neg(modulus[i]);
  }
  return FiniteField::extension(prime, rule);
}

bool cubic_is_primitive(const FiniteField& base, CubicPoly t, std::shared_ptr<const FiniteField>* out) {
  try {
    auto ext = FiniteField::extension(std::shared_ptr<const FiniteField>(&base, [](const FiniteField*) {}),
                                      {t.t0, t.t1, t.t2});
    const int q = base.size();
    std::uint64_t full = static_cast<std::uint64_t>(q) * q * q - 1;
    if (ext->order(static_cast<Elem>(q)) != full) return false;
    if (out) *out = ext;
    return true;
  } catch (const FieldError&) {
    return false;
  }
}

}  // namespace

CubicPoly FieldCtx::default_cubic(int q) {
  if (q == 2) return {1, 1, 0};
  auto base = make_base(q, default_base_modulus(q));
  // Smallest primitive triple in (t0, t2, t1) order.
  for (int t0 = 1; t0 < q; ++t0)
    for (int t2 = 0; t2 < q; ++t2)
      for (int t1 = 0; t1 < q; ++t1) {
        CubicPoly t{static_cast<Elem>(t0), static_cast<Elem>(t1), static_cast<Elem>(t2)};
        if (cubic_is_primitive(*base, t, nullptr)) return t;
      }
  throw FieldError("no primitive cubic found");
}

FieldCtx FieldCtx::create(int q) { return create(q, default_cubic(q), default_base_modulus(q)); }

FieldCtx FieldCtx::create(int q, CubicPoly t, std::optional<std::vector<Elem>> base_modulus) {
  if (!is_supported(q)) throw FieldError("unsupported q=" + std::to_string(q) + " (need q <= 9)");
  auto pp = *prime_power(q);
  auto impl = std::make_shared<Impl>();
  impl->p = pp.first;
  impl->q = q;
  impl->t = t;
  if (pp.second > 1) impl->base_modulus = base_modulus ? *base_modulus : default_base_modulus(q);
  impl->base = make_base(q, impl->base_modulus);
  if (t.t0 >= q || t.t1 >= q || t.t2 >= q) throw FieldError("cubic coefficient out of range");
  try {
    impl->ext = FiniteField::extension(impl->base, {t.t0, t.t1, t.t2});
  } catch (const FieldError&) {
    throw FieldError("x^3 - t2 x^2 - t1 x - t0 is reducible over GF(" + std::to_string(q) + ")");
  }
  const std::uint64_t full = static_cast<std::uint64_t>(q) * q * q - 1;
  if (impl->ext->order(static_cast<Elem>(q)) != full)
    throw FieldError("tau is not primitive in GF(q^3) for the given cubic");
  impl->frob.resize(impl->ext->size());
  for (int x = 0; x < impl->ext->size(); ++x) impl->frob[x] = impl->ext->pow(static_cast<Elem>(x), q);
  return FieldCtx(impl);
}

Fq3 FieldCtx::fq3(Fq a0, Fq a1, Fq a2) const {
  return fq3(ext().from_coeffs({a0.value(), a1.value(), a2.value()}));
}

std::array<Fq, 3> FieldCtx::coeffs(Fq3 x) const {
  return {fq(ext().coeff(x.value(), 0)), fq(ext().coeff(x.value(), 1)), fq(ext().coeff(x.value(), 2))};
}

Fq FieldCtx::to_fq(Fq3 x) const {
  if (!in_subfield(x)) throw std::domain_error("element is not in GF(q)");
  return fq(x.value());
}

Fq FieldCtx::theta(Fq e) const {
  Fq3 a = embed(e) + tau();
  return to_fq(a * theta_minus(e));
}

Fq3 FieldCtx::theta_minus(Fq e) const {
  Fq3 a = embed(e) + tau();
  Fq3 b = frobenius(a);
  return b * frobenius(b);
}

std::vector<Fq> FieldCtx::fq_elements() const {
  std::vector<Fq> out;
  for (int v = 0; v < q(); ++v) out.push_back(fq(static_cast<Elem>(v)));
  return out;
}

std::vector<Fq3> FieldCtx::fq3_elements() const {
  std::vector<Fq3> out;
  for (int v = 0; v < ext().size(); ++v) out.push_back(fq3(static_cast<Elem>(v)));
  return out;
}

}  // namespace tsplash
