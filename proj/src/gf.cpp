#include "ogc/gf.hpp"

#include <algorithm>
#include <sstream>

#include "ogc/error.hpp"

namespace ogc::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + static_cast<std::uint64_t>(p - lead) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint64_t v, std::uint32_t p, std::uint32_t count) {
  Poly d(count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t encode(const Poly& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Conway polynomials, coefficients low-to-high.
struct ShippedPoly {
  std::uint32_t q;
  Poly poly;
};

const std::vector<ShippedPoly>& shipped_polys() {
  static const std::vector<ShippedPoly> table = {
      {4, {1, 1, 1}},        {8, {1, 1, 0, 1}},  {9, {2, 2, 1}},
      {16, {1, 1, 0, 0, 1}}, {25, {2, 4, 1}},    {27, {1, 2, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}}, {49, {3, 6, 1}},
  };
  return table;
}

}  // namespace

std::uint32_t FieldSpec::q() const noexcept { return static_cast<std::uint32_t>(ipow(p, e)); }

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "GF(" << q() << ") p=" << p << " e=" << e << " poly=";
  for (std::size_t i = 0; i < irreducible.size(); ++i) os << (i ? "," : "") << irreducible[i];
  return os.str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2 || q > 0xFFFFFFFFull) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(q), 1};
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::pair<std::uint32_t, std::uint32_t>{static_cast<std::uint32_t>(p), e};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::uint32_t d = static_cast<std::uint32_t>(poly.size() - 1);
  const Poly f(poly.begin(), poly.end());
  for (std::uint32_t k = 1; k <= d / 2; ++k) {
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, k);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec make_spec(std::uint32_t q, std::vector<std::uint32_t> poly) {
  const auto pe = prime_power(q);
  if (!pe) throw InvalidField("not a prime power: " + std::to_string(q));
  FieldSpec spec{pe->first, pe->second, std::move(poly)};
  if (spec.irreducible.size() != spec.e + 1)
    throw InvalidField("irreducible polynomial for q=" + std::to_string(q) + " must have degree " +
                       std::to_string(spec.e));
  for (auto c : spec.irreducible)
    if (c >= spec.p) throw InvalidField("polynomial coefficient out of range for p=" + std::to_string(spec.p));
  if (!is_irreducible(spec.p, spec.irreducible))
    throw InvalidField("polynomial is not monic irreducible over F_" + std::to_string(spec.p));
  return spec;
}

FieldSpec default_spec(std::uint32_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw InvalidField("not a prime power: " + std::to_string(q));
  const auto [p, e] = *pe;
  if (e == 1) return FieldSpec{p, 1, {0, 1}};
  for (const auto& s : shipped_polys())
    if (s.q == q) return FieldSpec{p, e, s.poly};
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits(c, p, e);
    f.push_back(1);
    if (is_irreducible(p, f)) return FieldSpec{p, e, f};
  }
  throw InvalidField("no irreducible polynomial found for q=" + std::to_string(q));
}

FieldPtr Field::make(FieldSpec spec) {
  spec = make_spec(spec.q(), spec.irreducible);
  return FieldPtr(new Field(std::move(spec)));
}

FieldPtr Field::of_order(std::uint32_t q) { return make(default_spec(q)); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.q()) {
  if (q_ == 2) {
    primitive_ = Elem{1};
  } else {
    const auto factors = prime_factors(q_ - 1);
    for (std::uint32_t g = 2; g < q_; ++g) {
      bool generator = true;
      for (auto r : factors) {
        Elem acc{1};
        const std::uint64_t n = (q_ - 1) / r;
        for (std::uint64_t i = 0; i < n; ++i) acc = mul_schoolbook(acc, Elem{g});
        if (acc == Elem{1}) {
          generator = false;
          break;
        }
      }
      if (generator) {
        primitive_ = Elem{g};
        break;
      }
    }
  }
  if (q_ <= kMaxTableOrder) {
    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    Elem x{1};
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = x.rep;
      exp_[i + q_ - 1] = x.rep;
      log_[x.rep] = i;
      x = mul_schoolbook(x, primitive_);
    }
  }
}

Elem Field::from_int(long long v) const noexcept {
  const long long p = spec_.p;
  return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem Field::element(std::uint64_t rep) const {
  if (rep >= q_) throw InvalidField("encoding " + std::to_string(rep) + " out of range for q=" + std::to_string(q_));
  return Elem{static_cast<std::uint32_t>(rep)};
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (spec_.p == 2) return Elem{a.rep ^ b.rep};
  if (spec_.e == 1) return Elem{(a.rep + b.rep) % spec_.p};
  std::uint32_t out = 0, scale = 1, x = a.rep, y = b.rep;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    out += ((x % spec_.p + y % spec_.p) % spec_.p) * scale;
    x /= spec_.p;
    y /= spec_.p;
    scale *= spec_.p;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const noexcept {
  if (spec_.p == 2) return a;
  if (spec_.e == 1) return Elem{(spec_.p - a.rep) % spec_.p};
  std::uint32_t out = 0, scale = 1, x = a.rep;
  for (std::uint32_t i = 0; i < spec_.e; ++i) {
    out += ((spec_.p - x % spec_.p) % spec_.p) * scale;
    x /= spec_.p;
    scale *= spec_.p;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul_schoolbook(Elem a, Elem b) const noexcept {
  const Poly x = digits(a.rep, spec_.p, spec_.e);
  const Poly y = digits(b.rep, spec_.p, spec_.e);
  Poly prod(2 * spec_.e, 0);
  for (std::uint32_t i = 0; i < spec_.e; ++i)
    for (std::uint32_t j = 0; j < spec_.e; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % spec_.p);
  return Elem{static_cast<std::uint32_t>(encode(poly_mod(std::move(prod), spec_.irreducible, spec_.p), spec_.p))};
}

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (a.rep == 0 || b.rep == 0) return Elem{0};
  if (spec_.e == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.rep) * b.rep % spec_.p)};
  if (!log_.empty()) return Elem{exp_[log_[a.rep] + log_[b.rep]]};
  return mul_schoolbook(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.rep == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (!log_.empty()) return Elem{exp_[(q_ - 1 - log_[a.rep]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t n) const noexcept {
  Elem r{1};
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

bool Field::is_square(Elem a) const noexcept {
  if (spec_.p == 2 || a.rep == 0) return true;
  return pow(a, (q_ - 1) / 2) == Elem{1};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
  return out;
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (!field_) throw InvalidField("null field");
  field_->element(value_.rep);
}

FieldElement::FieldElement(FieldPtr field, std::uint64_t rep) : field_(std::move(field)) {
  if (!field_) throw InvalidField("null field");
  value_ = field_->element(rep);
}

namespace {

const Field& shared(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same_as(*b.field()))
    throw SpecMismatch("operands from " + a.field()->spec().to_string() + " and " + b.field()->spec().to_string());
  return *a.field();
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  return {a.field(), shared(a, b).add(a.value(), b.value())};
}
FieldElement sub(const FieldElement& a, const FieldElement& b) {
  return {a.field(), shared(a, b).sub(a.value(), b.value())};
}
FieldElement mul(const FieldElement& a, const FieldElement& b) {
  return {a.field(), shared(a, b).mul(a.value(), b.value())};
}
FieldElement neg(const FieldElement& a) { return {a.field(), a.field()->neg(a.value())}; }
FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.value())}; }
FieldElement pow(const FieldElement& a, std::uint64_t n) { return {a.field(), a.field()->pow(a.value(), n)}; }
bool is_square(const FieldElement& a) { return a.field()->is_square(a.value()); }

std::vector<FieldElement> elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q());
  for (auto x : field->elements()) out.emplace_back(field, x);
  return out;
}

}  // namespace ogc::gf
