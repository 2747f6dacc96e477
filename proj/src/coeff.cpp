#include "shc/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace shc {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw StructureError("F_" + std::to_string(p) + ": modulus is not prime");
  Field f;
  f.kind_ = Kind::Prime;
  f.p_ = p;
  return f;
}

Field Field::parse(std::string_view name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
    if (ec == std::errc() && ptr == name.data() + name.size()) return prime(p);
  }
  throw ParseError("unknown field '" + std::string(name) + "' (expected Q or F<p>)");
}

std::string Field::name() const {
  return kind_ == Kind::Rational ? "Q" : "F" + std::to_string(p_);
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const std::uint32_t p = field.characteristic();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw NotInvertible("denominator vanishes in " + field.name());
  value_ = reduce(value.get_num(), p) * inverse_mod(den, p) % p;
}

void Scalar::require_same(const Scalar& o) const {
  if (field_ != o.field_) {
    throw StructureError("scalar ring mismatch: " + field_.name() + " vs " + o.field_.name());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_));
  } else {
    r.value_ = (std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(o.value_)) %
               field_.characteristic();
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_));
  } else {
    const std::uint64_t p = field_.characteristic();
    r.value_ = (std::get<std::uint64_t>(value_) + p - std::get<std::uint64_t>(o.value_)) % p;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_));
  } else {
    r.value_ = std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(o.value_) %
               field_.characteristic();
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const { return zero(field_) - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero in " + field_.name());
  Scalar r;
  r.field_ = field_;
  if (field_.is_rational()) {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  } else {
    r.value_ = inverse_mod(std::get<std::uint64_t>(value_), field_.characteristic());
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.is_rational()) return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
  return std::get<std::uint64_t>(value_) == std::get<std::uint64_t>(o.value_);
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_)) + " mod " +
         std::to_string(field_.characteristic());
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  std::string modulus;
  if (auto pos = s.find("mod"); pos != std::string::npos) {
    modulus = s.substr(pos + 3);
    s = s.substr(0, pos);
    if (field.is_rational() || modulus != std::to_string(field.characteristic())) {
      throw ParseError("literal '" + std::string(text) + "' does not belong to " + field.name());
    }
  }
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw ParseError("bad scalar literal '" + std::string(text) + "'");
  }
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(field, q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------- CoeffAlgebra

CoeffAlgebra CoeffAlgebra::grassmann(Field field, int rank) {
  if (rank < 0 || rank > kMaxOdd) {
    throw StructureError("Grassmann rank " + std::to_string(rank) + " outside [0, 16]");
  }
  CoeffAlgebra a;
  a.kind_ = Kind::Grassmann;
  a.inner_kind_ = Kind::Grassmann;
  a.field_ = field;
  a.odd_ = static_cast<std::uint8_t>(rank);
  return a;
}

CoeffAlgebra CoeffAlgebra::super_numbers(Field field) {
  CoeffAlgebra a = grassmann(field, 1);
  a.kind_ = Kind::SuperNumbers;
  a.inner_kind_ = Kind::SuperNumbers;
  return a;
}

CoeffAlgebra CoeffAlgebra::dual_extension(const CoeffAlgebra& inner) {
  if (inner.even_ >= kMaxEven) throw StructureError("too many even generators");
  CoeffAlgebra a = inner;
  a.inner_kind_ = inner.kind_;
  a.kind_ = Kind::DualExtension;
  ++a.even_;
  return a;
}

bool CoeffAlgebra::contains(Mask m) const {
  const Mask odd_allowed = (Mask{1} << odd_) - 1;
  const Mask even_allowed = ((Mask{1} << even_) - 1) << kEvenShift;
  return (m & ~(odd_allowed | even_allowed)) == 0;
}

std::vector<CoeffAlgebra::Mask> CoeffAlgebra::monomials() const {
  std::vector<Mask> out;
  const Mask total = Mask{1} << (odd_ + even_);
  out.reserve(total);
  for (Mask i = 0; i < total; ++i) {
    Mask odd = i & ((Mask{1} << odd_) - 1);
    Mask even = (i >> odd_) << kEvenShift;
    out.push_back(odd | even);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CoeffAlgebra::name() const {
  std::string base;
  switch (kind_) {
    case Kind::SuperNumbers:
      return field_.name() + "[eta]";
    case Kind::Grassmann:
      return "Lambda_" + std::to_string(odd_) + "(" + field_.name() + ")";
    case Kind::DualExtension:
      base = inner_kind_ == Kind::SuperNumbers ? field_.name() + "[eta]"
                                               : "Lambda_" + std::to_string(odd_) + "(" +
                                                     field_.name() + ")";
      for (int i = 0; i < even_; ++i) base += "[eps]";
      return base;
  }
  return base;
}

Coeff CoeffAlgebra::zero() const { return Coeff(*this); }
Coeff CoeffAlgebra::one() const { return Coeff(*this, Scalar::one(field_)); }
Coeff CoeffAlgebra::constant(const Scalar& s) const { return Coeff(*this, s); }
Coeff CoeffAlgebra::constant(long v) const { return Coeff(*this, Scalar(field_, v)); }

Coeff CoeffAlgebra::odd_generator(int i) const {
  if (i < 1 || i > odd_) throw StructureError("odd generator index out of range");
  return Coeff::monomial(*this, Mask{1} << (i - 1), Scalar::one(field_));
}

Coeff CoeffAlgebra::even_generator(int j) const {
  if (j < 1 || j > even_) throw StructureError("even generator index out of range");
  return Coeff::monomial(*this, Mask{1} << (kEvenShift + j - 1), Scalar::one(field_));
}

int merge_sign(CoeffAlgebra::Mask a, CoeffAlgebra::Mask b) {
  a &= CoeffAlgebra::kOddBits;
  b &= CoeffAlgebra::kOddBits;
  int inversions = 0;
  while (b) {
    const int j = __builtin_ctz(b);
    b &= b - 1;
    inversions += __builtin_popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

// ---------------------------------------------------------------- Coeff

Coeff::Coeff(const CoeffAlgebra& alg, const Scalar& constant) : alg_(alg) {
  if (constant.field() != alg.field()) throw StructureError("scalar ring differs from algebra ring");
  if (!constant.is_zero()) terms_.push_back({0, constant});
}

Coeff Coeff::monomial(const CoeffAlgebra& alg, Mask mask, const Scalar& c) {
  if (!alg.contains(mask)) throw StructureError("monomial outside " + alg.name());
  if (c.field() != alg.field()) throw StructureError("scalar ring differs from algebra ring");
  Coeff r(alg);
  if (!c.is_zero()) r.terms_.push_back({mask, c});
  return r;
}

void Coeff::require_same(const Coeff& o) const {
  if (alg_ != o.alg_) {
    throw StructureError("coefficient algebra mismatch: " + alg_.name() + " vs " + o.alg_.name());
  }
}

Coeff Coeff::from_unsorted(const CoeffAlgebra& alg, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mask < b.mask; });
  Coeff r(alg);
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mask == t.mask) {
      r.terms_.back().coeff += t.coeff;
    } else {
      if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
  return r;
}

bool Coeff::is_one() const { return terms_.size() == 1 && terms_[0].mask == 0 && terms_[0].coeff.is_one(); }

Scalar Coeff::coefficient(Mask m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Mask v) { return t.mask < v; });
  if (it != terms_.end() && it->mask == m) return it->coeff;
  return Scalar::zero(alg_.field());
}

Coeff Coeff::soul() const {
  Coeff r(alg_);
  for (const auto& t : terms_) {
    if (t.mask != 0) r.terms_.push_back(t);
  }
  return r;
}

Coeff Coeff::even_part() const {
  Coeff r(alg_);
  for (const auto& t : terms_) {
    if ((mask_odd_degree(t.mask) & 1) == 0) r.terms_.push_back(t);
  }
  return r;
}

Coeff Coeff::odd_part() const {
  Coeff r(alg_);
  for (const auto& t : terms_) {
    if (mask_odd_degree(t.mask) & 1) r.terms_.push_back(t);
  }
  return r;
}

bool Coeff::is_even() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return (mask_odd_degree(t.mask) & 1) == 0; });
}

bool Coeff::is_odd() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return (mask_odd_degree(t.mask) & 1) == 1; });
}

Coeff Coeff::flip() const {
  Coeff r = *this;
  for (auto& t : r.terms_) {
    if (mask_odd_degree(t.mask) & 1) t.coeff = -t.coeff;
  }
  return r;
}

Coeff Coeff::reduce_bar() const {
  Coeff r(alg_);
  for (const auto& t : terms_) {
    if ((t.mask & CoeffAlgebra::kOddBits) == 0) r.terms_.push_back(t);
  }
  return r;
}

int Coeff::order() const {
  int best = 1 << 20;
  for (const auto& t : terms_) best = std::min(best, mask_degree(t.mask));
  return best;
}

Coeff Coeff::inverse() const {
  const Scalar b = body();
  if (b.is_zero()) throw NotInvertible("element " + to_string() + " has zero body");
  const Coeff b_inv(alg_, b.inverse());
  const Coeff step = -(b_inv * soul());
  Coeff sum = alg_.one();
  Coeff power = alg_.one();
  for (int s = 1; s <= alg_.nilpotency_bound(); ++s) {
    power = power * step;
    if (power.is_zero()) break;
    sum += power;
  }
  return b_inv * sum;
}

bool Coeff::in_a1n(int n) const {
  if (n <= 0) throw std::invalid_argument("A_1^(n) requires n >= 1");
  // The subalgebra is spanned by 1 and the monomials whose odd degree splits
  // into t >= 1 parts, each of size >= n and of the parity of n.
  auto reachable = [n](int d) {
    for (int t = 1; t * n <= d; ++t) {
      if ((d - t * n) % 2 == 0) return true;
    }
    return false;
  };
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.mask == 0 || reachable(mask_odd_degree(t.mask));
  });
}

Coeff Coeff::change_algebra(const CoeffAlgebra& target) const {
  if (target.field() != alg_.field()) throw StructureError("change_algebra across fields");
  Coeff r(target);
  for (const auto& t : terms_) {
    if (target.contains(t.mask)) r.terms_.push_back(t);
  }
  return r;
}

Coeff Coeff::operator+(const Coeff& o) const {
  require_same(o);
  Coeff r(alg_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mask < b->mask)) {
      r.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->mask < a->mask) {
      r.terms_.push_back(*b++);
    } else {
      Scalar s = a->coeff + b->coeff;
      if (!s.is_zero()) r.terms_.push_back({a->mask, std::move(s)});
      ++a;
      ++b;
    }
  }
  return r;
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Scalar& s) const {
  if (s.field() != alg_.field()) throw StructureError("scalar ring differs from algebra ring");
  Coeff r(alg_);
  if (s.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mask, t.coeff * s});
  return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
  require_same(o);
  if (terms_.empty() || o.terms_.empty()) return Coeff(alg_);
  if (terms_.size() == 1 && terms_[0].mask == 0) return o * terms_[0].coeff;
  if (o.terms_.size() == 1 && o.terms_[0].mask == 0) return *this * o.terms_[0].coeff;
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      if (a.mask & b.mask) continue;
      Scalar c = a.coeff * b.coeff;
      if (merge_sign(a.mask, b.mask) < 0) c = -c;
      products.push_back({a.mask | b.mask, std::move(c)});
    }
  }
  return from_unsorted(alg_, std::move(products));
}

Coeff Coeff::pow(unsigned e) const {
  Coeff r = alg_.one();
  for (unsigned i = 0; i < e; ++i) {
    r = r * *this;
    if (r.is_zero()) break;
  }
  return r;
}

bool Coeff::operator==(const Coeff& o) const {
  if (alg_ != o.alg_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mask != o.terms_[i].mask || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

namespace {

std::string mask_to_string(CoeffAlgebra::Mask m) {
  std::string s = "x{";
  bool first = true;
  for (int i = 0; i < CoeffAlgebra::kMaxOdd; ++i) {
    if (m & (CoeffAlgebra::Mask{1} << i)) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
  }
  s += '}';
  const CoeffAlgebra::Mask even = m >> CoeffAlgebra::kEvenShift;
  if (even) {
    s += "e{";
    first = true;
    for (int j = 0; j < CoeffAlgebra::kMaxEven; ++j) {
      if (even & (CoeffAlgebra::Mask{1} << j)) {
        if (!first) s += ',';
        s += std::to_string(j + 1);
        first = false;
      }
    }
    s += '}';
  }
  return s;
}

class TermParser {
 public:
  TermParser(const CoeffAlgebra& alg, std::string_view text) : alg_(alg), text_(text) {}

  Coeff parse() {
    Coeff result(alg_);
    skip_ws();
    if (pos_ == text_.size()) throw error("empty expression");
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Coeff term = parse_term();
      result += negate ? -term : term;
      skip_ws();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c != '+' && c != '-') throw error("expected '+' or '-'");
      negate = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  ParseError error(const std::string& what) const {
    return ParseError("coefficient '" + std::string(text_) + "': " + what + " at offset " +
                      std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Coeff parse_term() {
    Scalar c = Scalar::one(alg_.field());
    bool have_scalar = false;
    skip_ws();
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '-')) {
      std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '/'))
        ++pos_;
      skip_ws();
      if (text_.substr(pos_, 3) == "mod") {
        pos_ += 3;
        skip_ws();
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      c = Scalar::parse(alg_.field(), text_.substr(start, pos_ - start));
      have_scalar = true;
      if (peek() == '*') {
        ++pos_;
      } else if (peek() != 'x' && peek() != 'e') {
        return Coeff(alg_, c);
      }
    }
    CoeffAlgebra::Mask mask = 0;
    bool have_monomial = false;
    if (peek() == 'x') {
      ++pos_;
      mask |= parse_index_set(0, CoeffAlgebra::kMaxOdd, &c);
      have_monomial = true;
    }
    if (peek() == 'e') {
      ++pos_;
      mask |= parse_index_set(CoeffAlgebra::kEvenShift, CoeffAlgebra::kMaxEven, nullptr);
      have_monomial = true;
    }
    if (!have_monomial) {
      if (!have_scalar) throw error("expected a term");
      throw error("expected monomial after '*'");
    }
    if (!alg_.contains(mask)) throw error("monomial uses generators outside " + alg_.name());
    return Coeff::monomial(alg_, mask, c);
  }

  // Odd generators may be listed out of order; the reordering sign is folded
  // into *sign.
  CoeffAlgebra::Mask parse_index_set(int shift, int limit, Scalar* sign) {
    if (peek() != '{') throw error("expected '{'");
    ++pos_;
    CoeffAlgebra::Mask mask = 0;
    if (peek() == '}') {
      ++pos_;
      return mask;
    }
    while (true) {
      skip_ws();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
      if (ec != std::errc()) throw error("expected generator index");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      if (value < 1 || value > limit) throw error("generator index out of range");
      const CoeffAlgebra::Mask bit = CoeffAlgebra::Mask{1} << (shift + value - 1);
      if (mask & bit) throw error("repeated generator index");
      if (sign && (mask_degree(mask & ~(bit - 1)) % 2)) *sign = -*sign;
      mask |= bit;
      char c = peek();
      ++pos_;
      if (c == '}') break;
      if (c != ',') throw error("expected ',' or '}'");
    }
    return mask;
  }

  const CoeffAlgebra& alg_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Coeff::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].coeff.to_string() + " * " + mask_to_string(terms_[i].mask);
  }
  return s;
}

Coeff Coeff::parse(const CoeffAlgebra& alg, std::string_view text) {
  return TermParser(alg, text).parse();
}

std::ostream& operator<<(std::ostream& os, const Coeff& c) { return os << c.to_string(); }

}  // namespace shc
