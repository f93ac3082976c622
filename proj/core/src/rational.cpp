#include "polyunion/rational.hpp"

#include <algorithm>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Canonical natural number: digits only, no leading zero unless it is "0".
bool is_canonical_natural(std::string_view s) {
  return is_digits(s) && (s.size() == 1 || s.front() != '0');
}

}  // namespace

Rat make_rat(const Integer& num, const Integer& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rat> parse_rat(std::string_view text) {
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_canonical_natural(num_text)) return std::nullopt;
  Integer num(std::string(num_text), 10);
  if (negative && num == 0) return std::nullopt;
  if (negative) num = -num;
  if (slash == std::string_view::npos) return Rat(num);

  const std::string_view den_text = text.substr(slash + 1);
  if (!is_canonical_natural(den_text)) return std::nullopt;
  Integer den(std::string(den_text), 10);
  if (den <= 1 || num == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Rat(num, den);
}

Rat parse_rat_or_throw(std::string_view text) {
  auto r = parse_rat(text);
  if (!r) throw InputError("non-canonical or malformed rational '" + std::string(text) + "'");
  return *r;
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::string to_string(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

QVec zeros(std::size_t n) { return QVec(n, Rat(0)); }

QVec unit_vector(std::size_t n, std::size_t i) {
  QVec e = zeros(n);
  e.at(i) = 1;
  return e;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

QVec add(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("add: dimension mismatch");
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec sub(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("sub: dimension mismatch");
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec scale(std::span<const Rat> a, const Rat& s) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(std::span<const Rat> a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::strong_ordering lex_compare(std::span<const Rat> a, std::span<const Rat> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

IVec primitive_integer(std::span<const Rat> v) {
  Integer lcm_den = 1;
  for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (lcm_den / v[i].get_den());
  return primitive_integer(std::span<const Integer>(out));
}

IVec primitive_integer(std::span<const Integer> v) {
  Integer g = 0;
  for (const Integer& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IVec out(v.begin(), v.end());
  if (g > 1) {
    for (Integer& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

QVec to_rational(std::span<const Integer> v) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

std::size_t bit_size(std::span<const Rat> v) {
  std::size_t bits = 0;
  for (const Rat& x : v) {
    bits = std::max(bits, mpz_sizeinbase(x.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(x.get_den_mpz_t(), 2));
  }
  return bits;
}

}  // namespace polyunion
