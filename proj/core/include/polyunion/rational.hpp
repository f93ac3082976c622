#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyunion {

using Integer = mpz_class;
// GMP keeps mpq_class canonical after every arithmetic operation; values built
// from a numerator/denominator pair go through make_rat.
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using IVec = std::vector<Integer>;

Rat make_rat(const Integer& num, const Integer& den);

/// Strict parser for the `p/q` literal syntax: rejects non-canonical forms
/// such as `2/4`, `3/1`, `-0`, `+1`, `01` or a negative denominator.
std::optional<Rat> parse_rat(std::string_view text);
Rat parse_rat_or_throw(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(std::span<const Rat> v);

QVec zeros(std::size_t n);
QVec unit_vector(std::size_t n, std::size_t i);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
QVec add(std::span<const Rat> a, std::span<const Rat> b);
QVec sub(std::span<const Rat> a, std::span<const Rat> b);
QVec scale(std::span<const Rat> a, const Rat& s);
bool is_zero(std::span<const Rat> a);

/// Lexicographic three-way comparison; shorter vectors order first on a tie.
std::strong_ordering lex_compare(std::span<const Rat> a, std::span<const Rat> b);

struct LexLess {
  bool operator()(const QVec& a, const QVec& b) const { return lex_compare(a, b) < 0; }
};

/// Smallest positive multiple of `v` with integer entries and gcd 1.
/// The zero vector maps to the zero vector.
IVec primitive_integer(std::span<const Rat> v);
IVec primitive_integer(std::span<const Integer> v);
QVec to_rational(std::span<const Integer> v);

/// Largest bit length over all numerators and denominators.
std::size_t bit_size(std::span<const Rat> v);

}  // namespace polyunion
