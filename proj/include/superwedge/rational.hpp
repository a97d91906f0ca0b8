#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace superwedge {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

// Accepts "p", "-p", "+p" and "p/q". The Unicode minus sign is accepted in
// place of '-'. Decimal points, exponents and zero denominators are rejected
// with std::invalid_argument.
Scalar parse_rational(std::string_view text);

// Lowest terms, sign on the numerator, no denominator when it is 1.
std::string to_string(const Scalar& value);
std::string to_string(const Vector& v);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

// y += a * x
void add_scaled(Vector& y, const Scalar& a, const Vector& x);
Vector scaled(const Scalar& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);

}  // namespace superwedge
