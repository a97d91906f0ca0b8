#include "superwedge/rational.hpp"

#include <stdexcept>

namespace superwedge {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Scalar parse_rational(std::string_view text) {
    std::string s(text);
    // U+2212 MINUS SIGN
    const std::string unicode_minus = "\xE2\x88\x92";
    if (s.rfind(unicode_minus, 0) == 0) s = "-" + s.substr(unicode_minus.size());

    bool negative = false;
    std::string_view body(s);
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Scalar q(n, d);
    q.canonicalize();
    return negative ? Scalar(-q) : q;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

std::string to_string(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

Vector zero_vector(std::size_t n) { return Vector(n, Scalar(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) return false;
    }
    return true;
}

void add_scaled(Vector& y, const Scalar& a, const Vector& x) {
    if (y.size() != x.size()) throw std::invalid_argument("add_scaled: dimension mismatch");
    if (sgn(a) == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (sgn(x[i]) != 0) y[i] += a * x[i];
    }
}

Vector scaled(const Scalar& a, const Vector& x) {
    Vector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i];
    return out;
}

Vector operator+(const Vector& a, const Vector& b) {
    Vector out = a;
    add_scaled(out, Scalar(1), b);
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    Vector out = a;
    add_scaled(out, Scalar(-1), b);
    return out;
}

}  // namespace superwedge
