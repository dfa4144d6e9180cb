#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

// Exact univariate polynomial arithmetic over the integers: q-integers,
// cyclotomic polynomials, exact division and gcd, evaluation at roots of
// unity. The coefficient type is arbitrary-precision throughout; rationals
// appear only transiently inside exact_div and gcd_primitive.
namespace qpoly {

using Int = mpz_class;

struct DivisibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v);
    // c * q^e
    static IntPoly monomial(int e, Int c = 1);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    // coefficient of q^i, zero outside the stored range
    const Int& coeff(int i) const;

    Int eval_at_one() const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    // substitute q -> q^k
    IntPoly inflate(int k) const;

    // "1 + 2*q + q^3", zero terms omitted; "0" for the zero polynomial
    std::string to_text() const;
    nlohmann::json to_json() const;

private:
    void trim();
    std::vector<Int> c_;  // c_[i] = coefficient of q^i; trailing zeros trimmed
};

IntPoly one();

// [n]_q = 1 + q + ... + q^{n-1}; n >= 1
IntPoly q_int(int n);
// [n]_{q^k}
IntPoly q_int_scaled(int n, int k);

// f / g when g divides f exactly over the rationals with an integer quotient;
// throws DivisibilityError otherwise.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);
bool divides(const IntPoly& g, const IntPoly& f);

// gcd over Q, normalized primitive with positive leading coefficient
IntPoly gcd_primitive(const IntPoly& f, const IntPoly& g);

// n-th cyclotomic polynomial, via (q^n - 1) / prod_{d|n, d<n} Phi_d
IntPoly cyclotomic(int n);

// Value f(zeta_n^m) as a representative modulo Phi_n.
struct RootOfUnityValue {
    IntPoly rep;
    bool is_integer() const { return rep.degree() <= 0; }
    Int integer_value() const;  // requires is_integer()
};
RootOfUnityValue eval_at_root_of_unity(const IntPoly& f, int n, long m);

// For palindromic P of even degree 2d, the unique psi of degree d with
// P(x) = x^d * psi(x + 1/x).
IntPoly palindromic_descend(const IntPoly& P);

}  // namespace qpoly
