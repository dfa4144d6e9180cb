#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "json.hpp"
#include "rootfd/qpoly.hpp"

// Exact arithmetic in the real field Q(2cos(pi/M)) and rigorous sign
// determination via Sturm isolation plus interval refinement. Used for root
// coordinates of the non-crystallographic types (H3, H4, I2(m)).
namespace scalars {

using Rat = mpq_class;

struct FieldSpec {
    int bond;               // M
    qpoly::IntPoly modulus; // minimal polynomial of y = 2cos(pi/M), monic
    int degree;             // deg modulus = phi(2M)/2
    // isolating interval for y as the largest real root of the modulus;
    // modulus changes sign across it and contains exactly one root
    Rat iso_lo, iso_hi;
    // Sturm chain of the modulus, for the isolation self-check
    std::vector<std::vector<Rat>> sturm;
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

// M >= 3; modulus = palindromic_descend(cyclotomic(2M))
FieldPtr make_field(int M);

// sign changes of the chain at x; root count in (a, b] is count(a) - count(b)
int sturm_sign_changes(const std::vector<std::vector<Rat>>& chain, const Rat& x);
int sturm_roots_in(const FieldSpec& spec, const Rat& a, const Rat& b);

class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr spec, std::vector<Rat> coords);

    static Scalar from_rational(FieldPtr spec, Rat v);
    static Scalar zero(FieldPtr spec) { return from_rational(std::move(spec), 0); }
    static Scalar one(FieldPtr spec) { return from_rational(std::move(spec), 1); }
    static Scalar generator(FieldPtr spec);
    // 2cos(pi/k) for k in {2, 3, M}
    static Scalar two_cos(FieldPtr spec, int k);

    const FieldPtr& field() const { return spec_; }
    const std::vector<Rat>& coords() const { return coords_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // lexicographic on coordinates; total order for use as a map key
    bool operator<(const Scalar& o) const { return coords_ < o.coords_; }

    bool is_zero() const;
    // exact sign of the real number this scalar evaluates to at y = 2cos(pi/M)
    int sign() const;

    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    void check_same_field(const Scalar& o) const;
    FieldPtr spec_;
    std::vector<Rat> coords_;  // power-basis coordinates, length spec_->degree
};

}  // namespace scalars
