#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccr/error.hpp"

namespace ccr {

using Rational = mpq_class;

// Coefficient domains.  All arithmetic is exact:
//   - Q:      arbitrary-precision rationals (GMP)
//   - Fp:     prime fields Z/p
//   - Cyc(m): the cyclotomic field Q(zeta_m) in the power basis
//             1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic
//             polynomial
enum class Kind : std::uint8_t { Rational = 0, PrimeField = 1, Cyclotomic = 2 };

struct FieldSpec {
    Kind kind = Kind::Rational;
    long p = 0;  // modulus when kind == PrimeField
    long m = 1;  // conductor when kind == Cyclotomic

    static FieldSpec Q() { return FieldSpec{}; }
    static FieldSpec Fp(long p);   // validates primality
    static FieldSpec Cyc(long m);  // validates m >= 1

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && p == o.p && m == o.m;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

// Euler phi and the m-th cyclotomic polynomial (monic, integer coefficients,
// degree phi(m); returned as coefficient vector of length phi(m)+1, constant
// term first).  Results are cached.
long euler_phi(long m);
const std::vector<Rational>& cyclotomic_polynomial(long m);

class Scalar {
  public:
    Scalar() : kind_(Kind::Rational), q_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(const FieldSpec& f, const Rational& v);
    static Scalar fp(long p, long r);
    // Coefficient vector of any length; reduced mod the cyclotomic polynomial.
    static Scalar cyc(long m, std::vector<Rational> coeffs);
    // zeta_d^e inside the field f.  Requires d | m for Cyc(m); d in {1,2} over Q.
    static Scalar root_of_unity(const FieldSpec& f, long d, long e);

    FieldSpec field() const;
    Kind kind() const { return kind_; }

    bool is_zero() const;
    bool is_one() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // MathError on zero divisor
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(long e) const;  // negative e allowed for invertible values
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Deterministic total order within one field (used for canonical sorting
    // of basis labels and report rows).  TypeError across fields.
    int cmp(const Scalar& o) const;

    // Exact integer extraction: defined for Rational with denominator 1 and
    // for Cyclotomic values that are rational integers.  For PrimeField the
    // residue is returned.
    std::optional<long> as_integer() const;
    // Rational extraction (Rational always; Cyclotomic when all higher
    // power-basis coefficients vanish).
    std::optional<Rational> as_rational() const;

    std::string str() const;

    // accessors used by serialization
    long prime() const { return p_; }
    long conductor() const { return m_; }
    long residue() const { return r_; }
    const Rational& rational_value() const { return q_; }
    const std::vector<Rational>& coeffs() const { return c_; }

  private:
    Kind kind_;
    long p_ = 0;  // PrimeField modulus
    long m_ = 1;  // Cyclotomic conductor
    long r_ = 0;  // PrimeField residue, in [0, p)
    Rational q_;  // Rational value
    std::vector<Rational> c_;  // Cyclotomic coefficients, length phi(m)

    void require_same_field(const Scalar& o, const char* op) const;
};

// Convenience for tests and instance builders.
inline Scalar operator*(long a, const Scalar& s) {
    return Scalar::from_int(s.field(), a) * s;
}

}  // namespace ccr
