#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

using Rational = mpq_class;

/// Arithmetic data for Q(zeta_N): the cyclotomic polynomial and the power
/// basis reduction of every zeta_N^k, k in [0, N).
class CyclotomicField {
public:
    /// Interned field for conductor n. Thread safe; the returned reference is
    /// valid for the lifetime of the program.
    static const CyclotomicField& get(int n);

    int conductor() const { return n_; }
    int degree() const { return phi_; }
    /// Coefficients of zeta^k in the power basis, k taken mod N.
    const std::vector<long>& power(long k) const;
    const std::vector<long>& minimal_polynomial() const { return cyclo_; }

private:
    static const CyclotomicField& lookup(int n);
    explicit CyclotomicField(int n);

    int n_;
    int phi_;
    std::vector<long> cyclo_;               // monic, low degree first, size phi+1
    std::vector<std::vector<long>> powers_; // size n
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact element of a cyclotomic field. Rationals live in Q(zeta_1). Mixed
/// conductors meet in the compositum Q(zeta_lcm).
class Cyc {
public:
    Cyc();
    Cyc(long v);  // NOLINT(google-explicit-constructor)
    Cyc(const Rational& q);  // NOLINT(google-explicit-constructor)
    Cyc(long num, long den);

    static Cyc root_of_unity(int n, long k);
    static Cyc from_coefficients(int n, std::vector<Rational> coeffs);

    int conductor() const { return field_->conductor(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return field_->conductor() == 1; }
    /// Only valid when is_rational().
    const Rational& rational() const;

    Cyc conj() const;
    Cyc inverse() const;
    /// Embedding into Q(zeta_n); n must be a multiple of the conductor.
    Cyc embed(int n) const;

    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    Cyc& operator*=(const Cyc& o);
    Cyc& operator/=(const Cyc& o);
    Cyc operator-() const;

    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
    friend bool operator==(const Cyc& a, const Cyc& b);
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    /// Canonical text form: sum of "a/b*zN^k" terms, or a plain rational.
    std::string to_string() const;
    /// Inverse of to_string; also accepts products, quotients, parentheses and
    /// "zN", "zN^k" atoms, e.g. "z3^2/2", "1/2*z8^3 - 1", "-1/5".
    static Cyc parse(std::string_view text);

    /// Floating value under the embedding zeta_N -> exp(2 pi i / N).
    double real_approx() const;
    double imag_approx() const;

private:
    Cyc(const CyclotomicField* f, std::vector<Rational> c);
    void normalize();
    void align(Cyc& other);

    const CyclotomicField* field_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& z);

/// zeta_n^k.
inline Cyc root_of_unity(int n, long k) { return Cyc::root_of_unity(n, k); }

/// If z is a root of unity, returns (m, k) with z = zeta_m^k, m the
/// multiplicative order and gcd(k, m) = 1; throws std::domain_error otherwise.
std::pair<int, long> root_of_unity_form(const Cyc& z);

/// Fixed square root convention: zeta_m^k -> zeta_{2m}^k (k reduced mod m).
Cyc sqrt_root_of_unity(const Cyc& z);

/// Sign of a real element under the standard complex embedding. Exact zero
/// test first, then interval evaluation at increasing precision.
/// Throws std::domain_error if z is not real; std::runtime_error if the
/// precision ladder is exhausted.
Sign certified_sign(const Cyc& z);

}  // namespace cherednik
