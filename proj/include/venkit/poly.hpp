#ifndef VENKIT_POLY_HPP
#define VENKIT_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "venkit/ring.hpp"

namespace venkit {

/// Signed exponent vector indexed by the ring's variables.
using Monomial = std::vector<std::int32_t>;

/// grlex: total degree first, then lexicographic in variable order.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct Term {
    mpz_class coeff;  // never zero in a canonical Poly
    Monomial mono;
};

/// Sparse multivariate Laurent polynomial over Z in canonical form:
/// terms strictly grlex-descending, nonzero coefficients, no duplicates.
class Poly {
public:
    explicit Poly(Ring ring) : ring_(std::move(ring)) {}
    Poly(Ring ring, std::vector<Term> terms);  // normalizes

    static Poly zero(const Ring& ring) { return Poly(ring); }
    static Poly constant(const Ring& ring, mpz_class c);
    static Poly variable(const Ring& ring, std::size_t index);
    static Poly variable(const Ring& ring, std::string_view name);
    static Poly monomial(const Ring& ring, mpz_class c, Monomial exps);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Total degree of the leading term; 0 for the zero polynomial.
    std::int64_t degree() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly pow(unsigned e) const;

    /// Reinterpret over a ring with the same variables (flags must permit
    /// every exponent already present).
    Poly cast_to(const Ring& target) const;

    /// True when no variable listed in `cleared` appears with a negative
    /// exponent; `cleared` indexes this poly's ring.
    bool integral_without(std::span<const std::size_t> cleared) const;

private:
    Ring ring_;
    std::vector<Term> terms_;

    void validate_flags() const;
    friend Poly normalized(Ring ring, std::vector<Term> raw);
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly neg(const Poly& p);
Poly mul(const Poly& p, const Poly& q);

inline Poly operator*(long c, const Poly& p) {
    return Poly::constant(p.ring(), c) * p;
}
inline Poly operator*(const Poly& p, long c) { return c * p; }
inline Poly operator+(const Poly& p, long c) {
    return p + Poly::constant(p.ring(), c);
}
inline Poly operator-(const Poly& p, long c) {
    return p - Poly::constant(p.ring(), c);
}

/// Ring-homomorphism image of p: variable i goes to images[i] (all in the
/// target ring). Negative source exponents require the image to be a unit
/// monomial (single term, coefficient +-1).
Poly substitute(const Poly& p, std::span<const Poly> images, const Ring& target);

Poly partial_derivative(const Poly& p, std::size_t var);
Poly partial_derivative(const Poly& p, std::string_view var);

/// d(f)/d(var1) * d(g)/d(var2) - d(f)/d(var2) * d(g)/d(var1).
Poly jacobian2(const Poly& f, const Poly& g, std::string_view var1,
               std::string_view var2);

/// Exact quotient h with p = q*h, or nullopt when q does not divide p in
/// p's ring. Factors out the largest common monomial of each operand first
/// so the leading-term division argument applies to the polynomial parts.
std::optional<Poly> exact_div(const Poly& p, const Poly& q);

/// Generator of a monomial ideal: a pure power of one variable.
struct MonomialGen {
    std::size_t var;
    std::int32_t exp;  // > 0
};

std::vector<MonomialGen> parse_gens(const Ring& ring,
                                    std::span<const std::pair<std::string, int>> gens);

/// p minus every term divisible by some generator.
Poly reduce_mod_monomials(const Poly& p, std::span<const MonomialGen> gens);
/// True iff every term of p is divisible by at least one generator.
bool monomial_ideal_member(const Poly& p, std::span<const MonomialGen> gens);

/// Exact-exponent pattern for a subset of variables.
struct ExponentPattern {
    std::size_t var;
    std::int32_t exp;
};

/// Coefficient of the pattern monomial: collects terms matching the given
/// exponents exactly and returns them as a polynomial over the remaining
/// variables.
Poly coeff_in(const Poly& p, std::span<const ExponentPattern> pattern);
Poly coeff_in(const Poly& p,
              std::span<const std::pair<std::string, int>> pattern);

/// Exact evaluation; Laurent-flagged variables must be assigned nonzero
/// values.
mpq_class eval_at(const Poly& p, std::span<const mpq_class> values);

}  // namespace venkit

#endif
