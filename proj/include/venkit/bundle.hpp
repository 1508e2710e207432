#ifndef VENKIT_BUNDLE_HPP
#define VENKIT_BUNDLE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "venkit/poly.hpp"
#include "venkit/polymap.hpp"

namespace venkit {

/// Triangular plane automorphism (t, xi) -> (t, xi + q(t)/(x^k v^l)) over
/// the doubly localized base; q lives in Z[x, v, t].
struct TransitionFunction {
    Poly q;
    int k = 0, l = 0;

    /// The bundle over the punctured plane attached to the n-th family
    /// member: q = p_n, (k, l) = (3, 2) for n >= 2 and (3, 3) for n = 1.
    static TransitionFunction family(int n);
    /// Truncation of family(n) to t-degree m. The constant t-coefficient
    /// must vanish, and does for every p_n.
    static TransitionFunction approximation(int n, int m);
};

/// Exponents (k, l) used by the n-th family member.
std::pair<int, int> family_exponents(int n);

/// Data of a chart pair (a, b0/x^k), (a, b1/v^l) subject to the cocycle
/// relation x^k*b1 - v^l*b0 = q(a).
struct Certificate {
    Poly a, b0, b1;
    int k = 0, l = 0;
};

/// The explicit solution triple: a = v^2*t - x*xi + v*xi^2,
/// b0 = x^2*t - v*delta^2 + 2*x*delta*xi, b1 = xi (v*xi when n = 1).
Certificate sol_certificate(int n);

bool verify_cocycle(const Certificate& cert, const TransitionFunction& tf);

/// The common quotient jac(a,b0)/x^k = jac(a,b1)/v^l in Z[x,v,t,xi].
/// Throws when either division fails or the quotients disagree.
Poly cert_quotient(const Certificate& cert);

/// cert_quotient restricted to the base ring: additionally rejects
/// quotients involving t or xi.
Poly cert_d(const Certificate& cert);

/// Checks jac(b0,b1) = -d*q'(a), and jac(b0,b1) = -q'(a) when d = 1.
bool verify_prim(const Certificate& cert, const TransitionFunction& tf);

struct Lemma5Data {
    bool ok = false;
    Poly a00, a10, a01;  // coefficients of x^0v^0, x^1v^0, x^0v^1 in Z[t,xi]
};

/// The closed criterion: a00 = 0 and a01 = a10^2.
Lemma5Data lemma5_conditions(const Poly& a);
/// Direct membership p_n(a) in (x^k, v^l); agrees with the criterion.
bool lemma5_membership(int n, const Poly& a);

/// Splits p_n(a) into x^k*b1 - v^l*b0 by routing terms divisible by x^k to
/// b1 and the rest (necessarily divisible by v^l) to b0; nullopt when
/// p_n(a) lies outside the ideal. The result always satisfies the cocycle
/// relation.
std::optional<Certificate> route_certificate(const Poly& a, int n);

/// 2x2 matrix over Z[x^-1, x, v^-1, v], row major.
struct Sl2Matrix {
    std::array<Poly, 4> e;
    Poly det() const;
};

Sl2Matrix sl2_mul(const Sl2Matrix& a, const Sl2Matrix& b);

/// The linear-part factorization: returns (tau0, tau1) with
/// g = [[1,0],[-x^-alpha*v^-beta,1]], tau1 = g*tau0, det = 1, tau0 free of
/// negative v-powers and tau1 free of negative x-powers. Verified before
/// returning.
std::pair<Sl2Matrix, Sl2Matrix> sl2_factor(int alpha, int beta);

struct Lambda2Trivialization {
    PolyMap tau0, tau1, tau1_inv, tau0_inv;  // over x,v-inverted cert ring
};

/// Builds the four chart maps of the quadratic bundle, verifies both
/// two-sided inverses, the factorization of the transition function, unit
/// Jacobians, and the expected linear parts. Throws with the offending
/// residual on any failure.
Lambda2Trivialization build_lambda2_trivialization();

/// The transition function of the quadratic approximation as a plane map
/// (t, xi) -> (t, xi - t/(x*v^2) + t^2/(x^3*v)); the same map for every n.
PolyMap lambda2_transition_map();

/// True iff q = p_n lies outside the monomial ideal (x^k, v^l) of Z[x,v,t];
/// witnesses that no triangular-subgroup reduction can trivialize the
/// bundle.
bool remark3_nonmembership(int n);

struct SearchResult {
    std::vector<Certificate> found;
    bool exhausted = false;       // candidate space fully enumerated
    std::uint64_t scanned = 0;    // candidates passing the shape filter
};

/// Bounded enumeration of certificate candidates for the n-th family
/// member. Candidates carry the normalized linear part v^2*t - x*xi plus
/// free integer coefficients on monomials x^i v^j t^a xi^b with i+j >= 1,
/// a+b >= 2, total degree <= max_deg; coefficients range over
/// [-max_coeff, max_coeff]. Conforming candidates are routed into (b0, b1)
/// and kept when d = 1, possibly after a shear b0 += x^k*c, b1 += v^l*c
/// with jac(a,c) = 1-d solved on monomials of degree <= shift_deg. Throws
/// when the enumeration size estimate exceeds the internal cap.
SearchResult search_certificate(int n, int max_deg, int max_coeff,
                                int shift_deg);

// Certificate file IO (canonical text format).
std::string certificate_to_string(const Certificate& cert);
Certificate parse_certificate(std::string_view text);
std::string transition_to_string(const TransitionFunction& tf);

}  // namespace venkit

#endif
