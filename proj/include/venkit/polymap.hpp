#ifndef VENKIT_POLYMAP_HPP
#define VENKIT_POLYMAP_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "venkit/poly.hpp"

namespace venkit {

/// Endomorphism of a polynomial ring, given by one image per generator.
/// As a point map it sends P to (images[0](P), ..., images[n-1](P)).
struct PolyMap {
    Ring ring;
    std::vector<Poly> images;

    static PolyMap identity(const Ring& ring);
    Poly apply(const Poly& p) const;  // substitute generators by images
    PolyMap cast_to(const Ring& target) const;
};

/// f after g: images are f's images with every generator replaced by g's.
PolyMap compose(const PolyMap& f, const PolyMap& g);

bool is_identity(const PolyMap& m);

/// True when no image uses a negative exponent at a position whose Laurent
/// flag is cleared in `subring` (same variables as m's ring).
bool is_integral(const PolyMap& m, const RingSpec& subring);

// Elementary moves, each with a constructively known inverse.

/// var += addend, where addend does not involve var. The target variable
/// must not be Laurent-flagged (additive shifts do not preserve the
/// localization).
struct TriangularMove {
    std::size_t var;
    Poly addend;
};

/// var *= unit, a one-term monomial with coefficient +-1, invertible in
/// the ambient ring.
struct ScaleMove {
    std::size_t var;
    Term unit;
};

/// images[i] = variable perm[i].
struct PermuteMove {
    std::vector<std::size_t> perm;
};

/// An automorphism given with its inverse; both directions are verified
/// at construction time.
struct ExplicitMove {
    PolyMap fwd;
    PolyMap inv;
};

using ElementaryMove =
    std::variant<TriangularMove, ScaleMove, PermuteMove, ExplicitMove>;

ExplicitMove make_explicit(PolyMap fwd, PolyMap inv);  // verifies two-sided

PolyMap move_map(const ElementaryMove& mv, const Ring& ring);
ElementaryMove invert_move(const ElementaryMove& mv);

/// Sequence of elementary moves over one ring; moves apply first-to-last.
struct Chain {
    Ring ring;
    std::vector<ElementaryMove> moves;
};

PolyMap flatten(const Chain& c);
Chain invert_chain(const Chain& c);
Chain concat(const Chain& a, const Chain& b);  // a first, then b

// The chart machinery: rings and named maps.

Ring affine3();             // y z u
Ring affine4();             // x y z u
Ring affine4_xloc();        // x y z u, x inverted

/// Nagata automorphism (y, z, u) -> (y, z + y*w, u - 2*z*w - y*w^2),
/// w = z^2 + y*u.
PolyMap nagata();
PolyMap nagata_inverse();

PolyMap scaling_g();   // (y, z, u) -> (x^-2 y, x z, x^4 u), x fixed
PolyMap scaling_h();   // (y, z, u) -> (x^2 y, z, x^-2 u), x fixed
PolyMap beta_map();    // h . nagata . g, images (x, y, t, eta)
Chain beta_chain();
PolyMap gamma_shear(int n);  // y += x^n z

/// Checks alpha . mu = mu . (d3 . d2 . d1) on (y, z1, u1), with
/// mu: (y, z1, u1) -> (y, y z1, y u1).
bool verify_footnote_decomposition();
/// Same check with d2 dropped; must fail.
bool footnote_with_broken_chain();

/// The chain whose flattening is (x, v_n, zeta_n, theta_n), over the
/// x-inverted ring.
Chain alpha_chain(int n);

/// The x-automorphism alpha_n = (x, v_n, zeta_n, theta_n) and its inverse,
/// both over Z[x,y,z,u]; throws for n < 3. Both maps are verified
/// x-integral and mutually inverse before returning.
std::pair<PolyMap, PolyMap> build_alpha_n(int n);

}  // namespace venkit

#endif
