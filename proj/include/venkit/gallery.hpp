#ifndef VENKIT_GALLERY_HPP
#define VENKIT_GALLERY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "venkit/poly.hpp"
#include "venkit/polymap.hpp"

namespace venkit {

// Rings the named polynomials live in.
Ring ambient_ring();       // x y z u
Ring base_ring();          // x v
Ring coeff_t_ring();       // x v t
Ring cert_ring();          // x v t xi
Ring cert_ring_loc();      // x v t xi, x and v inverted
Ring fiber_ring();         // c2 z u, c2 inverted

/// Named polynomial constructors. Symbols taking a family index n:
/// v, p, zeta, theta, zeta_prime, b1. theta needs n >= 3; zeta_second and
/// zeta_third belong to the n = 1 tower only.
Poly make(std::string_view symbol, std::optional<int> n = std::nullopt);

const std::vector<std::string>& known_symbols();

struct NamedIdentity {
    std::string id;
    std::string anchor;  // the relation being checked, as text
    std::function<std::pair<Poly, Poly>()> sides;
};

struct IdentityResult {
    std::string id;
    bool pass;
    std::string anchor;
    std::optional<Poly> residual;  // lhs - rhs when nonzero
};

const std::vector<NamedIdentity>& identity_checks();
std::vector<IdentityResult> identity_suite();

/// Certifies that (t, zeta_1) are fiber coordinates on the fiber over
/// x = 0, y = c2 != 0: builds the specialized coordinate change as a chain
/// of elementary moves and checks the two-sided identity.
bool fiber_frame_check();

}  // namespace venkit

#endif
