#include "venkit/gallery.hpp"

#include <array>

namespace venkit {

Ring ambient_ring() { return affine4(); }

Ring base_ring() {
    static Ring r = make_ring({"x", "v"});
    return r;
}

Ring coeff_t_ring() {
    static Ring r = make_ring({"x", "v", "t"});
    return r;
}

Ring cert_ring() {
    static Ring r = make_ring({"x", "v", "t", "xi"});
    return r;
}

Ring cert_ring_loc() {
    static Ring r = make_ring({"x", "v", "t", "xi"}, {"x", "v"});
    return r;
}

Ring fiber_ring() {
    static Ring r = make_ring({"c2", "z", "u"}, {"c2"});
    return r;
}

namespace {

struct Ambient {
    Poly x, y, z, u, w, t, s, eta;
    Ambient() :
        x(Poly::variable(ambient_ring(), "x")),
        y(Poly::variable(ambient_ring(), "y")),
        z(Poly::variable(ambient_ring(), "z")),
        u(Poly::variable(ambient_ring(), "u")),
        w(z * z + y * u),
        t(x * z + y * w),
        s(-((2 * x * z + y * w) * w)),
        eta(s + x * x * u) {}

    Poly v(int n) const { return y + x.pow(n) * t; }

    Poly zeta_prime(int n) const {
        if (n == 1) return x * (v(1) * u + z * z) + s * t;
        if (n == 2) return z * z + u * v(2) + s * t;
        return z * z + v(n) * u + x.pow(n - 2) * s * t;
    }

    Poly zeta_second() const {
        Poly v1 = v(1);
        return v1 * (v1 * u + z * z) + x * z * z * t + s * t * t;
    }

    Poly zeta_third() const { return zeta_second() - t; }

    Poly zeta(int n) const {
        if (n < 1) throw error("zeta: n must be >= 1");
        if (n == 1) {
            Poly v1 = v(1);
            return -(v1 * z) + v1 * t * (v1 * u + z * z + w) +
                   t * t * (x * z * z + s * t);
        }
        if (n == 2)
            return -z + x * t * (v(2) * u + z * z + s * t + w);
        return -z + x.pow(n - 3) * t * (v(n) * eta + x * x * w);
    }

    Poly theta(int n) const {
        if (n < 3) throw error("theta: n must be >= 3");
        return u - x.pow(n - 3) * t *
                       (x * w * w + eta * (zeta(n) - z + x.pow(n - 1) * t * w));
    }
};

const Ambient& amb() {
    static Ambient a;
    return a;
}

Poly p_poly(int n) {
    Ring r = coeff_t_ring();
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "v"),
         t = Poly::variable(r, "t");
    if (n < 1) throw error("p_n: n must be >= 1");
    if (n == 1)
        return x.pow(2) * t.pow(4) + x * v * t.pow(3) + v.pow(2) * t.pow(2) -
               x.pow(2) * v * t;
    if (n == 2) return x.pow(2) * t.pow(3) + v * t.pow(2) - x.pow(2) * t;
    return v * t.pow(2) - x.pow(2) * t;
}

// p_n with v -> v_n(x,y,z,u) and t -> t(x,y,z,u).
Poly p_poly_ambient(int n) {
    const Ambient& a = amb();
    std::array<Poly, 3> images{a.x, a.v(n), a.t};
    return substitute(p_poly(n), images, ambient_ring());
}

struct CertPolys {
    Poly x, v, t, xi, delta, a_tilde, b0;
    CertPolys() :
        x(Poly::variable(cert_ring(), "x")),
        v(Poly::variable(cert_ring(), "v")),
        t(Poly::variable(cert_ring(), "t")),
        xi(Poly::variable(cert_ring(), "xi")),
        delta(v * t + xi * xi),
        a_tilde(v * delta - x * xi),
        b0(x * x * t - v * delta.pow(2) + 2 * x * delta * xi) {}

    Poly b1(int n) const { return n == 1 ? v * xi : xi; }
};

const CertPolys& certs() {
    static CertPolys c;
    return c;
}

}  // namespace

const std::vector<std::string>& known_symbols() {
    static std::vector<std::string> names = {
        "w",          "t",           "s",          "eta",        "v",
        "p",          "zeta",        "theta",      "zeta_prime", "zeta_second",
        "zeta_third", "delta_chart", "a_tilde",    "b0",         "b1"};
    return names;
}

Poly make(std::string_view symbol, std::optional<int> n) {
    const Ambient& a = amb();
    auto need_n = [&](int lo) {
        if (!n) throw error("symbol '" + std::string(symbol) + "' needs n");
        if (*n < lo)
            throw error("symbol '" + std::string(symbol) + "' needs n >= " +
                        std::to_string(lo));
        return *n;
    };
    if (symbol == "w") return a.w;
    if (symbol == "t") return a.t;
    if (symbol == "s") return a.s;
    if (symbol == "eta") return a.eta;
    if (symbol == "v") return a.v(need_n(1));
    if (symbol == "p") return p_poly(need_n(1));
    if (symbol == "zeta") return a.zeta(need_n(1));
    if (symbol == "theta") return a.theta(need_n(3));
    if (symbol == "zeta_prime") return a.zeta_prime(need_n(1));
    if (symbol == "zeta_second") return a.zeta_second();
    if (symbol == "zeta_third") return a.zeta_third();
    if (symbol == "delta_chart") return certs().delta;
    if (symbol == "a_tilde") return certs().a_tilde;
    if (symbol == "b0") return certs().b0;
    if (symbol == "b1") return certs().b1(need_n(1));
    throw error("unknown symbol '" + std::string(symbol) + "'");
}

namespace {

std::vector<NamedIdentity> build_identity_checks() {
    std::vector<NamedIdentity> out;
    auto add = [&](std::string id, std::string anchor,
                   std::function<std::pair<Poly, Poly>()> sides) {
        out.push_back(NamedIdentity{std::move(id), std::move(anchor),
                                    std::move(sides)});
    };

    add("I-REL1", "y*s + t^2 = x^2*z^2", [] {
        const Ambient& a = amb();
        return std::pair{a.y * a.s + a.t * a.t, a.x.pow(2) * a.z.pow(2)};
    });

    for (int n = 1; n <= 5; ++n) {
        add("I-REL2(" + std::to_string(n) + ")",
            "v_n*eta + t^2 = x^2*(z^2 + v_n*u) + x^n*s*t", [n] {
                const Ambient& a = amb();
                Poly v = a.v(n);
                return std::pair{v * a.eta + a.t * a.t,
                                 a.x.pow(2) * (a.z * a.z + v * a.u) +
                                     a.x.pow(n) * a.s * a.t};
            });
    }

    // n = 1 tower
    add("I-Z1a", "x*zeta' = v_1*eta + t^2", [] {
        const Ambient& a = amb();
        return std::pair{a.x * a.zeta_prime(1), a.v(1) * a.eta + a.t * a.t};
    });
    add("I-Z1b", "x*zeta'' = v_1*zeta' + t^3", [] {
        const Ambient& a = amb();
        return std::pair{a.x * a.zeta_second(),
                         a.v(1) * a.zeta_prime(1) + a.t.pow(3)};
    });
    add("I-Z1b2", "zeta'' = y*w + x*t*w + x*t*v_1*u + x*z^2*t + s*t^2", [] {
        const Ambient& a = amb();
        return std::pair{a.zeta_second(),
                         a.y * a.w + a.x * a.t * a.w + a.x * a.t * a.v(1) * a.u +
                             a.x * a.z * a.z * a.t + a.s * a.t * a.t};
    });
    add("I-Z1c", "zeta''' = zeta'' - t", [] {
        const Ambient& a = amb();
        return std::pair{a.zeta_third(), a.zeta_second() - a.t};
    });
    add("I-Z1c2", "zeta''' = -x*z + x*t*w + x*t*v_1*u + x*z^2*t + s*t^2", [] {
        const Ambient& a = amb();
        return std::pair{a.zeta_third(),
                         -(a.x * a.z) + a.x * a.t * a.w + a.x * a.t * a.v(1) * a.u +
                             a.x * a.z * a.z * a.t + a.s * a.t * a.t};
    });
    add("I-Z1d", "x*zeta_1 = v_1*zeta''' + t^4", [] {
        const Ambient& a = amb();
        return std::pair{a.x * a.zeta(1), a.v(1) * a.zeta_third() + a.t.pow(4)};
    });
    add("I-Z1e", "x^3*zeta_1 = v_1^3*eta + p_1(t)", [] {
        const Ambient& a = amb();
        return std::pair{a.x.pow(3) * a.zeta(1),
                         a.v(1).pow(3) * a.eta + p_poly_ambient(1)};
    });

    // n = 2 tower
    add("I-Z2a", "x^2*zeta' = v_2*eta + t^2", [] {
        const Ambient& a = amb();
        return std::pair{a.x.pow(2) * a.zeta_prime(2), a.v(2) * a.eta + a.t * a.t};
    });
    add("I-Z2b", "x*zeta_2 = v_2*zeta' + t^3 - t", [] {
        const Ambient& a = amb();
        return std::pair{a.x * a.zeta(2),
                         a.v(2) * a.zeta_prime(2) + a.t.pow(3) - a.t};
    });
    add("I-Z2c", "x^3*zeta_2 = v_2^2*eta + p_2(t)", [] {
        const Ambient& a = amb();
        return std::pair{a.x.pow(3) * a.zeta(2),
                         a.v(2).pow(2) * a.eta + p_poly_ambient(2)};
    });

    // n >= 3 towers
    for (int n = 3; n <= 5; ++n) {
        add("I-ZNa(" + std::to_string(n) + ")",
            "x^2*zeta' = v_n*eta + t^2, zeta' = z^2 + v_n*u + x^(n-2)*s*t", [n] {
                const Ambient& a = amb();
                return std::pair{a.x.pow(2) * a.zeta_prime(n),
                                 a.v(n) * a.eta + a.t * a.t};
            });
        add("I-ZNb(" + std::to_string(n) + ")", "x*zeta_n = v_n*zeta' - t", [n] {
            const Ambient& a = amb();
            return std::pair{a.x * a.zeta(n), a.v(n) * a.zeta_prime(n) - a.t};
        });
        add("I-ZNc(" + std::to_string(n) + ")",
            "x^3*zeta_n = v_n^2*eta + p_n(t)", [n] {
                const Ambient& a = amb();
                return std::pair{a.x.pow(3) * a.zeta(n),
                                 a.v(n).pow(2) * a.eta + p_poly_ambient(n)};
            });
    }

    for (int n = 1; n <= 5; ++n) {
        add("I-VEN(" + std::to_string(n) + ")",
            "y + x^n*(x*z + y*(y*u + z^2)) = x^n*y^2*u + y + x^(n+1)*z + "
            "x^n*y*z^2",
            [n] {
                const Ambient& a = amb();
                Poly lhs = a.y + a.x.pow(n) *
                                     (a.x * a.z + a.y * (a.y * a.u + a.z * a.z));
                Poly rhs = a.x.pow(n) * a.y.pow(2) * a.u + a.y +
                           a.x.pow(n + 1) * a.z + a.x.pow(n) * a.y * a.z.pow(2);
                return std::pair{lhs, rhs};
            });
        add("I-VENT(" + std::to_string(n) + ")",
            "y + x^n*t = x^n*y^2*u + y + x^(n+1)*z + x^n*y*z^2", [n] {
                const Ambient& a = amb();
                Poly rhs = a.x.pow(n) * a.y.pow(2) * a.u + a.y +
                           a.x.pow(n + 1) * a.z + a.x.pow(n) * a.y * a.z.pow(2);
                return std::pair{a.v(n), rhs};
            });
    }

    for (int n = 3; n <= 5; ++n) {
        add("I-THETA(" + std::to_string(n) + ")",
            "v_n^2*theta_n = t + x*zeta_n - v_n*zeta_n^2", [n] {
                const Ambient& a = amb();
                Poly zeta = a.zeta(n);
                return std::pair{a.v(n).pow(2) * a.theta(n),
                                 a.t + a.x * zeta - a.v(n) * zeta.pow(2)};
            });
    }

    // Cross-construction: closed forms against the exact quotients.
    for (int n = 1; n <= 5; ++n) {
        add("I-XDIV(" + std::to_string(n) + ")",
            "zeta_n = (v_n^e*eta + p_n(t)) / x^3, e = 3 for n = 1 else 2", [n] {
                const Ambient& a = amb();
                int e = n == 1 ? 3 : 2;
                Poly num = a.v(n).pow(e) * a.eta + p_poly_ambient(n);
                auto q = exact_div(num, a.x.pow(3));
                if (!q) throw error("x^3 does not divide the numerator");
                return std::pair{a.zeta(n), *q};
            });
    }

    // Specialization x = 0, y = c2.
    {
        Ring fib = fiber_ring();
        Poly c2 = Poly::variable(fib, "c2"), z = Poly::variable(fib, "z"),
             u = Poly::variable(fib, "u");
        Poly zero = Poly::zero(fib);
        std::array<Poly, 4> sp{zero, c2, z, u};
        auto specialize = [fib, sp](const Poly& p) {
            return substitute(p, sp, fib);
        };
        add("I-FIB1a", "c2*w = t at x = 0, y = c2", [specialize] {
            const Ambient& a = amb();
            return std::pair{Poly::variable(fiber_ring(), "c2") * specialize(a.w),
                             specialize(a.t)};
        });
        add("I-FIB1b", "c2*eta = -t^2 at x = 0, y = c2", [specialize] {
            const Ambient& a = amb();
            return std::pair{
                Poly::variable(fiber_ring(), "c2") * specialize(a.eta),
                -(specialize(a.t).pow(2))};
        });
        add("I-FIB1c", "c2*zeta_1 = -c2^2*z + 2*c2*t^2 - t^5 at x = 0, y = c2",
            [specialize] {
                const Ambient& a = amb();
                Ring fib = fiber_ring();
                Poly c2 = Poly::variable(fib, "c2"), z = Poly::variable(fib, "z");
                Poly ts = specialize(a.t);
                return std::pair{c2 * specialize(a.zeta(1)),
                                 -(c2.pow(2) * z) + 2 * c2 * ts.pow(2) -
                                     ts.pow(5)};
            });
    }

    return out;
}

}  // namespace

const std::vector<NamedIdentity>& identity_checks() {
    static std::vector<NamedIdentity> checks = build_identity_checks();
    return checks;
}

std::vector<IdentityResult> identity_suite() {
    std::vector<IdentityResult> out;
    for (const auto& c : identity_checks()) {
        IdentityResult r{c.id, false, c.anchor, std::nullopt};
        try {
            auto [lhs, rhs] = c.sides();
            Poly diff = lhs - rhs;
            r.pass = diff.is_zero();
            if (!r.pass) r.residual = std::move(diff);
        } catch (const error&) {
            r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool fiber_frame_check() {
    Ring fib = fiber_ring();
    Poly c2 = Poly::variable(fib, "c2"), z = Poly::variable(fib, "z"),
         u = Poly::variable(fib, "u");
    Poly zero = Poly::zero(fib);
    std::array<Poly, 4> sp{zero, c2, z, u};
    const Ambient& a = amb();
    Poly t_s = substitute(a.t, sp, fib);
    Poly zeta_s = substitute(a.zeta(1), sp, fib);

    // After the specialization, t = c2^2*u + c2*z^2 is linear in u and
    // zeta_1 = -c2*z + 2*t^2 - c2^-1*t^5 is linear in z, so the coordinate
    // change (z, u) -> (zeta_1, t) is a chain of scalings and shears.
    std::size_t zi = fib->index_of("z"), ui = fib->index_of("u");
    Chain c{fib, {}};
    c.moves.push_back(ScaleMove{ui, Term{mpz_class(1), Monomial{2, 0, 0}}});
    c.moves.push_back(TriangularMove{ui, c2 * z * z});
    c.moves.push_back(ScaleMove{zi, Term{mpz_class(-1), Monomial{1, 0, 0}}});
    Poly u_poly = Poly::variable(fib, "u");
    Poly c2inv = Poly::monomial(fib, 1, Monomial{-1, 0, 0});
    c.moves.push_back(
        TriangularMove{zi, 2 * u_poly.pow(2) - c2inv * u_poly.pow(5)});

    PolyMap fwd = flatten(c);
    if (fwd.images[zi] != zeta_s || fwd.images[ui] != t_s) return false;
    PolyMap inv = flatten(invert_chain(c));
    return is_identity(compose(fwd, inv)) && is_identity(compose(inv, fwd));
}

}  // namespace venkit
