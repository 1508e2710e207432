#include "venkit/polymap.hpp"

#include <algorithm>
#include <array>

namespace venkit {

PolyMap PolyMap::identity(const Ring& ring) {
    PolyMap m{ring, {}};
    for (std::size_t i = 0; i < ring->size(); ++i)
        m.images.push_back(Poly::variable(ring, i));
    return m;
}

Poly PolyMap::apply(const Poly& p) const {
    if (!p.ring()->same_variables(*ring))
        throw error("map apply: different variables");
    return substitute(p, images, ring);
}

PolyMap PolyMap::cast_to(const Ring& target) const {
    PolyMap m{target, {}};
    for (const auto& im : images) m.images.push_back(im.cast_to(target));
    return m;
}

namespace {

Ring union_flags(const Ring& a, const Ring& b) {
    if (!a->same_variables(*b)) throw error("compose: different variables");
    if (*a == *b) return a;
    std::vector<std::string> laurent;
    for (std::size_t i = 0; i < a->size(); ++i)
        if (a->laurent(i) || b->laurent(i)) laurent.push_back(a->name(i));
    return with_laurent(a, laurent);
}

}  // namespace

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    Ring ring = union_flags(f.ring, g.ring);
    std::vector<Poly> gs;
    for (const auto& im : g.images) gs.push_back(im.cast_to(ring));
    PolyMap out{ring, {}};
    for (const auto& im : f.images)
        out.images.push_back(substitute(im, gs, ring));
    return out;
}

bool is_identity(const PolyMap& m) {
    for (std::size_t i = 0; i < m.ring->size(); ++i)
        if (m.images[i] != Poly::variable(m.ring, i)) return false;
    return true;
}

bool is_integral(const PolyMap& m, const RingSpec& subring) {
    if (!m.ring->same_variables(subring))
        throw error("is_integral: different variables");
    std::vector<std::size_t> cleared;
    for (std::size_t i = 0; i < subring.size(); ++i)
        if (!subring.laurent(i)) cleared.push_back(i);
    for (const auto& im : m.images)
        if (!im.integral_without(cleared)) return false;
    return true;
}

ExplicitMove make_explicit(PolyMap fwd, PolyMap inv) {
    if (!is_identity(compose(fwd, inv)) || !is_identity(compose(inv, fwd)))
        throw error("explicit move: maps are not mutually inverse");
    return ExplicitMove{std::move(fwd), std::move(inv)};
}

PolyMap move_map(const ElementaryMove& mv, const Ring& ring) {
    if (const auto* t = std::get_if<TriangularMove>(&mv)) {
        if (t->var >= ring->size()) throw error("triangular move: bad variable");
        if (ring->laurent(t->var))
            throw error(
                "triangular move: additive shift of an inverted variable");
        for (const auto& term : t->addend.terms())
            if (term.mono[t->var] != 0)
                throw error("triangular move: addend involves target variable");
        PolyMap m = PolyMap::identity(ring);
        m.images[t->var] = m.images[t->var] + t->addend.cast_to(ring);
        return m;
    }
    if (const auto* s = std::get_if<ScaleMove>(&mv)) {
        if (s->unit.coeff != 1 && s->unit.coeff != -1)
            throw error("scale move: unit must have coefficient +-1");
        if (s->unit.mono[s->var] != 0)
            throw error("scale move: unit involves the scaled variable");
        for (std::size_t i = 0; i < s->unit.mono.size(); ++i)
            if (s->unit.mono[i] != 0 && !ring->laurent(i))
                throw error("scale move: unit not invertible in ring");
        PolyMap m = PolyMap::identity(ring);
        Monomial mono = s->unit.mono;
        mono[s->var] += 1;
        m.images[s->var] = Poly::monomial(ring, s->unit.coeff, std::move(mono));
        return m;
    }
    if (const auto* p = std::get_if<PermuteMove>(&mv)) {
        PolyMap m{ring, {}};
        for (std::size_t i = 0; i < ring->size(); ++i) {
            if (ring->laurent(i) != ring->laurent(p->perm.at(i)))
                throw error("permute move: mixes inverted and plain variables");
            m.images.push_back(Poly::variable(ring, p->perm.at(i)));
        }
        return m;
    }
    return std::get<ExplicitMove>(mv).fwd;
}

ElementaryMove invert_move(const ElementaryMove& mv) {
    if (const auto* t = std::get_if<TriangularMove>(&mv))
        return TriangularMove{t->var, -t->addend};
    if (const auto* s = std::get_if<ScaleMove>(&mv)) {
        Term inv{s->unit.coeff, s->unit.mono};
        for (auto& e : inv.mono) e = -e;
        return ScaleMove{s->var, std::move(inv)};
    }
    if (const auto* p = std::get_if<PermuteMove>(&mv)) {
        std::vector<std::size_t> ip(p->perm.size());
        for (std::size_t i = 0; i < p->perm.size(); ++i) ip[p->perm[i]] = i;
        return PermuteMove{std::move(ip)};
    }
    const auto& e = std::get<ExplicitMove>(mv);
    return ExplicitMove{e.inv, e.fwd};
}

PolyMap flatten(const Chain& c) {
    PolyMap acc = PolyMap::identity(c.ring);
    for (const auto& mv : c.moves) acc = compose(move_map(mv, c.ring), acc);
    return acc;
}

Chain invert_chain(const Chain& c) {
    Chain out{c.ring, {}};
    out.moves.reserve(c.moves.size());
    for (auto it = c.moves.rbegin(); it != c.moves.rend(); ++it)
        out.moves.push_back(invert_move(*it));
    return out;
}

Chain concat(const Chain& a, const Chain& b) {
    if (!same_ring(a.ring, b.ring)) throw error("concat: ring mismatch");
    Chain out{a.ring, a.moves};
    out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
    return out;
}

Ring affine3() {
    static Ring r = make_ring({"y", "z", "u"});
    return r;
}

Ring affine4() {
    static Ring r = make_ring({"x", "y", "z", "u"});
    return r;
}

Ring affine4_xloc() {
    static Ring r = make_ring({"x", "y", "z", "u"}, {"x"});
    return r;
}

namespace {

Poly w_of(const Poly& y, const Poly& z, const Poly& u) {
    return z * z + y * u;
}

// Nagata images for arbitrary y/z/u polynomials over one ring.
std::array<Poly, 3> nagata_images(const Poly& y, const Poly& z, const Poly& u) {
    Poly w = w_of(y, z, u);
    return {y, z + y * w, u - 2 * z * w - y * w.pow(2)};
}

std::array<Poly, 3> nagata_inverse_images(const Poly& y, const Poly& z,
                                          const Poly& u) {
    Poly w = w_of(y, z, u);  // w is preserved by the automorphism
    Poly z0 = z - y * w;
    return {y, z0, u + 2 * z0 * w + y * w.pow(2)};
}

ScaleMove scale_x(const Ring& ring, std::string_view var, int xexp) {
    Monomial m(ring->size(), 0);
    m[ring->index_of("x")] = xexp;
    return ScaleMove{ring->index_of(var), Term{mpz_class(1), std::move(m)}};
}

PolyMap nagata4(const Ring& ring) {
    Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y");
    Poly z = Poly::variable(ring, "z"), u = Poly::variable(ring, "u");
    auto im = nagata_images(y, z, u);
    return PolyMap{ring, {x, im[0], im[1], im[2]}};
}

PolyMap nagata4_inverse(const Ring& ring) {
    Poly x = Poly::variable(ring, "x"), y = Poly::variable(ring, "y");
    Poly z = Poly::variable(ring, "z"), u = Poly::variable(ring, "u");
    auto im = nagata_inverse_images(y, z, u);
    return PolyMap{ring, {x, im[0], im[1], im[2]}};
}

}  // namespace

PolyMap nagata() {
    Ring r = affine3();
    Poly y = Poly::variable(r, "y"), z = Poly::variable(r, "z"),
         u = Poly::variable(r, "u");
    auto im = nagata_images(y, z, u);
    return PolyMap{r, {im[0], im[1], im[2]}};
}

PolyMap nagata_inverse() {
    Ring r = affine3();
    Poly y = Poly::variable(r, "y"), z = Poly::variable(r, "z"),
         u = Poly::variable(r, "u");
    auto im = nagata_inverse_images(y, z, u);
    return PolyMap{r, {im[0], im[1], im[2]}};
}

PolyMap scaling_g() {
    Ring r = affine4_xloc();
    return flatten(Chain{r, {scale_x(r, "y", -2), scale_x(r, "z", 1),
                             scale_x(r, "u", 4)}});
}

PolyMap scaling_h() {
    Ring r = affine4_xloc();
    return flatten(Chain{r, {scale_x(r, "y", 2), scale_x(r, "u", -2)}});
}

Chain beta_chain() {
    Ring r = affine4_xloc();
    Chain c{r, {}};
    c.moves.push_back(scale_x(r, "y", -2));
    c.moves.push_back(scale_x(r, "z", 1));
    c.moves.push_back(scale_x(r, "u", 4));
    c.moves.push_back(make_explicit(nagata4(r), nagata4_inverse(r)));
    c.moves.push_back(scale_x(r, "y", 2));
    c.moves.push_back(scale_x(r, "u", -2));
    return c;
}

PolyMap beta_map() { return flatten(beta_chain()); }

PolyMap gamma_shear(int n) {
    Ring r = affine4_xloc();
    Poly x = Poly::variable(r, "x"), z = Poly::variable(r, "z");
    Chain c{r, {TriangularMove{r->index_of("y"), x.pow(n) * z}}};
    return flatten(c);
}

namespace {

bool footnote_check(bool include_d2) {
    Ring r = affine3();
    Poly y = Poly::variable(r, "y"), z = Poly::variable(r, "z"),
         u = Poly::variable(r, "u");
    PolyMap mu{r, {y, y * z, y * u}};
    Chain delta{r, {}};
    delta.moves.push_back(TriangularMove{r->index_of("u"), z * z});
    if (include_d2)
        delta.moves.push_back(TriangularMove{r->index_of("z"), y * y * u});
    delta.moves.push_back(TriangularMove{r->index_of("u"), -(z * z)});
    PolyMap lhs = compose(nagata(), mu);
    PolyMap rhs = compose(mu, flatten(delta));
    for (std::size_t i = 0; i < r->size(); ++i)
        if (lhs.images[i] != rhs.images[i]) return false;
    return true;
}

// tau0 of the explicit plane trivialization, acting on the (z, u) slots as
// (t, xi) with (x, y) as the base coordinates, over the x-inverted ring.
PolyMap tau0_as_chart_map(const Ring& r) {
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "y");
    Poly t = Poly::variable(r, "z"), xi = Poly::variable(r, "u");
    Poly xin1 = Poly::monomial(r, 1, {-1, 0, 0, 0});
    Poly xin2 = xin1 * xin1, xin3 = xin2 * xin1;
    Poly delta = v * t + xi * xi;
    Poly a = v * delta - x * xi;
    Poly b0_over_x3 = t * xin1 - v * delta.pow(2) * xin3 + 2 * delta * xi * xin2;
    return PolyMap{r, {x, v, a, b0_over_x3}};
}

PolyMap tau0_inverse_as_chart_map(const Ring& r) {
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "y");
    Poly t = Poly::variable(r, "z"), xi = Poly::variable(r, "u");
    Poly xin1 = Poly::monomial(r, 1, {-1, 0, 0, 0});
    Poly xin3 = xin1.pow(3), xin4 = xin1.pow(4), xin6 = xin1.pow(6);
    Poly first = x * xi - v.pow(3) * xi.pow(2) + 2 * v * t * xi * xin1 -
                 2 * v.pow(2) * t.pow(2) * xi * xin3 + 2 * t.pow(3) * xin4 -
                 v * t.pow(4) * xin6;
    Poly second = v.pow(2) * xi - t * xin1 + v * t.pow(2) * xin3;
    return PolyMap{r, {x, v, first, second}};
}

}  // namespace

bool verify_footnote_decomposition() { return footnote_check(true); }
bool footnote_with_broken_chain() { return footnote_check(false); }

Chain alpha_chain(int n) {
    if (n < 3) throw error("alpha_n needs n >= 3");
    Ring r = affine4_xloc();
    Poly x = Poly::variable(r, "x"), z = Poly::variable(r, "z");
    Chain c = beta_chain();
    c.moves.push_back(TriangularMove{r->index_of("y"), x.pow(n) * z});
    c.moves.push_back(scale_x(r, "u", -3));
    c.moves.push_back(
        make_explicit(tau0_inverse_as_chart_map(r), tau0_as_chart_map(r)));
    c.moves.push_back(PermuteMove{{0, 1, 3, 2}});
    return c;
}

std::pair<PolyMap, PolyMap> build_alpha_n(int n) {
    Chain c = alpha_chain(n);
    PolyMap fwd_loc = flatten(c);
    PolyMap inv_loc = flatten(invert_chain(c));
    const Ring plain = affine4();
    if (!is_integral(fwd_loc, *plain))
        throw error("alpha_n: forward map not integral over Z[x]");
    if (!is_integral(inv_loc, *plain))
        throw error("alpha_n: inverse map not integral over Z[x]");
    PolyMap fwd = fwd_loc.cast_to(plain);
    PolyMap inv = inv_loc.cast_to(plain);
    if (!is_identity(compose(fwd, inv)) || !is_identity(compose(inv, fwd)))
        throw error("alpha_n: compositions are not the identity");
    return {std::move(fwd), std::move(inv)};
}

}  // namespace venkit
