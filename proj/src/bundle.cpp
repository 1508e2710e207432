#include "venkit/bundle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "venkit/format.hpp"
#include "venkit/gallery.hpp"

namespace venkit {

std::pair<int, int> family_exponents(int n) {
    if (n < 1) throw error("family index must be >= 1");
    return {3, n == 1 ? 3 : 2};
}

TransitionFunction TransitionFunction::family(int n) {
    auto [k, l] = family_exponents(n);
    return TransitionFunction{make("p", n), k, l};
}

TransitionFunction TransitionFunction::approximation(int n, int m) {
    TransitionFunction tf = family(n);
    if (m < 1) throw error("approximation order must be >= 1");
    std::size_t ti = tf.q.ring()->index_of("t");
    std::vector<Term> kept;
    for (const auto& term : tf.q.terms()) {
        if (term.mono[ti] == 0)
            throw error("approximation: constant t-coefficient must vanish");
        if (term.mono[ti] <= m) kept.push_back(term);
    }
    tf.q = Poly(tf.q.ring(), std::move(kept));
    return tf;
}

namespace {

// q(a) with the base variables carried along: Z[x,v,t] -> Z[x,v,t,xi].
Poly eval_q_at(const Poly& q, const Poly& a) {
    const Ring& target = a.ring();
    std::array<Poly, 3> images{Poly::variable(target, "x"),
                               Poly::variable(target, "v"), a};
    return substitute(q, images, target);
}

Poly xpow(const Ring& r, int k) { return Poly::variable(r, "x").pow(k); }
Poly vpow(const Ring& r, int l) { return Poly::variable(r, "v").pow(l); }

}  // namespace

Certificate sol_certificate(int n) {
    auto [k, l] = family_exponents(n);
    return Certificate{make("a_tilde"), make("b0"), make("b1", n), k, l};
}

bool verify_cocycle(const Certificate& cert, const TransitionFunction& tf) {
    if (cert.k != tf.k || cert.l != tf.l)
        throw error("cocycle: certificate and transition exponents differ");
    const Ring& r = cert.a.ring();
    Poly lhs = xpow(r, cert.k) * cert.b1 - vpow(r, cert.l) * cert.b0;
    return lhs == eval_q_at(tf.q, cert.a);
}

Poly cert_quotient(const Certificate& cert) {
    const Ring& r = cert.a.ring();
    Poly j0 = jacobian2(cert.a, cert.b0, "t", "xi");
    Poly j1 = jacobian2(cert.a, cert.b1, "t", "xi");
    auto d0 = exact_div(j0, xpow(r, cert.k));
    if (!d0) throw error("cert_d: x^k does not divide jac(a, b0)");
    auto d1 = exact_div(j1, vpow(r, cert.l));
    if (!d1) throw error("cert_d: v^l does not divide jac(a, b1)");
    if (*d0 != *d1) throw error("cert_d: the two quotients differ");
    return *d0;
}

Poly cert_d(const Certificate& cert) {
    Poly d = cert_quotient(cert);
    const Ring& r = cert.a.ring();
    std::size_t ti = r->index_of("t"), xii = r->index_of("xi");
    for (const auto& term : d.terms())
        if (term.mono[ti] != 0 || term.mono[xii] != 0)
            throw error("cert_d: quotient leaves the base ring");
    return d;
}

bool verify_prim(const Certificate& cert, const TransitionFunction& tf) {
    Poly d = cert_d(cert);
    const Ring& r = cert.a.ring();
    Poly qprime = partial_derivative(tf.q, "t");
    Poly rhs = -(d * eval_q_at(qprime, cert.a));
    Poly jac = jacobian2(cert.b0, cert.b1, "t", "xi");
    if (jac != rhs) return false;
    if (d == Poly::constant(r, 1) && jac != -eval_q_at(qprime, cert.a))
        return false;
    return true;
}

namespace {

bool route_terms_impl(const Poly& pa, int k, int l, Poly& b0, Poly& b1) {
    const Ring& r = pa.ring();
    std::size_t xi = r->index_of("x"), vi = r->index_of("v");
    std::vector<Term> t1, t0;
    for (const auto& term : pa.terms()) {
        if (term.mono[xi] >= k) {
            Term s = term;
            s.mono[xi] -= k;
            t1.push_back(std::move(s));
        } else if (term.mono[vi] >= l) {
            Term s = term;
            s.mono[vi] -= l;
            s.coeff = -s.coeff;
            t0.push_back(std::move(s));
        } else {
            return false;
        }
    }
    b1 = Poly(r, std::move(t1));
    b0 = Poly(r, std::move(t0));
    return true;
}

}  // namespace

std::optional<Certificate> route_certificate(const Poly& a, int n) {
    auto [k, l] = family_exponents(n);
    Poly pa = eval_q_at(make("p", n), a);
    Poly b0 = Poly::zero(a.ring()), b1 = Poly::zero(a.ring());
    if (!route_terms_impl(pa, k, l, b0, b1)) return std::nullopt;
    return Certificate{a, b0, b1, k, l};
}

Lemma5Data lemma5_conditions(const Poly& a) {
    using P = std::pair<std::string, int>;
    std::array<P, 2> p00{P{"x", 0}, P{"v", 0}};
    std::array<P, 2> p10{P{"x", 1}, P{"v", 0}};
    std::array<P, 2> p01{P{"x", 0}, P{"v", 1}};
    Lemma5Data d{false, coeff_in(a, p00), coeff_in(a, p10), coeff_in(a, p01)};
    d.ok = d.a00.is_zero() && d.a01 == d.a10 * d.a10;
    return d;
}

bool lemma5_membership(int n, const Poly& a) {
    auto [k, l] = family_exponents(n);
    Poly pa = eval_q_at(make("p", n), a);
    using P = std::pair<std::string, int>;
    std::array<P, 2> gens{P{"x", k}, P{"v", l}};
    return monomial_ideal_member(pa, parse_gens(pa.ring(), gens));
}

namespace {

Ring m_ring() {
    static Ring r = make_ring({"x", "v"}, {"x", "v"});
    return r;
}

Poly m_mono(int xe, int ve, int c = 1) {
    return Poly::monomial(m_ring(), c, Monomial{xe, ve});
}

}  // namespace

Poly Sl2Matrix::det() const { return e[0] * e[3] - e[1] * e[2]; }

Sl2Matrix sl2_mul(const Sl2Matrix& a, const Sl2Matrix& b) {
    return Sl2Matrix{{a.e[0] * b.e[0] + a.e[1] * b.e[2],
                      a.e[0] * b.e[1] + a.e[1] * b.e[3],
                      a.e[2] * b.e[0] + a.e[3] * b.e[2],
                      a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

std::pair<Sl2Matrix, Sl2Matrix> sl2_factor(int alpha, int beta) {
    if (alpha < 0 || beta < 0) throw error("sl2_factor: exponents must be >= 0");
    Ring r = m_ring();
    Poly one = Poly::constant(r, 1), zero = Poly::zero(r);
    Sl2Matrix g{{one, zero, m_mono(-alpha, -beta, -1), one}};
    Sl2Matrix tau0{{m_mono(0, beta), m_mono(alpha, 0, -1), m_mono(-alpha, 0),
                    zero}};
    Sl2Matrix tau1{{m_mono(0, beta), m_mono(alpha, 0, -1), zero,
                    m_mono(0, -beta)}};
    if (tau0.det() != one) throw error("sl2_factor: det tau0 != 1");
    if (tau1.det() != one) throw error("sl2_factor: det tau1 != 1");
    Sl2Matrix prod = sl2_mul(g, tau0);
    for (int i = 0; i < 4; ++i)
        if (prod.e[i] != tau1.e[i])
            throw error("sl2_factor: g*tau0 != tau1");
    std::size_t xi = r->index_of("x"), vi = r->index_of("v");
    for (int i = 0; i < 4; ++i) {
        for (const auto& t : tau0.e[i].terms())
            if (t.mono[vi] < 0)
                throw error("sl2_factor: tau0 uses negative v-powers");
        for (const auto& t : tau1.e[i].terms())
            if (t.mono[xi] < 0)
                throw error("sl2_factor: tau1 uses negative x-powers");
    }
    return {tau0, tau1};
}

namespace {

// Degree <= 1 part in (t, xi).
Poly linear_part(const Poly& p) {
    const Ring& r = p.ring();
    std::size_t ti = r->index_of("t"), xii = r->index_of("xi");
    std::vector<Term> kept;
    for (const auto& term : p.terms())
        if (term.mono[ti] + term.mono[xii] <= 1) kept.push_back(term);
    return Poly(r, std::move(kept));
}

void require(bool ok, const std::string& what, const Poly& residual) {
    if (!ok)
        throw error("lambda2 trivialization: " + what +
                    " failed, residual = " + to_string(residual));
}

}  // namespace

PolyMap lambda2_transition_map() {
    Ring r = cert_ring_loc();
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "v");
    Poly t = Poly::variable(r, "t"), xi = Poly::variable(r, "xi");
    Poly xin1 = Poly::monomial(r, 1, Monomial{-1, 0, 0, 0});
    Poly vin1 = Poly::monomial(r, 1, Monomial{0, -1, 0, 0});
    Poly second = xi - t * xin1 * vin1.pow(2) + t.pow(2) * xin1.pow(3) * vin1;
    return PolyMap{r, {x, v, t, second}};
}

Lambda2Trivialization build_lambda2_trivialization() {
    Ring r = cert_ring_loc();
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "v");
    Poly t = Poly::variable(r, "t"), xi = Poly::variable(r, "xi");
    Poly xin1 = Poly::monomial(r, 1, Monomial{-1, 0, 0, 0});
    Poly vin1 = Poly::monomial(r, 1, Monomial{0, -1, 0, 0});

    Poly delta = v * t + xi * xi;
    Poly a = v * delta - x * xi;
    Poly b0 = x.pow(2) * t - v * delta.pow(2) + 2 * x * delta * xi;
    Poly b1 = xi;

    PolyMap tau0{r, {x, v, a, b0 * xin1.pow(3)}};
    PolyMap tau1{r, {x, v, a, b1 * vin1.pow(2)}};
    PolyMap tau1_inv{
        r, {x, v, t * vin1.pow(2) + x * xi - v.pow(3) * xi.pow(2), v.pow(2) * xi}};
    PolyMap tau0_inv{
        r,
        {x, v,
         x * xi - v.pow(3) * xi.pow(2) + 2 * v * t * xi * xin1 -
             2 * v.pow(2) * t.pow(2) * xi * xin1.pow(3) +
             2 * t.pow(3) * xin1.pow(4) - v * t.pow(4) * xin1.pow(6),
         v.pow(2) * xi - t * xin1 + v * t.pow(2) * xin1.pow(3)}};

    auto check_inverse = [&](const PolyMap& f, const PolyMap& g,
                             const std::string& what) {
        PolyMap fg = compose(f, g), gf = compose(g, f);
        for (std::size_t i = 0; i < r->size(); ++i) {
            Poly var = Poly::variable(r, i);
            require(fg.images[i] == var, what, fg.images[i] - var);
            require(gf.images[i] == var, what, gf.images[i] - var);
        }
    };
    check_inverse(tau1, tau1_inv, "tau1 inverse");
    check_inverse(tau0, tau0_inv, "tau0 inverse");

    PolyMap trans = compose(tau1, tau0_inv);
    PolyMap expected = lambda2_transition_map();
    for (std::size_t i = 0; i < r->size(); ++i)
        require(trans.images[i] == expected.images[i],
                "transition factorization",
                trans.images[i] - expected.images[i]);

    Poly one = Poly::constant(r, 1);
    Poly j0 = jacobian2(tau0.images[2], tau0.images[3], "t", "xi");
    require(j0 == one, "jac(tau0) = 1", j0 - one);
    Poly j1 = jacobian2(tau1.images[2], tau1.images[3], "t", "xi");
    require(j1 == one, "jac(tau1) = 1", j1 - one);

    Poly lin_a = v.pow(2) * t - x * xi;
    require(linear_part(a) == lin_a, "linear part of a", linear_part(a) - lin_a);
    Poly lin_b0 = x.pow(2) * t;
    require(linear_part(b0) == lin_b0, "linear part of b0",
            linear_part(b0) - lin_b0);
    require(linear_part(b1) == xi, "linear part of b1", linear_part(b1) - xi);

    return Lambda2Trivialization{tau0, tau1, tau1_inv, tau0_inv};
}

bool remark3_nonmembership(int n) {
    auto [k, l] = family_exponents(n);
    Poly q = make("p", n);
    using P = std::pair<std::string, int>;
    std::array<P, 2> gens{P{"x", k}, P{"v", l}};
    return !monomial_ideal_member(q, parse_gens(q.ring(), gens));
}

// --- bounded certificate search ---------------------------------------

namespace {

// Monomials x^i v^j t^a xi^b of the cert ring with total degree <= max_deg,
// i+j >= min_base, a+b >= min_fiber, grlex-ascending for determinism.
std::vector<Monomial> cert_monomials(int max_deg, int min_base, int min_fiber) {
    std::vector<Monomial> out;
    for (int i = 0; i <= max_deg; ++i)
        for (int j = 0; i + j <= max_deg; ++j)
            for (int a = 0; i + j + a <= max_deg; ++a)
                for (int b = 0; i + j + a + b <= max_deg; ++b) {
                    if (i + j < min_base || a + b < min_fiber) continue;
                    out.push_back(Monomial{i, j, a, b});
                }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) {
                  return grlex_cmp(a, b) < 0;
              });
    return out;
}

// Exact rational solve of sum_m c_m * jac(a, m) = rhs over the monomial
// basis of degree <= shift_deg; returns an integral particular solution as
// a polynomial, or nullopt.
std::optional<Poly> solve_shear(const Poly& a, const Poly& rhs, int shift_deg) {
    const Ring& r = a.ring();
    std::vector<Monomial> basis = cert_monomials(shift_deg, 0, 0);
    std::vector<Poly> columns;
    columns.reserve(basis.size());
    for (const auto& m : basis)
        columns.push_back(jacobian2(a, Poly::monomial(r, 1, m), "t", "xi"));

    // Row index: every monomial appearing in any column or in rhs.
    std::map<Monomial, std::size_t> row_of;
    auto note_rows = [&](const Poly& p) {
        for (const auto& t : p.terms()) row_of.emplace(t.mono, 0);
    };
    for (const auto& c : columns) note_rows(c);
    note_rows(rhs);
    std::size_t nrows = 0;
    for (auto& [m, idx] : row_of) idx = nrows++;

    std::vector<std::vector<mpq_class>> mat(
        nrows, std::vector<mpq_class>(basis.size() + 1, mpq_class(0)));
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& t : columns[c].terms())
            mat[row_of[t.mono]][c] = mpq_class(t.coeff);
    for (const auto& t : rhs.terms())
        mat[row_of[t.mono]][basis.size()] = mpq_class(t.coeff);

    // Gaussian elimination with exact rationals.
    std::size_t ncols = basis.size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t sel = row;
        while (sel < nrows && mat[sel][col] == 0) ++sel;
        if (sel == nrows) continue;
        std::swap(mat[sel], mat[row]);
        mpq_class inv = mpq_class(1) / mat[row][col];
        for (auto& x : mat[row]) x *= inv;
        for (std::size_t rr = 0; rr < nrows; ++rr) {
            if (rr == row || mat[rr][col] == 0) continue;
            mpq_class f = mat[rr][col];
            for (std::size_t cc = col; cc <= ncols; ++cc)
                mat[rr][cc] -= f * mat[row][cc];
        }
        pivot_col.push_back(col);
        ++row;
    }
    // Inconsistent?
    for (std::size_t rr = row; rr < nrows; ++rr)
        if (mat[rr][ncols] != 0) return std::nullopt;

    // Particular solution with free variables zero; must be integral.
    std::vector<Term> terms;
    for (std::size_t p = 0; p < pivot_col.size(); ++p) {
        mpq_class val = mat[p][ncols];
        if (val == 0) continue;
        if (val.get_den() != 1) return std::nullopt;
        terms.push_back(Term{val.get_num(), basis[pivot_col[p]]});
    }
    return Poly(r, std::move(terms));
}

std::string cert_sort_key(const Certificate& c) {
    return to_string(c.a) + "|" + to_string(c.b0) + "|" + to_string(c.b1);
}

}  // namespace

SearchResult search_certificate(int n, int max_deg, int max_coeff,
                                int shift_deg) {
    if (max_deg < 0 || max_coeff < 0 || shift_deg < 0)
        throw error("search: bounds must be nonnegative");
    auto [k, l] = family_exponents(n);
    Ring r = cert_ring();
    Poly q = make("p", n);
    Poly x = Poly::variable(r, "x"), v = Poly::variable(r, "v");
    Poly t = Poly::variable(r, "t"), xi = Poly::variable(r, "xi");
    Poly pinned = v.pow(2) * t - x * xi;

    // Free coefficient slots: base degree >= 1, fiber degree >= 2.
    std::vector<Monomial> slots = cert_monomials(max_deg, 1, 2);
    const std::uint64_t radix = 2 * static_cast<std::uint64_t>(max_coeff) + 1;
    constexpr std::uint64_t kEnumerationCap = 1ull << 26;
    double estimate = 1.0;
    for (std::size_t i = 0; i < slots.size(); ++i) estimate *= double(radix);
    if (estimate > double(kEnumerationCap))
        throw error("search: enumeration estimate " + std::to_string(estimate) +
                    " exceeds cap " + std::to_string(kEnumerationCap));

    SearchResult result;

    // The pinned part itself obeys the degree bound or the space is empty.
    if (pinned.degree() > max_deg) {
        result.exhausted = true;
        return result;
    }

    std::vector<long> coeffs(slots.size(), -max_coeff);
    const bool single_empty = slots.empty();
    while (true) {
        Poly a = pinned;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (coeffs[i] != 0)
                a += Poly::monomial(r, coeffs[i], slots[i]);
        ++result.scanned;

        Lemma5Data cond = lemma5_conditions(a);
        if (cond.ok) {
            Poly pa = eval_q_at(q, a);
            if (!pa.is_zero()) {
                Poly b0 = Poly::zero(r), b1 = Poly::zero(r);
                if (route_terms_impl(pa, k, l, b0, b1)) {
                    Certificate cand{a, b0, b1, k, l};
                    try {
                        Poly d = cert_quotient(cand);
                        Poly one = Poly::constant(r, 1);
                        if (d != one) {
                            auto c = solve_shear(a, one - d, shift_deg);
                            if (c) {
                                cand.b0 = cand.b0 + x.pow(k) * (*c);
                                cand.b1 = cand.b1 + v.pow(l) * (*c);
                                d = cert_quotient(cand);
                            }
                        }
                        if (d == one &&
                            verify_cocycle(cand, TransitionFunction{q, k, l}))
                            result.found.push_back(std::move(cand));
                    } catch (const error&) {
                        // divisibility or quotient failure: not a solution
                    }
                }
            }
        }

        if (single_empty) break;
        std::size_t i = 0;
        while (i < coeffs.size() && coeffs[i] == max_coeff) {
            coeffs[i] = -max_coeff;
            ++i;
        }
        if (i == coeffs.size()) break;
        ++coeffs[i];
    }

    std::sort(result.found.begin(), result.found.end(),
              [](const Certificate& a, const Certificate& b) {
                  return cert_sort_key(a) < cert_sort_key(b);
              });
    result.exhausted = true;
    return result;
}

// --- certificate files --------------------------------------------------

std::string certificate_to_string(const Certificate& cert) {
    std::string out = ring_header(*cert.a.ring());
    out += '\n';
    out += "k = " + std::to_string(cert.k) + '\n';
    out += "l = " + std::to_string(cert.l) + '\n';
    out += "a = " + to_string(cert.a) + '\n';
    out += "b0 = " + to_string(cert.b0) + '\n';
    out += "b1 = " + to_string(cert.b1) + '\n';
    return out;
}

namespace {

struct LineReader {
    std::istringstream in;
    std::string line;
    int line_no = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    bool next() {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            return true;
        }
        return false;
    }
};

std::pair<std::string, std::string> split_assignment(const std::string& line,
                                                     int line_no) {
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
        throw parse_error(line_no, 1, "expected '<name> = <value>'");
    std::string name;
    for (std::size_t i = 0; i < eq; ++i)
        if (!std::isspace(static_cast<unsigned char>(line[i])))
            name += line[i];
    return {name, line.substr(eq + 1)};
}

int parse_int_field(LineReader& rd, const std::string& want) {
    if (!rd.next())
        throw parse_error(rd.line_no + 1, 1, "missing '" + want + "' line");
    auto [name, value] = split_assignment(rd.line, rd.line_no);
    if (name != want)
        throw parse_error(rd.line_no, 1,
                          "expected '" + want + "', got '" + name + "'");
    try {
        return std::stoi(value);
    } catch (const std::exception&) {
        throw parse_error(rd.line_no, static_cast<int>(rd.line.find('=') + 2),
                          "expected an integer");
    }
}

Poly parse_poly_field(LineReader& rd, const Ring& ring,
                      const std::string& want) {
    if (!rd.next())
        throw parse_error(rd.line_no + 1, 1, "missing '" + want + "' line");
    auto [name, value] = split_assignment(rd.line, rd.line_no);
    if (name != want)
        throw parse_error(rd.line_no, 1,
                          "expected '" + want + "', got '" + name + "'");
    int col0 = static_cast<int>(rd.line.find('=') + 1);
    return parse_poly(ring, value, rd.line_no, col0);
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
    LineReader rd(text);
    if (!rd.next()) throw parse_error(1, 1, "missing ring header");
    Ring ring = parse_ring_header(rd.line, rd.line_no);
    Certificate cert{Poly::zero(ring), Poly::zero(ring), Poly::zero(ring), 0, 0};
    cert.k = parse_int_field(rd, "k");
    cert.l = parse_int_field(rd, "l");
    cert.a = parse_poly_field(rd, ring, "a");
    cert.b0 = parse_poly_field(rd, ring, "b0");
    cert.b1 = parse_poly_field(rd, ring, "b1");
    return cert;
}

std::string transition_to_string(const TransitionFunction& tf) {
    std::string out = ring_header(*tf.q.ring());
    out += '\n';
    out += "k = " + std::to_string(tf.k) + '\n';
    out += "l = " + std::to_string(tf.l) + '\n';
    out += "q = " + to_string(tf.q) + '\n';
    return out;
}

}  // namespace venkit
