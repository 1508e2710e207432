#include "venkit/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace venkit {

int grlex_cmp(const Monomial& a, const Monomial& b) {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

struct MonoHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ull;
        for (auto e : m) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
            h *= 1099511628211ull;
        }
        return h;
    }
};

using Accumulator = std::unordered_map<Monomial, mpz_class, MonoHash>;

std::vector<Term> collect(Accumulator&& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [mono, c] : acc)
        if (c != 0) out.push_back(Term{std::move(c), mono});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        return grlex_cmp(a.mono, b.mono) > 0;
    });
    return out;
}

}  // namespace

Poly normalized(Ring ring, std::vector<Term> raw) {
    Accumulator acc;
    for (auto& t : raw) {
        if (t.mono.size() != ring->size())
            throw error("poly: exponent vector length mismatch");
        acc[std::move(t.mono)] += t.coeff;
    }
    Poly p(std::move(ring));
    p.terms_ = collect(std::move(acc));
    p.validate_flags();
    return p;
}

Poly::Poly(Ring ring, std::vector<Term> terms) {
    *this = normalized(std::move(ring), std::move(terms));
}

void Poly::validate_flags() const {
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < t.mono.size(); ++i)
            if (t.mono[i] < 0 && !ring_->laurent(i))
                throw error("poly: negative exponent of non-Laurent variable '" +
                            ring_->name(i) + "'");
}

Poly Poly::constant(const Ring& ring, mpz_class c) {
    Poly p(ring);
    if (c != 0)
        p.terms_.push_back(Term{std::move(c), Monomial(ring->size(), 0)});
    return p;
}

Poly Poly::variable(const Ring& ring, std::size_t index) {
    if (index >= ring->size()) throw error("poly: variable index out of range");
    Monomial m(ring->size(), 0);
    m[index] = 1;
    Poly p(ring);
    p.terms_.push_back(Term{mpz_class(1), std::move(m)});
    return p;
}

Poly Poly::variable(const Ring& ring, std::string_view name) {
    return variable(ring, ring->index_of(name));
}

Poly Poly::monomial(const Ring& ring, mpz_class c, Monomial exps) {
    if (exps.size() != ring->size())
        throw error("poly: exponent vector length mismatch");
    Poly p(ring);
    if (c != 0) {
        p.terms_.push_back(Term{std::move(c), std::move(exps)});
        p.validate_flags();
    }
    return p;
}

std::int64_t Poly::degree() const {
    if (terms_.empty()) return 0;
    const auto& m = terms_.front().mono;
    return std::accumulate(m.begin(), m.end(), std::int64_t{0});
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono ||
            terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge of two sorted term lists.
Poly Poly::operator+(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw error("poly add: ring mismatch");
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grlex_cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpz_class s = terms_[i].coeff + o.terms_[j].coeff;
            if (s != 0) r.terms_.push_back(Term{std::move(s), terms_[i].mono});
            ++i; ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw error("poly mul: ring mismatch");
    if (is_zero() || o.is_zero()) return Poly(ring_);
    // single-term factors just shift exponents, preserving term order
    if (term_count() == 1 || o.term_count() == 1) {
        const Poly& big = term_count() == 1 ? o : *this;
        const Term& t = (term_count() == 1 ? *this : o).terms_.front();
        Poly r(ring_);
        r.terms_ = big.terms_;
        for (auto& bt : r.terms_) {
            bt.coeff *= t.coeff;
            for (std::size_t i = 0; i < bt.mono.size(); ++i)
                bt.mono[i] += t.mono[i];
        }
        r.validate_flags();
        return r;
    }
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(terms_.size() * o.terms_.size() / 2 + 4,
                                      std::size_t{1} << 20));
    Monomial key(ring_->size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            for (std::size_t k = 0; k < key.size(); ++k)
                key[k] = a.mono[k] + b.mono[k];
            auto [it, fresh] = acc.try_emplace(key);
            if (fresh)
                it->second = a.coeff * b.coeff;
            else
                it->second += a.coeff * b.coeff;
        }
    }
    Poly r(ring_);
    r.terms_ = collect(std::move(acc));
    r.validate_flags();
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(ring_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Poly Poly::cast_to(const Ring& target) const {
    if (!ring_->same_variables(*target))
        throw error("poly cast: different variables");
    Poly r(target);
    r.terms_ = terms_;
    r.validate_flags();
    return r;
}

bool Poly::integral_without(std::span<const std::size_t> cleared) const {
    for (const auto& t : terms_)
        for (auto i : cleared)
            if (t.mono[i] < 0) return false;
    return true;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly sub(const Poly& p, const Poly& q) { return p - q; }
Poly neg(const Poly& p) { return -p; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

namespace {

// Unit inverse of a one-term +-monomial, or nullopt.
std::optional<Poly> invert_unit(const Poly& p) {
    if (p.term_count() != 1) return std::nullopt;
    const Term& t = p.terms().front();
    if (t.coeff != 1 && t.coeff != -1) return std::nullopt;
    Monomial inv = t.mono;
    for (auto& e : inv) e = -e;
    return Poly::monomial(p.ring(), t.coeff, std::move(inv));
}

}  // namespace

namespace {

// One Horner pass: eliminates the variable at `slot` from p by replacing
// it with `image` (and with `image_inv` for the negative exponents).
Poly horner_eliminate(const Poly& p, std::size_t slot, const Poly& image,
                      const std::optional<Poly>& image_inv,
                      const std::string& var_name) {
    std::map<std::int32_t, std::vector<Term>> groups;
    for (const auto& t : p.terms()) {
        Term s = t;
        std::int32_t e = s.mono[slot];
        s.mono[slot] = 0;
        groups[e].push_back(std::move(s));
    }
    const Ring& ring = p.ring();
    auto run = [&](std::int32_t from, std::int32_t to, std::int32_t step,
                   const Poly& base) {
        // Horner from the far exponent toward zero.
        Poly acc = Poly::zero(ring);
        for (std::int32_t e = from; e != to; e -= step) {
            if (!acc.is_zero()) acc = acc * base;
            auto it = groups.find(e);
            if (it != groups.end())
                acc = acc + Poly(ring, std::move(it->second));
        }
        return acc;
    };
    std::int32_t emax = groups.rbegin()->first;
    std::int32_t emin = groups.begin()->first;
    Poly result = Poly::zero(ring);
    if (emax >= 0) result = run(emax, -1, 1, image);
    if (emin < 0) {
        if (!image_inv)
            throw error("substitute: negative power of variable '" + var_name +
                        "' needs a unit monomial image");
        // run leaves exponent offset +1; one more factor lands it on -1..emin
        result = result + run(emin, 0, -1, *image_inv) * (*image_inv);
    }
    return result;
}

}  // namespace

Poly substitute(const Poly& p, std::span<const Poly> images, const Ring& target) {
    const std::size_t nsrc = p.ring()->size();
    if (images.size() != nsrc)
        throw error("substitute: missing variable image");
    for (const auto& im : images)
        if (!same_ring(im.ring(), target))
            throw error("substitute: image ring mismatch");
    if (p.is_zero()) return Poly::zero(target);

    // Scratch ring: target variables followed by one slot per source
    // variable; slots are eliminated one at a time by Horner passes. All
    // positions are Laurent here; target flags are enforced when the
    // result is projected back.
    const std::size_t ntar = target->size();
    std::vector<std::string> names = target->names();
    for (std::size_t v = 0; v < nsrc; ++v)
        names.push_back("#" + std::to_string(v));
    std::vector<bool> flags(names.size(), true);
    Ring scratch = std::make_shared<const RingSpec>(std::move(names),
                                                    std::move(flags));

    auto lift_image = [&](const Poly& im) {
        std::vector<Term> ts;
        ts.reserve(im.term_count());
        for (const auto& t : im.terms()) {
            Monomial m(ntar + nsrc, 0);
            std::copy(t.mono.begin(), t.mono.end(), m.begin());
            ts.push_back(Term{t.coeff, std::move(m)});
        }
        return Poly(scratch, std::move(ts));
    };

    std::vector<Term> lifted;
    lifted.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        Monomial m(ntar + nsrc, 0);
        std::copy(t.mono.begin(), t.mono.end(), m.begin() + ntar);
        lifted.push_back(Term{t.coeff, std::move(m)});
    }
    Poly cur(scratch, std::move(lifted));

    // Small images first keeps the accumulator products cheap.
    std::vector<std::size_t> order(nsrc);
    for (std::size_t v = 0; v < nsrc; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return images[a].term_count() < images[b].term_count();
    });

    for (std::size_t v : order) {
        if (cur.is_zero()) break;
        Poly im = lift_image(images[v]);
        std::optional<Poly> im_inv = invert_unit(im);
        cur = horner_eliminate(cur, ntar + v, im, im_inv, p.ring()->name(v));
    }

    // Project back onto the target ring.
    std::vector<Term> out;
    out.reserve(cur.term_count());
    for (const auto& t : cur.terms()) {
        Monomial m(t.mono.begin(), t.mono.begin() + ntar);
        out.push_back(Term{t.coeff, std::move(m)});
    }
    return Poly(target, std::move(out));
}

Poly partial_derivative(const Poly& p, std::size_t var) {
    if (var >= p.ring()->size()) throw error("derivative: unknown variable");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        std::int32_t e = t.mono[var];
        if (e == 0) continue;
        Term d;
        d.coeff = t.coeff * e;
        d.mono = t.mono;
        d.mono[var] = e - 1;
        out.push_back(std::move(d));
    }
    return Poly(p.ring(), std::move(out));
}

Poly partial_derivative(const Poly& p, std::string_view var) {
    return partial_derivative(p, p.ring()->index_of(var));
}

Poly jacobian2(const Poly& f, const Poly& g, std::string_view var1,
               std::string_view var2) {
    if (!same_ring(f.ring(), g.ring())) throw error("jacobian: ring mismatch");
    std::size_t i = f.ring()->index_of(var1);
    std::size_t j = f.ring()->index_of(var2);
    return partial_derivative(f, i) * partial_derivative(g, j) -
           partial_derivative(f, j) * partial_derivative(g, i);
}

namespace {

// Componentwise-minimum exponent vector over all terms.
Monomial content_monomial(const Poly& p) {
    Monomial m = p.terms().front().mono;
    for (const auto& t : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(m[i], t.mono[i]);
    return m;
}

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (m[i] < d[i]) return false;
    return true;
}

}  // namespace

std::optional<Poly> exact_div(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw error("exact_div: division by zero polynomial");
    const Ring& ring = p.ring();
    if (!same_ring(ring, q.ring())) throw error("exact_div: ring mismatch");
    if (p.is_zero()) return Poly::zero(ring);

    // Shift both operands to exponent floor zero so leading-term division
    // runs over plain polynomials even in a Laurent ring.
    Monomial cp = content_monomial(p), cq = content_monomial(q);
    Monomial shift(ring->size());
    for (std::size_t i = 0; i < shift.size(); ++i) {
        shift[i] = cp[i] - cq[i];
        if (shift[i] < 0 && !ring->laurent(i)) return std::nullopt;
    }
    auto deshift = [&](const Poly& a, const Monomial& c) {
        std::vector<Term> ts = a.terms();
        for (auto& t : ts)
            for (std::size_t i = 0; i < c.size(); ++i) t.mono[i] -= c[i];
        return Poly(a.ring(), std::move(ts));
    };
    Poly rem = deshift(p, cp);
    Poly div = deshift(q, cq);

    const Term& lead = div.terms().front();
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& rl = rem.terms().front();
        if (!divides(lead.mono, rl.mono)) return std::nullopt;
        mpz_class qc, rr;
        mpz_fdiv_qr(qc.get_mpz_t(), rr.get_mpz_t(), rl.coeff.get_mpz_t(),
                    lead.coeff.get_mpz_t());
        if (rr != 0) return std::nullopt;
        Monomial qm(rl.mono.size());
        for (std::size_t i = 0; i < qm.size(); ++i)
            qm[i] = rl.mono[i] - lead.mono[i];
        Poly qt = Poly::monomial(ring, qc, qm);
        rem = rem - qt * div;
        quot.push_back(Term{std::move(qc), std::move(qm)});
    }

    // Reapply the monomial shift; fails if the ring forbids it.
    for (auto& t : quot)
        for (std::size_t i = 0; i < shift.size(); ++i) {
            t.mono[i] += shift[i];
            if (t.mono[i] < 0 && !ring->laurent(i)) return std::nullopt;
        }
    return Poly(ring, std::move(quot));
}

std::vector<MonomialGen> parse_gens(
    const Ring& ring, std::span<const std::pair<std::string, int>> gens) {
    std::vector<MonomialGen> out;
    std::vector<bool> used(ring->size(), false);
    for (const auto& [name, e] : gens) {
        std::size_t v = ring->index_of(name);
        if (used[v]) throw error("monomial ideal: repeated variable '" + name + "'");
        if (e <= 0) throw error("monomial ideal: exponent must be positive");
        used[v] = true;
        out.push_back(MonomialGen{v, static_cast<std::int32_t>(e)});
    }
    return out;
}

namespace {

void check_gen_exponents(const Poly& p, std::span<const MonomialGen> gens) {
    for (const auto& t : p.terms())
        for (const auto& g : gens)
            if (t.mono[g.var] < 0)
                throw error("monomial ideal: negative exponent in variable '" +
                            p.ring()->name(g.var) + "'");
}

bool term_in_ideal(const Term& t, std::span<const MonomialGen> gens) {
    for (const auto& g : gens)
        if (t.mono[g.var] >= g.exp) return true;
    return false;
}

}  // namespace

Poly reduce_mod_monomials(const Poly& p, std::span<const MonomialGen> gens) {
    check_gen_exponents(p, gens);
    std::vector<Term> kept;
    for (const auto& t : p.terms())
        if (!term_in_ideal(t, gens)) kept.push_back(t);
    return Poly(p.ring(), std::move(kept));
}

bool monomial_ideal_member(const Poly& p, std::span<const MonomialGen> gens) {
    check_gen_exponents(p, gens);
    for (const auto& t : p.terms())
        if (!term_in_ideal(t, gens)) return false;
    return true;
}

Poly coeff_in(const Poly& p, std::span<const ExponentPattern> pattern) {
    const Ring& ring = p.ring();
    std::vector<bool> fixed(ring->size(), false);
    std::vector<std::int32_t> want(ring->size(), 0);
    for (const auto& pat : pattern) {
        if (pat.var >= ring->size()) throw error("coeff_in: unknown variable");
        fixed[pat.var] = true;
        want[pat.var] = pat.exp;
    }
    std::vector<std::string> rest_names;
    std::vector<std::string> rest_laurent;
    std::vector<std::size_t> rest_idx;
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (!fixed[i]) {
            rest_names.push_back(ring->name(i));
            if (ring->laurent(i)) rest_laurent.push_back(ring->name(i));
            rest_idx.push_back(i);
        }
    Ring rest = make_ring(rest_names, rest_laurent);
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        bool match = true;
        for (std::size_t i = 0; i < ring->size() && match; ++i)
            if (fixed[i] && t.mono[i] != want[i]) match = false;
        if (!match) continue;
        Monomial m(rest_idx.size());
        for (std::size_t k = 0; k < rest_idx.size(); ++k)
            m[k] = t.mono[rest_idx[k]];
        out.push_back(Term{t.coeff, std::move(m)});
    }
    return Poly(rest, std::move(out));
}

Poly coeff_in(const Poly& p,
              std::span<const std::pair<std::string, int>> pattern) {
    std::vector<ExponentPattern> pats;
    for (const auto& [name, e] : pattern)
        pats.push_back(ExponentPattern{p.ring()->index_of(name),
                                       static_cast<std::int32_t>(e)});
    return coeff_in(p, pats);
}

mpq_class eval_at(const Poly& p, std::span<const mpq_class> values) {
    const Ring& ring = p.ring();
    if (values.size() != ring->size())
        throw error("eval: assignment must cover all variables");
    for (std::size_t i = 0; i < ring->size(); ++i)
        if (ring->laurent(i) && values[i] == 0)
            throw error("eval: zero assigned to inverted variable '" +
                        ring->name(i) + "'");
    mpq_class total = 0;
    for (const auto& t : p.terms()) {
        mpq_class prod(t.coeff);
        for (std::size_t i = 0; i < ring->size(); ++i) {
            std::int32_t e = t.mono[i];
            if (e == 0) continue;
            mpq_class base = values[i];
            if (e < 0) {
                if (base == 0) throw error("eval: division by zero");
                base = 1 / base;
                e = -e;
            }
            for (std::int32_t k = 0; k < e; ++k) prod *= base;
        }
        total += prod;
    }
    return total;
}

}  // namespace venkit
