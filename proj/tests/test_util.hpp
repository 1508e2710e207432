#ifndef VENKIT_TEST_UTIL_HPP
#define VENKIT_TEST_UTIL_HPP

#include <random>

#include "venkit/poly.hpp"

namespace venkit::testutil {

inline Poly random_poly(std::mt19937_64& rng, const Ring& ring, int max_deg,
                        int max_coeff, int max_terms) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
    std::vector<Term> terms;
    int count = nterms(rng);
    for (int i = 0; i < count; ++i) {
        Monomial m(ring->size(), 0);
        int budget = max_deg;
        for (std::size_t v = 0; v < ring->size(); ++v) {
            std::uniform_int_distribution<int> e(ring->laurent(v) ? -budget : 0,
                                                 budget);
            m[v] = e(rng);
            budget -= std::abs(m[v]);
            if (budget <= 0) break;
        }
        mpz_class c(coeff(rng));
        if (c != 0) terms.push_back(Term{std::move(c), std::move(m)});
    }
    return Poly(ring, std::move(terms));
}

inline mpq_class random_rational(std::mt19937_64& rng, int bound,
                                 bool nonzero) {
    std::uniform_int_distribution<int> d(-bound, bound);
    int num = d(rng);
    while (nonzero && num == 0) num = d(rng);
    return mpq_class(num);
}

}  // namespace venkit::testutil

#endif
