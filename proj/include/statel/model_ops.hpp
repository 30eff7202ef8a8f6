#pragma once

#include "statel/interpretation.hpp"

namespace statel {

// n disjoint copies of i; role edges pair all copy indices, so
// count(n_copy(i,n), F) = n * count(i, F) for every concept F.
Interpretation n_copy(const Interpretation& i, std::uint32_t n);

// Union with i1's elements re-based past i0's domain.  Counts are additive.
Interpretation disjoint_union(const Interpretation& i0, const Interpretation& i1);

// disjoint_union(n_copy(i0,a), n_copy(i1,b)).  For models i0, i1 of kb the
// result is again a model, and every query ratio is the convex combination
// of the input ratios with weight a*⟦D⟧^I0 / (a*⟦D⟧^I0 + b*⟦D⟧^I1).
Interpretation mix_models(const KnowledgeBase& kb, const Interpretation& i0,
                          const Interpretation& i1, std::uint32_t a, std::uint32_t b);

// The mix with a = ⟦D⟧^I1/g, b = ⟦D⟧^I0/g (g = gcd), whose query ratio is
// exactly (r0+r1)/2.  Throws DenominatorEmpty when either ⟦D⟧ is 0.
Interpretation midpoint_model(const KnowledgeBase& kb, const Interpretation& i0,
                              const Interpretation& i1, const Query& q);

// Bisection toward a target ratio x between the two input ratios: returns a
// model whose query ratio is within eps of x, in at most
// ceil(log2((r1-r0)/eps)) midpoint steps.
Interpretation approach_ratio(const KnowledgeBase& kb, const Interpretation& i0,
                              const Interpretation& i1, const Query& q,
                              const Rational& x, const Rational& eps);

}  // namespace statel
