#include "statel/model_ops.hpp"

#include <cassert>
#include <numeric>
#include <utility>

#include "statel/errors.hpp"

namespace statel {

Interpretation n_copy(const Interpretation& i, std::uint32_t n) {
    if (n == 0) throw Error("n_copy: n must be >= 1");
    const std::uint32_t base = i.domain_size();
    Interpretation out(base * n);
    // copy c of element d gets index c*base + d
    for (const auto& [name, members] : i.concepts()) {
        ElementSet ext(base * n);
        for (std::uint32_t c = 0; c < n; ++c)
            for (std::uint32_t d = members.find_first(); d != ElementSet::npos;
                 d = members.find_next(d))
                ext.set(c * base + d);
        out.set_concept(name, std::move(ext));
    }
    for (const auto& [role, graph] : i.roles()) {
        out.ensure_role(role);
        for (std::uint32_t d = 0; d < base; ++d) {
            const ElementSet& succ = graph.succ[d];
            if (succ.none()) continue;
            // successors of every copy of d = all copies of succ(d)
            ElementSet all_copies(base * n);
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t e = succ.find_first(); e != ElementSet::npos;
                     e = succ.find_next(e))
                    all_copies.set(c * base + e);
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t e = all_copies.find_first(); e != ElementSet::npos;
                     e = all_copies.find_next(e))
                    out.add_edge(role, c * base + d, e);
        }
    }
    return out;
}

Interpretation disjoint_union(const Interpretation& i0, const Interpretation& i1) {
    const std::uint32_t n0 = i0.domain_size();
    const std::uint32_t n = n0 + i1.domain_size();
    Interpretation out(n);
    for (const auto& [name, members] : i0.concepts()) {
        ElementSet ext(n);
        for (std::uint32_t d = members.find_first(); d != ElementSet::npos;
             d = members.find_next(d))
            ext.set(d);
        out.set_concept(name, std::move(ext));
    }
    for (const auto& [name, members] : i1.concepts()) {
        ElementSet ext = out.members_of(name);
        for (std::uint32_t d = members.find_first(); d != ElementSet::npos;
             d = members.find_next(d))
            ext.set(n0 + d);
        out.set_concept(name, std::move(ext));
    }
    for (const auto& [role, graph] : i0.roles()) {
        out.ensure_role(role);
        for (std::uint32_t d = 0; d < graph.succ.size(); ++d)
            for (std::uint32_t e = graph.succ[d].find_first(); e != ElementSet::npos;
                 e = graph.succ[d].find_next(e))
                out.add_edge(role, d, e);
    }
    for (const auto& [role, graph] : i1.roles()) {
        out.ensure_role(role);
        for (std::uint32_t d = 0; d < graph.succ.size(); ++d)
            for (std::uint32_t e = graph.succ[d].find_first(); e != ElementSet::npos;
                 e = graph.succ[d].find_next(e))
                out.add_edge(role, n0 + d, n0 + e);
    }
    return out;
}

Interpretation mix_models(const KnowledgeBase& kb, const Interpretation& i0,
                          const Interpretation& i1, std::uint32_t a, std::uint32_t b) {
    (void)kb;  // the inputs are required to be models; the output then is one
    if (a == 0 || b == 0) throw Error("mix_models: copy counts must be >= 1");
    return disjoint_union(n_copy(i0, a), n_copy(i1, b));
}

Interpretation midpoint_model(const KnowledgeBase& kb, const Interpretation& i0,
                              const Interpretation& i1, const Query& q) {
    const std::uint64_t d0 = count(i0, q.rhs);
    const std::uint64_t d1 = count(i1, q.rhs);
    if (d0 == 0 || d1 == 0)
        throw DenominatorEmpty("midpoint_model: query condition has empty extension");
    const std::uint64_t g = std::gcd(d0, d1);
    return mix_models(kb, i0, i1, static_cast<std::uint32_t>(d1 / g),
                      static_cast<std::uint32_t>(d0 / g));
}

Interpretation approach_ratio(const KnowledgeBase& kb, const Interpretation& i0,
                              const Interpretation& i1, const Query& q,
                              const Rational& x, const Rational& eps) {
    if (eps <= Rational(0)) throw Error("approach_ratio: eps must be positive");
    auto r0 = query_ratio(i0, q), r1 = query_ratio(i1, q);
    if (!r0 || !r1)
        throw DenominatorEmpty("approach_ratio: query condition has empty extension");

    Interpretation lo = i0, hi = i1;
    Rational rlo = *r0, rhi = *r1;
    if (rhi < rlo) {
        std::swap(lo, hi);
        std::swap(rlo, rhi);
    }
    if (x < rlo || rhi < x)
        throw TargetOutOfRange("approach_ratio: target " + x.str() + " outside [" + rlo.str() +
                               ", " + rhi.str() + "]");

    if (Rational::abs(rlo - x) < eps) return lo;
    if (Rational::abs(rhi - x) < eps) return hi;

    // interval width halves per step, so the midpoint reaches the target in
    // at most ceil(log2(width/eps)) iterations
    while (true) {
        Interpretation mid = midpoint_model(kb, lo, hi, q);
        Rational rm = (rlo + rhi) / Rational(2);
        assert(*query_ratio(mid, q) == rm);
        if (Rational::abs(rm - x) < eps) return mid;
        if (rm < x) {
            lo = std::move(mid);
            rlo = rm;
        } else {
            hi = std::move(mid);
            rhi = rm;
        }
    }
}

}  // namespace statel
