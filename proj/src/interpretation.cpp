#include "statel/interpretation.hpp"

#include <cassert>

namespace statel {

void Interpretation::set_concept(Symbol name, ElementSet members) {
    members.resize(n_);
    concepts_[name] = std::move(members);
}

void Interpretation::add_member(Symbol name, std::uint32_t element) {
    assert(element < n_);
    auto it = concepts_.find(name);
    if (it == concepts_.end()) it = concepts_.emplace(name, ElementSet(n_)).first;
    it->second.set(element);
}

void Interpretation::ensure_role(Symbol role) {
    if (!roles_.count(role)) roles_.emplace(role, RoleGraph{std::vector<ElementSet>(n_, ElementSet(n_))});
}

void Interpretation::add_edge(Symbol role, std::uint32_t from, std::uint32_t to) {
    assert(from < n_ && to < n_);
    ensure_role(role);
    roles_[role].succ[from].set(to);
}

ElementSet Interpretation::members_of(Symbol name) const {
    const ElementSet* s = find_concept(name);
    return s ? *s : ElementSet(n_);
}

const ElementSet* Interpretation::find_concept(Symbol name) const {
    auto it = concepts_.find(name);
    return it == concepts_.end() ? nullptr : &it->second;
}

const RoleGraph* Interpretation::find_role(Symbol role) const {
    auto it = roles_.find(role);
    return it == roles_.end() ? nullptr : &it->second;
}

bool Interpretation::has_edge(Symbol role, std::uint32_t from, std::uint32_t to) const {
    const RoleGraph* r = find_role(role);
    return r && r->succ[from].test(to);
}

Interpretation Interpretation::restricted_to(const Signature& sig) const {
    Interpretation out(n_);
    for (const auto& [name, members] : concepts_)
        if (sig.concepts.count(name)) out.concepts_[name] = members;
    for (const auto& [role, graph] : roles_)
        if (sig.roles.count(role)) out.roles_[role] = graph;
    return out;
}

ElementSet extension(const Interpretation& i, const Concept& c) {
    const std::uint32_t n = i.domain_size();
    switch (c.kind()) {
        case ConceptKind::Top: {
            ElementSet all(n);
            all.set();
            return all;
        }
        case ConceptKind::Name: {
            const ElementSet* s = i.find_concept(c.label());
            return s ? *s : ElementSet(n);
        }
        case ConceptKind::Not:
            return ~extension(i, *c.child());
        case ConceptKind::And:
            return extension(i, *c.lhs()) & extension(i, *c.rhs());
        case ConceptKind::Exists: {
            ElementSet filler = extension(i, *c.child());
            ElementSet out(n);
            if (const RoleGraph* r = i.find_role(c.label())) {
                for (std::uint32_t d = 0; d < n; ++d)
                    if (filler.intersects(r->succ[d])) out.set(d);
            }
            return out;
        }
    }
    return ElementSet(n);
}

std::uint64_t count(const Interpretation& i, const ConceptPtr& c) {
    return extension(i, *c).count();
}

bool satisfies_conditional(const Interpretation& i, const Conditional& k) {
    ElementSet d = extension(i, k.rhs);
    std::uint64_t den = d.count();
    if (den == 0) return true;
    std::uint64_t num = (extension(i, k.lhs) & d).count();
    Rational ratio(mpz_class(static_cast<unsigned long>(num)),
                   mpz_class(static_cast<unsigned long>(den)));
    return k.lower <= ratio && ratio <= k.upper;
}

bool satisfies_gci(const Interpretation& i, const Gci& g) {
    return extension(i, g.sub).is_subset_of(extension(i, g.sup));
}

bool is_model(const Interpretation& i, const KnowledgeBase& kb) {
    for (const Gci& g : kb.tbox())
        if (!satisfies_gci(i, g)) return false;
    for (const Conditional& k : kb.conditionals())
        if (!satisfies_conditional(i, k)) return false;
    return true;
}

std::optional<Rational> query_ratio(const Interpretation& i, const Query& q) {
    ElementSet d = extension(i, q.rhs);
    std::uint64_t den = d.count();
    if (den == 0) return std::nullopt;
    std::uint64_t num = (extension(i, q.lhs) & d).count();
    return Rational(mpz_class(static_cast<unsigned long>(num)),
                    mpz_class(static_cast<unsigned long>(den)));
}

}  // namespace statel
