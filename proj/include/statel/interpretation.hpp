#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "statel/kb.hpp"

namespace statel {

using ElementSet = boost::dynamic_bitset<>;

// Successor sets of a role: succ[d] = { e | (d,e) ∈ r }.
struct RoleGraph {
    std::vector<ElementSet> succ;

    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& s : succ) n += s.count();
        return n;
    }
};

// Finite interpretation: domain {0..n-1}, concept-name extensions, role
// relations.  Names absent from the maps are interpreted as empty — language
// invariance makes that convention harmless.  Treat as an immutable value
// once populated.
class Interpretation {
public:
    explicit Interpretation(std::uint32_t domain_size) : n_(domain_size) {}

    std::uint32_t domain_size() const { return n_; }

    void set_concept(Symbol name, ElementSet members);
    void add_member(Symbol name, std::uint32_t element);
    void add_edge(Symbol role, std::uint32_t from, std::uint32_t to);
    void ensure_role(Symbol role);

    // Copy of the extension; empty set when the name is not interpreted.
    ElementSet members_of(Symbol name) const;
    // Null when absent (absent == edge-less).
    const ElementSet* find_concept(Symbol name) const;
    const RoleGraph* find_role(Symbol role) const;
    bool has_edge(Symbol role, std::uint32_t from, std::uint32_t to) const;

    const std::map<Symbol, ElementSet>& concepts() const { return concepts_; }
    const std::map<Symbol, RoleGraph>& roles() const { return roles_; }

    // Drops names outside sig; domain unchanged.
    Interpretation restricted_to(const Signature& sig) const;

private:
    std::uint32_t n_;
    std::map<Symbol, ElementSet> concepts_;
    std::map<Symbol, RoleGraph> roles_;
};

// The standard ALC extension C^I over the finite domain.
ElementSet extension(const Interpretation& i, const Concept& c);
inline ElementSet extension(const Interpretation& i, const ConceptPtr& c) {
    return extension(i, *c);
}

// ⟦C⟧ = |C^I|.
std::uint64_t count(const Interpretation& i, const ConceptPtr& c);

// Satisfaction of (C|D)[l,u]: ⟦D⟧ = 0 or ⟦C⊓D⟧/⟦D⟧ ∈ [l,u], exactly.
bool satisfies_conditional(const Interpretation& i, const Conditional& k);

// GCI satisfaction: C^I ⊆ D^I.
bool satisfies_gci(const Interpretation& i, const Gci& g);

bool is_model(const Interpretation& i, const KnowledgeBase& kb);

// ⟦C⊓D⟧/⟦D⟧, or nullopt when ⟦D⟧ = 0.
std::optional<Rational> query_ratio(const Interpretation& i, const Query& q);

}  // namespace statel
