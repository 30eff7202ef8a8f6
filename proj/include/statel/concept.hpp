#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "statel/symbols.hpp"

namespace statel {

class Concept;
using ConceptPtr = std::shared_ptr<const Concept>;

enum class ConceptKind : std::uint8_t { Top, Name, Not, And, Exists };

// ALC concept tree: ⊤ | A | ¬C | C ⊓ C | ∃r.C.  Nodes are immutable and
// shared; equality is structural.  Disjunction, value restriction and ⊥ are
// derived constructors that expand through the usual equivalences, so the
// five primitive kinds are the only ones downstream code ever sees.
class Concept {
public:
    static ConceptPtr top();
    static ConceptPtr name(Symbol s);
    static ConceptPtr name(std::string_view s) { return name(Symbol::intern(s)); }
    static ConceptPtr negation(ConceptPtr c);
    static ConceptPtr conj(ConceptPtr lhs, ConceptPtr rhs);
    static ConceptPtr exists(Symbol role, ConceptPtr filler);
    static ConceptPtr exists(std::string_view role, ConceptPtr filler) {
        return exists(Symbol::intern(role), filler);
    }

    // C1 ⊔ C2 ≡ ¬(¬C1 ⊓ ¬C2)
    static ConceptPtr disj(ConceptPtr lhs, ConceptPtr rhs);
    // ∀r.C ≡ ¬∃r.¬C
    static ConceptPtr forall(Symbol role, ConceptPtr filler);
    // ⊥ ≡ ¬⊤
    static ConceptPtr bottom();

    ConceptKind kind() const { return kind_; }
    Symbol label() const { return label_; }            // Name: concept, Exists: role
    const ConceptPtr& child() const { return left_; }  // Not, Exists
    const ConceptPtr& lhs() const { return left_; }    // And
    const ConceptPtr& rhs() const { return right_; }   // And

    bool is_top() const { return kind_ == ConceptKind::Top; }
    bool is_name() const { return kind_ == ConceptKind::Name; }
    // A name or ⊤ (the atoms of the §4 normal form).
    bool is_atomic() const { return is_top() || is_name(); }
    // True iff no negation occurs anywhere in the tree.
    bool in_el() const;

    std::size_t hash() const { return hash_; }
    bool equals(const Concept& o) const;

    friend bool operator==(const Concept& a, const Concept& b) { return a.equals(b); }

private:
    Concept(ConceptKind kind, Symbol label, ConceptPtr left, ConceptPtr right);

    ConceptKind kind_;
    Symbol label_;
    ConceptPtr left_, right_;
    std::size_t hash_;
};

inline bool concept_eq(const ConceptPtr& a, const ConceptPtr& b) {
    return a == b || (a && b && a->equals(*b));
}

struct ConceptPtrHash {
    std::size_t operator()(const ConceptPtr& c) const { return c->hash(); }
};
struct ConceptPtrEq {
    bool operator()(const ConceptPtr& a, const ConceptPtr& b) const { return concept_eq(a, b); }
};

}  // namespace statel
