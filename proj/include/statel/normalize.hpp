#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "statel/kb.hpp"

namespace statel {

// A concept name or ⊤ — the only concepts the §4 normal form mentions.
class Atom {
public:
    static Atom top() { return Atom(); }
    static Atom name(Symbol s) { return Atom(s); }

    bool is_top() const { return !sym_.has_value(); }
    Symbol symbol() const { return *sym_; }  // valid only when !is_top()
    std::string text() const { return is_top() ? "top" : symbol().text(); }
    ConceptPtr to_concept() const;

    friend bool operator==(Atom a, Atom b) {
        return a.is_top() == b.is_top() && (a.is_top() || a.symbol() == b.symbol());
    }
    friend bool operator<(Atom a, Atom b) {
        if (a.is_top() != b.is_top()) return b.is_top();  // names sort before ⊤
        return !a.is_top() && a.symbol() < b.symbol();
    }

private:
    Atom() = default;
    explicit Atom(Symbol s) : sym_(s) {}
    std::optional<Symbol> sym_;
};

struct ConjGci {        // a1 ⊓ a2 ⊑ b   (plain a ⊑ b is stored as a ⊓ ⊤ ⊑ b)
    Atom a1, a2, b;
    bool operator==(const ConjGci&) const = default;
};
struct ExistRightGci {  // a ⊑ ∃role.b
    Atom a;
    Symbol role;
    Atom b;
    bool operator==(const ExistRightGci&) const = default;
};
struct ExistLeftGci {   // ∃role.a ⊑ b
    Symbol role;
    Atom a, b;
    bool operator==(const ExistLeftGci&) const = default;
};
struct AtomicConditional {  // (a | b)[l, u]
    Atom lhs, rhs;
    Rational lower, upper;
};

// Normal-form KB: only the three GCI shapes and atomic conditionals.
// Deterministic conditionals ([1,1]) have been converted to GCIs, so every
// conditional here has lower < 1.  Fresh names introduced during
// normalization are recorded in `provenance`.
struct NormalKb {
    std::vector<ConjGci> conj_gcis;
    std::vector<ExistRightGci> exist_rights;
    std::vector<ExistLeftGci> exist_lefts;
    std::vector<AtomicConditional> conditionals;
    std::map<Symbol, ConceptPtr> provenance;
    Signature original_signature;

    // N_C of the normalized KB (fresh names included), sorted by text.
    std::vector<Symbol> concept_names() const;
    std::vector<Symbol> role_names() const;

    // The same statements as plain concepts, for oracle cross-checks.
    KnowledgeBase to_knowledge_base() const;
};

// Prop. 1: C ⊑ D and (D|C)[1,1] have the same models.
Conditional gci_to_conditional(const Gci& g);
// Throws NotDeterministic unless bounds are exactly [1,1].
Gci conditional_to_gci(const Conditional& k);

// Converts an EL KB to normal form.  Model-preserving w.r.t. the original
// signature: every model extends to a model of the result with unchanged
// counts on original names, and conversely.  Throws NotInElFragment when a
// negation occurs anywhere.
NormalKb normalize(const KnowledgeBase& kb);

// The subset of kb (transitively) sharing concept/role names with the
// query, via union-find over the shared-signature relation.  Connection
// requires a common name, so empty-signature statements (tautologies over ⊤)
// never join any component.  Only valid as a preprocessing step when kb is
// consistent.
KnowledgeBase connected_restriction(const KnowledgeBase& kb, const Query& q);

}  // namespace statel
