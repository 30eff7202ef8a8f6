#pragma once

#include <set>
#include <vector>

#include "statel/concept.hpp"
#include "statel/errors.hpp"
#include "statel/rational.hpp"

namespace statel {

// Concept and role names occurring in a concept or KB.
struct Signature {
    std::set<Symbol> concepts;
    std::set<Symbol> roles;

    void merge(const Signature& o) {
        concepts.insert(o.concepts.begin(), o.concepts.end());
        roles.insert(o.roles.begin(), o.roles.end());
    }
    bool disjoint_with(const Signature& o) const;
    bool operator==(const Signature&) const = default;
};

// Names occurring in c / in the KB statements.
Signature signature_of(const ConceptPtr& c);

// Probabilistic conditional (C|D)[l,u].
struct Conditional {
    Conditional(ConceptPtr c, ConceptPtr d, Rational l, Rational u)
        : lhs(std::move(c)), rhs(std::move(d)), lower(std::move(l)), upper(std::move(u)) {
        if (lower < Rational(0) || upper < lower || Rational(1) < upper)
            throw BoundsError("conditional bounds must satisfy 0 <= l <= u <= 1, got [" +
                              lower.str() + ", " + upper.str() + "]");
    }

    ConceptPtr lhs;  // C
    ConceptPtr rhs;  // D
    Rational lower, upper;
};

// General concept inclusion C ⊑ D.
struct Gci {
    ConceptPtr sub, sup;
};

// Qualitative query (C|D).
struct Query {
    ConceptPtr lhs;  // C
    ConceptPtr rhs;  // D
};

// Closed probability interval with attainment flags for each endpoint
// (p-entailment reports the infimum/supremum and, separately, whether a
// model takes the bound exactly).
struct Interval {
    Rational lo, hi;
    bool lo_attained = false;
    bool hi_attained = false;
};

// A statistical KB: TBox plus conditional set.  The signature is kept
// explicitly so unused names can be added (language invariance: they must
// not change any verdict).
class KnowledgeBase {
public:
    KnowledgeBase() = default;

    void add_gci(Gci g) {
        sig_.merge(signature_of(g.sub));
        sig_.merge(signature_of(g.sup));
        tbox_.push_back(std::move(g));
    }
    void add_gci(ConceptPtr sub, ConceptPtr sup) { add_gci(Gci{std::move(sub), std::move(sup)}); }

    void add_conditional(Conditional k) {
        sig_.merge(signature_of(k.lhs));
        sig_.merge(signature_of(k.rhs));
        conditionals_.push_back(std::move(k));
    }
    void add_conditional(ConceptPtr c, ConceptPtr d, Rational l, Rational u) {
        add_conditional(Conditional(std::move(c), std::move(d), std::move(l), std::move(u)));
    }

    void add_concept_name(Symbol s) { sig_.concepts.insert(s); }
    void add_role_name(Symbol s) { sig_.roles.insert(s); }

    const std::vector<Gci>& tbox() const { return tbox_; }
    const std::vector<Conditional>& conditionals() const { return conditionals_; }
    const Signature& signature() const { return sig_; }

    bool empty() const { return tbox_.empty() && conditionals_.empty(); }
    bool in_el() const;

private:
    std::vector<Gci> tbox_;
    std::vector<Conditional> conditionals_;
    Signature sig_;
};

}  // namespace statel
