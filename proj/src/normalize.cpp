#include "statel/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace statel {

ConceptPtr Atom::to_concept() const {
    return is_top() ? Concept::top() : Concept::name(symbol());
}

Conditional gci_to_conditional(const Gci& g) {
    return Conditional(g.sup, g.sub, Rational(1), Rational(1));
}

Gci conditional_to_gci(const Conditional& k) {
    if (!(k.lower == Rational(1) && k.upper == Rational(1)))
        throw NotDeterministic("conditional_to_gci requires bounds [1,1], got [" +
                               k.lower.str() + ", " + k.upper.str() + "]");
    return Gci{k.rhs, k.lhs};
}

namespace {

bool atomic(const ConceptPtr& c) { return c->is_atomic(); }

Atom to_atom(const ConceptPtr& c) {
    assert(atomic(c));
    return c->is_top() ? Atom::top() : Atom::name(c->label());
}

// Rewrites arbitrary EL GCIs into the three normal shapes, introducing fresh
// names for complex subconcepts (classical one-directional rules).
class Normalizer {
public:
    explicit Normalizer(NormalKb& out) : out_(out) {}

    Symbol fresh(const ConceptPtr& definition) {
        Symbol s = Symbol::intern("_N" + std::to_string(counter_++));
        out_.provenance.emplace(s, definition);
        return s;
    }

    void add_gci(ConceptPtr sub, ConceptPtr sup) { work_.push_back({std::move(sub), std::move(sup)}); }

    void run() {
        while (!work_.empty()) {
            Gci g = std::move(work_.front());
            work_.pop_front();
            step(std::move(g));
        }
    }

private:
    void step(Gci g) {
        const ConceptPtr& sub = g.sub;
        const ConceptPtr& sup = g.sup;

        // final shapes
        if (atomic(sub) && atomic(sup)) {
            out_.conj_gcis.push_back({to_atom(sub), Atom::top(), to_atom(sup)});
            return;
        }
        if (sub->kind() == ConceptKind::And && atomic(sub->lhs()) && atomic(sub->rhs()) &&
            atomic(sup)) {
            out_.conj_gcis.push_back({to_atom(sub->lhs()), to_atom(sub->rhs()), to_atom(sup)});
            return;
        }
        if (sub->kind() == ConceptKind::Exists && atomic(sub->child()) && atomic(sup)) {
            out_.exist_lefts.push_back({sub->label(), to_atom(sub->child()), to_atom(sup)});
            return;
        }
        if (atomic(sub) && sup->kind() == ConceptKind::Exists && atomic(sup->child())) {
            out_.exist_rights.push_back({to_atom(sub), sup->label(), to_atom(sup->child())});
            return;
        }

        // split conjunctions on the right:  C ⊑ D1 ⊓ D2
        if (sup->kind() == ConceptKind::And) {
            add_gci(sub, sup->lhs());
            add_gci(sub, sup->rhs());
            return;
        }
        // complex filler on the right:  B ⊑ ∃r.Ĉ  ~>  B ⊑ ∃r.X, X ⊑ Ĉ
        if (sup->kind() == ConceptKind::Exists && !atomic(sup->child())) {
            ConceptPtr x = Concept::name(fresh(sup->child()));
            add_gci(sub, Concept::exists(sup->label(), x));
            add_gci(x, sup->child());
            return;
        }
        // complex filler on the left:  ∃r.Ĉ ⊑ D  ~>  Ĉ ⊑ X, ∃r.X ⊑ D
        if (sub->kind() == ConceptKind::Exists && !atomic(sub->child())) {
            ConceptPtr x = Concept::name(fresh(sub->child()));
            add_gci(sub->child(), x);
            add_gci(Concept::exists(sub->label(), x), sup);
            return;
        }
        // complex conjunct on the left:  Ĉ ⊓ C ⊑ E  ~>  Ĉ ⊑ X, X ⊓ C ⊑ E
        if (sub->kind() == ConceptKind::And) {
            if (!atomic(sub->lhs())) {
                ConceptPtr x = Concept::name(fresh(sub->lhs()));
                add_gci(sub->lhs(), x);
                add_gci(Concept::conj(x, sub->rhs()), sup);
                return;
            }
            if (!atomic(sub->rhs())) {
                ConceptPtr x = Concept::name(fresh(sub->rhs()));
                add_gci(sub->rhs(), x);
                add_gci(Concept::conj(sub->lhs(), x), sup);
                return;
            }
            // both conjuncts atomic, so sup must still be complex:
            // A1 ⊓ A2 ⊑ D̂  ~>  A1 ⊓ A2 ⊑ X, X ⊑ D̂
            ConceptPtr x = Concept::name(fresh(sup));
            add_gci(sub, x);
            add_gci(x, sup);
            return;
        }
        // sub is ∃r.A (atomic filler) with complex sup:  ∃r.A ⊑ X, X ⊑ D̂
        if (sub->kind() == ConceptKind::Exists) {
            ConceptPtr x = Concept::name(fresh(sup));
            add_gci(sub, x);
            add_gci(x, sup);
            return;
        }
        assert(false && "unreachable: EL concept shape not covered");
    }

    NormalKb& out_;
    std::deque<Gci> work_;
    int counter_ = 0;
};

void require_el(const KnowledgeBase& kb) {
    if (!kb.in_el())
        throw NotInElFragment("knowledge base contains negation (not in the EL fragment)");
}

}  // namespace

NormalKb normalize(const KnowledgeBase& kb) {
    require_el(kb);

    NormalKb out;
    out.original_signature = kb.signature();
    Normalizer norm(out);

    for (const Gci& g : kb.tbox()) norm.add_gci(g.sub, g.sup);

    for (const Conditional& k : kb.conditionals()) {
        // deterministic conditionals become GCIs (Prop. 1)
        if (k.lower == Rational(1)) {
            norm.add_gci(k.rhs, k.lhs);
            continue;
        }
        // sides must be atomic; fresh names are pinned with full equivalence
        // so the counts of the sides transfer to the fresh names
        ConceptPtr lhs = k.lhs, rhs = k.rhs;
        if (!atomic(lhs)) {
            ConceptPtr x = Concept::name(norm.fresh(lhs));
            norm.add_gci(x, lhs);
            norm.add_gci(lhs, x);
            lhs = x;
        }
        if (!atomic(rhs)) {
            ConceptPtr y = Concept::name(norm.fresh(rhs));
            norm.add_gci(y, rhs);
            norm.add_gci(rhs, y);
            rhs = y;
        }
        out.conditionals.push_back({to_atom(lhs), to_atom(rhs), k.lower, k.upper});
    }

    norm.run();
    return out;
}

std::vector<Symbol> NormalKb::concept_names() const {
    std::set<Symbol> names;
    auto add = [&](Atom a) {
        if (!a.is_top()) names.insert(a.symbol());
    };
    for (const ConjGci& g : conj_gcis) {
        add(g.a1);
        add(g.a2);
        add(g.b);
    }
    for (const ExistRightGci& g : exist_rights) {
        add(g.a);
        add(g.b);
    }
    for (const ExistLeftGci& g : exist_lefts) {
        add(g.a);
        add(g.b);
    }
    for (const AtomicConditional& k : conditionals) {
        add(k.lhs);
        add(k.rhs);
    }
    std::vector<Symbol> out(names.begin(), names.end());
    std::sort(out.begin(), out.end(), Symbol::text_less);
    return out;
}

std::vector<Symbol> NormalKb::role_names() const {
    std::set<Symbol> roles;
    for (const ExistRightGci& g : exist_rights) roles.insert(g.role);
    for (const ExistLeftGci& g : exist_lefts) roles.insert(g.role);
    std::vector<Symbol> out(roles.begin(), roles.end());
    std::sort(out.begin(), out.end(), Symbol::text_less);
    return out;
}

KnowledgeBase NormalKb::to_knowledge_base() const {
    KnowledgeBase kb;
    for (const ConjGci& g : conj_gcis)
        kb.add_gci(Concept::conj(g.a1.to_concept(), g.a2.to_concept()), g.b.to_concept());
    for (const ExistRightGci& g : exist_rights)
        kb.add_gci(g.a.to_concept(), Concept::exists(g.role, g.b.to_concept()));
    for (const ExistLeftGci& g : exist_lefts)
        kb.add_gci(Concept::exists(g.role, g.a.to_concept()), g.b.to_concept());
    for (const AtomicConditional& k : conditionals)
        kb.add_conditional(k.lhs.to_concept(), k.rhs.to_concept(), k.lower, k.upper);
    return kb;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

KnowledgeBase connected_restriction(const KnowledgeBase& kb, const Query& q) {
    const std::size_t n_stmt = kb.tbox().size() + kb.conditionals().size();
    const std::size_t query_node = n_stmt;
    UnionFind uf(n_stmt + 1);

    std::map<Symbol, std::size_t> first_seen_concept, first_seen_role;
    auto connect = [&](std::size_t node, const Signature& sig) {
        for (Symbol s : sig.concepts) {
            auto [it, inserted] = first_seen_concept.emplace(s, node);
            if (!inserted) uf.unite(node, it->second);
        }
        for (Symbol s : sig.roles) {
            auto [it, inserted] = first_seen_role.emplace(s, node);
            if (!inserted) uf.unite(node, it->second);
        }
    };

    for (std::size_t i = 0; i < kb.tbox().size(); ++i) {
        Signature sig = signature_of(kb.tbox()[i].sub);
        sig.merge(signature_of(kb.tbox()[i].sup));
        connect(i, sig);
    }
    for (std::size_t i = 0; i < kb.conditionals().size(); ++i) {
        const Conditional& k = kb.conditionals()[i];
        Signature sig = signature_of(k.lhs);
        sig.merge(signature_of(k.rhs));
        connect(kb.tbox().size() + i, sig);
    }
    {
        Signature sig = signature_of(q.lhs);
        sig.merge(signature_of(q.rhs));
        connect(query_node, sig);
    }

    KnowledgeBase out;
    const std::size_t root = uf.find(query_node);
    for (std::size_t i = 0; i < kb.tbox().size(); ++i)
        if (uf.find(i) == root) out.add_gci(kb.tbox()[i]);
    for (std::size_t i = 0; i < kb.conditionals().size(); ++i)
        if (uf.find(kb.tbox().size() + i) == root) out.add_conditional(kb.conditionals()[i]);
    return out;
}

}  // namespace statel
