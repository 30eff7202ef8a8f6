#include "statel/kb.hpp"

namespace statel {

namespace {

void collect(const ConceptPtr& c, Signature& sig) {
    switch (c->kind()) {
        case ConceptKind::Top:
            return;
        case ConceptKind::Name:
            sig.concepts.insert(c->label());
            return;
        case ConceptKind::Not:
            collect(c->child(), sig);
            return;
        case ConceptKind::And:
            collect(c->lhs(), sig);
            collect(c->rhs(), sig);
            return;
        case ConceptKind::Exists:
            sig.roles.insert(c->label());
            collect(c->child(), sig);
            return;
    }
}

}  // namespace

Signature signature_of(const ConceptPtr& c) {
    Signature sig;
    collect(c, sig);
    return sig;
}

bool Signature::disjoint_with(const Signature& o) const {
    for (Symbol s : concepts)
        if (o.concepts.count(s)) return false;
    for (Symbol s : roles)
        if (o.roles.count(s)) return false;
    return true;
}

bool KnowledgeBase::in_el() const {
    for (const Gci& g : tbox_)
        if (!g.sub->in_el() || !g.sup->in_el()) return false;
    for (const Conditional& k : conditionals_)
        if (!k.lhs->in_el() || !k.rhs->in_el()) return false;
    return true;
}

}  // namespace statel
