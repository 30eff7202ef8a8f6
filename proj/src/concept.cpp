#include "statel/concept.hpp"

#include <cassert>

namespace statel {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Symbol no_symbol() {
    static Symbol s = Symbol::intern("");
    return s;
}

}  // namespace

Concept::Concept(ConceptKind kind, Symbol label, ConceptPtr left, ConceptPtr right)
    : kind_(kind), label_(label), left_(std::move(left)), right_(std::move(right)) {
    std::size_t h = static_cast<std::size_t>(kind_);
    h = mix(h, label_.id());
    if (left_) h = mix(h, left_->hash());
    if (right_) h = mix(h, right_->hash());
    hash_ = h;
}

ConceptPtr Concept::top() {
    static const ConceptPtr t(new Concept(ConceptKind::Top, no_symbol(), nullptr, nullptr));
    return t;
}

ConceptPtr Concept::name(Symbol s) {
    return ConceptPtr(new Concept(ConceptKind::Name, s, nullptr, nullptr));
}

ConceptPtr Concept::negation(ConceptPtr c) {
    assert(c);
    return ConceptPtr(new Concept(ConceptKind::Not, no_symbol(), std::move(c), nullptr));
}

ConceptPtr Concept::conj(ConceptPtr lhs, ConceptPtr rhs) {
    assert(lhs && rhs);
    return ConceptPtr(new Concept(ConceptKind::And, no_symbol(), std::move(lhs), std::move(rhs)));
}

ConceptPtr Concept::exists(Symbol role, ConceptPtr filler) {
    assert(filler);
    return ConceptPtr(new Concept(ConceptKind::Exists, role, std::move(filler), nullptr));
}

ConceptPtr Concept::disj(ConceptPtr lhs, ConceptPtr rhs) {
    return negation(conj(negation(std::move(lhs)), negation(std::move(rhs))));
}

ConceptPtr Concept::forall(Symbol role, ConceptPtr filler) {
    return negation(exists(role, negation(std::move(filler))));
}

ConceptPtr Concept::bottom() {
    return negation(top());
}

bool Concept::in_el() const {
    switch (kind_) {
        case ConceptKind::Top:
        case ConceptKind::Name:
            return true;
        case ConceptKind::Not:
            return false;
        case ConceptKind::And:
            return left_->in_el() && right_->in_el();
        case ConceptKind::Exists:
            return left_->in_el();
    }
    return false;
}

bool Concept::equals(const Concept& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_ || hash_ != o.hash_ || !(label_ == o.label_)) return false;
    if (!concept_eq(left_, o.left_)) return false;
    return concept_eq(right_, o.right_);
}

}  // namespace statel
