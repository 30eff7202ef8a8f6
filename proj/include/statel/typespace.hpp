#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statel/limits.hpp"
#include "statel/normalize.hpp"

namespace statel {

// A type θ ⊆ N_C(K): bit i set means the i-th concept name (in the type
// space's name order) is in θ.  ⊤ is implicitly a member of every type.
struct TypeAssignment {
    std::uint32_t bits = 0;

    bool contains(int name_index) const { return (bits >> name_index) & 1u; }
    bool operator==(const TypeAssignment&) const = default;
};

enum class Relation : std::uint8_t { Le, Eq, Ge };

// Scale robustness of a row: multiplying a satisfying point by any integer
// λ >= 1 keeps the row satisfied.  This is what lets integerize() turn a
// rational solution into an integral one.
enum class ScaleClass : std::uint8_t {
    Homogeneous,    // rhs = 0, any relation
    ScaleRobustGe,  // Σ >= c with c > 0
    ScaleRobustLe,  // Σ <= c with c < 0
    None,           // not scale-robust; integerize() refuses
};

struct LinearConstraint {
    std::vector<std::pair<int, Rational>> coeffs;  // (var index, coeff), sorted, nonzero
    Relation rel = Relation::Eq;
    Rational rhs;
    std::string label;  // row provenance, for the debug dump

    ScaleClass scale_class() const;
    bool same_row(const LinearConstraint& o) const {
        return rel == o.rel && rhs == o.rhs && coeffs == o.coeffs;
    }
};

struct Objective {
    std::vector<std::pair<int, Rational>> coeffs;
    bool maximize = false;
};

struct VarDecl {
    std::string name;
    bool nonneg = true;  // free variables must be declared explicitly
};

struct LinearSystem {
    std::vector<VarDecl> vars;
    std::vector<LinearConstraint> rows;
    std::optional<Objective> objective;

    // LP-format-like listing of variables and rows for inspection.
    std::string dump() const;
};

// One E_{A,B} or F_{A,B,C,D} alternative pair: either the source side is
// empty, or a suitable witness type is populated.
struct ChoiceSet {
    std::array<LinearConstraint, 2> options;
    std::string origin;
};

// The enumerated type space of a normal-form KB.  Variable convention for
// all systems built from it: var i (i < types.size()) is x_{types[i]}, and
// var types.size() is x_⊤.
struct TypeSpace {
    std::vector<Symbol> names;          // bit order, sorted by text
    std::vector<TypeAssignment> types;  // surviving types, ascending bits
    std::vector<TypeAssignment> pruned; // types forced empty by Eq. (5)

    int top_var() const { return static_cast<int>(types.size()); }
    int var_count() const { return static_cast<int>(types.size()) + 1; }

    // Index of a name in the bit order; -1 for ⊤ (member of every type).
    int name_index(Atom a) const;
    bool type_contains(const TypeAssignment& t, Atom a) const {
        int i = name_index(a);
        return i < 0 || t.contains(i);
    }

    // Σ_{a∈θ} x_θ as a coefficient vector (optionally excluding types that
    // contain `excluded`), used for Eq. (4) rows and choice sets.
    std::vector<std::pair<int, Rational>> sum_over(
        Atom member, std::optional<Atom> non_member = std::nullopt) const;
};

// All 2^|N_C| subsets minus (when prune is set) the types some conjunction
// GCI forces empty; those get Eq. (5) rows instead when pruning is off.
// Throws CapacityExceeded when |N_C| exceeds limits.max_concept_names.
TypeSpace enumerate_types(const NormalKb& nkb, const Limits& limits = {}, bool prune = true);

// Rows (2)–(5) plus the non-emptiness row x_⊤ >= 1.
LinearSystem base_program(const NormalKb& nkb, const TypeSpace& ts);

// One E-set per A ⊑ ∃r.B, one F-set per same-role pair
// (A ⊑ ∃r.B, ∃r.C ⊑ D); duplicate sets merged.
std::vector<ChoiceSet> choice_sets(const NormalKb& nkb, const TypeSpace& ts);

// Streams base_program extended by every one-option-per-set selection,
// deduplicated.  Any hitting set's conjunction is implied by some singleton
// selection, so feasibility over these selections is complete.
class ProgramSet {
public:
    ProgramSet(LinearSystem base, std::vector<ChoiceSet> sets, const Limits& limits = {});

    std::size_t count() const { return selections_.size(); }
    LinearSystem build(std::size_t idx) const;

    // Iterator-style access; returns nullopt when exhausted.
    std::optional<LinearSystem> next();
    void reset() { iter_ = 0; }

    const LinearSystem& base() const { return base_; }
    const std::vector<ChoiceSet>& sets() const { return sets_; }

private:
    LinearSystem base_;
    std::vector<ChoiceSet> sets_;
    std::vector<std::vector<std::uint8_t>> selections_;  // deduped option picks
    std::size_t iter_ = 0;
};

}  // namespace statel
