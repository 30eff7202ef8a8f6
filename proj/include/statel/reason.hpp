#pragma once

#include <optional>

#include "statel/interpretation.hpp"
#include "statel/limits.hpp"

namespace statel {

struct ReasonOptions {
    Limits limits;
    bool prune_types = true;
};

struct ConsistencyResult {
    bool consistent = false;
    // Built per the §4 Lemma proof and verified with is_model before return.
    std::optional<Interpretation> witness;
};

struct EntailmentResult {
    bool entailed = false;
    // A verified model of the KB violating the queried conditional.
    std::optional<Interpretation> counter_witness;
};

struct PEntailResult {
    // False when ⟦D⟧ = 0 in every model (the problem is infeasible).
    bool query_feasible = false;
    Interval interval;  // [m, M] with attainment flags
    std::optional<Interpretation> lo_witness, hi_witness;
};

// Decides Mod(K) ≠ ∅ for statistical EL KBs: normalize, enumerate choice
// programs, decide each by exact LP, and on success integerize the solution
// and build a concrete witness.
ConsistencyResult check_consistency(const KnowledgeBase& kb, const ReasonOptions& opts = {});

// K ⊨_l (C|D)[l,u]: both strict-violation program families must be
// infeasible.  Strictness is exact because model counts are integers.
EntailmentResult l_entails(const KnowledgeBase& kb, const Conditional& query,
                           const ReasonOptions& opts = {});

// Tight interval [m, M] of ⟦C⊓D⟧/⟦D⟧ over models with ⟦D⟧ > 0, via the
// Charnes–Cooper transform of every choice program.  m and M are the
// closure (inf/sup) of achievable ratios; attainment is reported separately.
// Throws KbInconsistent when kb has no models.
PEntailResult p_entail(const KnowledgeBase& kb, const Query& q, const ReasonOptions& opts = {});

}  // namespace statel
