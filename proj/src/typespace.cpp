#include "statel/typespace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "statel/errors.hpp"

namespace statel {

ScaleClass LinearConstraint::scale_class() const {
    if (rhs.is_zero()) return ScaleClass::Homogeneous;
    if (rel == Relation::Ge && rhs.sign() > 0) return ScaleClass::ScaleRobustGe;
    if (rel == Relation::Le && rhs.sign() < 0) return ScaleClass::ScaleRobustLe;
    return ScaleClass::None;
}

std::string LinearSystem::dump() const {
    std::ostringstream os;
    os << "vars:";
    for (const VarDecl& v : vars) os << ' ' << v.name << (v.nonneg ? "" : " (free)");
    os << '\n';
    if (objective) {
        os << (objective->maximize ? "max:" : "min:");
        for (const auto& [j, c] : objective->coeffs) os << ' ' << c.str() << '*' << vars[j].name;
        os << '\n';
    }
    for (const LinearConstraint& row : rows) {
        if (!row.label.empty()) os << row.label << ": ";
        bool first = true;
        for (const auto& [j, c] : row.coeffs) {
            if (!first) os << " + ";
            os << c.str() << '*' << vars[j].name;
            first = false;
        }
        if (first) os << '0';
        os << (row.rel == Relation::Le ? " <= " : row.rel == Relation::Ge ? " >= " : " = ");
        os << row.rhs.str() << '\n';
    }
    return os.str();
}

int TypeSpace::name_index(Atom a) const {
    if (a.is_top()) return -1;
    auto it = std::lower_bound(names.begin(), names.end(), a.symbol(), Symbol::text_less);
    if (it == names.end() || !(*it == a.symbol()))
        throw Error("typespace: unknown concept name '" + a.text() + "'");
    return static_cast<int>(it - names.begin());
}

std::vector<std::pair<int, Rational>> TypeSpace::sum_over(
    Atom member, std::optional<Atom> non_member) const {
    std::vector<std::pair<int, Rational>> coeffs;
    for (std::size_t i = 0; i < types.size(); ++i) {
        if (!type_contains(types[i], member)) continue;
        if (non_member && type_contains(types[i], *non_member)) continue;
        coeffs.emplace_back(static_cast<int>(i), Rational(1));
    }
    return coeffs;
}

TypeSpace enumerate_types(const NormalKb& nkb, const Limits& limits, bool prune) {
    TypeSpace ts;
    ts.names = nkb.concept_names();
    const int k = static_cast<int>(ts.names.size());
    if (k > limits.max_concept_names)
        throw CapacityExceeded("type space needs " + std::to_string(k) +
                               " concept names; limit is " +
                               std::to_string(limits.max_concept_names));

    // precompute conjunction masks: a type is forced empty when it contains
    // a1 and a2 but not b (⊤ memberships are always satisfied)
    struct Rule {
        std::uint32_t need;    // bits that must be present to trigger
        std::uint32_t forbid;  // bit of b (0 when b = ⊤: never triggers)
        bool b_is_top;
    };
    std::vector<Rule> rules;
    auto bit = [&](Atom a) -> std::uint32_t {
        return a.is_top() ? 0u : 1u << ts.name_index(a);
    };
    for (const ConjGci& g : nkb.conj_gcis) {
        if (g.b.is_top()) continue;  // conclusion ⊤ holds in every type
        rules.push_back({bit(g.a1) | bit(g.a2), bit(g.b), false});
    }

    const std::uint32_t total = 1u << k;
    for (std::uint32_t bits = 0; bits < total; ++bits) {
        bool dead = false;
        for (const Rule& r : rules) {
            if ((bits & r.need) == r.need && (bits & r.forbid) == 0) {
                dead = true;
                break;
            }
        }
        if (dead) ts.pruned.push_back({bits});
        if (!dead || !prune) ts.types.push_back({bits});
    }
    return ts;
}

namespace {

LinearConstraint make_row(std::vector<std::pair<int, Rational>> coeffs, Relation rel,
                          Rational rhs, std::string label) {
    return LinearConstraint{std::move(coeffs), rel, std::move(rhs), std::move(label)};
}

// c1 - scale*c2, on sorted sparse vectors
std::vector<std::pair<int, Rational>> combine(const std::vector<std::pair<int, Rational>>& c1,
                                              const Rational& scale,
                                              const std::vector<std::pair<int, Rational>>& c2) {
    std::map<int, Rational> acc;
    for (const auto& [j, c] : c1) acc[j] += c;
    for (const auto& [j, c] : c2) acc[j] -= scale * c;
    std::vector<std::pair<int, Rational>> out;
    for (auto& [j, c] : acc)
        if (!c.is_zero()) out.emplace_back(j, std::move(c));
    return out;
}

}  // namespace

LinearSystem base_program(const NormalKb& nkb, const TypeSpace& ts) {
    LinearSystem sys;
    for (std::size_t i = 0; i < ts.types.size(); ++i) {
        std::string name = "x{";
        bool first = true;
        for (std::size_t b = 0; b < ts.names.size(); ++b) {
            if (!ts.types[i].contains(static_cast<int>(b))) continue;
            if (!first) name += ',';
            name += ts.names[b].text();
            first = false;
        }
        name += '}';
        sys.vars.push_back({std::move(name), true});
    }
    sys.vars.push_back({"x_top", true});
    const int top = ts.top_var();

    // (2) the type sizes add up to the domain size
    {
        std::vector<std::pair<int, Rational>> coeffs;
        for (std::size_t i = 0; i < ts.types.size(); ++i)
            coeffs.emplace_back(static_cast<int>(i), Rational(1));
        coeffs.emplace_back(top, Rational(-1));
        sys.rows.push_back(make_row(std::move(coeffs), Relation::Eq, Rational(0), "eq2"));
    }
    // (3) nonnegativity, one row per type variable
    for (std::size_t i = 0; i < ts.types.size(); ++i)
        sys.rows.push_back(make_row({{static_cast<int>(i), Rational(1)}}, Relation::Ge,
                                    Rational(0), "eq3"));
    // (4) conditional rows, denominators cleared
    for (std::size_t ci = 0; ci < nkb.conditionals.size(); ++ci) {
        const AtomicConditional& k = nkb.conditionals[ci];
        auto num = ts.sum_over(k.lhs);
        // numerator sums over types containing both sides
        std::vector<std::pair<int, Rational>> both;
        for (const auto& [j, c] : num)
            if (ts.type_contains(ts.types[j], k.rhs)) both.emplace_back(j, c);
        auto den = ts.sum_over(k.rhs);

        // l*Σ_B <= Σ_AB  ~>  q_l*Σ_AB - p_l*Σ_B >= 0
        {
            Rational q(k.lower.den(), mpz_class(1));
            Rational p(k.lower.num(), mpz_class(1));
            std::vector<std::pair<int, Rational>> scaled;
            for (const auto& [j, c] : both) scaled.emplace_back(j, q * c);
            sys.rows.push_back(make_row(combine(scaled, p, den), Relation::Ge, Rational(0),
                                        "cond" + std::to_string(ci) + ".lo"));
        }
        // Σ_AB <= u*Σ_B  ~>  q_u*Σ_AB - p_u*Σ_B <= 0
        {
            Rational q(k.upper.den(), mpz_class(1));
            Rational p(k.upper.num(), mpz_class(1));
            std::vector<std::pair<int, Rational>> scaled;
            for (const auto& [j, c] : both) scaled.emplace_back(j, q * c);
            sys.rows.push_back(make_row(combine(scaled, p, den), Relation::Le, Rational(0),
                                        "cond" + std::to_string(ci) + ".hi"));
        }
    }
    // (5) types killed by conjunction GCIs; present only when the type space
    // was built without pruning (pruned types otherwise have no variable)
    for (std::size_t i = 0; i < ts.types.size(); ++i) {
        if (std::find(ts.pruned.begin(), ts.pruned.end(), ts.types[i]) == ts.pruned.end())
            continue;
        sys.rows.push_back(
            make_row({{static_cast<int>(i), Rational(1)}}, Relation::Eq, Rational(0), "eq5"));
    }
    // the domain is non-empty (§2); without this row the all-zero vector
    // satisfies (2)-(5) and no inconsistency is ever detected
    sys.rows.push_back(make_row({{top, Rational(1)}}, Relation::Ge, Rational(1), "nonempty"));
    return sys;
}

std::vector<ChoiceSet> choice_sets(const NormalKb& nkb, const TypeSpace& ts) {
    std::vector<ChoiceSet> out;
    auto add_unique = [&](ChoiceSet cs) {
        for (const ChoiceSet& seen : out)
            if (seen.options[0].same_row(cs.options[0]) && seen.options[1].same_row(cs.options[1]))
                return;
        out.push_back(std::move(cs));
    };

    for (const ExistRightGci& g : nkb.exist_rights) {
        std::string origin = "E(" + g.a.text() + "," + g.b.text() + ")";
        ChoiceSet cs;
        cs.options[0] = LinearConstraint{ts.sum_over(g.a), Relation::Eq, Rational(0),
                                         origin + ".empty"};
        cs.options[1] = LinearConstraint{ts.sum_over(g.b), Relation::Ge, Rational(1),
                                         origin + ".witness"};
        cs.origin = std::move(origin);
        add_unique(std::move(cs));
    }
    for (const ExistRightGci& g : nkb.exist_rights) {
        for (const ExistLeftGci& h : nkb.exist_lefts) {
            if (!(g.role == h.role)) continue;
            std::string origin = "F(" + g.a.text() + "," + g.b.text() + "," + h.a.text() + "," +
                                 h.b.text() + ")";
            ChoiceSet cs;
            cs.options[0] = LinearConstraint{ts.sum_over(g.a, h.b), Relation::Eq, Rational(0),
                                             origin + ".empty"};
            cs.options[1] = LinearConstraint{ts.sum_over(g.b, h.a), Relation::Ge, Rational(1),
                                             origin + ".witness"};
            cs.origin = std::move(origin);
            add_unique(std::move(cs));
        }
    }
    return out;
}

ProgramSet::ProgramSet(LinearSystem base, std::vector<ChoiceSet> sets, const Limits& limits)
    : base_(std::move(base)), sets_(std::move(sets)) {
    if (static_cast<int>(sets_.size()) > limits.max_choice_sets)
        throw CapacityExceeded("KB needs " + std::to_string(sets_.size()) +
                               " choice sets; limit is " +
                               std::to_string(limits.max_choice_sets));

    // enumerate one-option-per-set selections, dropping duplicates (distinct
    // selections can pick identical constraint sets when options repeat
    // across choice sets)
    std::set<std::string> seen;
    const std::size_t total = std::size_t{1} << sets_.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint8_t> pick(sets_.size());
        std::vector<std::string> key_rows;
        for (std::size_t s = 0; s < sets_.size(); ++s) {
            pick[s] = static_cast<std::uint8_t>((mask >> s) & 1u);
            const LinearConstraint& row = sets_[s].options[pick[s]];
            std::ostringstream k;
            k << static_cast<int>(row.rel) << '|' << row.rhs.str();
            for (const auto& [j, c] : row.coeffs) k << '|' << j << ':' << c.str();
            key_rows.push_back(k.str());
        }
        std::sort(key_rows.begin(), key_rows.end());
        key_rows.erase(std::unique(key_rows.begin(), key_rows.end()), key_rows.end());
        std::string key;
        for (const std::string& r : key_rows) key += r + ";";
        if (seen.insert(std::move(key)).second) selections_.push_back(std::move(pick));
    }
}

LinearSystem ProgramSet::build(std::size_t idx) const {
    LinearSystem sys = base_;
    const std::vector<std::uint8_t>& pick = selections_[idx];
    for (std::size_t s = 0; s < sets_.size(); ++s)
        sys.rows.push_back(sets_[s].options[pick[s]]);
    return sys;
}

std::optional<LinearSystem> ProgramSet::next() {
    if (iter_ >= selections_.size()) return std::nullopt;
    return build(iter_++);
}

}  // namespace statel
