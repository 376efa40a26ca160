#include "dtl/linearise.hpp"

#include <algorithm>

namespace dtl {

Linearisation Linearisation::make(std::vector<Slot> slots, AlphabetRef alphabet) {
    size_t roots = 0;
    std::set<FunctionSymbol> seen;
    for (const auto& s : slots) {
        if (s.kind == Slot::Kind::Root) {
            ++roots;
            continue;
        }
        if (!alphabet->has_function(s.fn))
            throw UnknownSymbol("slot function '" + s.fn.name + "' is not declared");
        if (!seen.insert(s.fn).second)
            throw InvalidLocalSpec("function '" + s.fn.name + "' occurs in two slots");
    }
    if (roots != 1) throw InvalidLocalSpec("slot list must contain exactly one root slot");
    if (seen.size() != alphabet->functions.size())
        throw InvalidLocalSpec("every declared function needs a slot");
    Linearisation lin;
    lin.slots_ = std::move(slots);
    lin.alphabet_ = std::move(alphabet);
    return lin;
}

LinKind Linearisation::kind() const {
    bool any_sub = false, any_anti = false;
    for (const auto& s : slots_) {
        if (s.kind == Slot::Kind::Sub) any_sub = true;
        if (s.kind == Slot::Kind::AntiSub) any_anti = true;
    }
    if (any_anti && any_sub) return LinKind::Mixed;
    if (any_anti) return LinKind::AntiProjective;
    return LinKind::Projective;
}

namespace {

void check_compatible(const Linearisation& lin, const Tree& s) {
    if (!s.alphabet() || !lin.alphabet()) return;
    auto fn_set = [](const std::vector<FunctionSymbol>& v) {
        return std::set<FunctionSymbol>(v.begin(), v.end());
    };
    if (fn_set(lin.alphabet()->functions) != fn_set(s.alphabet()->functions))
        throw IncompatibleAlphabets("linearisation and tree declare different functions");
}

// Recursion of the slot permutation. Slots over empty children contribute
// nothing; each labelled address contributes exactly one letter, whose
// source address is reported alongside.
void run(const Linearisation& lin, const Tree& s, const Address& nil, Word& out,
         std::vector<Address>& origins) {
    if (s.empty()) return;
    for (const auto& slot : lin.slots()) {
        switch (slot.kind) {
            case Slot::Kind::Root:
                if (auto l = s.root()) {
                    out.push_back(*l);
                    origins.push_back(nil);
                }
                break;
            case Slot::Kind::Sub: {
                Address step(std::vector<FunctionSymbol>{slot.fn});
                Tree child = s.subtree(step);
                if (child.empty()) break;
                size_t first = origins.size();
                run(lin, child, nil, out, origins);
                // child address x sits at slot.fn . x in the parent
                for (size_t i = first; i < origins.size(); ++i)
                    origins[i] = step.concat(origins[i]);
                break;
            }
            case Slot::Kind::AntiSub: {
                Address step(std::vector<FunctionSymbol>{slot.fn});
                Tree child = s.anti_subtree(step);
                if (child.empty()) break;
                size_t first = origins.size();
                run(lin, child, nil, out, origins);
                // anti-subtree address x sits at x . slot.fn in the parent
                for (size_t i = first; i < origins.size(); ++i)
                    origins[i] = origins[i].concat(step);
                break;
            }
        }
    }
}

}  // namespace

Word linearize(const Linearisation& lin, const Tree& s) {
    check_compatible(lin, s);
    Word out;
    std::vector<Address> origins;
    run(lin, s, Address{}, out, origins);
    return out;
}

PositionedString linearize_positions(const Linearisation& lin, const Tree& s) {
    check_compatible(lin, s);
    PositionedString ps;
    std::vector<Address> origins;
    run(lin, s, Address{}, ps.letters, origins);
    for (size_t i = 0; i < origins.size(); ++i) ps.placement[origins[i]] = i + 1;
    return ps;
}

Linearisation reverse_linearisation(const Linearisation& lin) {
    std::vector<Slot> slots = lin.slots();
    for (auto& s : slots) {
        if (s.kind == Slot::Kind::Sub)
            s.kind = Slot::Kind::AntiSub;
        else if (s.kind == Slot::Kind::AntiSub)
            s.kind = Slot::Kind::Sub;
    }
    return Linearisation::make(std::move(slots), lin.alphabet());
}

}  // namespace dtl
