#pragma once

#include <map>
#include <string>
#include <vector>

#include "dtl/tree.hpp"

namespace dtl {

// One position of the slot permutation: the root label, a subtree or an
// anti-subtree of one syntactic function.
struct Slot {
    enum class Kind { Root, Sub, AntiSub };
    Kind kind = Kind::Root;
    FunctionSymbol fn;  // unused for Root

    friend bool operator==(const Slot&, const Slot&) = default;
};

enum class LinKind { Projective, AntiProjective, Mixed };

// A recursive linearisation: a fixed ordered slot list with exactly one Root
// slot and each declared function in exactly one Sub or AntiSub slot.
class Linearisation {
public:
    // Validates shape: one Root, every function exactly once, nothing else.
    static Linearisation make(std::vector<Slot> slots, AlphabetRef alphabet);

    const std::vector<Slot>& slots() const { return slots_; }
    const AlphabetRef& alphabet() const { return alphabet_; }

    // Projective iff all non-root slots are Sub; anti-projective iff all are
    // AntiSub; mixed otherwise. A root-only slot list counts as projective.
    LinKind kind() const;

    friend bool operator==(const Linearisation& a, const Linearisation& b) {
        return a.slots_ == b.slots_;
    }

private:
    std::vector<Slot> slots_;
    AlphabetRef alphabet_;
};

struct PositionedString {
    Word letters;
    // 1-based position of the letter contributed by each labelled address.
    std::map<Address, size_t> placement;
};

Word linearize(const Linearisation& lin, const Tree& s);
PositionedString linearize_positions(const Linearisation& lin, const Tree& s);

// Swaps Sub and AntiSub on every slot, keeping the order. Satisfies
// linearize(reverse_linearisation(L), S) == linearize(L, reverse(S)).
Linearisation reverse_linearisation(const Linearisation& lin);

}  // namespace dtl
