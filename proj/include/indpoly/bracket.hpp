#pragma once

#include <string>

#include "indpoly/bigint.hpp"

namespace indpoly {

// Bracket of a rooted graph (G, v): <value, a, b> where
//   a = I(G - v; -1), b = I(G - N[v]; -1), value = I(G; -1) = a - b.
// Plain aggregate on purpose: parsed certificates may carry tampered or
// inconsistent triples, and those must be representable so verification can
// reject them. Use consistent() before trusting the value field.
struct Bracket {
    BigInt value;
    BigInt a;
    BigInt b;

    bool consistent() const { return value == a - b; }
    bool operator==(const Bracket&) const = default;
};

inline Bracket make_bracket(BigInt a, BigInt b) {
    Bracket r;
    r.value = a - b;
    r.a = std::move(a);
    r.b = std::move(b);
    return r;
}

std::string to_string(const Bracket& br);  // "<value, a, b>"

// Pasting two rooted graphs at their roots multiplies brackets componentwise:
// <a-b, a, b> (x) <c-d, c, d> = <ac-bd, ac, bd>.
Bracket paste_brackets(const Bracket& x, const Bracket& y);

// One unit of root extension maps (value, a, b) -> (-b, value, a); the bracket
// of the ell-extension is the ell-th iterate. Period 6, and ell = 3 is
// componentwise negation. Requires ell >= 0.
Bracket extend_bracket(Bracket br, int ell);

Bracket negate_bracket(const Bracket& br);

// Brackets of the base rooted graphs (root is any vertex; all three are
// vertex-transitive): K1 = <0,1,1>, K2 = <-1,0,1>, C6 = <2,1,-1>.
Bracket bracket_k1();
Bracket bracket_k2();
Bracket bracket_c6();

}  // namespace indpoly
