#include "indpoly/bracket.hpp"

#include <stdexcept>
#include <utility>

namespace indpoly {

std::string to_string(const Bracket& br) {
    return "<" + br.value.str() + ", " + br.a.str() + ", " + br.b.str() + ">";
}

Bracket paste_brackets(const Bracket& x, const Bracket& y) {
    return make_bracket(x.a * y.a, x.b * y.b);
}

Bracket extend_bracket(Bracket br, int ell) {
    if (ell < 0) throw std::invalid_argument("extension length must be >= 0");
    for (int i = 0; i < ell % 6; ++i) {
        Bracket next;
        next.value = -br.b;
        next.a = std::move(br.value);
        next.b = std::move(br.a);
        br = std::move(next);
    }
    return br;
}

Bracket negate_bracket(const Bracket& br) {
    Bracket r;
    r.value = -br.value;
    r.a = -br.a;
    r.b = -br.b;
    return r;
}

Bracket bracket_k1() { return make_bracket(1, 1); }
Bracket bracket_k2() { return make_bracket(0, 1); }
Bracket bracket_c6() { return make_bracket(1, -1); }

}  // namespace indpoly
