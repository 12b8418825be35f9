#include "indpoly/synth.hpp"

namespace indpoly {

ClaimResult claim_graph(int k, const BigInt& q) {
    if (k < 1) throw std::invalid_argument("claim_graph needs k >= 1");
    if (q <= 0 || q >= pow2(k) || q % 2 == 0)
        throw std::invalid_argument("claim_graph needs odd q with 0 < q < 2^k (got q=" +
                                    q.str() + ", k=" + std::to_string(k) + ")");
    if (k == 1) {
        // Only odd value in range is q = 1: the 1-extension of C6, <1, 2, 1>.
        return ClaimResult{Certificate{cert_extend(1, cert_base(BaseGraph::C6)), 1, 1},
                           ClaimForm::Form1};
    }
    BigInt half = pow2(k - 1);
    if (q > half) {
        // Upper half: recurse one level down and attach an extended hexagon
        // at the root. The attachment doubles the 2^(k-1) form entries while
        // keeping the value at q; which extension does that depends on form.
        ClaimResult child = claim_graph(k - 1, q - half);
        CertNodePtr tree;
        if (child.form == ClaimForm::Form1)
            // <q', 2^(k-1), 2^(k-1)-q'> (x) <1, 2, 1> = <q, 2^k, 2^k - q>
            tree = cert_paste(child.certificate.root, cert_extend(1, cert_base(BaseGraph::C6)));
        else
            // <q', q'-2^(k-1), -2^(k-1)> (x) <-1, 1, 2> = <q, q - 2^k, -2^k>
            tree = cert_paste(child.certificate.root, cert_extend(2, cert_base(BaseGraph::C6)));
        return ClaimResult{Certificate{std::move(tree), k, q}, child.form};
    }
    // Lower half: realize the mirrored value 2^k - q (upper half) and flip it
    // with a root extension, which negates-and-shuffles the bracket back into
    // the other closed form for value q.
    ClaimResult upper = claim_graph(k, pow2(k) - q);
    if (upper.form == ClaimForm::Form1)
        // 4 steps: <2^k - q, 2^k, q> -> <q, q - 2^k, -2^k>
        return ClaimResult{
            Certificate{cert_extend(4, upper.certificate.root), k, q}, ClaimForm::Form2};
    // 2 steps: <2^k - q, -q, -2^k> -> <q, 2^k, 2^k - q>
    return ClaimResult{Certificate{cert_extend(2, upper.certificate.root), k, q},
                       ClaimForm::Form1};
}

Certificate connectify(const Certificate& g, const Certificate& h) {
    if (!g.root || !h.root) throw std::invalid_argument("connectify needs built certificates");
    // Extend-by-2 makes each root bracket <-b, v, a>; pasting multiplies
    // componentwise; the 4-extension then lands on value (v1*v2) exactly.
    CertNodePtr joined =
        cert_extend(4, cert_paste(cert_extend(2, g.root), cert_extend(2, h.root)));
    // Same composition against K2 is the identity on brackets; it normalizes
    // the outer shape so every connectify result ends in the same step.
    CertNodePtr tree = cert_extend(
        1, cert_paste(cert_extend(2, joined), cert_extend(2, cert_base(BaseGraph::K2))));
    return Certificate{std::move(tree), g.k + h.k, g.q * h.q};
}

Certificate synth(int k, const BigInt& q) {
    if (k < 1) throw std::invalid_argument("synth needs k >= 1");
    if (big_abs(q) > pow2(k))
        throw BoundError("no graph with decycling number " + std::to_string(k) +
                         " has value " + q.str() + ": |I(G;-1)| <= 2^phi(G) = " +
                         pow2(k).str());
    if (k == 1 && q != 0) {
        // Direct from the hexagon extension table: values 2, 1, -1, -2 at
        // extension lengths 0, 1, 2, 3.
        int ell = q == 2 ? 0 : q == 1 ? 1 : q == -1 ? 2 : 3;
        CertNodePtr tree =
            ell == 0 ? cert_base(BaseGraph::C6) : cert_extend(ell, cert_base(BaseGraph::C6));
        return Certificate{std::move(tree), 1, q};
    }
    if (q == 0)
        // Multiply any nonzero-value core by K1 (value 0). claim_graph(k, 1)
        // is the smallest core that exists for every k.
        return connectify(claim_graph(k, 1).certificate,
                          Certificate{cert_base(BaseGraph::K1), 0, 0});
    if (q < 0)
        return connectify(synth(k, -q), Certificate{cert_base(BaseGraph::K2), 0, -1});
    if (q % 2 == 0)
        return connectify(synth(k - 1, q / 2), Certificate{cert_base(BaseGraph::C6), 1, 2});
    return claim_graph(k, q).certificate;
}

}  // namespace indpoly
