#include "hforms/isotropy.hpp"

#include <stdexcept>

namespace hforms {

namespace {

// out |= A + B elementwise; returns the number of element additions
std::uint64_t accumulate_sumset(const FieldDescriptor& F, const ElemSet& A,
                                const ElemSet& B, ElemSet& out) {
    std::uint64_t cost = 0;
    A.for_each([&](Elem a) {
        B.for_each([&](Elem b) {
            out.set(F.add(a, b));
            ++cost;
        });
    });
    return cost;
}

struct SuffixChain {
    // any[i]: values of a_i x_i^d + ... + a_n x_n^d over all suffix vectors
    // nonzero[i]: same, restricted to suffix vectors that are not all zero
    std::vector<ElemSet> any, nonzero;
    std::uint64_t cost = 0;
};

SuffixChain build_chain(const FieldDescriptor& F, const DiagonalForm& phi,
                        const PowerClassTable& T) {
    const std::uint32_t n = phi.dim();
    SuffixChain ch;
    ch.any.assign(n + 1, ElemSet(F.q));
    ch.nonzero.assign(n + 1, ElemSet(F.q));
    ch.any[n].set(0);
    for (std::uint32_t i = n; i-- > 0;) {
        const ElemSet& coset = T.cosets[T.class_index(phi.coeffs[i])];
        ElemSet hit(F.q);  // values with x_i != 0
        ch.cost += accumulate_sumset(F, coset, ch.any[i + 1], hit);
        ch.any[i] = ch.any[i + 1];
        ch.any[i] |= hit;
        ch.nonzero[i] = ch.nonzero[i + 1];
        ch.nonzero[i] |= hit;
    }
    return ch;
}

}  // namespace

IsotropyVerdict is_isotropic_diagonal(const FieldDescriptor& F,
                                      const DiagonalForm& phi) {
    validate_diagonal(F, phi);
    auto T = power_classes(F, phi.d);
    auto ch = build_chain(F, phi, T);
    const std::uint32_t n = phi.dim();

    IsotropyVerdict v;
    v.search_cost = ch.cost;
    if (!ch.nonzero[0].test(0)) {
        v.status = IsotropyVerdict::Status::anisotropic;
        return v;
    }
    v.status = IsotropyVerdict::Status::isotropic;

    // Greedy left-to-right choice of the least coordinate whose remainder the
    // suffix can still cancel; yields the lexicographically least witness.
    std::vector<Elem> w(n);
    Elem partial = 0;
    bool have_nonzero = false;
    for (std::uint32_t i = 0; i < n; ++i) {
        bool placed = false;
        for (Elem x = 0; x < F.q && !placed; ++x) {
            ++v.search_cost;
            Elem t = F.add(partial, F.mul(phi.coeffs[i], F.pow(x, phi.d)));
            Elem need = F.neg(t);
            const ElemSet& ok = (have_nonzero || x != 0) ? ch.any[i + 1]
                                                         : ch.nonzero[i + 1];
            if (ok.test(need)) {
                w[i] = x;
                partial = t;
                have_nonzero = have_nonzero || x != 0;
                placed = true;
            }
        }
        if (!placed)
            throw std::logic_error("witness back-trace lost the zero value");
    }
    v.witness = std::move(w);
    return v;
}

IsotropyVerdict is_isotropic_poly(const FieldDescriptor& F, const PolyForm& phi,
                                  std::uint64_t budget) {
    if (phi.n == 0) throw std::invalid_argument("form needs at least one variable");
    for (const auto& [e, c] : phi.terms) {
        (void)e;
        if (c == 0 || c >= F.q)
            throw std::invalid_argument("coefficient is not a nonzero element of F_q");
    }

    IsotropyVerdict v;
    const std::uint32_t n = phi.n;
    std::vector<Elem> point(n);
    // Points in lexicographic vector order: all of (0,...,0,1,*...*) for each
    // count of leading zeros, largest count first.  Homogeneity makes the
    // first nonzero coordinate scalable to 1, so this covers every projective
    // point and finds the least witness.
    for (std::uint32_t lead = n; lead-- > 0;) {
        std::fill(point.begin(), point.end(), 0);
        point[lead] = 1;
        while (true) {
            if (v.search_cost >= budget) {
                v.status = IsotropyVerdict::Status::undecided_budget;
                return v;
            }
            ++v.search_cost;
            if (evaluate(F, phi, point) == 0) {
                v.status = IsotropyVerdict::Status::isotropic;
                v.witness = point;
                return v;
            }
            // odometer on positions lead+1..n-1, rightmost fastest
            std::uint32_t j = n;
            while (j > lead + 1 && point[j - 1] == F.q - 1) --j;
            if (j == lead + 1) break;
            ++point[j - 1];
            std::fill(point.begin() + j, point.end(), 0);
        }
    }
    v.status = IsotropyVerdict::Status::anisotropic;
    return v;
}

ElemSet represented_values(const FieldDescriptor& F, const DiagonalForm& phi) {
    validate_diagonal(F, phi);
    auto T = power_classes(F, phi.d);
    auto ch = build_chain(F, phi, T);
    ElemSet out = ch.any[0];
    out.reset(0);  // only a zero vector or an isotropic combination lands on 0
    return out;
}

bool is_universal(const FieldDescriptor& F, const DiagonalForm& phi) {
    return represented_values(F, phi).count() == F.q - 1;
}

}  // namespace hforms
