#include "hforms/forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hforms {

void validate_diagonal(const FieldDescriptor& F, const DiagonalForm& phi) {
    if (phi.d == 0) throw std::invalid_argument("degree must be positive");
    if (phi.coeffs.empty())
        throw std::invalid_argument("diagonal form needs at least one coefficient");
    for (Elem a : phi.coeffs) {
        if (a == 0)
            throw std::invalid_argument("diagonal form has a zero coefficient");
        if (a >= F.q)
            throw std::invalid_argument("coefficient " + std::to_string(a) +
                                        " is not an element of F_" +
                                        std::to_string(F.q));
    }
}

PolyForm make_poly_form(std::uint32_t d, std::uint32_t n,
                        std::map<std::vector<std::uint32_t>, Elem> terms) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    if (n == 0) throw std::invalid_argument("form needs at least one variable");
    PolyForm out;
    out.d = d;
    out.n = n;
    for (auto& [e, c] : terms) {
        if (e.size() != n)
            throw std::invalid_argument("exponent vector length != variable count");
        std::uint64_t total = std::accumulate(e.begin(), e.end(), std::uint64_t(0));
        if (total != d)
            throw std::invalid_argument("term is not homogeneous of the stated degree");
        if (c != 0) out.terms.emplace(e, c);
    }
    return out;
}

PolyForm poly_from_diagonal(const FieldDescriptor& F, const DiagonalForm& phi) {
    validate_diagonal(F, phi);
    PolyForm out;
    out.d = phi.d;
    out.n = phi.dim();
    for (std::uint32_t i = 0; i < phi.dim(); ++i) {
        std::vector<std::uint32_t> e(out.n, 0);
        e[i] = phi.d;
        out.terms.emplace(std::move(e), phi.coeffs[i]);
    }
    return out;
}

Elem evaluate(const FieldDescriptor& F, const DiagonalForm& phi,
              std::span<const Elem> x) {
    if (x.size() != phi.dim())
        throw std::invalid_argument("vector length != form dimension");
    Elem acc = 0;
    for (std::uint32_t i = 0; i < phi.dim(); ++i)
        acc = F.add(acc, F.mul(phi.coeffs[i], F.pow(x[i], phi.d)));
    return acc;
}

Elem evaluate(const FieldDescriptor& F, const PolyForm& phi,
              std::span<const Elem> x) {
    if (x.size() != phi.n)
        throw std::invalid_argument("vector length != form dimension");
    Elem acc = 0;
    for (const auto& [e, c] : phi.terms) {
        Elem t = c;
        for (std::uint32_t i = 0; i < phi.n && t != 0; ++i)
            if (e[i]) t = F.mul(t, F.pow(x[i], e[i]));
        acc = F.add(acc, t);
    }
    return acc;
}

DiagonalForm orthogonal_sum(const DiagonalForm& a, const DiagonalForm& b) {
    if (a.d != b.d)
        throw std::invalid_argument("orthogonal sum needs equal degrees");
    DiagonalForm out = a;
    out.coeffs.insert(out.coeffs.end(), b.coeffs.begin(), b.coeffs.end());
    return out;
}

PolyForm orthogonal_sum(const PolyForm& a, const PolyForm& b) {
    if (a.d != b.d)
        throw std::invalid_argument("orthogonal sum needs equal degrees");
    PolyForm out;
    out.d = a.d;
    out.n = a.n + b.n;
    for (const auto& [e, c] : a.terms) {
        std::vector<std::uint32_t> e2 = e;
        e2.resize(out.n, 0);
        out.terms.emplace(std::move(e2), c);
    }
    for (const auto& [e, c] : b.terms) {
        std::vector<std::uint32_t> e2(out.n, 0);
        std::copy(e.begin(), e.end(), e2.begin() + a.n);
        out.terms.emplace(std::move(e2), c);
    }
    return out;
}

DiagonalForm tensor_product(const FieldDescriptor& F, const DiagonalForm& a,
                            const DiagonalForm& b) {
    if (a.d != b.d)
        throw std::invalid_argument("tensor product needs equal degrees");
    validate_diagonal(F, a);
    validate_diagonal(F, b);
    DiagonalForm out;
    out.d = a.d;
    out.coeffs.reserve(std::size_t(a.dim()) * b.dim());
    for (Elem ai : a.coeffs)
        for (Elem bj : b.coeffs) out.coeffs.push_back(F.mul(ai, bj));
    return out;
}

PolyForm tensor_product(const FieldDescriptor& F, const DiagonalForm& a,
                        const PolyForm& phi) {
    if (a.d != phi.d)
        throw std::invalid_argument("tensor product needs equal degrees");
    validate_diagonal(F, a);
    PolyForm out;
    out.d = phi.d;
    out.n = a.dim() * phi.n;
    for (std::uint32_t i = 0; i < a.dim(); ++i) {
        for (const auto& [e, c] : phi.terms) {
            std::vector<std::uint32_t> e2(out.n, 0);
            std::copy(e.begin(), e.end(), e2.begin() + std::size_t(i) * phi.n);
            out.terms.emplace(std::move(e2), F.mul(a.coeffs[i], c));
        }
    }
    return out;
}

namespace {

// visit all non-decreasing index tuples of length d over 0..n-1
template <class Fn>
void for_each_multiset(std::uint32_t n, std::uint32_t d, Fn&& fn) {
    std::vector<std::uint32_t> t(d, 0);
    while (true) {
        fn(const_cast<const std::vector<std::uint32_t>&>(t));
        std::uint32_t i = d;
        while (i > 0 && t[i - 1] == n - 1) --i;
        if (i == 0) return;
        std::uint32_t v = t[i - 1] + 1;
        for (std::uint32_t j = i - 1; j < d; ++j) t[j] = v;
    }
}

std::uint64_t multisets_count(std::uint32_t n, std::uint32_t d) {
    // C(n+d-1, d), saturating at 2^63
    std::uint64_t r = 1;
    for (std::uint32_t i = 1; i <= d; ++i) {
        if (r > (std::uint64_t(1) << 62) / (n + d - 1)) return std::uint64_t(1) << 63;
        r = r * (n - 1 + i) / i;
    }
    return r;
}

}  // namespace

SymmetricTensor polarize(const FieldDescriptor& F, const PolyForm& phi,
                         std::uint64_t budget) {
    if (F.p <= phi.d)
        throw std::invalid_argument(
            "polarization needs characteristic > degree (got p = " +
            std::to_string(F.p) + ", d = " + std::to_string(phi.d) + ")");
    if (phi.d >= 25)
        throw budget_error("polarization subset sums infeasible past degree 24");
    // cost ~ multisets * 2^d subset evaluations
    if (multisets_count(phi.n, phi.d) > (budget >> phi.d))
        throw budget_error("polarization table would exceed the evaluation budget");

    const std::uint32_t d = phi.d;
    // 1/d! in F
    Elem dfact = 1;
    for (std::uint32_t i = 2; i <= d; ++i) dfact = F.mul(dfact, F.from_int(i));
    const Elem dfact_inv = F.inv(dfact);

    SymmetricTensor theta;
    theta.d = d;
    theta.n = phi.n;
    std::vector<Elem> point(phi.n);
    for_each_multiset(phi.n, d, [&](const std::vector<std::uint32_t>& tuple) {
        // inclusion-exclusion over nonempty subsets of the d slots
        Elem acc = 0;
        for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
            std::fill(point.begin(), point.end(), 0);
            for (std::uint32_t j = 0; j < d; ++j)
                if (mask & (1u << j)) {
                    Elem& slot = point[tuple[j]];
                    slot = F.add(slot, 1);
                }
            Elem v = evaluate(F, phi, point);
            std::uint32_t l = std::uint32_t(__builtin_popcount(mask));
            if ((d - l) & 1) v = F.neg(v);
            acc = F.add(acc, v);
        }
        acc = F.mul(acc, dfact_inv);
        if (acc != 0) theta.entries.emplace(tuple, acc);
    });
    return theta;
}

Elem tensor_eval(const FieldDescriptor& F, const SymmetricTensor& theta,
                 const std::vector<std::vector<Elem>>& args) {
    if (args.size() != theta.d)
        throw std::invalid_argument("tensor evaluation needs d argument vectors");
    for (const auto& v : args)
        if (v.size() != theta.n)
            throw std::invalid_argument("argument vector length != tensor dimension");

    Elem acc = 0;
    std::vector<std::uint32_t> idx(theta.d, 0);
    std::vector<std::uint32_t> key(theta.d);
    while (true) {
        Elem prod = 1;
        for (std::uint32_t j = 0; j < theta.d && prod != 0; ++j)
            prod = F.mul(prod, args[j][idx[j]]);
        if (prod != 0) {
            key.assign(idx.begin(), idx.end());
            std::sort(key.begin(), key.end());
            auto it = theta.entries.find(key);
            if (it != theta.entries.end())
                acc = F.add(acc, F.mul(prod, it->second));
        }
        std::uint32_t j = 0;
        while (j < theta.d && ++idx[j] == theta.n) idx[j++] = 0;
        if (j == theta.d) break;
    }
    return acc;
}

PolyForm tensor_to_poly(const FieldDescriptor& F, const SymmetricTensor& theta) {
    if (theta.d > 20)
        throw budget_error("multinomial weights overflow past degree 20");
    PolyForm out;
    out.d = theta.d;
    out.n = theta.n;
    for (const auto& [tuple, v] : theta.entries) {
        std::vector<std::uint32_t> e(theta.n, 0);
        for (auto i : tuple) ++e[i];
        // d! / prod e_i!
        std::uint64_t w = 1;
        for (std::uint32_t i = 2; i <= theta.d; ++i) w *= i;
        for (auto ei : e)
            for (std::uint32_t i = 2; i <= ei; ++i) w /= i;
        Elem c = F.mul(v, F.from_int(std::int64_t(w % F.p)));
        if (c != 0) out.terms.emplace(std::move(e), c);
    }
    return out;
}

bool is_nondegenerate(const FieldDescriptor& F, const SymmetricTensor& theta,
                      std::uint64_t budget) {
    const std::uint32_t n = theta.n;
    if (n == 0) throw std::invalid_argument("tensor has no variables");
    if (multisets_count(n, theta.d - 1) > budget)
        throw budget_error("flattening exceeds the evaluation budget");

    // Columns of the n x n^(d-1) flattening, deduplicated by symmetry to
    // multisets (j_2 <= ... <= j_d).  Incremental Gaussian elimination; stop
    // as soon as the rank hits n.
    std::vector<std::vector<Elem>> basis;      // echelon rows
    std::vector<std::uint32_t> pivot_of;       // pivot column of each basis row
    std::vector<std::uint32_t> key(theta.d);
    bool full_rank = false;
    for_each_multiset(n, theta.d - 1, [&](const std::vector<std::uint32_t>& rest) {
        if (full_rank) return;
        std::vector<Elem> col(n, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            key[0] = i;
            std::copy(rest.begin(), rest.end(), key.begin() + 1);
            std::sort(key.begin(), key.end());
            auto it = theta.entries.find(key);
            if (it != theta.entries.end()) col[i] = it->second;
        }
        // reduce col against the basis
        for (std::size_t r = 0; r < basis.size(); ++r) {
            Elem c = col[pivot_of[r]];
            if (c == 0) continue;
            for (std::uint32_t i = 0; i < n; ++i)
                col[i] = F.sub(col[i], F.mul(c, basis[r][i]));
        }
        std::uint32_t piv = n;
        for (std::uint32_t i = 0; i < n; ++i)
            if (col[i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) return;  // dependent column
        Elem s = F.inv(col[piv]);
        for (std::uint32_t i = 0; i < n; ++i) col[i] = F.mul(col[i], s);
        basis.push_back(std::move(col));
        pivot_of.push_back(piv);
        if (basis.size() == n) full_rank = true;
    });
    return full_rank;
}

bool diagonal_isomorphic(const FieldDescriptor& F, const DiagonalForm& a,
                         const DiagonalForm& b) {
    if (a.d != b.d)
        throw std::invalid_argument("isomorphism test needs equal degrees");
    if (a.d < 3)
        throw std::invalid_argument(
            "diagonal isomorphism by class multisets is defined for degree >= 3");
    validate_diagonal(F, a);
    validate_diagonal(F, b);
    if (a.dim() != b.dim()) return false;
    auto T = power_classes(F, a.d);
    std::vector<std::uint32_t> ca, cb;
    for (Elem x : a.coeffs) ca.push_back(T.class_index(x));
    for (Elem x : b.coeffs) cb.push_back(T.class_index(x));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    return ca == cb;
}

}  // namespace hforms
