#include "hforms/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace hforms {

namespace {

// first-reach depths over the closure of sums of d-th powers:
// depth[x] = least s with x a sum of s d-th powers (0 = unreachable)
std::vector<std::uint32_t> reach_depths(const FieldDescriptor& F,
                                        std::uint32_t d, std::uint64_t budget,
                                        std::uint64_t& cost) {
    ElemSet P = dth_powers(F, d);
    std::vector<std::uint32_t> depth(F.q, 0);
    ElemSet reached = P;
    P.for_each([&](Elem x) { depth[x] = 1; });
    std::uint32_t s = 1;
    while (true) {
        cost += std::uint64_t(reached.count()) * P.count();
        if (cost > budget)
            throw budget_error("power-sum closure exceeded the evaluation budget");
        ElemSet next = reached;
        reached.for_each([&](Elem a) {
            P.for_each([&](Elem b) { next.set(F.add(a, b)); });
        });
        if (next == reached) break;
        ++s;
        next.for_each([&](Elem x) {
            if (depth[x] == 0) depth[x] = s;
        });
        reached = next;
    }
    return depth;
}

// Greedy lexicographically-least back-trace against the depth array.
// remaining must satisfy depth[remaining] <= s at entry.
std::vector<Elem> backtrace_sum(const FieldDescriptor& F, std::uint32_t d,
                                const std::vector<std::uint32_t>& depth,
                                Elem target, std::uint32_t s) {
    auto reachable_in = [&](Elem x, std::uint32_t k) {
        return k == 0 ? x == 0 : depth[x] != 0 && depth[x] <= k;
    };
    std::vector<Elem> out(s);
    Elem remaining = target;
    for (std::uint32_t i = 0; i < s; ++i) {
        bool placed = false;
        for (Elem x = 0; x < F.q && !placed; ++x) {
            Elem rest = F.sub(remaining, F.pow(x, d));
            if (reachable_in(rest, s - i - 1)) {
                out[i] = x;
                remaining = rest;
                placed = true;
            }
        }
        if (!placed) throw std::logic_error("decomposition back-trace failed");
    }
    return out;
}

}  // namespace

std::optional<std::vector<Elem>> sum_of_powers_decomposition(
    const FieldDescriptor& F, std::uint32_t d, Elem a, std::uint32_t s) {
    if (s == 0) throw std::invalid_argument("need at least one summand");
    if (a >= F.q) throw std::invalid_argument("target is not an element of F_q");
    std::uint64_t cost = 0;
    auto depth = reach_depths(F, d, default_eval_budget, cost);
    if (depth[a] == 0 || depth[a] > s) return std::nullopt;
    return backtrace_sum(F, d, depth, a, s);
}

InvariantReport level(const FieldDescriptor& F, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    InvariantReport r;
    r.p = F.p;
    r.f = F.f;
    r.d = d;
    if (F.p == 2 || d % 2 == 1) {
        r.bound_name = "single power (char 2 or odd degree)";
        r.bound = ExtendedNat::of(1);
    } else {
        r.bound_name = "sum of p-1 ones";
        r.bound = ExtendedNat::of(F.p - 1);
    }

    std::uint64_t cost = 0;
    auto depth = reach_depths(F, d, default_eval_budget, cost);
    Elem minus_one = F.neg(1);
    if (depth[minus_one] == 0)
        throw std::logic_error("-1 escaped the closure of d-th power sums");
    r.value = ExtendedNat::of(depth[minus_one]);
    r.witness_sum = backtrace_sum(F, d, depth, minus_one, depth[minus_one]);
    return r;
}

InvariantReport waring_number(const FieldDescriptor& F, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    InvariantReport r;
    r.p = F.p;
    r.f = F.f;
    r.d = d;
    r.bound_name = "Tornheim degree bound";
    r.bound = ExtendedNat::of(d);

    std::uint64_t cost = 0;
    auto depth = reach_depths(F, d, default_eval_budget, cost);
    std::uint32_t max_depth = 0;
    Elem deepest = 0;
    for (Elem x = 0; x < F.q; ++x)
        if (depth[x] > max_depth) {
            max_depth = depth[x];
            deepest = x;  // least element attaining the maximum
        }
    r.value = ExtendedNat::of(max_depth);
    r.deepest = deepest;
    r.witness_sum = backtrace_sum(F, d, depth, deepest, max_depth);
    return r;
}

namespace {

struct UdiagSearch {
    const FieldDescriptor& F;
    const PowerClassTable& T;
    std::vector<const ElemSet*> neg_coset;  // -coset[c], by class
    std::uint64_t budget;
    std::uint64_t cost = 0;

    std::uint32_t best = 0;
    std::vector<std::uint32_t> best_classes;

    UdiagSearch(const FieldDescriptor& field, const PowerClassTable& table,
                std::uint64_t b)
        : F(field), T(table), budget(b) {
        neg_coset.reserve(T.d_star);
        for (std::uint32_t c = 0; c < T.d_star; ++c)
            neg_coset.push_back(&T.cosets[T.class_index(F.neg(T.reps[c]))]);
    }

    void charge(std::uint64_t units) {
        cost += units;
        if (cost > budget)
            throw budget_error("u_diag search exceeded its evaluation budget");
    }

    // S: values of the current anisotropic form on all vectors (0 included);
    // prefix: its class sequence.  Tries every extension class >= min_class.
    void extend(const ElemSet& S, std::vector<std::uint32_t>& prefix,
                std::uint32_t min_class) {
        // the recursion path keeps one value set per level
        if ((std::uint64_t(prefix.size()) + 2) * (F.q / 8 + 1) >
            (std::uint64_t(1) << 28))
            throw budget_error("u_diag search state exceeds the memory cap");
        for (std::uint32_t c = min_class; c < T.d_star && best < T.d_star;
             ++c) {
            charge(F.q / 64 + 1);
            if (S.intersects(*neg_coset[c])) continue;  // extension isotropic
            const ElemSet& coset = T.cosets[c];
            charge(std::uint64_t(S.count()) * coset.count() + F.q / 64 + 1);
            ElemSet S2 = S;
            S.for_each([&](Elem v) {
                coset.for_each([&](Elem w) { S2.set(F.add(v, w)); });
            });
            prefix.push_back(c);
            if (prefix.size() > best) {
                best = std::uint32_t(prefix.size());
                best_classes = prefix;
            }
            extend(S2, prefix, c);
            prefix.pop_back();
        }
    }
};

}  // namespace

InvariantReport u_diag(const FieldDescriptor& F, std::uint32_t d,
                       std::uint64_t budget) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    auto T = power_classes(F, d);

    InvariantReport r;
    r.p = F.p;
    r.f = F.f;
    r.d = d;
    r.bound_name = "class count gcd(d, q-1)";
    r.bound = ExtendedNat::of(T.d_star);

    UdiagSearch search(F, T, budget);
    ElemSet S0(F.q);
    S0.set(0);
    std::vector<std::uint32_t> prefix;
    search.extend(S0, prefix, 0);

    r.value = ExtendedNat::of(search.best);
    DiagonalForm w;
    w.d = d;
    for (auto c : search.best_classes) w.coeffs.push_back(T.reps[c]);
    r.witness_form = std::move(w);
    return r;
}

std::optional<DiagonalForm> check_orzech_dim3(const FieldDescriptor& F,
                                              std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    auto T = power_classes(F, d);
    for (std::uint32_t c1 = 0; c1 < T.d_star; ++c1) {
        ElemSet S1(F.q);
        S1.set(0);
        S1 |= T.cosets[c1];
        for (std::uint32_t c2 = c1; c2 < T.d_star; ++c2) {
            if (S1.intersects(T.cosets[T.class_index(F.neg(T.reps[c2]))]))
                continue;
            ElemSet S2 = S1;
            S1.for_each([&](Elem v) {
                T.cosets[c2].for_each([&](Elem w) { S2.set(F.add(v, w)); });
            });
            for (std::uint32_t c3 = c2; c3 < T.d_star; ++c3) {
                if (S2.intersects(T.cosets[T.class_index(F.neg(T.reps[c3]))]))
                    continue;
                return DiagonalForm{d, {T.reps[c1], T.reps[c2], T.reps[c3]}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace hforms
