#include "hforms/construct.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hforms {

namespace {

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in a lifted form");
    return r;
}

using TermMap = std::map<std::vector<std::uint32_t>, Elem>;

void drop_zeros(TermMap& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
}

TermMap poly_mul(const FieldDescriptor& F, const TermMap& a, const TermMap& b,
                 std::uint64_t term_budget, std::uint64_t& ops) {
    ops += std::uint64_t(a.size()) * b.size();
    if (ops > term_budget)
        throw budget_error("term budget exhausted while expanding a product");
    TermMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<std::uint32_t> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            Elem& slot = out[std::move(e)];
            slot = F.add(slot, F.mul(ca, cb));
        }
    drop_zeros(out);
    return out;
}

TermMap one_term(std::uint32_t n, Elem c) {
    TermMap m;
    m.emplace(std::vector<std::uint32_t>(n, 0), c);
    return m;
}

}  // namespace

ValuedDiagonalForm tensor_lift(const FieldDescriptor& F,
                               const DiagonalForm& phi) {
    validate_diagonal(F, phi);
    ValuedDiagonalForm out;
    out.d = phi.d;
    out.coeffs.reserve(std::size_t(phi.d) * phi.dim());
    for (std::uint32_t j = 0; j < phi.d; ++j)
        for (Elem a : phi.coeffs)
            out.coeffs.push_back({a, {std::int64_t(j)}});
    return out;
}

PrimeLiftForm prime_lift(const FieldDescriptor& Fp, const PolyForm& phi,
                         std::uint64_t budget) {
    if (Fp.f != 1)
        throw std::invalid_argument("a rational lift needs a prime field base");
    if (phi.n != phi.d)
        throw std::invalid_argument(
            "the lift base must have dimension equal to its degree");
    IsotropyVerdict v = is_isotropic_poly(Fp, phi, budget);
    if (!v.decided())
        throw budget_error("isotropy check of the lift base ran out of budget");
    if (v.status == IsotropyVerdict::Status::isotropic)
        throw std::invalid_argument("the lift base is isotropic modulo p");

    const std::uint32_t d = phi.d;
    PrimeLiftForm out;
    out.p = Fp.p;
    out.d = d;
    out.residue = phi;
    out.rational.d = d;
    out.rational.n = d * d;
    std::int64_t pj = 1;
    for (std::uint32_t j = 0; j < d; ++j) {
        for (const auto& [e, c] : phi.terms) {
            std::vector<std::uint32_t> ee(std::size_t(d) * d, 0);
            for (std::uint32_t i = 0; i < d; ++i) ee[std::size_t(j) * d + i] = e[i];
            out.rational.terms.emplace(std::move(ee),
                                       Rat(checked_mul_i64(std::int64_t(c), pj)));
        }
        if (j + 1 < d) pj = checked_mul_i64(pj, std::int64_t(Fp.p));
    }
    return out;
}

PrimeLiftForm prime_lift(const FieldDescriptor& Fp, const DiagonalForm& phi,
                         std::uint64_t budget) {
    validate_diagonal(Fp, phi);
    PrimeLiftForm out = prime_lift(Fp, poly_from_diagonal(Fp, phi), budget);
    out.valued = tensor_lift(Fp, phi);
    return out;
}

PolyForm norm_form(const FieldDescriptor& F, std::uint32_t d,
                   std::uint64_t table_budget) {
    if (d == 0) throw std::invalid_argument("norm form needs degree >= 1");
    const std::uint64_t fd = std::uint64_t(F.f) * d;
    if (fd > 63)
        throw budget_error("norm extension exceeds the field table budget");
    FieldDescriptor E = make_field(F.p, std::uint32_t(fd), table_budget);

    // Embed F into E through the least root of F's defining polynomial.
    std::vector<Elem> theta_pow(F.f, 1);
    if (F.f > 1) {
        Elem theta = 0;
        bool found = false;
        for (Elem x = 0; x < E.q && !found; ++x) {
            Elem val = E.pow(x, F.f);
            Elem xp = 1;
            for (std::uint32_t i = 0; i < F.f; ++i) {
                val = E.add(val, E.mul(F.modulus[i], xp));
                xp = E.mul(xp, x);
            }
            if (val == 0) {
                theta = x;
                found = true;
            }
        }
        if (!found)
            throw std::logic_error("defining polynomial has no root upstairs");
        for (std::uint32_t i = 1; i < F.f; ++i)
            theta_pow[i] = E.mul(theta_pow[i - 1], theta);
    }
    std::vector<Elem> embed(F.q, 0);
    std::unordered_map<Elem, Elem> back;
    back.reserve(F.q);
    for (Elem x = 0; x < F.q; ++x) {
        Elem img = 0;
        Elem rest = x;
        for (std::uint32_t i = 0; i < F.f; ++i) {
            Elem digit = rest % F.p;
            rest /= F.p;
            if (digit) img = E.add(img, E.mul(digit, theta_pow[i]));
        }
        embed[x] = img;
        back.emplace(img, x);
    }

    // The generic element in the basis 1, g, ..., g^{d-1} has norm equal to
    // the product of its images under x -> x^(q^j); each factor is linear
    // with coefficients g^(i q^j).
    TermMap cur = one_term(d, 1);
    std::uint64_t qj = 1 % (E.q - 1);
    for (std::uint32_t j = 0; j < d; ++j) {
        TermMap next;
        for (const auto& [e, c] : cur)
            for (std::uint32_t i = 0; i < d; ++i) {
                Elem ci = E.pow(E.gen, (i * qj) % (E.q - 1));
                std::vector<std::uint32_t> e2 = e;
                ++e2[i];
                Elem& slot = next[std::move(e2)];
                slot = E.add(slot, E.mul(c, ci));
            }
        drop_zeros(next);
        cur = std::move(next);
        qj = (qj * F.q) % (E.q - 1);
    }

    std::map<std::vector<std::uint32_t>, Elem> terms;
    for (const auto& [e, c] : cur) {
        auto it = back.find(c);
        if (it == back.end())
            throw std::logic_error("norm coefficient escaped the base field");
        if (it->second) terms.emplace(e, it->second);
    }
    return make_poly_form(d, d, terms);
}

PolyForm compose_forms(const FieldDescriptor& F, const PolyForm& f,
                       std::uint64_t term_budget) {
    const std::uint32_t d = f.d;
    const std::uint32_t u = f.n;
    if (std::uint64_t(d) * d > UINT32_MAX || std::uint64_t(u) * u > UINT32_MAX)
        throw budget_error("composed form would overflow its degree or arity");

    std::uint32_t max_exp = 0;
    for (const auto& [e, c] : f.terms)
        for (std::uint32_t ei : e) max_exp = std::max(max_exp, ei);

    std::uint64_t ops = 0;
    // pow_cache[m] = the terms of f^m, in u variables
    std::vector<TermMap> pow_cache;
    pow_cache.push_back(one_term(u, 1));
    if (max_exp >= 1) pow_cache.push_back(TermMap(f.terms));
    for (std::uint32_t m = 2; m <= max_exp; ++m)
        pow_cache.push_back(
            poly_mul(F, pow_cache.back(), pow_cache[1], term_budget, ops));

    TermMap total;
    for (const auto& [e, c] : f.terms) {
        TermMap cur = one_term(u * u, c);
        for (std::uint32_t i = 0; i < u; ++i) {
            if (e[i] == 0) continue;
            TermMap shifted;
            for (const auto& [be, bc] : pow_cache[e[i]]) {
                std::vector<std::uint32_t> se(std::size_t(u) * u, 0);
                for (std::uint32_t k = 0; k < u; ++k) se[std::size_t(i) * u + k] = be[k];
                shifted.emplace(std::move(se), bc);
            }
            cur = poly_mul(F, cur, shifted, term_budget, ops);
        }
        for (const auto& [ee, cc] : cur) {
            Elem& slot = total[ee];
            slot = F.add(slot, cc);
        }
    }
    drop_zeros(total);
    return make_poly_form(d * d, u * u, total);
}

PolyForm power_form(const FieldDescriptor& F, const PolyForm& f,
                    std::uint32_t m, std::uint64_t term_budget) {
    if (m == 0)
        throw std::invalid_argument("the zeroth power of a form is not a form");
    if (std::uint64_t(f.d) * m > UINT32_MAX)
        throw budget_error("powered form would overflow its degree");
    std::uint64_t ops = 0;
    TermMap acc(f.terms);
    for (std::uint32_t k = 2; k <= m; ++k)
        acc = poly_mul(F, acc, f.terms, term_budget, ops);
    return make_poly_form(f.d * m, f.n, acc);
}

ValuedDiagonalForm laurent_spread(const DiagonalForm& w, std::uint32_t n,
                                  std::uint64_t budget) {
    if (w.d == 0) throw std::invalid_argument("spread base has degree zero");
    if (n == 0) throw std::invalid_argument("spread needs at least one layer");
    if (w.coeffs.empty())
        throw std::invalid_argument("spread base has no coefficients");
    for (Elem a : w.coeffs)
        if (a == 0)
            throw std::invalid_argument("spread base has a zero coefficient");
    std::uint64_t blocks = 1;
    for (std::uint32_t k = 0; k < n; ++k) {
        if (blocks > budget / w.d)
            throw budget_error("spread dimension exceeds the budget");
        blocks *= w.d;
    }
    if (blocks > budget / w.dim())
        throw budget_error("spread dimension exceeds the budget");

    ValuedDiagonalForm out;
    out.d = w.d;
    out.coeffs.reserve(blocks * w.dim());
    for (std::uint64_t idx = 0; idx < blocks; ++idx) {
        std::vector<std::int64_t> vals(n, 0);
        std::uint64_t rest = idx;
        for (std::uint32_t k = n; k-- > 0;) {
            vals[k] = std::int64_t(rest % w.d);
            rest /= w.d;
        }
        for (Elem a : w.coeffs) out.coeffs.push_back({a, vals});
    }
    return out;
}

ValuedDiagonalForm iterated_laurent_form(std::uint32_t d, std::uint32_t n,
                                         std::uint64_t budget) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    DiagonalForm one{d, {1}};
    return laurent_spread(one, n, budget);
}

}  // namespace hforms
