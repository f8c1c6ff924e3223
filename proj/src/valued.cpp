#include "hforms/valued.hpp"

#include <algorithm>
#include <stdexcept>

namespace hforms {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("bound arithmetic exceeds 64 bits");
    return r;
}

std::uint64_t checked_pow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r = checked_mul(r, b);
    return r;
}

std::uint32_t ord_p(std::uint32_t p, std::uint32_t d) {
    std::uint32_t k = 0;
    while (d % p == 0) {
        d /= p;
        ++k;
    }
    return k;
}

void require_tame(const ValuedField& K, std::uint32_t d) {
    std::uint32_t rc = residue_char(K);
    if (rc != 0 && d % rc == 0)
        throw wild_case_error(
            "residue characteristic divides the degree: out of scope");
}

// residue field size without building tables
std::uint64_t residue_q(std::uint32_t p, std::uint32_t f) {
    return checked_pow(p, f);
}

}  // namespace

std::uint32_t residue_char(const ValuedField& K) {
    if (const auto* P = std::get_if<PadicField>(&K)) return P->p;
    if (const auto* L = std::get_if<LaurentTower>(&K))
        return L->base ? L->base->first : 0;
    return 0;
}

std::uint32_t value_layers(const ValuedField& K) {
    if (std::holds_alternative<PadicField>(K)) return 1;
    if (const auto* L = std::get_if<LaurentTower>(&K)) return L->layers;
    return std::get<FormalHenselian>(K).gamma_rank;
}

std::optional<FieldDescriptor> residue_field(const ValuedField& K) {
    if (const auto* P = std::get_if<PadicField>(&K)) return make_field(P->p, P->f);
    if (const auto* L = std::get_if<LaurentTower>(&K))
        if (L->base) return make_field(L->base->first, L->base->second);
    return std::nullopt;
}

ExtendedNat gamma_index(const ValuedField& K, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    return ExtendedNat::of(checked_pow(d, value_layers(K)));
}

void validate_valued(const ValuedField& K, const ValuedDiagonalForm& phi) {
    if (phi.d == 0) throw std::invalid_argument("degree must be positive");
    if (phi.coeffs.empty())
        throw std::invalid_argument("form needs at least one coefficient");
    if (const auto* P = std::get_if<PadicField>(&K)) {
        if (P->p < 2 || !is_prime_u64(P->p) || P->f == 0 || P->e == 0)
            throw std::invalid_argument("p-adic descriptor needs prime p, f >= 1, e >= 1");
    }
    if (const auto* L = std::get_if<LaurentTower>(&K)) {
        if (L->layers == 0)
            throw std::invalid_argument("a Laurent tower needs at least one layer");
        if (L->base && (L->base->first < 2 || !is_prime_u64(L->base->first) ||
                        L->base->second == 0))
            throw std::invalid_argument("tower residue field needs prime p and f >= 1");
    }
    const std::uint32_t layers = value_layers(K);
    std::uint64_t q = 0;  // 0: residue field abstract, only unit != 0 checked
    if (const auto* P = std::get_if<PadicField>(&K))
        q = residue_q(P->p, P->f);
    else if (const auto* L = std::get_if<LaurentTower>(&K))
        if (L->base) q = residue_q(L->base->first, L->base->second);
    for (const auto& c : phi.coeffs) {
        if (c.unit == 0 || (q != 0 && c.unit >= q))
            throw std::invalid_argument(
                "coefficient unit is not a nonzero residue-field element");
        if (c.vals.size() != layers)
            throw std::invalid_argument(
                "coefficient valuation needs one entry per value-group layer");
    }
}

std::map<std::vector<std::int64_t>, DiagonalForm> residue_decomposition(
    const ValuedField& K, const ValuedDiagonalForm& phi) {
    validate_valued(K, phi);
    require_tame(K, phi.d);
    if (std::holds_alternative<FormalHenselian>(K))
        throw std::invalid_argument("formal descriptors carry no forms");
    std::map<std::vector<std::int64_t>, DiagonalForm> groups;
    for (const auto& c : phi.coeffs) {
        std::vector<std::int64_t> gamma(c.vals.size());
        for (std::size_t j = 0; j < c.vals.size(); ++j)
            gamma[j] = floormod(c.vals[j], phi.d);
        auto& g = groups[gamma];
        g.d = phi.d;
        g.coeffs.push_back(c.unit);
    }
    return groups;
}

ValuedIsotropyVerdict is_isotropic_valued_diagonal(const ValuedField& K,
                                                   const ValuedDiagonalForm& phi) {
    auto groups = residue_decomposition(K, phi);  // validates + tame check

    // positions of phi's coefficients within each valuation class
    std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> positions;
    for (std::uint32_t i = 0; i < phi.dim(); ++i) {
        std::vector<std::int64_t> gamma(phi.coeffs[i].vals.size());
        for (std::size_t j = 0; j < gamma.size(); ++j)
            gamma[j] = floormod(phi.coeffs[i].vals[j], phi.d);
        positions[gamma].push_back(i);
    }

    ValuedIsotropyVerdict v;
    auto F = residue_field(K);
    for (const auto& [gamma, form] : groups) {
        if (!F) {
            // algebraically closed residue field: any two coefficients in the
            // same class cancel after extracting a d-th root
            if (form.dim() < 2) continue;
            v.isotropic = true;
            v.witness_gamma = gamma;
            v.witness_positions = positions[gamma];
            return v;
        }
        auto verdict = is_isotropic_diagonal(*F, form);
        v.search_cost += verdict.search_cost;
        if (verdict.isotropic()) {
            v.isotropic = true;
            v.witness_gamma = gamma;
            v.witness_positions = positions[gamma];
            v.residue_witness = verdict.witness;
            return v;
        }
    }
    return v;
}

InvariantReport u_diag_springer(const ValuedField& K, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    ExtendedNat index = gamma_index(K, d);

    InvariantReport r;
    r.d = d;
    if (const auto* Fm = std::get_if<FormalHenselian>(&K)) {
        r.value = index * Fm->residue_u_diag;
        r.bound_name = "declared residue u-invariant times value-group index";
        r.bound = r.value;
        return r;
    }
    require_tame(K, d);
    auto F = residue_field(K);
    if (!F) {
        // algebraically closed residue: u_diag there is 1
        r.value = index;
        r.bound_name = "value-group index (algebraically closed residue)";
        r.bound = index;
        return r;
    }
    auto residue = u_diag(*F, d);
    r.p = F->p;
    r.f = F->f;
    r.value = index * residue.value;
    r.witness_form = residue.witness_form;
    r.bound_name = "value-group index times residue class count";
    r.bound = index * residue.bound;
    return r;
}

std::uint32_t m_d(std::uint32_t p, std::uint32_t d) {
    if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("p must be prime");
    if (d == 0) throw std::invalid_argument("degree must be positive");
    if (d % p == 0)
        throw wild_case_error("m_d needs the degree coprime to p");

    // d-th powers among units mod p
    std::vector<char> is_power(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t r = 1, b = x % p;
        std::uint32_t e = d;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        is_power[std::size_t(r)] = 1;
    }

    for (std::uint32_t m = 1; m <= p; ++m) {
        std::uint32_t k = 0, u = m;
        while (u % p == 0) {
            u /= p;
            ++k;
        }
        // -m = p^k * (-u): a d-th power iff d | k and -u is one mod p
        if (k % d != 0) continue;
        if (is_power[(p - u % p) % p]) return m;
    }
    throw std::logic_error("no m <= p with -m a d-th power");  // unreachable
}

std::vector<NamedBound> bound_calculators(const PadicField& K, std::uint32_t d) {
    if (K.p < 2 || !is_prime_u64(K.p))
        throw std::invalid_argument("p must be prime");
    if (K.f == 0 || K.e == 0)
        throw std::invalid_argument("residue degree and ramification must be >= 1");
    if (d == 0) throw std::invalid_argument("degree must be positive");

    const std::uint64_t q = residue_q(K.p, K.f);
    const std::uint64_t w = gcd_u64(d, q - 1);  // tame d-th roots of unity
    const std::uint32_t k = ord_p(K.p, d);
    const std::uint64_t unit_index =
        checked_mul(checked_mul(d, w), checked_pow(K.p, K.e * k));
    const bool tame = d % K.p != 0;

    std::vector<NamedBound> out;

    {
        NamedBound b;
        b.name = "kneser-unit-index";
        b.value = ExtendedNat::of(unit_index);
        b.applicable = d % 2 == 1;
        if (!b.applicable) b.note = "even degree needs the 1 + m_d correction";
        out.push_back(std::move(b));
    }
    {
        NamedBound b;
        b.name = "even-degree-unit-index";
        if (d % 2 == 0 && tame) {
            b.value = ExtendedNat::of(
                checked_mul(1 + std::uint64_t(m_d(K.p, d)), unit_index));
        } else {
            b.value = ExtendedNat::inf();
            b.applicable = false;
            b.note = d % 2 == 1 ? "even degrees only"
                                : "m_d needs the degree coprime to p";
        }
        out.push_back(std::move(b));
    }
    {
        NamedBound b;
        b.name = "tame-root-count";
        b.value = ExtendedNat::of(checked_mul(checked_mul(d, w),
                                              checked_pow(K.p, k)));
        b.applicable = tame;
        if (!tame) b.note = "root-of-unity count is exact only for tame degrees";
        out.push_back(std::move(b));
    }
    {
        NamedBound b;
        b.name = "joly-degree-square";
        bool two_power = (d & (d - 1)) == 0;
        std::uint64_t dd = checked_mul(d, d);
        b.value = ExtendedNat::of(K.p == 2 && two_power ? checked_mul(2, dd) : dd);
        b.applicable = K.f == 1 && K.e == 1;
        if (!b.applicable) b.note = "stated for Q_p itself";
        out.push_back(std::move(b));
    }
    {
        NamedBound b;
        b.name = "alemu-strict";
        const std::uint64_t n = std::uint64_t(K.e) * K.f;
        const std::uint64_t dd = checked_mul(d, d);
        std::uint64_t v;
        if (K.p == 2) {
            v = checked_mul(checked_mul(4, n), dd) - checked_mul(n, d) + 1;
        } else {
            std::uint64_t a =
                checked_mul(checked_mul(3, n), dd) - checked_mul(n, d) + 1;
            std::uint64_t c = checked_mul(checked_mul(2, d), dd) - dd;
            v = std::max(a, c);
        }
        b.value = ExtendedNat::of(v);
        b.strict = true;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace hforms
