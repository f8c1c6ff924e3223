#include "hforms/gf.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hforms {

namespace {

// --- dense polynomial helpers over F_p (used only while building a field) ---

using Poly = std::vector<std::uint32_t>;  // coefficients, degree = size-1

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    }
    return trim(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0
    std::uint32_t r = 1, e = p - 2;
    std::uint64_t base = a % p;
    while (e) {
        if (e & 1) r = std::uint32_t(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    // m monic
    while (a.size() >= m.size()) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - m.size();
        if (c) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t sub = std::uint64_t(c) * m[i] % p;
                std::size_t k = i + shift;
                a[k] = std::uint32_t((a[k] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return trim(a);
}

Poly poly_powmod_x(std::uint64_t e, const Poly& m, std::uint32_t p) {
    // x^e mod m
    Poly result{1};
    Poly base{0, 1};
    base = poly_mod(base, m, p);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        // reduce a mod b (make b monic first)
        std::uint32_t lead_inv = mod_inv(b.back(), p);
        Poly bm = b;
        for (auto& c : bm) c = std::uint32_t(std::uint64_t(c) * lead_inv % p);
        Poly r = poly_mod(a, bm, p);
        a = b;
        b = r;
    }
    return a;
}

// Rabin irreducibility test for a monic polynomial of degree f over F_p.
bool is_irreducible(const Poly& m, std::uint32_t p) {
    std::uint32_t f = std::uint32_t(m.size()) - 1;
    // x^(p^f) == x mod m
    std::uint64_t pf = 1;
    for (std::uint32_t i = 0; i < f; ++i) pf *= p;
    Poly xq = poly_powmod_x(pf, m, p);
    Poly x = poly_mod(Poly{0, 1}, m, p);
    if (xq != x) return false;
    for (auto [r, e] : factorize_u64(f)) {
        (void)e;
        std::uint64_t pk = 1;
        for (std::uint32_t i = 0; i < f / r; ++i) pk *= p;
        Poly g = poly_powmod_x(pk, m, p);
        // g - x
        Poly diff = g;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = std::uint32_t((diff[1] + p - 1) % p);
        diff = trim(diff);
        Poly d = poly_gcd(m, diff, p);
        if (d.size() != 1) return false;  // nontrivial common factor
    }
    return true;
}

Poly unpack(Elem a, std::uint32_t p, std::uint32_t f) {
    Poly out(f, 0);
    for (std::uint32_t i = 0; i < f; ++i) {
        out[i] = a % p;
        a /= p;
    }
    return trim(out);
}

Elem pack(const Poly& a, std::uint32_t p) {
    Elem v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return v;
}

}  // namespace

Elem FieldDescriptor::add_slow(Elem a, Elem b) const {
    if (f == 1) {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        std::uint32_t da = a % p, db = b % p;
        std::uint32_t s = da + db;
        if (s >= p) s -= p;
        out += s * mult;
        mult *= p;
        a /= p;
        b /= p;
    }
    return out;
}

Elem FieldDescriptor::neg(Elem a) const {
    if (f == 1) return a == 0 ? 0 : p - a;
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        std::uint32_t da = a % p;
        out += (da == 0 ? 0 : p - da) * mult;
        mult *= p;
        a /= p;
    }
    return out;
}

Elem FieldDescriptor::inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("division by zero in F_q");
    return exp_[(q - 1 - log_[a]) % (q - 1)];
}

Elem FieldDescriptor::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    std::uint64_t k = std::uint64_t(log_[a]) % (q - 1) * (e % (q - 1)) % (q - 1);
    return exp_[k];
}

std::uint32_t FieldDescriptor::log(Elem a) const {
    if (a == 0) throw std::invalid_argument("log of zero in F_q");
    return log_[a];
}

FieldDescriptor make_field(std::uint32_t p, std::uint32_t f,
                           std::uint64_t table_budget) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("characteristic must be prime, got " +
                                    std::to_string(p));
    if (f == 0) throw std::invalid_argument("extension degree must be positive");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < f; ++i) {
        q64 *= p;
        if (q64 > table_budget)
            throw budget_error("field size " + std::to_string(p) + "^" +
                               std::to_string(f) + " exceeds table budget " +
                               std::to_string(table_budget));
    }

    FieldDescriptor F;
    F.p = p;
    F.f = f;
    F.q = std::uint32_t(q64);

    Poly mod_poly;  // monic modulus as dense coefficients (degree f)
    if (f > 1) {
        // smallest packed code whose monic polynomial is irreducible
        for (Elem k = 0;; ++k) {
            Poly m = unpack(k, p, f);
            m.resize(f + 1, 0);
            m[f] = 1;
            if (is_irreducible(m, p)) {
                mod_poly = m;
                F.modulus.assign(m.begin(), m.end() - 1);
                break;
            }
        }
    }

    auto raw_mul = [&](Elem a, Elem b) -> Elem {
        if (f == 1) return Elem(std::uint64_t(a) * b % p);
        Poly r = poly_mod(poly_mul(unpack(a, p, f), unpack(b, p, f), p),
                          mod_poly, p);
        return pack(r, p);
    };
    auto raw_pow = [&](Elem a, std::uint64_t e) -> Elem {
        Elem r = 1;
        while (e) {
            if (e & 1) r = raw_mul(r, a);
            a = raw_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // smallest generator of the multiplicative group
    auto order_factors = factorize_u64(F.q - 1);
    Elem gen = 0;
    for (Elem g = 2; g < F.q; ++g) {
        bool ok = true;
        for (auto [r, e] : order_factors) {
            (void)e;
            if (raw_pow(g, (F.q - 1) / r) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = g;
            break;
        }
    }
    if (gen == 0 && F.q == 2) gen = 1;  // F_2: trivial group
    F.gen = gen;

    F.exp_.resize(F.q - 1);
    F.log_.assign(F.q, 0);
    Elem cur = 1;
    for (std::uint32_t k = 0; k < F.q - 1; ++k) {
        F.exp_[k] = cur;
        F.log_[cur] = k;
        cur = raw_mul(cur, gen);
    }
    if (cur != 1)
        throw std::logic_error("generator order mismatch while building F_q");

    if (F.q <= 512) {
        std::vector<Elem> tab(std::size_t(F.q) * F.q);
        for (Elem a = 0; a < F.q; ++a)
            for (Elem b = 0; b < F.q; ++b)
                tab[std::size_t(a) * F.q + b] = F.add(a, b);  // addtab_ still empty
        F.addtab_ = std::move(tab);
    }
    return F;
}

std::uint32_t PowerClassTable::class_index(Elem a) const {
    if (a == 0)
        throw std::invalid_argument("0 has no power class");
    return class_of[a];
}

PowerClassTable power_classes(const FieldDescriptor& F, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    PowerClassTable T;
    T.d = d;
    T.d_star = std::uint32_t(gcd_u64(d, F.q - 1));

    // log(a) mod d_star is constant on cosets of the d-th powers
    std::vector<Elem> least(T.d_star, 0);
    for (std::uint32_t k = 0; k < F.q - 1; ++k) {
        Elem a = F.exp_[k];
        std::uint32_t c = k % T.d_star;
        if (least[c] == 0 || a < least[c]) least[c] = a;
    }
    // renumber classes by increasing representative
    std::vector<std::uint32_t> order(T.d_star);
    for (std::uint32_t i = 0; i < T.d_star; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t x, std::uint32_t y) { return least[x] < least[y]; });
    std::vector<std::uint32_t> renum(T.d_star);
    T.reps.resize(T.d_star);
    for (std::uint32_t i = 0; i < T.d_star; ++i) {
        renum[order[i]] = i;
        T.reps[i] = least[order[i]];
    }

    T.class_of.assign(F.q, UINT32_MAX);
    T.cosets.assign(T.d_star, ElemSet(F.q));
    for (std::uint32_t k = 0; k < F.q - 1; ++k) {
        Elem a = F.exp_[k];
        std::uint32_t c = renum[k % T.d_star];
        T.class_of[a] = c;
        T.cosets[c].set(a);
    }
    return T;
}

ElemSet dth_powers(const FieldDescriptor& F, std::uint32_t d) {
    if (d == 0) throw std::invalid_argument("degree must be positive");
    ElemSet S(F.q);
    S.set(0);
    std::uint32_t step = std::uint32_t(gcd_u64(d, F.q - 1));
    for (std::uint32_t k = 0; k < F.q - 1; k += step) S.set(F.exp_[k]);
    return S;
}

}  // namespace hforms
