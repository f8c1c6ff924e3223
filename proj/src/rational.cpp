#include "hforms/rational.hpp"

#include <algorithm>
#include <numeric>

namespace hforms {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("rational arithmetic overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("rational arithmetic overflow");
    return r;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat Rat::operator+(const Rat& o) const {
    std::int64_t g = std::gcd(den, o.den);
    std::int64_t l = checked_mul(den / g, o.den);
    std::int64_t a = checked_mul(num, o.den / g);
    std::int64_t b = checked_mul(o.num, den / g);
    return Rat(checked_add(a, b), l);
}

Rat Rat::operator*(const Rat& o) const {
    std::int64_t g1 = std::gcd(num < 0 ? -num : num, o.den);
    std::int64_t g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
    return Rat(checked_mul(num / g1, o.num / g2),
               checked_mul(den / g2, o.den / g1));
}

Rat Rat::inverse() const {
    if (num == 0) throw std::invalid_argument("division by zero");
    return Rat(den, num);
}

Rat evaluate(const QPolyForm& phi, const std::vector<Rat>& x) {
    if (x.size() != phi.n)
        throw std::invalid_argument("vector length != form dimension");
    Rat acc(0);
    for (const auto& [e, c] : phi.terms) {
        Rat t = c;
        for (std::uint32_t i = 0; i < phi.n; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * x[i];
        acc = acc + t;
    }
    return acc;
}

QSymmetricTensor polarize_rational(const QPolyForm& phi) {
    const std::uint32_t d = phi.d;
    if (d == 0 || d >= 25)
        throw std::invalid_argument("degree out of range for polarization");
    std::int64_t dfact = 1;
    for (std::uint32_t i = 2; i <= d; ++i) dfact = checked_mul(dfact, i);
    const Rat scale(1, dfact);

    QSymmetricTensor theta;
    theta.d = d;
    theta.n = phi.n;

    std::vector<std::uint32_t> tuple(d, 0);
    std::vector<Rat> point(phi.n);
    while (true) {
        Rat acc(0);
        for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
            std::fill(point.begin(), point.end(), Rat(0));
            for (std::uint32_t j = 0; j < d; ++j)
                if (mask & (1u << j))
                    point[tuple[j]] = point[tuple[j]] + Rat(1);
            Rat v = evaluate(phi, point);
            std::uint32_t l = std::uint32_t(__builtin_popcount(mask));
            if ((d - l) & 1) v = -v;
            acc = acc + v;
        }
        acc = acc * scale;
        if (!acc.is_zero()) theta.entries.emplace(tuple, acc);

        std::uint32_t i = d;
        while (i > 0 && tuple[i - 1] == phi.n - 1) --i;
        if (i == 0) break;
        std::uint32_t v = tuple[i - 1] + 1;
        for (std::uint32_t j = i - 1; j < d; ++j) tuple[j] = v;
    }
    return theta;
}

Rat tensor_eval(const QSymmetricTensor& theta,
                const std::vector<std::vector<Rat>>& args) {
    if (args.size() != theta.d)
        throw std::invalid_argument("tensor evaluation needs d argument vectors");
    Rat acc(0);
    std::vector<std::uint32_t> idx(theta.d, 0);
    std::vector<std::uint32_t> key(theta.d);
    while (true) {
        Rat prod(1);
        for (std::uint32_t j = 0; j < theta.d; ++j) prod = prod * args[j][idx[j]];
        if (!prod.is_zero()) {
            key.assign(idx.begin(), idx.end());
            std::sort(key.begin(), key.end());
            auto it = theta.entries.find(key);
            if (it != theta.entries.end()) acc = acc + prod * it->second;
        }
        std::uint32_t j = 0;
        while (j < theta.d && ++idx[j] == theta.n) idx[j++] = 0;
        if (j == theta.d) break;
    }
    return acc;
}

}  // namespace hforms
