#pragma once

// Exact rational arithmetic, just enough to polarize forms with integer or
// rational coefficients in characteristic zero.  Numerators and denominators
// stay in int64; overflow throws rather than wrapping.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hforms {

struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(|num|, den) = 1

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d);

    bool is_zero() const { return num == 0; }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    Rat operator+(const Rat& o) const;
    Rat operator-() const { return Rat(-num, den); }
    Rat operator-(const Rat& o) const { return *this + (-o); }
    Rat operator*(const Rat& o) const;
    Rat inverse() const;

    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct QPolyForm {
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::map<std::vector<std::uint32_t>, Rat> terms;
};

struct QSymmetricTensor {
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::map<std::vector<std::uint32_t>, Rat> entries;
};

Rat evaluate(const QPolyForm& phi, const std::vector<Rat>& x);

// Same inclusion-exclusion as the finite-field polarize, in characteristic 0
// (no constraint on the degree).
QSymmetricTensor polarize_rational(const QPolyForm& phi);

Rat tensor_eval(const QSymmetricTensor& theta,
                const std::vector<std::vector<Rat>>& args);

}  // namespace hforms
