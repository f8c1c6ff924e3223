#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hforms {

// Field elements are encoded as integers 0..q-1 (residues for prime fields,
// base-p coefficient packings for extensions).
using Elem = std::uint32_t;

// A search or table budget was exhausted.  Callers must treat this as
// "undecided", never as a verdict.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue characteristic divides the degree; the valued-field machinery
// does not cover this case.
struct wild_case_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Natural number with an infinity marker.
struct ExtendedNat {
    bool infinite = false;
    std::uint64_t value = 0;

    static ExtendedNat inf() { return ExtendedNat{true, 0}; }
    static ExtendedNat of(std::uint64_t v) { return ExtendedNat{false, v}; }

    bool operator==(const ExtendedNat& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    bool operator!=(const ExtendedNat& o) const { return !(*this == o); }

    ExtendedNat operator*(const ExtendedNat& o) const {
        if (infinite || o.infinite) return inf();
        return of(value * o.value);
    }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

// Dense bit set indexed by element codes 0..n-1.
class ElemSet {
  public:
    ElemSet() = default;
    explicit ElemSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    ElemSet& operator|=(const ElemSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    bool intersects(const ElemSet& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(static_cast<Elem>((wi << 6) + b));
                w &= w - 1;
            }
        }
    }

    std::vector<Elem> to_vector() const {
        std::vector<Elem> v;
        v.reserve(count());
        for_each([&](Elem e) { v.push_back(e); });
        return v;
    }

    std::vector<std::uint64_t>& words() { return w_; }
    const std::vector<std::uint64_t>& words() const { return w_; }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// prime -> exponent, ascending
inline std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::int64_t floormod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace hforms
