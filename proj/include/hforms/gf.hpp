#pragma once

// Finite field arithmetic on F_q, q = p^f, with discrete-log tables and the
// d-th power-class machinery everything else is built on.
//
// Elements are encoded as integers 0..q-1.  For prime fields the code is the
// residue itself; for extensions F_p[y]/(m) the element sum_i c_i y^i is
// packed as sum_i c_i p^i.  All tables are built eagerly in make_field and
// never mutated afterwards, so a FieldDescriptor can be shared freely.

#include <cstdint>
#include <vector>

#include "hforms/common.hpp"

namespace hforms {

struct FieldDescriptor {
    std::uint32_t p = 0;  // characteristic
    std::uint32_t f = 0;  // extension degree over F_p
    std::uint32_t q = 0;  // p^f
    Elem gen = 0;         // smallest multiplicative generator (by code)

    // modulus coefficients c_0..c_{f-1} of the monic irreducible
    // y^f + c_{f-1} y^{f-1} + ... + c_0 used to present F_q; empty for f = 1
    std::vector<Elem> modulus;

    // exp_[k] = gen^k for 0 <= k < q-1; log_[a] defined for a != 0
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;

    // full addition table when q is small enough to afford one
    std::vector<Elem> addtab_;

    Elem add(Elem a, Elem b) const {
        if (!addtab_.empty()) return addtab_[std::size_t(a) * q + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t k = std::uint64_t(log_[a]) + log_[b];
        if (k >= q - 1) k -= q - 1;
        return exp_[k];
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    std::uint32_t log(Elem a) const;           // a != 0
    Elem exp(std::uint64_t k) const { return exp_[k % (q - 1)]; }

    // embed an integer via the prime subfield
    Elem from_int(std::int64_t v) const {
        return static_cast<Elem>(floormod(v, p));
    }

  private:
    Elem add_slow(Elem a, Elem b) const;
};

// Builds F_{p^f}.  The presentation is deterministic: the modulus is the
// irreducible monic polynomial of degree f whose packed code is smallest, and
// gen is the smallest element code that generates the multiplicative group.
// Throws std::invalid_argument for non-prime p or f = 0, budget_error when
// p^f exceeds table_budget.
FieldDescriptor make_field(std::uint32_t p, std::uint32_t f,
                           std::uint64_t table_budget = std::uint64_t(1) << 20);

// Cosets of the d-th powers in F_q^*.  Classes are numbered 0..d_star-1 in
// increasing order of their smallest member, so class 0 is the class of 1.
struct PowerClassTable {
    std::uint32_t d = 0;
    std::uint32_t d_star = 0;        // gcd(d, q-1) = number of classes
    std::vector<Elem> reps;          // smallest member of each class
    std::vector<std::uint32_t> class_of;  // size q; UINT32_MAX at index 0
    std::vector<ElemSet> cosets;     // cosets[c] = the full class c

    std::uint32_t class_index(Elem a) const;  // a != 0
    Elem rep_of(Elem a) const { return reps[class_index(a)]; }
};

PowerClassTable power_classes(const FieldDescriptor& F, std::uint32_t d);

// {x^d : x in F_q}, including 0.
ElemSet dth_powers(const FieldDescriptor& F, std::uint32_t d);

}  // namespace hforms
