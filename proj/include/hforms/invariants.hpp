#pragma once

// Field invariants of degree d over F_q: the level s_d, the diagonal
// u-invariant, Waring numbers over the sumset closure, and the
// three-dimensional existence question for small degrees.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforms/common.hpp"
#include "hforms/forms.hpp"
#include "hforms/gf.hpp"
#include "hforms/isotropy.hpp"

namespace hforms {

struct InvariantReport {
    std::uint32_t p = 0, f = 0;  // the field
    std::uint32_t d = 0;
    ExtendedNat value;

    // lower-bound certificates, depending on the invariant:
    std::optional<DiagonalForm> witness_form;       // anisotropic form of dim = value
    std::optional<std::vector<Elem>> witness_sum;   // x_i with sum x_i^d = target
    std::optional<Elem> deepest;                    // element attaining the Waring depth

    // the a-priori upper bound that closed the search
    std::string bound_name;
    ExtendedNat bound;
};

// Least s with -1 a sum of s d-th powers.  Iterated sumset search; the
// witness lists s elements whose d-th powers sum to -1.
InvariantReport level(const FieldDescriptor& F, std::uint32_t d);

// Largest dimension of an anisotropic diagonal form of degree d.  Depth-first
// extension search over non-decreasing power-class representative sequences
// (complete: permuting variables and rescaling by d-th powers preserve
// isotropy), pruning isotropic prefixes, capped at gcd(d, q-1) classes.
InvariantReport u_diag(const FieldDescriptor& F, std::uint32_t d,
                       std::uint64_t budget = default_eval_budget);

// Least n such that everything in the closure of sums of d-th powers is a sum
// of n of them; deepest/witness_sum record the element needing the most.
InvariantReport waring_number(const FieldDescriptor& F, std::uint32_t d);

// A 3-dimensional anisotropic diagonal form of degree d over F, if one
// exists; searches class-representative triples directly.
std::optional<DiagonalForm> check_orzech_dim3(const FieldDescriptor& F,
                                              std::uint32_t d);

// x_1..x_s with sum x_i^d = a, lexicographically least, or nullopt.
std::optional<std::vector<Elem>> sum_of_powers_decomposition(
    const FieldDescriptor& F, std::uint32_t d, Elem a, std::uint32_t s);

}  // namespace hforms
