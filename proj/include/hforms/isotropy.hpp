#pragma once

// Isotropy decisions: does a form have a nontrivial zero over F_q, and what
// values does it represent?

#include <cstdint>
#include <optional>
#include <vector>

#include "hforms/common.hpp"
#include "hforms/forms.hpp"
#include "hforms/gf.hpp"

namespace hforms {

inline constexpr std::uint64_t default_eval_budget = 100'000'000;

struct IsotropyVerdict {
    enum class Status { anisotropic, isotropic, undecided_budget };

    Status status = Status::anisotropic;
    // present iff isotropic: the lexicographically least nonzero zero vector
    std::optional<std::vector<Elem>> witness;
    std::uint64_t search_cost = 0;  // value-set updates / points evaluated

    bool decided() const { return status != Status::undecided_budget; }
    bool isotropic() const {
        if (!decided())
            throw budget_error("isotropy search exhausted its budget");
        return status == Status::isotropic;
    }
};

// Exact decision for diagonal forms by a represented-value sweep over the
// coefficient list; cost is O(dim * q * |coset|) set updates, never budgeted.
IsotropyVerdict is_isotropic_diagonal(const FieldDescriptor& F,
                                      const DiagonalForm& phi);

// Projective point scan for arbitrary homogeneous forms.  Scans the points
// with first nonzero coordinate scaled to 1, in lexicographic vector order,
// so a returned witness is the least nonzero zero vector.  Runs out of budget
// as a distinct outcome, never a wrong verdict.
IsotropyVerdict is_isotropic_poly(const FieldDescriptor& F, const PolyForm& phi,
                                  std::uint64_t budget = default_eval_budget);

// The set of nonzero values phi represents.
ElemSet represented_values(const FieldDescriptor& F, const DiagonalForm& phi);

// True iff phi represents every element of F_q^*.
bool is_universal(const FieldDescriptor& F, const DiagonalForm& phi);

}  // namespace hforms
