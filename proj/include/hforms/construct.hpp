#pragma once

// Explicit builders for the classical anisotropic forms: uniformizer tensor
// lifts over Laurent series, p-power lifts to the rationals with a p-adic
// certificate, norm forms of field extensions, degree compositions and
// powers, and iterated Laurent constructions witnessing u_diag lower bounds.

#include <cstdint>
#include <optional>
#include <string>

#include "hforms/common.hpp"
#include "hforms/forms.hpp"
#include "hforms/gf.hpp"
#include "hforms/isotropy.hpp"
#include "hforms/rational.hpp"
#include "hforms/valued.hpp"

namespace hforms {

// A named construction together with what it claims; exactly one output slot
// is filled, depending on where the built form lives.
struct ConstructionRecipe {
    std::string name;
    std::string inputs;
    std::string claimed_property;
    std::optional<DiagonalForm> diagonal_output;
    std::optional<PolyForm> poly_output;
    std::optional<QPolyForm> rational_output;
    std::optional<ValuedDiagonalForm> valued_output;

    std::uint64_t output_dim() const {
        if (diagonal_output) return diagonal_output->dim();
        if (poly_output) return poly_output->n;
        if (rational_output) return rational_output->n;
        if (valued_output) return valued_output->dim();
        return 0;
    }
};

// <1, t, ..., t^{d-1}> tensor phi over k((t)): block j carries phi's
// coefficients at valuation j.  Anisotropic over k((t)) iff phi is over k.
ValuedDiagonalForm tensor_lift(const FieldDescriptor& F, const DiagonalForm& phi);

// sum_j p^j phi(X_j) for j = 0..d-1: a degree-d form in d^2 variables with
// integer coefficients, anisotropic over Q_p (hence over Q) whenever the
// degree-d, dimension-d base form phi is anisotropic modulo p.
struct PrimeLiftForm {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    PolyForm residue;                          // the base form over F_p
    QPolyForm rational;                        // the lifted form over Q
    std::optional<ValuedDiagonalForm> valued;  // present for diagonal bases
};

// Builds the lift after checking the precondition exhaustively over F_p;
// a base form with a nontrivial zero mod p is rejected (invalid_argument).
PrimeLiftForm prime_lift(const FieldDescriptor& Fp, const PolyForm& phi,
                         std::uint64_t budget = default_eval_budget);
PrimeLiftForm prime_lift(const FieldDescriptor& Fp, const DiagonalForm& phi,
                         std::uint64_t budget = default_eval_budget);

// The norm of the generic element of F_{q^d} over F_q in the power basis
// 1, g, ..., g^{d-1} of the extension's multiplicative generator: a degree-d
// form in d variables, anisotropic by multiplicativity of the norm.
PolyForm norm_form(const FieldDescriptor& F, std::uint32_t d,
                   std::uint64_t table_budget = std::uint64_t(1) << 20);

// f(f(X_1), ..., f(X_u)) for a degree-d form f in u variables: degree d^2 in
// u^2 variables, anisotropic whenever f is.
PolyForm compose_forms(const FieldDescriptor& F, const PolyForm& f,
                       std::uint64_t term_budget = std::uint64_t(1) << 20);

// f^m: degree m*d with the same zero set as f.
PolyForm power_form(const FieldDescriptor& F, const PolyForm& f,
                    std::uint32_t m,
                    std::uint64_t term_budget = std::uint64_t(1) << 20);

// <1, t_1, ..., t_1^{d-1}> tensor ... tensor <1, t_n, ..., t_n^{d-1}>: the
// dimension-d^n all-units form whose valuations run over {0..d-1}^n; its
// tensor with a residue-field form w multiplies w's dimension by d^n.
ValuedDiagonalForm iterated_laurent_form(std::uint32_t d, std::uint32_t n,
                                         std::uint64_t budget = std::uint64_t(1)
                                                                << 20);

// The same valuation spread applied blockwise to a residue form: coefficient
// units come from w, valuations from iterated_laurent_form(d, n).
ValuedDiagonalForm laurent_spread(const DiagonalForm& w, std::uint32_t n,
                                  std::uint64_t budget = std::uint64_t(1)
                                                         << 20);

}  // namespace hforms
