#pragma once

// Springer-theorem machinery over discretely valued fields: residue
// decomposition of diagonal forms, exact isotropy decisions for p-adic fields
// and Laurent series towers when the residue characteristic does not divide
// the degree, u-invariant propagation along towers, and the classical
// upper-bound calculators for p-adic u-invariants.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hforms/common.hpp"
#include "hforms/forms.hpp"
#include "hforms/gf.hpp"
#include "hforms/invariants.hpp"
#include "hforms/isotropy.hpp"

namespace hforms {

// Finite extension of Q_p with residue field F_{p^f} and ramification index
// e.  The value group contributes one Z-layer: |Gamma / d Gamma| = d.
struct PadicField {
    std::uint32_t p = 0;
    std::uint32_t f = 1;
    std::uint32_t e = 1;
};

// Iterated Laurent series k((t_1))...((t_n)); the residue field k is either a
// concrete finite field (p, f) or, with base absent, algebraically closed of
// characteristic coprime to every degree in play.
struct LaurentTower {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> base;  // (p, f)
    std::uint32_t layers = 1;
};

// Abstract Henselian field known only through its residue u-invariant and
// the rank of its value group mod d; lets tower formulas run symbolically,
// including infinite residue u-invariants.
struct FormalHenselian {
    ExtendedNat residue_u_diag = ExtendedNat::of(1);
    std::uint32_t gamma_rank = 1;
};

using ValuedField = std::variant<PadicField, LaurentTower, FormalHenselian>;

// Residue characteristic, or 0 when the descriptor leaves it abstract.
std::uint32_t residue_char(const ValuedField& K);

// Number of Z-layers in the value group (1 for p-adic, n for an n-fold
// Laurent tower, the declared rank for a formal descriptor).
std::uint32_t value_layers(const ValuedField& K);

// The concrete residue field, when the descriptor names one.
std::optional<FieldDescriptor> residue_field(const ValuedField& K);

// |Gamma / d Gamma| = d^layers; throws std::overflow_error if it exceeds
// 64 bits.
ExtendedNat gamma_index(const ValuedField& K, std::uint32_t d);

// One coefficient u * pi_1^{v_1} ... pi_m^{v_m}: a residue-field unit times a
// monomial in the uniformizers.  Raw valuations are kept as written; only
// their classes mod d matter for isotropy.
struct ValuedCoefficient {
    Elem unit = 1;
    std::vector<std::int64_t> vals;
};

struct ValuedDiagonalForm {
    std::uint32_t d = 0;
    std::vector<ValuedCoefficient> coeffs;

    std::uint32_t dim() const { return std::uint32_t(coeffs.size()); }
};

// Throws std::invalid_argument unless d > 0, the form has at least one
// coefficient, every valuation vector has one entry per value-group layer,
// and every unit is nonzero (and lies in the residue field when concrete).
void validate_valued(const ValuedField& K, const ValuedDiagonalForm& phi);

// Groups coefficients by valuation reduced mod d per layer; each group
// becomes the diagonal form of its unit residues.  Requires the residue
// characteristic to be 0, unknown, or coprime to d: otherwise the reduction
// does not control isotropy and a wild_case_error is thrown.
std::map<std::vector<std::int64_t>, DiagonalForm> residue_decomposition(
    const ValuedField& K, const ValuedDiagonalForm& phi);

struct ValuedIsotropyVerdict {
    bool isotropic = false;
    // for an isotropic verdict: the valuation class whose residue form has a
    // nontrivial zero, the indices of phi's coefficients in that class, and
    // the zero vector of the class's residue form (absent when the residue
    // field is only known abstractly)
    std::optional<std::vector<std::int64_t>> witness_gamma;
    std::vector<std::uint32_t> witness_positions;
    std::optional<std::vector<Elem>> residue_witness;
    std::uint64_t search_cost = 0;
};

// Springer's criterion: phi is anisotropic over the Henselian field iff every
// residue form in its decomposition is anisotropic over the residue field.
// Requires a field of forms (p-adic or Laurent tower); formal descriptors are
// rejected with std::invalid_argument.
ValuedIsotropyVerdict is_isotropic_valued_diagonal(const ValuedField& K,
                                                   const ValuedDiagonalForm& phi);

// u_diag(d, K) = |Gamma / d Gamma| * u_diag(d, residue field), with infinity
// propagating through the product.  For concrete residue fields the report's
// witness_form is the maximal anisotropic *residue* form; a full valued
// certificate is its uniformizer lift (see the construction helpers).
InvariantReport u_diag_springer(const ValuedField& K, std::uint32_t d);

// Least m >= 1 such that -m is a d-th power in Z_p; requires p coprime to d
// so the question reduces to the residue field.
std::uint32_t m_d(std::uint32_t p, std::uint32_t d);

// One row of the upper-bound table: u_diag(d, K) <= value (or < value when
// strict).  Bounds whose hypotheses fail are still listed, marked
// inapplicable, with the reason in note.
struct NamedBound {
    std::string name;
    ExtendedNat value;
    bool strict = false;
    bool applicable = true;
    std::string note;
};

// The classical upper bounds for u_diag(d, K) over a p-adic field, evaluated
// as pure arithmetic: the unit-group index bounds (odd degree, and even
// degree with the 1 + m_d factor), the root-of-unity count bound, Joly's
// degree-square bound for Q_p, and the strict wild-degree bounds.
std::vector<NamedBound> bound_calculators(const PadicField& K, std::uint32_t d);

}  // namespace hforms
