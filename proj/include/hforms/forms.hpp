#pragma once

// Forms of degree d over a finite field: diagonal forms, sparse homogeneous
// polynomials, and symmetric d-linear tensors obtained by polarization.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hforms/common.hpp"
#include "hforms/gf.hpp"

namespace hforms {

// a_1 x_1^d + ... + a_n x_n^d
struct DiagonalForm {
    std::uint32_t d = 0;
    std::vector<Elem> coeffs;

    bool operator==(const DiagonalForm&) const = default;

    std::uint32_t dim() const { return std::uint32_t(coeffs.size()); }
};

// Homogeneous polynomial of degree d in n variables.  Keys are exponent
// vectors of length n summing to d; values are nonzero coefficients.
struct PolyForm {
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::map<std::vector<std::uint32_t>, Elem> terms;

    bool operator==(const PolyForm&) const = default;
};

// Symmetric d-linear map; keys are non-decreasing variable index tuples of
// length d (0-based), values nonzero.
struct SymmetricTensor {
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::map<std::vector<std::uint32_t>, Elem> entries;
};

// Throws std::invalid_argument unless every coefficient is a nonzero element
// of F and the degree is positive.
void validate_diagonal(const FieldDescriptor& F, const DiagonalForm& phi);

// Structural validation + normalization: checks exponent vectors, drops zero
// coefficients.  A form with no surviving terms is permitted (the zero form).
PolyForm make_poly_form(std::uint32_t d, std::uint32_t n,
                        std::map<std::vector<std::uint32_t>, Elem> terms);

PolyForm poly_from_diagonal(const FieldDescriptor& F, const DiagonalForm& phi);

Elem evaluate(const FieldDescriptor& F, const DiagonalForm& phi,
              std::span<const Elem> x);
Elem evaluate(const FieldDescriptor& F, const PolyForm& phi,
              std::span<const Elem> x);

DiagonalForm orthogonal_sum(const DiagonalForm& a, const DiagonalForm& b);
PolyForm orthogonal_sum(const PolyForm& a, const PolyForm& b);

// Coefficient grid (a_i b_j), row-major in i.
DiagonalForm tensor_product(const FieldDescriptor& F, const DiagonalForm& a,
                            const DiagonalForm& b);

// <a_1,...,a_m> (x) phi  =  a_1 phi(X_1) + ... + a_m phi(X_m) on disjoint
// variable blocks.  This is the specialization of the multilinear tensor
// product where one factor is diagonal; the general polynomial-by-polynomial
// case is intentionally not offered.
PolyForm tensor_product(const FieldDescriptor& F, const DiagonalForm& a,
                        const PolyForm& phi);

// Full polarization theta with theta(v,...,v) = phi(v).  Requires p > d so
// that d! is invertible; throws std::invalid_argument otherwise.
SymmetricTensor polarize(const FieldDescriptor& F, const PolyForm& phi,
                         std::uint64_t budget = std::uint64_t(1) << 22);

// Multilinear evaluation at d vectors of length n.
Elem tensor_eval(const FieldDescriptor& F, const SymmetricTensor& theta,
                 const std::vector<std::vector<Elem>>& args);

// Inverse of polarize: the polynomial v -> theta(v,...,v).
PolyForm tensor_to_poly(const FieldDescriptor& F, const SymmetricTensor& theta);

// Rank test of the n x n^(d-1) flattening: true iff no vector is in the
// radical of theta.  The budget guards the number of flattening columns.
bool is_nondegenerate(const FieldDescriptor& F, const SymmetricTensor& theta,
                      std::uint64_t budget = std::uint64_t(1) << 22);

// Equivalence by variable permutation and d-th power rescaling of the
// coefficients, i.e. equality of the power-class multisets.  For degree >= 3
// this is exactly linear equivalence of diagonal forms (tame characteristic);
// degree <= 2 is rejected because quadratic equivalence is coarser.
bool diagonal_isomorphic(const FieldDescriptor& F, const DiagonalForm& a,
                         const DiagonalForm& b);

}  // namespace hforms
