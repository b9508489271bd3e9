#pragma once

#include "ribbon/partition.hpp"
#include "ribbon/polynomial.hpp"

namespace ribbon {

// Character of the symmetric group at cycle type `cycle_type`, computed by
// recursive border strip removal (the strip for the last part is peeled
// first) with memoization on (remaining shape, remaining part count).
// Throws std::invalid_argument when the sizes disagree.
Int mn_character(const Partition& shape, const Partition& cycle_type);

// Number of semistandard tableaux of the shape with entries at most m,
// via the integer hook-content product.
Int ssyt_count(const Partition& shape, int m);

// Principal specialization s_shape(1, q, ..., q^{m-1}) as an exact integer
// polynomial: q^{b} times the hook-content ratio, expanded through the
// cyclotomic factorization of each binomial 1 - q^a so that every division
// is exact.
IntPoly schur_principal(const Partition& shape, int m);

// s_shape(1, xi, ..., xi^{m-1}) for a primitive k-th root of unity xi,
// evaluated through the k-quotient: with m = l*k + r this is the sign of
// BST(shape, k) times the product of component counts with l or l+1
// letters. Throws std::domain_error when the k-core is nonempty.
Int schur_at_root(const Partition& shape, int k, int m);

// Sum over m = 0..t_order of t^m s_shape(1, q, ..., q^m), exact.
BiPoly principal_series(const Partition& shape, int t_order);

// Sign times the generating polynomial of the strip statistic over
// BST(shape, k). Throws std::domain_error when the k-core is nonempty.
IntPoly bst_stat_polynomial(const Partition& shape, int k);

// Sign times the truncated series of t^{k*(max-1) + idx1} over
// semistandard tuples on the k-quotient containing a 1; equals the
// evaluated fake degree divided by (1-t^k)^{n/k-1}. The empty shape gives
// the constant 1. Throws std::domain_error when the k-core is nonempty.
IntPoly ssyt_tuple_series(const Partition& shape, int k, int t_order);

}  // namespace ribbon
