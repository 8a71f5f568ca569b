#pragma once

#include "qgw/laurent.hpp"

namespace qgw {

/// Quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [0] = 0, [-n] = -[n].
LaurentPoly qint(int n);

/// [n]! = [1][2]...[n]; requires n >= 0.
LaurentPoly qfact(int n);

/// Gaussian binomial [n choose k] = [n]! / ([k]! [n-k]!).
///
/// Zero when k < 0 or k > n (in particular for every negative n). Computed by
/// exact division; an inexact quotient throws std::logic_error.
LaurentPoly qbinom(int n, int k);

/// Graded dimension of H*(P^n): equals [n+1]. Accepts n >= -1 (P^{-1} is empty).
LaurentPoly gdim_proj(int n);

/// Graded dimension of H*(G(k,n)), the Grassmannian of k-planes in C^n.
inline LaurentPoly gdim_grassmannian(int k, int n) { return qbinom(n, k); }

/// q -> q^{-1}
LaurentPoly bar_involution(const LaurentPoly& p);

/// Sum of coefficients (specialization q = 1).
Integer evaluate_at_one(const LaurentPoly& p);

/// K-class of the bigraded shift [a]{b}: (-1)^a q^b.
LaurentPoly decat_shift(int cohomological, int equivariant);

}  // namespace qgw
