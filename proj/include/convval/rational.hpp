#ifndef CONVVAL_RATIONAL_HPP_
#define CONVVAL_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace convval {

// Exact rational scalar. All geometric predicates in this library are decided
// on Rat values; doubles only appear in measures, areas and valuation values.
using Rat = mpq_class;
using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;
using DVec = std::vector<double>;

inline double to_double(const Rat& q) { return q.get_d(); }
DVec to_double(const RVec& v);
RVec to_rational(const DVec& v);  // exact (doubles are dyadic rationals)

Rat parse_rat(const std::string& s);  // "p/q", decimal, or integer literal
std::string rat_to_string(const Rat& q);

// --- exact vector algebra -------------------------------------------------

Rat dot(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec scaled(const RVec& a, const Rat& s);
RVec negated(const RVec& a);
bool is_zero(const RVec& a);
RVec zero_vec(int n);
RVec unit_vec(int n, int i);

// Lexicographic order; used to canonicalize vertex lists.
int compare(const RVec& a, const RVec& b);

// Scales a nonzero vector by a positive rational so entries become coprime
// integers. Keeps orientation, so +v and -v canonicalize to distinct keys.
RVec canonical_direction(const RVec& a);

// --- exact dense linear algebra (sizes <= ~8, plain Gaussian elimination) --

Rat det(RMat m);
int rank(RMat m);
// Solves the square system A x = b; nullopt if A is singular.
std::optional<RVec> solve(RMat a, RVec b);
std::optional<RMat> inverse(const RMat& a);
RMat transpose(const RMat& a);
RMat mat_mul(const RMat& a, const RMat& b);
RVec mat_vec(const RMat& a, const RVec& x);
RMat identity_mat(int n);

// Solves B t = y for a full-column-rank n x d matrix B, assuming y lies in
// the column span (callers guarantee this via rank checks); t has size d.
RVec solve_in_span(const RMat& basis_cols, const RVec& y);

// Gram determinant det(B^T B) for column vectors; exact.
Rat gram_det(const RMat& basis_cols);

// A nonzero vector orthogonal to all columns of B (n x (n-1), rank n-1).
RVec null_direction(const RMat& basis_cols);

// --- doubles ---------------------------------------------------------------

double ddot(const DVec& a, const DVec& b);
double dnorm(const DVec& a);

}  // namespace convval

#endif  // CONVVAL_RATIONAL_HPP_
