#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "homkt/error.hpp"

namespace homkt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

std::string rat_str(const Rat& x);
Rat parse_rat(const std::string& s);  // "p", "-p/q"

// Dense exact linear algebra over the rationals. Everything is small
// (matrices are at most rank+abelian sized blocks), so no pivd tricks.
RatVec zero_vec(std::size_t n);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
Rat bilinear(const RatVec& a, const RatMat& g, const RatVec& b);
bool is_zero(const RatVec& a);

RatMat identity(std::size_t n);
RatVec mat_apply(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& m);

// Gaussian elimination helpers. `invert` throws DegenerateMetric on a
// singular input; `rank_of` and `nullspace` never throw.
RatMat invert(const RatMat& m);
std::size_t rank_of(RatMat m);
// Canonical basis of {x : m x = 0}, each vector scaled to primitive
// integer entries with positive leading coefficient.
RatMat nullspace(const RatMat& m);
// Solve m x = v; throws DegenerateMetric if the system is singular.
RatVec solve(RatMat m, RatVec v);

// Scale a rational vector to coprime integer entries, first nonzero > 0.
RatVec primitive(const RatVec& v);

// Gram-Schmidt without normalization w.r.t. the bilinear form `g`
// (given as a Gram matrix over the input coordinates). Returns the
// orthogonal vectors in input order; throws DegenerateMetric if some
// vector degenerates (form not definite on the span).
RatMat gram_schmidt(const RatMat& vectors, const RatMat& g);

// True if v lies in the rational span of the rows of `basis`.
bool in_span(const RatMat& basis, const RatVec& v);

}  // namespace homkt
