#pragma once

// Homographies of PG(2,q^3) fixing l_inf, lifted to PG(6,q), and the Singer
// cycle acting inside every spread element.

#include <cstdint>
#include <random>
#include <vector>

#include "tsplash/field.hpp"
#include "tsplash/projgeom.hpp"

namespace tsplash {

/// 3x3 matrix over GF(q) of x -> a x on GF(q^3) in the basis {1, tau, tau^2}.
Mat multiplication_matrix(const FieldCtx& ctx, Elem a);
/// Companion matrix of tau: columns (0,1,0), (0,0,1), (t0,t1,t2).
Mat companion(const FieldCtx& ctx);

struct LiftedHomography {
  Mat source;  // 3x3 over GF(q^3), last row (0,0,1)
  Mat lifted;  // 7x7 over GF(q)
};

/// Lifts A; A may be any nonzero multiple of a matrix with last row (0,0,1).
LiftedHomography lift(const FieldCtx& ctx, const Mat& A);

struct SingerCycle {
  Mat T;  // companion matrix
  Mat M;  // diag(T, T, 1)
};

SingerCycle singer(const FieldCtx& ctx);

/// Normalized image of a PG(6,q) point.
Vec apply7(const FiniteField& F, const Mat& M, const Vec& v);
/// Sorted normalized image of a point set.
std::vector<Vec> image_of(const FiniteField& F, const Mat& M, const std::vector<Vec>& pts);
/// Image of a subspace.
ProjSubspace image_of(const FiniteField& F, const Mat& M, const ProjSubspace& S);

/// Size of the orbit of a point set under the cyclic group generated by M.
std::uint64_t orbit_size(const FiniteField& F, const Mat& M, std::vector<Vec> pts);

/// Uniform random homography x -> (ax+by+c, dx+ey+f, z) with ae - bd != 0.
Mat random_homography(const FieldCtx& ctx, std::mt19937_64& rng);

}  // namespace tsplash
