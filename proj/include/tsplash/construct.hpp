#pragma once

// Rebuilding a tangent subplane from its splash and one subline: shadow,
// cover planes, envelope conic, projectivity, ruled surface, subplane.  Also
// the brute-force search that checks the result is the only candidate.

#include <optional>
#include <random>
#include <vector>

#include "tsplash/bruckbose.hpp"
#include "tsplash/splash.hpp"

namespace tsplash {

struct EnvelopeConic {
  Conic conic;
  std::vector<ProjPoint> contact;     // one per input line, same order
  std::optional<ProjPoint> nucleus;   // q even
};

/// q+1 lines of the centre plane tangent to a special conic.  Even q: the
/// lines must be concurrent and the conic is the special conic with that
/// nucleus.  Odd q: a dual conic is fitted to the lines, keeping only the
/// candidates whose primal conic is special.
EnvelopeConic envelope_to_conic(const RegularSpread& S, int T_elem, const std::vector<ProjSubspace>& lines);

/// Even q: the special conic of an element with nucleus N.
Conic special_conic_with_nucleus(const RegularSpread& S, int T_elem, const ProjPoint& N);

/// Line coordinates of a line of a plane, relative to the plane's basis.
Vec line_coords_in_plane(const FiniteField& F, const ProjSubspace& plane, const ProjSubspace& line);

struct Projectivity1D {
  Mat matrix;                // 2x2 over GF(q), cubic parameter -> conic parameter
  std::vector<int> pairing;  // cubic index -> conic parameter index
};

/// The projectivity taking the transversal points of N's host to those of
/// C's element (in matching order), checked to be defined over GF(q).
Projectivity1D eta_projectivity(const RegularSpread& S, const TwistedCubic& N, const Conic& C, const Mat& conic_param);

struct Construction {
  int L = -1;                        // element of the subline's point at infinity
  Shadow shadow;
  std::vector<CoverPlane> shadow_planes;  // cover plane through each shadow point
  EnvelopeConic envelope;
  std::vector<int> phi;              // contact pairing, cubic index -> conic parameter index
  Projectivity1D eta;
  RuledSurface surface;
  TangentSubplane subplane;
};

/// Runs the construction for a tangent splash and a subline missing l_inf
/// whose line meets l_inf in a member.
Construction construct_subplane(const RegularSpread& S, const Splash& sp, const Subline& ell);
/// Same, with the cover planes already computed.
Construction construct_subplane(const RegularSpread& S, const Splash& sp, const std::vector<CoverPlane>& planes,
                                const Subline& ell);

/// Every subplane through two points of ell, a splash point T' and an affine
/// point X; keeps the tangent ones containing ell with splash sp.
std::vector<TangentSubplane> brute_force_subplanes(const RegularSpread& S, const Splash& sp, const Subline& ell);
/// The single survivor of the search; throws unless there is exactly one.
TangentSubplane brute_force_unique_subplane(const RegularSpread& S, const Splash& sp, const Subline& ell);

/// The tangent subplane whose point set is exactly pts, or nullopt.
std::optional<TangentSubplane> subplane_from_points(const FieldCtx& ctx, const std::vector<Vec>& pts);

/// A uniformly chosen subline missing l_inf on a random line through a
/// random member of the splash.
Subline random_subline(const RegularSpread& S, const Splash& sp, std::mt19937_64& rng);

}  // namespace tsplash
