#pragma once

// The Bruck-Bose correspondence between PG(2,q^3) and PG(6,q).
//
// A PG(6,q) point is a 7-vector over GF(q) (x0,x1,x2,y0,y1,y2,z); the
// hyperplane z = 0 is Sigma_inf.  The same vectors, read over GF(q^3), are
// points of PG(6,q^3), which is where the transversal lines live.

#include <array>
#include <map>
#include <variant>
#include <vector>

#include "tsplash/field.hpp"
#include "tsplash/plane.hpp"
#include "tsplash/projgeom.hpp"

namespace tsplash {

/// sigma(alpha, beta, z) = (a0,a1,a2,b0,b1,b2,z), unnormalized.
Vec sigma_vec(const FieldCtx& ctx, Elem alpha, Elem beta, Elem z);
/// Normalized sigma(alpha, beta, z); throws on the zero vector.
ProjPoint sigma(const FieldCtx& ctx, Fq3 alpha, Fq3 beta, Fq z);
/// sigma of a point of PG(2,q^3).  Affine points are scaled to z = 1 first;
/// a point of l_inf gives one point of its spread element.
Vec sigma_of(const FieldCtx& ctx, const Vec& P);
/// (alpha, beta, z) from a 7-vector over GF(q).
Vec unsigma(const FieldCtx& ctx, const Vec& v);
/// The PG(2,q^3) point of an affine PG(6,q) point.
Vec affine_preimage(const FieldCtx& ctx, const Vec& v);

struct SpreadElement {
  ProjSubspace plane;             // over GF(q), inside Sigma_inf
  Vec tag;                        // point of l_inf in PG(2,q^3)
  std::array<Vec, 3> transversal; // on g, g^q, g^{q^2}; PG(6,q^3) coordinates
};

class RegularSpread {
 public:
  FieldCtx ctx;
  std::vector<SpreadElement> elements;
  ProjSubspace g;          // over GF(q^3)
  ProjSubspace sigma_inf;  // over GF(q)

  const FiniteField& F() const { return ctx.base(); }
  const FiniteField& E() const { return ctx.ext(); }
  int q() const { return ctx.q(); }

  /// Index of the element with the given l_inf point (any scaling); throws
  /// if T is not on l_inf.
  int index_of_tag(const Vec& T) const;
  const SpreadElement& element_of(const Vec& T) const { return elements[index_of_tag(T)]; }
  /// Index of the element containing a point of Sigma_inf.
  int owner(const Vec& v) const;
  /// Index of the element whose plane is P, or -1.
  int element_with_plane(const ProjSubspace& P) const;

 private:
  friend RegularSpread build_spread(const FieldCtx& ctx);
  explicit RegularSpread(FieldCtx c) : ctx(std::move(c)) {}
  std::map<Vec, int> tag_index_;
  std::vector<int> owner_;
};

/// Builds the spread from the transversal g through
/// (t1+t2 tau-tau^2, t2-tau, -1, 0,0,0, 0) and (0,0,0, t1+t2 tau-tau^2, t2-tau, -1, 0).
RegularSpread build_spread(const FieldCtx& ctx);

/// The 3-space of PG(6,q) for a line [a,b,c] of PG(2,q^3) other than l_inf.
ProjSubspace line_to_3space(const RegularSpread& S, const Vec& line);

/// The 7-vector image of the subline's homogeneous parametrization.  For a
/// subline missing l_inf this is the twisted cubic parametrization; the
/// coefficients are over GF(q).
Mat cubic_param_of_subline(const RegularSpread& S, const Subline& b);

struct ReguliImage {
  std::vector<int> elements;  // indices, in subline parameter order
};
using SublineImage = std::variant<ReguliImage, ProjSubspace, TwistedCubic>;

/// Image of an order-q subline: a 2-regulus of spread elements (subline on
/// l_inf), a line of PG(6,q) (one point on l_inf) or a twisted cubic.
SublineImage subline_image(const RegularSpread& S, const Subline& b);
TwistedCubic cubic_of_subline(const RegularSpread& S, const Subline& b);

/// Plane coordinates (over GF(q^3)) of a transversal point of an element.
Vec transversal_plane_coords(const RegularSpread& S, int elem, int which);

/// The GF(q)-space of quadratic forms on an element's plane vanishing on its
/// transversal points, as a subspace of GF(q)^6.
ProjSubspace special_form_space(const RegularSpread& S, int elem);
/// All special conics of an element (q^2 + q + 1 of them).
std::vector<Conic> special_conics(const RegularSpread& S, int elem);
/// The special conics of an element through every given point.
std::vector<Conic> special_conics_through(const RegularSpread& S, int elem, const std::vector<ProjPoint>& pts);

bool is_special_conic(const RegularSpread& S, const Conic& C);
/// Element index whose plane carries C, or -1.
int conic_element(const RegularSpread& S, const Conic& C);

/// Element index the 3-space is about (meets Sigma_inf in that plane), or -1.
int host_element(const RegularSpread& S, const ProjSubspace& space);
/// Parameter h in GF(q^3) (or E.size() for infinity) with N(h) = X over
/// GF(q^3), or -1.
int curve_ext_param(const FiniteField& E, const Mat& param, const Vec& X);
bool is_special_cubic(const RegularSpread& S, const TwistedCubic& N);

// ---------------------------------------------------------------------------

/// Points of a conic listed by the parametrization: (1,k) for k = 0..q-1 then (0,1).
std::vector<ProjPoint> conic_points_by_param(const FiniteField& F, const Mat& conic_param);

/// Parameter of a PG(1) point: index k for (1,k), |F| for (0,1).
Vec param_vec(Elem k, int field_size);
int param_index(const FiniteField& F, const Vec& st);

/// Conic directrix in one element, cubic directrix in a 3-space about
/// another, and the pairing between them.
struct RuledSurface {
  Conic conic;
  Mat conic_param;
  TwistedCubic cubic;
  int centre = -1;              // element carrying the conic
  int host = -1;                // element the cubic's 3-space is about
  std::vector<int> pairing;     // cubic index -> conic parameter index
  std::vector<ProjSubspace> generators;  // in cubic order
};

/// Builds the generators from the pairing.
void fill_generators(const RegularSpread& S, RuledSurface& V);

/// The 2x2 GF(q) matrix of the pairing if it is a projectivity.
std::optional<Mat> pairing_projectivity(const FiniteField& F, const std::vector<int>& pairing);

/// Image of a tangent subplane.  The cubic directrix comes from line
/// `cubic_line` of B (default: the first line missing T).
RuledSurface surface_of_subplane(const RegularSpread& S, const TangentSubplane& B, int cubic_line = -1);

/// Directrices special and about distinct elements, pairing a projectivity,
/// and the extended surface containing g, g^q, g^{q^2}.
bool is_tangent_surface(const RegularSpread& S, const RuledSurface& V);

/// The affine points of PG(2,q^3) covered by the generators, plus the
/// centre's tag.
std::vector<Vec> surface_plane_points(const RegularSpread& S, const RuledSurface& V);

}  // namespace tsplash
