/**
 * @file local.hpp
 * @brief Local geometry of affine plane curves at a point: intersection
 *        multiplicity (dimension of the truncated local quotient, with a
 *        resultant-valuation cross-check), point blow-ups with strict
 *        transforms, resolution trees of prescribed depth, shared-tree depth
 *        of two curves, and transversality.
 *
 * Blow-up chart conventions at the origin: chart A substitutes (x, y) ->
 * (x, x*y) with exceptional divisor {x = 0}; the direction coordinate on E is
 * the slope y/x. Chart B substitutes (x, y) -> (x*y, y) with E = {y = 0} and
 * covers the vertical direction (the chart-A point at infinity).
 */
#ifndef PEND_LOCAL_HPP
#define PEND_LOCAL_HPP

#include <optional>

#include "pend/algebra.hpp"
#include "pend/endo.hpp"

namespace pend {

struct infinite_multiplicity_error : error {
    using error::error;
};

struct PlanePoint {
    Scalar x, y;
};

/// Affine curve with named variables, the common currency of this module.
struct AffineCurve {
    MultiPoly f;
    std::string vx = "x", vy = "y";
};

/// Order of vanishing of f at the origin (minimal total degree of a term).
int vanishing_order(const MultiPoly& f);

/// Translate the curve so that p becomes the origin.
MultiPoly translate_to_origin(const MultiPoly& f, const std::string& vx, const std::string& vy,
                              const PlanePoint& p);

/// (C1 . C2)_p as the stabilized dimension of the truncated local quotient.
/// p off one of the curves yields 0; a common component through p raises
/// infinite_multiplicity_error.
int intersection_multiplicity(const AffineCurve& c1, const AffineCurve& c2, const PlanePoint& p);

/// Valuation-of-resultant route: ord_{x=p.x} Res_y(f, g), valid when p is the
/// only common point on its vertical line and a leading coefficient survives
/// there. Returns nullopt when those preconditions fail.
std::optional<int> intersection_multiplicity_resultant(const AffineCurve& c1,
                                                       const AffineCurve& c2,
                                                       const PlanePoint& p);

bool is_transverse(const AffineCurve& c1, const AffineCurve& c2, const PlanePoint& p);

struct BlowUp {
    int m;               // multiplicity of the curve at the blown-up point
    MultiPoly strict_a;  // strict transform in chart A (E = {x = 0})
    MultiPoly strict_b;  // strict transform in chart B (E = {y = 0})
    MultiPoly total_a;   // x^m * strict_a
    MultiPoly total_b;
};

/// Blow up p on C; requires p on C.
BlowUp blow_up(const AffineCurve& c, const PlanePoint& p);

/// Location of an infinitely-near point on the exceptional divisor E ~ P^1.
struct NearLocation {
    enum Kind { Root, Slope, SlopePacket, Vertical } kind = Root;
    Scalar slope;            // Kind::Slope
    SPoly minpoly;           // Kind::SlopePacket (monic, squarefree, no field roots)
    int restriction_mult = 0;  // multiplicity of the location in strict|_E
    std::string label() const;
    int cmp(const NearLocation& o) const;
};

struct ResolutionNode {
    int m = 0;  // multiplicity of the current strict transform at this point
    NearLocation loc;
    std::vector<ResolutionNode> children;  // canonical order
    bool expanded = true;   // false when a packet location could not be lifted
    bool truncated = false; // depth/budget cut below this node
};

/// Resolution tree of the requested depth at p (root = level 0; each level is
/// one round of blow-ups at every intersection of the strict transform with
/// the new exceptional divisor). Packet locations are lifted into a single
/// extension of Q when possible; otherwise the node is kept unexpanded.
ResolutionNode resolution_tree(const AffineCurve& c, const PlanePoint& p, int depth);

/// Number of levels (counting the root) on which the two labeled trees agree,
/// capped at max_depth. Two distinct coprime curves of degree <= D agree on
/// at most D*D levels.
int shared_tree_depth(const AffineCurve& c1, const AffineCurve& c2, const PlanePoint& p,
                      int max_depth);

std::string tree_to_json(const ResolutionNode& n);

/// All field-rational common points of two coprime affine curves, including
/// a flag telling whether irrational common points might exist as well.
struct CommonPoints {
    std::vector<PlanePoint> rational;
    bool complete = true;
};
CommonPoints affine_common_points(const AffineCurve& c1, const AffineCurve& c2);

}  // namespace pend

#endif
