#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swancalc/chow/surface.hpp"
#include "swancalc/exact/field.hpp"
#include "swancalc/exact/poly.hpp"

namespace swancalc::rank1 {

using exact::Elem;
using exact::FieldPtr;

/// Laurent polynomial in chart coordinates: (i, j) -> coefficient of x^i y^j.
using Terms = std::map<std::pair<int, int>, Elem>;

enum class ChartKind { Root, Copy, Chart1, Chart2 };

/// Affine chart A^2 = Spec k[x, y] of the surface. The axes {x = 0} and
/// {y = 0} may be boundary components; f is an Artin-Schreier representative
/// with poles only along boundary axes. Charts made by blowing up remember
/// how they map to their parent:
///   Copy:   (x, y) -> (x + cx, y + cy), responsible for the origin only
///   Chart1: (x, y) -> (x y, y), responsible for points with x = 0
///   Chart2: (x, y) -> (x, x y)
struct Chart {
  std::string name;
  Terms f;
  int x_component = -1;  // global boundary index of {x = 0}, or -1
  int y_component = -1;  // global boundary index of {y = 0}, or -1
  ChartKind kind = ChartKind::Root;
  int parent = -1;
  Elem cx = 0, cy = 0;
  bool active = true;
  std::vector<std::pair<Elem, Elem>> excluded;  // points handed to a copy
};

/// Rank one sheaf of a character of order p on a surface, given by
/// Artin-Schreier representatives on charts covering the wild locus.
struct RankOneData {
  FieldPtr field;
  chow::SurfaceModel model;
  chow::BoundaryDivisor boundary;
  std::vector<Chart> charts;
};

/// Removes p-th power leading terms along the boundary axes. Throws
/// InputError when f has a pole along an axis that is not a boundary component.
Terms reduce_representative(const exact::Field* K, const Chart& chart);

/// sw_i for every boundary component (0 where no chart sees a pole).
chow::Vec swan_divisor(const RankOneData& data);

/// rsw along one boundary axis of one chart: the residue part (coefficient of
/// d log t) and the transverse part, as polynomials in the axis coordinate
/// after the twist by O(D_chi).
struct RefinedSwan {
  int component = -1;
  int chart = -1;
  int axis = 0;  // 0: the axis {y = 0} with coordinate x; 1: {x = 0} with coordinate y
  std::int64_t sw = 0;
  exact::Poly residue;
  exact::Poly transverse;
};
std::vector<RefinedSwan> refined_swan(const RankOneData& data, int component);

/// Closed point of an axis of a chart.
struct ChartPoint {
  int chart = -1;
  int axis = 0;
  int degree = 1;  // residue degree over the base field
  Elem coord = 0;  // coordinate along the axis (over the base field when degree == 1)
  exact::Poly minimal;  // minimal polynomial of the coordinate
  std::string label;
};

struct Cleanness {
  bool clean = true;
  bool s_clean = true;
  bool residue_vanishes = false;  // residue part identically zero along the component
  std::vector<ChartPoint> not_clean;
  std::vector<ChartPoint> not_s_clean;
};
Cleanness cleanness(const RankOneData& data, int component);

struct BlowupStep {
  int round = 0;
  ChartPoint center;
  int exceptional = -1;  // new boundary index
  std::int64_t exceptional_sw = 0;
  std::vector<int> through;  // boundary components through the center
};
struct CleaningResult {
  RankOneData data;
  std::vector<BlowupStep> transcript;
  int rounds = 0;
};
/// Blows up the rational points where the sheaf is not s-clean, up to
/// max_rounds times. Throws InputError if the sheaf is not clean and
/// PrecisionError if it is still not s-clean after max_rounds.
CleaningResult blowup_clean(const RankOneData& data, int max_rounds = 3);

struct KatoClass {
  chow::KatoDegree degree;
  chow::Vec sw;
  std::vector<std::int64_t> per_component;  // -sw_i deg c_1(Coker rsw_i)
};
/// c_F from the Swan divisor; requires cleanness along every component.
KatoClass kato_c_class(const RankOneData& data);

}  // namespace swancalc::rank1
