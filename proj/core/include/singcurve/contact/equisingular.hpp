#pragma once

#include <string>
#include <vector>

#include "singcurve/contact/intersection.hpp"

namespace singcurve::contact {

struct CurveData {
  std::vector<PuiseuxChar> chars;
  Matrix matrix;
};

CurveData curve_data(FieldContext& ctx, const puiseux::Curve& c);

struct EquisingularResult {
  bool equisingular = false;
  // branch i of the second curve corresponds to branch witness[i] of the first
  std::vector<int> witness;
  std::string reason;
};

EquisingularResult equisingular(const CurveData& a, const CurveData& b);
EquisingularResult equisingular(FieldContext& ctx, const puiseux::Curve& a, const puiseux::Curve& b);

}  // namespace singcurve::contact
