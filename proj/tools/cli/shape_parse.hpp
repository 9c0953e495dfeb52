#pragma once

#include <inclab/geometry.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace inclab::cli {

/// Parses an inline spec `type[:p1,p2,...]` or `@file.json`. Throws
/// ConfigError("shape", ...) on malformed input or an invalid shape.
///
/// Inline forms:
///   disk[:r]  circle[:r]  ellipse:a,b[,cx,cy,rotation]  square  kite
///   polygon:x1,y1,x2,y2,...  star:r0,m,eps,delta[,m,eps,delta...]
///   sphere[:r]  ellipsoid:c1,c2,c3  cube  cuboid:h1,h2,h3
ShapeSpec parse_shape(const std::string& text);

/// JSON form {"type": ..., parameters}; see README for the schema.
ShapeSpec shape_from_json(const nlohmann::json& j);

}  // namespace inclab::cli
