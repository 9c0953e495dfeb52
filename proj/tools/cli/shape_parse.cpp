#include "shape_parse.hpp"

#include <inclab/errors.hpp>

#include <fstream>
#include <sstream>
#include <vector>

namespace inclab::cli {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError("shape", what); }

std::vector<double> numbers(const std::string& list) {
  std::vector<double> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) fail("trailing characters in number '" + item + "'");
    } catch (const std::logic_error&) {
      fail("cannot parse number '" + item + "'");
    }
  }
  return out;
}

void arity(const std::string& type, const std::vector<double>& p, std::size_t lo, std::size_t hi) {
  if (p.size() < lo || p.size() > hi) {
    fail(type + " expects " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters, got " +
         std::to_string(p.size()));
  }
}

ShapeSpec checked(ShapeSpec s) {
  try {
    validate(s);
  } catch (const InvalidShapeError& e) {
    fail(e.what());
  }
  return s;
}

double field(const nlohmann::json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) fail(std::string("field '") + key + "' must be a number");
  return j.at(key).get<double>();
}

double required(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  return field(j, key, 0.0);
}

}  // namespace

ShapeSpec parse_shape(const std::string& text) {
  if (text.empty()) fail("empty shape specification");
  if (text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) fail("cannot open " + text.substr(1));
    nlohmann::json j;
    try {
      in >> j;
      return shape_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      fail(std::string("malformed JSON: ") + e.what());
    }
  }
  const auto colon = text.find(':');
  const std::string type = text.substr(0, colon);
  const std::vector<double> p = colon == std::string::npos ? std::vector<double>{} : numbers(text.substr(colon + 1));

  if (type == "disk" || type == "circle") {
    arity(type, p, 0, 1);
    return checked(make_disk(p.empty() ? 1.0 : p[0]));
  }
  if (type == "ellipse") {
    arity(type, p, 2, 5);
    Ellipse e{p[0], p[1]};
    if (p.size() >= 4) e.center = Eigen::Vector2d(p[2], p[3]);
    if (p.size() == 5) e.rotation = p[4];
    if (p.size() == 3) fail("ellipse center needs both coordinates");
    return checked(e);
  }
  if (type == "square") {
    arity(type, p, 0, 0);
    return make_unit_square();
  }
  if (type == "kite") {
    arity(type, p, 0, 0);
    return make_kite();
  }
  if (type == "polygon") {
    if (p.size() < 6 || p.size() % 2 != 0) fail("polygon needs an even number (>= 6) of coordinates");
    Polygon poly;
    for (std::size_t i = 0; i < p.size(); i += 2) poly.vertices.emplace_back(p[i], p[i + 1]);
    return checked(poly);
  }
  if (type == "star") {
    if (p.size() < 4 || (p.size() - 1) % 3 != 0) fail("star expects r0 followed by (m,eps,delta) triples");
    FourierStar s{p[0], {}};
    for (std::size_t i = 1; i < p.size(); i += 3) {
      if (p[i] != static_cast<int>(p[i])) fail("star mode index must be an integer");
      s.modes.push_back({static_cast<int>(p[i]), p[i + 1], p[i + 2]});
    }
    return checked(s);
  }
  if (type == "sphere") {
    arity(type, p, 0, 1);
    const double r = p.empty() ? 1.0 : p[0];
    return checked(Ellipsoid{r, r, r});
  }
  if (type == "ellipsoid") {
    arity(type, p, 3, 3);
    return checked(Ellipsoid{p[0], p[1], p[2]});
  }
  if (type == "cube") {
    arity(type, p, 0, 0);
    return make_unit_cube();
  }
  if (type == "cuboid") {
    arity(type, p, 3, 3);
    return checked(Cuboid{p[0], p[1], p[2]});
  }
  fail("unknown shape type '" + type + "'");
}

ShapeSpec shape_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) fail("JSON shape needs a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "disk" || type == "circle") return checked(make_disk(field(j, "r", 1.0)));
  if (type == "ellipse") {
    Ellipse e{required(j, "a"), required(j, "b")};
    if (j.contains("center")) {
      const auto& c = j.at("center");
      if (!c.is_array() || c.size() != 2) fail("'center' must be a 2-element array");
      e.center = Eigen::Vector2d(c[0].get<double>(), c[1].get<double>());
    }
    e.rotation = field(j, "rotation", 0.0);
    return checked(e);
  }
  if (type == "square") return make_unit_square();
  if (type == "kite") return make_kite();
  if (type == "polygon") {
    if (!j.contains("vertices") || !j.at("vertices").is_array()) fail("polygon needs a 'vertices' array");
    Polygon poly;
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2) fail("each vertex must be a 2-element array");
      poly.vertices.emplace_back(v[0].get<double>(), v[1].get<double>());
    }
    return checked(poly);
  }
  if (type == "star") {
    FourierStar s{field(j, "r0", 1.0), {}};
    if (j.contains("modes")) {
      for (const auto& m : j.at("modes")) {
        if (!m.contains("m") || !m.at("m").is_number_integer()) fail("each mode needs an integer 'm'");
        s.modes.push_back({m.at("m").get<int>(), field(m, "cos", 0.0), field(m, "sin", 0.0)});
      }
    }
    return checked(s);
  }
  if (type == "sphere") {
    const double r = field(j, "r", 1.0);
    return checked(Ellipsoid{r, r, r});
  }
  if (type == "ellipsoid") return checked(Ellipsoid{required(j, "c1"), required(j, "c2"), required(j, "c3")});
  if (type == "cube") return make_unit_cube();
  if (type == "cuboid") return checked(Cuboid{required(j, "h1"), required(j, "h2"), required(j, "h3")});
  fail("unknown shape type '" + type + "'");
}

}  // namespace inclab::cli
