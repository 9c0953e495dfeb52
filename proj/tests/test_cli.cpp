#include <cli/cli.hpp>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using inclab::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Every numeric field and numeric array outside the check list has a
// "<name>_tol" sibling.
void require_tolerances(const Json& j, const std::string& path) {
  if (!j.is_object()) return;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "checks") continue;
    if (key.size() > 4 && key.substr(key.size() - 4) == "_tol") continue;
    const bool table = it->is_array() && !it->empty() && it->front().is_object();
    if (it->is_number() || (it->is_array() && !table)) {
      INFO(path << "." << key);
      CHECK(j.contains(key + "_tol"));
    }
    if (it->is_array()) {
      for (const auto& e : *it) require_tolerances(e, path + "." + key);
    } else {
      require_tolerances(*it, path + "." + key);
    }
  }
}

void require_17_digits(const std::string& text) {
  static const std::regex number("-?[0-9]+\\.[0-9]+(e[-+][0-9]+)?");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it) {
    std::string mantissa = it->str();
    mantissa = mantissa.substr(0, mantissa.find('e'));
    std::string digits;
    for (char c : mantissa) {
      if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
    }
    const auto lead = digits.find_first_not_of('0');
    if (lead != std::string::npos) digits.erase(0, lead);
    INFO(it->str());
    CHECK(digits.size() == 17);
  }
}

}  // namespace

TEST_CASE("pt on an ellipse passes and is byte-identical across runs") {
  const Outcome a = invoke({"pt", "--shape", "ellipse:2,1", "--k", "3"});
  const Outcome b = invoke({"pt", "--shape", "ellipse:2,1", "--k", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Json j = Json::parse(a.out);
  CHECK(j["M"].size() == 2);
  CHECK(j["pass"] == true);
  require_tolerances(j, "pt");
  require_17_digits(a.out);
}

TEST_CASE("bounds report field order") {
  const Outcome o = invoke({"bounds", "--shape", "square", "--k", "0.5"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  const std::vector<std::string> expected = {"tr_M",       "tr_Minv_scaled", "bound1_rhs", "bound2_rhs",
                                             "slack1",     "slack2",         "saturated1", "saturated2"};
  std::size_t pos = 0;
  for (const auto& name : expected) {
    const auto it = std::find(keys.begin() + static_cast<std::ptrdiff_t>(pos), keys.end(), name);
    INFO(name);
    REQUIRE(it != keys.end());
    pos = static_cast<std::size_t>(it - keys.begin());
  }
  CHECK(j["form"] == "normalized");
  CHECK(j["saturated2"] == false);
  require_tolerances(j, "bounds");
}

TEST_CASE("every json command carries tolerances") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"newtonian", "--shape", "ellipse:2,1"},
           {"hodograph", "--shape", "ellipse:2,1"},
           {"eshelby", "--shape", "ellipse:2,1", "--format", "json"},
           {"pt", "--shape", "ellipsoid:2,1.5,1", "--k", "0.5"},
           {"elastic-identity", "--n", "64"}}) {
    const Outcome o = invoke(args);
    INFO(args.front());
    CHECK(o.code == 0);
    require_tolerances(Json::parse(o.out), args.front());
  }
}

TEST_CASE("eshelby csv columns") {
  const Outcome o = invoke({"eshelby", "--shape", "square", "--k", "2,5", "--format", "csv"});
  CHECK(o.code == 0);
  std::istringstream lines(o.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "shape,k,direction,mean_gx,mean_gy,delta");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
  }
  CHECK(rows == 4);
}

TEST_CASE("configuration errors exit 2 and name the field") {
  struct Case {
    std::vector<std::string> args;
    std::string field;
  };
  for (const Case& c : std::vector<Case>{
           {{"pt", "--shape", "ellipse:2,1", "--k", "1"}, "k"},
           {{"pt", "--shape", "ellipse:2,1", "--k", "-3"}, "k"},
           {{"pt", "--shape", "blob:1"}, "shape"},
           {{"pt", "--shape", "ellipse:2"}, "shape"},
           {{"pt", "--shape", "ellipse:-2,1"}, "shape"},
           {{"pt", "--shape", "cube"}, "shape"},
           {{"pt"}, "shape"},
           {{"pt", "--shape", "disk", "--n", "4"}, "n"},
           {{"pt", "--shape", "disk", "--format", "xml"}, "format"},
           {{"pt", "--shape", "disk", "--tol", "-1"}, "tol"},
           {{"eshelby", "--shape", "cube"}, "shape"},
           {{"elastic-identity", "--lame", "2,-1,1,0.5"}, "lame: ellipticity"},
           {{"elastic-identity", "--lame", "2,1,3,0.5"}, "lame: ordering"},
           {{"elastic-identity", "--lame", "2,1"}, "lame"},
           {{"hodograph", "--shape", "square"}, "shape"},
           {{"shapeopt", "--k", "0.5"}, "k"},
           {{"shapeopt", "--start", "5,0"}, "start"},
           {{"suite", "--only", "99"}, "only"},
       }) {
    const Outcome o = invoke(c.args);
    INFO(c.args.front() << " -> " << o.err);
    CHECK(o.code == 2);
    CHECK(o.err.find("error: " + c.field) == 0);
  }
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"pt", "--bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("failed checks exit 1") {
  const Outcome o = invoke({"pt", "--shape", "ellipse:2,1", "--k", "3", "--tol", "1e-30"});
  CHECK(o.code == 1);
  CHECK(Json::parse(o.out)["pass"] == false);
}

TEST_CASE("shapes from json files") {
  const auto path = std::filesystem::temp_directory_path() / "inclab_cli_shape.json";
  std::ofstream(path) << R"({"type": "ellipse", "a": 2, "b": 1})";
  const Outcome file = invoke({"pt", "--shape", "@" + path.string(), "--k", "3"});
  const Outcome inline_spec = invoke({"pt", "--shape", "ellipse:2,1", "--k", "3"});
  CHECK(file.code == 0);
  CHECK(file.out == inline_spec.out);
  std::ofstream(path) << R"({"type": "ellipse", "a": "two", "b": 1})";
  CHECK(invoke({"pt", "--shape", "@" + path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(invoke({"pt", "--shape", "@/nonexistent/shape.json"}).code == 2);
}

TEST_CASE("shapeopt writes a jsonl trace and an svg overlay") {
  const auto dir = std::filesystem::temp_directory_path() / "inclab_cli_shapeopt";
  std::filesystem::remove_all(dir);
  const Outcome o = invoke({"shapeopt", "--max-mode", "3", "--n", "128", "--start", "0.1,0.05", "--out", dir.string()});
  CHECK(o.code == 0);
  std::istringstream lines(o.out);
  std::vector<Json> records;
  for (std::string line; std::getline(lines, line);) records.push_back(Json::parse(line));
  REQUIRE(records.size() >= 2);
  CHECK(records.front().contains("iteration"));
  CHECK(records.back()["final"] == true);
  CHECK(records.back()["pass"] == true);
  std::ifstream trace(dir / "shapeopt_trace.jsonl");
  std::stringstream saved;
  saved << trace.rdbuf();
  CHECK(saved.str() == o.out);
  std::ifstream svg(dir / "shapeopt_overlay.svg");
  std::stringstream svg_text;
  svg_text << svg.rdbuf();
  CHECK(svg_text.str().find("viewBox=") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("suite runs a selected criterion") {
  const Outcome o = invoke({"suite", "--only", "4"});
  CHECK(o.code == 0);
  CHECK(o.out.find("[PASS] 04") == 0);
}

TEST_CASE("reference cases: pt and bounds") {
  const Json pt = Json::parse(invoke({"pt", "--shape", "ellipse:2,1", "--k", "3"}).out);
  CHECK(pt["M"][0][0].get<double>() == doctest::Approx(pt["closed_form_M"][0][0].get<double>()).epsilon(1e-6));
  CHECK(pt["M"][1][1].get<double>() == doctest::Approx(pt["closed_form_M"][1][1].get<double>()).epsilon(1e-6));
  const Outcome b = invoke({"bounds", "--shape", "disk", "--k", "3"});
  CHECK(b.code == 0);
  const Json j = Json::parse(b.out);
  CHECK(j["saturated2"] == true);
  CHECK(std::abs(j["slack2"].get<double>()) <= 1e-8);
}
