#include "cevian/report.hpp"

#include <fstream>
#include <sstream>

#include "cevian/error.hpp"

namespace cevian {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw GeometryError(ErrorCode::ParseError, what); }

Rat rational_field(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const GeometryError&) {
    parse_error(where + ": \"" + j.get<std::string>() + "\" is not a rational");
  }
}

std::vector<Rat> rational_list(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array() || j.size() != size) parse_error(where + ": expected " + std::to_string(size) + " rationals");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < size; ++i) out.push_back(rational_field(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object() || !j.contains(name)) parse_error(where + ": missing \"" + name + "\"");
  return j.at(name);
}

Json rationals(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(to_string(x));
  return out;
}

Json cartesian_json(const CartesianPoint& p) { return rationals({p.x, p.y}); }

Json matrix_json(const Mat3& m) {
  Json out = Json::array();
  for (const Vec3& row : m) {
    Json r = Json::array();
    for (const Int& x : row) r.push_back(x.get_str());
    out.push_back(r);
  }
  return out;
}

Json object_json(const CevianConfig& cfg, const DerivedObject& obj) {
  return std::visit(
      [&](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ProjPoint>) {
          Json j = point_json(cfg, x);
          j["kind"] = "point";
          return j;
        } else if constexpr (std::is_same_v<T, ProjMap>) {
          return {{"kind", "map"}, {"matrix", matrix_json(x.matrix())}};
        } else if constexpr (std::is_same_v<T, Conic>) {
          return {{"kind", "conic"},
                  {"barycentric", matrix_json(x.matrix())},
                  {"cartesian", matrix_json(cfg.frame().to_cartesian(x).matrix())}};
        } else if constexpr (std::is_same_v<T, LineInvolution>) {
          Json action = Json::array();
          for (const Int& a : x.action()) action.push_back(a.get_str());
          return {{"kind", "involution"}, {"line", x.base_line().str()}, {"action", action}};
        } else {
          return {{"kind", "blocked"}, {"reason", x.reason}};
        }
      },
      obj);
}

}  // namespace

ConfigInput parse_config(const Json& j) {
  if (!j.is_object()) parse_error("config: expected an object");
  if (field(j, "schema", "config") != kConfigSchema) parse_error(std::string("config: schema must be ") + kConfigSchema);
  ConfigInput in;
  const Json& tri = field(j, "triangle", "config");
  const char* names[3] = {"A", "B", "C"};
  for (int i = 0; i < 3; ++i) {
    const auto xy = rational_list(field(tri, names[i], "triangle"), 2, std::string("triangle.") + names[i]);
    in.triangle[i] = {xy[0], xy[1]};
  }
  const Json& p = field(j, "P", "config");
  const Json& mode = field(p, "mode", "P");
  if (mode == "cartesian") {
    in.mode = ConfigInput::Mode::Cartesian;
    in.coords = rational_list(field(p, "coords", "P"), 2, "P.coords");
  } else if (mode == "barycentric") {
    in.mode = ConfigInput::Mode::Barycentric;
    in.coords = rational_list(field(p, "coords", "P"), 3, "P.coords");
  } else {
    parse_error("P.mode: expected \"cartesian\" or \"barycentric\"");
  }
  if (j.contains("perturb")) {
    const Json& q = j.at("perturb");
    const Json& obj = field(q, "object", "perturb");
    if (!obj.is_string()) parse_error("perturb.object: expected a name");
    const auto d = rational_list(field(q, "offset", "perturb"), 2, "perturb.offset");
    in.perturb = Perturbation{obj.get<std::string>(), d[0], d[1]};
  }
  return in;
}

ConfigInput load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) parse_error("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::exception& e) {
    parse_error(path + ": " + e.what());
  }
  return parse_config(j);
}

Json to_json(const ConfigInput& in) {
  Json j;
  j["schema"] = kConfigSchema;
  j["triangle"] = {{"A", cartesian_json(in.triangle[0])},
                   {"B", cartesian_json(in.triangle[1])},
                   {"C", cartesian_json(in.triangle[2])}};
  j["P"] = {{"mode", in.mode == ConfigInput::Mode::Cartesian ? "cartesian" : "barycentric"}, {"coords", rationals(in.coords)}};
  if (in.perturb)
    j["perturb"] = {{"object", in.perturb->object}, {"offset", rationals({in.perturb->dx, in.perturb->dy})}};
  return j;
}

CevianConfig build_config(const ConfigInput& in) {
  const TriangleFrame frame(in.triangle[0], in.triangle[1], in.triangle[2]);
  CevianConfig cfg = in.mode == ConfigInput::Mode::Cartesian
                         ? CevianConfig::derive(frame, CartesianPoint{in.coords[0], in.coords[1]})
                         : CevianConfig::derive(frame, ProjPoint(integerize(in.coords[0], in.coords[1], in.coords[2])));
  if (in.perturb) cfg = cfg.perturbed(in.perturb->object, in.perturb->dx, in.perturb->dy);
  return cfg;
}

Vec3 parse_triple(const std::string& text) {
  const auto fail = [&] { parse_error("malformed homogeneous triple \"" + text + "\""); };
  if (text.size() < 2) fail();
  const bool point = text.front() == '(' && text.back() == ')';
  const bool line = text.front() == '[' && text.back() == ']';
  if (!point && !line) fail();
  std::istringstream in(text.substr(1, text.size() - 2));
  Vec3 v;
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, part, ':')) fail();
    const Rat r = parse_rational(part);
    if (r.get_den() != 1) fail();
    v[i] = r.get_num();
  }
  if (std::getline(in, part, ':')) fail();
  return v;
}

Json point_json(const CevianConfig& cfg, const ProjPoint& p) {
  const auto c = cfg.frame().cartesian(p);
  return {{"barycentric", p.str()}, {"cartesian", c ? cartesian_json(*c) : Json(nullptr)}};
}

Json result_json(const CheckResult& r) {
  Json j{{"id", r.id}, {"status", std::string(to_string(r.status))}};
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (r.status == CheckStatus::Fail) j["witness"] = {{"equality", r.witness.equality}, {"objects", r.witness.objects}};
  return j;
}

Json config_report(const ConfigInput& in, const CevianConfig& cfg, const std::vector<CheckResult>& checks) {
  Json j;
  j["schema"] = kReportSchema;
  j["config"] = to_json(in);
  Json guards = Json::object();
  for (const Guard g : kAllGuards) guards[std::string(guard_name(g))] = cfg.flag(g);
  j["guards"] = guards;
  Json objects = Json::object();
  for (const auto& [name, obj] : cfg.objects()) objects[name] = object_json(cfg, obj);
  j["objects"] = objects;
  Json results = Json::array();
  for (const CheckResult& r : checks) results.push_back(result_json(r));
  j["checks"] = results;
  return j;
}

Json suite_json(const SuiteReport& report) {
  Json j;
  j["schema"] = kFuzzSchema;
  j["seed"] = report.seed;
  j["count"] = report.count;
  j["bound"] = report.bound;
  j["filter"] = report.filter;
  j["triangle"] = {{"A", cartesian_json(report.triangle[0])},
                   {"B", cartesian_json(report.triangle[1])},
                   {"C", cartesian_json(report.triangle[2])}};
  Json configs = Json::array();
  for (const ConfigRun& run : report.configs) {
    Json results = Json::array();
    for (const CheckResult& r : run.results) results.push_back(result_json(r));
    configs.push_back({{"index", run.index}, {"P", run.p.str()}, {"results", results}});
  }
  j["configs"] = configs;
  Json summary = Json::object();
  for (const auto& [id, t] : report.summary) summary[id] = {{"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  j["summary"] = summary;
  j["failures"] = report.failures();
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cevian
