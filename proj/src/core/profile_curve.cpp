#include "core/profile_curve.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "core/serialize.hpp"

namespace hrsurf {

using nlohmann::json;

const char* family_name(ProfileFamily f) {
  switch (f) {
    case ProfileFamily::RotationalEntire: return "rotational-entire";
    case ProfileFamily::RotationalCompact: return "rotational-compact";
    case ProfileFamily::ParabolicMinimal: return "parabolic-minimal";
    case ProfileFamily::ScrewFlat: return "screw-flat";
    case ProfileFamily::ScrewOde: return "screw-ode";
  }
  throw std::invalid_argument("family_name: unknown family");
}

ProfileFamily family_from_name(const std::string& name) {
  if (name == "rotational-entire") return ProfileFamily::RotationalEntire;
  if (name == "rotational-compact") return ProfileFamily::RotationalCompact;
  if (name == "parabolic-minimal") return ProfileFamily::ParabolicMinimal;
  if (name == "screw-flat") return ProfileFamily::ScrewFlat;
  if (name == "screw-ode") return ProfileFamily::ScrewOde;
  throw std::invalid_argument("profile: unknown family '" + name + "'");
}

void ProfileCurve::validate() const {
  if (n < 2) throw std::invalid_argument("ProfileCurve: need n >= 2");
  if (r < 1 || r > n) throw std::invalid_argument("ProfileCurve: need 1 <= r <= n");
  if (rows.size() < 2) throw std::invalid_argument("ProfileCurve: need at least 2 rows");
  if (!(domain_a < domain_b)) throw std::invalid_argument("ProfileCurve: empty domain");
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (!(rows[i].param < rows[i + 1].param))
      throw std::invalid_argument("ProfileCurve: params must be strictly increasing");
}

namespace {

std::string join_doubles(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out;
}

Vec split_doubles(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(item));
  return out;
}

// JSON has no representation for non-finite numbers; encode as null.
json encode_maybe(double v) {
  if (std::isfinite(v)) return json(v);
  return json(nullptr);
}

double decode_maybe(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

void write_profile_csv(const ProfileCurve& c, std::ostream& out) {
  c.validate();
  out << "# hrsurf profile\n";
  out << "# schema: 1\n";
  out << "# family: " << family_name(c.family) << "\n";
  out << "# param: " << c.param_name << "\n";
  out << "# n: " << c.n << "\n";
  out << "# r: " << c.r << "\n";
  out << "# target: " << (c.target_is_hr ? "H_r" : "S_r") << " " << format_double(c.target)
      << "\n";
  out << "# d: " << format_double(c.d) << "\n";
  out << "# c: " << format_double(c.c) << "\n";
  if (!c.l.empty()) out << "# l: " << join_doubles(c.l) << "\n";
  out << "# domain: " << format_double(c.domain_a) << " " << format_double(c.domain_b) << "\n";
  out << "# endpoint_singular: " << (c.endpoint_singular ? 1 : 0) << "\n";
  out << "# truncated: " << (c.truncated ? 1 : 0) << "\n";
  out << "param,lambda,dlambda,ddlambda\n";
  for (const ProfileRow& row : c.rows)
    out << format_double(row.param) << "," << format_double(row.lambda) << ","
        << format_double(row.dlambda) << "," << format_double(row.ddlambda) << "\n";
}

ProfileCurve read_profile_csv(std::istream& in) {
  ProfileCurve c;
  std::string line;
  while (in.peek() == '#') {
    std::getline(in, line);
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(1, colon - 1);
    std::string value = line.substr(colon + 1);
    auto strip = [](std::string& t) {
      while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.erase(t.begin());
      while (!t.empty() && (t.back() == ' ' || t.back() == '\r')) t.pop_back();
    };
    strip(key);
    strip(value);
    if (key == "family") {
      c.family = family_from_name(value);
    } else if (key == "param") {
      c.param_name = value;
    } else if (key == "n") {
      c.n = static_cast<int>(parse_double(value));
    } else if (key == "r") {
      c.r = static_cast<int>(parse_double(value));
    } else if (key == "target") {
      const auto space = value.find(' ');
      if (space == std::string::npos)
        throw std::invalid_argument("profile CSV: malformed target line");
      const std::string kind = value.substr(0, space);
      if (kind == "H_r")
        c.target_is_hr = true;
      else if (kind == "S_r")
        c.target_is_hr = false;
      else
        throw std::invalid_argument("profile CSV: unknown target kind '" + kind + "'");
      c.target = parse_double(value.substr(space + 1));
    } else if (key == "d") {
      c.d = parse_double(value);
    } else if (key == "c") {
      c.c = parse_double(value);
    } else if (key == "l") {
      c.l = split_doubles(value);
    } else if (key == "domain") {
      const auto space = value.find(' ');
      if (space == std::string::npos)
        throw std::invalid_argument("profile CSV: malformed domain line");
      c.domain_a = parse_double(value.substr(0, space));
      c.domain_b = parse_double(value.substr(space + 1));
    } else if (key == "endpoint_singular") {
      c.endpoint_singular = parse_double(value) != 0.0;
    } else if (key == "truncated") {
      c.truncated = parse_double(value) != 0.0;
    }
  }
  std::getline(in, line);  // column header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Vec cols = split_doubles(line);
    if (cols.size() != 4)
      throw std::invalid_argument("profile CSV: expected 4 columns per data row");
    c.rows.push_back({cols[0], cols[1], cols[2], cols[3]});
  }
  c.validate();
  return c;
}

void write_profile_json(const ProfileCurve& c, std::ostream& out) {
  c.validate();
  json j;
  j["schema"] = 1;
  j["kind"] = "profile-curve";
  j["family"] = family_name(c.family);
  j["param"] = c.param_name;
  j["n"] = c.n;
  j["r"] = c.r;
  j["target"] = {{"kind", c.target_is_hr ? "H_r" : "S_r"}, {"value", c.target}};
  j["d"] = c.d;
  j["c"] = c.c;
  j["l"] = c.l;
  j["domain"] = {c.domain_a, c.domain_b};
  j["endpoint_singular"] = c.endpoint_singular;
  j["truncated"] = c.truncated;
  json param = json::array(), lambda = json::array(), dlambda = json::array(),
       ddlambda = json::array();
  for (const ProfileRow& row : c.rows) {
    param.push_back(row.param);
    lambda.push_back(row.lambda);
    dlambda.push_back(encode_maybe(row.dlambda));
    ddlambda.push_back(encode_maybe(row.ddlambda));
  }
  j["rows"] = {{"param", param}, {"lambda", lambda}, {"dlambda", dlambda},
               {"ddlambda", ddlambda}};
  out << j.dump(2) << "\n";
}

ProfileCurve read_profile_json(std::istream& in) {
  json j = json::parse(in);
  if (j.value("kind", "") != "profile-curve")
    throw std::invalid_argument("profile JSON: kind mismatch");
  if (j.value("schema", 0) != 1) throw std::invalid_argument("profile JSON: unsupported schema");
  ProfileCurve c;
  c.family = family_from_name(j.at("family").get<std::string>());
  c.param_name = j.at("param").get<std::string>();
  c.n = j.at("n").get<int>();
  c.r = j.at("r").get<int>();
  c.target_is_hr = j.at("target").at("kind").get<std::string>() == "H_r";
  c.target = j.at("target").at("value").get<double>();
  c.d = j.at("d").get<double>();
  c.c = j.at("c").get<double>();
  c.l = j.at("l").get<Vec>();
  c.domain_a = j.at("domain").at(0).get<double>();
  c.domain_b = j.at("domain").at(1).get<double>();
  c.endpoint_singular = j.at("endpoint_singular").get<bool>();
  c.truncated = j.at("truncated").get<bool>();
  const json& rows = j.at("rows");
  const json& param = rows.at("param");
  const json& lambda = rows.at("lambda");
  const json& dlambda = rows.at("dlambda");
  const json& ddlambda = rows.at("ddlambda");
  for (std::size_t i = 0; i < param.size(); ++i)
    c.rows.push_back({param.at(i).get<double>(), lambda.at(i).get<double>(),
                      decode_maybe(dlambda.at(i)), decode_maybe(ddlambda.at(i))});
  c.validate();
  return c;
}

namespace {
bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

void write_profile(const ProfileCurve& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
  if (ends_with(path, ".json"))
    write_profile_json(c, out);
  else
    write_profile_csv(c, out);
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

ProfileCurve read_profile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open for reading: " + path);
  if (ends_with(path, ".json")) return read_profile_json(in);
  return read_profile_csv(in);
}

}  // namespace hrsurf
