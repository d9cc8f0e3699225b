#include "core/graph_sample.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "core/serialize.hpp"

namespace hrsurf {

using nlohmann::json;

std::size_t GraphSample::total() const {
  std::size_t t = 1;
  for (int c : counts) t *= static_cast<std::size_t>(c);
  return t;
}

std::size_t GraphSample::flat_index(const std::vector<int>& idx) const {
  std::size_t flat = 0;
  for (std::size_t a = 0; a < counts.size(); ++a)
    flat = flat * static_cast<std::size_t>(counts[a]) + static_cast<std::size_t>(idx[a]);
  return flat;
}

std::vector<int> GraphSample::multi_index(std::size_t flat) const {
  std::vector<int> idx(counts.size());
  for (std::size_t a = counts.size(); a-- > 0;) {
    idx[a] = static_cast<int>(flat % static_cast<std::size_t>(counts[a]));
    flat /= static_cast<std::size_t>(counts[a]);
  }
  return idx;
}

Vec GraphSample::point(const std::vector<int>& idx) const {
  Vec p(origin.size());
  for (std::size_t a = 0; a < origin.size(); ++a) p[a] = origin[a] + spacing[a] * idx[a];
  return p;
}

void GraphSample::validate() const {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  if (spec.n < 2) throw std::invalid_argument("GraphSample: need n >= 2");
  if (origin.size() != n || spacing.size() != n || counts.size() != n)
    throw std::invalid_argument("GraphSample: axis metadata does not match n");
  for (double h : spacing)
    if (!(h > 0.0)) throw std::invalid_argument("GraphSample: spacing must be positive");
  for (int c : counts)
    if (c < 1) throw std::invalid_argument("GraphSample: counts must be positive");
  if (values.size() != total())
    throw std::invalid_argument("GraphSample: value array does not match grid size");
  // Domain membership: the extreme corners decide for both models since the
  // constraints are monotone per axis, but checking all nodes is cheap enough
  // to be safe about it.
  for (std::size_t flat = 0; flat < total(); ++flat)
    if (!ambient::point_valid(spec, point(multi_index(flat))))
      throw std::domain_error("GraphSample: grid node outside the model domain");
}

GraphSample GraphSample::from_function(const ambient::AmbientSpec& spec, const Vec& origin,
                                       const Vec& spacing, const std::vector<int>& counts,
                                       const std::function<double(const Vec&)>& u) {
  GraphSample s;
  s.spec = spec;
  s.origin = origin;
  s.spacing = spacing;
  s.counts = counts;
  s.values.resize(s.total());
  s.validate();  // catches bad metadata before we evaluate u anywhere
  for (std::size_t flat = 0; flat < s.total(); ++flat)
    s.values[flat] = u(s.point(s.multi_index(flat)));
  return s;
}

namespace {

const char* model_name(ambient::Model m) {
  return m == ambient::Model::HalfSpace ? "half-space" : "ball";
}

ambient::Model model_from_name(const std::string& name) {
  if (name == "half-space") return ambient::Model::HalfSpace;
  if (name == "ball") return ambient::Model::Ball;
  throw std::invalid_argument("graph sample: unknown model '" + name + "'");
}

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

}  // namespace

void write_sample_csv(const GraphSample& s, std::ostream& out) {
  s.validate();
  out << "# hrsurf graph-sample\n";
  out << "# schema: 1\n";
  out << "# model: " << model_name(s.spec.model) << "\n";
  out << "# n: " << s.spec.n << "\n";
  out << "# origin: " << join_doubles(s.origin) << "\n";
  out << "# spacing: " << join_doubles(s.spacing) << "\n";
  out << "# counts: ";
  for (std::size_t a = 0; a < s.counts.size(); ++a) {
    if (a) out << ',';
    out << s.counts[a];
  }
  out << "\n";
  for (int a = 1; a <= s.spec.n; ++a) out << "x_" << a << ",";
  out << "u\n";
  for (std::size_t flat = 0; flat < s.total(); ++flat) {
    const Vec p = s.point(s.multi_index(flat));
    for (double c : p) out << format_double(c) << ",";
    out << format_double(s.values[flat]) << "\n";
  }
}

void write_sample_json(const GraphSample& s, std::ostream& out) {
  s.validate();
  json j;
  j["schema"] = 1;
  j["kind"] = "graph-sample";
  j["model"] = model_name(s.spec.model);
  j["n"] = s.spec.n;
  j["origin"] = s.origin;
  j["spacing"] = s.spacing;
  j["counts"] = s.counts;
  j["values"] = s.values;
  out << j.dump(2) << "\n";
}

GraphSample read_sample_csv(std::istream& in) {
  GraphSample s;
  bool have_model = false, have_n = false, have_origin = false, have_spacing = false,
       have_counts = false;
  std::string line;
  // header block
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
    if (key == "model") {
      s.spec.model = model_from_name(value);
      have_model = true;
    } else if (key == "n") {
      s.spec.n = static_cast<int>(parse_double(value));
      have_n = true;
    } else if (key == "origin") {
      s.origin = split_doubles(value);
      have_origin = true;
    } else if (key == "spacing") {
      s.spacing = split_doubles(value);
      have_spacing = true;
    } else if (key == "counts") {
      for (double c : split_doubles(value)) s.counts.push_back(static_cast<int>(c));
      have_counts = true;
    }
  }
  if (!(have_model && have_n && have_origin && have_spacing && have_counts))
    throw std::invalid_argument(
        "graph sample CSV: missing header block (model, n, origin, spacing, counts)");

  std::getline(in, line);  // column header
  s.values.reserve(s.total());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Vec row = split_doubles(line);
    if (static_cast<int>(row.size()) != s.spec.n + 1)
      throw std::invalid_argument("graph sample CSV: wrong column count in data row");
    s.values.push_back(row.back());
  }
  s.validate();
  return s;
}

GraphSample read_sample_json(std::istream& in) {
  json j = json::parse(in);
  GraphSample s;
  if (j.value("kind", "") != "graph-sample")
    throw std::invalid_argument("graph sample JSON: kind mismatch");
  if (j.value("schema", 0) != 1)
    throw std::invalid_argument("graph sample JSON: unsupported schema");
  s.spec.model = model_from_name(j.at("model").get<std::string>());
  s.spec.n = j.at("n").get<int>();
  s.origin = j.at("origin").get<Vec>();
  s.spacing = j.at("spacing").get<Vec>();
  s.counts = j.at("counts").get<std::vector<int>>();
  s.values = j.at("values").get<Vec>();
  s.validate();
  return s;
}

namespace {
bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}
}  // namespace

void write_sample(const GraphSample& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open for writing: " + path);
  if (ends_with(path, ".json"))
    write_sample_json(s, out);
  else
    write_sample_csv(s, out);
  if (!out) throw std::ios_base::failure("write failed: " + path);
}

GraphSample read_sample(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open for reading: " + path);
  if (ends_with(path, ".json")) return read_sample_json(in);
  return read_sample_csv(in);
}

}  // namespace hrsurf
