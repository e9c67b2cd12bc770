#include "lpx/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lpx::io {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Locale-independent exact decimal parse of one scalar field.
double parse_double(std::string_view tok, const std::string& where) {
  // trim ascii whitespace
  while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t' || tok.front() == '\r')) {
    tok.remove_prefix(1);
  }
  while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) {
    tok.remove_suffix(1);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw std::invalid_argument("malformed number '" + std::string(tok) + "' in " + where);
  }
  return value;
}

std::vector<double> parse_csv_row(const std::string& line, const std::string& where) {
  std::vector<double> row;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view tok(line.data() + start,
                         (comma == std::string::npos ? line.size() : comma) - start);
    row.push_back(parse_double(tok, where));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return row;
}

}  // namespace

PointSet read_point_set_json(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("cells") || !doc.contains("points")) {
    throw std::invalid_argument(path + ": expected an object with p, cells, points");
  }
  if (!doc["p"].is_number()) throw std::invalid_argument(path + ": p must be a number");
  if (!doc["cells"].is_array() || !doc["points"].is_array()) {
    throw std::invalid_argument(path + ": cells and points must be arrays");
  }
  std::vector<double> cells;
  for (const auto& c : doc["cells"]) {
    if (!c.is_number()) throw std::invalid_argument(path + ": cells must be numeric");
    cells.push_back(c.get<double>());
  }
  std::vector<Point> pts;
  for (const auto& row : doc["points"]) {
    if (!row.is_array()) throw std::invalid_argument(path + ": each point must be an array");
    std::vector<double> coeffs;
    for (const auto& v : row) {
      if (!v.is_number()) throw std::invalid_argument(path + ": point entries must be numeric");
      coeffs.push_back(v.get<double>());
    }
    pts.emplace_back(std::move(coeffs));
  }
  return PointSet(WeightedSpace(doc["p"].get<double>(), std::move(cells)), std::move(pts));
}

PointSet read_point_set_csv(const std::string& path, double p, const std::vector<double>& cells) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool blank = true;
    for (char ch : line) {
      if (ch != ' ' && ch != '\t' && ch != '\r') blank = false;
    }
    if (blank || line[0] == '#') continue;
    pts.emplace_back(parse_csv_row(line, path + ":" + std::to_string(lineno)));
  }
  if (pts.empty()) throw std::invalid_argument(path + ": no points found");
  std::size_t dim = pts.front().dim();
  for (const Point& pt : pts) {
    if (pt.dim() != dim) {
      throw std::invalid_argument(path + ": rows have inconsistent column counts");
    }
  }
  std::vector<double> mu = cells.empty() ? std::vector<double>(dim, 1.0) : cells;
  return PointSet(WeightedSpace(p, std::move(mu)), std::move(pts));
}

PointSet read_point_set(const std::string& path, std::optional<double> p,
                        const std::vector<double>& cells) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    return read_point_set_json(path);
  }
  if (!p) {
    throw std::invalid_argument("CSV input needs --p (the exponent is not part of the file)");
  }
  return read_point_set_csv(path, *p, cells);
}

SimplexWeights read_weights(const std::string& path, std::size_t expected) {
  std::vector<double> w;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(slurp(path));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument(path + ": expected a JSON array of weights");
    for (const auto& v : doc) {
      if (!v.is_number()) throw std::invalid_argument(path + ": weights must be numeric");
      w.push_back(v.get<double>());
    }
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
      bool blank = true;
      for (char ch : line) {
        if (ch != ' ' && ch != '\t' && ch != '\r') blank = false;
      }
      if (!blank) {
        w = parse_csv_row(line, path);
        break;
      }
    }
  }
  if (w.size() != expected) {
    throw std::invalid_argument(path + ": got " + std::to_string(w.size()) + " weights, need " +
                                std::to_string(expected));
  }
  return SimplexWeights(std::move(w));
}

std::string point_set_to_json(const PointSet& set) {
  nlohmann::ordered_json doc;
  doc["schema"] = "1";
  doc["p"] = set.space().p();
  doc["cells"] = set.space().cells();
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (const Point& pt : set.points()) pts.push_back(pt.coeffs);
  doc["points"] = std::move(pts);
  return doc.dump(2) + "\n";
}

std::vector<double> parse_measure_list(const std::string& text) {
  std::vector<double> out = parse_csv_row(text, "--cells");
  for (double m : out) {
    if (!(m > 0.0)) throw std::invalid_argument("--cells entries must be > 0");
  }
  return out;
}

}  // namespace lpx::io
