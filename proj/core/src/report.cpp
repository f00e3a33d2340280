#include "bcnoma/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace bcnoma::report {
namespace {

constexpr const char* kHeader = "swept_param,value,metric,engine,mean,std_error";

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits RFC-4180 records; quoted fields may hold commas, quotes and newlines.
std::vector<std::vector<std::string>> records(std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> rec;
  std::string cur;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      rec.push_back(std::move(cur));
      cur.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !cur.empty()) {
        rec.push_back(std::move(cur));
        out.push_back(std::move(rec));
      }
      rec.clear();
      cur.clear();
      any = false;
    } else {
      cur += c;
      any = true;
    }
  }
  if (quoted) throw std::invalid_argument("CSV ends inside a quoted field");
  if (any || !cur.empty()) {
    rec.push_back(std::move(cur));
    out.push_back(std::move(rec));
  }
  return out;
}

double parse_number(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("bad number in CSV: '" + s + "'");
  return v;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << body;
  out.flush();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string to_csv(const experiment::SweepResult& result) {
  std::string out = kHeader;
  out += '\n';
  for (const auto& r : result.rows) {
    out += field(r.swept_param) + ',' + number(r.value) + ',' + field(r.metric) + ',' + field(r.engine) + ',' +
           number(r.mean) + ',' + number(r.std_error) + '\n';
  }
  return out;
}

experiment::SweepResult parse_csv(std::string_view text) {
  const auto recs = records(text);
  if (recs.empty()) throw std::invalid_argument("CSV has no header");
  std::string header;
  for (std::size_t i = 0; i < recs[0].size(); ++i) header += (i ? "," : "") + recs[0][i];
  if (header != kHeader) throw std::invalid_argument("unexpected CSV header: " + header);
  experiment::SweepResult res;
  for (std::size_t i = 1; i < recs.size(); ++i) {
    const auto& f = recs[i];
    if (f.size() != 6) throw std::invalid_argument("CSV row " + std::to_string(i) + " has " +
                                                   std::to_string(f.size()) + " fields");
    res.rows.push_back({f[0], parse_number(f[1]), f[2], f[3], parse_number(f[4]), parse_number(f[5])});
  }
  return res;
}

std::string to_svg(const experiment::SweepResult& result, const std::string& title) {
  const double w = 720, h = 440, left = 70, right = 220, top = 40, bottom = 50;
  std::map<std::string, std::vector<std::pair<double, double>>> lines;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& r : result.rows) {
    if (!std::isfinite(r.value) || !std::isfinite(r.mean)) continue;
    lines[r.metric + " (" + r.engine + ")"].emplace_back(r.value, r.mean);
    x0 = std::min(x0, r.value);
    x1 = std::max(x1, r.value);
    y0 = std::min(y0, r.mean);
    y1 = std::max(y1, r.mean);
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    os << "<text x=\"" << w / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
       << escape_xml(title) << "</text>\n";
  if (lines.empty()) {
    os << "</svg>\n";
    return os.str();
  }
  // Positive grids spanning more than two decades read better on a log axis.
  const bool logx = x0 > 0 && x1 / x0 > 100.0;
  auto tx = [&](double x) { return logx ? std::log10(x) : x; };
  const double a = tx(x0), b = tx(x1) > tx(x0) ? tx(x1) : tx(x0) + 1;
  if (!(y1 > y0)) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double pw = w - left - right, ph = h - top - bottom;
  auto px = [&](double x) { return left + (tx(x) - a) / (b - a) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - y0) / (y1 - y0)) * ph; };
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  char buf[64];
  for (int i = 0; i <= 4; ++i) {
    const double fy = y0 + (y1 - y0) * i / 4, fx = a + (b - a) * i / 4;
    std::snprintf(buf, sizeof buf, "%.4g", fy);
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(fy) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
    std::snprintf(buf, sizeof buf, "%.4g", logx ? std::pow(10.0, fx) : fx);
    os << "<text x=\"" << left + (fx - a) / (b - a) * pw << "\" y=\"" << top + ph + 16
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
  }
  if (!result.rows.empty())
    os << "<text x=\"" << left + pw / 2 << "\" y=\"" << h - 10
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << escape_xml(result.rows.front().swept_param) << (logx ? " (log)" : "") << "</text>\n";
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  int k = 0;
  for (auto& [name, pts] : lines) {
    std::sort(pts.begin(), pts.end());
    const char* col = colors[k % 10];
    const bool dashed = name.find("(montecarlo)") != std::string::npos;
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\""
       << (dashed ? " stroke-dasharray=\"5,3\"" : "") << " points=\"";
    for (const auto& [x, y] : pts) os << px(x) << ',' << py(y) << ' ';
    os << "\"/>\n";
    const double ly = top + 14.0 * k + 8;
    os << "<line x1=\"" << w - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << w - right + 30 << "\" y2=\"" << ly
       << "\" stroke=\"" << col << "\"" << (dashed ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    os << "<text x=\"" << w - right + 34 << "\" y=\"" << ly + 4 << "\" font-family=\"sans-serif\" font-size=\"10\">"
       << escape_xml(name) << "</text>\n";
    ++k;
  }
  os << "</svg>\n";
  return os.str();
}

void emit_csv(const experiment::SweepResult& result, const std::filesystem::path& path) {
  write_file(path, to_csv(result));
}

void emit_svg(const experiment::SweepResult& result, const std::filesystem::path& path, const std::string& title) {
  write_file(path, to_svg(result, title));
}

}  // namespace bcnoma::report
