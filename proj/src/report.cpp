#include "padeloc/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "padeloc/errors.hpp"

namespace padeloc {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    auto item = s.substr(0, pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t' || item.back() == '\r')) {
      item.remove_suffix(1);
    }
    out.push_back(item);
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

bool parse_double(std::string_view s, double& v) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
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

std::string fixed(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                       std::chars_format::fixed, 2);
  return std::string(buf.data(), ptr);
}

constexpr std::array<std::string_view, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string format_csv(std::span<const PowerRow> rows) {
  if (rows.empty()) throw DomainError("format_csv: no rows");
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_number(r.alpha) + ',' + format_number(r.snr) + ',' + format_number(r.xi_re) +
           ',' + format_number(r.xi_im) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.reps) + ',' + format_number(r.beta) + ',' + r.statistic + ',' +
           r.test + ',' + r.mode + ',' + format_number(r.power) + ',' +
           format_number(r.mc_stderr) + ',' + std::to_string(r.discarded) + ',' +
           std::to_string(r.seed) + '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

void emit_csv(std::span<const PowerRow> rows, const std::filesystem::path& path) {
  write_text_file(path, format_csv(rows));
}

std::string render_svg(std::span<const PowerRow> rows, const SvgOptions& options) {
  if (rows.empty()) throw DomainError("render_svg: no rows");
  // series keyed by (statistic, test) in first-appearance order
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& r : rows) {
    if (!(r.snr > 0.0)) continue;
    const std::string key = r.statistic + " / " + r.test;
    if (!series.count(key)) order.push_back(key);
    series[key].emplace_back(r.snr, r.power);
    lo = std::min(lo, r.snr);
    hi = std::max(hi, r.snr);
  }
  for (const auto& [x, y] : options.reference) {
    if (x > 0.0) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (order.empty()) throw DomainError("render_svg: no row with snr > 0");

  double xmin = std::floor(std::log10(lo));
  double xmax = std::ceil(std::log10(hi));
  if (xmax <= xmin) xmax = xmin + 1.0;

  constexpr double W = 720, H = 460, L = 70, R = 200, T = 40, B = 60;
  const double pw = W - L - R;
  const double ph = H - T - B;
  auto sx = [&](double snr) { return L + (std::log10(snr) - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double p) { return T + (1.0 - p) * ph; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
    << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << L + pw / 2 << "\" y=\"" << T - 15
    << "\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(options.title) << "</text>\n";
  s << "<g id=\"axes\" stroke=\"black\" fill=\"none\" data-ymin=\"0\" data-ymax=\"1\">\n";
  s << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << pw << "\" height=\"" << ph
    << "\"/>\n</g>\n";

  s << "<g id=\"yticks\" font-size=\"11\">\n";
  for (int i = 0; i <= 4; ++i) {
    const double p = 0.25 * i;
    s << "<line x1=\"" << L - 5 << "\" x2=\"" << L + pw << "\" y1=\"" << fixed(sy(p))
      << "\" y2=\"" << fixed(sy(p)) << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << L - 8 << "\" y=\"" << fixed(sy(p) + 4) << "\" text-anchor=\"end\">"
      << format_number(p) << "</text>\n";
  }
  s << "</g>\n<g id=\"xticks\" font-size=\"11\">\n";
  for (int e = static_cast<int>(xmin); e <= static_cast<int>(xmax); ++e) {
    const double x = sx(std::pow(10.0, e));
    s << "<line x1=\"" << fixed(x) << "\" x2=\"" << fixed(x) << "\" y1=\"" << T << "\" y2=\""
      << T + ph + 5 << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << fixed(x) << "\" y=\"" << T + ph + 18 << "\" text-anchor=\"middle\">1e"
      << e << "</text>\n";
  }
  s << "</g>\n";
  s << "<text x=\"" << L + pw / 2 << "\" y=\"" << H - 15
    << "\" text-anchor=\"middle\">SNR (log scale)</text>\n";
  s << "<text x=\"18\" y=\"" << T + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
    << T + ph / 2 << ")\">power</text>\n";

  auto polyline = [&](std::vector<std::pair<double, double>> pts, std::string_view color,
                       bool dashed) {
    std::sort(pts.begin(), pts.end());
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
    if (dashed) s << " stroke-dasharray=\"6 4\"";
    s << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i) s << ' ';
      s << fixed(sx(pts[i].first)) << ',' << fixed(sy(pts[i].second));
    }
    s << "\"/>\n";
    if (!dashed) {
      for (const auto& [x, y] : pts) {
        s << "<circle cx=\"" << fixed(sx(x)) << "\" cy=\"" << fixed(sy(y)) << "\" r=\"3\" fill=\""
          << color << "\"/>\n";
      }
    }
  };

  s << "<g id=\"series\">\n";
  for (std::size_t k = 0; k < order.size(); ++k) {
    polyline(series[order[k]], kPalette[k % kPalette.size()], false);
  }
  std::vector<std::pair<double, double>> ref;
  for (const auto& pt : options.reference) {
    if (pt.first > 0.0) ref.push_back(pt);
  }
  if (!ref.empty()) polyline(ref, "#444", true);
  s << "</g>\n<g id=\"legend\">\n";
  double ly = T + 10;
  auto legend_entry = [&](std::string_view label, std::string_view color, bool dashed) {
    const double lx = L + pw + 15;
    s << "<line x1=\"" << lx << "\" x2=\"" << lx + 24 << "\" y1=\"" << ly << "\" y2=\"" << ly
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
    if (dashed) s << " stroke-dasharray=\"6 4\"";
    s << "/>\n<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\">" << xml_escape(label)
      << "</text>\n";
    ly += 20;
  };
  for (std::size_t k = 0; k < order.size(); ++k) {
    legend_entry(order[k], kPalette[k % kPalette.size()], false);
  }
  if (!ref.empty()) legend_entry(options.reference_label, "#444", true);
  s << "</g>\n</svg>\n";
  return s.str();
}

void emit_svg(std::span<const PowerRow> rows, const std::filesystem::path& path,
              const SvgOptions& options) {
  write_text_file(path, render_svg(rows, options));
}

std::vector<std::complex<double>> read_complex_csv(std::istream& in) {
  std::vector<std::complex<double>> out;
  std::size_t re_col = 0;
  std::size_t im_col = 1;
  std::string line;
  bool first = true;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line, ',');
    double re = 0.0;
    double im = 0.0;
    const bool ok = fields.size() > std::max(re_col, im_col) &&
                    parse_double(fields[re_col], re) && parse_double(fields[im_col], im);
    if (!ok && first) {
      // header: locate re/im columns by name when present
      for (std::size_t j = 0; j < fields.size(); ++j) {
        if (fields[j] == "re") re_col = j;
        if (fields[j] == "im") im_col = j;
      }
      first = false;
      continue;
    }
    first = false;
    if (!ok) {
      throw UsageError("input", "line " + std::to_string(lineno) + ": expected re,im");
    }
    out.emplace_back(re, im);
  }
  return out;
}

std::vector<std::complex<double>> read_complex_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  return read_complex_csv(in);
}

}  // namespace padeloc
