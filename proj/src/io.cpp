#include "ordkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ordkit {

namespace {

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

double bpoint_angle(const BPoint& p) {
  // 0 sits at angle 0; positives sweep (0, pi), inf is pi, negatives (pi, 2pi)
  return 2.0 * std::atan2(p.num.convert_to<double>(), p.den.convert_to<double>());
}

} // namespace

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"schema", "ordkit.error/1"}, {"code", code}, {"message", message}};
}

Json bpoint_json(const BPoint& p) {
  return Json{{"num", p.num.str()}, {"den", p.den.str()}, {"display", p.str()}};
}

Json orbit_config_json(const OrbitConfig& cfg) {
  Json points = Json::array();
  for (const OrbitPoint& op : cfg.points) {
    Json j = bpoint_json(op.pt);
    j["word"] = op.g.str();
    points.push_back(std::move(j));
  }
  return Json{{"schema", "ordkit.circular-config/1"},
              {"y0", bpoint_json(cfg.y0)},
              {"points", std::move(points)}};
}

Json lift_json(const LiftSpec& lift) {
  return Json{{"schema", "ordkit.lift/1"}, {"k", lift.k},         {"j_alpha", lift.j_alpha},
              {"j_beta", lift.j_beta},     {"m_beta", lift.m_beta}, {"B", lift.B},
              {"eps", lift.eps},           {"w_a", lift.w_a},       {"w_b", lift.w_b}};
}

Json cones_json(const ConeSearchResult& res, const GroupHandle& g) {
  Json ball = Json::array();
  for (const Element& e : res.ball) ball.push_back(g.format(e));
  Json survivors = Json::array();
  for (const auto& sv : res.survivors) {
    std::string s;
    s.reserve(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
      s += (sv[i] > 0 ? '+' : (sv[i] < 0 ? '-' : '.'));
    survivors.push_back(s);
  }
  return Json{{"schema", "ordkit.cones/1"},
              {"radius", res.radius},
              {"ball", std::move(ball)},
              {"survivor_count", res.survivors.size()},
              {"survivors", std::move(survivors)},
              {"steps_used", res.steps_used}};
}

Json isolation_json(const IsolationEvidence& ev) {
  return Json{{"schema", "ordkit.isolation/1"},
              {"radius", ev.radius},
              {"survivor_count", ev.survivor_count},
              {"contains_order", ev.contains_lambda},
              {"unique", ev.all_agree}};
}

Json realization_json(const Realization& R, const GroupHandle& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < R.elements.size(); ++i)
    rows.push_back(Json{{"index", i},
                        {"word", g.format(R.elements[i])},
                        {"numerator", R.values[i].num.str()},
                        {"exponent", R.values[i].exp},
                        {"display", R.values[i].str()}});
  return Json{{"schema", "ordkit.realization/1"}, {"points", std::move(rows)}};
}

Json pingpong_json(const PingPongData& pp, const PingPongReport& report) {
  auto arc = [](const GuardedArc& a) {
    return Json{{"lo_word", a.lo_g.str()},   {"hi_word", a.hi_g.str()},
                {"lo", bpoint_json(a.lo)},   {"hi", bpoint_json(a.hi)},
                {"pad_lo", bpoint_json(a.pad_lo)}, {"pad_hi", bpoint_json(a.pad_hi)}};
  };
  return Json{{"schema", "ordkit.pingpong/1"},
              {"ok", report.ok},
              {"witness", report.witness},
              {"gamma1", pp.gamma1.str()},
              {"gamma2", pp.gamma2.str()},
              {"k1_minus", arc(pp.k1_minus)},
              {"k1_plus", arc(pp.k1_plus)},
              {"k2_minus", arc(pp.k2_minus)},
              {"k2_plus", arc(pp.k2_plus)}};
}

Json generations_json(const Generations& gen) {
  Json points = Json::array();
  for (std::size_t i = 0; i < gen.order.size(); ++i)
    points.push_back(Json{{"word", gen.order[i].str()}, {"born", gen.born[i]}});
  return Json{{"schema", "ordkit.generations/1"},
              {"count", gen.order.size()},
              {"points", std::move(points)}};
}

std::string realization_csv(const Realization& R, const GroupHandle& g) {
  std::ostringstream out;
  out << "index,word,numerator,exponent\n";
  for (std::size_t i = 0; i < R.elements.size(); ++i)
    out << i << ",\"" << g.format(R.elements[i]) << "\"," << R.values[i].num.str() << ","
        << R.values[i].exp << "\n";
  return out.str();
}

std::vector<RealizationCsvRow> parse_realization_csv(const std::string& text) {
  std::vector<RealizationCsvRow> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) { // header
      first = false;
      continue;
    }
    RealizationCsvRow row;
    std::size_t c1 = line.find(',');
    std::size_t q1 = line.find('"', c1 + 1);
    std::size_t q2 = line.find('"', q1 + 1);
    if (c1 == std::string::npos || q1 == std::string::npos || q2 == std::string::npos)
      throw std::invalid_argument("malformed realization csv line: " + line);
    row.index = std::stoull(line.substr(0, c1));
    row.word = line.substr(q1 + 1, q2 - q1 - 1);
    std::size_t c2 = line.find(',', q2 + 1);
    std::size_t c3 = line.find(',', c2 + 1);
    if (c2 == std::string::npos || c3 == std::string::npos)
      throw std::invalid_argument("malformed realization csv line: " + line);
    row.numerator = line.substr(c2 + 1, c3 - c2 - 1);
    row.exponent = std::stoi(line.substr(c3 + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string circle_svg(const OrbitConfig& cfg) {
  const double cx = 220, cy = 220, r = 170;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\" "
         "viewBox=\"0 0 440 440\">\n";
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (const OrbitPoint& op : cfg.points) {
    double a = bpoint_angle(op.pt);
    double px = cx + r * std::cos(a), py = cy - r * std::sin(a);
    double lx = cx + (r + 18) * std::cos(a), ly = cy - (r + 18) * std::sin(a);
    out << "<circle cx=\"" << fmt2(px) << "\" cy=\"" << fmt2(py)
        << "\" r=\"3\" fill=\"black\"/>\n";
    out << "<text x=\"" << fmt2(lx) << "\" y=\"" << fmt2(ly)
        << "\" font-size=\"9\" text-anchor=\"middle\">" << xml_escape(op.g.str())
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string realization_svg(const Realization& R, const GroupHandle& g,
                            std::size_t max_points) {
  std::size_t n = std::min(R.sorted.size(), max_points);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"120\" "
         "viewBox=\"0 0 900 120\">\n";
  out << "<line x1=\"20\" y1=\"60\" x2=\"880\" y2=\"60\" stroke=\"black\"/>\n";
  if (n > 0) {
    // take the n lowest-value points, map their value range onto the line
    double lo = R.values[R.sorted[0]].to_rat().num.convert_to<double>() /
                R.values[R.sorted[0]].to_rat().den.convert_to<double>();
    double hi = lo;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rat v = R.values[R.sorted[i]].to_rat();
      xs[i] = v.num.convert_to<double>() / v.den.convert_to<double>();
      lo = std::min(lo, xs[i]);
      hi = std::max(hi, xs[i]);
    }
    double span = (hi > lo) ? (hi - lo) : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double x = 20 + (xs[i] - lo) / span * 860;
      out << "<line x1=\"" << fmt2(x) << "\" y1=\"52\" x2=\"" << fmt2(x)
          << "\" y2=\"68\" stroke=\"black\"/>\n";
      out << "<text x=\"" << fmt2(x) << "\" y=\"" << (i % 2 ? 44 : 84)
          << "\" font-size=\"8\" text-anchor=\"middle\">"
          << xml_escape(g.format(R.elements[R.sorted[i]])) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace ordkit
