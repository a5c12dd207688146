#include "gradplate/motion.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gradplate {

double TimeLaw::eval(double t, int order) const {
  // Leibniz rule on p(t) * cos(omega t + phase); p has degree <= 2.
  double p[3] = {p0 + t * (p1 + t * p2), p1 + 2.0 * p2 * t, 2.0 * p2};
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= order && j <= 2; ++j) {
    if (j > 0) binom = binom * (order - j + 1) / j;
    int m = order - j;
    double osc = std::pow(omega, m) * std::cos(omega * t + phase + 0.5 * M_PI * m);
    if (m == 0) osc = std::cos(omega * t + phase);
    sum += binom * p[j] * osc;
  }
  return sum;
}

TimeLaw TimeLaw::parse(const std::string& token) {
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(':', start);
      parts.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return parts;
  };
  auto num = [&token](const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("time law '" + token + "': bad number '" + s + "'");
    }
    if (pos != s.size())
      throw std::invalid_argument("time law '" + token + "': bad number '" + s + "'");
    return v;
  };
  auto parts = split(token);
  const std::string& kind = parts[0];
  auto want = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw std::invalid_argument("time law '" + token + "': expected " + std::to_string(n) +
                                  " parameters");
  };
  TimeLaw law;
  if (kind == "const") {
    want(0);
  } else if (kind == "t") {
    want(0);
    law.p0 = 0.0;
    law.p1 = 1.0;
  } else if (kind == "t2") {
    want(0);
    law.p0 = 0.0;
    law.p2 = 1.0;
  } else if (kind == "sin") {
    want(1);
    law.omega = num(parts[1]);
    law.phase = -0.5 * M_PI;
  } else if (kind == "cos") {
    want(1);
    law.omega = num(parts[1]);
  } else if (kind == "poly") {
    want(3);
    law.p0 = num(parts[1]);
    law.p1 = num(parts[2]);
    law.p2 = num(parts[3]);
  } else if (kind == "polysin" || kind == "polycos") {
    want(4);
    law.p0 = num(parts[1]);
    law.p1 = num(parts[2]);
    law.p2 = num(parts[3]);
    law.omega = num(parts[4]);
    if (kind == "polysin") law.phase = -0.5 * M_PI;
  } else {
    throw std::invalid_argument("unknown time law '" + token + "'");
  }
  return law;
}

std::string TimeLaw::str() const {
  std::ostringstream os;
  os << "poly" << (phase == 0.0 ? "cos" : "sin") << ":" << p0 << ":" << p1 << ":" << p2 << ":"
     << omega;
  return os.str();
}

V3 SurfaceMotion::eval(double Y1, double Y2, double t, int ax, int ay, int at) const {
  V3 inner{0, 0, 0};
  // base map contributes only to the value and the pure first space derivatives
  if (ax + ay + at == 0) {
    for (int i = 0; i < 3; ++i) inner[i] = base[i][0] * Y1 + base[i][1] * Y2;
  } else if (at == 0 && ax + ay == 1) {
    int col = (ax == 1) ? 0 : 1;
    for (int i = 0; i < 3; ++i) inner[i] = base[i][col];
  }
  for (const Mode& md : modes) {
    double spatial = md.amp * std::pow(md.m1, ax) * std::pow(md.m2, ay) *
                     std::cos(md.m1 * Y1 + md.m2 * Y2 + md.phase + 0.5 * M_PI * (ax + ay));
    inner[md.comp] += scale * spatial * md.law.eval(t, at);
  }
  V3 out = rot * inner;
  if (ax + ay + at == 0) out += shift;
  return out;
}

double SurfaceMotion::min_jacobian(double t, int n) const {
  double mn = 1e300;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double Y1 = 2.0 * M_PI * i / n, Y2 = 2.0 * M_PI * j / n;
      V3 a = eval(Y1, Y2, t, 1, 0, 0);
      V3 b = eval(Y1, Y2, t, 0, 1, 0);
      mn = std::min(mn, norm(cross(a, b)));
    }
  return mn;
}

SurfaceMotion SurfaceMotion::transformed(const M3& R, const V3& v) const {
  SurfaceMotion m = *this;
  m.rot = R * rot;
  m.shift = R * shift + v;
  return m;
}

SurfaceMotion SurfaceMotion::identity() { return SurfaceMotion{}; }

SurfaceMotion SurfaceMotion::displacement() {
  SurfaceMotion m;
  for (auto& row : m.base) row[0] = row[1] = 0.0;
  return m;
}

SurfaceMotion SurfaceMotion::uniform_stretch(double s) {
  SurfaceMotion m;
  m.base[0][0] = s;
  m.base[1][1] = s;
  return m;
}

SurfaceMotion SurfaceMotion::cylindrical_bend(double R) {
  // y = (Y1, R sin(Y2/R), R (1 - cos(Y2/R)))
  SurfaceMotion m;
  m.base[1][1] = 0.0;
  Mode s;  // R sin(Y2/R) on y2
  s.comp = 1;
  s.m2 = 1.0 / R;
  s.amp = R;
  s.phase = -0.5 * M_PI;
  m.modes.push_back(s);
  Mode c0;  // constant R on y3
  c0.comp = 2;
  c0.amp = R;
  m.modes.push_back(c0);
  Mode c;  // -R cos(Y2/R) on y3
  c.comp = 2;
  c.m2 = 1.0 / R;
  c.amp = -R;
  m.modes.push_back(c);
  return m;
}

SurfaceMotion SurfaceMotion::parse(std::istream& in) {
  SurfaceMotion m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "scale") {
      if (!(ls >> m.scale))
        throw std::invalid_argument("motion file line " + std::to_string(lineno) + ": bad scale");
      continue;
    }
    Mode md;
    if (first == "u1") md.comp = 0;
    else if (first == "u2") md.comp = 1;
    else if (first == "w") md.comp = 2;
    else
      throw std::invalid_argument("motion file line " + std::to_string(lineno) +
                                  ": component must be u1, u2 or w, got '" + first + "'");
    std::string law;
    if (!(ls >> md.m1 >> md.m2 >> md.amp >> md.phase >> law))
      throw std::invalid_argument("motion file line " + std::to_string(lineno) +
                                  ": expected 'component m1 m2 amp phase time_law'");
    std::string extra;
    if (ls >> extra)
      throw std::invalid_argument("motion file line " + std::to_string(lineno) +
                                  ": trailing token '" + extra + "'");
    md.law = TimeLaw::parse(law);
    m.modes.push_back(md);
  }
  return m;
}

SurfaceMotion SurfaceMotion::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

SurfaceMotion SurfaceMotion::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open motion file '" + path + "'");
  return parse(in);
}

Vec3<Jet> motion_jet(const SurfaceMotion& m, double Y1, double Y2, double t, int ax, int ay,
                     int at) {
  // derivative offsets for gradient slots (Y1, Y2, t)
  V3 v = m.eval(Y1, Y2, t, ax, ay, at);
  V3 g0 = m.eval(Y1, Y2, t, ax + 1, ay, at);
  V3 g1 = m.eval(Y1, Y2, t, ax, ay + 1, at);
  V3 g2 = m.eval(Y1, Y2, t, ax, ay, at + 1);
  V3 h00 = m.eval(Y1, Y2, t, ax + 2, ay, at);
  V3 h01 = m.eval(Y1, Y2, t, ax + 1, ay + 1, at);
  V3 h02 = m.eval(Y1, Y2, t, ax + 1, ay, at + 1);
  V3 h11 = m.eval(Y1, Y2, t, ax, ay + 2, at);
  V3 h12 = m.eval(Y1, Y2, t, ax, ay + 1, at + 1);
  V3 h22 = m.eval(Y1, Y2, t, ax, ay, at + 2);
  Vec3<Jet> out;
  for (int i = 0; i < 3; ++i) {
    Jet j(v[i]);
    j.g = {g0[i], g1[i], g2[i]};
    j.h = {h00[i], h01[i], h02[i], h11[i], h12[i], h22[i]};
    out[i] = j;
  }
  return out;
}

}  // namespace gradplate
