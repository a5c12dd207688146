#ifndef GRADPLATE_MOTION_HPP
#define GRADPLATE_MOTION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gradplate/dual.hpp"
#include "gradplate/linalg.hpp"

namespace gradplate {

// Time factor (p0 + p1 t + p2 t^2) cos(omega t + phase).
// Text forms: const | t | t2 | sin:W | cos:W | poly:P0:P1:P2 |
//             polysin:P0:P1:P2:W | polycos:P0:P1:P2:W
struct TimeLaw {
  double p0 = 1.0, p1 = 0.0, p2 = 0.0;
  double omega = 0.0, phase = 0.0;

  double eval(double t, int order) const;  // d^order/dt^order, any order >= 0
  static TimeLaw parse(const std::string& token);
  std::string str() const;
};

// One displacement mode: amp * cos(m1 Y1 + m2 Y2 + phase) * law(t) on
// component comp (0 = u1, 1 = u2, 2 = w).  m1, m2 need not be integers;
// periodic simulations use integer modes on the [0, 2pi)^2 cell.
struct Mode {
  int comp = 2;
  double m1 = 0.0, m2 = 0.0;
  double amp = 0.0;
  double phase = 0.0;
  TimeLaw law;
};

// Closed-form motion of the midsurface,
//   y(Y, t) = rot * (base * Y + scale * sum of modes) + shift,
// with base a 3x2 matrix (identity embedding by default).  All space and
// time derivatives exist in closed form at any order, which the strain,
// stress-divergence and thickness-reduction paths rely on.
class SurfaceMotion {
 public:
  double base[3][2] = {{1, 0}, {0, 1}, {0, 0}};
  std::vector<Mode> modes;
  double scale = 1.0;  // applied to every mode, not to the base map
  M3 rot = M3::identity();
  V3 shift{0, 0, 0};

  // d^ax/dY1 d^ay/dY2 d^at/dt of y at (Y1, Y2, t)
  V3 eval(double Y1, double Y2, double t, int ax = 0, int ay = 0, int at = 0) const;

  // Minimum |y,1 x y,2| over an n x n grid of the periodic cell at time t.
  double min_jacobian(double t, int n = 16) const;

  // Superposed rigid motion: y -> R y + v.
  SurfaceMotion transformed(const M3& R, const V3& v) const;

  static SurfaceMotion identity();
  static SurfaceMotion displacement();            // zero base map; evaluates the mode sum alone
  static SurfaceMotion uniform_stretch(double s); // y = s (Y1, Y2, 0)
  static SurfaceMotion cylindrical_bend(double R);

  // Rows: component m1 m2 amp phase time_law   (component in {u1,u2,w}),
  // plus optional "scale VALUE" rows; '#' comments.
  static SurfaceMotion parse(std::istream& in);
  static SurfaceMotion parse_text(const std::string& text);
  static SurfaceMotion load(const std::string& path);
};

// Component-wise order-2 jet of the (ax, ay, at) derivative of y with respect
// to (Y1, Y2, t); gradient and Hessian entries are the corresponding higher
// closed-form derivatives of the motion.
Vec3<Jet> motion_jet(const SurfaceMotion& m, double Y1, double Y2, double t,
                     int ax = 0, int ay = 0, int at = 0);

}  // namespace gradplate

#endif
