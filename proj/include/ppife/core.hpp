// Core value types shared across the library: 2D points/vectors, the
// two-sided domain labeling, and the error types thrown by geometry and
// linear algebra stages.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppife {

using Complex = std::complex<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double xx, double yy) : x(xx), y(yy) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }

    double norm() const { return std::hypot(x, y); }
    double squared_norm() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

using Point2 = Vec2;

// Complex-valued 2-vector (gradients of complex fields).
struct CVec2 {
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};
    CVec2() = default;
    CVec2(Complex xx, Complex yy) : x(xx), y(yy) {}
    CVec2(const Vec2& v) : x(v.x), y(v.y) {}
    CVec2 operator-(const CVec2& o) const { return {x - o.x, y - o.y}; }
    CVec2 operator+(const CVec2& o) const { return {x + o.x, y + o.y}; }
    CVec2 operator*(Complex s) const { return {x * s, y * s}; }
    double squared_norm() const { return std::norm(x) + std::norm(y); }
};

inline Complex dot(const CVec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Side labels relative to the interface: phi < 0 in the minus subdomain,
// phi > 0 (and phi == 0, by the tie-break) in the plus subdomain.
enum class Side { minus, plus };

inline Side opposite(Side s) { return s == Side::minus ? Side::plus : Side::minus; }

// Axis-aligned rectangle, used for the computational domain.
struct Rect {
    double x0 = -1.0, y0 = -1.0;
    double x1 = 1.0, y1 = 1.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mesh hypothesis violated: the interface cuts an element in a way the
// construction cannot handle (two roots on one edge, more than two cut
// edges, or a cut boundary element). Carries the offending element index.
class HypothesisError : public Error {
  public:
    HypothesisError(int element, const std::string& what)
        : Error("hypothesis violation on element " + std::to_string(element) + ": " + what),
          element_(element) {}
    int element() const { return element_; }

  private:
    int element_;
};

// Interface grazes an element: no usable sign change, or |DE| below the
// sliver threshold.
class DegenerateCutError : public Error {
  public:
    explicit DegenerateCutError(const std::string& msg) : Error(msg) {}
};

class IllConditionedCutError : public Error {
  public:
    explicit IllConditionedCutError(const std::string& msg) : Error(msg) {}
};

class SingularSystemError : public Error {
  public:
    explicit SingularSystemError(const std::string& msg) : Error(msg) {}
};

}  // namespace ppife
