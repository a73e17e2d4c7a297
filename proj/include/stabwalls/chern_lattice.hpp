#pragma once

#include "stabwalls/rational.hpp"

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

namespace stabwalls {

/// Chern character (ch0, ch1, ch2, ch3) of an object in D^b(P^3), with ch_i in
/// units of H^i. Plain value type; all operations return new values.
struct ChernCharacter {
  Rational ch0, ch1, ch2, ch3;

  ChernCharacter() = default;
  ChernCharacter(Rational c0, Rational c1, Rational c2, Rational c3)
      : ch0(std::move(c0)), ch1(std::move(c1)), ch2(std::move(c2)), ch3(std::move(c3)) {}

  const Rational& operator[](std::size_t i) const;
  Rational& operator[](std::size_t i);

  friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

  ChernCharacter operator+(const ChernCharacter& w) const;
  ChernCharacter operator-(const ChernCharacter& w) const;
  ChernCharacter operator-() const;
};

ChernCharacter operator*(const Rational& k, const ChernCharacter& v);

std::string to_string(const ChernCharacter& v);

/// Coordinates in the basis [O], [O_V], [O_L], [O_pt] of K(P^3).
struct LatticeCoords {
  Integer a, b, c, d;
  friend bool operator==(const LatticeCoords&, const LatticeCoords&) = default;
};

/// Signals that a rational class is not the Chern character of any object.
class NonIntegralClass : public std::domain_error {
 public:
  NonIntegralClass(int component, const Rational& value);
  int component() const { return component_; }

 private:
  int component_;
};

/// The object classes named in the wall-crossing analysis of twisted cubics.
struct ObjectKind {
  enum class Tag {
    line_bundle,           // O(d)
    point_sheaf,           // O_p
    plane_sheaf,           // O_V(d)
    line_sheaf,            // O_L(d)
    ideal_point,           // I_p(d)
    ideal_point_in_plane,  // I_{q/V}(d)
    ideal_twisted_cubic,   // I_C
    curve_sheaf,           // O_C for a curve of given degree and chi(O_C)
    ideal_curve,           // I_C for a curve of given degree and chi(O_C)
    shift_of,              // E[1]
  };

  Tag tag = Tag::line_bundle;
  long d = 0;
  long degree = 0;
  long chi = 0;
  std::shared_ptr<const ObjectKind> inner;  // set iff tag == shift_of

  static ObjectKind line_bundle(long n) { return {Tag::line_bundle, n}; }
  static ObjectKind point_sheaf() { return {Tag::point_sheaf}; }
  static ObjectKind plane_sheaf(long n) { return {Tag::plane_sheaf, n}; }
  static ObjectKind line_sheaf(long n) { return {Tag::line_sheaf, n}; }
  static ObjectKind ideal_point(long n) { return {Tag::ideal_point, n}; }
  static ObjectKind ideal_point_in_plane(long n) { return {Tag::ideal_point_in_plane, n}; }
  static ObjectKind ideal_twisted_cubic() { return {Tag::ideal_twisted_cubic}; }
  static ObjectKind curve_sheaf(long deg, long euler) { return {Tag::curve_sheaf, 0, deg, euler}; }
  static ObjectKind ideal_curve(long deg, long euler) { return {Tag::ideal_curve, 0, deg, euler}; }
  static ObjectKind shift_of(ObjectKind k);
};

std::string tag_name(ObjectKind::Tag tag);
ObjectKind::Tag tag_from_name(const std::string& name);

/// Human-readable name such as "O(-2)", "I_p(-1)", "O_V(-3)[1]".
std::string describe(const ObjectKind& kind);

// --- constructors -----------------------------------------------------------

ChernCharacter of_line_bundle(long n);
ChernCharacter of_point();
ChernCharacter of_standard(const ObjectKind& kind);

/// ch(O_C) for a curve of degree `degree` with chi(O_C) = `euler`.
ChernCharacter of_curve(long degree, long euler);

// --- ring operations --------------------------------------------------------

/// Product in H^*(P^3, Q) = Q[H]/H^4.
ChernCharacter multiply(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter twist(const ChernCharacter& v, long n);
ChernCharacter dual(const ChernCharacter& v);
ChernCharacter shift(const ChernCharacter& v);
ChernCharacter add(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter sub(const ChernCharacter& v, const ChernCharacter& w);
ChernCharacter scale(const ChernCharacter& v, long k);

/// Throws NonIntegralClass naming the first non-integral coordinate (0..3).
LatticeCoords lattice_coords(const ChernCharacter& v);
bool is_lattice_class(const ChernCharacter& v);
ChernCharacter from_lattice_coords(const LatticeCoords& x);

}  // namespace stabwalls
