#include "stabwalls/chern_lattice.hpp"

#include <sstream>

namespace stabwalls {

const Rational& ChernCharacter::operator[](std::size_t i) const {
  switch (i) {
    case 0: return ch0;
    case 1: return ch1;
    case 2: return ch2;
    case 3: return ch3;
  }
  throw std::out_of_range("ChernCharacter index");
}

Rational& ChernCharacter::operator[](std::size_t i) {
  return const_cast<Rational&>(static_cast<const ChernCharacter&>(*this)[i]);
}

ChernCharacter ChernCharacter::operator+(const ChernCharacter& w) const {
  return {ch0 + w.ch0, ch1 + w.ch1, ch2 + w.ch2, ch3 + w.ch3};
}

ChernCharacter ChernCharacter::operator-(const ChernCharacter& w) const {
  return {ch0 - w.ch0, ch1 - w.ch1, ch2 - w.ch2, ch3 - w.ch3};
}

ChernCharacter ChernCharacter::operator-() const { return {-ch0, -ch1, -ch2, -ch3}; }

ChernCharacter operator*(const Rational& k, const ChernCharacter& v) {
  return {k * v.ch0, k * v.ch1, k * v.ch2, k * v.ch3};
}

std::string to_string(const ChernCharacter& v) {
  std::ostringstream os;
  os << '(' << to_string(v.ch0) << ", " << to_string(v.ch1) << ", " << to_string(v.ch2) << ", "
     << to_string(v.ch3) << ')';
  return os.str();
}

NonIntegralClass::NonIntegralClass(int component, const Rational& value)
    : std::domain_error("class is not integral: lattice coordinate " + std::to_string(component) + " = " +
                        to_string(value)),
      component_(component) {}

ObjectKind ObjectKind::shift_of(ObjectKind k) {
  ObjectKind out;
  out.tag = Tag::shift_of;
  out.inner = std::make_shared<const ObjectKind>(std::move(k));
  return out;
}

namespace {

struct TagName {
  ObjectKind::Tag tag;
  const char* name;
};

constexpr TagName kTagNames[] = {
    {ObjectKind::Tag::line_bundle, "line_bundle"},
    {ObjectKind::Tag::point_sheaf, "point_sheaf"},
    {ObjectKind::Tag::plane_sheaf, "plane_sheaf"},
    {ObjectKind::Tag::line_sheaf, "line_sheaf"},
    {ObjectKind::Tag::ideal_point, "ideal_point"},
    {ObjectKind::Tag::ideal_point_in_plane, "ideal_point_in_plane"},
    {ObjectKind::Tag::ideal_twisted_cubic, "ideal_twisted_cubic"},
    {ObjectKind::Tag::curve_sheaf, "curve_sheaf"},
    {ObjectKind::Tag::ideal_curve, "ideal_curve"},
    {ObjectKind::Tag::shift_of, "shift_of"},
};

std::string twist_suffix(long d) { return d == 0 ? "" : "(" + std::to_string(d) + ")"; }

}  // namespace

std::string tag_name(ObjectKind::Tag tag) {
  for (const auto& t : kTagNames) {
    if (t.tag == tag) return t.name;
  }
  throw std::logic_error("unknown ObjectKind tag");
}

ObjectKind::Tag tag_from_name(const std::string& name) {
  for (const auto& t : kTagNames) {
    if (name == t.name) return t.tag;
  }
  throw ParseError("unknown object kind '" + name + "'");
}

std::string describe(const ObjectKind& kind) {
  using T = ObjectKind::Tag;
  switch (kind.tag) {
    case T::line_bundle: return "O(" + std::to_string(kind.d) + ")";
    case T::point_sheaf: return "O_p";
    case T::plane_sheaf: return "O_V" + twist_suffix(kind.d);
    case T::line_sheaf: return "O_L" + twist_suffix(kind.d);
    case T::ideal_point: return "I_p" + twist_suffix(kind.d);
    case T::ideal_point_in_plane: return "I_{q/V}" + twist_suffix(kind.d);
    case T::ideal_twisted_cubic: return "I_C";
    case T::curve_sheaf:
      return "O_C(deg=" + std::to_string(kind.degree) + ",chi=" + std::to_string(kind.chi) + ")";
    case T::ideal_curve:
      return "I_C(deg=" + std::to_string(kind.degree) + ",chi=" + std::to_string(kind.chi) + ")";
    case T::shift_of: return describe(*kind.inner) + "[1]";
  }
  return "?";
}

ChernCharacter of_line_bundle(long n) {
  Rational r(n);
  return {Rational(1), r, r * r / 2, r * r * r / 6};
}

ChernCharacter of_point() { return {0, 0, 0, 1}; }

ChernCharacter of_curve(long degree, long euler) {
  // chi(O_C) = ch3 + 2 ch2 by HRR when ch0 = ch1 = 0.
  Rational d(degree);
  return {0, 0, d, Rational(euler) - 2 * d};
}

ChernCharacter of_standard(const ObjectKind& kind) {
  using T = ObjectKind::Tag;
  switch (kind.tag) {
    case T::line_bundle: return of_line_bundle(kind.d);
    case T::point_sheaf: return of_point();
    case T::plane_sheaf: return of_line_bundle(kind.d) - of_line_bundle(kind.d - 1);
    case T::line_sheaf: return twist(of_curve(1, 1), kind.d);
    case T::ideal_point: return of_line_bundle(kind.d) - of_point();
    case T::ideal_point_in_plane: return of_standard(ObjectKind::plane_sheaf(kind.d)) - of_point();
    case T::ideal_twisted_cubic: return of_line_bundle(0) - of_curve(3, 1);
    case T::curve_sheaf: return of_curve(kind.degree, kind.chi);
    case T::ideal_curve: return of_line_bundle(0) - of_curve(kind.degree, kind.chi);
    case T::shift_of:
      if (!kind.inner) throw std::invalid_argument("shift_of without inner kind");
      return shift(of_standard(*kind.inner));
  }
  throw std::logic_error("unknown ObjectKind tag");
}

ChernCharacter multiply(const ChernCharacter& v, const ChernCharacter& w) {
  ChernCharacter out;
  for (std::size_t k = 0; k < 4; ++k) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= k; ++i) acc += v[i] * w[k - i];
    out[k] = acc;
  }
  return out;
}

ChernCharacter twist(const ChernCharacter& v, long n) { return multiply(v, of_line_bundle(n)); }

ChernCharacter dual(const ChernCharacter& v) { return {v.ch0, -v.ch1, v.ch2, -v.ch3}; }

ChernCharacter shift(const ChernCharacter& v) { return -v; }

ChernCharacter add(const ChernCharacter& v, const ChernCharacter& w) { return v + w; }

ChernCharacter sub(const ChernCharacter& v, const ChernCharacter& w) { return v - w; }

ChernCharacter scale(const ChernCharacter& v, long k) { return Rational(k) * v; }

LatticeCoords lattice_coords(const ChernCharacter& v) {
  // v = a[O] + b[O_V] + c[O_L] + d[O_pt] with
  // ch[O_V] = (0,1,-1/2,1/6), ch[O_L] = (0,0,1,-1), ch[O_pt] = (0,0,0,1).
  const Rational b = v.ch1;
  const Rational c = v.ch2 + b / 2;
  const Rational d = v.ch3 - b / 6 + c;
  const Rational coords[4] = {v.ch0, b, c, d};
  for (int i = 0; i < 4; ++i) {
    if (!is_integer(coords[i])) throw NonIntegralClass(i, coords[i]);
  }
  return {coords[0].get_num(), coords[1].get_num(), coords[2].get_num(), coords[3].get_num()};
}

bool is_lattice_class(const ChernCharacter& v) {
  try {
    lattice_coords(v);
    return true;
  } catch (const NonIntegralClass&) {
    return false;
  }
}

ChernCharacter from_lattice_coords(const LatticeCoords& x) {
  const Rational a(x.a), b(x.b), c(x.c), d(x.d);
  return {a, b, c - b / 2, b / 6 - c + d};
}

}  // namespace stabwalls
