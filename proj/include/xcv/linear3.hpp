#pragma once

// Rank-3 exact linear algebra shared by the projective-geometry and
// monodromy code: coordinate triples and 3x3 matrices over any exact field
// (rationals for geometry, rational functions for symbolic matrices).

#include <array>
#include <stdexcept>

#include "xcv/rat.hpp"
#include "xcv/ratfunc.hpp"

namespace xcv {

template <class T>
using Triple = std::array<T, 3>;

inline bool is_zero_value(const Rat& a) { return a == 0; }
inline bool is_zero_value(const RatFunc& a) { return a.is_zero(); }

template <class T>
bool triple_is_zero(const Triple<T>& v) {
  return is_zero_value(v[0]) && is_zero_value(v[1]) && is_zero_value(v[2]);
}

template <class T>
T triple_dot(const Triple<T>& a, const Triple<T>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

template <class T>
Triple<T> triple_cross(const Triple<T>& a, const Triple<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T>
T det3(const Triple<T>& a, const Triple<T>& b, const Triple<T>& c) {
  return triple_dot(a, triple_cross(b, c));
}

template <class T>
struct Mat3 {
  // Rows; vectors act as columns on the right.
  std::array<Triple<T>, 3> row{};

  // one/zero are passed explicitly: scalar types whose int constructor means
  // something else (RatFunc's takes an arity) must not be defaulted.
  static Mat3 scalar(const T& c, const T& zero) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.row[i][j] = (i == j) ? c : zero;
    return m;
  }
  static Mat3 identity(const T& one, const T& zero) { return scalar(one, zero); }
  static Mat3 from_rows(Triple<T> r0, Triple<T> r1, Triple<T> r2) {
    Mat3 m;
    m.row = {std::move(r0), std::move(r1), std::move(r2)};
    return m;
  }

  Triple<T> column(int j) const { return {row[0][j], row[1][j], row[2][j]}; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.row[i][j] = triple_dot(a.row[i], b.column(j));
    return r;
  }
  friend Triple<T> operator*(const Mat3& m, const Triple<T>& v) {
    return {triple_dot(m.row[0], v), triple_dot(m.row[1], v), triple_dot(m.row[2], v)};
  }
  friend Mat3 operator*(const T& c, const Mat3& m) {
    Mat3 r = m;
    for (auto& rw : r.row)
      for (auto& x : rw) x = c * x;
    return r;
  }
  friend bool operator==(const Mat3& a, const Mat3& b) { return a.row == b.row; }
  friend bool operator!=(const Mat3& a, const Mat3& b) { return !(a == b); }

  Mat3 transpose() const {
    return from_rows(column(0), column(1), column(2));
  }
  T det() const { return det3(row[0], row[1], row[2]); }
  T trace() const { return row[0][0] + row[1][1] + row[2][2]; }

  // Transposed cofactors, so adjugate() * M = det(M) * I over any ring.
  Mat3 adjugate() const {
    Mat3 r;
    const auto& m = row;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // transposed indexing
        int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        r.row[i][j] = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
      }
    return r;
  }
  Mat3 inverse() const {
    T d = det();
    if (is_zero_value(d)) throw std::domain_error("Mat3: singular matrix");
    Mat3 adj = adjugate();
    for (auto& rw : adj.row)
      for (auto& x : rw) x = x / d;
    return adj;
  }
};

// Row-vector action: functionals (lines) transform by l * M.
template <class T>
Triple<T> apply_row(const Triple<T>& l, const Mat3<T>& m) {
  Triple<T> r;
  for (int j = 0; j < 3; ++j) r[j] = l[0] * m.row[0][j] + l[1] * m.row[1][j] + l[2] * m.row[2][j];
  return r;
}

inline Mat3<Rat> identity3() { return Mat3<Rat>::identity(Rat(1), Rat(0)); }

}  // namespace xcv
