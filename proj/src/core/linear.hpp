#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/report.hpp"

namespace dilatk {

// Exact scalar: a rational, or a residue in GF(p). Mixing fields is an error.
class Scalar {
public:
  using Rational = boost::multiprecision::cpp_rational;

  static Scalar rational(Rational q) { return Scalar(std::move(q)); }
  static Scalar gf(long long p, long long v);
  static Scalar zero_like(const Scalar& model);
  static Scalar one_like(const Scalar& model);

  bool is_rational() const { return p_ == 0; }
  long long characteristic() const { return p_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  bool zero() const;
  bool operator==(const Scalar& o) const;

  std::string str() const;

private:
  explicit Scalar(Rational q) : q_(std::move(q)), p_(0), r_(0) {}
  Scalar(long long p, long long r) : p_(p), r_(r) {}
  void require_same_field(const Scalar& o) const;

  Rational q_;
  long long p_ = 0;  // 0 = rationals
  long long r_ = 0;
};

struct FieldRef {
  long long p = 0;  // 0 = rationals, otherwise a prime
  Scalar zero() const;
  Scalar one() const;
  Scalar parse(const std::string& text) const;
};

// Parses "q" or "gf:p".
FieldRef field_preset(const std::string& name);

class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, FieldRef field);
  static Matrix identity(int n, FieldRef field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldRef& field() const { return field_; }
  Scalar& at(int r, int c);
  const Scalar& at(int r, int c) const;

  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  Matrix pow(long long n) const;
  int rank() const;

private:
  int rows_ = 0, cols_ = 0;
  FieldRef field_;
  std::vector<Scalar> a_;
};

// The block model of the sequence space: i places a vector at slot 0, v
// shifts slots up, p folds slot n back through h^n.
struct LinearDilation {
  Matrix h;

  int dim() const { return h.rows(); }
  Matrix embed_matrix(long long depth) const;                   // dim(depth+1) x dim
  Matrix shift_matrix(long long depth) const;                   // dim(depth+2) x dim(depth+1)
  Matrix shift_power_embed(long long n, long long depth) const; // v^n i, dim(depth+1) x dim
  Matrix fold_matrix(long long depth) const;                    // p, square on dim(depth+1)
};

LinearDilation linear_standard_dilation(const Matrix& h);

// Exact checks: the power identity, p linear idempotent, v injective,
// range(p) = range(i) by rank. No tolerances anywhere.
VerificationReport verify_linear_dilation(const LinearDilation& ld, long long depth);

}  // namespace dilatk
