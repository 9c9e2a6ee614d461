#include "core/linear.hpp"

#include <algorithm>

namespace dilatk {

namespace {

long long pos_mod(long long a, long long m) { return (a % m + m) % m; }

long long mod_inverse(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = pos_mod(a, p);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  require(r == 1, Errc::parse, "not invertible modulo " + std::to_string(p));
  return pos_mod(t, p);
}

}  // namespace

Scalar Scalar::gf(long long p, long long v) {
  require(p >= 2, Errc::parse, "GF(p) needs p >= 2");
  return Scalar(p, pos_mod(v, p));
}

Scalar Scalar::zero_like(const Scalar& model) {
  return model.is_rational() ? rational(0) : Scalar(model.p_, 0);
}

Scalar Scalar::one_like(const Scalar& model) {
  return model.is_rational() ? rational(1) : Scalar(model.p_, 1);
}

void Scalar::require_same_field(const Scalar& o) const {
  require(p_ == o.p_, Errc::shape_mismatch, "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  return is_rational() ? rational(q_ + o.q_) : Scalar(p_, pos_mod(r_ + o.r_, p_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  return is_rational() ? rational(q_ - o.q_) : Scalar(p_, pos_mod(r_ - o.r_, p_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  return is_rational() ? rational(q_ * o.q_) : Scalar(p_, pos_mod(r_ * o.r_, p_));
}

Scalar Scalar::inverse() const {
  if (is_rational()) {
    require(q_ != 0, Errc::parse, "zero has no inverse");
    return rational(1 / q_);
  }
  return Scalar(p_, mod_inverse(r_, p_));
}

bool Scalar::zero() const { return is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && (is_rational() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::str() const {
  if (is_rational()) return q_.str();
  return std::to_string(r_);
}

Scalar FieldRef::zero() const { return p == 0 ? Scalar::rational(0) : Scalar::gf(p, 0); }
Scalar FieldRef::one() const { return p == 0 ? Scalar::rational(1) : Scalar::gf(p, 1); }

Scalar FieldRef::parse(const std::string& text) const {
  try {
    if (p == 0) return Scalar::rational(Scalar::Rational(text));
    return Scalar::gf(p, std::stoll(text));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::parse, "bad scalar: " + text);
  }
}

FieldRef field_preset(const std::string& name) {
  if (name == "q" || name == "Q") return {0};
  if (name.rfind("gf:", 0) == 0) {
    long long p = 0;
    try {
      p = std::stoll(name.substr(3));
    } catch (const std::exception&) {
      fail(Errc::parse, "malformed field: " + name);
    }
    require(p >= 2, Errc::parse, "GF(p) needs p >= 2");
    for (long long d = 2; d * d <= p; ++d)
      require(p % d != 0, Errc::parse, "GF(p) needs a prime p");
    return {p};
  }
  fail(Errc::parse, "unknown field: " + name);
}

Matrix::Matrix(int rows, int cols, FieldRef field)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), field.zero()) {
  require(rows >= 0 && cols >= 0, Errc::parse, "bad matrix shape");
}

Matrix Matrix::identity(int n, FieldRef field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Scalar& Matrix::at(int r, int c) {
  return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

const Scalar& Matrix::at(int r, int c) const {
  return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, Errc::shape_mismatch, "matrix shapes do not compose");
  Matrix out(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
    }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

Matrix Matrix::pow(long long n) const {
  require(rows_ == cols_, Errc::shape_mismatch, "powers need a square matrix");
  Matrix out = identity(rows_, field_);
  for (long long k = 0; k < n; ++k) out = out * *this;
  return out;
}

int Matrix::rank() const {
  Matrix m = *this;
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r)
      if (!m.at(r, col).zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < cols_; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    Scalar inv = m.at(rank, col).inverse();
    for (int c = 0; c < cols_; ++c) m.at(rank, c) = m.at(rank, c) * inv;
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m.at(r, col).zero()) continue;
      Scalar f = m.at(r, col);
      for (int c = 0; c < cols_; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

Matrix LinearDilation::embed_matrix(long long depth) const {
  const int d = dim();
  Matrix m(static_cast<int>(d * (depth + 1)), d, h.field());
  for (int i = 0; i < d; ++i) m.at(i, i) = h.field().one();
  return m;
}

Matrix LinearDilation::shift_matrix(long long depth) const {
  const int d = dim();
  Matrix m(static_cast<int>(d * (depth + 2)), static_cast<int>(d * (depth + 1)), h.field());
  for (long long slot = 0; slot <= depth; ++slot)
    for (int i = 0; i < d; ++i)
      m.at(static_cast<int>(d * (slot + 1)) + i, static_cast<int>(d * slot) + i) = h.field().one();
  return m;
}

Matrix LinearDilation::shift_power_embed(long long n, long long depth) const {
  require(n <= depth, Errc::out_of_range, "power exceeds the truncation");
  const int d = dim();
  Matrix m(static_cast<int>(d * (depth + 1)), d, h.field());
  for (int i = 0; i < d; ++i) m.at(static_cast<int>(d * n) + i, i) = h.field().one();
  return m;
}

Matrix LinearDilation::fold_matrix(long long depth) const {
  const int d = dim();
  Matrix m(static_cast<int>(d * (depth + 1)), static_cast<int>(d * (depth + 1)), h.field());
  Matrix power = Matrix::identity(d, h.field());
  for (long long slot = 0; slot <= depth; ++slot) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        m.at(i, static_cast<int>(d * slot) + j) = power.at(i, j);
    power = power * h;
  }
  return m;
}

LinearDilation linear_standard_dilation(const Matrix& h) {
  require(h.rows() == h.cols() && h.rows() >= 1, Errc::parse, "base map must be square");
  return {h};
}

VerificationReport verify_linear_dilation(const LinearDilation& ld, long long depth) {
  VerificationReport rep;
  const int d = ld.dim();
  Matrix fold = ld.fold_matrix(depth);
  Matrix embed = ld.embed_matrix(depth);

  bool identity_ok = true;
  for (long long n = 0; n <= depth; ++n) {
    Matrix lhs = fold * ld.shift_power_embed(n, depth);
    Matrix rhs = embed * ld.h.pow(n);
    ++rep.examined;
    if (!(lhs == rhs)) identity_ok = false;
  }
  rep.note("power-identity", identity_ok, "p v^n i != i h^n");

  rep.note("projection-idempotent", fold * fold == fold, "p^2 != p");
  rep.note("projection-range",
           fold.rank() == d && (fold * embed == embed), "range(p) != range(i)");
  rep.note("shift-injective", ld.shift_matrix(depth).rank() == d * (depth + 1),
           "truncated shift has a kernel");
  rep.note("embed-injective", embed.rank() == d, "embedding has a kernel");
  return rep;
}

}  // namespace dilatk
