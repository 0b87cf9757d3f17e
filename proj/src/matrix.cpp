#include "matrix.hpp"

#include <sstream>

#include "error.hpp"

namespace cforge {

MatrixF MatrixF::identity(PrimeField f, uint32_t n) {
  MatrixF m(f, n, n);
  for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

bool MatrixF::is_zero() const {
  for (uint32_t v : a_)
    if (v) return false;
  return true;
}

bool MatrixF::is_identity() const {
  if (rows_ != cols_) return false;
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

MatrixF MatrixF::operator+(const MatrixF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix add: shape or field mismatch");
  MatrixF r(field_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.add(a_[k], o.a_[k]);
  return r;
}

MatrixF MatrixF::operator-(const MatrixF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix sub: shape or field mismatch");
  MatrixF r(field_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.sub(a_[k], o.a_[k]);
  return r;
}

MatrixF MatrixF::operator*(const MatrixF& o) const {
  if (cols_ != o.rows_ || !(field_ == o.field_))
    throw std::invalid_argument("matrix mul: shape or field mismatch");
  const uint64_t p = field_.modulus();
  MatrixF r(field_, rows_, o.cols_);
  for (uint32_t i = 0; i < rows_; ++i) {
    uint32_t* ri = r.row(i);
    const uint32_t* ai = row(i);
    for (uint32_t k = 0; k < cols_; ++k) {
      const uint64_t v = ai[k];
      if (!v) continue;
      const uint32_t* bk = o.row(k);
      for (uint32_t j = 0; j < o.cols_; ++j)
        ri[j] = uint32_t((ri[j] + v * bk[j]) % p);
    }
  }
  return r;
}

MatrixF MatrixF::scaled(uint32_t c) const {
  MatrixF r(field_, rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
  return r;
}

MatrixF MatrixF::transposed() const {
  MatrixF r(field_, cols_, rows_);
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

std::optional<std::pair<std::pair<uint32_t, uint32_t>, uint32_t>> MatrixF::first_nonzero() const {
  for (uint32_t i = 0; i < rows_; ++i)
    for (uint32_t j = 0; j < cols_; ++j)
      if (at(i, j)) return std::make_pair(std::make_pair(i, j), at(i, j));
  return std::nullopt;
}

std::string MatrixF::to_text() const {
  std::ostringstream os;
  os << "matrix " << rows_ << " " << cols_ << " mod " << field_.modulus() << "\n";
  for (uint32_t i = 0; i < rows_; ++i) {
    for (uint32_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

MatrixF kronecker(const MatrixF& a, const MatrixF& b) {
  if (!(a.field() == b.field()))
    throw std::invalid_argument("kronecker: field mismatch");
  MatrixF r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (uint32_t i1 = 0; i1 < a.rows(); ++i1)
    for (uint32_t j1 = 0; j1 < a.cols(); ++j1) {
      const uint32_t v = a.at(i1, j1);
      if (!v) continue;
      for (uint32_t i2 = 0; i2 < b.rows(); ++i2)
        for (uint32_t j2 = 0; j2 < b.cols(); ++j2)
          r.set(i1 * b.rows() + i2, j1 * b.cols() + j2, a.field().mul(v, b.at(i2, j2)));
    }
  return r;
}

MatrixF matrix_from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows) {
  const uint32_t r = uint32_t(rows.size());
  const uint32_t c = r ? uint32_t(rows[0].size()) : 0;
  MatrixF m(f, r, c);
  for (uint32_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("matrix_from_rows: ragged rows");
    for (uint32_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] % f.modulus());
  }
  return m;
}

MatrixF matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line)) throw ParseError("empty matrix text", 1);
  ++line_no;
  std::istringstream hs(line);
  std::string kw, modkw;
  uint32_t r = 0, c = 0, p = 0;
  if (!(hs >> kw >> r >> c >> modkw >> p) || kw != "matrix" || modkw != "mod")
    throw ParseError("expected 'matrix <rows> <cols> mod <p>'", line_no);
  PrimeField f(p);
  MatrixF m(f, r, c);
  for (uint32_t i = 0; i < r; ++i) {
    if (!std::getline(is, line)) throw ParseError("missing matrix row", line_no + 1);
    ++line_no;
    std::istringstream rs(line);
    for (uint32_t j = 0; j < c; ++j) {
      int64_t v;
      if (!(rs >> v)) throw ParseError("short matrix row", line_no);
      if (v < 0 || v >= int64_t(p))
        throw ParseError("entry out of canonical range [0, p)", line_no);
      m.set(i, j, uint32_t(v));
    }
    int64_t extra;
    if (rs >> extra) throw ParseError("trailing entries in matrix row", line_no);
  }
  return m;
}

namespace {

// generic in-place reduction used for odd p; returns pivot columns
std::vector<uint32_t> rref_generic(MatrixF& m) {
  const PrimeField f = m.field();
  const uint32_t rows = m.rows(), cols = m.cols();
  std::vector<uint32_t> pivots;
  uint32_t r = 0;
  for (uint32_t c = 0; c < cols && r < rows; ++c) {
    uint32_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (uint32_t j = 0; j < cols; ++j) {
        uint32_t t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    const uint32_t inv = f.inv(m.at(r, c));
    if (inv != 1)
      for (uint32_t j = c; j < cols; ++j) m.set(r, j, f.mul(m.at(r, j), inv));
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const uint32_t v = m.at(i, c);
      if (!v) continue;
      for (uint32_t j = c; j < cols; ++j)
        m.set(i, j, f.sub(m.at(i, j), f.mul(v, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// bit-packed elimination for p = 2
std::vector<uint32_t> rref_packed2(MatrixF& m) {
  const uint32_t rows = m.rows(), cols = m.cols();
  const uint32_t words = (cols + 63) / 64;
  std::vector<uint64_t> bits(size_t(rows) * words, 0);
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j)
      if (m.at(i, j)) bits[size_t(i) * words + (j >> 6)] |= uint64_t(1) << (j & 63);
  std::vector<uint32_t> pivots;
  uint32_t r = 0;
  for (uint32_t c = 0; c < cols && r < rows; ++c) {
    const uint32_t w = c >> 6;
    const uint64_t mask = uint64_t(1) << (c & 63);
    uint32_t pr = r;
    while (pr < rows && !(bits[size_t(pr) * words + w] & mask)) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (uint32_t k = 0; k < words; ++k)
        std::swap(bits[size_t(r) * words + k], bits[size_t(pr) * words + k]);
    for (uint32_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      if (bits[size_t(i) * words + w] & mask)
        for (uint32_t k = 0; k < words; ++k)
          bits[size_t(i) * words + k] ^= bits[size_t(r) * words + k];
    }
    pivots.push_back(c);
    ++r;
  }
  for (uint32_t i = 0; i < rows; ++i)
    for (uint32_t j = 0; j < cols; ++j)
      m.set(i, j, (bits[size_t(i) * words + (j >> 6)] >> (j & 63)) & 1);
  return pivots;
}

}  // namespace

Rref rref(const MatrixF& m) {
  Rref r;
  r.m = m;
  r.pivots = m.field().modulus() == 2 ? rref_packed2(r.m) : rref_generic(r.m);
  return r;
}

uint32_t rank(const MatrixF& m) { return rref(m).rank(); }

MatrixF nullspace_basis(const MatrixF& m) {
  const Rref rr = rref(m);
  const uint32_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (uint32_t c : rr.pivots) is_pivot[c] = true;
  std::vector<uint32_t> free_cols;
  for (uint32_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatrixF basis(m.field(), n, uint32_t(free_cols.size()));
  for (uint32_t k = 0; k < free_cols.size(); ++k) {
    const uint32_t fc = free_cols[k];
    basis.set(fc, k, 1);
    for (uint32_t pr = 0; pr < rr.pivots.size(); ++pr)
      basis.set(rr.pivots[pr], k, m.field().neg(rr.m.at(pr, fc)));
  }
  return basis;
}

MatrixF hstack(const MatrixF& a, const MatrixF& b) {
  if (a.rows() != b.rows() || !(a.field() == b.field()))
    throw std::invalid_argument("hstack: shape or field mismatch");
  MatrixF r(a.field(), a.rows(), a.cols() + b.cols());
  for (uint32_t i = 0; i < a.rows(); ++i) {
    for (uint32_t j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (uint32_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

MatrixF block_diag(const std::vector<MatrixF>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("block_diag: no blocks");
  uint32_t n = 0, m = 0;
  for (const auto& b : blocks) n += b.rows(), m += b.cols();
  MatrixF r(blocks[0].field(), n, m);
  uint32_t oi = 0, oj = 0;
  for (const auto& b : blocks) {
    for (uint32_t i = 0; i < b.rows(); ++i)
      for (uint32_t j = 0; j < b.cols(); ++j) r.set(oi + i, oj + j, b.at(i, j));
    oi += b.rows();
    oj += b.cols();
  }
  return r;
}

std::optional<MatrixF> solve(const MatrixF& a, const MatrixF& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Rref rr = rref(hstack(a, b));
  // inconsistent iff a pivot lands in the b-part
  for (uint32_t c : rr.pivots)
    if (c >= a.cols()) return std::nullopt;
  MatrixF x(a.field(), a.cols(), b.cols());
  for (uint32_t pr = 0; pr < rr.pivots.size(); ++pr)
    for (uint32_t j = 0; j < b.cols(); ++j)
      x.set(rr.pivots[pr], j, rr.m.at(pr, a.cols() + j));
  return x;
}

std::optional<MatrixF> inverse(const MatrixF& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, MatrixF::identity(m.field(), m.rows()));
  if (!x) return std::nullopt;
  if (!((*x * m).is_identity())) return std::nullopt;  // rank deficient
  return x;
}

}  // namespace cforge
