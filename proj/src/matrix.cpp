#include "chevkit/matrix.hpp"

namespace chevkit {

Mat::Mat(Field f, int n) : F_(f), n_(n), a_((size_t)n * n, f.zero()) {}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n);
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::diag(const std::vector<FieldElem>& d) {
  Mat m(d.at(0).field(), (int)d.size());
  for (size_t i = 0; i < d.size(); ++i) m((int)i, (int)i) = d[i];
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<long long>>& rows) {
  Mat m(f, (int)rows.size());
  for (int i = 0; i < m.n_; ++i)
    for (int j = 0; j < m.n_; ++j) m(i, j) = f.from_int(rows[i][j]);
  return m;
}

Mat Mat::unit(Field f, int n, int i, int j) {
  Mat m(f, n);
  m(i - 1, j - 1) = f.one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat m(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const FieldElem& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  Mat m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  Mat m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

Mat Mat::scaled(const FieldElem& c) const {
  Mat m = *this;
  for (auto& x : m.a_) x *= c;
  return m;
}

Mat Mat::transpose() const {
  Mat m(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Mat::is_identity() const { return *this == identity(F_, n_); }

namespace {

// Row reduction in place; returns pivot columns. det accumulates the determinant factor.
std::vector<int> reduce(std::vector<std::vector<FieldElem>>& r, int cols, FieldElem* det, std::vector<std::vector<FieldElem>>* side) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < cols && row < (int)r.size(); ++c) {
    int p = row;
    while (p < (int)r.size() && r[p][c].is_zero()) ++p;
    if (p == (int)r.size()) continue;
    if (p != row) {
      std::swap(r[p], r[row]);
      if (side) std::swap((*side)[p], (*side)[row]);
      if (det) *det = -*det;
    }
    FieldElem inv = r[row][c].inv();
    if (det) *det *= r[row][c];
    for (auto& x : r[row]) x *= inv;
    if (side)
      for (auto& x : (*side)[row]) x *= inv;
    for (int i = 0; i < (int)r.size(); ++i) {
      if (i == row || r[i][c].is_zero()) continue;
      FieldElem f = r[i][c];
      for (int j = 0; j < cols; ++j) r[i][j] -= f * r[row][j];
      if (side)
        for (size_t j = 0; j < (*side)[i].size(); ++j) (*side)[i][j] -= f * (*side)[row][j];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

std::vector<std::vector<FieldElem>> rows_of(const Mat& m) {
  std::vector<std::vector<FieldElem>> r;
  for (int i = 0; i < m.size(); ++i) r.push_back(m.row(i));
  return r;
}

}  // namespace

std::vector<FieldElem> Mat::row(int i) const { return {a_.begin() + (size_t)i * n_, a_.begin() + (size_t)(i + 1) * n_}; }

Mat Mat::inverse() const {
  auto r = rows_of(*this);
  auto side = rows_of(identity(F_, n_));
  auto piv = reduce(r, n_, nullptr, &side);
  if ((int)piv.size() < n_) throw ZeroDivisor("singular matrix");
  Mat m(F_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = side[i][j];
  return m;
}

FieldElem Mat::det() const {
  auto r = rows_of(*this);
  FieldElem d = F_.one();
  auto piv = reduce(r, n_, &d, nullptr);
  return (int)piv.size() < n_ ? F_.zero() : d;
}

int Mat::rank() const {
  auto r = rows_of(*this);
  return (int)reduce(r, n_, nullptr, nullptr).size();
}

std::vector<FieldElem> Mat::apply(const std::vector<FieldElem>& v) const {
  std::vector<FieldElem> out(n_, F_.zero());
  for (int i = 0; i < n_; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n_; ++j) out[j] += v[i] * (*this)(i, j);
  }
  return out;
}

std::vector<std::vector<FieldElem>> left_kernel(const Mat& m) {
  // v m = 0  <=>  m^T v^T = 0
  auto r = rows_of(m.transpose());
  int n = m.size();
  auto piv = reduce(r, n, nullptr, nullptr);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<FieldElem>> basis;
  Field F = m.field();
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<FieldElem> v(n, F.zero());
    v[f] = F.one();
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r[k][f];
    basis.push_back(v);
  }
  return basis;
}

std::vector<std::vector<FieldElem>> Mat::left_eigenspace(const FieldElem& c) const {
  return left_kernel(*this - identity(F_, n_).scaled(c));
}

std::string Mat::str() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < n_; ++j) s += (j ? " " : "") + (*this)(i, j).str();
  }
  return s;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, a[0].field().zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

bool upoly_eq(const UPoly& a, const UPoly& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    bool za = i >= a.size() || a[i].is_zero(), zb = i >= b.size() || b[i].is_zero();
    if (za && zb) continue;
    if (za != zb || a[i] != b[i]) return false;
  }
  return true;
}

std::string upoly_str(const UPoly& p, const std::string& var) {
  std::string s;
  for (int k = (int)p.size() - 1; k >= 0; --k) {
    if (p[k].is_zero()) continue;
    std::string c = p[k].str();
    std::string mon = k == 0 ? "" : k == 1 ? var : var + "^" + std::to_string(k);
    std::string term = mon.empty() ? c : p[k].is_one() ? mon : "(" + c + ")" + mon;
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

UPoly char_poly(const Mat& m) {
  int n = m.size();
  Field F = m.field();
  if (n == 0) return {F.one()};
  // coefficient vectors highest degree first
  std::vector<FieldElem> vect{F.one(), -m(0, 0)};
  for (int r = 1; r < n; ++r) {
    std::vector<FieldElem> t{F.one(), -m(r, r)};
    std::vector<FieldElem> v(r);
    for (int i = 0; i < r; ++i) v[i] = m(i, r);
    for (int k = 0; k < r; ++k) {
      FieldElem d = F.zero();
      for (int i = 0; i < r; ++i) d += m(r, i) * v[i];
      t.push_back(-d);
      std::vector<FieldElem> nv(r, F.zero());
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) nv[i] += m(i, j) * v[j];
      v = nv;
    }
    std::vector<FieldElem> nvect(r + 2, F.zero());
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) nvect[i] += t[i - j] * vect[j];
    vect = nvect;
  }
  return UPoly(vect.rbegin(), vect.rend());
}

}  // namespace chevkit
