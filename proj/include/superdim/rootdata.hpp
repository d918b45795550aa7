#pragma once

// Root data of the basic classical Lie superalgebras in the distinguished
// simple-root system.
//
// Conventions (basis order, bilinear form, simple roots):
//   sl(p|q)      e1..ep, d1..dq; diag(+1^p, -1^q); e_i-e_{i+1}, e_p-d_1, d_j-d_{j+1}
//   osp(2m+1|2n) d1..dn, e1..em; diag(+1^n, -1^m); d_i-d_{i+1}, d_n-e_1, e_i-e_{i+1}, e_m
//                (m = 0: the last simple root is d_n itself, odd and non-isotropic)
//   osp(2m|2n)   as above but ending e_{m-1}-e_m, e_{m-1}+e_m
//   osp(2|2n)    d1..dn, e; diag(-1^n, +1); e-d_1, d_i-d_{i+1}, 2d_n
//   D(2|1;a)     e1,e2,e3; diag(-(1+a)/2, 1/2, a/2); e1-e2-e3, 2e2, 2e3
//   F(4)         d,e1,e2,e3; diag(-3,1,1,1); (d-e1-e2-e3)/2, e3, e2-e3, e1-e2
//   G(3)         d,e1,e2 with e3 = -e1-e2; Gram [[2,0,0],[0,-2,1],[0,1,-2]]; d+e1, e2, e3-e2
// Hidden simple root of g_0: 2d_n (osp), 2e1 (D(2|1;a)), d (F(4)), 2d (G(3)).
//
// Labels: l_i = (L, a_i) / norm_i with norm_i = (a_i,a_i)/2 for non-isotropic
// roots. For the isotropic odd root norm_s = (a_s, a_{s+1}), or -(a_s, a_{s-1})
// when a_s is the last simple root, so that a_{s,s-1} = -1 like a_{s,s+1}.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superdim/algebra.hpp"
#include "superdim/scalar.hpp"
#include "superdim/weyldim.hpp"

namespace superdim {

using Weight = std::vector<AffineScalar>;
using Matrix = std::vector<std::vector<AffineScalar>>;

struct Root {
  Weight weight;
  bool odd = false;
  int grade = 0;                 // coefficient of the odd simple root
  std::vector<long> expansion;   // coefficients in the simple roots

  bool operator==(const Root& o) const { return weight == o.weight && odd == o.odd; }
};

/// Marks the hidden root's position inside an even-part factor.
inline constexpr int kHiddenSlot = -1;

/// A simple factor of g_0 together with the g-label index feeding each of its
/// labels (kHiddenSlot for the hidden root).
struct EvenFactor {
  SimpleFactor factor;
  std::vector<int> slots;
};

struct EvenPart {
  std::vector<SimpleFactor> factors;
  bool center = false;
};

struct RootSystem {
  AlgebraId id = AlgebraId::f4();
  std::vector<std::string> basis;
  Matrix form;
  std::vector<Root> pos_even;
  std::vector<Root> pos_odd;
  std::vector<Root> simple;
  std::size_t s = 0;
  std::optional<Root> hidden;
  Weight rho0;
  Weight rho1;
  std::size_t N0 = 0;
  std::size_t N1 = 0;
  std::vector<AffineScalar> label_norm;  // one per simple root
  AffineScalar hidden_norm;              // (h,h)/2
  bool odd_isotropic = true;
  std::vector<EvenFactor> even_factors;
  bool center = false;
  std::vector<std::size_t> gauge;              // coordinates pinned to 0 when solving for a weight
  std::vector<std::size_t> typicality_roots;   // indices into pos_odd with 2a not an even root

  std::size_t rank() const { return simple.size(); }
  std::size_t dim() const { return basis.size(); }
  bool type_one() const { return id.type_one(); }

  /// The free parameter of weights (type I) or of the form (symbolic alpha).
  Param param() const {
    if (type_one()) return Param::OddLabel;
    if (id.symbolic_alpha()) return Param::Alpha;
    return Param::None;
  }
  bool form_is_constant() const {
    for (const auto& row : form)
      for (const auto& x : row)
        if (!x.is_constant()) return false;
    return true;
  }
  Weight rho() const {
    Weight r(rho0.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = rho0[i] - rho1[i];
    return r;
  }
};

// ---------------------------------------------------------------------------
// Weight arithmetic

inline Weight add(const Weight& x, const Weight& y) {
  Weight r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

inline Weight scale(const AffineScalar& c, const Weight& x) {
  Weight r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

inline AffineScalar pairing(const Matrix& form, const Weight& x, const Weight& y) {
  AffineScalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || form[i][j].is_zero()) continue;
      acc += form[i][j] * x[i] * y[j];
    }
  }
  return acc;
}

inline AffineScalar pairing(const RootSystem& rs, const Weight& x, const Weight& y) { return pairing(rs.form, x, y); }

/// num / den where den is either a nonzero constant or proportional to num.
inline AffineScalar divide(const AffineScalar& num, const AffineScalar& den) {
  if (den.is_zero()) throw std::logic_error("division by a vanishing pairing");
  if (den.is_constant()) return num / den.constant();
  return exact_ratio(num, den);
}

namespace detail {

/// Unique solution of A x = rhs by exact elimination; nullopt if inconsistent.
/// Throws std::logic_error when the system is underdetermined.
inline std::optional<std::vector<AffineScalar>> solve_unique(std::vector<std::vector<Rational>> A, std::vector<AffineScalar> rhs) {
  const std::size_t rows = A.size();
  const std::size_t cols = rows ? A[0].size() : 0;
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && A[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[row]);
    std::swap(rhs[p], rhs[row]);
    const Rational inv = 1 / A[row][col];
    for (auto& v : A[row]) v *= inv;
    rhs[row] = rhs[row] * AffineScalar(inv);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == row || A[k][col] == 0) continue;
      const Rational f = A[k][col];
      for (std::size_t c = col; c < cols; ++c) A[k][c] -= f * A[row][c];
      rhs[k] -= AffineScalar(f) * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t k = row; k < rows; ++k)
    if (!rhs[k].is_zero()) return std::nullopt;
  if (row < cols) throw std::logic_error("linear system is underdetermined");
  std::vector<AffineScalar> x(cols);
  for (std::size_t k = 0; k < row; ++k) x[pivot_col[k]] = rhs[k];
  return x;
}

inline Weight unit(std::size_t n, std::size_t i, Rational c = 1) {
  Weight w(n);
  w[i] = AffineScalar(std::move(c));
  return w;
}

/// Sparse constructor: {{index, coefficient}, ...}.
inline Weight vec(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Weight w(n);
  for (const auto& [i, c] : terms) w[i] += AffineScalar(c);
  return w;
}

inline Matrix diagonal(const std::vector<AffineScalar>& d) {
  Matrix m(d.size(), std::vector<AffineScalar>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

inline Root even_root(Weight w) { return Root{std::move(w), false, 0, {}}; }
inline Root odd_root(Weight w) { return Root{std::move(w), true, 0, {}}; }

inline std::vector<int> iota_slots(int from, int count) {
  std::vector<int> v;
  for (int i = 0; i < count; ++i) v.push_back(from + i);
  return v;
}

inline void build_sl(RootSystem& rs, int p, int q) {
  const std::size_t n = static_cast<std::size_t>(p + q);
  auto e = [&](int i) { return unit(n, static_cast<std::size_t>(i)); };
  auto d = [&](int j) { return unit(n, static_cast<std::size_t>(p + j)); };
  for (int i = 0; i < p; ++i) rs.basis.push_back("e" + std::to_string(i + 1));
  for (int j = 0; j < q; ++j) rs.basis.push_back("d" + std::to_string(j + 1));
  std::vector<AffineScalar> diag(n, AffineScalar(1));
  for (int j = 0; j < q; ++j) diag[static_cast<std::size_t>(p + j)] = -1;
  rs.form = diagonal(diag);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) rs.pos_even.push_back(even_root(add(e(i), scale(-1, e(j)))));
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) rs.pos_even.push_back(even_root(add(d(i), scale(-1, d(j)))));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) rs.pos_odd.push_back(odd_root(add(e(i), scale(-1, d(j)))));
  for (int i = 0; i + 1 < p; ++i) rs.simple.push_back(even_root(add(e(i), scale(-1, e(i + 1)))));
  rs.simple.push_back(odd_root(add(e(p - 1), scale(-1, d(0)))));
  for (int j = 0; j + 1 < q; ++j) rs.simple.push_back(even_root(add(d(j), scale(-1, d(j + 1)))));
  rs.s = static_cast<std::size_t>(p - 1);
  if (p >= 2) rs.even_factors.push_back({{Series::A, p - 1}, iota_slots(0, p - 1)});
  if (q >= 2) rs.even_factors.push_back({{Series::A, q - 1}, iota_slots(p, q - 1)});
  rs.center = true;
  rs.gauge = {n - 1};
}

// osp(M|2n) with M = 2m+1 (odd) or M = 2m, m >= 2 (even).
inline void build_osp_orthosymplectic(RootSystem& rs, int m, int nn, bool odd_M) {
  const std::size_t n = static_cast<std::size_t>(nn + m);
  auto d = [&](int i) { return unit(n, static_cast<std::size_t>(i)); };
  auto e = [&](int i) { return unit(n, static_cast<std::size_t>(nn + i)); };
  for (int i = 0; i < nn; ++i) rs.basis.push_back("d" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) rs.basis.push_back("e" + std::to_string(i + 1));
  std::vector<AffineScalar> diag(n, AffineScalar(1));
  for (int i = 0; i < m; ++i) diag[static_cast<std::size_t>(nn + i)] = -1;
  rs.form = diagonal(diag);

  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      rs.pos_even.push_back(even_root(add(d(i), scale(-1, d(j)))));
      rs.pos_even.push_back(even_root(add(d(i), d(j))));
    }
  for (int i = 0; i < nn; ++i) rs.pos_even.push_back(even_root(scale(2, d(i))));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      rs.pos_even.push_back(even_root(add(e(i), scale(-1, e(j)))));
      rs.pos_even.push_back(even_root(add(e(i), e(j))));
    }
  if (odd_M)
    for (int i = 0; i < m; ++i) rs.pos_even.push_back(even_root(e(i)));

  if (odd_M)
    for (int i = 0; i < nn; ++i) rs.pos_odd.push_back(odd_root(d(i)));
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < m; ++j) {
      rs.pos_odd.push_back(odd_root(add(d(i), scale(-1, e(j)))));
      rs.pos_odd.push_back(odd_root(add(d(i), e(j))));
    }

  for (int i = 0; i + 1 < nn; ++i) rs.simple.push_back(even_root(add(d(i), scale(-1, d(i + 1)))));
  if (m == 0) {
    rs.simple.push_back(odd_root(d(nn - 1)));
  } else {
    rs.simple.push_back(odd_root(add(d(nn - 1), scale(-1, e(0)))));
    for (int i = 0; i + 1 < m; ++i) rs.simple.push_back(even_root(add(e(i), scale(-1, e(i + 1)))));
    if (odd_M) rs.simple.push_back(even_root(e(m - 1)));
    else rs.simple.push_back(even_root(add(e(m - 2), e(m - 1))));
  }
  rs.s = static_cast<std::size_t>(nn - 1);
  rs.hidden = even_root(scale(2, d(nn - 1)));

  std::vector<int> c_slots = iota_slots(0, nn - 1);
  c_slots.push_back(kHiddenSlot);
  rs.even_factors.push_back({{Series::C, nn}, c_slots});
  if (m >= 1) rs.even_factors.push_back({{odd_M ? Series::B : Series::D, m}, iota_slots(nn, m)});
}

inline void build_osp2(RootSystem& rs, int nn) {
  const std::size_t n = static_cast<std::size_t>(nn + 1);
  auto d = [&](int i) { return unit(n, static_cast<std::size_t>(i)); };
  const Weight e = unit(n, static_cast<std::size_t>(nn));
  for (int i = 0; i < nn; ++i) rs.basis.push_back("d" + std::to_string(i + 1));
  rs.basis.push_back("e");
  std::vector<AffineScalar> diag(n, AffineScalar(-1));
  diag[static_cast<std::size_t>(nn)] = 1;
  rs.form = diagonal(diag);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      rs.pos_even.push_back(even_root(add(d(i), scale(-1, d(j)))));
      rs.pos_even.push_back(even_root(add(d(i), d(j))));
    }
  for (int i = 0; i < nn; ++i) rs.pos_even.push_back(even_root(scale(2, d(i))));
  for (int i = 0; i < nn; ++i) {
    rs.pos_odd.push_back(odd_root(add(e, scale(-1, d(i)))));
    rs.pos_odd.push_back(odd_root(add(e, d(i))));
  }
  rs.simple.push_back(odd_root(add(e, scale(-1, d(0)))));
  for (int i = 0; i + 1 < nn; ++i) rs.simple.push_back(even_root(add(d(i), scale(-1, d(i + 1)))));
  rs.simple.push_back(even_root(scale(2, d(nn - 1))));
  rs.s = 0;
  rs.even_factors.push_back({{Series::C, nn}, iota_slots(1, nn)});
  rs.center = true;
}

inline void build_d21a(RootSystem& rs, const std::optional<Rational>& alpha) {
  rs.basis = {"e1", "e2", "e3"};
  const AffineScalar a = alpha ? AffineScalar(*alpha) : AffineScalar::parameter(Param::Alpha);
  const Rational half(1, 2);
  rs.form = diagonal({-(AffineScalar(1) + a) / 2, AffineScalar(half), a / 2});
  for (std::size_t i = 0; i < 3; ++i) rs.pos_even.push_back(even_root(unit(3, i, 2)));
  for (int s2 : {1, -1})
    for (int s3 : {1, -1}) rs.pos_odd.push_back(odd_root(vec(3, {{0, 1}, {1, s2}, {2, s3}})));
  rs.simple = {odd_root(vec(3, {{0, 1}, {1, -1}, {2, -1}})), even_root(unit(3, 1, 2)), even_root(unit(3, 2, 2))};
  rs.s = 0;
  rs.hidden = even_root(unit(3, 0, 2));
  rs.even_factors = {{{Series::A, 1}, {kHiddenSlot}}, {{Series::A, 1}, {1}}, {{Series::A, 1}, {2}}};
}

inline void build_f4(RootSystem& rs) {
  rs.basis = {"d", "e1", "e2", "e3"};
  rs.form = diagonal({-3, 1, 1, 1});
  rs.pos_even.push_back(even_root(unit(4, 0)));
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) {
      rs.pos_even.push_back(even_root(vec(4, {{i, 1}, {j, -1}})));
      rs.pos_even.push_back(even_root(vec(4, {{i, 1}, {j, 1}})));
    }
  for (std::size_t i = 1; i <= 3; ++i) rs.pos_even.push_back(even_root(unit(4, i)));
  const Rational h(1, 2);
  for (int a : {1, -1})
    for (int b : {1, -1})
      for (int c : {1, -1}) rs.pos_odd.push_back(odd_root(vec(4, {{0, h}, {1, h * a}, {2, h * b}, {3, h * c}})));
  rs.simple = {odd_root(vec(4, {{0, h}, {1, -h}, {2, -h}, {3, -h}})), even_root(unit(4, 3)),
               even_root(vec(4, {{2, 1}, {3, -1}})), even_root(vec(4, {{1, 1}, {2, -1}}))};
  rs.s = 0;
  rs.hidden = even_root(unit(4, 0));
  rs.even_factors = {{{Series::A, 1}, {kHiddenSlot}}, {{Series::B, 3}, {3, 2, 1}}};
}

inline void build_g3(RootSystem& rs) {
  rs.basis = {"d", "e1", "e2"};
  rs.form = {{2, 0, 0}, {0, -2, 1}, {0, 1, -2}};
  const Weight dl = unit(3, 0);
  const Weight e1 = unit(3, 1);
  const Weight e2 = unit(3, 2);
  const Weight e3 = vec(3, {{1, -1}, {2, -1}});
  rs.pos_even.push_back(even_root(scale(2, dl)));
  for (const Weight& w : {e2, e3, scale(-1, e1), add(e3, scale(-1, e2)), add(e2, scale(-1, e1)), add(e3, scale(-1, e1))})
    rs.pos_even.push_back(even_root(w));
  rs.pos_odd.push_back(odd_root(dl));
  for (const Weight& x : {e1, e2, e3}) {
    rs.pos_odd.push_back(odd_root(add(dl, x)));
    rs.pos_odd.push_back(odd_root(add(dl, scale(-1, x))));
  }
  rs.simple = {odd_root(add(dl, e1)), even_root(e2), even_root(add(e3, scale(-1, e2)))};
  rs.s = 0;
  rs.hidden = even_root(scale(2, dl));
  rs.even_factors = {{{Series::A, 1}, {kHiddenSlot}}, {{Series::G2, 2}, {2, 1}}};
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
inline std::vector<std::vector<Rational>> inverse(std::vector<std::vector<Rational>> A) {
  const std::size_t n = A.size();
  std::vector<std::vector<Rational>> I(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && A[p][col] == 0) ++p;
    if (p == n) throw std::logic_error("singular matrix");
    std::swap(A[p], A[col]);
    std::swap(I[p], I[col]);
    const Rational inv = 1 / A[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      A[col][c] *= inv;
      I[col][c] *= inv;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == col || A[k][col] == 0) continue;
      const Rational f = A[k][col];
      for (std::size_t c = 0; c < n; ++c) {
        A[k][c] -= f * A[col][c];
        I[k][c] -= f * I[col][c];
      }
    }
  }
  return I;
}

/// Expresses weights in the simple roots via the left inverse (S^T S)^{-1} S^T
/// of the coordinate matrix S, verifying each reconstruction exactly.
class SimpleRootExpander {
 public:
  explicit SimpleRootExpander(const RootSystem& rs) : n_(rs.dim()), r_(rs.rank()), S_(n_, std::vector<Rational>(r_)) {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < r_; ++i) S_[k][i] = rs.simple[i].weight[k].value();
    std::vector<std::vector<Rational>> StS(r_, std::vector<Rational>(r_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j)
        for (std::size_t k = 0; k < n_; ++k) StS[i][j] += S_[k][i] * S_[k][j];
    const auto inv = inverse(StS);
    P_.assign(r_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t j = 0; j < r_; ++j) P_[i][k] += inv[i][j] * S_[k][j];
  }

  std::vector<long> operator()(const Weight& w) const {
    std::vector<Rational> c(r_);
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& v = w[k].value();
      if (v == 0) continue;
      for (std::size_t i = 0; i < r_; ++i) c[i] += P_[i][k] * v;
    }
    for (std::size_t k = 0; k < n_; ++k) {
      Rational back = 0;
      for (std::size_t i = 0; i < r_; ++i) back += S_[k][i] * c[i];
      if (back != w[k].value()) throw std::logic_error("root is not in the span of the simple roots");
    }
    std::vector<long> out;
    for (const auto& v : c) {
      if (!is_integer(v) || v < 0) throw std::logic_error("positive root with a non-natural simple-root expansion");
      out.push_back(numerator_of(v).convert_to<long>());
    }
    return out;
  }

 private:
  std::size_t n_, r_;
  std::vector<std::vector<Rational>> S_;
  std::vector<std::vector<Rational>> P_;
};

/// Derived data: expansions, grades, rho vectors, label normalizations.
inline void finalize(RootSystem& rs) {
  const SimpleRootExpander expand(rs);
  auto annotate = [&](Root& root) {
    root.expansion = expand(root.weight);
    root.grade = static_cast<int>(root.expansion[rs.s]);
    const bool grade_odd = root.grade % 2 != 0;
    if (grade_odd != root.odd) throw std::logic_error("grade and parity disagree");
  };
  for (auto& r : rs.pos_even) annotate(r);
  for (auto& r : rs.pos_odd) annotate(r);
  for (auto& r : rs.simple) annotate(r);
  if (rs.hidden) annotate(*rs.hidden);

  const std::size_t n = rs.dim();
  rs.rho0.assign(n, AffineScalar());
  rs.rho1.assign(n, AffineScalar());
  for (const auto& r : rs.pos_even) rs.rho0 = add(rs.rho0, r.weight);
  for (const auto& r : rs.pos_odd) rs.rho1 = add(rs.rho1, r.weight);
  rs.rho0 = scale(Rational(1, 2), rs.rho0);
  rs.rho1 = scale(Rational(1, 2), rs.rho1);
  rs.N0 = rs.pos_even.size();
  rs.N1 = rs.pos_odd.size();

  const std::size_t r = rs.rank();
  rs.label_norm.assign(r, AffineScalar());
  const AffineScalar ss = pairing(rs, rs.simple[rs.s].weight, rs.simple[rs.s].weight);
  rs.odd_isotropic = ss.is_zero();
  for (std::size_t i = 0; i < r; ++i) {
    if (i == rs.s && rs.odd_isotropic) {
      rs.label_norm[i] = rs.s + 1 < r ? pairing(rs, rs.simple[i].weight, rs.simple[i + 1].weight)
                                      : -pairing(rs, rs.simple[i].weight, rs.simple[i - 1].weight);
    } else {
      rs.label_norm[i] = pairing(rs, rs.simple[i].weight, rs.simple[i].weight) / Rational(2);
    }
    if (rs.label_norm[i].is_zero()) throw std::logic_error("vanishing label normalization");
  }
  if (rs.hidden) rs.hidden_norm = pairing(rs, rs.hidden->weight, rs.hidden->weight) / Rational(2);

  auto key = [](const Weight& w) {
    std::vector<Rational> v;
    for (const auto& x : w) v.push_back(x.value());
    return v;
  };
  std::set<std::vector<Rational>> even_set;
  for (const auto& e : rs.pos_even) even_set.insert(key(e.weight));
  rs.typicality_roots.clear();
  for (std::size_t k = 0; k < rs.pos_odd.size(); ++k)
    if (!even_set.count(key(scale(2, rs.pos_odd[k].weight)))) rs.typicality_roots.push_back(k);
}

}  // namespace detail

inline RootSystem build(const AlgebraId& id) {
  RootSystem rs;
  rs.id = id;
  switch (id.family()) {
    case Family::SL: detail::build_sl(rs, id.first(), id.second()); break;
    case Family::OSP:
      if (id.is_osp2()) detail::build_osp2(rs, id.second());
      else detail::build_osp_orthosymplectic(rs, id.orth_rank(), id.second(), id.is_osp_odd());
      break;
    case Family::D21A: detail::build_d21a(rs, id.alpha()); break;
    case Family::F4: detail::build_f4(rs); break;
    case Family::G3: detail::build_g3(rs); break;
  }
  detail::finalize(rs);
  return rs;
}

/// Same root system with the bilinear form multiplied by c != 0.
inline RootSystem rescaled(RootSystem rs, const Rational& c) {
  if (c == 0) throw ValidationError("form rescaling factor must be nonzero");
  for (auto& row : rs.form)
    for (auto& x : row) x = x * AffineScalar(c);
  detail::finalize(rs);
  return rs;
}

inline Matrix cartan_matrix(const RootSystem& rs) {
  const std::size_t r = rs.rank();
  Matrix a(r, std::vector<AffineScalar>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = divide(pairing(rs, rs.simple[i].weight, rs.simple[j].weight), rs.label_norm[i]);
  return a;
}

struct Shift {
  Rational value;
  Integer b;
};

inline Shift shift(const RootSystem& rs) {
  if (!rs.hidden) throw NotTypeII(to_string(rs.id) + " is of type I and has no shift");
  const AffineScalar v = divide(pairing(rs, rs.rho1, rs.hidden->weight), rs.hidden_norm);
  Shift out{v.value(), 0};
  out.b = floor_of(out.value);
  return out;
}

inline EvenPart even_part(const RootSystem& rs) {
  EvenPart p;
  for (const auto& f : rs.even_factors) p.factors.push_back(f.factor);
  p.center = rs.center;
  return p;
}

/// Dynkin labels (g-labels) of a weight given in coordinates.
inline std::vector<AffineScalar> labels_of(const RootSystem& rs, const Weight& coords) {
  std::vector<AffineScalar> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(divide(pairing(rs, coords, rs.simple[i].weight), rs.label_norm[i]));
  return out;
}

inline AffineScalar hidden_label_of(const RootSystem& rs, const Weight& coords) {
  if (!rs.hidden) throw NotTypeII("no hidden root");
  return divide(pairing(rs, coords, rs.hidden->weight), rs.hidden_norm);
}

/// Index of the positive odd root with the given simple-root expansion.
inline std::optional<std::size_t> find_odd_root(const RootSystem& rs, const std::vector<long>& expansion) {
  for (std::size_t k = 0; k < rs.pos_odd.size(); ++k)
    if (rs.pos_odd[k].expansion == expansion) return k;
  return std::nullopt;
}

inline std::string weight_to_string(const RootSystem& rs, const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) continue;
    const AffineScalar& c = w[i];
    std::string coeff;
    if (c.is_constant()) {
      if (c.constant() == 1) coeff = out.empty() ? "" : "+";
      else if (c.constant() == -1) coeff = "-";
      else coeff = (c.constant() > 0 && !out.empty() ? "+" : "") + to_string(c.constant()) + "*";
    } else {
      coeff = (out.empty() ? "" : "+") + std::string("(") + to_string(c) + ")*";
    }
    out += coeff + rs.basis[i];
  }
  return out.empty() ? "0" : out;
}

/// "a1+3*a2+a3" with 1-based simple-root indices.
inline std::string expansion_to_string(const std::vector<long>& expansion) {
  std::string out;
  for (std::size_t i = 0; i < expansion.size(); ++i) {
    if (expansion[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (expansion[i] != 1) out += std::to_string(expansion[i]) + "*";
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

/// ASCII Kac-Dynkin diagram. Blobs: O even, X isotropic odd, B non-isotropic
/// odd. Bonds: '-' one line, '=' two, '#' three; a '<' or '>' on a multiple
/// bond points at the shorter root. A branch node is drawn below its
/// attachment point.
inline std::string diagram(const RootSystem& rs) {
  const Matrix a = cartan_matrix(rs);
  const std::size_t r = rs.rank();
  auto blob = [&](std::size_t i) -> char {
    if (i != rs.s) return 'O';
    return rs.odd_isotropic ? 'X' : 'B';
  };
  auto bond = [&](std::size_t j, std::size_t k) -> std::string {
    if (rs.id.family() == Family::D21A) return "-";
    auto mag = [](const AffineScalar& x) {
      const Rational v = x.is_constant() ? x.constant() : x.slope();  // never parametric off D(2|1;a)
      return v < 0 ? Rational(-v) : v;
    };
    const Rational ajk = mag(a[j][k]);
    const Rational akj = mag(a[k][j]);
    const Rational lines = ajk > akj ? ajk : akj;
    const char sym = lines >= 3 ? '#' : lines == 2 ? '=' : '-';
    if (lines < 2) return std::string(1, sym);
    // The shorter root is the one whose row carries the larger entry.
    if (ajk > akj) return std::string(1, '<') + sym;
    return std::string(1, sym) + '>';
  };
  auto connected = [&](std::size_t j, std::size_t k) { return !a[j][k].is_zero() || !a[k][j].is_zero(); };

  if (rs.id.family() == Family::D21A) return "O-X-O";

  std::string line;
  std::vector<std::size_t> column(r, 0);
  std::optional<std::size_t> branch;
  for (std::size_t i = 0; i < r; ++i) {
    if (i > 0 && !connected(i - 1, i)) {
      branch = i;
      continue;
    }
    if (i > 0) line += bond(i - 1, i);
    column[i] = line.size();
    line += blob(i);
  }
  if (!branch) return line;
  std::size_t attach = 0;
  for (std::size_t j = 0; j < *branch; ++j)
    if (connected(j, *branch)) attach = j;
  const std::string pad(column[attach], ' ');
  return line + "\n" + pad + "|\n" + pad + blob(*branch);
}

}  // namespace superdim
