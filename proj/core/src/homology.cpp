#include "lsf/homology.hpp"

#include <algorithm>

namespace lsf::homology {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw Error("matrix dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
  const int n = m.rows;
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int val = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = val / prev;  // Bareiss: division is exact
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

SNFResult smith_normal_form(const IntMatrix& m) {
  SNFResult res{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto row_op = [&](int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < d.cols; ++j) d.at(dst, j) += f * d.at(src, j);
    for (int j = 0; j < u.cols; ++j) u.at(dst, j) += f * u.at(src, j);
  };
  auto col_op = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < d.rows; ++i) d.at(i, dst) += f * d.at(i, src);
    for (int i = 0; i < v.rows; ++i) v.at(i, dst) += f * v.at(i, src);
  };
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < d.cols; ++j) std::swap(d.at(a, j), d.at(b, j));
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < d.rows; ++i) std::swap(d.at(i, a), d.at(i, b));
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
  };
  auto negate_row = [&](int r) {
    for (int j = 0; j < d.cols; ++j) d.at(r, j) = -d.at(r, j);
    for (int j = 0; j < u.cols; ++j) u.at(r, j) = -u.at(r, j);
  };

  const int steps = std::min(d.rows, d.cols);
  for (int t = 0; t < steps; ++t) {
    // Bring the absolutely smallest nonzero entry of the lower-right block
    // to (t,t), then clear its row and column, iterating until clean.
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
          if (d.at(i, j) == 0) continue;
          if (pi < 0 || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        pi = t;  // block is zero; done with this and all later pivots
        break;
      }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (int i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        const Int f = d.at(i, t) / d.at(t, t);
        if (f != 0) row_op(i, t, -f);
        if (d.at(i, t) != 0) dirty = true;  // remainder stays for next pass
      }
      for (int j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        const Int f = d.at(t, j) / d.at(t, t);
        if (f != 0) col_op(j, t, -f);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (!dirty) break;
    }
    if (d.at(t, t) == 0) break;
    if (d.at(t, t) < 0) negate_row(t);
  }

  // Enforce the divisibility chain d_i | d_{i+1}.
  for (;;) {
    bool fixed = true;
    for (int t = 0; t + 1 < steps; ++t) {
      const Int a = d.at(t, t), b = d.at(t + 1, t + 1);
      if (a == 0 && b != 0) {
        swap_rows(t, t + 1);
        swap_cols(t, t + 1);
        fixed = false;
        continue;
      }
      if (a == 0 || b % a == 0) continue;
      fixed = false;
      // Fold the next diagonal entry into position t and re-reduce the 2x2.
      col_op(t, t + 1, 1);
      for (;;) {
        // gcd reduction of the 2x2 block at (t, t)
        if (d.at(t + 1, t) != 0) {
          const Int f = d.at(t, t) / d.at(t + 1, t);
          row_op(t, t + 1, -f);
          swap_rows(t, t + 1);
          continue;
        }
        break;
      }
      // clear the off-diagonal remnants
      if (d.at(t, t + 1) != 0) {
        const Int f = d.at(t, t + 1) / d.at(t, t);
        col_op(t + 1, t, -f);
      }
      if (d.at(t, t) < 0) negate_row(t);
      if (d.at(t + 1, t + 1) < 0) negate_row(t + 1);
    }
    if (fixed) break;
  }
  return res;
}

H1Result h1_from_presentation(const IntMatrix& m) {
  const SNFResult snf = smith_normal_form(m);
  H1Result res;
  const int steps = std::min(m.rows, m.cols);
  int rank = 0;
  Int order = 1;
  for (int t = 0; t < steps; ++t) {
    const Int& dt = snf.d.at(t, t);
    if (dt == 0) continue;
    ++rank;
    order *= dt;
    if (dt > 1) res.invariant_factors.push_back(dt);
  }
  // Free part: one Z per generator not hit by a nonzero invariant factor.
  res.order = (rank == m.cols) ? order : Int(0);
  return res;
}

std::vector<Int> rational_chain(const Rational& framing) {
  if (framing.den() < 1) throw Error("framing denominator must be >= 1");
  std::vector<Int> chain;
  Rational x = framing;
  for (;;) {
    const Int a = x.ceil();
    chain.push_back(a);
    const Rational rem = Rational(a) - x;  // in [0, 1)
    if (rem.is_zero()) break;
    x = rem.reciprocal();  // > 1, so subsequent entries are >= 2
  }
  return chain;
}

void validate(const SurgeryDescription& s) {
  if (s.components < 1) throw Error("surgery needs at least one component");
  if (static_cast<int>(s.framings.size()) != s.components)
    throw Error("one framing per component required");
  if (static_cast<int>(s.linking.size()) != s.components * s.components)
    throw Error("linking matrix size mismatch");
  for (int i = 0; i < s.components; ++i) {
    if (s.lk(i, i) != 0) throw Error("linking matrix must have zero diagonal");
    for (int j = 0; j < s.components; ++j)
      if (s.lk(i, j) != s.lk(j, i)) throw Error("linking matrix must be symmetric");
  }
}

Int surgery_h1(const SurgeryDescription& s) {
  validate(s);
  // Expand every non-integral framing into its chain; the first chain entry
  // replaces the diagonal, later entries extend the matrix tridiagonally.
  std::vector<std::vector<Int>> chains;
  int total = s.components;
  for (const auto& f : s.framings) {
    chains.push_back(rational_chain(f));
    total += static_cast<int>(chains.back().size()) - 1;
  }
  IntMatrix m(total, total);
  for (int i = 0; i < s.components; ++i)
    for (int j = 0; j < s.components; ++j)
      if (i != j) m.at(i, j) = s.lk(i, j);
  int next = s.components;
  for (int i = 0; i < s.components; ++i) {
    const auto& chain = chains[static_cast<std::size_t>(i)];
    m.at(i, i) = chain[0];
    int prev = i;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      m.at(next, next) = chain[k];
      m.at(prev, next) = 1;
      m.at(next, prev) = 1;
      prev = next;
      ++next;
    }
  }
  Int dd = det(m);
  return dd < 0 ? Int(-dd) : dd;
}

Int pseudoseiferter_det(const Int& a11, const Int& a12, const Int& a21,
                        const Int& p, const Int& q, const Int& n) {
  if (p < 2) throw Error("pseudoseiferter_det needs p >= 2");
  if (gcd_int(p, q) != 1) throw Error("pseudoseiferter_det needs gcd(p, q) = 1");
  const Int d = -a11 * (n * p * q + 1) + a12 * a21 * n * p * p;
  return d < 0 ? Int(-d) : d;
}

}  // namespace lsf::homology
