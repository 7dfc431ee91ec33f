#ifndef LSF_HOMOLOGY_HPP
#define LSF_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "lsf/intmath.hpp"

namespace lsf::homology {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> entries;  // row-major

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}

  Int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
  static IntMatrix identity(int n);
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int det(const IntMatrix& m);  // Bareiss, exact; square input

struct SNFResult {
  IntMatrix u, d, v;  // u * input * v = d, u and v unimodular
};

// Smith normal form with nonnegative diagonal and d_i | d_{i+1}.
SNFResult smith_normal_form(const IntMatrix& m);

struct H1Result {
  Int order;  // 0 encodes an infinite group
  std::vector<Int> invariant_factors;  // nontrivial factors (> 1), ascending
};

// Abelian group presented by the matrix: rows are relations on the column
// generators. Order is the product of invariant factors when the cokernel is
// finite, 0 otherwise.
H1Result h1_from_presentation(const IntMatrix& m);

// Negative (all-minus) continued fraction chain of the framing p/q: the
// rational surgery becomes a chain of integer-framed unknots consecutively
// linked once, with |det| of the chain's linking matrix equal to |p|.
std::vector<Int> rational_chain(const Rational& framing);

struct SurgeryDescription {
  int components = 0;
  std::vector<Int> linking;        // components x components, symmetric, zero diagonal
  std::vector<Rational> framings;  // one per component

  Int lk(int i, int j) const { return linking[static_cast<std::size_t>(i) * components + j]; }
};

void validate(const SurgeryDescription& s);

// |H1| of the surgered manifold: rational framings are expanded through
// rational_chain and the linking-matrix determinant is returned in absolute
// value, 0 encoding an infinite group.
Int surgery_h1(const SurgeryDescription& s);

// |det M_n| for the three-component presentation
//   [[a11, a12, 0], [a21, 0, 1], [0, n p q + 1, -n p^2]],
// equal to |n p (A p + B q) + B| with A = -a12 a21 and B = a11.
Int pseudoseiferter_det(const Int& a11, const Int& a12, const Int& a21,
                        const Int& p, const Int& q, const Int& n);

}  // namespace lsf::homology

#endif
