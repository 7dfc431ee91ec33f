#include "lsf/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace lsf::braid {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = abs64(a);
  b = abs64(b);
  while (b) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// ---------------------------------------------------------------- matrices

template <class P>
using Mat = std::vector<std::vector<P>>;

template <class P>
Mat<P> identity_mat(std::size_t m, const P& one, const P& zero) {
  Mat<P> I(m, std::vector<P>(m, zero));
  for (std::size_t i = 0; i < m; ++i) I[i][i] = one;
  return I;
}

template <class P>
Mat<P> mat_mul(const Mat<P>& a, const Mat<P>& b, const P& zero) {
  const std::size_t m = a.size();
  Mat<P> c(m, std::vector<P>(m, zero));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

// Determinant by dynamic programming over column subsets (row-by-row minor
// expansion); exact and division-free, fine for the small matrices here.
template <class P>
P det_mat(const Mat<P>& a, const P& one, const P& zero) {
  const std::size_t m = a.size();
  if (m == 0) return one;
  std::vector<P> dp(std::size_t(1) << m, zero);
  dp[0] = one;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == m) continue;
    int parity = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::size_t(1) << j)) {
        ++parity;
        continue;
      }
      if (a[row][j].is_zero()) continue;
      const P term = dp[mask] * a[row][j];
      const std::size_t nmask = mask | (std::size_t(1) << j);
      // row - parity = number of used columns right of j = inversions added
      if ((row - parity) % 2 == 0)
        dp[nmask] = dp[nmask] + term;
      else
        dp[nmask] = dp[nmask] - term;
    }
  }
  return dp[dp.size() - 1];
}

// Reduced Burau matrix of a single letter; the variable monomials tvar and
// tinv are passed in so the same code serves one- and two-variable rings.
template <class P>
Mat<P> burau_letter(int letter, int strands, const P& one, const P& zero,
                    const P& tvar, const P& tinv) {
  const std::size_t m = static_cast<std::size_t>(strands - 1);
  Mat<P> B = identity_mat(m, one, zero);
  const int i = letter > 0 ? letter : -letter;
  const std::size_t r = static_cast<std::size_t>(i - 1);
  if (letter > 0) {
    if (r >= 1) B[r][r - 1] = tvar;
    B[r][r] = zero - tvar;
    if (r + 1 < m) B[r][r + 1] = one;
  } else {
    if (r >= 1) B[r][r - 1] = one;
    B[r][r] = zero - tinv;
    if (r + 1 < m) B[r][r + 1] = tinv;
  }
  return B;
}

template <class P>
Mat<P> burau_product(const BraidWord& w, const P& one, const P& zero,
                     const P& tvar, const P& tinv) {
  const std::size_t m = static_cast<std::size_t>(w.strands - 1);
  Mat<P> M = identity_mat(m, one, zero);
  for (int letter : w.letters)
    M = mat_mul(M, burau_letter(letter, w.strands, one, zero, tvar, tinv), zero);
  return M;
}

// ------------------------------------------------------------- word pieces

void append_run(std::vector<int>& out, int from, int to) {
  // ascending when from <= to, descending otherwise; inclusive
  if (from <= to)
    for (int k = from; k <= to; ++k) out.push_back(k);
  else
    for (int k = from; k >= to; --k) out.push_back(k);
}

std::vector<int> torus_letters(std::int64_t power, std::int64_t strands) {
  std::vector<int> out;
  for (std::int64_t rep = 0; rep < power; ++rep)
    append_run(out, 1, static_cast<int>(strands - 1));
  return out;
}

// Full twist on strands offset+1 .. offset+r.
std::vector<int> shifted_full_twist(int offset, int r) {
  std::vector<int> out;
  if (r <= 1) return out;
  for (int rep = 0; rep < r; ++rep)
    append_run(out, offset + 1, offset + r - 1);
  return out;
}

// Positive block crossing: the first r strands pass over the last s strands.
std::vector<int> theta_word(int r, int s) {
  std::vector<int> out;
  if (r < 1 || s < 1) return out;
  for (int j = 1; j <= s; ++j) append_run(out, r + j - 1, j);
  return out;
}

// (sigma_1...sigma_{q-1})^d = lft(d) * fan(d, q) for 1 <= d <= q.
std::vector<int> fan_word(int d, int q) {
  std::vector<int> out;
  for (int i = 0; i < d; ++i) append_run(out, d - i, q - 1 - i);
  return out;
}

// Positive permutation braid realizing perm (start position -> end
// position), built by bubble sorting; length equals the inversion count.
std::vector<int> perm_braid_word(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> arr(n);
  std::iota(arr.begin(), arr.end(), 0);
  std::vector<int> out;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (perm[arr[p]] > perm[arr[p + 1]]) {
        std::swap(arr[p], arr[p + 1]);
        out.push_back(p + 1);
        moved = true;
      }
    }
  }
  return out;
}

std::vector<int> half_twist_word(int n) {
  std::vector<int> rev(n);
  for (int i = 0; i < n; ++i) rev[i] = n - 1 - i;
  return perm_braid_word(rev);
}

std::vector<int> negated_reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  for (int& x : v) x = -x;
  return v;
}

void extend(std::vector<int>& out, const std::vector<int>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

// ------------------------------------------------------------------ basics

void validate(const BraidWord& w) {
  if (w.strands < 1) throw Error("braid needs at least one strand");
  for (int letter : w.letters) {
    const int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= w.strands) throw Error("braid letter out of range");
  }
}

bool is_positive(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](int l) { return l > 0; });
}

bool is_negative(const BraidWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(), [](int l) { return l < 0; });
}

BraidWord mirror(const BraidWord& w) {
  BraidWord m = w;
  for (int& l : m.letters) l = -l;
  return m;
}

std::vector<int> word_permutation(const BraidWord& w) {
  validate(w);
  std::vector<int> arr(static_cast<std::size_t>(w.strands));
  std::iota(arr.begin(), arr.end(), 0);
  for (int letter : w.letters) {
    const int i = (letter > 0 ? letter : -letter) - 1;
    std::swap(arr[i], arr[i + 1]);
  }
  std::vector<int> perm(arr.size());
  for (std::size_t pos = 0; pos < arr.size(); ++pos)
    perm[static_cast<std::size_t>(arr[pos])] = static_cast<int>(pos);
  return perm;
}

int closure_components(const BraidWord& w) {
  const std::vector<int> perm = word_permutation(w);
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(perm[j]);
    }
  }
  return cycles;
}

std::int64_t genus_positive(const BraidWord& w) {
  validate(w);
  if (!is_positive(w) && !is_negative(w)) throw NotPositive();
  if (closure_components(w) != 1) throw NotAKnot();
  return (1 - static_cast<std::int64_t>(w.strands) +
          static_cast<std::int64_t>(w.letters.size())) / 2;
}

ReduceResult reduce(const BraidWord& w) {
  validate(w);
  const bool negative = !w.letters.empty() && is_negative(w);
  if (!is_positive(w) && !negative) throw NotPositive();

  BraidWord cur = negative ? mirror(w) : w;
  bool changed = false;
  for (;;) {
    if (cur.strands == 1) break;
    std::vector<int> count(static_cast<std::size_t>(cur.strands), 0);
    for (int l : cur.letters) ++count[static_cast<std::size_t>(l)];
    int absent = 0, single = 0;
    for (int i = 1; i < cur.strands; ++i) {
      if (count[static_cast<std::size_t>(i)] == 0 && !absent) absent = i;
      if (count[static_cast<std::size_t>(i)] == 1 && !single) single = i;
    }
    if (absent) return {ReduceTag::Split, BraidWord{}};
    if (!single) break;
    // Delete the unique sigma_single and merge strands single, single+1.
    // Letters below and above the deleted index commute with each other, so
    // the closure is the connected sum of the two blocks along the merged
    // strand: low block first, then the shifted high block.
    BraidWord next;
    next.strands = cur.strands - 1;
    for (int l : cur.letters)
      if (l < single) next.letters.push_back(l);
    for (int l : cur.letters)
      if (l > single) next.letters.push_back(l - 1);
    cur = std::move(next);
    changed = true;
  }
  if (!changed) return {ReduceTag::Irreducible, w};
  return {ReduceTag::Reduced, negative ? mirror(cur) : cur};
}

KnotPoly1 burau_alexander(const BraidWord& w) {
  validate(w);
  if (closure_components(w) != 1) throw NotAKnot();
  if (w.strands == 1) return KnotPoly1::one();
  const KnotPoly1 one = KnotPoly1::one();
  const KnotPoly1 zero = KnotPoly1::zero();
  const KnotPoly1 t = KnotPoly1::monomial(1, 1);
  const KnotPoly1 tinv = KnotPoly1::monomial(-1, 1);
  Mat<KnotPoly1> M = burau_product(w, one, zero, t, tinv);
  const std::size_t m = M.size();
  for (std::size_t i = 0; i < m; ++i) M[i][i] = M[i][i] - one;
  const KnotPoly1 d = det_mat(M, one, zero);
  // det(Burau - I) = unit * (1 + t + ... + t^{strands-1}) * Delta.
  return divide_exact(d, cyclotomic_quotient(w.strands)).normalized_unit();
}

LinkPoly2 axis_link_poly(const BraidWord& w) {
  validate(w);
  if (closure_components(w) != 1) throw NotAKnot();
  const LinkPoly2 one = LinkPoly2::one();
  const LinkPoly2 zero = LinkPoly2::zero();
  const LinkPoly2 x = LinkPoly2::monomial(1, 0, 1);
  const LinkPoly2 xinv = LinkPoly2::monomial(-1, 0, 1);
  const LinkPoly2 y = LinkPoly2::monomial(0, 1, 1);
  if (w.strands == 1) return one;  // unknot plus axis is the Hopf link
  Mat<LinkPoly2> M = burau_product(w, one, zero, x, xinv);
  const std::size_t m = M.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      M[i][j] = y * M[i][j];
      if (i == j) M[i][j] = M[i][j] - one;
    }
  return det_mat(M, one, zero).normalized_unit();
}

KnotPoly1 torus_alexander(std::int64_t p, std::int64_t q) {
  const std::int64_t P = abs64(p), Q = abs64(q);
  if (P == 0 || Q == 0) throw Error("torus_alexander needs p, q nonzero");
  if (gcd64(P, Q) != 1) throw Error("torus_alexander needs coprime p, q");
  if (P == 1 || Q == 1) return KnotPoly1::one();
  auto tpow_minus_1 = [](std::int64_t e) {
    return KnotPoly1::monomial(e, 1) - KnotPoly1::one();
  };
  const KnotPoly1 num = tpow_minus_1(P * Q) * tpow_minus_1(1);
  return divide_exact(divide_exact(num, tpow_minus_1(P)), tpow_minus_1(Q))
      .normalized_unit();
}

BraidWord torus_braid(std::int64_t p, std::int64_t q) {
  if (q < 2) throw Error("torus_braid needs q >= 2");
  if (p == 0) throw Error("torus_braid needs p != 0");
  BraidWord w;
  w.strands = static_cast<int>(q);
  w.letters = torus_letters(abs64(p), q);
  if (p < 0)
    for (int& l : w.letters) l = -l;
  return w;
}

BraidWord staircase_braid(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw Error("staircase_braid needs p, q >= 1");
  BraidWord w;
  w.strands = static_cast<int>(p + q);
  for (std::int64_t i = 0; i < q; ++i)
    append_run(w.letters, static_cast<int>(q - i), static_cast<int>(q - i + p - 1));
  return w;
}

BraidWord full_twist(int strands) {
  if (strands < 1) throw Error("full_twist needs strands >= 1");
  BraidWord w;
  w.strands = strands;
  w.letters = shifted_full_twist(0, strands);
  return w;
}

namespace {

// n-twist along the braid axis of the staircase presentation (p > 0).
BraidWord twisted_torus_positive(std::int64_t p, std::int64_t q, std::int64_t n) {
  const int N = static_cast<int>(p + q);
  BraidWord out;
  out.strands = N;
  const BraidWord stair = staircase_braid(p, q);
  if (n >= 0) {
    out.letters = stair.letters;
    for (std::int64_t rep = 0; rep < n; ++rep)
      extend(out.letters, shifted_full_twist(0, N));
    return out;
  }
  // closure(beta FT^n) = closure((u Delta FT^{-n-1})^{-1}) where u is the
  // complement permutation braid: beta * u = Delta. A strand entering u at
  // position p is the strand of beta that ended there, and it must finish
  // at the w0-image of its original start.
  const std::vector<int> perm = word_permutation(stair);
  std::vector<int> comp(perm.size());
  for (std::size_t s = 0; s < perm.size(); ++s)
    comp[static_cast<std::size_t>(perm[s])] = N - 1 - static_cast<int>(s);
  std::vector<int> pos = perm_braid_word(comp);
  extend(pos, half_twist_word(N));
  for (std::int64_t rep = 0; rep < -n - 1; ++rep)
    extend(pos, shifted_full_twist(0, N));
  out.letters = negated_reversed(pos);
  return out;
}

// Mirror-world construction for p < 0 with P = |p| > q >= 2 normalized.
BraidWord twisted_torus_negative(std::int64_t P, std::int64_t Q, std::int64_t n);

BraidWord twisted_torus_unknot_family(std::int64_t m, std::int64_t n) {
  // Degenerate inputs where T(p,q) itself is trivial; m = |p+q| strands of
  // coherent twisting turn the unknot into torus knots T(nm-1, m).
  if (m <= 1 || abs64(n * m - 1) <= 1) {
    BraidWord w;
    w.strands = 1;
    return w;
  }
  return torus_braid(n * m - 1, m);
}

BraidWord twisted_torus_negative(std::int64_t P, std::int64_t Q, std::int64_t n) {
  // Represents T_{-P, Q, n}; output letters are mirrored by the caller's
  // contract (this function already returns the final signed word).
  const std::int64_t d = P - Q;
  BraidWord out;
  if (n <= 0) {
    std::vector<int> wpos;
    if (Q >= d) {
      out.strands = static_cast<int>(Q);
      wpos = torus_letters(P, Q);
    } else {
      out.strands = static_cast<int>(P);
      wpos = torus_letters(Q, P);
    }
    for (std::int64_t rep = 0; rep < -n; ++rep) {
      auto lft = shifted_full_twist(0, static_cast<int>(d));
      extend(wpos, lft);
    }
    out.letters = wpos;
    for (int& l : out.letters) l = -l;
    return out;
  }
  if (Q >= d) {
    // closure(torus^P * LFT_d^{-n}) = closure(LFT_d^{2-n} RFT_s ThTh Fan):
    // torus^P = FT_Q * torus^d, FT_Q = LFT_d RFT_s Th(d,s) Th(s,d) and
    // torus^d = LFT_d Fan(d,Q), with LFT_d central for the block factors.
    const int di = static_cast<int>(d), Qi = static_cast<int>(Q);
    const int s = Qi - di;
    std::vector<int> wpos;
    for (std::int64_t rep = 0; rep < 2 - n; ++rep)
      extend(wpos, shifted_full_twist(0, di));
    extend(wpos, shifted_full_twist(di, s));
    extend(wpos, theta_word(di, s));
    extend(wpos, theta_word(s, di));
    extend(wpos, fan_word(di, Qi));
    out.strands = Qi;
    out.letters = wpos;
    for (int& l : out.letters) l = -l;
    return out;
  }
  // |p| > 2q: the twist region does not fit beside the torus braiding; the
  // configuration rearranges into the mirrored family with 2q fewer columns.
  const std::int64_t P2 = P - 2 * Q;
  BraidWord inner = twisted_torus_braid(-P2, Q, n);
  return mirror(inner);
}

}  // namespace

BraidWord twisted_torus_braid(std::int64_t p, std::int64_t q, std::int64_t n) {
  if (q < 2) throw Error("twisted_torus_braid needs q >= 2");
  if (p == 0) throw Error("twisted_torus_braid needs p != 0");
  if (gcd64(p, q) != 1) throw Error("twisted_torus_braid needs gcd(|p|, q) = 1");
  if (p > 0) return twisted_torus_positive(p, q, n);
  if (n >= 3) throw OutOfProvenRange();
  // T_{p,q} = T_{-q,-p} unoriented; normalize so the first parameter
  // dominates, then work in the mirror of the positive family.
  std::int64_t P = -p, Q = q;
  if (P < Q) std::swap(P, Q);
  if (Q == 1) return twisted_torus_unknot_family(abs64(p + q), n);
  return twisted_torus_negative(P, Q, n);
}

// ------------------------------------------------------------------ census

namespace {

std::vector<int> reflect_letters(const std::vector<int>& w, int strands) {
  std::vector<int> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = strands - w[i];
  return out;
}

bool is_canonical(const std::vector<int>& w, int strands) {
  const std::size_t L = w.size();
  if (L == 0) return true;
  std::vector<std::vector<int>> variants;
  variants.push_back(w);
  {
    std::vector<int> r(w.rbegin(), w.rend());
    variants.push_back(r);
  }
  variants.push_back(reflect_letters(w, strands));
  {
    std::vector<int> rr = reflect_letters(w, strands);
    std::reverse(rr.begin(), rr.end());
    variants.push_back(rr);
  }
  std::vector<int> rot(L);
  for (const auto& v : variants) {
    for (std::size_t s = 0; s < L; ++s) {
      for (std::size_t i = 0; i < L; ++i) rot[i] = v[(s + i) % L];
      if (std::lexicographical_compare(rot.begin(), rot.end(), w.begin(), w.end()))
        return false;
    }
  }
  return true;
}

std::string poly_key(const KnotPoly1& p) {
  std::string key;
  for (const auto& [e, c] : p.terms()) {
    key += std::to_string(e);
    key += ':';
    key += c.str();
    key += ';';
  }
  return key;
}

struct CensusTask {
  int strands;
  int first_letter;  // 0 = the empty word (strands == 1 only)
  std::int64_t length;
};

std::vector<CensusEntry> run_census_task(const CensusTask& task, std::int64_t N) {
  std::vector<CensusEntry> found;
  const int n = task.strands;
  const std::int64_t L = task.length;
  BraidWord w;
  w.strands = n;
  if (task.first_letter == 0) {
    if (L == 0 && closure_components(w) == 1)
      found.push_back({N, burau_alexander(w), w});
    return found;
  }
  std::vector<int> letters(static_cast<std::size_t>(L), 1);
  letters[0] = task.first_letter;
  const int maxl = n - 1;
  for (;;) {
    // canonical-form and coverage filters before any real work
    bool ok = is_canonical(letters, n);
    if (ok) {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int l : letters) ++count[static_cast<std::size_t>(l)];
      for (int i = 1; i < n && ok; ++i)
        if (count[static_cast<std::size_t>(i)] < 2) ok = false;  // split or destabilizable
    }
    if (ok) {
      w.letters = letters;
      if (closure_components(w) == 1)
        found.push_back({N, burau_alexander(w), w});
    }
    // next word with the same first letter
    std::size_t pos = letters.size();
    while (pos > 1 && letters[pos - 1] == maxl) {
      letters[pos - 1] = 1;
      --pos;
    }
    if (pos <= 1) break;
    ++letters[pos - 1];
  }
  return found;
}

}  // namespace

std::vector<CensusEntry> enumerate_genus(std::int64_t N, int jobs) {
  if (N < 0) throw Error("genus must be >= 0");
  std::vector<CensusTask> tasks;
  for (int n = 1; n <= 2 * N + 1; ++n) {
    const std::int64_t L = 2 * N + n - 1;
    if (n == 1) {
      if (L == 0) tasks.push_back({1, 0, 0});
      continue;
    }
    if (L < 2 * (n - 1)) continue;  // some generator would occur < 2 times
    for (int first = 1; first <= n - 1; ++first) tasks.push_back({n, first, L});
  }

  std::vector<std::vector<CensusEntry>> results(tasks.size());
  const int workers = std::max(1, jobs);
  if (workers == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      results[i] = run_census_task(tasks[i], N);
  } else {
    std::vector<std::thread> pool;
    // static round-robin keeps the result slots deterministic
    for (int jb = 0; jb < workers; ++jb) {
      pool.emplace_back([&, jb]() {
        for (std::size_t i = static_cast<std::size_t>(jb); i < tasks.size();
             i += static_cast<std::size_t>(workers))
          results[i] = run_census_task(tasks[i], N);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<CensusEntry> census;
  std::map<std::string, std::size_t> seen;  // normalized Alexander -> index
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (auto& entry : results[i]) {
      const std::string key = poly_key(entry.alexander);
      if (seen.count(key)) continue;
      seen.emplace(key, census.size());
      census.push_back(std::move(entry));
    }
  }
  return census;
}

}  // namespace lsf::braid
