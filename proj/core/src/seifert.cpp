#include "lsf/seifert.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace lsf::seifert {

namespace {

// Rational displaced by an infinitesimal: value r + side*epsilon with
// side in {-1, 0, +1}. Exact one-sided limits of the verdict function are
// evaluated by running the classification on these values symbolically.
struct RatE {
  Rational r;
  int side = 0;
};

bool lt(const RatE& a, const RatE& b) {
  if (a.r != b.r) return a.r < b.r;
  return a.side < b.side;
}

// a + side*eps < q
bool lt_q(const RatE& a, const Rational& q) {
  if (a.r != q) return a.r < q;
  return a.side < 0;
}

RatE complement(const RatE& a) { return {Rational(1) - a.r, -a.side}; }

// Split off the integer part so the remainder lies in the epsilon-order
// interval (0,1) or equals exactly zero.
struct FoldedRatE {
  Int z;
  RatE frac;  // frac.r in [0,1); (0, 0) means the fiber drops
};

FoldedRatE fold(const RatE& x) {
  Int z = x.r.floor();
  Rational f = x.r - Rational(z);
  if (f.is_zero() && x.side < 0) {
    // just below an integer: 1 - eps with the obstruction shifted down
    return {z - 1, {Rational(1), -1}};
  }
  return {z, {f, x.side}};
}

struct KernelResult {
  Verdict verdict;
  int branch = 0;
  std::optional<JNWitness> witness;
  bool lens = false;  // decided by the s <= 2 Euler-number rule
};

// Simplest (minimal denominator) rational in the interval between lo and hi
// with the given endpoint openness; nullopt when the interval is empty.
std::optional<Rational> simplest_between(const Rational& lo, bool lo_open,
                                         const Rational& hi, bool hi_open) {
  if (lo > hi) return std::nullopt;
  if (lo == hi) {
    if (lo_open || hi_open) return std::nullopt;
    return lo;
  }
  const Int fl = lo.floor();
  const Rational n0 = lo_open ? Rational(fl + 1) : Rational(lo.ceil());
  if (n0 < hi || (n0 == hi && !hi_open)) return n0;
  if (lo == Rational(fl) && lo_open) {
    // Interval (fl, hi): the minimal denominator is realized by fl + 1/y for
    // the smallest admissible integer y.
    const Rational a = (hi - Rational(fl)).reciprocal();
    Int yi = a.floor() + 1;
    if (!hi_open && a.is_integer()) yi = a.num();
    return Rational(fl) + Rational(Int(1), yi);
  }
  // Both endpoints lie strictly inside (fl, fl+1); recurse on reciprocals.
  const Rational lo2 = (hi - Rational(fl)).reciprocal();
  const Rational hi2 = (lo - Rational(fl)).reciprocal();
  auto inner = simplest_between(lo2, hi_open, hi2, lo_open);
  if (!inner) return std::nullopt;
  return Rational(fl) + inner->reciprocal();
}

// Jankins-Neumann style witness search over epsilon-displaced ratios.
std::optional<JNWitness> jn_witness_e(const std::vector<RatE>& sorted) {
  const std::size_t s = sorted.size();
  if (s < 3) throw Error("jn_witness needs at least three fibers");
  const RatE& block_max = sorted[s - 3];  // r_{s-2}
  const RatE& rm = sorted[s - 2];         // r_{s-1}
  const RatE& rl = sorted[s - 1];         // r_s

  // a/k <= 1/2 can never clear r_{s-1} >= 1/2, and the target interval
  // (r_{s-1}, 1 - r_s) must be nonempty.
  if (!lt_q(rm, Rational(1, 2))) return std::nullopt;
  {
    const Rational hi = Rational(1) - rl.r;
    if (rm.r > hi || (rm.r == hi && !(rm.side < 0 && rl.side < 0)))
      return std::nullopt;
  }

  Int kmax;
  if (block_max.r.is_zero()) {
    // An epsilon fiber just above zero never constrains k. The witness then
    // exists iff some a/k <= 1/2 fits in the interval (r_{s-1}, 1 - r_s);
    // the simplest such fraction bounds the search.
    const Rational half(1, 2);
    Rational lo = rm.r;
    bool lo_open = rm.side >= 0;  // a/k must exceed rm in the eps order
    Rational hi = Rational(1) - rl.r;
    bool hi_open = rl.side >= 0;
    if (hi > half || (hi == half && hi_open)) {
      hi = half;
      hi_open = false;
    }
    auto sb = simplest_between(lo, lo_open, hi, hi_open);
    if (!sb) return std::nullopt;
    kmax = sb->den();
    if (kmax < 2) kmax = 2;
  } else {
    // r_{s-2} < 1/k bounds k.
    const Int p = block_max.r.num();
    const Int q = block_max.r.den();
    kmax = (block_max.side < 0) ? Int(q / p) : Int((q - 1) / p);
    if (kmax < 2) return std::nullopt;
  }

  for (Int k = 2; k <= kmax; ++k) {
    if (!lt_q(block_max, Rational(1, k))) continue;
    for (Int a = 1; a * 2 <= k; ++a) {
      if (gcd_int(a, k) != 1) continue;
      if (!lt_q(rm, Rational(a, k))) continue;
      if (!lt_q(rl, Rational(k - a, k))) continue;
      return JNWitness{a, k};
    }
  }
  return std::nullopt;
}

// Theorem-style classification of S^2(b; ratios) where the ratios may carry
// epsilon displacements; every input ratio lies in (0,1) in the eps order.
KernelResult classify_kernel(Int b, std::vector<RatE> ratios) {
  std::sort(ratios.begin(), ratios.end(), lt);
  const std::size_t s = ratios.size();
  KernelResult res;
  if (s <= 2) {
    // Lens space (or S^1 x S^2 / reducible edge): L-space iff e != 0.
    Rational e(b);
    int side = 0;
    for (const auto& r : ratios) {
      e = e + r.r;
      side += r.side;
    }
    const bool zero = e.is_zero() && side == 0;
    res.lens = true;
    res.verdict = zero ? Verdict::NotLSpace : Verdict::LSpace;
    return res;
  }
  const Int s_int(static_cast<long long>(s));
  if (Int(-(s_int - 2)) <= b && b <= Int(-2)) {
    res.verdict = Verdict::NotLSpace;
    res.branch = 1;
    return res;
  }
  if (b == -1) {
    auto w = jn_witness_e(ratios);
    res.branch = 2;
    if (w) {
      res.verdict = Verdict::NotLSpace;
      res.witness = w;
    } else {
      res.verdict = Verdict::LSpace;
    }
    return res;
  }
  if (b == -(s_int - 1)) {
    std::vector<RatE> comp;
    comp.reserve(s);
    for (auto it = ratios.rbegin(); it != ratios.rend(); ++it)
      comp.push_back(complement(*it));
    auto w = jn_witness_e(comp);
    res.branch = 3;
    if (w) {
      res.verdict = Verdict::NotLSpace;
      res.witness = w;
    } else {
      res.verdict = Verdict::LSpace;
    }
    return res;
  }
  res.verdict = Verdict::LSpace;
  return res;
}

LSpaceResult result_from_kernel(const KernelResult& k) {
  LSpaceResult out;
  out.verdict = k.verdict;
  std::ostringstream cert;
  if (k.lens) {
    out.branch = 0;
    cert << (k.verdict == Verdict::LSpace ? "lens" : "euler-zero");
  } else if (k.verdict == Verdict::NotLSpace) {
    out.branch = k.branch;
    if (k.branch == 1) {
      cert << "range(1)";
    } else {
      out.witness = k.witness;
      cert << "witness(" << k.branch << "," << k.witness->a.str() << "/"
           << k.witness->k.str() << ")";
    }
  } else {
    out.branch = 0;
    if (k.branch == 2 || k.branch == 3) {
      cert << "no-witness(" << k.branch << ")";
    } else {
      cert << "b-range";
    }
  }
  out.certificate = cert.str();
  return out;
}

std::vector<RatE> exact_ratios(const SeifertForm& f) {
  std::vector<RatE> rs;
  rs.reserve(f.ratios.size());
  for (const auto& r : f.ratios) rs.push_back({r, 0});
  return rs;
}

// Verdict of S^2(b; base..., x) where x is an epsilon-displaced rational;
// folding of the integer part happens here.
Verdict verdict_with_extra(const Int& b, const std::vector<Rational>& base, const RatE& x) {
  FoldedRatE fx = fold(x);
  std::vector<RatE> rs;
  rs.reserve(base.size() + 1);
  for (const auto& r : base) rs.push_back({r, 0});
  if (!(fx.frac.r.is_zero() && fx.frac.side == 0)) rs.push_back(fx.frac);
  return classify_kernel(b + fx.z, std::move(rs)).verdict;
}

}  // namespace

std::string SeifertForm::str() const {
  std::ostringstream os;
  os << "S2(" << b.str() << ";";
  bool first = true;
  for (const auto& r : ratios) {
    os << (first ? " " : ", ") << r.str();
    first = false;
  }
  if (degenerate) os << (first ? " inf" : ", inf");
  os << ")";
  return os.str();
}

SeifertForm normalize(const Int& b, const std::vector<std::optional<Rational>>& raw) {
  SeifertForm f;
  f.b = b;
  int degenerate_count = 0;
  for (const auto& entry : raw) {
    if (!entry.has_value()) {
      if (++degenerate_count > 1) throw TooManyDegenerate();
      f.degenerate = true;
      continue;
    }
    const Int z = entry->floor();
    f.b += z;
    const Rational frac = *entry - Rational(z);
    if (!frac.is_zero()) f.ratios.push_back(frac);
  }
  std::sort(f.ratios.begin(), f.ratios.end());
  return f;
}

Int h1_order(const SeifertForm& f) {
  if (f.degenerate) throw Unsupported("h1_order of a degenerate fibration");
  Int prod = 1;
  for (const auto& r : f.ratios) prod *= r.den();
  Int total = f.b * prod;
  for (const auto& r : f.ratios) total += r.num() * (prod / r.den());
  return total < 0 ? Int(-total) : total;
}

std::optional<JNWitness> jn_witness(const std::vector<Rational>& sorted_ratios) {
  std::vector<RatE> rs;
  rs.reserve(sorted_ratios.size());
  for (const auto& r : sorted_ratios) {
    if (!(Rational(0) < r && r < Rational(1)))
      throw Error("jn_witness ratios must lie strictly in (0,1)");
    rs.push_back({r, 0});
  }
  for (std::size_t i = 1; i < rs.size(); ++i)
    if (rs[i].r < rs[i - 1].r) throw Error("jn_witness ratios must be sorted ascending");
  return jn_witness_e(rs);
}

LSpaceResult is_lspace(const SeifertForm& f) {
  if (f.degenerate) {
    // A connected sum of lens spaces.
    LSpaceResult out;
    out.verdict = Verdict::LSpace;
    out.certificate = "degenerate";
    return out;
  }
  return result_from_kernel(classify_kernel(f.b, exact_ratios(f)));
}

void validate(const SeifertFamily& fam) {
  const Int det = fam.t * fam.w - fam.u * fam.v;
  if (det != 1 && det != -1) throw Error("family requires t*w - u*v = +-1");
  for (const auto& r : fam.base_ratios)
    if (!(Rational(0) < r && r < Rational(1)))
      throw Error("family base ratios must lie strictly in (0,1)");
}

SeifertForm family_member(const SeifertFamily& fam, std::int64_t n) {
  validate(fam);
  const Int den = fam.t * Int(n) + fam.v;
  std::vector<std::optional<Rational>> raw;
  raw.reserve(fam.base_ratios.size() + 1);
  for (const auto& r : fam.base_ratios) raw.emplace_back(r);
  if (den == 0) {
    raw.emplace_back(std::nullopt);
  } else {
    raw.emplace_back(Rational(fam.u * Int(n) + fam.w, den));
  }
  return normalize(fam.b, raw);
}

SeifertForm family_limit(const SeifertFamily& fam) {
  validate(fam);
  std::vector<std::optional<Rational>> raw;
  raw.reserve(fam.base_ratios.size() + 1);
  for (const auto& r : fam.base_ratios) raw.emplace_back(r);
  if (fam.t == 0) {
    raw.emplace_back(std::nullopt);
  } else {
    raw.emplace_back(Rational(fam.u, fam.t));
  }
  return normalize(fam.b, raw);
}

FamilyReport classify_family(const SeifertFamily& fam, std::int64_t n_min,
                             std::int64_t n_max, int jobs) {
  if (n_min > n_max) throw Error("empty window");
  validate(fam);
  FamilyReport rep;

  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<Verdict> verdicts(count);
  std::vector<char> degen(count, 0);
  auto run_chunk = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::int64_t n = n_min + static_cast<std::int64_t>(i);
      const SeifertForm m = family_member(fam, n);
      degen[i] = m.degenerate ? 1 : 0;
      verdicts[i] = is_lspace(m).verdict;
    }
  };
  const int workers = std::max(1, jobs);
  if (workers == 1 || count < 64) {
    run_chunk(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t step = (count + workers - 1) / workers;
    for (int j = 0; j < workers; ++j) {
      const std::size_t lo = std::min(count, static_cast<std::size_t>(j) * step);
      const std::size_t hi = std::min(count, lo + step);
      if (lo < hi) pool.emplace_back(run_chunk, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t n = n_min + static_cast<std::int64_t>(i);
    if (degen[i]) rep.degenerate_members.push_back(n);
    if (!rep.runs.empty() && rep.runs.back().verdict == verdicts[i]) {
      rep.runs.back().hi = n;
    } else {
      rep.runs.push_back({n, n, verdicts[i]});
    }
  }

  rep.limit = is_lspace(family_limit(fam)).verdict;

  // Exact eventual verdicts. For t != 0 the member ratio approaches u/t from
  // the side of sign(det) as n -> +infinity (opposite side on the other
  // tail); evaluate the classification at u/t +- epsilon symbolically. For
  // t = 0 the ratio is an integer drifting to +-infinity, so evaluate far
  // enough out that |b_eff| clears every branch test.
  if (fam.t != 0) {
    const int det = (fam.t * fam.w - fam.u * fam.v) > 0 ? 1 : -1;
    const Rational asym(fam.u, fam.t);
    rep.right_tail = verdict_with_extra(fam.b, fam.base_ratios, {asym, det});
    rep.left_tail = verdict_with_extra(fam.b, fam.base_ratios, {asym, -det});
  } else {
    // |u| = |v| = 1 here, so r_s(n) = (n u + w)/v is an integer sequence.
    Int bound = fam.b < 0 ? Int(-fam.b) : fam.b;
    bound += (fam.w < 0 ? Int(-fam.w) : fam.w) + Int(fam.base_ratios.size()) + 8;
    std::int64_t far = static_cast<std::int64_t>(bound.convert_to<long long>());
    rep.right_tail = is_lspace(family_member(fam, far)).verdict;
    rep.left_tail = is_lspace(family_member(fam, -far)).verdict;
  }

  if (!rep.runs.empty()) {
    if (rep.runs.back().verdict == rep.right_tail) {
      rep.right_stable = true;
      rep.right_threshold = rep.runs.back().lo;
    }
    if (rep.runs.front().verdict == rep.left_tail) {
      rep.left_stable = true;
      rep.left_threshold = rep.runs.front().hi;
    }
  }
  rep.unstable_window = !rep.left_stable && !rep.right_stable;

  if (fam.base_ratios.size() + 1 >= 4) {
    const bool some_tail_lspace =
        rep.left_tail == Verdict::LSpace || rep.right_tail == Verdict::LSpace;
    rep.dichotomy = (some_tail_lspace == (rep.limit == Verdict::LSpace));
  }
  return rep;
}

}  // namespace lsf::seifert
