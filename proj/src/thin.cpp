#include "maxthin/thin.hpp"

namespace maxthin {

ThinTable::ThinTable(PrimeChar ch, unsigned maxdeg, std::vector<unsigned> dims,
                     std::vector<Mat2> ax, std::vector<Mat2> ay)
    : ch_(ch), maxdeg_(maxdeg), dims_(std::move(dims)), ax_(std::move(ax)), ay_(std::move(ay)) {
  if (maxdeg_ < 3) throw TableError("thin table needs maxdeg >= 3");
  if (dims_.size() != maxdeg_) throw TableError("expected one dimension per degree");
  if (dims_[0] != 2) throw TableError("dim L_1 must be 2");
  if (dims_[1] != 1) throw TableError("dim L_2 must be 1");
  for (unsigned d : dims_)
    if (d < 1 || d > 2) throw TableError("component dimensions must be 1 or 2");
  if (ax_.size() != maxdeg_ - 1 || ay_.size() != maxdeg_ - 1)
    throw TableError("expected one action matrix pair per degree in [1, maxdeg-1]");
  engine();  // validates canonical structure and covering
}

unsigned ThinTable::dim(unsigned d) const {
  if (d < 1 || d > maxdeg_) throw std::out_of_range("component degree out of range");
  return dims_[d - 1];
}

const Mat2& ThinTable::action(Gen g, unsigned d) const {
  if (d < 1 || d >= maxdeg_) throw std::out_of_range("no action at this degree");
  return g == Gen::x ? ax_[d - 1] : ay_[d - 1];
}

BracketEngine ThinTable::engine() const {
  BracketEngine eng(ch_, maxdeg_);
  for (unsigned d = 1; d < maxdeg_; ++d) {
    if (auto bad = eng.push_degree(dims_[d], ax_[d - 1], ay_[d - 1], CheckMode::structure_only)) {
      if (bad->kind == Inconsistency::Kind::covering) throw CoveringError(bad->degree, bad->str());
      throw TableError(bad->str());
    }
  }
  return eng;
}

bool operator==(const ThinTable& a, const ThinTable& b) {
  if (a.ch_ != b.ch_ || a.maxdeg_ != b.maxdeg_ || a.dims_ != b.dims_) return false;
  for (size_t i = 0; i < a.ax_.size(); ++i)
    if (!(a.ax_[i] == b.ax_[i]) || !(a.ay_[i] == b.ay_[i])) return false;
  return true;
}

namespace {

// c with a = c * b, when it exists.
std::optional<Scalar> solve_proportional(const Vec2& a, const Vec2& b, PrimeChar ch) {
  if (b.is_zero()) {
    if (a.is_zero()) return Scalar::zero(ch);
    return std::nullopt;
  }
  unsigned piv = 0;
  while (b.c[piv].is_zero()) ++piv;
  Scalar c = Scalar::zero(ch);
  try {
    c = a.c[piv].div_exact(b.c[piv]);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  for (unsigned r = 0; r < a.n; ++r)
    if (a.c[r] != c * b.c[r]) return std::nullopt;
  return c;
}

LeftNormedWord word_v(unsigned k) { return word_y_xi(k - 2); }  // v = [y x^{k-2}]

}  // namespace

DiamondProfile diamond_profile(const ThinTable& t) {
  DiamondProfile prof;
  for (unsigned d = 2; d <= t.maxdeg(); ++d)
    if (t.dim(d) == 2) prof.diamond_degrees.push_back(d);
  if (prof.diamond_degrees.empty()) return prof;
  const unsigned k = prof.diamond_degrees.front();
  prof.k = k;
  PrimeChar ch = t.field();
  BracketEngine eng = t.engine();

  HomElem v = eng.eval(word_v(k));
  if (v.is_zero()) {
    prof.notes.push_back("[y x^(k-2)] vanishes; diamond relations not extractable");
    return prof;
  }
  if (k % 2 == 0) prof.notes.push_back("second diamond in even degree");
  const unsigned long long half = (k - 1) / 2;
  prof.half_k_divisible = !ch.zero_char() && half % ch.p() == 0;

  if (k + 1 <= t.maxdeg()) {
    HomElem vyy = eng.eval(word_v(k).appended(Gen::y).appended(Gen::y));
    prof.vyy_zero = vyy.is_zero();
    HomElem vxy = eng.eval(word_v(k).appended(Gen::x).appended(Gen::y));
    HomElem vyx = eng.eval(word_v(k).appended(Gen::y).appended(Gen::x));
    Scalar halfk(ch, static_cast<long long>(half));
    prof.relation_holds = vxy.v == vyx.v.scaled(halfk);

    // x-normalization scalar alpha with [v x x] + ((k+1)/2) alpha [v y x] = 0
    bool k_is_minus_one = !ch.zero_char() && (k + 1) % ch.p() == 0;
    if (!k_is_minus_one) {
      HomElem vxx = eng.eval(word_v(k).appended(Gen::x).appended(Gen::x));
      if (auto c = solve_proportional(vxx.v, vyx.v, ch)) {
        try {
          prof.alpha = (-(Scalar(ch, 2) * *c)).div_exact(Scalar(ch, static_cast<long long>(k + 1)));
        } catch (const std::domain_error&) {
          prof.notes.push_back("x-normalization scalar is not integral");
        }
      } else {
        prof.notes.push_back("[v x x] is not proportional to [v y x]");
      }
    } else {
      prof.notes.push_back("x-normalization impossible: k = -1 mod p");
    }
  } else {
    prof.notes.push_back("diamond relations lie beyond the truncation");
  }

  if (t.maxdeg() > k) {
    prof.h_scanned_up_to = t.maxdeg() - k;
    for (unsigned hh = 1; k + hh <= t.maxdeg(); ++hh) {
      LeftNormedWord w = word_v(k).appended(Gen::y).appended_run(Gen::x, hh - 1).appended(Gen::y);
      if (!eng.eval(w).is_zero()) {
        prof.h = hh;
        break;
      }
    }
  }
  return prof;
}

namespace {

Mat2 mat_add_scaled(const Mat2& a, const Mat2& b, const Scalar& s) {
  Mat2 m = a;
  for (unsigned i = 0; i < unsigned(m.rows) * m.cols; ++i) m.a[i] = a.a[i] + b.a[i] * s;
  return m;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 m = Mat2::zero(a.a[0].field(), a.rows, b.cols);
  for (unsigned r = 0; r < a.rows; ++r)
    for (unsigned c = 0; c < b.cols; ++c)
      for (unsigned t = 0; t < a.cols; ++t) m.at(r, c) += a.at(r, t) * b.at(t, c);
  return m;
}

Mat2 mat_inverse(const Mat2& s, PrimeChar ch) {
  if (s.rows != s.cols) throw NormalizationError("basis matrix is not square");
  if (s.rows == 1) {
    Mat2 m = Mat2::zero(ch, 1, 1);
    m.at(0, 0) = s.at(0, 0).inverse();
    return m;
  }
  Scalar det = s.at(0, 0) * s.at(1, 1) - s.at(0, 1) * s.at(1, 0);
  Scalar dinv = det.inverse();  // throws for non-unit integer determinants
  Mat2 m = Mat2::zero(ch, 2, 2);
  m.at(0, 0) = s.at(1, 1) * dinv;
  m.at(0, 1) = -s.at(0, 1) * dinv;
  m.at(1, 0) = -s.at(1, 0) * dinv;
  m.at(1, 1) = s.at(0, 0) * dinv;
  return m;
}

}  // namespace

std::pair<Scalar, ThinTable> normalize_x(const ThinTable& t, unsigned k) {
  PrimeChar ch = t.field();
  if (k < 3 || k > t.maxdeg() || t.dim(k) != 2)
    throw NormalizationError("k is not a diamond degree of this table");
  for (unsigned d = 2; d < k; ++d)
    if (t.dim(d) == 2) throw NormalizationError("k is not the second diamond");
  if (k + 1 > t.maxdeg()) throw NormalizationError("truncation too shallow to normalize");
  if (!ch.zero_char() && (k + 1) % ch.p() == 0)
    throw NormalizationError("normalization impossible: k = -1 mod p");

  BracketEngine eng = t.engine();
  LeftNormedWord v = word_y_xi(k - 2);
  HomElem vyy = eng.eval(v.appended(Gen::y).appended(Gen::y));
  if (!vyy.is_zero()) throw NormalizationError("normalization needs [v y y] = 0");
  HomElem vxx = eng.eval(v.appended(Gen::x).appended(Gen::x));
  HomElem vyx = eng.eval(v.appended(Gen::y).appended(Gen::x));
  auto c = solve_proportional(vxx.v, vyx.v, ch);
  if (!c) throw NormalizationError("[v x x] is not proportional to [v y x]");
  Scalar alpha = Scalar::zero(ch);
  try {
    alpha = (-(Scalar(ch, 2) * *c)).div_exact(Scalar(ch, static_cast<long long>(k + 1)));
  } catch (const std::domain_error&) {
    throw NormalizationError("no exact normalization scalar under integer semantics");
  }

  // Substitute x' = x + alpha y and re-canonicalize the component bases.
  // S_d expresses the new basis of L_d in the old one; coordinates transform
  // by S^{-1}, actions by M' = S_{d+1}^{-1} (M_x + alpha M_y) S_d.
  std::vector<unsigned> dims;
  std::vector<Mat2> nax, nay;
  dims.reserve(t.maxdeg());
  for (unsigned d = 1; d <= t.maxdeg(); ++d) dims.push_back(t.dim(d));
  Mat2 s = Mat2::zero(ch, 2, 2);
  s.at(0, 0) = Scalar::one(ch);
  s.at(1, 0) = alpha;
  s.at(1, 1) = Scalar::one(ch);
  for (unsigned d = 1; d < t.maxdeg(); ++d) {
    Mat2 mx = mat_add_scaled(t.action(Gen::x, d), t.action(Gen::y, d), alpha);
    Mat2 my = t.action(Gen::y, d);
    Mat2 hx = mat_mul(mx, s);
    Mat2 hy = mat_mul(my, s);
    // canonical scan over (x-images, y-images) picks the new basis upstairs
    const unsigned dnext = t.dim(d + 1);
    Mat2 snext = Mat2::zero(ch, dnext, dnext);
    unsigned pivot = 0;
    for (unsigned gi = 0; gi < 2 && pivot < dnext; ++gi) {
      const Mat2& m = gi == 0 ? hx : hy;
      for (unsigned col = 0; col < m.cols && pivot < dnext; ++col) {
        Vec2 cand = m.col(col);
        // accept as pivot if independent from the columns already chosen
        bool ok = !cand.is_zero();
        if (ok && pivot == 1) {
          Scalar det = snext.at(0, 0) * cand.c[1] - snext.at(1, 0) * cand.c[0];
          ok = !det.is_zero();
        }
        if (ok) {
          for (unsigned r = 0; r < dnext; ++r) snext.at(r, pivot) = cand.c[r];
          ++pivot;
        }
      }
    }
    if (pivot != dnext) throw NormalizationError("substitution broke the covering property");
    Mat2 sinv = mat_inverse(snext, ch);
    nax.push_back(mat_mul(sinv, hx));
    nay.push_back(mat_mul(sinv, hy));
    s = snext;
  }
  return {alpha, ThinTable(ch, t.maxdeg(), std::move(dims), std::move(nax), std::move(nay))};
}

bool metabelian_quotient_check(const ThinTable& t, unsigned k) {
  if (k > t.maxdeg()) throw std::out_of_range("metabelian check exceeds maxdeg");
  BracketEngine eng = t.engine();
  for (unsigned i = 2; i + 2 < k; ++i)
    for (unsigned j = 2; i + j < k; ++j)
      for (unsigned zi = 0; zi < eng.dim(i); ++zi)
        for (unsigned wj = 0; wj < eng.dim(j); ++wj)
          if (!eng.bracket_basis(i, zi, j, wj).is_zero()) return false;
  return true;
}

std::optional<Inconsistency> jacobi_consistency(const ThinTable& t, unsigned n,
                                                bool cross_check) {
  if (n > t.maxdeg()) throw std::out_of_range("consistency scan exceeds maxdeg");
  return BracketEngine::recheck(t.engine(), n, cross_check);
}

HomElem eval_word(const ThinTable& t, const LeftNormedWord& w) { return t.engine().eval(w); }

}  // namespace maxthin
