#include "maxthin/table.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxthin {

Vec2 Vec2::zero(PrimeChar ch, unsigned n) {
  Vec2 v;
  v.n = static_cast<uint8_t>(n);
  for (unsigned i = 0; i < n; ++i) v.c[i] = Scalar::zero(ch);
  return v;
}

Vec2 Vec2::unit(PrimeChar ch, unsigned n, unsigned idx) {
  Vec2 v = zero(ch, n);
  v.c[idx] = Scalar::one(ch);
  return v;
}

bool Vec2::is_zero() const {
  for (unsigned i = 0; i < n; ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Vec2 Vec2::operator+(const Vec2& o) const {
  Vec2 v = *this;
  for (unsigned i = 0; i < n; ++i) v.c[i] += o.c[i];
  return v;
}

Vec2 Vec2::operator-() const {
  Vec2 v = *this;
  for (unsigned i = 0; i < n; ++i) v.c[i] = -v.c[i];
  return v;
}

Vec2 Vec2::scaled(const Scalar& s) const {
  Vec2 v = *this;
  for (unsigned i = 0; i < n; ++i) v.c[i] *= s;
  return v;
}

bool Vec2::operator==(const Vec2& o) const {
  if (n != o.n) return false;
  for (unsigned i = 0; i < n; ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

std::string Vec2::str() const {
  std::string s = "(";
  for (unsigned i = 0; i < n; ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + ")";
}

Mat2 Mat2::zero(PrimeChar ch, unsigned rows, unsigned cols) {
  Mat2 m;
  m.rows = static_cast<uint8_t>(rows);
  m.cols = static_cast<uint8_t>(cols);
  for (unsigned i = 0; i < rows * cols; ++i) m.a[i] = Scalar::zero(ch);
  return m;
}

Vec2 Mat2::apply(const Vec2& v) const {
  Vec2 out = Vec2::zero(v.n ? v.c[0].field() : PrimeChar(0), rows);
  for (unsigned r = 0; r < rows; ++r)
    for (unsigned c = 0; c < cols; ++c) out.c[r] += at(r, c) * v.c[c];
  return out;
}

Vec2 Mat2::col(unsigned c) const {
  Vec2 v;
  v.n = rows;
  for (unsigned r = 0; r < rows; ++r) v.c[r] = at(r, c);
  return v;
}

bool Mat2::operator==(const Mat2& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (unsigned i = 0; i < unsigned(rows) * cols; ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

BilMat BilMat::zero(PrimeChar ch, unsigned rows, unsigned dl, unsigned dr) {
  BilMat b;
  b.rows = static_cast<uint8_t>(rows);
  b.dl = static_cast<uint8_t>(dl);
  b.dr = static_cast<uint8_t>(dr);
  for (unsigned i = 0; i < rows * dl * dr; ++i) b.a[i] = Scalar::zero(ch);
  return b;
}

Vec2 BilMat::apply_basis(unsigned zl, unsigned zr) const {
  Vec2 v;
  v.n = rows;
  for (unsigned r = 0; r < rows; ++r) v.c[r] = at(r, zl, zr);
  return v;
}

std::string Inconsistency::str() const {
  const char* k = "";
  switch (kind) {
    case Kind::structure: k = "structure"; break;
    case Kind::covering: k = "covering"; break;
    case Kind::antisymmetry: k = "antisymmetry"; break;
    case Kind::alternating: k = "alternating"; break;
    case Kind::jacobi: k = "jacobi"; break;
  }
  std::string s = std::string(k) + " failure at degree " + std::to_string(degree);
  if (i || j) s += " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

BracketEngine::BracketEngine(PrimeChar ch, unsigned capacity) : ch_(ch), cap_(capacity) {
  if (capacity < 2 || capacity > 64) throw std::invalid_argument("engine capacity out of range");
  dims_.assign(cap_ + 2, 0);
  dims_[1] = 2;
  ax_.resize(cap_ + 2);
  ay_.resize(cap_ + 2);
  defs_.resize(cap_ + 2);
  bcache_.resize((cap_ + 1) * (cap_ + 1));
}

unsigned BracketEngine::dim(unsigned d) const {
  if (d < 1 || d > maxdeg_) throw std::out_of_range("component degree out of range");
  return dims_[d];
}

std::pair<Mat2, Mat2> BracketEngine::degree_one_actions(PrimeChar ch) {
  // [alpha x + beta y, x] = beta e_2 ; [alpha x + beta y, y] = -alpha e_2
  Mat2 mx = Mat2::zero(ch, 1, 2);
  mx.at(0, 1) = Scalar::one(ch);
  Mat2 my = Mat2::zero(ch, 1, 2);
  my.at(0, 0) = -Scalar::one(ch);
  return {mx, my};
}

const Mat2& BracketEngine::action(Gen g, unsigned d) const {
  if (d < 1 || d >= maxdeg_) throw std::out_of_range("no action at this degree");
  return g == Gen::x ? ax_[d] : ay_[d];
}

const DefSpec& BracketEngine::definition(unsigned d, unsigned t) const {
  if (d < 3 || d > maxdeg_ || t >= dims_[d]) throw std::out_of_range("no definition stored");
  return defs_[d][t];
}

std::optional<Inconsistency> BracketEngine::derive_definitions(
    unsigned dim_next, const Mat2& ax, const Mat2& ay, std::array<DefSpec, 2>& defs) const {
  // Scan columns [b_1 x], [b_2 x], [b_1 y], [b_2 y]; pivots must be exact unit
  // vectors in row order, and any earlier column must be supported on the
  // rows already established.  This is the canonical (column-reduced) shape.
  const unsigned d = dims_[maxdeg_];
  unsigned pivot = 0;
  for (unsigned gi = 0; gi < 2; ++gi) {
    const Mat2& m = gi == 0 ? ax : ay;
    for (unsigned t = 0; t < d; ++t) {
      Vec2 v = m.col(t);
      bool is_unit = pivot < dim_next && v.c[pivot].is_one();
      if (is_unit)
        for (unsigned r = 0; r < dim_next; ++r)
          if (r != pivot && !v.c[r].is_zero()) is_unit = false;
      if (is_unit) {
        defs[pivot] = DefSpec{static_cast<uint8_t>(t), gi == 0 ? Gen::x : Gen::y};
        ++pivot;
        continue;
      }
      for (unsigned r = pivot; r < dim_next; ++r)
        if (!v.c[r].is_zero())
          return Inconsistency{Inconsistency::Kind::structure, maxdeg_ + 1, maxdeg_, 0,
                               "action matrices are not in canonical column-reduced form"};
    }
  }
  if (pivot != dim_next)
    return Inconsistency{Inconsistency::Kind::covering, maxdeg_ + 1, maxdeg_, 0,
                         "generator images do not span the next component"};
  return std::nullopt;
}

std::optional<Inconsistency> BracketEngine::check_covering(unsigned dim_next, const Mat2& ax,
                                                           const Mat2& ay) const {
  const unsigned d = dims_[maxdeg_];
  if (d != 2) return std::nullopt;  // one-dimensional sources are covered by the pivot scan
  auto fail = [&]() {
    return Inconsistency{Inconsistency::Kind::covering, maxdeg_ + 1, maxdeg_, 0,
                         "a nonzero vector has images spanning a proper subspace"};
  };
  if (dim_next == 1) {
    // common kernel of the two linear forms must be trivial
    Scalar det = ax.at(0, 0) * ay.at(0, 1) - ax.at(0, 1) * ay.at(0, 0);
    if (det.is_zero()) return fail();
    return std::nullopt;
  }
  // dim_next == 2: det(ax z | ay z) is a binary quadratic form in z
  auto det2 = [&](const Vec2& u, const Vec2& w) { return u.c[0] * w.c[1] - u.c[1] * w.c[0]; };
  Scalar qa = det2(ax.col(0), ay.col(0));
  Scalar qc = det2(ax.col(1), ay.col(1));
  Scalar qb = det2(ax.col(0), ay.col(1)) + det2(ax.col(1), ay.col(0));
  if (!ch_.zero_char()) {
    const unsigned long p = ch_.p();
    for (unsigned long t = 0; t <= p; ++t) {
      // z = (1, t) for t < p, and (0, 1)
      Scalar z0 = t < p ? Scalar::one(ch_) : Scalar::zero(ch_);
      Scalar z1 = t < p ? Scalar(ch_, static_cast<long long>(t)) : Scalar::one(ch_);
      Scalar q = qa * z0 * z0 + qb * z0 * z1 + qc * z1 * z1;
      if (q.is_zero()) return fail();
    }
    return std::nullopt;
  }
  // integer semantics: no rational zero iff the endpoints are nonzero and the
  // discriminant is not a perfect square
  if (qa.is_zero() || qc.is_zero()) return fail();
  mpz_class disc = qb.lift() * qb.lift() - 4 * qa.lift() * qc.lift();
  if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) return fail();
  return std::nullopt;
}

std::optional<Inconsistency> BracketEngine::push_degree(unsigned dim_next, const Mat2& act_x,
                                                        const Mat2& act_y, CheckMode mode) {
  if (maxdeg_ + 1 > cap_) throw std::out_of_range("engine capacity exceeded");
  if (dim_next < 1 || dim_next > 2) throw std::invalid_argument("component dimension must be 1 or 2");
  const unsigned d = dims_[maxdeg_];
  if (act_x.rows != dim_next || act_y.rows != dim_next || act_x.cols != d || act_y.cols != d)
    throw std::invalid_argument("action matrix shape mismatch");

  std::array<DefSpec, 2> defs{};
  if (maxdeg_ == 1) {
    auto [cx, cy] = degree_one_actions(ch_);
    if (dim_next != 1 || !(act_x == cx) || !(act_y == cy))
      return Inconsistency{Inconsistency::Kind::structure, 2, 1, 0,
                           "degree-2 component must be one-dimensional with e2 = [y,x]"};
  } else {
    if (auto bad = derive_definitions(dim_next, act_x, act_y, defs)) return bad;
    if (auto bad = check_covering(dim_next, act_x, act_y)) return bad;
  }

  ax_[maxdeg_] = act_x;
  ay_[maxdeg_] = act_y;
  ++maxdeg_;
  dims_[maxdeg_] = dim_next;
  if (maxdeg_ >= 3) defs_[maxdeg_] = defs;
  build_bracket_row();

  if (mode == CheckMode::full) {
    if (auto bad = check_new_degree()) {
      pop_degree();
      return bad;
    }
  }
  return std::nullopt;
}

void BracketEngine::pop_degree() {
  if (maxdeg_ <= 1) throw std::logic_error("nothing to pop");
  dims_[maxdeg_] = 0;
  --maxdeg_;
}

void BracketEngine::build_bracket_row() {
  const unsigned T = maxdeg_;
  for (unsigned j = 2; j + 2 <= T; ++j) {
    const unsigned i = T - j;
    BilMat b = BilMat::zero(ch_, dims_[T], dims_[i], dims_[j]);
    if (j == 2) {
      // [z, e2] = [[z,y],x] - [[z,x],y]
      for (unsigned zi = 0; zi < dims_[i]; ++zi) {
        Vec2 z = Vec2::unit(ch_, dims_[i], zi);
        Vec2 val = ax_[i + 1].apply(ay_[i].apply(z)) + (-ay_[i + 1].apply(ax_[i].apply(z)));
        for (unsigned r = 0; r < dims_[T]; ++r) b.at(r, zi, 0) = val.c[r];
      }
    } else {
      for (unsigned wj = 0; wj < dims_[j]; ++wj) {
        const DefSpec& def = defs_[j][wj];
        const Mat2& mg_top = def.g == Gen::x ? ax_[T - 1] : ay_[T - 1];
        const Mat2& mg_i = def.g == Gen::x ? ax_[i] : ay_[i];
        const BilMat& bprev = bil(i, j - 1);
        const BilMat& bshift = bil(i + 1, j - 1);
        for (unsigned zi = 0; zi < dims_[i]; ++zi) {
          // [z, [w', g]] = [[z, w'], g] - [[z, g], w']
          Vec2 first = mg_top.apply(bprev.apply_basis(zi, def.src));
          Vec2 zg = mg_i.col(zi);
          Vec2 second = Vec2::zero(ch_, dims_[T]);
          for (unsigned r = 0; r < zg.n; ++r)
            if (!zg.c[r].is_zero()) second = second + bshift.apply_basis(r, def.src).scaled(zg.c[r]);
          Vec2 val = first + (-second);
          for (unsigned r = 0; r < dims_[T]; ++r) b.at(r, zi, wj) = val.c[r];
        }
      }
    }
    bil(i, j) = b;
  }
}

Vec2 BracketEngine::bracket_basis(unsigned i, unsigned zi, unsigned j, unsigned wj) const {
  if (i + j > maxdeg_) throw std::out_of_range("bracket degree exceeds truncation");
  if (i == 1 && j == 1) {
    // [x,y] = -e2, [y,x] = e2
    Vec2 v = Vec2::zero(ch_, dims_[2]);
    if (zi == 0 && wj == 1) v.c[0] = -Scalar::one(ch_);
    if (zi == 1 && wj == 0) v.c[0] = Scalar::one(ch_);
    return v;
  }
  if (j == 1) {
    const Mat2& m = wj == 0 ? ax_[i] : ay_[i];
    return m.col(zi);
  }
  if (i == 1) {
    const Mat2& m = zi == 0 ? ax_[j] : ay_[j];
    return -m.col(wj);
  }
  return bil(i, j).apply_basis(zi, wj);
}

HomElem BracketEngine::bracket(const HomElem& u, const HomElem& v) const {
  if (u.degree + v.degree > maxdeg_) throw std::out_of_range("bracket degree exceeds truncation");
  Vec2 out = Vec2::zero(ch_, dims_[u.degree + v.degree]);
  for (unsigned zi = 0; zi < u.v.n; ++zi) {
    if (u.v.c[zi].is_zero()) continue;
    for (unsigned wj = 0; wj < v.v.n; ++wj) {
      if (v.v.c[wj].is_zero()) continue;
      out = out + bracket_basis(u.degree, zi, v.degree, wj).scaled(u.v.c[zi] * v.v.c[wj]);
    }
  }
  return HomElem{u.degree + v.degree, out};
}

HomElem BracketEngine::eval(const LeftNormedWord& w) const {
  if (w.degree() > maxdeg_) throw std::out_of_range("word degree exceeds truncation");
  Vec2 cur = Vec2::unit(ch_, 2, w.at(0) == Gen::x ? 0 : 1);
  unsigned deg = 1;
  for (unsigned i = 1; i < w.degree(); ++i) {
    const Mat2& m = w.at(i) == Gen::x ? ax_[deg] : ay_[deg];
    cur = m.apply(cur);
    ++deg;
  }
  return HomElem{deg, cur};
}

HomElem BracketEngine::eval(const FormalSum& s) const {
  if (s.degree() > maxdeg_) throw std::out_of_range("sum degree exceeds truncation");
  Vec2 acc = Vec2::zero(ch_, dims_[s.degree()]);
  for (const auto& t : s.terms()) acc = acc + eval(t.word).v.scaled(t.coeff);
  return HomElem{s.degree(), acc};
}

std::optional<Inconsistency> BracketEngine::check_new_degree() const {
  const unsigned T = maxdeg_;
  // Alternation: [z, z] = 0 on the middle component (covers char 2, where
  // antisymmetry alone says nothing).
  if (T % 2 == 0 && T >= 4) {
    const unsigned m = T / 2;
    const BilMat& b = bil(m, m);
    for (unsigned s = 0; s < dims_[m]; ++s)
      if (!b.apply_basis(s, s).is_zero())
        return Inconsistency{Inconsistency::Kind::alternating, T, m, m,
                             "[z,z] != 0 for a basis vector"};
    if (dims_[m] == 2 && !(b.apply_basis(0, 1) + b.apply_basis(1, 0)).is_zero())
      return Inconsistency{Inconsistency::Kind::alternating, T, m, m,
                           "[f1,f2] + [f2,f1] != 0"};
  }
  // Antisymmetry between the two independent recursions for B(i,j) and B(j,i).
  for (unsigned i = 2; 2 * i < T; ++i) {
    const unsigned j = T - i;
    const BilMat& bij = bil(i, j);
    const BilMat& bji = bil(j, i);
    for (unsigned zi = 0; zi < dims_[i]; ++zi)
      for (unsigned wj = 0; wj < dims_[j]; ++wj)
        if (!(bij.apply_basis(zi, wj) + bji.apply_basis(wj, zi)).is_zero())
          return Inconsistency{Inconsistency::Kind::antisymmetry, T, i, j,
                               "[u,v] != -[v,u]"};
  }
  // Generator-anchored Jacobi at total degree T:
  // [[u,w],g] = [[u,g],w] + [u,[w,g]] for basis u in L_i, w in L_j, i+j+1 = T.
  for (unsigned i = 1; i + 2 <= T; ++i) {
    const unsigned j = T - 1 - i;
    if (j < 1) continue;
    for (unsigned zi = 0; zi < dims_[i]; ++zi) {
      for (unsigned wj = 0; wj < dims_[j]; ++wj) {
        Vec2 uw = bracket_basis(i, zi, j, wj);
        for (unsigned gi = 0; gi < 2; ++gi) {
          Gen g = gi == 0 ? Gen::x : Gen::y;
          const Mat2& mtop = g == Gen::x ? ax_[i + j] : ay_[i + j];
          Vec2 lhs = mtop.apply(uw);
          // [[u,g],w]
          Vec2 ug = i == 1 ? bracket_basis(1, zi, 1, gi) : (g == Gen::x ? ax_[i] : ay_[i]).col(zi);
          Vec2 rhs1 = Vec2::zero(ch_, dims_[T]);
          for (unsigned r = 0; r < ug.n; ++r)
            if (!ug.c[r].is_zero())
              rhs1 = rhs1 + bracket_basis(i + 1, r, j, wj).scaled(ug.c[r]);
          // [u,[w,g]]
          Vec2 wg = j == 1 ? bracket_basis(1, wj, 1, gi) : (g == Gen::x ? ax_[j] : ay_[j]).col(wj);
          Vec2 rhs2 = Vec2::zero(ch_, dims_[T]);
          for (unsigned r = 0; r < wg.n; ++r)
            if (!wg.c[r].is_zero())
              rhs2 = rhs2 + bracket_basis(i, zi, j + 1, r).scaled(wg.c[r]);
          if (!(lhs + (-(rhs1 + rhs2))).is_zero())
            return Inconsistency{Inconsistency::Kind::jacobi, T, i, j,
                                 std::string("anchored identity fails with g = ") + gen_char(g)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Inconsistency> BracketEngine::recheck(const BracketEngine& src, unsigned n,
                                                    bool cross_check) {
  BracketEngine eng(src.field(), std::max(2u, n));
  for (unsigned d = 1; d < n; ++d) {
    auto bad = eng.push_degree(src.dim(d + 1), src.action(Gen::x, d), src.action(Gen::y, d),
                               CheckMode::full);
    if (bad) return bad;
  }
  if (cross_check)
    if (auto bad = eng.check_all_triples(n)) return bad;
  return std::nullopt;
}

std::optional<Inconsistency> BracketEngine::check_all_triples(unsigned n) const {
  if (n > maxdeg_) throw std::out_of_range("scan degree exceeds truncation");
  for (unsigned i = 1; i + 2 <= n; ++i)
    for (unsigned j = 1; i + j + 1 <= n; ++j)
      for (unsigned k = 1; i + j + k <= n; ++k)
        for (unsigned ui = 0; ui < dims_[i]; ++ui)
          for (unsigned vi = 0; vi < dims_[j]; ++vi)
            for (unsigned wi = 0; wi < dims_[k]; ++wi) {
              HomElem u{i, Vec2::unit(ch_, dims_[i], ui)};
              HomElem v{j, Vec2::unit(ch_, dims_[j], vi)};
              HomElem w{k, Vec2::unit(ch_, dims_[k], wi)};
              HomElem lhs = bracket(bracket(u, v), w);
              HomElem rhs1 = bracket(bracket(u, w), v);
              HomElem rhs2 = bracket(u, bracket(v, w));
              if (!(lhs.v + (-(rhs1.v + rhs2.v))).is_zero())
                return Inconsistency{Inconsistency::Kind::jacobi, i + j + k, i, j,
                                     "full triple scan: [[u,v],w] != [[u,w],v] + [u,[v,w]] (k=" +
                                         std::to_string(k) + ")"};
            }
  return std::nullopt;
}

}  // namespace maxthin
