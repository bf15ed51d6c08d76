#include "maxthin/maxclass.hpp"

namespace maxthin {

MaxClassTable::MaxClassTable(PrimeChar ch, unsigned maxdeg, std::vector<ScalarPair> pairs)
    : ch_(ch), maxdeg_(maxdeg), pairs_(std::move(pairs)) {
  if (maxdeg_ < 3) throw TableError("maximal-class table needs maxdeg >= 3");
  if (pairs_.size() != maxdeg_ - 2)
    throw TableError("expected one (a_i, b_i) pair per degree in [2, maxdeg-1]");
  for (auto& [a, b] : pairs_) {
    if (a.field() != ch_ || b.field() != ch_) throw TableError("pair characteristic mismatch");
    if (a.is_zero() && b.is_zero())
      throw TableError("surjectivity requires (a_i, b_i) != (0, 0)");
    if (!a.is_zero() && !a.is_one()) {
      if (ch_.zero_char()) throw TableError("p = 0 pairs must be canonical (leading 1)");
      Scalar inv = a.inverse();
      a = Scalar::one(ch_);
      b *= inv;
    } else if (a.is_zero() && !b.is_one()) {
      if (ch_.zero_char()) throw TableError("p = 0 pairs must be canonical (leading 1)");
      b = Scalar::one(ch_);
    }
  }
  engine();  // validates the canonical structure, throws on violation
}

MaxClassTable MaxClassTable::metabelian(PrimeChar ch, unsigned maxdeg) {
  std::vector<ScalarPair> pairs(maxdeg - 2, {Scalar::one(ch), Scalar::zero(ch)});
  return MaxClassTable(ch, maxdeg, std::move(pairs));
}

const ScalarPair& MaxClassTable::pair(unsigned degree) const {
  if (degree < 2 || degree >= maxdeg_) throw std::out_of_range("pair degree out of range");
  return pairs_[degree - 2];
}

BracketEngine MaxClassTable::engine() const {
  BracketEngine eng(ch_, maxdeg_);
  auto [cx, cy] = BracketEngine::degree_one_actions(ch_);
  if (auto bad = eng.push_degree(1, cx, cy, CheckMode::structure_only))
    throw TableError(bad->str());
  for (const auto& [a, b] : pairs_) {
    Mat2 mx = Mat2::zero(ch_, 1, 1);
    mx.at(0, 0) = a;
    Mat2 my = Mat2::zero(ch_, 1, 1);
    my.at(0, 0) = b;
    if (auto bad = eng.push_degree(1, mx, my, CheckMode::structure_only)) {
      if (bad->kind == Inconsistency::Kind::covering) throw CoveringError(bad->degree, bad->str());
      throw TableError(bad->str());
    }
  }
  return eng;
}

bool operator==(const MaxClassTable& a, const MaxClassTable& b) {
  if (a.ch_ != b.ch_ || a.maxdeg_ != b.maxdeg_) return false;
  for (size_t i = 0; i < a.pairs_.size(); ++i)
    if (a.pairs_[i].first != b.pairs_[i].first || a.pairs_[i].second != b.pairs_[i].second)
      return false;
  return true;
}

CentralizerSequence centralizer_sequence(const MaxClassTable& t) {
  CentralizerSequence seq{t.field(), {}};
  seq.points.reserve(t.maxdeg() - 2);
  for (unsigned d = 2; d < t.maxdeg(); ++d) {
    const auto& [a, b] = t.pair(d);
    // kernel of u -> [e_d, u]: alpha a + beta b = 0
    if (b.is_zero()) {
      seq.points.emplace_back(Scalar::zero(t.field()), Scalar::one(t.field()));  // y
    } else if (a.is_zero()) {
      seq.points.emplace_back(Scalar::one(t.field()), Scalar::zero(t.field()));  // x
    } else {
      // canonical pair is (1, b): kernel spanned by (-b, 1)
      seq.points.emplace_back(-b, Scalar::one(t.field()));
    }
  }
  return seq;
}

MaxClassTable maxclass_from_centralizers(const CentralizerSequence& seq, unsigned maxdeg) {
  if (seq.points.size() + 2 != maxdeg)
    throw TableError("centralizer sequence length does not match maxdeg");
  std::vector<ScalarPair> pairs;
  pairs.reserve(seq.points.size());
  for (const auto& [cx, cy] : seq.points) {
    if (cx.is_zero() && cy.is_zero()) throw TableError("zero centralizer point");
    // (a, b) with a cx + b cy = 0, scaled canonical
    if (cy.is_zero()) {
      pairs.emplace_back(Scalar::zero(seq.field), Scalar::one(seq.field));
    } else if (cy.is_one()) {
      pairs.emplace_back(Scalar::one(seq.field), -cx);
    } else {
      pairs.emplace_back(cy, -cx);  // canonicalized by the table constructor
    }
  }
  return MaxClassTable(seq.field, maxdeg, std::move(pairs));
}

ConstituentProfile constituent_profile(const MaxClassTable& t) {
  ConstituentProfile prof;
  prof.determined_up_to = t.maxdeg() - 1;
  for (unsigned d = 2; d < t.maxdeg(); ++d)
    if (!t.pair(d).second.is_zero()) prof.boundaries.push_back(d);
  if (!prof.boundaries.empty()) {
    prof.ell = prof.boundaries.front();
    for (size_t r = 1; r < prof.boundaries.size(); ++r)
      prof.subsequent.push_back(prof.boundaries[r] - prof.boundaries[r - 1]);
  }
  return prof;
}

bool sandwich_check(const MaxClassTable& t, unsigned n) {
  if (n > t.maxdeg()) throw std::out_of_range("sandwich scan exceeds maxdeg");
  // [e_i y y] = b_i b_{i+1} e_{i+2}; the degree-1 part needs b_2 = 0.
  for (unsigned d = 2; d + 2 <= n && d < t.maxdeg(); ++d) {
    if (d + 1 >= t.maxdeg()) break;
    if (!t.pair(d).second.is_zero() && !t.pair(d + 1).second.is_zero()) return false;
  }
  if (n >= 3 && !t.pair(2).second.is_zero()) return false;  // [x y y]
  return true;
}

Scalar bracket_component(const BracketEngine& eng, unsigned i, unsigned j) {
  if (i < 2 || j < 2) throw std::invalid_argument("component bracket needs i, j >= 2");
  return eng.bracket_basis(i, 0, j, 0).c[0];
}

Scalar bracket_component(const MaxClassTable& t, unsigned i, unsigned j) {
  BracketEngine eng = t.engine();
  return bracket_component(eng, i, j);
}

std::optional<Inconsistency> jacobi_consistency(const MaxClassTable& t, unsigned n,
                                                bool cross_check) {
  if (n > t.maxdeg()) throw std::out_of_range("consistency scan exceeds maxdeg");
  return BracketEngine::recheck(t.engine(), n, cross_check);
}

HomElem eval_word(const MaxClassTable& t, const LeftNormedWord& w) {
  return t.engine().eval(w);
}

}  // namespace maxthin
