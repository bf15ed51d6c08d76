#include "maxthin/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxthin {

LeftNormedWord::LeftNormedWord(std::vector<Gen> letters) : l_(std::move(letters)) {
  if (l_.empty()) throw std::invalid_argument("left-normed word must be nonempty");
}

LeftNormedWord LeftNormedWord::parse(std::string_view s) {
  std::vector<Gen> letters;
  letters.reserve(s.size());
  for (char c : s) {
    if (c == 'x') letters.push_back(Gen::x);
    else if (c == 'y') letters.push_back(Gen::y);
    else throw std::invalid_argument(std::string("bad generator letter '") + c + "'");
  }
  return LeftNormedWord(std::move(letters));
}

LeftNormedWord LeftNormedWord::appended(Gen g) const {
  std::vector<Gen> l = l_;
  l.push_back(g);
  return LeftNormedWord(std::move(l));
}

LeftNormedWord LeftNormedWord::appended_run(Gen g, unsigned count) const {
  std::vector<Gen> l = l_;
  l.insert(l.end(), count, g);
  return LeftNormedWord(std::move(l));
}

std::string LeftNormedWord::str() const {
  std::string s;
  s.reserve(l_.size());
  for (Gen g : l_) s += gen_char(g);
  return s;
}

LeftNormedWord word_y_xi(unsigned i) {
  std::vector<Gen> l{Gen::y};
  l.insert(l.end(), i, Gen::x);
  return LeftNormedWord(std::move(l));
}

FormalSum::FormalSum(PrimeChar ch, unsigned degree) : ch_(ch), degree_(degree) {
  if (degree == 0) throw std::invalid_argument("formal sums are homogeneous of degree >= 1");
}

void FormalSum::add(Scalar coeff, LeftNormedWord word) {
  if (word.degree() != degree_) throw std::invalid_argument("formal sum degree mismatch");
  if (coeff.field() != ch_) throw std::invalid_argument("formal sum characteristic mismatch");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                             [](const Term& t, const LeftNormedWord& w) { return t.word < w; });
  if (it != terms_.end() && it->word == word) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else if (!coeff.is_zero()) {
    terms_.insert(it, Term{std::move(coeff), std::move(word)});
  }
}

std::string FormalSum::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const Term& t : terms_) {
    if (!s.empty()) s += " + ";
    s += t.coeff.str() + "*[" + t.word.str() + "]";
  }
  return s;
}

FormalSum expand_generalized_jacobi(const LeftNormedWord& prefix, Gen inner_head,
                                    Gen inner_tail, unsigned j, PrimeChar ch) {
  FormalSum sum(ch, prefix.degree() + j + 1);
  for (unsigned i = 0; i <= j; ++i) {
    Scalar c = binom_mod(j, i, ch);
    if (i % 2 != 0) c = -c;
    if (c.is_zero()) continue;
    LeftNormedWord w = prefix.appended_run(inner_tail, i).appended(inner_head)
                           .appended_run(inner_tail, j - i);
    sum.add(std::move(c), std::move(w));
  }
  return sum;
}

}  // namespace maxthin
