// Generate-and-filter oracle for the maximal-class enumeration: exhaustive
// product of canonical centralizer points, post-hoc filtered through the
// engine's full consistency scan (including the all-triples sweep).
#pragma once

#include <set>
#include <string>

#include "maxthin/serialize.hpp"

namespace table_oracles {

inline std::set<std::string> maxclass_documents(unsigned long p, unsigned maxdeg) {
  using namespace maxthin;
  PrimeChar ch(p);
  std::vector<ScalarPair> points;  // canonical pairs (a, b)
  points.emplace_back(Scalar::one(ch), Scalar::zero(ch));
  for (unsigned long t = 1; t < p; ++t)
    points.emplace_back(Scalar::one(ch), Scalar(ch, static_cast<long long>(t)));
  points.emplace_back(Scalar::zero(ch), Scalar::one(ch));

  const unsigned slots = maxdeg - 2;
  std::set<std::string> out;
  std::vector<size_t> idx(slots, 0);
  for (;;) {
    // canonical gauge: first pair (1,0); the first pair with b != 0 is (0,1)
    bool canonical = idx[0] == 0;
    for (unsigned i = 1; canonical && i < slots; ++i) {
      bool all_run_before = true;
      for (unsigned j = 0; j < i; ++j) all_run_before &= idx[j] == 0;
      if (all_run_before && idx[i] != 0 && !points[idx[i]].first.is_zero()) canonical = false;
    }
    if (canonical) {
      std::vector<ScalarPair> pairs;
      for (unsigned i = 0; i < slots; ++i) pairs.push_back(points[idx[i]]);
      MaxClassTable t(ch, maxdeg, std::move(pairs));
      if (!jacobi_consistency(t, maxdeg, /*cross_check=*/true))
        out.insert(document_line(serialize(t)));
    }
    unsigned i = slots;
    while (i > 0) {
      --i;
      if (++idx[i] < points.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace table_oracles
