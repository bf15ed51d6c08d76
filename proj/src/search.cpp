#include "maxthin/search.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "maxthin/congruence.hpp"

namespace maxthin {

void SearchConfig::validate() const {
  if (maxdeg < 6) throw std::invalid_argument("search needs maxdeg >= 6");
  if (maxdeg > 64) throw std::invalid_argument("search maxdeg capped at 64");
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (char0_window < 0) throw std::invalid_argument("char0_window must be >= 0");
}

void BranchStats::merge(const BranchStats& o) {
  nodes += o.nodes;
  emitted += o.emitted;
  pruned_structure += o.pruned_structure;
  pruned_covering += o.pruned_covering;
  pruned_consistency += o.pruned_consistency;
}

namespace {

struct StepChoice {
  unsigned dim_next;
  Mat2 ax, ay;
};

std::vector<Scalar> scalar_range(PrimeChar ch, long window) {
  std::vector<Scalar> out;
  if (!ch.zero_char()) {
    for (unsigned long t = 0; t < ch.p(); ++t) out.emplace_back(ch, static_cast<long long>(t));
  } else {
    for (long t = -window; t <= window; ++t) out.emplace_back(ch, static_cast<long long>(t));
  }
  return out;
}

// Canonical column-reduced action pairs for one step d -> dnext.  Columns are
// scanned as (x b_1, .., x b_d, y b_1, .., y b_d); pivot columns are unit
// vectors in row order, entries under a later pivot are zero, and the
// remaining positions range over the scalar candidates.
void rref_step_choices(PrimeChar ch, const std::vector<Scalar>& vals, unsigned d,
                       unsigned dnext, std::vector<StepChoice>& out) {
  const unsigned ncols = 2 * d;
  std::vector<unsigned> pivots(dnext);

  auto emit_for_pivots = [&]() {
    std::vector<std::pair<unsigned, unsigned>> free_pos;  // (column, row)
    for (unsigned col = 0; col < ncols; ++col) {
      bool is_pivot = false;
      for (unsigned r = 0; r < dnext; ++r) is_pivot |= pivots[r] == col;
      if (is_pivot) continue;
      for (unsigned r = 0; r < dnext; ++r)
        if (pivots[r] < col) free_pos.emplace_back(col, r);
    }
    std::vector<size_t> idx(free_pos.size(), 0);
    while (true) {
      StepChoice c{dnext, Mat2::zero(ch, dnext, d), Mat2::zero(ch, dnext, d)};
      auto entry = [&](unsigned col, unsigned row) -> Scalar& {
        Mat2& m = col < d ? c.ax : c.ay;
        return m.at(row, col < d ? col : col - d);
      };
      for (unsigned r = 0; r < dnext; ++r) entry(pivots[r], r) = Scalar::one(ch);
      for (size_t i = 0; i < free_pos.size(); ++i)
        entry(free_pos[i].first, free_pos[i].second) = vals[idx[i]];
      out.push_back(std::move(c));
      size_t i = free_pos.size();
      while (i > 0) {
        --i;
        if (++idx[i] < vals.size()) break;
        idx[i] = 0;
        if (i == 0) return;
      }
      if (free_pos.empty()) return;
    }
  };

  if (dnext == 1) {
    for (unsigned c0 = 0; c0 < ncols; ++c0) {
      pivots[0] = c0;
      emit_for_pivots();
    }
  } else {
    for (unsigned c0 = 0; c0 < ncols; ++c0)
      for (unsigned c1 = c0 + 1; c1 < ncols; ++c1) {
        pivots[0] = c0;
        pivots[1] = c1;
        emit_for_pivots();
      }
  }
}

StepChoice run_step(PrimeChar ch, unsigned d) {
  // continue a one-dimensional y-centralized run: [e x] = e', [e y] = 0
  (void)d;
  StepChoice c{1, Mat2::zero(ch, 1, 1), Mat2::zero(ch, 1, 1)};
  c.ax.at(0, 0) = Scalar::one(ch);
  return c;
}

StepChoice diamond_step(PrimeChar ch) {
  // open a diamond from a one-dimensional component: basis ([v x], [v y])
  StepChoice c{2, Mat2::zero(ch, 2, 1), Mat2::zero(ch, 2, 1)};
  c.ax.at(0, 0) = Scalar::one(ch);
  c.ay.at(1, 0) = Scalar::one(ch);
  return c;
}

StepChoice deviation_step(PrimeChar ch) {
  // first deviating centralizer pinned to x: [e x] = 0, [e y] = e'
  StepChoice c{1, Mat2::zero(ch, 1, 1), Mat2::zero(ch, 1, 1)};
  c.ay.at(0, 0) = Scalar::one(ch);
  return c;
}

class Core {
 public:
  Core(const SearchConfig& cfg) : cfg_(cfg), eng_(cfg.field, cfg.maxdeg) {
    vals_ = scalar_range(cfg.field, cfg.char0_window);
    auto [cx, cy] = BracketEngine::degree_one_actions(cfg.field);
    if (eng_.push_degree(1, cx, cy, CheckMode::full))
      throw std::logic_error("degree-2 bootstrap failed");
  }

  BracketEngine& engine() { return eng_; }

  bool in_normalized_run() const {
    // true while no deviation (maxclass) / no diamond (thin) has occurred yet
    for (unsigned d = 3; d <= eng_.maxdeg(); ++d)
      if (eng_.dim(d) == 2) return false;
    for (unsigned d = 2; d < eng_.maxdeg(); ++d) {
      const Mat2& my = eng_.action(Gen::y, d);
      for (unsigned i = 0; i < unsigned(my.rows) * my.cols; ++i)
        if (!my.a[i].is_zero()) return false;
    }
    return true;
  }

  std::vector<StepChoice> choices() const {
    std::vector<StepChoice> out;
    const unsigned D = eng_.maxdeg();
    const PrimeChar ch = cfg_.field;
    if (cfg_.kind == TableKind::maxclass) {
      if (in_normalized_run()) {
        out.push_back(run_step(ch, 1));
        if (D >= 3) out.push_back(deviation_step(ch));
      } else {
        rref_step_choices(ch, vals_, 1, 1, out);
      }
    } else {
      if (in_normalized_run()) {
        out.push_back(run_step(ch, 1));
        out.push_back(diamond_step(ch));
      } else {
        const unsigned d = eng_.dim(D);
        rref_step_choices(ch, vals_, d, 1, out);
        rref_step_choices(ch, vals_, d, 2, out);
      }
    }
    return out;
  }

  bool try_push(const StepChoice& c, BranchStats& stats) {
    ++stats.nodes;
    auto bad = eng_.push_degree(c.dim_next, c.ax, c.ay, CheckMode::full);
    if (!bad) return true;
    switch (bad->kind) {
      case Inconsistency::Kind::structure: ++stats.pruned_structure; break;
      case Inconsistency::Kind::covering: ++stats.pruned_covering; break;
      default: ++stats.pruned_consistency; break;
    }
    return false;
  }

  void dfs(const std::function<void(const BracketEngine&)>& emit, BranchStats& stats) {
    if (eng_.maxdeg() == cfg_.maxdeg) {
      if (cfg_.cross_check)
        if (auto bad = eng_.check_all_triples(cfg_.maxdeg))
          throw std::logic_error("cross-check contradicts incremental checks: " + bad->str());
      ++stats.emitted;
      emit(eng_);
      return;
    }
    for (const StepChoice& c : choices()) {
      if (!try_push(c, stats)) continue;
      dfs(emit, stats);
      eng_.pop_degree();
    }
  }

  // Re-apply a validated prefix without touching statistics.
  void descend(const std::vector<StepChoice>& path) {
    for (const StepChoice& c : path)
      if (eng_.push_degree(c.dim_next, c.ax, c.ay, CheckMode::full))
        throw std::logic_error("frontier prefix failed to replay");
  }

 private:
  const SearchConfig& cfg_;
  BracketEngine eng_;
  std::vector<Scalar> vals_;
};

template <class Table>
BranchStats run_search(const SearchConfig& cfg, Table (*snapshot)(const BracketEngine&),
                       const std::function<void(const Table&)>& sink) {
  cfg.validate();
  BranchStats stats;

  if (cfg.jobs <= 1) {
    Core core(cfg);
    core.dfs([&](const BracketEngine& eng) { sink(snapshot(eng)); }, stats);
    return stats;
  }

  // Partition the tree at a shallow frontier, solve subtrees in parallel, and
  // emit buffered results in frontier order so the stream matches jobs = 1.
  std::vector<std::vector<StepChoice>> frontier{{}};
  const size_t target = 4 * static_cast<size_t>(cfg.jobs);
  unsigned depth = 0;
  while (frontier.size() < target && depth + 3 < cfg.maxdeg - 2 + 1) {
    std::vector<std::vector<StepChoice>> next;
    for (const auto& path : frontier) {
      Core core(cfg);
      core.descend(path);
      for (const StepChoice& c : core.choices()) {
        if (!core.try_push(c, stats)) continue;
        core.engine().pop_degree();
        auto extended = path;
        extended.push_back(c);
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
    ++depth;
    if (frontier.empty()) return stats;
  }

  struct Slot {
    std::vector<Table> tables;
    BranchStats stats;
  };
  std::vector<Slot> slots(frontier.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= frontier.size()) return;
      Core core(cfg);
      core.descend(frontier[i]);
      core.dfs([&](const BracketEngine& eng) { slots[i].tables.push_back(snapshot(eng)); },
               slots[i].stats);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < cfg.jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& slot : slots) {
    stats.merge(slot.stats);
    for (const Table& t : slot.tables) sink(t);
  }
  return stats;
}

MaxClassTable snapshot_maxclass(const BracketEngine& eng) {
  std::vector<ScalarPair> pairs;
  pairs.reserve(eng.maxdeg() - 2);
  for (unsigned d = 2; d < eng.maxdeg(); ++d)
    pairs.emplace_back(eng.action(Gen::x, d).at(0, 0), eng.action(Gen::y, d).at(0, 0));
  return MaxClassTable(eng.field(), eng.maxdeg(), std::move(pairs));
}

ThinTable snapshot_thin(const BracketEngine& eng) {
  std::vector<unsigned> dims;
  std::vector<Mat2> ax, ay;
  for (unsigned d = 1; d <= eng.maxdeg(); ++d) dims.push_back(eng.dim(d));
  for (unsigned d = 1; d < eng.maxdeg(); ++d) {
    ax.push_back(eng.action(Gen::x, d));
    ay.push_back(eng.action(Gen::y, d));
  }
  return ThinTable(eng.field(), eng.maxdeg(), std::move(dims), std::move(ax), std::move(ay));
}

std::string pair_signature(const MaxClassTable& t) {
  std::string s;
  for (unsigned d = 2; d < t.maxdeg(); ++d) {
    const auto& [a, b] = t.pair(d);
    s += "(" + a.str() + "," + b.str() + ")";
  }
  return s;
}

std::string thin_signature(const ThinTable& t) {
  std::string s = "dims=";
  for (unsigned d = 1; d <= t.maxdeg(); ++d) s += std::to_string(t.dim(d));
  s += " acts=";
  for (unsigned d = 1; d < t.maxdeg(); ++d) {
    for (unsigned g = 0; g < 2; ++g) {
      const Mat2& m = t.action(g == 0 ? Gen::x : Gen::y, d);
      s += "[";
      for (unsigned i = 0; i < unsigned(m.rows) * m.cols; ++i) {
        if (i) s += " ";
        s += m.a[i].str();
      }
      s += "]";
    }
    s += ";";
  }
  return s;
}

}  // namespace

BranchStats enumerate_maxclass(const SearchConfig& cfg,
                               const std::function<void(const MaxClassTable&)>& sink) {
  if (cfg.kind != TableKind::maxclass) throw std::invalid_argument("config kind is not maxclass");
  return run_search<MaxClassTable>(cfg, snapshot_maxclass, sink);
}

BranchStats enumerate_thin(const SearchConfig& cfg,
                           const std::function<void(const ThinTable&)>& sink) {
  if (cfg.kind != TableKind::thin) throw std::invalid_argument("config kind is not thin");
  return run_search<ThinTable>(cfg, snapshot_thin, sink);
}

std::vector<MaxClassTable> collect_maxclass(const SearchConfig& cfg) {
  std::vector<MaxClassTable> out;
  enumerate_maxclass(cfg, [&](const MaxClassTable& t) { out.push_back(t); });
  return out;
}

std::vector<ThinTable> collect_thin(const SearchConfig& cfg) {
  std::vector<ThinTable> out;
  enumerate_thin(cfg, [&](const ThinTable& t) { out.push_back(t); });
  return out;
}

namespace {

// ell_r (1-indexed) may be value-asserted when the NEXT boundary is visible
// within the margin; the proofs need the successor's onset.
bool assertable(const ConstituentProfile& prof, unsigned r, unsigned limit) {
  return prof.boundaries.size() >= r + 1 && prof.boundaries[r] <= limit;
}

}  // namespace

VerificationReport verify_first_constituent(const SearchConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.theorem = "first-constituent";
  rep.config = cfg;
  const unsigned limit = cfg.maxdeg - 1 - cfg.lookahead;
  rep.stats = enumerate_maxclass(cfg, [&](const MaxClassTable& t) {
    ++rep.tables;
    ConstituentProfile prof = constituent_profile(t);
    if (!assertable(prof, 1, limit)) {
      ++rep.observed["ell"]["unconstrained"];
      return;
    }
    ++rep.asserted;
    const unsigned ell = *prof.ell;
    ++rep.observed["ell"][std::to_string(ell)];
    bool ok = ell % 2 == 0 && !cfg.field.zero_char() &&
              as_prime_power(ell / 2, cfg.field.p()).has_value();
    if (!ok) {
      rep.violations.push_back("ell = " + std::to_string(ell) +
                               " is not twice a power of p: " + pair_signature(t));
      return;
    }
    if (!cfg.field.zero_char() && cfg.field.p() > 2) {
      const unsigned ell2 = prof.subsequent.at(0);
      ++rep.observed["ell2"][std::to_string(ell2)];
      if (ell2 != ell / 2)
        rep.violations.push_back("odd p: ell2 = " + std::to_string(ell2) + " != ell/2 = " +
                                 std::to_string(ell / 2) + ": " + pair_signature(t));
    }
  });
  return rep;
}

VerificationReport verify_any_constituent(const SearchConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.theorem = "any-constituent";
  rep.config = cfg;
  const unsigned limit = cfg.maxdeg - 1 - cfg.lookahead;
  rep.stats = enumerate_maxclass(cfg, [&](const MaxClassTable& t) {
    ++rep.tables;
    ConstituentProfile prof = constituent_profile(t);
    if (!assertable(prof, 1, limit)) return;
    ++rep.asserted;
    const unsigned ell = *prof.ell;
    auto q = PrimePower::of_value(ell / 2, cfg.field);
    if (ell % 2 != 0 || !q) {
      rep.violations.push_back("first constituent " + std::to_string(ell) +
                               " is not 2q: " + pair_signature(t));
      return;
    }
    // ell2 < ell whenever the second boundary is visible at all
    const unsigned ell2 = prof.subsequent.at(0);
    if (ell2 >= ell)
      rep.violations.push_back("ell2 = " + std::to_string(ell2) + " >= ell: " + pair_signature(t));
    if (cfg.field.p() > 2 && ell2 != q->q())
      rep.violations.push_back("odd p: ell2 = " + std::to_string(ell2) +
                               " != q: " + pair_signature(t));
    for (unsigned r = 2; r <= prof.subsequent.size() + 1; ++r) {
      if (!assertable(prof, r, limit)) break;
      const unsigned ell_r = prof.subsequent[r - 2];
      ++rep.observed["ell_r[ell=" + std::to_string(ell) + "]"][std::to_string(ell_r)];
      bool ok = ell_r >= q->q() && ell_r <= 2 * q->q() &&
                constituent_length_test(ell_r, *q).has_value();
      if (!ok)
        rep.violations.push_back("constituent " + std::to_string(r) + " of length " +
                                 std::to_string(ell_r) + " outside {2q} + {2q-p^s}: " +
                                 pair_signature(t));
    }
  });
  return rep;
}

VerificationReport verify_second_diamond(const SearchConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.theorem = "second-diamond";
  rep.config = cfg;
  rep.stats = enumerate_thin(cfg, [&](const ThinTable& t) {
    ++rep.tables;
    DiamondProfile prof = diamond_profile(t);
    if (!prof.k) {
      ++rep.observed["k"]["none"];
      return;
    }
    const unsigned k = *prof.k;
    if (!metabelian_quotient_check(t, k))
      rep.violations.push_back("metabelian quotient fails below k = " + std::to_string(k) + ": " +
                               thin_signature(t));
    if (k + 1 <= cfg.maxdeg) {
      if (prof.half_k_divisible)
        rep.violations.push_back("(k-1)/2 divisible by p at k = " + std::to_string(k) + ": " +
                                 thin_signature(t));
      if (k > 3) {
        if (!prof.vyy_zero)
          rep.violations.push_back("[v y y] != 0 at k = " + std::to_string(k) + ": " +
                                   thin_signature(t));
        if (!prof.relation_holds)
          rep.violations.push_back("[v x y] != ((k-1)/2)[v y x] at k = " + std::to_string(k) +
                                   ": " + thin_signature(t));
      }
    }
    if (2 * k + 3 + cfg.lookahead <= cfg.maxdeg) {
      ++rep.asserted;
      ++rep.observed["k"][std::to_string(k)];
      if (!classify_final_k(k, cfg.field).has_value())
        rep.violations.push_back("deep-consistent k = " + std::to_string(k) +
                                 " outside the admissible set: " + thin_signature(t));
    } else {
      ++rep.observed["k"][std::to_string(k) + " (shallow)"];
    }
  });
  return rep;
}

VerificationReport verify_h_values(const SearchConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.theorem = "h-values";
  rep.config = cfg;
  rep.stats = enumerate_thin(cfg, [&](const ThinTable& t) {
    ++rep.tables;
    DiamondProfile prof = diamond_profile(t);
    if (!prof.k) return;
    const unsigned k = *prof.k;
    if (!prof.h) {
      ++rep.observed["h[k=" + std::to_string(k) + "]"]["unconstrained"];
      return;
    }
    ++rep.asserted;
    const unsigned h = *prof.h;
    ++rep.observed["h[k=" + std::to_string(k) + "]"][std::to_string(h)];
    const std::string sig = thin_signature(t);
    if (k > 3) {
      if (2 * h < k - 1 || h > k + 1)
        rep.violations.push_back("h = " + std::to_string(h) + " outside [(k-1)/2, k+1] for k = " +
                                 std::to_string(k) + ": " + sig);
    }
    auto cls = classify_final_k(k, cfg.field);
    if (!cls) return;
    switch (cls->form) {
      case AdmissibleK::Form::five:
        if (h != 2)
          rep.violations.push_back("k = 5 requires h = 2, saw " + std::to_string(h) + ": " + sig);
        break;
      case AdmissibleK::Form::q: {
        const unsigned long long q = cls->q->q();
        if (2 * h < q - 1 || h > q)
          rep.violations.push_back("k = q requires (q-1)/2 <= h <= q, saw " + std::to_string(h) +
                                   ": " + sig);
        break;
      }
      case AdmissibleK::Form::two_q_minus_one: {
        const unsigned long long q = cls->q->q();
        if (cfg.field.p() == 2) {
          if (h + 1 < q || h > 2 * q)
            rep.violations.push_back("k = 2q-1 (p = 2) requires q-1 <= h <= 2q, saw " +
                                     std::to_string(h) + ": " + sig);
        } else if (h != q - 1) {
          rep.violations.push_back("k = 2q-1 (p odd) requires h = q-1, saw " + std::to_string(h) +
                                   ": " + sig);
        }
        break;
      }
      default:
        break;  // k = 3: both observed h values occur, nothing to pin
    }
  });
  return rep;
}

}  // namespace maxthin
