#include "maxthin/serialize.hpp"

#include <set>

namespace maxthin {

namespace {

void require_fields(const Json& doc, const std::set<std::string>& allowed) {
  if (!doc.is_object()) throw DocumentError("algebra document must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!allowed.count(it.key())) throw DocumentError("unknown field '" + it.key() + "'");
  for (const auto& key : allowed)
    if (!doc.contains(key)) throw DocumentError("missing field '" + key + "'");
}

unsigned get_uint(const Json& doc, const char* key) {
  if (!doc.at(key).is_number_unsigned()) throw DocumentError(std::string(key) + " must be a non-negative integer");
  return doc.at(key).get<unsigned>();
}

Scalar get_scalar(PrimeChar ch, const Json& v) {
  if (!v.is_string()) throw DocumentError("scalars must be decimal strings");
  try {
    return Scalar::parse(ch, v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

Json mat_json(const Mat2& m) {
  Json rows = Json::array();
  for (unsigned r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (unsigned c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat2 mat_from_json(PrimeChar ch, const Json& v, unsigned rows, unsigned cols) {
  if (!v.is_array() || v.size() != rows) throw DocumentError("action matrix row count mismatch");
  Mat2 m = Mat2::zero(ch, rows, cols);
  for (unsigned r = 0; r < rows; ++r) {
    const Json& row = v.at(r);
    if (!row.is_array() || row.size() != cols) throw DocumentError("action matrix column count mismatch");
    for (unsigned c = 0; c < cols; ++c) m.at(r, c) = get_scalar(ch, row.at(c));
  }
  return m;
}

}  // namespace

Json serialize(const MaxClassTable& t) {
  Json doc;
  doc["schema"] = kAlgebraSchema;
  doc["kind"] = "maxclass";
  doc["p"] = t.field().p();
  doc["maxdeg"] = t.maxdeg();
  Json pts = Json::array();
  CentralizerSequence seq = centralizer_sequence(t);
  for (const auto& [cx, cy] : seq.points) pts.push_back(Json::array({cx.str(), cy.str()}));
  doc["centralizers"] = std::move(pts);
  return doc;
}

Json serialize(const ThinTable& t) {
  Json doc;
  doc["schema"] = kAlgebraSchema;
  doc["kind"] = "thin";
  doc["p"] = t.field().p();
  doc["maxdeg"] = t.maxdeg();
  Json dims = Json::array();
  for (unsigned d = 1; d <= t.maxdeg(); ++d) dims.push_back(t.dim(d));
  doc["dims"] = std::move(dims);
  Json ax = Json::array(), ay = Json::array();
  for (unsigned d = 1; d < t.maxdeg(); ++d) {
    ax.push_back(mat_json(t.action(Gen::x, d)));
    ay.push_back(mat_json(t.action(Gen::y, d)));
  }
  doc["act_x"] = std::move(ax);
  doc["act_y"] = std::move(ay);
  return doc;
}

std::string document_line(const Json& doc) { return doc.dump(); }

ParsedAlgebra parse_algebra(const Json& doc) {
  if (!doc.is_object() || !doc.contains("schema") || doc.at("schema") != kAlgebraSchema)
    throw DocumentError("not a maxthin algebra document");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw DocumentError("missing document kind");
  const std::string kind = doc.at("kind").get<std::string>();
  if (!doc.contains("p") || !doc.at("p").is_number_unsigned())
    throw DocumentError("p must be a non-negative integer");
  PrimeChar ch(0);
  try {
    ch = PrimeChar(doc.at("p").get<unsigned long>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
  if (kind == "maxclass") {
    require_fields(doc, {"schema", "kind", "p", "maxdeg", "centralizers"});
    const unsigned maxdeg = get_uint(doc, "maxdeg");
    const Json& pts = doc.at("centralizers");
    if (!pts.is_array()) throw DocumentError("centralizers must be an array");
    CentralizerSequence seq{ch, {}};
    for (const Json& pt : pts) {
      if (!pt.is_array() || pt.size() != 2) throw DocumentError("centralizer points are pairs");
      seq.points.emplace_back(get_scalar(ch, pt.at(0)), get_scalar(ch, pt.at(1)));
    }
    try {
      return maxclass_from_centralizers(seq, maxdeg);
    } catch (const TableError& e) {
      throw DocumentError(e.what());
    }
  }
  if (kind == "thin") {
    require_fields(doc, {"schema", "kind", "p", "maxdeg", "dims", "act_x", "act_y"});
    const unsigned maxdeg = get_uint(doc, "maxdeg");
    const Json& jdims = doc.at("dims");
    if (!jdims.is_array() || jdims.size() != maxdeg) throw DocumentError("dims must list every degree");
    std::vector<unsigned> dims;
    for (const Json& d : jdims) {
      if (!d.is_number_unsigned()) throw DocumentError("dims entries must be integers");
      dims.push_back(d.get<unsigned>());
    }
    const Json& jax = doc.at("act_x");
    const Json& jay = doc.at("act_y");
    if (!jax.is_array() || !jay.is_array() || jax.size() != maxdeg - 1 || jay.size() != maxdeg - 1)
      throw DocumentError("expected one action matrix pair per degree below maxdeg");
    std::vector<Mat2> ax, ay;
    for (unsigned d = 1; d < maxdeg; ++d) {
      unsigned rows = dims.at(d);
      unsigned cols = dims.at(d - 1);
      ax.push_back(mat_from_json(ch, jax.at(d - 1), rows, cols));
      ay.push_back(mat_from_json(ch, jay.at(d - 1), rows, cols));
    }
    try {
      return ThinTable(ch, maxdeg, std::move(dims), std::move(ax), std::move(ay));
    } catch (const TableError& e) {
      throw DocumentError(e.what());
    }
  }
  throw DocumentError("unknown document kind '" + kind + "'");
}

ParsedAlgebra parse_algebra_line(const std::string& line) {
  Json doc;
  try {
    doc = Json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  return parse_algebra(doc);
}

Json profile_json(const ConstituentProfile& prof) {
  Json j;
  j["ell"] = prof.ell ? Json(*prof.ell) : Json(nullptr);
  j["boundaries"] = prof.boundaries;
  j["subsequent"] = prof.subsequent;
  j["determined_up_to"] = prof.determined_up_to;
  return j;
}

Json profile_json(const DiamondProfile& prof) {
  Json j;
  j["k"] = prof.k ? Json(*prof.k) : Json(nullptr);
  j["diamond_degrees"] = prof.diamond_degrees;
  j["h"] = prof.h ? Json(*prof.h) : Json(nullptr);
  j["h_scanned_up_to"] = prof.h_scanned_up_to;
  j["vyy_zero"] = prof.vyy_zero;
  j["relation_holds"] = prof.relation_holds;
  j["half_k_divisible"] = prof.half_k_divisible;
  j["alpha"] = prof.alpha ? Json(prof.alpha->str()) : Json(nullptr);
  j["notes"] = prof.notes;
  return j;
}

Json centralizers_json(const CentralizerSequence& seq) {
  Json pts = Json::array();
  for (const auto& [cx, cy] : seq.points) pts.push_back(Json::array({cx.str(), cy.str()}));
  return pts;
}

Json stats_json(const BranchStats& stats) {
  Json j;
  j["nodes"] = stats.nodes;
  j["emitted"] = stats.emitted;
  j["pruned_structure"] = stats.pruned_structure;
  j["pruned_covering"] = stats.pruned_covering;
  j["pruned_consistency"] = stats.pruned_consistency;
  return j;
}

Json config_json(const SearchConfig& cfg) {
  Json j;
  j["p"] = cfg.field.p();
  j["maxdeg"] = cfg.maxdeg;
  j["kind"] = cfg.kind == TableKind::maxclass ? "maxclass" : "thin";
  j["lookahead"] = cfg.lookahead;
  j["jobs"] = cfg.jobs;
  j["char0_window"] = cfg.char0_window;
  j["cross_check"] = cfg.cross_check;
  return j;
}

Json report_json(const VerificationReport& rep) {
  Json j;
  j["theorem"] = rep.theorem;
  j["config"] = config_json(rep.config);
  j["tables"] = rep.tables;
  j["asserted"] = rep.asserted;
  Json obs;
  for (const auto& [key, counts] : rep.observed) {
    Json c;
    for (const auto& [value, n] : counts) c[value] = n;
    obs[key] = std::move(c);
  }
  j["observed"] = std::move(obs);
  j["violations"] = rep.violations;
  j["stats"] = stats_json(rep.stats);
  j["pass"] = rep.pass();
  return j;
}

}  // namespace maxthin
