#include "bfnl/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfnl {

namespace {

Json table_to_json(const std::vector<Elem>& t, int m) {
  Json rows = Json::array();
  for (int a = 0; a < m; ++a) {
    Json row = Json::array();
    for (int b = 0; b < m; ++b) {
      Elem v = t[a * m + b];
      if (v == kUndef) row.push_back(nullptr);
      else row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Elem> table_from_json(const Json& j, int m, const char* name) {
  if (!j.is_array() || static_cast<int>(j.size()) != m)
    throw std::runtime_error(std::string("algebra: '") + name + "' must be a " +
                             std::to_string(m) + "-row array");
  std::vector<Elem> t(std::size_t(m) * m, kUndef);
  for (int a = 0; a < m; ++a) {
    const Json& row = j[a];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw std::runtime_error(std::string("algebra: '") + name + "' row has wrong length");
    for (int b = 0; b < m; ++b) {
      const Json& cell = row[b];
      if (cell.is_null()) continue;
      if (!cell.is_number_integer())
        throw std::runtime_error(std::string("algebra: '") + name + "' entry not an index");
      Elem v = cell.get<Elem>();
      if (v < 0 || v >= m)
        throw std::runtime_error(std::string("algebra: '") + name + "' entry out of range");
      t[a * m + b] = v;
    }
  }
  return t;
}

Elem const_from_json(const Json& j, int m, const char* name) {
  if (!j.is_number_integer())
    throw std::runtime_error(std::string("algebra: '") + name + "' must be an index");
  Elem v = j.get<Elem>();
  if (v < 0 || v >= m)
    throw std::runtime_error(std::string("algebra: '") + name + "' out of range");
  return v;
}

}  // namespace

Json algebra_to_json(const PartialAlgebra& a) {
  Json j;
  j["size"] = a.size;
  Json leq = Json::array();
  for (int x = 0; x < a.size; ++x) {
    Json row = Json::array();
    for (int y = 0; y < a.size; ++y) row.push_back(a.le(x, y) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  j["leq"] = std::move(leq);
  j["otimes"] = table_to_json(a.otimes, a.size);
  j["lol"] = table_to_json(a.lol, a.size);
  j["lolinv"] = table_to_json(a.lolinv, a.size);
  j["join"] = table_to_json(a.join, a.size);
  j["meet"] = table_to_json(a.meet, a.size);
  Json neg = Json::array();
  for (int x = 0; x < a.size; ++x) {
    if (a.neg[x] == kUndef) neg.push_back(nullptr);
    else neg.push_back(a.neg[x]);
  }
  j["neg"] = std::move(neg);
  j["one"] = a.one;
  j["top"] = a.top;
  j["bot"] = a.bot;
  return j;
}

PartialAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw std::runtime_error("algebra: not a JSON object");
  for (const char* key :
       {"size", "leq", "otimes", "lol", "lolinv", "join", "meet", "neg", "one", "top", "bot"})
    if (!j.contains(key))
      throw std::runtime_error(std::string("algebra: missing key '") + key + "'");
  if (!j["size"].is_number_integer() || j["size"].get<int>() < 1 || j["size"].get<int>() > 62)
    throw std::runtime_error("algebra: 'size' must be an integer in [1, 62]");
  const int m = j["size"].get<int>();

  PartialAlgebra a;
  a.size = m;
  const Json& leq = j["leq"];
  if (!leq.is_array() || static_cast<int>(leq.size()) != m)
    throw std::runtime_error("algebra: 'leq' must be a square 0/1 matrix");
  a.leq.assign(std::size_t(m) * m, 0);
  for (int x = 0; x < m; ++x) {
    const Json& row = leq[x];
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw std::runtime_error("algebra: 'leq' row has wrong length");
    for (int y = 0; y < m; ++y) {
      const Json& cell = row[y];
      if (cell.is_boolean()) a.leq[x * m + y] = cell.get<bool>() ? 1 : 0;
      else if (cell.is_number_integer() &&
               (cell.get<int>() == 0 || cell.get<int>() == 1))
        a.leq[x * m + y] = static_cast<std::uint8_t>(cell.get<int>());
      else
        throw std::runtime_error("algebra: 'leq' entries must be 0/1 or booleans");
    }
  }
  a.otimes = table_from_json(j["otimes"], m, "otimes");
  a.lol = table_from_json(j["lol"], m, "lol");
  a.lolinv = table_from_json(j["lolinv"], m, "lolinv");
  a.join = table_from_json(j["join"], m, "join");
  a.meet = table_from_json(j["meet"], m, "meet");
  const Json& neg = j["neg"];
  if (!neg.is_array() || static_cast<int>(neg.size()) != m)
    throw std::runtime_error("algebra: 'neg' must have one entry per element");
  a.neg.assign(m, kUndef);
  for (int x = 0; x < m; ++x) {
    if (neg[x].is_null()) continue;
    if (!neg[x].is_number_integer())
      throw std::runtime_error("algebra: 'neg' entry not an index");
    Elem v = neg[x].get<Elem>();
    if (v < 0 || v >= m) throw std::runtime_error("algebra: 'neg' entry out of range");
    a.neg[x] = v;
  }
  a.one = const_from_json(j["one"], m, "one");
  a.top = const_from_json(j["top"], m, "top");
  a.bot = const_from_json(j["bot"], m, "bot");
  return a;
}

Json frame_to_json(const ResiduatedFrame& f) {
  Json j;
  j["points"] = f.points;
  Json unit = Json::array();
  for (int i = 0; i < f.points; ++i)
    if ((f.unit >> i) & 1u) unit.push_back(i);
  j["unit"] = std::move(unit);
  Json rel = Json::array();
  for (int x = 0; x < f.points; ++x)
    for (int y = 0; y < f.points; ++y)
      for (int z = 0; z < f.points; ++z)
        if (f.relates(x, y, z)) rel.push_back(Json::array({x, y, z}));
  j["rel"] = std::move(rel);
  return j;
}

ResiduatedFrame frame_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("unit") || !j.contains("rel"))
    throw std::runtime_error("frame: expected keys 'points', 'unit', 'rel'");
  int k = j["points"].get<int>();
  if (k < 1 || k > 62) throw std::runtime_error("frame: 'points' out of range");
  ResiduatedFrame f;
  f.points = k;
  f.rel.assign(std::size_t(k) * k, 0);
  for (const Json& u : j["unit"]) {
    int i = u.get<int>();
    if (i < 0 || i >= k) throw std::runtime_error("frame: unit index out of range");
    f.unit |= std::uint64_t{1} << i;
  }
  for (const Json& t : j["rel"]) {
    if (!t.is_array() || t.size() != 3) throw std::runtime_error("frame: bad triple");
    int x = t[0].get<int>(), y = t[1].get<int>(), z = t[2].get<int>();
    if (x < 0 || x >= k || y < 0 || y >= k || z < 0 || z >= k)
      throw std::runtime_error("frame: triple index out of range");
    f.rel[x * k + y] |= std::uint64_t{1} << z;
  }
  return f;
}

Json filter_to_json(FilterSet s) {
  Json arr = Json::array();
  for (Elem e : fs_elements(s)) arr.push_back(e);
  return arr;
}

Json family_to_json(const FilterFamily& family) {
  Json arr = Json::array();
  for (FilterSet s : family) arr.push_back(filter_to_json(s));
  return arr;
}

Json proof_to_json(const ProofNode& n) {
  Json j;
  j["rule"] = rule_name(n.rule);
  j["sequent"] = to_string(n.sequent);
  if (!n.position.empty() || n.rule == Rule::BotLeft || n.rule == Rule::Cut ||
      n.rule == Rule::OtimesLeft || n.rule == Rule::AndLeft || n.rule == Rule::OrLeft ||
      n.rule == Rule::LolLeft || n.rule == Rule::LolinvLeft || n.rule == Rule::OneLeft1 ||
      n.rule == Rule::OneLeft2 || n.rule == Rule::TopLeft1 || n.rule == Rule::TopLeft2 ||
      n.rule == Rule::AndAssoc1 || n.rule == Rule::AndAssoc2 ||
      n.rule == Rule::AndExchange || n.rule == Rule::AndWeak || n.rule == Rule::AndContract)
    j["position"] = n.position;
  if (n.cut_formula) j["cut-formula"] = to_string(n.cut_formula);
  if (!n.premises.empty()) {
    Json prem = Json::array();
    for (const ProofNode& p : n.premises) prem.push_back(proof_to_json(p));
    j["premises"] = std::move(prem);
  }
  return j;
}

Json checker_verdict_to_json(const CheckerVerdict& v) {
  Json j;
  j["accepted"] = v.accepted;
  j["iterations"] = v.iterations;
  if (v.accepted) {
    j["family"] = family_to_json(v.family);
    Json unit = Json::array();
    for (std::size_t i = 0; i < v.family.size(); ++i)
      if (std::find(v.unit_family.begin(), v.unit_family.end(), v.family[i]) !=
          v.unit_family.end())
        unit.push_back(i);
    j["unit-family"] = std::move(unit);
  } else {
    j["failing-step"] = v.failing_step;
    if (v.witness) {
      Json w;
      w["condition"] = v.witness->condition;
      w["elements"] = v.witness->elements;
      if (!v.witness->filters.empty()) {
        Json fs = Json::array();
        for (FilterSet s : v.witness->filters) fs.push_back(filter_to_json(s));
        w["filters"] = std::move(fs);
      }
      if (!v.witness->detail.empty()) w["detail"] = v.witness->detail;
      j["witness"] = std::move(w);
    }
  }
  return j;
}

Json certificate_to_json(const AcceptanceCertificate& c) {
  Json j;
  j["frame"] = frame_to_json(c.frame);
  j["family"] = family_to_json(c.family);
  Json iota = Json::array();
  for (std::uint64_t mask : c.iota) {
    Json members = Json::array();
    for (int i = 0; i < static_cast<int>(c.family.size()); ++i)
      if ((mask >> i) & 1u) members.push_back(i);
    iota.push_back(std::move(members));
  }
  j["iota"] = std::move(iota);
  j["embedding-verified"] = c.embedding_check.ok;
  return j;
}

Json verdict_to_json(const std::vector<Sequent>& hypotheses, const Sequent& goal,
                     const Verdict& v) {
  Json j;
  j["sequent"] = to_string(goal);
  Json hyp = Json::array();
  for (const Sequent& h : hypotheses) hyp.push_back(to_string(h));
  j["assumptions"] = std::move(hyp);
  switch (v.kind) {
    case Verdict::Kind::Provable: {
      j["verdict"] = "provable";
      j["proof"] = proof_to_json(*v.proof);
      break;
    }
    case Verdict::Kind::Refuted: {
      j["verdict"] = "refuted";
      Json model;
      if (v.frame_model) {
        model["kind"] = "frame";
        model["frame"] = frame_to_json(v.frame_model->frame);
        Json val;
        for (const auto& [name, mask] : v.frame_model->valuation) {
          Json members = Json::array();
          for (int i = 0; i < v.frame_model->frame.points; ++i)
            if ((mask >> i) & 1u) members.push_back(i);
          val[name] = std::move(members);
        }
        model["valuation"] = std::move(val);
      } else if (v.algebra_model) {
        model["kind"] = "algebra";
        model["algebra"] = algebra_to_json(v.algebra_model->algebra);
        Json val;
        for (const auto& [name, e] : v.algebra_model->valuation) val[name] = e;
        model["valuation"] = std::move(val);
      }
      j["countermodel"] = std::move(model);
      break;
    }
    case Verdict::Kind::Unknown: {
      j["verdict"] = "unknown";
      Json b;
      b["kmax"] = v.bounds.kmax;
      b["prover-depth"] = v.bounds.prover_depth;
      b["bunch-cap-factor"] = v.bounds.bunch_cap_factor;
      b["paper-faithful"] = v.bounds.paper_faithful;
      if (v.bounds.paper_faithful) b["size-cap"] = v.bounds.size_cap;
      j["bounds"] = std::move(b);
      break;
    }
  }
  if (v.soundness_alarm) j["soundness-alarm"] = true;
  return j;
}

}  // namespace bfnl
