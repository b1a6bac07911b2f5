#include "tropbound/io.hpp"

#include <fstream>
#include <sstream>

#include "tropbound/catalog.hpp"
#include "tropbound/errors.hpp"
#include "tropbound/kontsevich.hpp"

namespace tropbound::io {

json load_json(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw InvalidInput("", path.string() + ": " + e.what());
  }
}

namespace {

std::int64_t integer_at(const json &v, const std::string &where) {
  if (!v.is_number_integer())
    throw InvalidInput(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::string str(const mpz_class &z) { return z.get_str(); }
std::string str(const mpq_class &q) { return q.get_str(); }

json point_json(const Point2 &p) { return json::array({str(p.x), str(p.y)}); }

} // namespace

NumericalData numerical_data_from_json(const json &doc) {
  if (!doc.is_object())
    throw InvalidInput("", "expected a JSON object");
  if (!doc.contains("k"))
    throw InvalidInput("/k", "missing field");
  if (!doc.contains("alpha"))
    throw InvalidInput("/alpha", "missing field");
  NumericalData data;
  const auto k = integer_at(doc.at("k"), "/k");
  if (k < 1 || k > 64)
    throw InvalidInput("/k", "expected an integer in [1, 64]");
  data.k = static_cast<int>(k);

  const json &alpha = doc.at("alpha");
  if (!alpha.is_array())
    throw InvalidInput("/alpha", "expected an array of rows");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const std::string at = "/alpha/" + std::to_string(i);
    const json &row = alpha[i];
    if (!row.is_array())
      throw InvalidInput(at, "expected an array");
    if (row.size() != static_cast<std::size_t>(k + 1))
      throw InvalidInput(at, "expected " + std::to_string(k + 1) +
                                 " entries (k+1), got " +
                                 std::to_string(row.size()));
    std::vector<Entry> parsed;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = at + "/" + std::to_string(j);
      const auto v = integer_at(row[j], cell);
      if (v < 0)
        throw InvalidInput(cell, "tangency orders are nonnegative");
      parsed.push_back(v);
    }
    data.alpha.push_back(std::move(parsed));
  }
  return data;
}

json to_json(const NumericalData &data) {
  return json{{"k", data.k}, {"alpha", data.alpha}};
}

InsertionSpec insertions_from_json(const json &doc,
                                   const NumericalData &data) {
  if (!doc.contains("insertions"))
    return catalog::point_insertions(data);
  const json &list = doc.at("insertions");
  if (!list.is_array())
    throw InvalidInput("/insertions", "expected an array");
  InsertionSpec ins;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = "/insertions/" + std::to_string(i);
    const json &e = list[i];
    if (!e.is_object())
      throw InvalidInput(at, "expected an object with \"d\" and \"nu\"");
    Insertion entry;
    entry.multiplier = e.contains("d") ? integer_at(e.at("d"), at + "/d") : 1;
    if (!e.contains("nu"))
      throw InvalidInput(at + "/nu", "missing field");
    entry.codim = static_cast<int>(integer_at(e.at("nu"), at + "/nu"));
    if (entry.multiplier < 1)
      throw InvalidInput(at + "/d", "multiplier must be positive");
    if (entry.codim < 0 || entry.codim > data.k)
      throw InvalidInput(at + "/nu", "codimension must lie in [0, k]");
    ins.entries.push_back(entry);
  }
  if (ins.entries.size() != data.markings())
    throw InvalidInput("/insertions", "expected one entry per row of alpha");
  return ins;
}

json to_json(const InsertionSpec &ins) {
  json list = json::array();
  for (const auto &e : ins.entries)
    list.push_back({{"d", e.multiplier}, {"nu", e.codim}});
  return list;
}

json to_json(const BoundValue &bound) {
  return json{{"value", str(bound.value)},
              {"breakdown",
               {{"multiplier_product", str(bound.multiplier_product)},
                {"binomial", str(bound.binomial)},
                {"power", str(bound.power)}}},
              {"free_codim", bound.free_codim}};
}

json to_json(const VerificationReport &r) {
  json out{{"case", r.case_name},
           {"k", r.data.k},
           {"alpha", r.data.alpha},
           {"insertions", to_json(r.insertions)},
           {"seed", r.seed},
           {"bound", str(r.bound)},
           {"exact", r.exact ? json(str(*r.exact)) : json(nullptr)},
           {"exact_source", r.exact_source},
           {"ok", r.ok ? json(*r.ok) : json(nullptr)},
           {"ratio", r.ratio ? json(str(*r.ratio)) : json(nullptr)},
           {"notes", r.notes}};
  return out;
}

mpz_class parse_mpz(const json &value, const std::string &where) {
  if (value.is_number_integer())
    return mpz_class(std::to_string(value.get<std::int64_t>()));
  if (!value.is_string())
    throw InvalidInput(where, "expected an integer or decimal string");
  try {
    return mpz_class(value.get<std::string>());
  } catch (const std::invalid_argument &) {
    throw InvalidInput(where, "not an integer: " + value.get<std::string>());
  }
}

mpq_class parse_mpq(const json &value, const std::string &where) {
  if (value.is_number_integer())
    return mpq_class(parse_mpz(value, where));
  if (!value.is_string())
    throw InvalidInput(where, "expected a rational string");
  try {
    mpq_class q(value.get<std::string>());
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument &) {
    throw InvalidInput(where, "not a rational: " + value.get<std::string>());
  }
}

VerificationReport report_from_json(const json &doc) {
  if (!doc.is_object())
    throw InvalidInput("", "expected a report object");
  VerificationReport r;
  r.case_name = doc.at("case").get<std::string>();
  r.data = numerical_data_from_json(doc);
  r.insertions = insertions_from_json(doc, r.data);
  r.seed = doc.at("seed").get<std::uint64_t>();
  r.bound = parse_mpq(doc.at("bound"), "/bound");
  if (!doc.at("exact").is_null())
    r.exact = parse_mpz(doc.at("exact"), "/exact");
  r.exact_source = doc.at("exact_source").get<std::string>();
  if (!doc.at("ok").is_null())
    r.ok = doc.at("ok").get<bool>();
  if (!doc.at("ratio").is_null())
    r.ratio = parse_mpq(doc.at("ratio"), "/ratio");
  r.notes = doc.at("notes").get<std::vector<std::string>>();
  return r;
}

json suite_to_json(const std::vector<VerificationReport> &reports,
                   std::uint64_t seed) {
  json cases = json::array();
  bool all_ok = true;
  for (const auto &r : reports) {
    cases.push_back(to_json(r));
    all_ok = all_ok && r.ok == true;
  }
  return json{{"seed", seed}, {"all_ok", all_ok}, {"cases", cases}};
}

std::string suite_to_csv(const std::vector<VerificationReport> &reports) {
  std::ostringstream out;
  out << "case,bound,exact,ratio,ok\n";
  for (const auto &r : reports) {
    out << r.case_name << ',' << r.bound.get_str() << ','
        << (r.exact ? r.exact->get_str() : "") << ','
        << (r.ratio ? r.ratio->get_str() : "") << ','
        << (r.ok ? (*r.ok ? "true" : "false") : "") << '\n';
  }
  return out.str();
}

json to_json(const RandomSuiteReport &report) {
  json counter = json::array();
  for (const auto &c : report.counterexamples)
    counter.push_back({{"alpha", c.data.alpha}, {"reason", c.reason}});
  return json{{"seed", report.seed},
              {"trials", report.trials},
              {"fixed_cases", report.fixed_cases},
              {"exact_checked", report.exact_checked},
              {"ok", report.ok()},
              {"counterexamples", counter}};
}

json to_json(const TropicalSolution &s) {
  const auto &t = s.type.topology;
  json vertices = json::array();
  for (const auto &v : s.vertices)
    vertices.push_back(point_json(v));
  json edges = json::array();
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    const auto [parent, child] = t.edges[e];
    json edge{{"from", parent - t.num_legs},
              {"direction", {s.type.directions[e].x, s.type.directions[e].y}},
              {"weight", weight(s.type.directions[e])}};
    if (t.is_leg(e)) {
      edge["leg"] = child;
    } else {
      edge["to"] = child - t.num_legs;
      edge["length"] = str(s.edge_length[e]);
    }
    edges.push_back(std::move(edge));
  }
  json points = json::array();
  for (std::size_t j = 0; j < s.points.size(); ++j)
    points.push_back({{"position", point_json(s.points[j])},
                      {"edge", s.type.point_edge[j]},
                      {"offset", str(s.point_offset[j])}});
  return json{{"vertices", vertices},
              {"edges", edges},
              {"points", points},
              {"multiplicity", str(s.multiplicity)}};
}

json invariant_to_json(const InvariantResult &result) {
  json solutions = json::array();
  for (const auto &s : result.solutions)
    solutions.push_back(to_json(s));
  json points = json::array();
  for (const auto &p : result.points.points)
    points.push_back(point_json(p));
  return json{{"invariant", str(result.total)},
              {"point_seed", result.points.seed},
              {"points", points},
              {"resamples", result.resamples},
              {"recheck_seed", result.recheck_seed
                                   ? json(*result.recheck_seed)
                                   : json(nullptr)},
              {"solutions", solutions}};
}

std::string nd_table_csv(long max_degree) {
  if (max_degree < 1)
    throw InvalidInput("--max-degree", "must be positive");
  std::ostringstream out;
  out << "d,N_d\n";
  for (long d = 1; d <= max_degree; ++d)
    out << d << ',' << kontsevich_nd(d).get_str() << '\n';
  return out.str();
}

} // namespace tropbound::io
