#include "futile/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "futile/errors.hpp"

namespace futile {

using Json = nlohmann::ordered_json;

namespace {

Json write_report(const FutilityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["theorem"] = r.theorem;
  const Certificate& c = r.certificate;
  Json cj;
  cj["kind"] = c.kind;
  if (!c.generator.empty()) cj["generator"] = c.generator;
  if (!c.minimal_polynomial.empty()) cj["minimal_polynomial"] = c.minimal_polynomial;
  if (!c.factors.empty()) {
    Json f = Json::array();
    for (const auto& [p, m] : c.factors) f.push_back(Json{{"factor", p}, {"multiplicity", m}});
    cj["factors"] = f;
  }
  if (c.count) cj["count"] = *c.count;
  if (!c.cardinality.empty()) cj["cardinality"] = c.cardinality;
  if (!c.chain.empty()) cj["chain"] = c.chain;
  if (c.free_rank) cj["free_rank"] = *c.free_rank;
  if (!c.torsion.empty()) cj["torsion"] = c.torsion;
  if (!c.conditions.empty()) {
    Json conds = Json::array();
    for (const auto& x : c.conditions) conds.push_back(Json{{"name", x.name}, {"value", x.value}, {"holds", x.holds}});
    cj["conditions"] = conds;
  }
  if (!c.witness.empty()) cj["witness"] = c.witness;
  j["certificate"] = cj;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (!r.trace.empty()) {
    Json t = Json::array();
    for (const auto& s : r.trace) t.push_back(write_report(s));
    j["trace"] = t;
  }
  return j;
}

FutilityReport read_report(const Json& j) {
  FutilityReport r;
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.theorem = j.at("theorem").get<std::string>();
  const Json& cj = j.at("certificate");
  Certificate& c = r.certificate;
  c.kind = cj.at("kind").get<std::string>();
  if (cj.contains("generator")) c.generator = cj["generator"].get<std::vector<std::string>>();
  if (cj.contains("minimal_polynomial")) c.minimal_polynomial = cj["minimal_polynomial"].get<std::string>();
  if (cj.contains("factors"))
    for (const auto& f : cj["factors"]) c.factors.emplace_back(f.at("factor").get<std::string>(), f.at("multiplicity").get<unsigned>());
  if (cj.contains("count")) c.count = cj["count"].get<std::uint64_t>();
  if (cj.contains("cardinality")) c.cardinality = cj["cardinality"].get<std::string>();
  if (cj.contains("chain")) c.chain = cj["chain"].get<std::vector<std::size_t>>();
  if (cj.contains("free_rank")) c.free_rank = cj["free_rank"].get<std::size_t>();
  if (cj.contains("torsion")) c.torsion = cj["torsion"].get<std::vector<std::string>>();
  if (cj.contains("conditions"))
    for (const auto& x : cj["conditions"])
      c.conditions.push_back({x.at("name").get<std::string>(), x.at("value").get<std::string>(), x.at("holds").get<bool>()});
  if (cj.contains("witness")) c.witness = cj["witness"].get<std::string>();
  if (j.contains("notes")) r.notes = j["notes"].get<std::vector<std::string>>();
  if (j.contains("trace"))
    for (const auto& s : j["trace"]) r.trace.push_back(read_report(s));
  return r;
}

Json write_members(const std::vector<MemberBasis>& m) { return Json(m); }

Json write_enumeration(const EnumerationSummary& e) {
  Json j;
  j["count"] = e.count;
  j["inclusions"] = e.inclusions;
  if (!e.members.empty()) j["members"] = write_members(e.members);
  return j;
}

EnumerationSummary read_enumeration(const Json& j) {
  EnumerationSummary e;
  e.count = j.at("count").get<std::uint64_t>();
  e.inclusions = j.at("inclusions").get<std::size_t>();
  if (j.contains("members")) e.members = j["members"].get<std::vector<MemberBasis>>();
  return e;
}

Json write_sampling(const SamplingSummary& s) {
  Json j;
  j["trials"] = s.trials;
  j["bound"] = s.bound;
  j["seed"] = s.seed;
  j["distinct"] = s.distinct;
  j["threshold"] = s.threshold;
  j["stabilized"] = s.stabilized;
  j["diverged"] = s.diverged;
  Json g = Json::array();
  for (const auto& [t, c] : s.growth_curve) g.push_back(Json::array({t, c}));
  j["growth_curve"] = g;
  Json d = Json::object();
  for (const auto& [dim, n] : s.dimension_counts) d[std::to_string(dim)] = n;
  j["dimension_counts"] = d;
  if (!s.members.empty()) j["members"] = write_members(s.members);
  return j;
}

SamplingSummary read_sampling(const Json& j) {
  SamplingSummary s;
  s.trials = j.at("trials").get<std::uint64_t>();
  s.bound = j.at("bound").get<long long>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.distinct = j.at("distinct").get<std::size_t>();
  s.threshold = j.at("threshold").get<std::size_t>();
  s.stabilized = j.at("stabilized").get<bool>();
  s.diverged = j.at("diverged").get<bool>();
  for (const auto& g : j.at("growth_curve")) s.growth_curve.emplace_back(g.at(0).get<std::uint64_t>(), g.at(1).get<std::size_t>());
  for (auto it = j.at("dimension_counts").begin(); it != j.at("dimension_counts").end(); ++it)
    s.dimension_counts[std::stoul(it.key())] = it.value().get<std::size_t>();
  if (j.contains("members")) s.members = j["members"].get<std::vector<MemberBasis>>();
  return s;
}

}  // namespace

std::string serialize_report(const ReportDocument& doc) {
  Json j;
  j["format_version"] = doc.format_version;
  j["tool_version"] = doc.tool_version;
  j["case_id"] = doc.case_id;
  j["command"] = doc.command;
  j["seed"] = doc.seed;
  if (doc.report) j["report"] = write_report(*doc.report);
  if (doc.enumeration) j["enumeration"] = write_enumeration(*doc.enumeration);
  if (doc.sampling) j["sampling"] = write_sampling(*doc.sampling);
  if (doc.factorization) {
    const FactorSummary& f = *doc.factorization;
    Json fj;
    fj["polynomial"] = f.polynomial;
    fj["domain"] = f.domain;
    fj["unit"] = f.unit;
    Json fs = Json::array();
    for (const auto& [p, m] : f.factors) fs.push_back(Json{{"factor", p}, {"multiplicity", m}});
    fj["factors"] = fs;
    fj["reexpands"] = f.reexpands;
    j["factorization"] = fj;
  }
  if (doc.oracle) {
    const OracleSummary& o = *doc.oracle;
    Json oj;
    oj["kind"] = o.kind;
    oj["agreement"] = o.agreement;
    oj["detail"] = o.detail;
    if (o.enumeration) oj["enumeration"] = write_enumeration(*o.enumeration);
    if (o.sampling) oj["sampling"] = write_sampling(*o.sampling);
    j["oracle"] = oj;
  }
  if (doc.elapsed_us) j["timing"] = Json{{"elapsed_us", *doc.elapsed_us}};
  return j.dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed report", line, col);
  }
  try {
    ReportDocument d;
    d.format_version = j.at("format_version").get<int>();
    if (d.format_version != kReportFormatVersion)
      throw ValidationError("unsupported report version " + std::to_string(d.format_version));
    d.tool_version = j.at("tool_version").get<std::string>();
    d.case_id = j.at("case_id").get<std::string>();
    d.command = j.at("command").get<std::string>();
    d.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("report")) d.report = read_report(j["report"]);
    if (j.contains("enumeration")) d.enumeration = read_enumeration(j["enumeration"]);
    if (j.contains("sampling")) d.sampling = read_sampling(j["sampling"]);
    if (j.contains("factorization")) {
      const Json& fj = j["factorization"];
      FactorSummary f;
      f.polynomial = fj.at("polynomial").get<std::string>();
      f.domain = fj.at("domain").get<std::string>();
      f.unit = fj.at("unit").get<std::string>();
      for (const auto& x : fj.at("factors")) f.factors.emplace_back(x.at("factor").get<std::string>(), x.at("multiplicity").get<unsigned>());
      f.reexpands = fj.at("reexpands").get<bool>();
      d.factorization = f;
    }
    if (j.contains("oracle")) {
      const Json& oj = j["oracle"];
      OracleSummary o;
      o.kind = oj.at("kind").get<std::string>();
      o.agreement = oj.at("agreement").get<bool>();
      o.detail = oj.at("detail").get<std::string>();
      if (oj.contains("enumeration")) o.enumeration = read_enumeration(oj["enumeration"]);
      if (oj.contains("sampling")) o.sampling = read_sampling(oj["sampling"]);
      d.oracle = o;
    }
    if (j.contains("timing")) d.elapsed_us = j["timing"].at("elapsed_us").get<std::uint64_t>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

namespace {

void human_report(std::ostringstream& out, const FutilityReport& r, const std::string& indent) {
  const Certificate& c = r.certificate;
  out << indent << "verdict: " << to_string(r.verdict) << " (" << r.theorem << ")\n";
  out << indent << "certificate: " << c.kind << "\n";
  if (!c.generator.empty()) {
    out << indent << "  generator: (";
    for (std::size_t i = 0; i < c.generator.size(); ++i) out << (i ? ", " : "") << c.generator[i];
    out << ")\n";
  }
  if (!c.minimal_polynomial.empty()) out << indent << "  minimal polynomial: " << c.minimal_polynomial << "\n";
  if (c.count) out << indent << "  count: " << *c.count << "\n";
  if (!c.cardinality.empty()) out << indent << "  cardinality: " << c.cardinality << "\n";
  if (!c.chain.empty()) {
    out << indent << "  chain:";
    for (auto d : c.chain) out << " " << d;
    out << "\n";
  }
  if (c.free_rank) out << indent << "  free rank: " << *c.free_rank << "\n";
  if (!c.torsion.empty()) {
    out << indent << "  torsion:";
    for (const auto& t : c.torsion) out << " Z/" << t;
    out << "\n";
  }
  for (const auto& x : c.conditions)
    out << indent << "  [" << (x.holds ? "ok" : "fails") << "] " << x.name << " = " << x.value << "\n";
  if (!c.witness.empty()) out << indent << "  witness: " << c.witness << "\n";
  for (const auto& n : r.notes) out << indent << "note: " << n << "\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    out << indent << "step " << i + 1 << ":\n";
    human_report(out, r.trace[i], indent + "  ");
  }
}

void human_sampling(std::ostringstream& out, const SamplingSummary& s, const std::string& indent) {
  out << indent << "trials " << s.trials << ", bound " << s.bound << ", seed " << s.seed << "\n";
  out << indent << "distinct: " << s.distinct << " (threshold " << s.threshold << ")"
      << (s.stabilized ? ", stabilized" : "") << (s.diverged ? ", diverged" : "") << "\n";
  out << indent << "growth:";
  for (const auto& [t, c] : s.growth_curve) out << " " << t << ":" << c;
  out << "\n";
}

}  // namespace

std::string format_human(const ReportDocument& doc) {
  std::ostringstream out;
  out << "case " << doc.case_id << " [" << doc.command << ", seed " << doc.seed << "]\n";
  if (doc.report) human_report(out, *doc.report, "");
  if (doc.enumeration) {
    out << "subalgebras: " << doc.enumeration->count << " (" << doc.enumeration->inclusions << " proper inclusions)\n";
    for (const auto& m : doc.enumeration->members) {
      out << "  span{";
      for (std::size_t i = 0; i < m.size(); ++i) {
        out << (i ? ", " : "") << "(";
        for (std::size_t k = 0; k < m[i].size(); ++k) out << (k ? ", " : "") << m[i][k];
        out << ")";
      }
      out << "}\n";
    }
  }
  if (doc.sampling) {
    out << "sampling:\n";
    human_sampling(out, *doc.sampling, "  ");
  }
  if (doc.factorization) {
    const FactorSummary& f = *doc.factorization;
    out << "factor " << f.polynomial << " over " << f.domain << ":\n  unit " << f.unit << "\n";
    for (const auto& [p, m] : f.factors) out << "  " << p << (m > 1 ? " ^" + std::to_string(m) : "") << "\n";
    out << "  re-expands: " << (f.reexpands ? "yes" : "NO") << "\n";
  }
  if (doc.oracle) {
    const OracleSummary& o = *doc.oracle;
    out << "oracle: " << o.kind << ", " << (o.agreement ? "agreement" : "DISCREPANCY") << "\n";
    if (!o.detail.empty()) out << "  " << o.detail << "\n";
    if (o.enumeration) out << "  enumerated: " << o.enumeration->count << "\n";
    if (o.sampling) human_sampling(out, *o.sampling, "  ");
  }
  if (doc.elapsed_us) out << "elapsed: " << *doc.elapsed_us << " us\n";
  return out.str();
}

}  // namespace futile
