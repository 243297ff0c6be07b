#include "futile/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "futile/errors.hpp"
#include "futile/factor.hpp"
#include "futile/sampler.hpp"

namespace futile {

namespace {

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};

template <class D>
MemberBasis member_rows(const Subspace<D>& S) {
  MemberBasis m;
  for (const auto& v : S.basis_vectors()) {
    std::vector<std::string> row;
    for (const auto& x : v) row.push_back(S.domain().format(x));
    m.push_back(std::move(row));
  }
  return m;
}

MemberBasis member_rows(const IntMatrix& L) {
  MemberBasis m;
  for (std::size_t r = 0; r < L.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < L.cols(); ++c) row.push_back(L(r, c).get_str());
    m.push_back(std::move(row));
  }
  return m;
}

SamplerOptions sampler_options(const CaseDescription& c, const CommandOptions& o) {
  SamplerOptions s;
  s.trials = o.trials.value_or(c.sampling.trials.value_or(kDefaultTrials));
  s.bound = o.bound.value_or(c.sampling.bound.value_or(kDefaultBound));
  s.seed = o.seed;
  return s;
}

template <class T>
SamplingSummary summarize(const Histogram<T>& h, std::size_t threshold, bool with_members) {
  SamplingSummary s;
  s.trials = h.trials;
  s.bound = h.bound;
  s.seed = h.seed;
  s.distinct = h.count();
  s.threshold = threshold;
  s.stabilized = h.stabilized();
  s.diverged = h.diverged(threshold);
  s.growth_curve = h.growth_curve;
  s.dimension_counts = dimension_counts(h);
  if (with_members)
    for (const auto& m : h.distinct) s.members.push_back(member_rows(m));
  return s;
}

std::size_t algebra_dim(const BuiltAlgebra& b) {
  return std::visit(Overloaded{[](const ZPresentation& P) { return P.n; },
                               [](const LocalizedZ&) { return std::size_t{0}; },
                               [](const RelativeAlgebra<RationalField>& RA) { return RA.amb.dim(); },
                               [](const auto& A) { return A.dim(); }},
                    b);
}

std::optional<SamplingSummary> sample(const CaseDescription& c, const BuiltAlgebra& b, const CommandOptions& o,
                                      bool with_members) {
  SamplerOptions so = sampler_options(c, o);
  std::size_t threshold = c.sampling.threshold.value_or(divergence_threshold(algebra_dim(b)));
  if (auto* A = std::get_if<StructAlgebra<RationalField>>(&b))
    return summarize(sample_subalgebras(*A, A->unit_span(), so), threshold, with_members);
  if (auto* RA = std::get_if<RelativeAlgebra<RationalField>>(&b))
    return summarize(sample_subalgebras(*RA, so), threshold, with_members);
  if (auto* P = std::get_if<ZPresentation>(&b)) return summarize(sample_subrings(*P, so), threshold, with_members);
  return std::nullopt;
}

EnumerationSummary enumerate(const StructAlgebra<PrimeField>& A, std::uint64_t budget, bool with_members) {
  SubalgebraLattice L = enumerate_subalgebras(A, A.unit_span(), budget);
  EnumerationSummary e;
  e.count = L.members.size();
  e.inclusions = L.inclusions.size();
  if (with_members)
    for (const auto& m : L.members) e.members.push_back(member_rows(m));
  return e;
}

bool sampling_agrees(Verdict v, const SamplingSummary& s) {
  return v == Verdict::Futile ? s.stabilized && !s.diverged : s.diverged;
}

OracleSummary oracle(const CaseDescription& c, const BuiltAlgebra& b, const FutilityReport& r,
                     const CommandOptions& o) {
  OracleSummary out;
  if (auto* A = std::get_if<StructAlgebra<PrimeField>>(&b)) {
    out.kind = "enumeration";
    out.enumeration = enumerate(*A, o.budget, false);
    bool count_ok = !r.certificate.count || *r.certificate.count == out.enumeration->count;
    out.agreement = r.verdict == Verdict::Futile && count_ok;
    out.detail = "exhaustive enumeration found " + std::to_string(out.enumeration->count) + " subalgebras";
    return out;
  }
  if (auto* L = std::get_if<StructAlgebra<FunctionField>>(&b)) {
    if (!L->is_commutative()) {
      out.kind = "none";
      out.agreement = true;
      out.detail = "no oracle applies to noncommutative algebras over a function field";
      return out;
    }
    out.kind = "generator-search";
    try {
      GeneratorSearch<FunctionField> g = find_generator(*L, L->unit_span(), o.seed);
      out.agreement = r.verdict == Verdict::Futile;
      out.detail = "primitive element found";
    } catch (const SearchBudgetExceeded&) {
      out.agreement = r.verdict == Verdict::NotFutile;
      out.detail = "no primitive element within the search budget";
    }
    return out;
  }
  if (std::holds_alternative<LocalizedZ>(b)) {
    out.kind = "none";
    out.agreement = true;
    out.detail = "no sampling oracle for localized rings";
    return out;
  }
  out.kind = std::holds_alternative<ZPresentation>(b) ? "subring-sampling" : "sampling";
  out.sampling = sample(c, b, o, false);
  out.agreement = sampling_agrees(r.verdict, *out.sampling);
  out.detail = std::string(out.sampling->stabilized ? "stabilized" : "not stabilized") + " at " +
               std::to_string(out.sampling->distinct) + " distinct, " +
               (out.sampling->diverged ? "above" : "within") + " threshold " + std::to_string(out.sampling->threshold);
  return out;
}

template <class D>
Poly<D> univariate(const D& d, const ParsedPoly& f, const std::string& var,
                   const std::map<std::string, typename D::Elem>& scalars) {
  std::vector<typename D::Elem> coeffs;
  for (unsigned k = 0; k <= f.degree_in(var); ++k) {
    typename D::Elem c = d.zero();
    for (const auto& [mono, q] : f.coefficient(var, k).terms) {
      typename D::Elem t = d.from_rational(q);
      for (const auto& [v, e] : mono)
        for (unsigned i = 0; i < e; ++i) t = t * scalars.at(v);
      c = c + t;
    }
    coeffs.push_back(c);
  }
  return Poly<D>(d, coeffs);
}

template <class D>
FactorSummary factor_summary(const D& d, const ParsedPoly& f, const std::map<std::string, typename D::Elem>& scalars,
                             std::uint64_t seed) {
  std::string var = "x";
  std::size_t free = 0;
  for (const auto& v : f.variables())
    if (!scalars.count(v)) {
      var = v;
      ++free;
    }
  if (free > 1) throw InapplicableCommand("factor needs a univariate modulus");
  Poly<D> p = univariate(d, f, var, scalars);
  FactoredPoly<D> fp = factor(p, seed);
  FactorSummary s;
  s.polynomial = format(p, var);
  s.domain = d.name();
  s.unit = d.format(fp.unit);
  for (const auto& [g, m] : fp.factors) s.factors.emplace_back(format(g, var), m);
  s.reexpands = fp.expand(d) == p;
  return s;
}

FactorSummary factor_case(const CaseDescription& c, std::uint64_t seed) {
  auto f = case_modulus(c);
  if (!f) throw InapplicableCommand("factor needs a quotient_poly algebra");
  if (c.base.kind == "Q") return factor_summary(RationalField{}, *f, {}, seed);
  if (c.base.kind == "Fp") return factor_summary(PrimeField(c.base.p), *f, {}, seed);
  if (c.base.kind == "FpRational") {
    FunctionField K(c.base.p, c.base.vars);
    std::map<std::string, RationalFunction> s;
    for (std::size_t i = 0; i < c.base.vars.size(); ++i) s[c.base.vars[i]] = K.variable(i);
    return factor_summary(K, *f, s, seed);
  }
  throw InapplicableCommand("factor is not available over " + c.base.kind);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << text;
    if (!out) throw ValidationError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace

FutilityReport decide(const BuiltAlgebra& algebra, const CommandOptions& o) {
  return std::visit(
      Overloaded{
          [&](const StructAlgebra<RationalField>& A) {
            return A.is_commutative() ? decide_infinite_field(A, o.seed) : decide_noncommutative(A, o.seed);
          },
          [&](const StructAlgebra<PrimeField>& A) {
            return A.is_commutative() ? decide_finite_base(A, o.budget) : decide_noncommutative(A, o.budget);
          },
          [&](const StructAlgebra<FunctionField>& A) {
            return A.is_commutative() ? decide_field_extension(A) : decide_noncommutative(A);
          },
          [&](const ZPresentation& P) {
            if (!P.is_commutative()) return decide_noncommutative(P);
            return module_structure(P).free_rank == 0 ? decide_finite_base(P) : decide_integer_algebra(P);
          },
          [&](const LocalizedZ& L) { return decide_integer_algebra(L); },
          [&](const RelativeAlgebra<RationalField>& RA) { return decide_local_artinian(RA, o.seed); }},
      algebra);
}

ReportDocument run_command(const std::string& cmd, const CaseDescription& c, const CommandOptions& o) {
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.case_id = c.id;
  doc.command = cmd;
  doc.seed = o.seed;
  if (cmd == "factor") {
    doc.factorization = factor_case(c, o.seed);
  } else {
    BuiltAlgebra b = build_algebra(c);
    if (cmd == "decide") {
      doc.report = decide(b, o);
    } else if (cmd == "enumerate") {
      auto* A = std::get_if<StructAlgebra<PrimeField>>(&b);
      if (!A) throw InapplicableCommand("enumerate needs a case over F_p");
      doc.enumeration = enumerate(*A, o.budget, true);
    } else if (cmd == "sample") {
      doc.sampling = sample(c, b, o, true);
      if (!doc.sampling) throw InapplicableCommand("sample needs a case over Q, Z, Z/n or a local artinian base");
    } else if (cmd == "oracle-compare") {
      doc.report = decide(b, o);
      doc.oracle = oracle(c, b, *doc.report, o);
    } else {
      throw InapplicableCommand("unknown command '" + cmd + "'");
    }
  }
  if (o.timing)
    doc.elapsed_us = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count());
  return doc;
}

std::vector<std::string> check_asserts(const CaseDescription& c, const ReportDocument& doc) {
  std::vector<std::string> out;
  if (c.asserts.verdict) {
    if (!doc.report)
      out.push_back("no verdict to compare with " + *c.asserts.verdict);
    else if (to_string(doc.report->verdict) != *c.asserts.verdict)
      out.push_back("verdict " + to_string(doc.report->verdict) + ", expected " + *c.asserts.verdict);
  }
  if (c.asserts.theorem && doc.report && doc.report->theorem != *c.asserts.theorem)
    out.push_back("criterion " + doc.report->theorem + ", expected " + *c.asserts.theorem);
  if (c.asserts.count) {
    std::optional<std::uint64_t> got;
    if (doc.enumeration) got = doc.enumeration->count;
    if (doc.oracle && doc.oracle->enumeration) got = doc.oracle->enumeration->count;
    if (!got && doc.report) got = doc.report->certificate.count;
    if (!got)
      out.push_back("no count to compare with " + std::to_string(*c.asserts.count));
    else if (*got != *c.asserts.count)
      out.push_back("count " + std::to_string(*got) + ", expected " + std::to_string(*c.asserts.count));
  }
  return out;
}

BatchResult run_batch(const std::string& root, const CommandOptions& options, bool update) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(root)) throw ValidationError("corpus directory " + root + " does not exist");
  std::vector<fs::path> cases;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file() && e.path().extension() == ".case") cases.push_back(e.path());
  std::sort(cases.begin(), cases.end());
  CommandOptions o = options;
  o.timing = false;
  BatchResult result;
  for (const auto& path : cases) {
    BatchEntry entry{fs::relative(path, root).string(), "ok", ""};
    try {
      CaseDescription c = load_case(path.string());
      ReportDocument doc = run_command("oracle-compare", c, o);
      std::string text = serialize_report(doc);
      fs::path expected = path;
      expected.replace_extension(".expected");
      std::vector<std::string> problems = check_asserts(c, doc);
      if (update) {
        write_atomically(expected, text);
        entry.status = "updated";
      } else if (!fs::exists(expected)) {
        problems.push_back("missing " + expected.filename().string());
      } else if (read_file(expected) != text) {
        problems.push_back("report differs from " + expected.filename().string());
      }
      if (!problems.empty()) {
        entry.status = "mismatch";
        for (const auto& p : problems) entry.detail += (entry.detail.empty() ? "" : "; ") + p;
        result.failure = true;
      } else if (!doc.oracle->agreement) {
        entry.status = "discrepancy";
        entry.detail = doc.oracle->detail;
        result.discrepancy = true;
      }
    } catch (const std::exception& e) {
      entry.status = "error";
      entry.detail = e.what();
      result.failure = true;
    }
    result.entries.push_back(std::move(entry));
  }
  return result;
}

}  // namespace futile
