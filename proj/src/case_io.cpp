#include "futile/case_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "futile/deciders.hpp"
#include "futile/errors.hpp"

namespace futile {

using Json = nlohmann::ordered_json;

namespace {

// ---- JSON reading ------------------------------------------------------------

[[noreturn]] void invalid(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

void check_keys(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) invalid(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) invalid(path, "unknown field '" + it.key() + "'");
  }
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) invalid(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) invalid(path, "expected a string");
  return j.get<std::string>();
}

// Exact scalars are decimal strings; plain JSON integers are accepted too.
std::string read_scalar(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  invalid(path, "expected an exact number written as a string");
}

std::uint64_t read_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    invalid(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::string> read_scalar_list(const Json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_scalar(j[i], index(path, i)));
  return out;
}

std::vector<std::vector<std::string>> read_scalar_matrix(const Json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_scalar_list(j[i], index(path, i)));
  return out;
}

AlgebraDesc read_algebra(const Json& j, const std::string& path);

std::vector<AlgebraDesc> read_algebra_list(const Json& j, const std::string& path) {
  if (!j.is_array()) invalid(path, "expected an array");
  std::vector<AlgebraDesc> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_algebra(j[i], index(path, i)));
  return out;
}

AlgebraDesc read_algebra(const Json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  AlgebraDesc a;
  a.kind = read_string(field(j, "kind", path), join(path, "kind"));
  const std::string& k = a.kind;
  auto p = [&](const char* key) { return join(path, key); };
  if (k == "structure_constants") {
    check_keys(j, path, {"kind", "dim", "unit", "table", "characteristic", "embedding"});
    a.dim = read_uint(field(j, "dim", path), p("dim"));
    a.unit = read_scalar_list(field(j, "unit", path), p("unit"));
    const Json& t = field(j, "table", path);
    if (!t.is_array()) invalid(p("table"), "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) a.table.push_back(read_scalar_matrix(t[i], index(p("table"), i)));
  } else if (k == "quotient_poly") {
    check_keys(j, path, {"kind", "modulus", "characteristic"});
    a.modulus = read_string(field(j, "modulus", path), p("modulus"));
  } else if (k == "tower") {
    check_keys(j, path, {"kind", "levels", "characteristic"});
    const Json& l = field(j, "levels", path);
    if (!l.is_array()) invalid(p("levels"), "expected an array");
    for (std::size_t i = 0; i < l.size(); ++i) {
      std::string lp = index(p("levels"), i);
      check_keys(l[i], lp, {"var", "modulus"});
      a.levels.emplace_back(read_string(field(l[i], "var", lp), join(lp, "var")),
                            read_string(field(l[i], "modulus", lp), join(lp, "modulus")));
    }
  } else if (k == "product") {
    check_keys(j, path, {"kind", "factors", "characteristic"});
    a.factors = read_algebra_list(field(j, "factors", path), p("factors"));
  } else if (k == "matrix_algebra") {
    check_keys(j, path, {"kind", "size", "characteristic"});
    a.size = read_uint(field(j, "size", path), p("size"));
  } else if (k == "monomial") {
    check_keys(j, path, {"kind", "vars", "basis", "characteristic"});
    const Json& v = field(j, "vars", path);
    if (!v.is_array()) invalid(p("vars"), "expected an array");
    for (std::size_t i = 0; i < v.size(); ++i) a.vars.push_back(read_string(v[i], index(p("vars"), i)));
    const Json& b = field(j, "basis", path);
    if (!b.is_array()) invalid(p("basis"), "expected an array");
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::string bp = index(p("basis"), i);
      if (!b[i].is_array()) invalid(bp, "expected an exponent list");
      std::vector<unsigned> e;
      for (std::size_t m = 0; m < b[i].size(); ++m) e.push_back(static_cast<unsigned>(read_uint(b[i][m], index(bp, m))));
      a.basis.push_back(std::move(e));
    }
  } else if (k == "z_presentation") {
    check_keys(j, path, {"kind", "generators", "relations", "table", "unit", "characteristic"});
    a.generators = read_uint(field(j, "generators", path), p("generators"));
    if (j.contains("relations")) a.relations = read_scalar_matrix(j["relations"], p("relations"));
    a.unit = read_scalar_list(field(j, "unit", path), p("unit"));
    const Json& t = field(j, "table", path);
    if (!t.is_array()) invalid(p("table"), "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) a.table.push_back(read_scalar_matrix(t[i], index(p("table"), i)));
  } else if (k == "localized") {
    check_keys(j, path, {"kind", "invert", "finite_part"});
    a.invert = read_scalar(field(j, "invert", path), p("invert"));
    if (j.contains("finite_part")) a.finite_part.push_back(read_algebra(j["finite_part"], p("finite_part")));
  } else {
    invalid(join(path, "kind"), "unknown algebra kind '" + k + "'");
  }
  if (j.contains("characteristic")) a.characteristic = read_scalar(j["characteristic"], p("characteristic"));
  if (j.contains("embedding")) a.embedding = read_scalar_matrix(j["embedding"], p("embedding"));
  return a;
}

BaseDesc read_base(const Json& j, const std::string& path) {
  if (!j.is_object()) invalid(path, "expected an object");
  BaseDesc b;
  b.kind = read_string(field(j, "kind", path), join(path, "kind"));
  if (b.kind == "Q" || b.kind == "Z") {
    check_keys(j, path, {"kind"});
  } else if (b.kind == "Fp") {
    check_keys(j, path, {"kind", "p"});
    b.p = read_uint(field(j, "p", path), join(path, "p"));
  } else if (b.kind == "Zmod") {
    check_keys(j, path, {"kind", "n"});
    b.n = read_scalar(field(j, "n", path), join(path, "n"));
  } else if (b.kind == "FpRational") {
    check_keys(j, path, {"kind", "p", "vars"});
    b.p = read_uint(field(j, "p", path), join(path, "p"));
    const Json& v = field(j, "vars", path);
    if (!v.is_array()) invalid(join(path, "vars"), "expected an array");
    for (std::size_t i = 0; i < v.size(); ++i) b.vars.push_back(read_string(v[i], index(join(path, "vars"), i)));
  } else if (b.kind == "LocalArtinian") {
    check_keys(j, path, {"kind", "ground", "algebra", "max_ideal"});
    LocalBaseDesc l;
    if (j.contains("ground")) l.ground = read_string(j["ground"], join(path, "ground"));
    l.algebra = read_algebra(field(j, "algebra", path), join(path, "algebra"));
    if (j.contains("max_ideal")) l.max_ideal = read_scalar_matrix(j["max_ideal"], join(path, "max_ideal"));
    b.local = std::move(l);
  } else {
    invalid(join(path, "kind"), "unknown base kind '" + b.kind + "'");
  }
  return b;
}

// ---- JSON writing ------------------------------------------------------------

Json write_algebra(const AlgebraDesc& a) {
  Json j;
  j["kind"] = a.kind;
  const std::string& k = a.kind;
  if (k == "structure_constants") {
    j["dim"] = a.dim;
    j["unit"] = a.unit;
    j["table"] = a.table;
  } else if (k == "quotient_poly") {
    j["modulus"] = a.modulus;
  } else if (k == "tower") {
    Json l = Json::array();
    for (const auto& [var, mod] : a.levels) l.push_back(Json{{"var", var}, {"modulus", mod}});
    j["levels"] = l;
  } else if (k == "product") {
    Json f = Json::array();
    for (const auto& x : a.factors) f.push_back(write_algebra(x));
    j["factors"] = f;
  } else if (k == "matrix_algebra") {
    j["size"] = a.size;
  } else if (k == "monomial") {
    j["vars"] = a.vars;
    j["basis"] = a.basis;
  } else if (k == "z_presentation") {
    j["generators"] = a.generators;
    j["relations"] = a.relations;
    j["table"] = a.table;
    j["unit"] = a.unit;
  } else if (k == "localized") {
    j["invert"] = a.invert;
    if (!a.finite_part.empty()) j["finite_part"] = write_algebra(a.finite_part[0]);
  }
  if (a.characteristic) j["characteristic"] = *a.characteristic;
  if (!a.embedding.empty()) j["embedding"] = a.embedding;
  return j;
}

Json write_base(const BaseDesc& b) {
  Json j;
  j["kind"] = b.kind;
  if (b.kind == "Fp" || b.kind == "FpRational") j["p"] = b.p;
  if (b.kind == "Zmod") j["n"] = b.n;
  if (b.kind == "FpRational") j["vars"] = b.vars;
  if (b.local) {
    j["ground"] = b.local->ground;
    j["algebra"] = write_algebra(b.local->algebra);
    if (!b.local->max_ideal.empty()) j["max_ideal"] = b.local->max_ideal;
  }
  return j;
}

// ---- building ----------------------------------------------------------------

template <class D>
using Scalars = std::map<std::string, typename D::Elem>;
using Word = std::map<std::string, unsigned>;

template <class D>
struct Built {
  StructAlgebra<D> A;
  std::map<std::string, Vec<D>> env;  // named generators
  std::optional<std::vector<Word>> words;  // basis element i as a product of generators
};

ParsedPoly parse_at(const std::string& text, const std::string& path) {
  try {
    return parse_polynomial(text);
  } catch (const ParseError& e) {
    std::string what = e.what();
    what = what.substr(0, what.rfind(" at "));
    throw ParseError(path + ": " + what, e.line(), e.col());
  }
}

template <class D>
typename D::Elem scalar_of(const D& d, const Rational& q, const std::string& path) {
  try {
    return d.from_rational(q);
  } catch (const NotInvertible&) {
    invalid(path, "denominator vanishes in " + d.name());
  }
}

template <class D>
Vec<D> eval_in(const ParsedPoly& f, const StructAlgebra<D>& A, const std::map<std::string, Vec<D>>& env,
               const Scalars<D>& scalars, const std::string& path) {
  const D& d = A.domain();
  Vec<D> out = A.zero();
  for (const auto& [mono, c] : f.terms) {
    typename D::Elem s = scalar_of(d, c, path);
    Vec<D> term = A.unit();
    for (const auto& [var, e] : mono) {
      if (auto it = scalars.find(var); it != scalars.end()) {
        for (unsigned k = 0; k < e; ++k) s = s * it->second;
      } else if (auto jt = env.find(var); jt != env.end()) {
        term = A.multiply(term, A.power(jt->second, e));
      } else {
        invalid(path, "unknown variable '" + var + "'");
      }
    }
    out = add<D>(out, scale<D>(s, term));
  }
  return out;
}

template <class D>
typename D::Elem eval_scalar(const D& d, const std::string& text, const Scalars<D>& scalars, const std::string& path) {
  StructAlgebra<D> k(d, 1, {{{d.one()}}}, {d.one()}, true);
  return eval_in<D>(parse_at(text, path), k, {}, scalars, path)[0];
}

template <class D>
Vec<D> eval_vector(const D& d, const std::vector<std::string>& v, std::size_t n, const Scalars<D>& scalars,
                   const std::string& path) {
  if (v.size() != n) invalid(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  Vec<D> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(eval_scalar(d, v[i], scalars, index(path, i)));
  return out;
}

template <class D>
Built<D> ground(const D& d) {
  return {StructAlgebra<D>(d, 1, {{{d.one()}}}, {d.one()}, true), {}, std::vector<Word>{Word{}}};
}

template <class D>
Built<D> extend_level(Built<D> b, const std::string& var, const std::string& modulus, const Scalars<D>& scalars,
                      const std::string& path) {
  if (b.env.count(var) || scalars.count(var)) invalid(path, "variable '" + var + "' is already in use");
  ParsedPoly f = parse_at(modulus, join(path, "modulus"));
  unsigned deg = f.degree_in(var);
  if (deg == 0) invalid(join(path, "modulus"), "modulus has degree 0 in '" + var + "'");
  std::vector<Vec<D>> coeffs;
  for (unsigned k = 0; k <= deg; ++k) coeffs.push_back(eval_in(f.coefficient(var, k), b.A, b.env, scalars, path));
  StructAlgebra<D> next = extend_by_polynomial(b.A, coeffs);
  const std::size_t n = b.A.dim();
  for (auto& [name, v] : b.env) v.resize(next.dim(), b.A.domain().zero());
  Vec<D> y = next.zero();
  if (deg == 1) {
    // y = -c0 / c1, already an element of the previous level.
    auto sol = solve(b.A.domain(), b.A.left_matrix(coeffs[1]), sub<D>(b.A.zero(), coeffs[0]));
    if (!sol) invalid(join(path, "modulus"), "leading coefficient is not a unit");
    y = *sol;
  } else {
    for (std::size_t i = 0; i < n; ++i) y[n + i] = b.A.unit()[i];
  }
  b.env[var] = y;
  if (b.words) {
    std::vector<Word> w;
    for (unsigned k = 0; k < deg; ++k)
      for (const Word& old : *b.words) {
        Word x = old;
        if (k > 0) x[var] = k;
        w.push_back(std::move(x));
      }
    b.words = std::move(w);
  }
  b.A = std::move(next);
  return b;
}

std::string single_new_variable(const ParsedPoly& f, const std::set<std::string>& used, const std::string& path) {
  std::string found;
  for (const auto& v : f.variables()) {
    if (used.count(v)) continue;
    if (!found.empty()) invalid(path, "modulus has more than one free variable");
    found = v;
  }
  return found.empty() ? "x" : found;
}

template <class D>
Built<D> build_over(const AlgebraDesc& a, const Built<D>& base, const Scalars<D>& scalars, const std::string& path);

template <class D>
StructAlgebra<D> structure_constants(const D& d, const AlgebraDesc& a, const Scalars<D>& scalars,
                                     const std::string& path) {
  if (a.table.size() != a.dim) invalid(join(path, "table"), "expected " + std::to_string(a.dim) + " rows");
  typename StructAlgebra<D>::Table t(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    std::string rp = index(join(path, "table"), i);
    if (a.table[i].size() != a.dim) invalid(rp, "expected " + std::to_string(a.dim) + " products");
    for (std::size_t j = 0; j < a.dim; ++j) t[i].push_back(eval_vector(d, a.table[i][j], a.dim, scalars, index(rp, j)));
  }
  Vec<D> unit = eval_vector(d, a.unit, a.dim, scalars, join(path, "unit"));
  return StructAlgebra<D>(d, a.dim, std::move(t), std::move(unit));
}

template <class D>
Built<D> build_over(const AlgebraDesc& a, const Built<D>& base, const Scalars<D>& scalars, const std::string& path) {
  const D& d = base.A.domain();
  const bool over_field = base.A.dim() == 1;
  try {
    if (a.kind == "quotient_poly") {
      std::set<std::string> used;
      for (const auto& [v, _] : base.env) used.insert(v);
      for (const auto& [v, _] : scalars) used.insert(v);
      ParsedPoly f = parse_at(a.modulus, join(path, "modulus"));
      return extend_level(base, single_new_variable(f, used, join(path, "modulus")), a.modulus, scalars, path);
    }
    if (a.kind == "tower") {
      if (a.levels.empty()) invalid(join(path, "levels"), "a tower needs at least one level");
      Built<D> b = base;
      for (std::size_t i = 0; i < a.levels.size(); ++i)
        b = extend_level(b, a.levels[i].first, a.levels[i].second, scalars, index(join(path, "levels"), i));
      return b;
    }
    if (!over_field) invalid(join(path, "kind"), "'" + a.kind + "' cannot be built over a base algebra");
    if (a.kind == "structure_constants") return {structure_constants(d, a, scalars, path), {}, std::nullopt};
    if (a.kind == "matrix_algebra") {
      if (a.size == 0) invalid(join(path, "size"), "matrix size must be positive");
      return {matrix_algebra(d, a.size), {}, std::nullopt};
    }
    if (a.kind == "monomial") {
      for (std::size_t i = 0; i < a.basis.size(); ++i)
        if (a.basis[i].size() != a.vars.size())
          invalid(index(join(path, "basis"), i), "expected " + std::to_string(a.vars.size()) + " exponents");
      Built<D> b{monomial_algebra(d, a.basis), {}, std::vector<Word>{}};
      for (std::size_t v = 0; v < a.vars.size(); ++v) {
        std::vector<unsigned> e(a.vars.size(), 0);
        e[v] = 1;
        Vec<D> x = b.A.zero();
        for (std::size_t i = 0; i < a.basis.size(); ++i)
          if (a.basis[i] == e) x = b.A.basis(i);
        b.env[a.vars[v]] = x;
      }
      for (const auto& m : a.basis) {
        Word w;
        for (std::size_t v = 0; v < m.size(); ++v)
          if (m[v]) w[a.vars[v]] = m[v];
        b.words->push_back(std::move(w));
      }
      return b;
    }
    if (a.kind == "product") {
      if (a.factors.empty()) invalid(join(path, "factors"), "a product needs at least one factor");
      std::vector<StructAlgebra<D>> fs;
      for (std::size_t i = 0; i < a.factors.size(); ++i)
        fs.push_back(build_over(a.factors[i], base, scalars, index(join(path, "factors"), i)).A);
      return {product_algebra(fs), {}, std::nullopt};
    }
    invalid(join(path, "kind"), "'" + a.kind + "' needs an integer base");
  } catch (const ValidationError& e) {
    std::string w = e.what();
    if (w.rfind("algebra", 0) == 0 || w.rfind("base", 0) == 0) throw;
    invalid(path, w);
  }
}

// Integer structure constants of a Q-algebra, or MalformedPresentation.
ZPresentation to_presentation(const StructAlgebra<RationalField>& A, const std::string& path) {
  ZPresentation P;
  P.n = A.dim();
  P.relations = IntMatrix(0, P.n, Integer(0));
  auto integral = [&](const Rational& q) {
    if (q.get_den() != 1) invalid(path, "structure constants over Z must be integers");
    return Integer(q.get_num());
  };
  P.table.assign(P.n, std::vector<IntVector>(P.n));
  for (std::size_t i = 0; i < P.n; ++i)
    for (std::size_t j = 0; j < P.n; ++j)
      for (const auto& c : A.table()[i][j]) P.table[i][j].push_back(integral(c));
  for (const auto& c : A.unit()) P.unit.push_back(integral(c));
  return P;
}

Integer read_integer(const std::string& s, const std::string& path) {
  try {
    return parse_integer(s);
  } catch (const ValidationError& e) {
    invalid(path, e.what());
  }
}

IntVector read_int_vector(const std::vector<std::string>& v, std::size_t n, const std::string& path) {
  if (v.size() != n) invalid(path, "expected " + std::to_string(n) + " entries, got " + std::to_string(v.size()));
  IntVector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(read_integer(v[i], index(path, i)));
  return out;
}

void add_characteristic(ZPresentation& P, const Integer& c) {
  for (std::size_t i = 0; i < P.n; ++i) {
    IntVector r(P.n, Integer(0));
    r[i] = c;
    P.relations.append_row(r);
  }
}

ZPresentation build_z(const AlgebraDesc& a, const std::string& path) {
  ZPresentation P;
  if (a.kind == "z_presentation") {
    P.n = a.generators;
    P.relations = IntMatrix(0, P.n, Integer(0));
    for (std::size_t i = 0; i < a.relations.size(); ++i)
      P.relations.append_row(read_int_vector(a.relations[i], P.n, index(join(path, "relations"), i)));
    if (a.table.size() != P.n) invalid(join(path, "table"), "expected " + std::to_string(P.n) + " rows");
    P.table.resize(P.n);
    for (std::size_t i = 0; i < P.n; ++i) {
      std::string rp = index(join(path, "table"), i);
      if (a.table[i].size() != P.n) invalid(rp, "expected " + std::to_string(P.n) + " products");
      for (std::size_t j = 0; j < P.n; ++j) P.table[i].push_back(read_int_vector(a.table[i][j], P.n, index(rp, j)));
    }
    P.unit = read_int_vector(a.unit, P.n, join(path, "unit"));
  } else if (a.kind == "product") {
    if (a.factors.empty()) invalid(join(path, "factors"), "a product needs at least one factor");
    std::vector<ZPresentation> fs;
    for (std::size_t i = 0; i < a.factors.size(); ++i) fs.push_back(build_z(a.factors[i], index(join(path, "factors"), i)));
    P = product_presentation(fs);
  } else if (a.kind == "localized") {
    invalid(join(path, "kind"), "a localized algebra cannot be nested");
  } else {
    RationalField Q;
    P = to_presentation(build_over(a, ground(Q), {}, path).A, path);
  }
  if (a.characteristic) {
    Integer c = read_integer(*a.characteristic, join(path, "characteristic"));
    if (c <= 0) invalid(join(path, "characteristic"), "must be positive");
    add_characteristic(P, c);
  }
  try {
    P.validate();
  } catch (const MalformedPresentation& e) {
    invalid(path, e.what());
  }
  return P;
}

RelativeAlgebra<RationalField> build_relative(const LocalBaseDesc& l, const AlgebraDesc& a) {
  RationalField Q;
  if (l.ground != "Q") invalid("base.ground", "local artinian bases are supported over Q only");
  Built<RationalField> R = build_over(l.algebra, ground(Q), {}, "base.algebra");
  Subspace<RationalField> m(Q, R.A.dim());
  if (l.max_ideal.empty()) {
    m = nilradical(R.A);
  } else {
    std::vector<Vec<RationalField>> gens;
    for (std::size_t i = 0; i < l.max_ideal.size(); ++i)
      gens.push_back(eval_vector(Q, l.max_ideal[i], R.A.dim(), {}, index("base.max_ideal", i)));
    m = Subspace<RationalField>::span(Q, R.A.dim(), gens);
  }

  auto one = [&](const AlgebraDesc& x, const std::string& path) -> std::pair<StructAlgebra<RationalField>, Mat<RationalField>> {
    Mat<RationalField> emb(0, 0, Q.zero());
    if (x.kind == "tower" || x.kind == "quotient_poly") {
      Built<RationalField> A = build_over(x, R, {}, path);
      emb = Mat<RationalField>(A.A.dim(), R.A.dim(), Q.zero());
      for (std::size_t i = 0; i < R.A.dim(); ++i) emb(i, i) = Q.one();
      return {A.A, emb};
    }
    if (x.kind == "monomial") {
      if (!R.words) invalid("base.algebra", "a monomial ambient algebra needs a base given by generators");
      Built<RationalField> A = build_over(x, ground(Q), {}, path);
      emb = Mat<RationalField>(A.A.dim(), R.A.dim(), Q.zero());
      for (std::size_t i = 0; i < R.A.dim(); ++i) {
        Vec<RationalField> img = A.A.unit();
        for (const auto& [var, e] : (*R.words)[i]) {
          auto it = A.env.find(var);
          if (it == A.env.end()) invalid(join(path, "vars"), "base variable '" + var + "' is missing");
          img = A.A.multiply(img, A.A.power(it->second, e));
        }
        for (std::size_t r = 0; r < A.A.dim(); ++r) emb(r, i) = img[r];
      }
      return {A.A, emb};
    }
    if (x.kind == "structure_constants") {
      StructAlgebra<RationalField> A = structure_constants(Q, x, {}, path);
      if (x.embedding.size() != R.A.dim())
        invalid(join(path, "embedding"), "expected the images of " + std::to_string(R.A.dim()) + " base elements");
      emb = Mat<RationalField>(A.dim(), R.A.dim(), Q.zero());
      for (std::size_t i = 0; i < R.A.dim(); ++i) {
        Vec<RationalField> img = eval_vector(Q, x.embedding[i], A.dim(), {}, index(join(path, "embedding"), i));
        for (std::size_t r = 0; r < A.dim(); ++r) emb(r, i) = img[r];
      }
      return {A, emb};
    }
    invalid(join(path, "kind"), "'" + x.kind + "' is not supported over a local artinian base");
  };

  std::pair<StructAlgebra<RationalField>, Mat<RationalField>> amb_emb = [&]() {
    if (a.kind != "product") return one(a, "algebra");
    if (a.factors.empty()) invalid("algebra.factors", "a product needs at least one factor");
    std::vector<StructAlgebra<RationalField>> fs;
    std::vector<Mat<RationalField>> es;
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      auto [f, e] = one(a.factors[i], index("algebra.factors", i));
      fs.push_back(f);
      es.push_back(e);
    }
    StructAlgebra<RationalField> P = product_algebra(fs);
    Mat<RationalField> E(P.dim(), R.A.dim(), Q.zero());
    std::size_t off = 0;
    for (const auto& e : es) {
      for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t c = 0; c < e.cols(); ++c) E(off + r, c) = e(r, c);
      off += e.rows();
    }
    return std::pair{P, E};
  }();
  RelativeAlgebra<RationalField> RA{R.A, m, amb_emb.first, amb_emb.second};
  RA.validate();
  return RA;
}

}  // namespace

CaseDescription parse_case(const std::string& text) {
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
    std::string what = e.what();
    throw ParseError("malformed case file: " + what.substr(what.find(':') + 2), line, col);
  }
  check_keys(j, "case", {"format_version", "id", "anchor", "base", "algebra", "asserts", "sampling"});
  CaseDescription c;
  std::uint64_t v = read_uint(field(j, "format_version", "case"), "format_version");
  if (v != kCaseFormatVersion) invalid("format_version", "unsupported version " + std::to_string(v));
  c.id = read_string(field(j, "id", "case"), "id");
  if (j.contains("anchor")) c.anchor = read_string(j["anchor"], "anchor");
  c.base = read_base(field(j, "base", "case"), "base");
  c.algebra = read_algebra(field(j, "algebra", "case"), "algebra");
  if (j.contains("asserts")) {
    const Json& a = j["asserts"];
    check_keys(a, "asserts", {"verdict", "theorem", "count"});
    if (a.contains("verdict")) {
      c.asserts.verdict = read_string(a["verdict"], "asserts.verdict");
      parse_verdict(*c.asserts.verdict);
    }
    if (a.contains("theorem")) c.asserts.theorem = read_string(a["theorem"], "asserts.theorem");
    if (a.contains("count")) c.asserts.count = read_uint(a["count"], "asserts.count");
  }
  if (j.contains("sampling")) {
    const Json& s = j["sampling"];
    check_keys(s, "sampling", {"trials", "bound", "threshold"});
    if (s.contains("trials")) c.sampling.trials = read_uint(s["trials"], "sampling.trials");
    if (s.contains("bound")) c.sampling.bound = static_cast<long long>(read_uint(s["bound"], "sampling.bound"));
    if (s.contains("threshold")) c.sampling.threshold = read_uint(s["threshold"], "sampling.threshold");
  }
  build_algebra(c);
  return c;
}

CaseDescription load_case(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open case file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_case(ss.str());
}

std::string serialize_case(const CaseDescription& c) {
  Json j;
  j["format_version"] = c.format_version;
  j["id"] = c.id;
  if (!c.anchor.empty()) j["anchor"] = c.anchor;
  j["base"] = write_base(c.base);
  j["algebra"] = write_algebra(c.algebra);
  Json a = Json::object();
  if (c.asserts.verdict) a["verdict"] = *c.asserts.verdict;
  if (c.asserts.theorem) a["theorem"] = *c.asserts.theorem;
  if (c.asserts.count) a["count"] = *c.asserts.count;
  if (!a.empty()) j["asserts"] = a;
  Json s = Json::object();
  if (c.sampling.trials) s["trials"] = *c.sampling.trials;
  if (c.sampling.bound) s["bound"] = *c.sampling.bound;
  if (c.sampling.threshold) s["threshold"] = *c.sampling.threshold;
  if (!s.empty()) j["sampling"] = s;
  return j.dump(2) + "\n";
}

BuiltAlgebra build_algebra(const CaseDescription& c) {
  const BaseDesc& b = c.base;
  if (b.kind == "Q") {
    RationalField Q;
    return build_over(c.algebra, ground(Q), {}, "algebra").A;
  }
  if (b.kind == "Fp") {
    if (!is_prime(b.p) || b.p >= (std::uint64_t{1} << 32)) invalid("base.p", "expected a prime below 2^32");
    PrimeField F(b.p);
    return build_over(c.algebra, ground(F), {}, "algebra").A;
  }
  if (b.kind == "FpRational") {
    if (!is_prime(b.p) || b.p >= (std::uint64_t{1} << 32)) invalid("base.p", "expected a prime below 2^32");
    if (b.vars.empty() || b.vars.size() > 2) invalid("base.vars", "expected one or two variables");
    FunctionField K(b.p, b.vars);
    Scalars<FunctionField> s;
    for (std::size_t i = 0; i < b.vars.size(); ++i) s[b.vars[i]] = K.variable(i);
    return build_over(c.algebra, ground(K), s, "algebra").A;
  }
  if (b.kind == "Z") {
    if (c.algebra.kind == "localized") {
      LocalizedZ L;
      L.invert = read_integer(c.algebra.invert, "algebra.invert");
      if (L.invert < 1) invalid("algebra.invert", "must be positive");
      if (!c.algebra.finite_part.empty()) {
        ZPresentation F = build_z(c.algebra.finite_part[0], "algebra.finite_part");
        if (module_structure(F).free_rank != 0) invalid("algebra.finite_part", "the finite part has positive rank");
        L.finite_part = F;
      }
      return L;
    }
    return build_z(c.algebra, "algebra");
  }
  if (b.kind == "Zmod") {
    Integer n = read_integer(b.n, "base.n");
    if (n < 2) invalid("base.n", "expected n >= 2");
    ZPresentation P = build_z(c.algebra, "algebra");
    add_characteristic(P, n);
    P.validate();
    return P;
  }
  if (b.kind == "LocalArtinian") return build_relative(*b.local, c.algebra);
  invalid("base.kind", "unknown base kind '" + b.kind + "'");
}

std::optional<ParsedPoly> case_modulus(const CaseDescription& c) {
  if (c.algebra.kind != "quotient_poly") return std::nullopt;
  return parse_at(c.algebra.modulus, "algebra.modulus");
}

}  // namespace futile
