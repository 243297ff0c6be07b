#include "futile/deciders.hpp"

#include <random>
#include <stdexcept>
#include <type_traits>

#include "futile/factor.hpp"

namespace futile {

std::string to_string(Verdict v) { return v == Verdict::Futile ? "Futile" : "NotFutile"; }

Verdict parse_verdict(const std::string& s) {
  if (s == "Futile") return Verdict::Futile;
  if (s == "NotFutile") return Verdict::NotFutile;
  throw ValidationError("unknown verdict '" + s + "'");
}

namespace {

std::string bool_str(bool b) { return b ? "true" : "false"; }

template <class D>
std::vector<std::string> format_vector(const D& d, const Vec<D>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(d.format(x));
  return out;
}

RationalField::Elem random_scalar(const RationalField& d, std::mt19937_64& rng, long long bound) {
  return d.from_int(std::uniform_int_distribution<long long>(-bound, bound)(rng));
}

FunctionField::Elem random_scalar(const FunctionField& d, std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> u(-bound, bound);
  FunctionField::Elem e = d.from_int(u(rng));
  for (std::size_t i = 0; i < d.vars().size(); ++i) e += d.from_int(u(rng)) * d.variable(i);
  return e;
}

template <class D>
void attach_factorization(GeneratorSearch<D>& g, const StructAlgebra<D>& A, std::uint64_t seed) {
  g.minimal = minimal_polynomial(A, *g.generator);
  if constexpr (!std::is_same_v<D, FunctionField>) g.factored = factor(*g.minimal, seed);
}

}  // namespace

template <class D>
GeneratorSearch<D> find_generator(const StructAlgebra<D>& A, const Subspace<D>& base_image, std::uint64_t seed,
                                  std::uint64_t max_tries) {
  GeneratorSearch<D> g;
  const D& d = A.domain();
  auto generates = [&](const Vec<D>& a) { return subalgebra_generated(A, {a}, base_image).dim() == A.dim(); };
  if (A.dim() == 0 || generates(A.zero())) {
    g.generator = A.zero();
    attach_factorization(g, A, seed);
    return g;
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (generates(A.basis(i))) {
      g.generator = A.basis(i);
      attach_factorization(g, A, seed);
      return g;
    }
  if constexpr (std::is_same_v<D, PrimeField>) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (count > kDefaultEnumBudget / d.p()) throw BudgetExceeded("too many elements for an exhaustive generator search");
      count *= d.p();
    }
    for (std::uint64_t code = 0; code < count; ++code) {
      Vec<D> a;
      std::uint64_t c = code;
      for (std::size_t i = 0; i < A.dim(); ++i) {
        a.push_back(d.element(c % d.p()));
        c /= d.p();
      }
      if (generates(a)) {
        g.generator = a;
        attach_factorization(g, A, seed);
        return g;
      }
    }
    g.exhaustive = true;
    return g;
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < max_tries; ++t) {
      long long bound = 1 + static_cast<long long>(t / 16);
      Vec<D> a;
      for (std::size_t i = 0; i < A.dim(); ++i) a.push_back(random_scalar(d, rng, bound));
      if (generates(a)) {
        g.generator = a;
        attach_factorization(g, A, seed);
        return g;
      }
    }
    throw SearchBudgetExceeded("no generator found in " + std::to_string(max_tries) + " random tries");
  }
}

template GeneratorSearch<RationalField> find_generator(const StructAlgebra<RationalField>&,
                                                       const Subspace<RationalField>&, std::uint64_t, std::uint64_t);
template GeneratorSearch<PrimeField> find_generator(const StructAlgebra<PrimeField>&, const Subspace<PrimeField>&,
                                                    std::uint64_t, std::uint64_t);
template GeneratorSearch<FunctionField> find_generator(const StructAlgebra<FunctionField>&,
                                                       const Subspace<FunctionField>&, std::uint64_t, std::uint64_t);

namespace {

void finish(FutilityReport& r) {
  bool ok = true;
  for (const auto& c : r.certificate.conditions) ok = ok && c.holds;
  r.verdict = ok ? Verdict::Futile : Verdict::NotFutile;
}

std::string first_failure(const std::vector<Condition>& cs) {
  for (const auto& c : cs)
    if (!c.holds) return c.name + " = " + c.value;
  return "";
}

// The factorization shape of a futile monogenic algebra: every multiplicity is
// 1 except possibly one linear factor with multiplicity at most 3.
bool futile_shape(const FactoredPoly<RationalField>& f) {
  int repeated = 0;
  for (const auto& [g, n] : f.factors) {
    if (n == 1) continue;
    ++repeated;
    if (g.degree() != 1 || n > 3) return false;
  }
  return repeated <= 1;
}

void set_generator(Certificate& c, const RationalField& d, const GeneratorSearch<RationalField>& g) {
  c.generator = format_vector(d, *g.generator);
  c.minimal_polynomial = format(*g.minimal);
  for (const auto& [f, n] : g.factored->factors) c.factors.emplace_back(format(f), n);
}

}  // namespace

FutilityReport decide_infinite_field(const StructAlgebra<RationalField>& A, std::uint64_t seed) {
  FutilityReport r;
  r.theorem = tags::kInfiniteField;
  auto& conds = r.certificate.conditions;
  conds.push_back({"commutative", bool_str(A.is_commutative()), A.is_commutative()});
  if (!A.is_commutative()) {
    r.verdict = Verdict::NotFutile;
    r.certificate.kind = "violation";
    r.certificate.witness = "commutative = false";
    r.notes.push_back("futile algebras over an infinite field are commutative");
    return r;
  }
  std::vector<LocalFactor<RationalField>> factors = local_decomposition(A, seed);
  conds.push_back({"local factors", std::to_string(factors.size()), true});
  std::size_t nonreduced = 0;
  for (const auto& F : factors) {
    Subspace<RationalField> N = nilradical(F.algebra);
    if (N.dim() == 0) continue;
    ++nonreduced;
    std::size_t residue = F.algebra.dim() - N.dim();
    std::size_t cotangent = N.dim() - product_space(F.algebra, N, N).dim();
    std::string tag = " (factor of dimension " + std::to_string(F.algebra.dim()) + ")";
    conds.push_back({"residue degree" + tag, std::to_string(residue), residue == 1});
    conds.push_back({"dimension" + tag, std::to_string(F.algebra.dim()), F.algebra.dim() <= 3});
    conds.push_back({"dim m/m^2" + tag, std::to_string(cotangent), cotangent <= 1});
  }
  conds.push_back({"non-reduced local factors", std::to_string(nonreduced), nonreduced <= 1});
  finish(r);
  if (r.verdict == Verdict::NotFutile) {
    r.certificate.kind = "violation";
    r.certificate.witness = first_failure(conds);
    return r;
  }
  GeneratorSearch<RationalField> g = find_generator(A, A.unit_span(), seed);
  if (!futile_shape(*g.factored) || g.minimal->degree() != static_cast<long>(A.dim()))
    throw std::logic_error("generator certificate has the wrong shape");
  r.certificate.kind = "generator";
  set_generator(r.certificate, A.domain(), g);
  r.notes.push_back("reduced local factors are fields; in characteristic 0 they are primitive extensions");
  return r;
}

StructAlgebra<FunctionField> build_tower(const FunctionField& K,
                                         const std::vector<std::vector<Vec<FunctionField>>>& moduli) {
  StructAlgebra<FunctionField> L(K, 1, {{{K.one()}}}, {K.one()}, true);
  for (const auto& g : moduli) L = extend_by_polynomial(L, g);
  return L;
}

FutilityReport decide_field_extension(const StructAlgebra<FunctionField>& L) {
  const FunctionField& K = L.domain();
  // Partial field check: nonzero basis elements and pairwise sums must be units.
  auto check_unit = [&](const Vec<FunctionField>& a) {
    if (is_zero_vector<FunctionField>(a)) return;
    if (rank(K, L.left_matrix(a)) != L.dim()) {
      std::string w;
      for (const auto& s : format_vector(K, a)) w += (w.empty() ? "" : ", ") + s;
      throw NotAField("the tower has a zero divisor", "(" + w + ")");
    }
  };
  for (std::size_t i = 0; i < L.dim(); ++i) {
    check_unit(L.basis(i));
    for (std::size_t j = i + 1; j < L.dim(); ++j) check_unit(add<FunctionField>(L.basis(i), L.basis(j)));
  }
  FrobeniusChain chain = frobenius_chain(L);
  FutilityReport r;
  r.theorem = tags::kFieldExtension;
  r.certificate.kind = "frobenius-chain";
  r.certificate.chain = chain.dims;
  std::size_t p = K.characteristic();
  bool integral = chain.dims.size() < 2 || chain.dims[0] % chain.dims[1] == 0;
  std::size_t ratio = chain.ratio();
  auto& conds = r.certificate.conditions;
  conds.push_back({"[L:K]", std::to_string(L.dim()), true});
  conds.push_back({"[L:L^pK]", integral ? std::to_string(ratio) : "not an integer", integral && (ratio == 1 || ratio == p)});
  conds.push_back({"separable degree", std::to_string(chain.separable_dim()), true});
  finish(r);
  if (r.verdict == Verdict::NotFutile) r.certificate.witness = first_failure(conds);
  return r;
}

RelativeAlgebra<RationalField> over_ground_field(const StructAlgebra<RationalField>& A) {
  RationalField Q;
  StructAlgebra<RationalField> base(Q, 1, {{{Q.one()}}}, {Q.one()}, true);
  Mat<RationalField> emb(A.dim(), 1, Q.zero());
  emb.set_col(0, A.unit());
  return {base, Subspace<RationalField>(Q, 1), A, emb};
}

namespace {

Subspace<RationalField> image_of_max_ideal(const RelativeAlgebra<RationalField>& RA) {
  std::vector<Vec<RationalField>> img;
  for (const auto& x : RA.max_ideal.basis_vectors()) img.push_back(apply(RA.amb.domain(), RA.emb, x));
  return Subspace<RationalField>::span(RA.amb.domain(), RA.amb.dim(), img);
}

}  // namespace

UniserialResult uniserial_check(const RelativeAlgebra<RationalField>& RA) {
  RA.validate();
  const auto& A = RA.amb;
  Subspace<RationalField> R = RA.base_image();
  Subspace<RationalField> m = image_of_max_ideal(RA);
  Subspace<RationalField> m1 = product_space(A, m, A.whole());
  Subspace<RationalField> m2 = product_space(A, m, m1);
  Subspace<RationalField> m3 = product_space(A, m, m2);
  UniserialResult u;
  u.top = (m1 + R).dim() - (m2 + R).dim();
  u.second = (m2 + R).dim() - (m3 + R).dim();
  u.uniserial = u.top <= 1 && u.second <= 1;
  return u;
}

UniserialResult uniserial_check(const LinearModule& M) {
  const RationalField& d = M.base.domain();
  if (!M.base.is_commutative()) throw BaseNotLocalArtinian("base ring is not commutative");
  if (M.max_ideal.ambient() != M.base.dim() || M.max_ideal.dim() + 1 != M.base.dim())
    throw BaseNotLocalArtinian("residue field of the base is not the ground field");
  if (!is_two_sided_ideal(M.base, M.max_ideal)) throw BaseNotLocalArtinian("maximal ideal is not an ideal");
  for (const auto& x : M.max_ideal.basis_vectors())
    if (!is_nilpotent(M.base, x)) throw BaseNotLocalArtinian("maximal ideal contains a non-nilpotent element");
  if (M.action.size() != M.base.dim()) throw ValidationError("one action matrix per base basis element is required");
  for (const auto& a : M.action)
    if (a.rows() != M.dim || a.cols() != M.dim) throw ValidationError("action matrix has the wrong shape");
  auto act = [&](const Vec<RationalField>& r) {
    Mat<RationalField> out(M.dim, M.dim, d.zero());
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!is_zero(r[i]))
        for (std::size_t a = 0; a < M.dim; ++a)
          for (std::size_t b = 0; b < M.dim; ++b) out(a, b) += r[i] * M.action[i](a, b);
    return out;
  };
  auto times_m = [&](const Subspace<RationalField>& S) {
    std::vector<Vec<RationalField>> v;
    for (const auto& x : M.max_ideal.basis_vectors()) {
      Mat<RationalField> X = act(x);
      for (const auto& s : S.basis_vectors()) v.push_back(apply(d, X, s));
    }
    return Subspace<RationalField>::span(d, M.dim, v);
  };
  Subspace<RationalField> M0 = Subspace<RationalField>::full(d, M.dim);
  Subspace<RationalField> M1 = times_m(M0);
  Subspace<RationalField> M2 = times_m(M1);
  UniserialResult u;
  u.top = M0.dim() - M1.dim();
  u.second = M1.dim() - M2.dim();
  u.uniserial = u.top <= 1 && u.second <= 1;
  return u;
}

UniserialResult uniserial_check(const FiniteModule& M) {
  M.validate();
  auto log_p = [&](std::uint64_t big, std::uint64_t small) {
    std::size_t k = 0;
    for (std::uint64_t q = big / small; q > 1; q /= M.p) ++k;
    return k;
  };
  std::uint64_t s0 = M.size();
  std::uint64_t s1 = max_ideal_power_image(M, 1).size();
  std::uint64_t s2 = max_ideal_power_image(M, 2).size();
  UniserialResult u;
  u.top = log_p(s0, s1);
  u.second = log_p(s1, s2);
  u.uniserial = u.top <= 1 && u.second <= 1;
  return u;
}

FutilityReport decide_local_artinian(const RelativeAlgebra<RationalField>& RA, std::uint64_t seed) {
  RA.validate();
  const auto& A = RA.amb;
  FutilityReport r;
  r.theorem = tags::kLocalArtinian;
  r.certificate.kind = "condition-table";
  auto& conds = r.certificate.conditions;
  conds.push_back({"commutative", bool_str(A.is_commutative()), A.is_commutative()});
  if (!A.is_commutative()) {
    finish(r);
    r.certificate.witness = "commutative = false";
    return r;
  }
  Subspace<RationalField> R = RA.base_image();
  Subspace<RationalField> m = image_of_max_ideal(RA);
  Subspace<RationalField> mA = product_space(A, m, A.whole());

  FutilityReport top = decide_infinite_field(quotient_algebra(A, mA).algebra, seed);
  conds.push_back({"A/mA futile", to_string(top.verdict), top.verdict == Verdict::Futile});

  Subspace<RationalField> N = nilradical(A);
  Subspace<RationalField> T = R + N;
  Subspace<RationalField> mT = product_space(A, m, T);
  Restriction<RationalField> TA = restrict_to(A, T);
  std::vector<Vec<RationalField>> mT_coords;
  for (const auto& v : mT.basis_vectors()) mT_coords.push_back(T.coordinates(v));
  Quotient<RationalField> TmodmT =
      quotient_algebra(TA.algebra, Subspace<RationalField>::span(A.domain(), T.dim(), mT_coords));
  FutilityReport tee = decide_infinite_field(TmodmT.algebra, seed);
  conds.push_back({"T/mT futile", to_string(tee.verdict), tee.verdict == Verdict::Futile});

  UniserialResult u = uniserial_check(RA);
  conds.push_back({"m(A/R) uniserial", "(" + std::to_string(u.top) + ", " + std::to_string(u.second) + ")", u.uniserial});

  std::size_t r_T = nilradical(TmodmT.algebra).dim();
  conds.push_back({"r_T", std::to_string(r_T), true});
  if (r_T == 2) {
    Subspace<RationalField> n2 = product_space(A, N, N);
    Subspace<RationalField> lhs = product_space(A, n2, n2) + product_space(A, n2, m) + m;
    bool eq = lhs == mT;
    conds.push_back({"n^4 + n^2 m + m = mT", eq ? "holds" : "fails (" + std::to_string(lhs.dim()) + " vs " +
                                                              std::to_string(mT.dim()) + ")",
                     eq});
  } else {
    conds.push_back({"n^4 + n^2 m + m = mT", "not required", true});
  }
  r.trace = {top, tee};
  finish(r);
  if (r.verdict == Verdict::NotFutile) r.certificate.witness = first_failure(conds);
  return r;
}

FutilityReport decide_integer_algebra(const ZPresentation& P) {
  P.validate();
  ModuleStructure ms = module_structure(P);
  FutilityReport r;
  r.theorem = tags::kInteger;
  r.certificate.kind = "smith";
  r.certificate.free_rank = ms.free_rank;
  for (const auto& t : ms.torsion) r.certificate.torsion.push_back(to_string(t));
  r.certificate.conditions.push_back({"free rank", std::to_string(ms.free_rank), ms.free_rank <= 1});
  finish(r);
  if (ms.free_rank == 0)
    r.notes.push_back("finite ring of size " + to_string(ms.torsion_size()));
  else if (ms.free_rank == 1)
    r.notes.push_back("finite torsion; the quotient by torsion is a module-finite subring of Q, hence Z");
  else
    r.certificate.witness = "free rank " + std::to_string(ms.free_rank) + " >= 2";
  return r;
}

FutilityReport decide_integer_algebra(const LocalizedZ& A) {
  if (A.invert == 0) throw MalformedPresentation("cannot invert 0");
  Integer size = 1;
  if (A.finite_part) {
    A.finite_part->validate();
    ModuleStructure ms = module_structure(*A.finite_part);
    if (ms.free_rank != 0) throw MalformedPresentation("the finite part has positive free rank");
    size = ms.torsion_size();
  }
  FutilityReport r;
  r.theorem = tags::kInteger;
  r.certificate.kind = "localized";
  Integer n = abs(A.invert);
  r.certificate.witness = "Z[1/" + to_string(n) + "]" + (A.finite_part ? " x finite part" : "");
  r.certificate.cardinality = to_string(size);
  r.verdict = Verdict::Futile;
  r.notes.push_back("torsion of size " + to_string(size) + "; the quotient by torsion is Z[1/" + to_string(n) + "]");
  return r;
}

FutilityReport decide_finite_base(const StructAlgebra<PrimeField>& A, std::uint64_t budget) {
  FutilityReport r;
  r.theorem = tags::kFiniteBase;
  r.verdict = Verdict::Futile;
  try {
    SubalgebraLattice L = enumerate_subalgebras(A, A.unit_span(), budget);
    r.certificate.kind = "enumeration";
    r.certificate.count = L.members.size();
  } catch (const BudgetExceeded&) {
    Integer size = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) size *= static_cast<unsigned long>(A.domain().p());
    r.certificate.kind = "cardinality";
    r.certificate.cardinality = to_string(size);
    r.notes.push_back("enumeration budget exceeded; a finite algebra has finitely many subsets");
  }
  return r;
}

FutilityReport decide_finite_base(const ZPresentation& P) {
  P.validate();
  ModuleStructure ms = module_structure(P);
  if (ms.free_rank != 0) throw NotApplicable("the presentation is not finite");
  FutilityReport r;
  r.theorem = tags::kFiniteBase;
  r.verdict = Verdict::Futile;
  r.certificate.kind = "cardinality";
  r.certificate.cardinality = to_string(ms.torsion_size());
  return r;
}

FutilityReport decide_noncommutative(const StructAlgebra<RationalField>& A, std::uint64_t seed) {
  Subspace<RationalField> C = commutator_ideal(A);
  if (C.dim() == 0) return decide_infinite_field(A, seed);
  FutilityReport r;
  r.theorem = tags::kCommutator;
  r.certificate.kind = "commutator";
  r.certificate.conditions.push_back({"dim [A,A]", std::to_string(C.dim()), true});
  r.certificate.conditions.push_back({"[A,A] finite", "false (nonzero space over an infinite field)", false});
  r.trace.push_back(decide_infinite_field(quotient_algebra(A, C).algebra, seed));
  finish(r);
  r.certificate.witness = first_failure(r.certificate.conditions);
  return r;
}

FutilityReport decide_noncommutative(const StructAlgebra<PrimeField>& A, std::uint64_t budget) {
  Subspace<PrimeField> C = commutator_ideal(A);
  if (C.dim() == 0) return decide_finite_base(A, budget);
  Integer size = 1;
  for (std::size_t i = 0; i < C.dim(); ++i) size *= static_cast<unsigned long>(A.domain().p());
  FutilityReport r;
  r.theorem = tags::kCommutator;
  r.certificate.kind = "commutator";
  r.certificate.conditions.push_back({"dim [A,A]", std::to_string(C.dim()), true});
  r.certificate.conditions.push_back({"[A,A] finite", "true (size " + to_string(size) + ")", true});
  FutilityReport quotient = decide_finite_base(quotient_algebra(A, C).algebra, budget);
  r.certificate.conditions.push_back({"A/[A,A] futile", to_string(quotient.verdict), quotient.verdict == Verdict::Futile});
  r.trace.push_back(quotient);
  r.trace.push_back(decide_finite_base(A, budget));
  finish(r);
  return r;
}

FutilityReport decide_noncommutative(const StructAlgebra<FunctionField>& A) {
  Subspace<FunctionField> C = commutator_ideal(A);
  if (C.dim() == 0)
    throw UnsupportedDomain("commutative algebras over function fields are decided only as field towers");
  FutilityReport r;
  r.theorem = tags::kCommutator;
  r.certificate.kind = "commutator";
  r.certificate.conditions.push_back({"dim [A,A]", std::to_string(C.dim()), true});
  r.certificate.conditions.push_back({"[A,A] finite", "false (nonzero space over an infinite field)", false});
  finish(r);
  r.certificate.witness = first_failure(r.certificate.conditions);
  return r;
}

FutilityReport decide_noncommutative(const ZPresentation& P) {
  P.validate();
  ZIdeal I = commutator_lattice(P);
  IntMatrix L = P.relation_lattice();
  if (I.hermite == L) return decide_integer_algebra(P);
  FutilityReport r;
  r.theorem = tags::kCommutator;
  r.certificate.kind = "commutator";
  r.certificate.conditions.push_back({"rank [A,A] / relations", std::to_string(I.rank - L.rows()), true});
  bool finite = I.index_over_relations.has_value();
  r.certificate.conditions.push_back(
      {"[A,A] finite", finite ? "true (size " + to_string(*I.index_over_relations) + ")" : "false", finite});
  FutilityReport quotient = decide_integer_algebra(quotient_presentation(P, I.hermite));
  r.certificate.conditions.push_back({"A/[A,A] futile", to_string(quotient.verdict), quotient.verdict == Verdict::Futile});
  r.trace.push_back(quotient);
  finish(r);
  if (r.verdict == Verdict::NotFutile) r.certificate.witness = first_failure(r.certificate.conditions);
  return r;
}

}  // namespace futile
