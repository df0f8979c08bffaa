#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zalg/io.hpp"
#include "zalg/rng.hpp"
#include "zalg/structure.hpp"

using namespace zalg;

namespace {

struct Options {
  unsigned long long seed = 0;
  std::string format = "json";
  bool timing = false;
  std::size_t max_basis = 0;
  std::string order = "degrevlex";
};

TermOrdering ordering_from_name(const std::string& s) {
  if (s == "degrevlex") return TermOrdering::DegRevLex;
  if (s == "deglex") return TermOrdering::DegLex;
  if (s == "lex") return TermOrdering::Lex;
  throw input_error("unknown term ordering \"" + s + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json row_json(const ZElem& r) {
  json a = json::array();
  for (const auto& v : r) a.push_back(detail::int_to_json(v));
  return a;
}

json rows_json(const std::vector<ZElem>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(row_json(r));
  return a;
}

json lattice_json(const Lattice& L) {
  json a = json::array();
  for (std::size_t r = 0; r < L.basis.rows(); ++r) a.push_back(row_json(L.basis.row(r)));
  return a;
}

template <class F>
json span_json(const std::vector<std::vector<typename F::Elem>>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    json row = json::array();
    for (const auto& v : r) {
      if constexpr (F::is_rational)
        row.push_back(detail::rat_to_json(v));
      else
        row.push_back(detail::int_to_json(v));
    }
    a.push_back(std::move(row));
  }
  return a;
}

// deterministic job report: stable field order, timing only on request
struct Report {
  std::string command;
  Options opts;
  std::vector<std::string> inputs;
  json results = json::object();
  std::vector<std::pair<std::string, bool>> checks;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(const std::string& name, bool ok) { checks.emplace_back(name, ok); }

  int emit() {
    bool all_ok = true;
    for (const auto& [name, ok] : checks) all_ok = all_ok && ok;
    json j;
    j["command"] = command;
    j["seed"] = opts.seed;
    j["inputs"] = inputs;
    j["results"] = results;
    json ver;
    json list = json::array();
    for (const auto& [name, ok] : checks)
      list.push_back(json{{"name", name}, {"ok", ok}});
    ver["checks"] = std::move(list);
    ver["all_ok"] = all_ok;
    j["verification"] = std::move(ver);
    if (opts.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      j["timing_ms"] = ms;
    }
    if (opts.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "command: " << command << "\n";
      std::cout << "seed: " << opts.seed << "\n";
      std::cout << "results: " << results.dump() << "\n";
      for (const auto& [name, ok] : checks)
        std::cout << "check " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
      std::cout << (all_ok ? "ok" : "FAILED") << "\n";
    }
    return all_ok ? 0 : 4;
  }
};

AlgebraDocument load_zalg(const std::string& path) { return parse_zalg(read_file(path)); }
KAlgebraDocument load_kalg(const std::string& path) { return parse_kalg(read_file(path)); }
IdealDocument load_ideal(const std::string& path, TermOrdering ord) {
  return parse_ideal(read_file(path), ord);
}

RIdeal ideal_from_doc(const IdealDocument& d, const ExplicitZAlgebra& R) {
  if (d.polynomial)
    throw precondition_error("ideal document \"" + d.name +
                             "\" holds polynomials; element rows are required here");
  RIdeal J;
  for (const auto& r : d.elements) {
    if (r.size() != R.ambient())
      throw input_error("ideal \"" + d.name + "\": element length does not match algebra");
    J.gens.push_back(r);
  }
  return J;
}

json poly_list_json(const std::vector<PolyZ>& ps, const std::vector<std::string>& vars) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(print_poly(p, vars));
  return a;
}

json term_list_json(const std::vector<Term>& ts, TermOrdering ord,
                    const std::vector<std::string>& vars) {
  json a = json::array();
  for (const auto& t : ts)
    a.push_back(print_poly(PolyZ::monomial(t.nvars(), ord, Int(1), t), vars));
  return a;
}

std::vector<std::string> default_vars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
  return v;
}

// a strong GB handed in by file must actually satisfy the completion criterion
StrongGroebnerBasis sgb_from_doc(const IdealDocument& d, TermOrdering ord) {
  if (!d.polynomial)
    throw precondition_error("ideal document \"" + d.name +
                             "\" must hold polynomial generators");
  StrongGroebnerBasis G;
  G.ord = ord;
  G.nvars = d.variables.size();
  for (const auto& g : d.gens)
    if (!g.is_zero()) G.elements.push_back(g);
  if (!detail::pairs_reduce_to_zero(G.elements))
    throw precondition_error("ideal \"" + d.name +
                             "\" generators are not a strong Groebner basis");
  G.order_ideal = macaulay_generators(G);
  return G;
}

int run_validate(const Options& opts, const std::string& path) {
  Report rep{"validate", opts, {path}};
  auto doc = load_zalg(path);
  ValidationReport v = validate(doc.algebra);
  rep.results["name"] = doc.name;
  rep.results["ok"] = v.ok;
  rep.results["message"] = v.message;
  rep.check("algebra_axioms", v.ok);
  return rep.emit();
}

int run_invariants(const Options& opts, const std::string& path) {
  Report rep{"invariants", opts, {path}};
  auto doc = load_zalg(path);
  ModuleInvariants mi = module_invariants(doc.algebra);
  rep.results["name"] = doc.name;
  rep.results["rank"] = mi.rank;
  json inv = json::array();
  for (const auto& d : mi.invariant_factors) inv.push_back(detail::int_to_json(d));
  rep.results["invariant_factors"] = std::move(inv);
  rep.results["torsion_exponent"] = detail::int_to_json(mi.torsion_exponent);
  rep.check("torsion_bit_bound", mi.bound_ok);
  rep.check("algebra_axioms", validate(doc.algebra).ok);
  return rep.emit();
}

int run_solve(const Options& opts, const std::string& apath, const std::string& epath) {
  Report rep{"solve", opts, {apath, epath}};
  auto doc = load_zalg(apath);
  const ExplicitZAlgebra& R = doc.algebra;
  json ej = detail::parse_json_text(read_file(epath), "equation document");
  std::vector<std::vector<ZElem>> eqs;
  for (const auto& eq : detail::require_field(ej, "equations", "equation document")) {
    std::vector<ZElem> coeffs;
    for (const auto& r : eq) {
      ZElem row;
      for (const auto& v : r) row.push_back(detail::json_to_int(v, "equation row"));
      coeffs.push_back(std::move(row));
    }
    eqs.push_back(std::move(coeffs));
  }
  auto sols = solve_linear_system_over_R(R, eqs);
  json out = json::array();
  for (const auto& tup : sols) out.push_back(rows_json(tup));
  rep.results["solutions"] = std::move(out);
  bool subst_ok = true;
  for (const auto& tup : sols)
    for (const auto& eq : eqs) {
      ZElem acc = R.zero_elem();
      for (std::size_t jx = 0; jx < eq.size(); ++jx)
        acc = add_elems(acc, multiply(R, eq[jx], tup[jx]));
      if (!is_zero_elem(R, acc)) subst_ok = false;
    }
  rep.check("solutions_substitute_to_zero", subst_ok);
  return rep.emit();
}

int run_quotient(const Options& opts, const std::string& apath, const std::string& ipath) {
  Report rep{"quotient", opts, {apath, ipath}};
  auto doc = load_zalg(apath);
  RIdeal J = ideal_from_doc(load_ideal(ipath, TermOrdering::DegRevLex), doc.algebra);
  Lattice V = quotient_presentation(doc.algebra, J);
  rep.results["presentation"] = lattice_json(V);
  bool member_ok = true;
  for (const auto& g : J.gens)
    if (!lattice_member(V, g)) member_ok = false;
  rep.check("generators_in_presentation", member_ok);
  return rep.emit();
}

int run_contains(const Options& opts, const std::string& apath, const std::string& outer,
                 const std::string& inner) {
  Report rep{"contains", opts, {apath, outer, inner}};
  auto doc = load_zalg(apath);
  RIdeal A = ideal_from_doc(load_ideal(outer, TermOrdering::DegRevLex), doc.algebra);
  RIdeal B = ideal_from_doc(load_ideal(inner, TermOrdering::DegRevLex), doc.algebra);
  bool contained = ideal_contains(doc.algebra, B, A);
  rep.results["contains"] = contained;
  rep.check("presentation_consistent",
            lattice_contains(quotient_presentation(doc.algebra, A), doc.algebra.syzygies));
  return rep.emit();
}

int run_intersect_ideals(const Options& opts, const std::string& apath,
                         const std::string& p1, const std::string& p2) {
  Report rep{"intersect-ideals", opts, {apath, p1, p2}};
  auto doc = load_zalg(apath);
  const ExplicitZAlgebra& R = doc.algebra;
  RIdeal A = ideal_from_doc(load_ideal(p1, TermOrdering::DegRevLex), R);
  RIdeal B = ideal_from_doc(load_ideal(p2, TermOrdering::DegRevLex), R);
  RIdeal K = intersect_ideals_R(R, A, B);
  rep.results["generators"] = rows_json(K.gens);
  rep.results["presentation"] = lattice_json(quotient_presentation(R, K));
  rep.check("contained_in_first", ideal_contains(R, K, A));
  rep.check("contained_in_second", ideal_contains(R, K, B));
  return rep.emit();
}

int run_crt(const Options& opts, const std::string& apath,
            const std::vector<std::string>& ipaths, std::size_t index) {
  Report rep{"crt-preimage", opts, {apath}};
  for (const auto& p : ipaths) rep.inputs.push_back(p);
  auto doc = load_zalg(apath);
  const ExplicitZAlgebra& R = doc.algebra;
  std::vector<RIdeal> Js;
  for (const auto& p : ipaths)
    Js.push_back(ideal_from_doc(load_ideal(p, TermOrdering::DegRevLex), R));
  ZElem f = crt_preimage(R, Js, index);
  rep.results["element"] = row_json(canonical_form(R, f));
  bool cong_ok = true;
  for (std::size_t jx = 0; jx < Js.size(); ++jx) {
    Lattice V = quotient_presentation(R, Js[jx]);
    ZElem target = (jx + 1 == index) ? R.one() : R.zero_elem();
    if (!lattice_member(V, sub_elems(f, target))) cong_ok = false;
  }
  rep.check("congruences", cong_ok);
  return rep.emit();
}

template <class F>
void nilradical_into(Report& rep, const ExplicitKAlgebra<F>& A) {
  auto N = nilradical(A);
  auto span = ideal_span(A, N.ideal.gens);
  rep.results["nilradical"] = span_json<F>(span.rows);
  rep.results["quotient_dim"] = N.quotient.lift_idx.size();
  json qlabels = json::array();
  for (auto i : N.quotient.lift_idx) qlabels.push_back(A.labels.at(i));
  rep.results["quotient_basis"] = std::move(qlabels);
  bool nilp = true;
  for (const auto& v : span.rows) {
    auto w = v;
    for (std::size_t k = 1; k < A.dim; ++k) w = A.mul(w, v);
    if (!A.vec_is_zero(w)) nilp = false;
  }
  rep.check("generators_nilpotent", nilp);
}

int run_nilradical(const Options& opts, const std::string& path) {
  Report rep{"nilradical", opts, {path}};
  auto doc = load_kalg(path);
  if (doc.rational)
    nilradical_into<RationalField>(rep, doc.q);
  else
    nilradical_into<PrimeField>(rep, doc.f);
  return rep.emit();
}

int run_primary_p(const Options& opts, const std::string& path) {
  Report rep{"primary-p", opts, {path}};
  auto doc = load_kalg(path);
  if (doc.rational)
    throw precondition_error("primary-p requires a prime field document");
  RandomSource rng(opts.seed);
  auto comps = primary_decomposition_p(doc.f, rng);
  json out = json::array();
  for (const auto& q : comps) out.push_back(span_json<PrimeField>(ideal_span(doc.f, q.gens).rows));
  rep.results["components"] = std::move(out);
  auto frob = frobenius_space(doc.f);
  rep.results["frobenius_rank"] = frob.fixed.size();
  rep.check("component_count_matches_frobenius_rank", comps.size() == frob.fixed.size());
  return rep.emit();
}

template <class F>
void maximal_into(Report& rep, const ExplicitKAlgebra<F>& A, RandomSource& rng) {
  auto ms = maximal_ideals(A, rng);
  json out = json::array();
  bool proper = true;
  for (const auto& m : ms) {
    auto span = ideal_span(A, m.gens);
    if (span.rows.size() >= A.dim) proper = false;
    json entry;
    entry["span"] = span_json<F>(span.rows);
    entry["residue_dim"] = A.dim - span.rows.size();
    out.push_back(std::move(entry));
  }
  rep.results["maximal_ideals"] = std::move(out);
  rep.check("ideals_proper", proper);
  rep.check("nonempty", !ms.empty());
}

int run_maximal(const Options& opts, const std::string& path) {
  Report rep{"maximal-ideals", opts, {path}};
  auto doc = load_kalg(path);
  RandomSource rng(opts.seed);
  if (doc.rational)
    maximal_into<RationalField>(rep, doc.q, rng);
  else
    maximal_into<PrimeField>(rep, doc.f, rng);
  return rep.emit();
}

json primes_json(const std::vector<PrimeIdeal>& primes) {
  json out = json::array();
  for (const auto& p : primes) {
    json entry;
    entry["characteristic"] = detail::int_to_json(p.characteristic);
    entry["maximal"] = p.maximal;
    entry["generators"] = rows_json(p.ideal.gens);
    entry["presentation"] = lattice_json(p.presentation);
    out.push_back(std::move(entry));
  }
  return out;
}

int run_assoc_primes(const Options& opts, const std::string& path) {
  Report rep{"assoc-primes", opts, {path}};
  auto doc = load_zalg(path);
  const ExplicitZAlgebra& R = doc.algebra;
  RandomSource rng(opts.seed);
  auto primes = minimal_associated_primes(R, rng);
  rep.results["primes"] = primes_json(primes);
  RIdeal J = radical_zero(R, primes);
  rep.results["radical"] = lattice_json(quotient_presentation(R, J));
  bool contained = true, proper = true;
  for (const auto& p : primes) {
    if (!ideal_contains(R, J, p.ideal)) contained = false;
    if (p.presentation == full_lattice(R.ambient())) proper = false;
  }
  rep.check("radical_in_every_prime", contained);
  rep.check("primes_proper", proper);
  return rep.emit();
}

int run_components(const Options& opts, const std::string& path) {
  Report rep{"components", opts, {path}};
  auto doc = load_zalg(path);
  const ExplicitZAlgebra& R = doc.algebra;
  RandomSource rng(opts.seed);
  auto primes = minimal_associated_primes(R, rng);
  auto comps = connected_components(R, primes);
  rep.results["primes"] = primes_json(primes);
  json blocks = json::array();
  for (const auto& b : comps.blocks) blocks.push_back(b);
  rep.results["blocks"] = std::move(blocks);
  // height-n primes in different blocks must be comaximal
  bool separated = true;
  for (std::size_t a = 0; a < comps.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < comps.blocks.size(); ++b)
      for (auto i : comps.blocks[a])
        for (auto jx : comps.blocks[b]) {
          if (primes[i].maximal || primes[jx].maximal) continue;
          RIdeal sum = primes[i].ideal;
          sum.gens.insert(sum.gens.end(), primes[jx].ideal.gens.begin(),
                          primes[jx].ideal.gens.end());
          if (!is_unit_ideal(R, sum)) separated = false;
        }
  rep.check("blocks_pairwise_comaximal", separated);
  return rep.emit();
}

int run_idempotents(const Options& opts, const std::string& path) {
  Report rep{"idempotents", opts, {path}};
  auto doc = load_zalg(path);
  const ExplicitZAlgebra& R = doc.algebra;
  RandomSource rng(opts.seed);
  auto es = primitive_idempotents(R, rng);
  json out = json::array();
  for (const auto& e : es) {
    json entry;
    entry["element"] = row_json(canonical_form(R, e.e));
    entry["iterations"] = e.iterations;
    out.push_back(std::move(entry));
  }
  rep.results["idempotents"] = std::move(out);
  bool idem = true, orth = true;
  ZElem sum = R.zero_elem();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!elems_equal(R, multiply(R, es[i].e, es[i].e), es[i].e)) idem = false;
    for (std::size_t jx = i + 1; jx < es.size(); ++jx)
      if (!is_zero_elem(R, multiply(R, es[i].e, es[jx].e))) orth = false;
    sum = add_elems(sum, es[i].e);
  }
  rep.check("idempotent", idem);
  rep.check("pairwise_orthogonal", orth);
  rep.check("partition_of_unity", es.empty() || elems_equal(R, sum, R.one()));
  return rep.emit();
}

int run_gb(const Options& opts, const std::string& path) {
  Report rep{"gb", opts, {path}};
  auto doc = load_zalg(path);
  TermOrdering ord = ordering_from_name(opts.order);
  auto G = strong_gb_from_explicit(doc.algebra, ord);
  auto vars = default_vars(G.nvars);
  rep.results["ordering"] = ordering_name(ord);
  rep.results["basis"] = poly_list_json(G.elements, vars);
  rep.results["order_ideal"] = term_list_json(G.order_ideal, ord, vars);
  rep.check("completion_criterion", detail::pairs_reduce_to_zero(G.elements));
  return rep.emit();
}

int run_intersect(const Options& opts, const std::vector<std::string>& paths) {
  Report rep{"intersect", opts, {}};
  rep.inputs = paths;
  TermOrdering ord = ordering_from_name(opts.order);
  std::vector<IdealDocument> docs;
  for (const auto& p : paths) docs.push_back(load_ideal(p, ord));
  std::vector<StrongGroebnerBasis> gbs;
  std::vector<BMInput> inputs;
  for (const auto& d : docs) {
    StrongGroebnerBasis g = sgb_from_doc(d, ord);
    BMInput in;
    in.oracle = oracle_from_gb(g.elements, g.order_ideal);
    in.relations = module_presentation(g);
    inputs.push_back(std::move(in));
    gbs.push_back(std::move(g));
  }
  auto G = bm_intersect(inputs, ord, opts.max_basis);
  const auto& vars = docs.front().variables;
  rep.results["ordering"] = ordering_name(ord);
  rep.results["basis"] = poly_list_json(G.elements, vars);
  rep.results["order_ideal"] = term_list_json(G.order_ideal, ord, vars);
  rep.check("completion_criterion", detail::pairs_reduce_to_zero(G.elements));
  bool member = true;
  for (const auto& g : G.elements)
    for (const auto& h : gbs)
      if (!strong_normal_form(g, h.elements).remainder.is_zero()) member = false;
  rep.check("result_in_every_input", member);
  return rep.emit();
}

int run_present(const Options& opts, const std::string& path) {
  Report rep{"present", opts, {path}};
  TermOrdering ord = ordering_from_name(opts.order);
  auto d = load_ideal(path, ord);
  StrongGroebnerBasis G = sgb_from_doc(d, ord);
  ExplicitZAlgebra R = explicit_rep_from_gb(G);
  AlgebraDocument out{d.name, R};
  rep.results["algebra"] = json::parse(print_zalg(out));
  rep.check("algebra_axioms", validate(R).ok);
  return rep.emit();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Z-algebra toolkit"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--seed", opts.seed, "random seed (default 0)");
  app.add_option("--format", opts.format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opts.timing, "include timing in the report");
  app.add_option("--max-basis", opts.max_basis, "order ideal cap for intersections");
  app.add_option("--order", opts.order, "term ordering")
      ->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));

  std::string a1, a2, a3;
  std::vector<std::string> many;
  std::size_t index = 1;
  int rc = 0;
  std::function<int()> job;

  auto* validate_cmd = app.add_subcommand("validate", "check algebra axioms");
  validate_cmd->add_option("algebra", a1)->required();
  validate_cmd->callback([&] { job = [&] { return run_validate(opts, a1); }; });

  auto* inv_cmd = app.add_subcommand("invariants", "module invariants");
  inv_cmd->add_option("algebra", a1)->required();
  inv_cmd->callback([&] { job = [&] { return run_invariants(opts, a1); }; });

  auto* solve_cmd = app.add_subcommand("solve", "linear systems over the algebra");
  solve_cmd->add_option("algebra", a1)->required();
  solve_cmd->add_option("equations", a2)->required();
  solve_cmd->callback([&] { job = [&] { return run_solve(opts, a1, a2); }; });

  auto* quot_cmd = app.add_subcommand("quotient", "quotient presentation");
  quot_cmd->add_option("algebra", a1)->required();
  quot_cmd->add_option("ideal", a2)->required();
  quot_cmd->callback([&] { job = [&] { return run_quotient(opts, a1, a2); }; });

  auto* cont_cmd = app.add_subcommand("contains", "ideal containment (second in first)");
  cont_cmd->add_option("algebra", a1)->required();
  cont_cmd->add_option("outer", a2)->required();
  cont_cmd->add_option("inner", a3)->required();
  cont_cmd->callback([&] { job = [&] { return run_contains(opts, a1, a2, a3); }; });

  auto* ii_cmd = app.add_subcommand("intersect-ideals", "ideal intersection in an algebra");
  ii_cmd->add_option("algebra", a1)->required();
  ii_cmd->add_option("first", a2)->required();
  ii_cmd->add_option("second", a3)->required();
  ii_cmd->callback([&] { job = [&] { return run_intersect_ideals(opts, a1, a2, a3); }; });

  auto* crt_cmd = app.add_subcommand("crt-preimage", "CRT preimage of a unit vector");
  crt_cmd->add_option("algebra", a1)->required();
  crt_cmd->add_option("ideals", many)->required()->expected(-1);
  crt_cmd->add_option("--index", index, "1-based component index");
  crt_cmd->callback([&] { job = [&] { return run_crt(opts, a1, many, index); }; });

  auto* nil_cmd = app.add_subcommand("nilradical", "nilradical of a K-algebra");
  nil_cmd->add_option("algebra", a1)->required();
  nil_cmd->callback([&] { job = [&] { return run_nilradical(opts, a1); }; });

  auto* pp_cmd = app.add_subcommand("primary-p", "primary decomposition over F_p");
  pp_cmd->add_option("algebra", a1)->required();
  pp_cmd->callback([&] { job = [&] { return run_primary_p(opts, a1); }; });

  auto* max_cmd = app.add_subcommand("maximal-ideals", "maximal ideals of a K-algebra");
  max_cmd->add_option("algebra", a1)->required();
  max_cmd->callback([&] { job = [&] { return run_maximal(opts, a1); }; });

  auto* ap_cmd = app.add_subcommand("assoc-primes", "minimal associated primes");
  ap_cmd->add_option("algebra", a1)->required();
  ap_cmd->callback([&] { job = [&] { return run_assoc_primes(opts, a1); }; });

  auto* comp_cmd = app.add_subcommand("components", "connected components of min primes");
  comp_cmd->add_option("algebra", a1)->required();
  comp_cmd->callback([&] { job = [&] { return run_components(opts, a1); }; });

  auto* idem_cmd = app.add_subcommand("idempotents", "primitive idempotents");
  idem_cmd->add_option("algebra", a1)->required();
  idem_cmd->callback([&] { job = [&] { return run_idempotents(opts, a1); }; });

  auto* gb_cmd = app.add_subcommand("gb", "strong Groebner basis of the defining ideal");
  gb_cmd->add_option("algebra", a1)->required();
  gb_cmd->callback([&] { job = [&] { return run_gb(opts, a1); }; });

  auto* int_cmd = app.add_subcommand("intersect", "intersect polynomial ideals");
  int_cmd->add_option("ideals", many)->required()->expected(-1);
  int_cmd->callback([&] { job = [&] { return run_intersect(opts, many); }; });

  auto* pres_cmd = app.add_subcommand("present", "explicit representation from a strong GB");
  pres_cmd->add_option("ideal", a1)->required();
  pres_cmd->callback([&] { job = [&] { return run_present(opts, a1); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  try {
    rc = job();
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return rc;
}
