#include "posethom/commands.hpp"

#include "posethom/coloured.hpp"
#include "posethom/document.hpp"
#include "posethom/error.hpp"
#include "posethom/functor.hpp"
#include "posethom/simplicial.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>

namespace posethom {

namespace {

std::string digest_text(std::uint32_t crc) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08x", crc);
  return std::string("crc32:") + buf;
}

std::string set_text(const Poset& p, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + p.element(s[i]);
  return out + "}";
}

std::string point_set_text(const StructuredSpace& space, const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + space.points()[s[i]];
  return out + "}";
}

Extremum parse_extremum(const std::string& s) {
  if (s == "max") return Extremum::Max;
  if (s == "min") return Extremum::Min;
  return Extremum::Both;
}

std::vector<std::string> cover_lines(const Poset& p) {
  std::vector<std::string> out;
  for (const auto& [x, y] : covering_relations(p)) out.push_back(p.element(x) + " < " + p.element(y));
  return out;
}

// Cohomology of a chain complex and homology of a cochain complex are both
// available through dualize; this pairs a complex with its dual table.
void add_tables(Report& r, const std::string& name, const std::string& dual_name, const ChainComplex& c) {
  r.tables.push_back(make_table(name, c, homology(c)));
  const ChainComplex d = dualize(c);
  r.tables.push_back(make_table(dual_name, d, homology(d)));
}

template <typename Fn>
auto wrap_validation(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ValidationError, std::string(to_string(e.code())) + ": " + e.what(), e.code());
  }
}

struct Options {
  std::string format = "text";
  std::string input;
  std::string folkman;
  bool reduced = false;
  std::optional<std::size_t> max_degree;
  std::string functor;
  bool strict = false;
  std::string topology;
  std::uint64_t seed = 0;
  std::size_t points = 0;
  std::size_t sets = 0;
  bool surjective = false;
};

ValidatedFunctor obtain_functor(const Options& o, const LoadedSpace& ls, Variance want, Report& r) {
  const Poset& p = ls.quotient.poset;
  PosetFunctor f;
  if (o.functor == "constant") {
    f = PosetFunctor::constant(p, want);
    r.values["functor"] = "constant";
  } else if (!o.functor.empty()) {
    const std::string text = read_file(o.functor);
    const SpaceDocument doc = parse_document(text);
    if (!doc.functor) throw Error(ErrorCode::ParseError, "'" + o.functor + "' has no functor section");
    f = wrap_validation([&] { return resolve_functor(*doc.functor, ls.space, ls.quotient); });
    r.values["functor"] = digest_text(crc32(text));
  } else if (ls.functor) {
    f = *ls.functor;
    r.values["functor"] = "document";
  } else {
    f = PosetFunctor::constant(p, want);
    r.values["functor"] = "constant";
    r.notes.push_back("no functor given; using the constant Z functor");
  }
  if (f.variance != want) {
    throw Error(ErrorCode::WrongDirection, std::string("this command needs a ") +
                                               (want == Variance::Covariant ? "covariant" : "contravariant") +
                                               " functor");
  }
  return wrap_validation([&] { return validate_functor(p, f); });
}

void cmd_inspect(const Options&, const LoadedSpace& ls, Report& r) {
  const auto& q = ls.quotient;
  const GradingReport g = grading_report(ls.space, q);
  const auto umax = unique_max_check(ls.space, q);
  const FiniteTopology top = ls.topology ? *ls.topology : default_topology(ls.space);
  const StratificationReport strat = stratification_report(ls.space, top);

  r.values["points"] = std::to_string(ls.space.point_count());
  r.values["cover_sets"] = std::to_string(ls.space.cover_count());
  r.values["classes"] = std::to_string(q.poset.size());
  r.values["r_observed"] = std::to_string(g.r_observed);
  r.values["height"] = std::to_string(height(q.poset));
  r.flags["h_surjective"] = g.h_surjective;
  r.flags["graded"] = g.is_graded;
  r.flags["strictly_monotone"] = g.strictly_monotone;
  r.flags["unique_max"] = umax.has_value();
  r.flags["maximal_structured_coloured"] = umax && umax->via_singleton_intersection;
  r.flags["continuous"] = strat.continuous;

  auto& classes = r.listings["classes"];
  for (std::size_t x = 0; x < q.poset.size(); ++x) {
    classes.push_back(q.poset.element(x) + " rank " + std::to_string(g.rank_of[x]) + " corank " +
                      std::to_string(g.corank_of[x]) + " " + point_set_text(ls.space, q.members[x]));
  }
  r.listings["covers"] = cover_lines(q.poset);
  for (const auto& [x, y] : g.violations) {
    r.listings["grading_violations"].push_back(q.poset.element(x) + " < " + q.poset.element(y));
  }
  r.notes.insert(r.notes.end(), g.notes.begin(), g.notes.end());
}

void cmd_poset(const Options& o, const LoadedSpace& ls, Report& r) {
  Poset p = ls.quotient.poset;
  if (!o.folkman.empty()) {
    p = folkman_trim(p, parse_extremum(o.folkman));
    r.values["folkman"] = o.folkman;
  }
  r.values["size"] = std::to_string(p.size());
  r.values["height"] = std::to_string(height(p));
  r.listings["elements"] = p.elements();
  r.listings["covers"] = cover_lines(p);
  r.listings["maximal"] = {set_text(p, p.maximal_elements())};
  r.listings["minimal"] = {set_text(p, p.minimal_elements())};
}

void cmd_homology(const Options& o, const LoadedSpace& ls, Report& r) {
  Poset p = ls.quotient.poset;
  if (!o.folkman.empty()) {
    p = folkman_trim(p, parse_extremum(o.folkman));
    r.values["folkman"] = o.folkman;
  }
  const ChainComplex c = simplicial_chain_complex(order_complex(p), o.reduced);
  r.flags["reduced"] = o.reduced;
  add_tables(r, "H_*(order complex)", "H^*(order complex)", c);
  r.values["euler_characteristic"] = std::to_string(euler_characteristic(c));
}

void cmd_nerve(const Options& o, const LoadedSpace& ls, Report& r) {
  const Poset& p = ls.quotient.poset;
  const TruncatedSimplicialSet nerve = nerve_truncation(p, *o.max_degree);
  const ChainComplex c = normalized_chain_complex(nerve);
  const HomologySummary hn = homology(c);
  const HomologySummary ho = homology(simplicial_chain_complex(order_complex(p)));
  r.tables.push_back(make_table("H_*(nerve, normalized)", c, hn));
  bool agrees = true;
  for (std::size_t n = 0; n < std::max(hn.degrees.size(), ho.degrees.size()); ++n) {
    const DegreeHomology zero{};
    const auto& a = n < hn.degrees.size() ? hn.degrees[n] : zero;
    const auto& b = n < ho.degrees.size() ? ho.degrees[n] : zero;
    if (!(a == b)) agrees = false;
  }
  r.flags["agrees_with_order_complex"] = agrees;
  auto& counts = r.listings["nondegenerate_simplices"];
  const auto k = nerve.counts();
  for (std::size_t n = 0; n < k.size(); ++n) counts.push_back("degree " + std::to_string(n) + ": " + std::to_string(k[n]));
}

void cmd_functor_cohomology(const Options& o, const LoadedSpace& ls, Report& r) {
  const Poset& p = ls.quotient.poset;
  const ValidatedFunctor f = obtain_functor(o, ls, Variance::Contravariant, r);
  const ChainComplex c = functor_cochain_complex(p, f);
  const HomologySummary h = homology(c);
  r.tables.push_back(make_table("HS^*(ordered chains)", c, h));
  const LimitDescription lim = brute_force_limit(p, f);
  r.values["limit_rank"] = std::to_string(lim.rank);
  const bool matches = !h.degrees.empty() && h.degrees[0].betti == lim.rank && h.degrees[0].torsion == lim.torsion;
  r.flags["h0_equals_limit"] = matches;
}

void cmd_cellular(const Options& o, const LoadedSpace& ls, Report& r) {
  const Poset& p = ls.quotient.poset;
  const ValidatedFunctor f = obtain_functor(o, ls, Variance::Contravariant, r);
  const CellularComparison cmp = cellular_complex(p, f, grading_report(ls.space, ls.quotient));
  r.tables.push_back(make_table("cellular cohomology", cmp.complex, cmp.cellular));
  r.tables.push_back(make_table("ordered-chain cohomology", functor_cochain_complex(p, f), cmp.ordered));
  r.flags["agrees"] = cmp.agrees;
  auto& conc = r.listings["concentrated"];
  for (std::size_t n = 0; n < cmp.concentrated.size(); ++n) {
    conc.push_back("stage " + std::to_string(n) + ": " + (cmp.concentrated[n] ? "yes" : "no"));
  }
  r.notes.insert(r.notes.end(), cmp.notes.begin(), cmp.notes.end());
  require_agreement(cmp);
}

void cmd_coloured(const Options& o, const LoadedSpace& ls, Report& r) {
  const auto umax = unique_max_check(ls.space, ls.quotient);
  if (!umax) {
    throw Error(ErrorCode::NoUniqueMax, "the quotient has " + std::to_string(ls.quotient.poset.maximal_elements().size()) +
                                            " maximal classes; coloured homology needs exactly one");
  }
  r.flags["maximal_structured_coloured"] = umax->via_singleton_intersection;
  r.flags["strict"] = o.strict;
  const ValidatedFunctor vf = obtain_functor(o, ls, Variance::Covariant, r);
  (void)vf;  // validated above; ColouredPoset revalidates from the raw functor
  PosetFunctor raw;
  if (o.functor == "constant" || (o.functor.empty() && !ls.functor)) {
    raw = PosetFunctor::constant(ls.quotient.poset, Variance::Covariant);
  } else if (!o.functor.empty()) {
    raw = resolve_functor(*parse_document(read_file(o.functor)).functor, ls.space, ls.quotient);
  } else {
    raw = *ls.functor;
  }
  const ColouredPoset cp = ColouredPoset::make(ls.quotient.poset, raw);
  const std::size_t n = o.max_degree ? *o.max_degree : std::max<std::size_t>(1, height(cp.poset()) - 1);
  const ColouredComplex cc = coloured_chain_complex(cp, o.strict, n);
  add_tables(r, "H_*(coloured)", "H^*(coloured)", cc.complex);
  r.values["max_degree"] = std::to_string(n);
  r.values["valid_below"] = std::to_string(cc.valid_below);
  r.flags["truncated"] = cc.truncated;
  r.notes.insert(r.notes.end(), cc.notes.begin(), cc.notes.end());
}

void cmd_stratified(const Options& o, const LoadedSpace& ls, Report& r) {
  FiniteTopology top = default_topology(ls.space);
  std::string source = "cover subbasis";
  if (o.topology == "default") {
    // keep
  } else if (o.topology == "discrete") {
    top = discrete_topology(ls.space);
    source = "discrete";
  } else if (o.topology == "indiscrete") {
    top = indiscrete_topology(ls.space);
    source = "indiscrete";
  } else if (!o.topology.empty()) {
    const std::string text = read_file(o.topology);
    const SpaceDocument doc = parse_document(text);
    if (!doc.topology) throw Error(ErrorCode::ParseError, "'" + o.topology + "' has no topology section");
    top = wrap_validation([&] {
      std::vector<ElementSet> opens;
      for (const auto& open : *doc.topology) {
        ElementSet s;
        for (const auto& pt : open) {
          const auto idx = ls.space.point_index(pt);
          if (!idx) throw Error(ErrorCode::UnknownPoint, "topology names unknown point '" + pt + "'");
          s.push_back(*idx);
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        opens.push_back(std::move(s));
      }
      return FiniteTopology::make(ls.space.points(), std::move(opens));
    });
    source = digest_text(crc32(text));
  } else if (ls.topology) {
    top = *ls.topology;
    source = "document";
  }
  const StratificationReport s = stratification_report(ls.space, top);
  const Poset& p = ls.quotient.poset;
  r.values["topology"] = source;
  r.values["opens"] = std::to_string(top.opens().size());
  r.flags["surjective"] = s.surjective;
  r.flags["continuous"] = s.continuous;
  auto& pre = r.listings["preimages"];
  for (const auto& [up, points] : s.preimages) pre.push_back(set_text(p, up) + " -> " + point_set_text(ls.space, points));
  if (s.witness) {
    r.listings["witness"] = {"up-set " + set_text(p, s.witness->up_set),
                             "preimage " + point_set_text(ls.space, s.witness->preimage), s.witness->reason};
  }
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args) {
  CommandOutcome out;
  Options o;
  CLI::App app{"Exact poset homology of finite covered spaces", "posethom"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  const auto folkman_check = CLI::IsMember({"max", "min", "both"});

  std::map<std::string, std::function<void(const Options&, const LoadedSpace&, Report&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Space document")->required();
    handlers[name] = handler;
    return sub;
  };
  add("inspect", "Quotient, grading and structural flags", cmd_inspect);
  add("poset", "Quotient poset", cmd_poset)->add_option("--folkman", o.folkman)->check(folkman_check);
  auto* hom = add("homology", "Simplicial homology of the order complex", cmd_homology);
  hom->add_flag("--reduced", o.reduced);
  hom->add_option("--folkman", o.folkman)->check(folkman_check);
  add("nerve-homology", "Normalized homology of the truncated nerve", cmd_nerve)
      ->add_option("--max-degree", o.max_degree)
      ->required();
  add("functor-cohomology", "Ordered-chain cohomology with functor coefficients", cmd_functor_cohomology)
      ->add_option("--functor", o.functor, "Functor document or 'constant'");
  add("cellular", "Cellular cochain complex of the corank filtration", cmd_cellular)
      ->add_option("--functor", o.functor, "Functor document or 'constant'");
  auto* col = add("coloured", "Coloured-poset homology", cmd_coloured);
  col->add_option("--functor", o.functor, "Functor document or 'constant'");
  col->add_flag("--strict", o.strict);
  col->add_option("--max-degree", o.max_degree);
  add("stratified-check", "Continuity of the stratification map", cmd_stratified)
      ->add_option("--topology", o.topology, "Topology document, or default|discrete|indiscrete");
  auto* gen = app.add_subcommand("generate", "Random space document");
  gen->add_option("--seed", o.seed)->required();
  gen->add_option("--points", o.points)->required();
  gen->add_option("--sets", o.sets)->required();
  gen->add_flag("--surjective", o.surjective);

  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--format") ++i;  // skip its value
    if (a.rfind("-", 0) == 0) continue;
    if (app.get_subcommand_no_throw(a) == nullptr) {
      out.exit_code = 2;
      out.diagnostics = "UsageError: unknown command '" + a + "'\n";
      return out;
    }
    break;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.output = app.help();
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    out.diagnostics = std::string(to_string(ErrorCode::UsageError)) + ": " + e.what() + "\n";
    return out;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (chosen->get_help_ptr() && chosen->get_help_ptr()->count() > 0) {
    out.output = chosen->help();
    return out;
  }
  if (name == "coloured" && !o.strict && !o.max_degree) {
    out.exit_code = 2;
    out.diagnostics = "UsageError: coloured without --strict needs --max-degree (the weak complex never terminates)\n";
    return out;
  }
  const ReportFormat format = o.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;

  Report r;
  r.command = name;
  try {
    if (name == "generate") {
      const SpaceDocument doc = generate_random_space(o.seed, o.points, o.sets, o.surjective);
      out.output = emit_document(doc);
      r.input_digest = digest_text(crc32(out.output));
      out.report = r;
      return out;
    }
    const std::string text = read_file(o.input);
    r.input_digest = digest_text(crc32(text));
    const LoadedSpace ls = load_space_text(text);
    handlers.at(name)(o, ls, r);
  } catch (const Error& e) {
    r.error = ReportError{std::string(to_string(e.code())), e.cause() ? std::string(to_string(*e.cause())) : "",
                          e.what()};
    out.exit_code = 1;
    out.diagnostics = r.error->code + ": " + r.error->message + "\n";
  }
  out.output = emit_report(r, format);
  out.report = std::move(r);
  return out;
}

}  // namespace posethom
