// coalglab: exact computations with finite-dimensional coalgebras and
// comodules. Subcommands map one-to-one onto library operations; identical
// invocations produce byte-identical reports.
#include <CLI11.hpp>
#include <iostream>

#include "coalglab/acceptance.hpp"
#include "coalglab/ext.hpp"
#include "coalglab/io.hpp"
#include "coalglab/localization.hpp"
#include "coalglab/oracle.hpp"

using namespace coalglab;

namespace {

struct CommonOpts {
  std::string field = "Q";
  std::uint64_t seed = 0;
  std::uint64_t budget_work = 0;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "session field: Q or GF:p");
  cmd->add_option("--seed", o.seed, "deterministic seed for enumeration");
  cmd->add_option("--budget", o.budget_work, "work cap for enumerative scans");
  cmd->add_option("--out", o.out, "write the result document to this path");
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

Budget make_budget(const CommonOpts& o) {
  Budget b = Budget::from_env();
  if (o.budget_work) b.work = o.budget_work;
  b.seed = o.seed;
  return b;
}

void emit(const CommonOpts& o, const Json& doc, const std::string& text_form) {
  std::string payload = o.format == "json" ? canonical_dump(doc) : text_form;
  if (o.out.empty())
    std::cout << payload;
  else
    write_text_file(o.out, payload);
}

Json subspace_with_labels(const Coalgebra& c, const Subspace& s) {
  Json j = subspace_to_json(s);
  j["basis_labels"] = c.labels();
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"exact coalgebra/comodule computations"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "verify coalgebra or comodule axioms");
  std::string check_file;
  CommonOpts check_o;
  check->add_option("file", check_file)->required();
  add_common(check, check_o);

  // path-coalgebra
  auto* pathc = app.add_subcommand("path-coalgebra", "truncated path coalgebra of a quiver");
  std::string pathc_file;
  std::size_t pathc_len = 1;
  CommonOpts pathc_o;
  pathc->add_option("quiver", pathc_file)->required();
  pathc->add_option("--max-len", pathc_len, "maximum path length")->required();
  add_common(pathc, pathc_o);

  // wedge
  auto* wedge = app.add_subcommand("wedge", "wedge of two subspaces");
  std::string wedge_c, wedge_v, wedge_w;
  CommonOpts wedge_o;
  wedge->add_option("coalgebra", wedge_c)->required();
  wedge->add_option("--v", wedge_v, "subspace document")->required();
  wedge->add_option("--w", wedge_w, "subspace document")->required();
  add_common(wedge, wedge_o);

  // coradical
  auto* corad = app.add_subcommand("coradical", "coradical (optionally the filtration)");
  std::string corad_c;
  bool corad_filtration = false;
  CommonOpts corad_o;
  corad->add_option("coalgebra", corad_c)->required();
  corad->add_flag("--filtration", corad_filtration, "emit the whole coradical filtration");
  add_common(corad, corad_o);

  // cf
  auto* cf = app.add_subcommand("cf", "coefficient coalgebra of a comodule");
  std::string cf_file;
  CommonOpts cf_o;
  cf->add_option("comodule", cf_file)->required();
  add_common(cf, cf_o);

  // cfdim
  auto* cfd = app.add_subcommand("cfdim", "cf of a dimension vector, with oracle comparison");
  std::string cfd_c, cfd_dv;
  bool cfd_no_oracle = false;
  CommonOpts cfd_o;
  cfd->add_option("coalgebra", cfd_c)->required();
  cfd->add_option("--dimvec", cfd_dv, "dimension vector document")->required();
  cfd->add_flag("--no-oracle", cfd_no_oracle, "skip the enumeration oracle cross-check");
  add_common(cfd, cfd_o);

  // ext-quiver
  auto* extq = app.add_subcommand("ext-quiver", "Ext quiver of a pointed coalgebra");
  std::string extq_c;
  CommonOpts extq_o;
  extq->add_option("coalgebra", extq_c)->required();
  add_common(extq, extq_o);

  // wild-witness
  auto* wild = app.add_subcommand("wild-witness", "Ext-count wildness witness scan");
  std::string wild_c, wild_expect;
  CommonOpts wild_o;
  wild->add_option("coalgebra", wild_c)->required();
  wild->add_option("--expect", wild_expect, "verify mode: witness or none")
      ->check(CLI::IsMember({"witness", "none"}));
  add_common(wild, wild_o);

  // localize
  auto* loc = app.add_subcommand("localize", "localize at a vertex-subset idempotent");
  std::string loc_c, loc_m;
  std::vector<std::string> loc_keep;
  CommonOpts loc_o;
  loc->add_option("coalgebra", loc_c)->required();
  loc->add_option("--keep", loc_keep, "kept vertex labels")->delimiter(',');
  loc->add_option("--comodule", loc_m, "also localize this comodule");
  add_common(loc, loc_o);

  // section
  auto* sect = app.add_subcommand("section", "section functor S and the TS check");
  std::string sect_c, sect_n;
  std::vector<std::string> sect_keep;
  CommonOpts sect_o;
  sect->add_option("coalgebra", sect_c)->required();
  sect->add_option("--keep", sect_keep, "kept vertex labels")->delimiter(',');
  sect->add_option("--comodule", sect_n, "comodule over eCe (local coordinates)")->required();
  add_common(sect, sect_o);

  // embed
  auto* embed = app.add_subcommand("embed", "apply a representation-embedding functor");
  std::string embed_kind, embed_file;
  std::size_t embed_trunc = 2, embed_bound = 1;
  std::vector<std::string> embed_lambdas;
  CommonOpts embed_o;
  embed->add_option("functor", embed_kind)->required()->check(
      CLI::IsMember({"F", "G", "shift", "bounded"}));
  embed->add_option("input", embed_file, "module or quiver-rep document")->required();
  embed->add_option("--trunc", embed_trunc, "truncation level for shift");
  embed->add_option("--bound", embed_bound, "arrow bound for bounded");
  embed->add_option("--lambdas", embed_lambdas,
                    "scalars: positional for shift, vertex=value for bounded")
      ->delimiter(',');
  add_common(embed, embed_o);

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "brute-force enumeration oracles");
  std::string enu_c, enu_dv, enu_kind = "comodules", enu_top, enu_socle;
  CommonOpts enu_o;
  enu->add_option("coalgebra", enu_c)->required();
  enu->add_option("--kind", enu_kind)->check(CLI::IsMember({"comodules", "extensions"}));
  enu->add_option("--dimvec", enu_dv, "dimension vector document (comodules mode)");
  enu->add_option("--top", enu_top, "top simple label (extensions mode)");
  enu->add_option("--socle", enu_socle, "socle simple label (extensions mode)");
  add_common(enu, enu_o);

  // verify-embedding
  auto* ver = app.add_subcommand("verify-embedding", "representation-embedding harness");
  std::string ver_kind;
  std::vector<std::string> ver_corpus;
  std::size_t ver_trunc = 2, ver_bound = 1;
  std::vector<std::string> ver_lambdas;
  CommonOpts ver_o;
  ver->add_option("functor", ver_kind)->required()->check(
      CLI::IsMember({"F", "G", "identity", "collapse", "shift", "bounded"}));
  ver->add_option("--corpus", ver_corpus, "module / quiver-rep documents")
      ->required()
      ->delimiter(',');
  ver->add_option("--trunc", ver_trunc, "truncation level for shift");
  ver->add_option("--bound", ver_bound, "arrow bound for bounded");
  ver->add_option("--lambdas", ver_lambdas, "scalars as for embed")->delimiter(',');
  add_common(ver, ver_o);

  // acceptance
  auto* acc = app.add_subcommand("acceptance", "run the full acceptance suite");
  CommonOpts acc_o;
  add_common(acc, acc_o);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    Json j = load_json_file(check_file);
    CheckReport rep;
    if (j.contains("delta"))
      rep = coalgebra_from_json(j).check();
    else if (j.contains("rho"))
      rep = comodule_from_json(j).check();
    else
      throw input_error("check: document is neither a coalgebra nor a comodule");
    Json out;
    out["version"] = kSchemaVersion;
    out["valid"] = rep.ok;
    out["violations"] = rep.violations;
    emit(check_o, out, rep.to_string() + "\n");
    return rep.ok ? 0 : 1;
  }
  if (pathc->parsed()) {
    Quiver q = quiver_from_json(load_json_file(pathc_file));
    Coalgebra c = path_coalgebra(q, pathc_len, Field::parse(pathc_o.field));
    emit(pathc_o, coalgebra_to_json(c), "path coalgebra with " + std::to_string(c.dim()) +
                                            " basis elements\n");
    return 0;
  }
  if (wedge->parsed()) {
    Coalgebra c = coalgebra_from_json(load_json_file(wedge_c));
    Subspace v = subspace_from_json(load_json_file(wedge_v), c.field());
    Subspace w = subspace_from_json(load_json_file(wedge_w), c.field());
    Subspace result = c.wedge(v, w);
    emit(wedge_o, subspace_with_labels(c, result),
         "wedge has dimension " + std::to_string(result.dim()) + "\n");
    return 0;
  }
  if (corad->parsed()) {
    Coalgebra c = coalgebra_from_json(load_json_file(corad_c));
    if (corad_filtration) {
      Json out;
      out["version"] = kSchemaVersion;
      Json chain = Json::array();
      for (const auto& s : c.coradical_filtration()) chain.push_back(subspace_to_json(s));
      out["filtration"] = std::move(chain);
      emit(corad_o, out, "filtration length " + std::to_string(out["filtration"].size()) + "\n");
    } else {
      Subspace c0 = c.coradical();
      emit(corad_o, subspace_with_labels(c, c0),
           "coradical has dimension " + std::to_string(c0.dim()) + "\n");
    }
    return 0;
  }
  if (cf->parsed()) {
    Comodule m = comodule_from_json(load_json_file(cf_file));
    Subspace s = m.cf();
    emit(cf_o, subspace_with_labels(*m.coalgebra(), s),
         "cf has dimension " + std::to_string(s.dim()) + "\n");
    return 0;
  }
  if (cfd->parsed()) {
    auto c = std::make_shared<Coalgebra>(coalgebra_from_json(load_json_file(cfd_c)));
    DimensionVector d = dimension_vector_from_json(load_json_file(cfd_dv));
    Budget b = make_budget(cfd_o);
    Subspace rec = cf_dimvec(*c, d, b);
    Json out = subspace_with_labels(*c, rec);
    std::string oracle_line;
    bool ok = true;
    if (!cfd_no_oracle) {
      Subspace oracle = cf_dimvec_oracle(c, d, b);
      ok = rec.contains(oracle);
      out["oracle"] = !ok ? "not-contained" : (oracle == rec ? "equal" : "strictly-smaller");
      oracle_line = ", oracle: " + out["oracle"].get<std::string>();
    }
    emit(cfd_o, out,
         "cf" + d.to_string() + " has dimension " + std::to_string(rec.dim()) + oracle_line +
             "\n");
    return ok ? 0 : 1;
  }
  if (extq->parsed()) {
    Coalgebra c = coalgebra_from_json(load_json_file(extq_c));
    ExtQuiver eq = ext_quiver(c);
    emit(extq_o, quiver_to_json(eq.to_quiver()),
         "Ext quiver with " + std::to_string(eq.vertices.size()) + " vertices\n");
    return 0;
  }
  if (wild->parsed()) {
    Coalgebra c = coalgebra_from_json(load_json_file(wild_c));
    WildnessWitness w = wildness_witness(c);
    Json out;
    out["version"] = kSchemaVersion;
    out["found"] = w.found;
    out["message"] = w.message;
    if (w.found) {
      out["kind"] = w.kind;
      out["top"] = w.top_label;
      out["socle"] = w.socle_label;
      out["basis"] = subspace_to_json(w.basis);
    }
    emit(wild_o, out, w.message + "\n");
    if (!wild_expect.empty() && (wild_expect == "witness") != w.found) return 1;
    return 0;
  }
  if (loc->parsed()) {
    auto c = std::make_shared<Coalgebra>(coalgebra_from_json(load_json_file(loc_c)));
    auto p = lift_idempotent(c, loc_keep);
    auto lc = localize_coalgebra(p);
    Json out;
    out["version"] = kSchemaVersion;
    out["ece"] = coalgebra_to_json(*lc.ece);
    out["image"] = subspace_to_json(lc.image);
    std::string text = "eCe has dimension " + std::to_string(lc.ece->dim()) + "\n";
    if (!loc_m.empty()) {
      Comodule m = comodule_from_json(load_json_file(loc_m), c);
      auto lm = localize_comodule(p, lc, m);
      out["comodule"] = comodule_to_json(lm.comodule);
      text += "Me has dimension " + std::to_string(lm.comodule.dim()) + "\n";
    }
    emit(loc_o, out, text);
    return 0;
  }
  if (sect->parsed()) {
    auto c = std::make_shared<Coalgebra>(coalgebra_from_json(load_json_file(sect_c)));
    auto p = lift_idempotent(c, sect_keep);
    auto lc = localize_coalgebra(p);
    Comodule n = comodule_from_json(load_json_file(sect_n), lc.ece);
    Comodule sn = section_S(p, lc, n);
    TSReport ts = verify_TS_identity(p, lc, {n});
    Json out;
    out["version"] = kSchemaVersion;
    out["section"] = comodule_to_json(sn);
    out["ts_identity"] = ts.ok;
    out["ts_lines"] = ts.lines;
    std::string text = "S(n) has dimension " + std::to_string(sn.dim()) + "\n";
    for (const auto& l : ts.lines) text += l + "\n";
    emit(sect_o, out, text);
    return ts.ok ? 0 : 1;
  }
  if (embed->parsed()) {
    Json in = load_json_file(embed_file);
    Field f = Field::parse(in.contains("field") ? in["field"].get<std::string>()
                                                : embed_o.field);
    Json out;
    out["version"] = kSchemaVersion;
    std::string text;
    if (embed_kind == "F") {
      QuiverRep r = functor_F(free_module_from_json(in));
      out["image"] = quiver_rep_to_json(r);
      text = "F image over " + std::to_string(r.quiver.arrows().size()) + " arrows\n";
    } else if (embed_kind == "G") {
      FreeAlgebraModule m = free_module_from_json(in);
      auto cg = functor_G_coalgebra(f, m.generator_count());
      Comodule g = functor_G(m, cg);
      out["image"] = comodule_to_json(g);
      text = "G image has dimension " + std::to_string(g.dim()) + "\n";
    } else if (embed_kind == "shift") {
      FreeAlgebraModule m = free_module_from_json(in);
      std::vector<Scalar> lambdas;
      for (const auto& l : embed_lambdas) lambdas.push_back(Scalar::parse(f, l));
      if (lambdas.empty())
        for (std::size_t i = 0; i < embed_trunc; ++i)
          lambdas.push_back(Scalar::of_int(f, static_cast<long long>(i)));
      FreeAlgebraModule s = shift_embedding(m, embed_trunc, lambdas);
      out["image"] = free_module_to_json(s);
      text = "shift image has dimension " + std::to_string(s.dim()) + "\n";
    } else {
      QuiverRep r = quiver_rep_from_json(in);
      std::map<std::string, Scalar> lambdas;
      for (const auto& l : embed_lambdas) {
        auto eq = l.find('=');
        if (eq == std::string::npos)
          throw input_error("embed bounded: lambdas are vertex=value");
        lambdas[l.substr(0, eq)] = Scalar::parse(r.field(), l.substr(eq + 1));
      }
      FreeAlgebraModule b = bounded_quiver_embedding(r, embed_bound, lambdas);
      out["image"] = free_module_to_json(b);
      text = "bounded image has dimension " + std::to_string(b.dim()) + "\n";
    }
    emit(embed_o, out, text);
    return 0;
  }
  if (enu->parsed()) {
    auto c = std::make_shared<Coalgebra>(coalgebra_from_json(load_json_file(enu_c)));
    Budget b = make_budget(enu_o);
    Json out;
    out["version"] = kSchemaVersion;
    std::string text;
    if (enu_kind == "comodules") {
      if (enu_dv.empty()) throw input_error("enumerate: --dimvec required");
      DimensionVector d = dimension_vector_from_json(load_json_file(enu_dv));
      auto classes = enumerate_comodules(c, d, b);
      out["count"] = classes.size();
      Json arr = Json::array();
      for (const auto& m : classes) {
        Json mj = comodule_to_json(m);
        mj.erase("coalgebra");  // shared context; keep the list compact
        arr.push_back(std::move(mj));
      }
      out["classes"] = std::move(arr);
      text = std::to_string(classes.size()) + " isomorphism classes\n";
    } else {
      if (enu_top.empty() || enu_socle.empty())
        throw input_error("enumerate: --top and --socle required for extensions");
      auto en = enumerate_extensions(c, enu_top, enu_socle);
      out["count"] = en.count;
      Json arr = Json::array();
      for (const auto& m : en.representatives) {
        Json mj = comodule_to_json(m);
        mj.erase("coalgebra");
        arr.push_back(std::move(mj));
      }
      out["representatives"] = std::move(arr);
      text = "Ext^1 has dimension " + std::to_string(en.count) + "\n";
    }
    emit(enu_o, out, text);
    return 0;
  }
  if (ver->parsed()) {
    Budget b = make_budget(ver_o);
    HarnessReport rep;
    if (ver_kind == "bounded") {
      std::vector<QuiverRep> corpus;
      for (const auto& f : ver_corpus)
        corpus.push_back(quiver_rep_from_json(load_json_file(f)));
      std::map<std::string, Scalar> lambdas;
      for (const auto& l : ver_lambdas) {
        auto eq = l.find('=');
        if (eq == std::string::npos)
          throw input_error("verify-embedding bounded: lambdas are vertex=value");
        lambdas[l.substr(0, eq)] =
            Scalar::parse(corpus.at(0).field(), l.substr(eq + 1));
      }
      rep = verify_bounded_embedding(corpus, ver_bound, lambdas, b);
    } else {
      std::vector<FreeAlgebraModule> corpus;
      for (const auto& f : ver_corpus)
        corpus.push_back(free_module_from_json(load_json_file(f)));
      if (ver_kind == "shift") {
        std::vector<Scalar> lambdas;
        for (const auto& l : ver_lambdas)
          lambdas.push_back(Scalar::parse(corpus.at(0).field(), l));
        if (lambdas.empty())
          for (std::size_t i = 0; i < ver_trunc; ++i)
            lambdas.push_back(Scalar::of_int(corpus.at(0).field(), static_cast<long long>(i)));
        rep = verify_shift_embedding(corpus, ver_trunc, lambdas, b);
      } else {
        EmbeddingFunctor fn = ver_kind == "F"          ? EmbeddingFunctor::F
                              : ver_kind == "G"        ? EmbeddingFunctor::G
                              : ver_kind == "identity" ? EmbeddingFunctor::identity
                                                       : EmbeddingFunctor::collapse;
        rep = verify_representation_embedding(fn, corpus, b);
      }
    }
    Json out;
    out["version"] = kSchemaVersion;
    out["ok"] = rep.ok;
    out["lines"] = rep.lines;
    emit(ver_o, out, rep.to_string() + "\n");
    return rep.ok ? 0 : 1;
  }
  if (acc->parsed()) {
    Budget b = make_budget(acc_o);
    AcceptanceReport rep = run_acceptance(b);
    if (acc_o.format == "json") {
      Json out;
      out["version"] = kSchemaVersion;
      Json arr = Json::array();
      for (const auto& cres : rep.criteria) {
        Json cj;
        cj["number"] = cres.number;
        cj["name"] = cres.name;
        cj["pass"] = cres.pass;
        cj["detail"] = cres.detail;
        arr.push_back(std::move(cj));
      }
      out["criteria"] = std::move(arr);
      out["pass"] = rep.all_pass();
      emit(acc_o, out, rep.to_string());
    } else {
      emit(acc_o, Json{}, rep.to_string());
    }
    return rep.all_pass() ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const undecided_error& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
