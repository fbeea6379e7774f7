#include "cli.hpp"

#include <fstream>   // for ifstream
#include <iomanip>   // for setw
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <sstream>   // for ostringstream

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "agcheck/cayley.hpp"
#include "agcheck/corpus.hpp"
#include "agcheck/enumerate.hpp"
#include "agcheck/error.hpp"
#include "agcheck/fuzzy.hpp"
#include "agcheck/ideals.hpp"
#include "agcheck/io.hpp"
#include "agcheck/verify.hpp"

namespace agcheck::cli {

  namespace {

    using json = nlohmann::ordered_json;

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot read " + path);
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    Groupoid load_table(std::string const& path) {
      try {
        return parse_table(read_file(path));
      } catch (ParseError const& e) {
        throw Error(path + ": " + e.what());
      }
    }

    std::vector<std::string> split_list(std::string const& text) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : text) {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) {
            out.push_back(cur);
          }
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) {
        out.push_back(cur);
      }
      return out;
    }

    std::vector<std::string> statement_list(std::string const& text) {
      std::vector<std::string> ids;
      for (auto const& id : split_list(text)) {
        if (id == "all") {
          for (auto const& s : statements()) {
            if (s.id != "C4.9") {
              ids.emplace_back(s.id);
            }
          }
        } else if (!find_statement(id)) {
          throw InvalidArgument("unknown statement id \"" + id + "\"");
        } else {
          ids.push_back(id);
        }
      }
      if (ids.empty()) {
        throw InvalidArgument("no statements given");
      }
      return ids;
    }

    IdealKind kind_arg(std::string const& name) {
      auto k = parse_ideal_kind(name);
      if (!k) {
        throw InvalidArgument("unknown ideal kind \"" + name + "\"");
      }
      return *k;
    }

    element_type element_arg(Groupoid const& g, std::string const& label) {
      auto i = g.index_of(label);
      if (!i) {
        throw InvalidArgument("unknown element \"" + label + "\"");
      }
      return *i;
    }

    ElementSubset subset_arg(Groupoid const& g, std::string text) {
      std::erase(text, '{');
      std::erase(text, '}');
      ElementSubset s(g.order());
      for (auto const& l : split_list(text)) {
        s.insert(element_arg(g, l));
      }
      return s;
    }

    json table_json(Groupoid const& g) {
      json rows = json::array();
      for (element_type a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (element_type b = 0; b < g.order(); ++b) {
          row.push_back(g.label(g(a, b)));
        }
        rows.push_back(row);
      }
      return {{"order", g.order()}, {"labels", g.labels()}, {"rows", rows}};
    }

    json subset_json(Groupoid const& g, ElementSubset const& s) {
      json out = json::array();
      s.for_each([&](element_type x) { out.push_back(g.label(x)); });
      return out;
    }

    json tuple_json(Groupoid const& g, Tuple const& t) {
      json out = json::array();
      for (auto x : t) {
        out.push_back(g.label(x));
      }
      return out;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    struct Common {
      bool json_output = false;
    };

    ////////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////////

    int cmd_check(Common const& c, std::string const& path, std::ostream& out) {
      Groupoid const g   = load_table(path);
      LawReport const r  = check_identity_laws(g);
      auto const      ids = find_left_identities(g);
      auto const      ir  = is_intra_regular(g);
      std::pair<char const*, LawCheck const*> const laws[]
          = {{"left_invertive", &r.left_invertive},
             {"medial", &r.medial},
             {"paramedial", &r.paramedial},
             {"law4", &r.law4},
             {"law5", &r.law5},
             {"associative", &r.associative},
             {"commutative", &r.commutative},
             {"surjective", &r.surjective}};
      if (c.json_output) {
        json doc{{"command", "check"}, {"table", table_json(g)}};
        json jl  = json::object();
        for (auto const& [name, law] : laws) {
          json e{{"holds", law->holds}, {"tuples_checked", law->tuples_checked}};
          if (law->counterexample) {
            e["counterexample"] = tuple_json(g, *law->counterexample);
          }
          jl[name] = e;
        }
        doc["laws"]           = jl;
        doc["left_identities"] = subset_json(g, ids);
        doc["unitary"]        = is_unitary(g);
        doc["intra_regular"]  = ir.holds;
        if (ir.failing_element) {
          doc["failing_element"] = g.label(*ir.failing_element);
        }
        out << doc.dump(2) << '\n';
      } else {
        out << "order " << g.order() << '\n';
        for (auto const& [name, law] : laws) {
          out << std::left << std::setw(16) << name << (law->holds ? "holds" : "fails")
              << "  (" << law->tuples_checked << " checked)";
          if (law->counterexample) {
            out << "  counterexample " << format_tuple(g, *law->counterexample);
          }
          out << '\n';
        }
        out << "left identities " << format_subset(g, ids) << '\n';
        out << "unitary         " << yes_no(is_unitary(g)) << '\n';
        out << "intra-regular   " << yes_no(ir.holds);
        if (ir.failing_element) {
          out << "  (no witness for " << g.label(*ir.failing_element) << ")";
        }
        out << '\n';
      }
      return r.left_invertive.holds ? exit_ok : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // ideals
    ////////////////////////////////////////////////////////////////////////

    int cmd_ideals(Common const&                     c,
                   std::string const&                path,
                   std::string const&                kind_name,
                   bool                              semiprime_only,
                   std::optional<std::string> const& subset,
                   std::ostream&                     out) {
      Groupoid const  g    = load_table(path);
      IdealKind const kind = kind_arg(kind_name);
      if (subset) {
        ElementSubset const s = subset_arg(g, *subset);
        Verdict const       v = is_ideal(g, s, kind);
        if (c.json_output) {
          json doc{{"command", "ideals"},
                   {"kind", to_string(kind)},
                   {"subset", subset_json(g, s)},
                   {"holds", v.holds}};
          if (v.counterexample) {
            doc["counterexample"] = tuple_json(g, *v.counterexample);
          }
          out << doc.dump(2) << '\n';
        } else {
          out << format_subset(g, s) << ' ' << to_string(kind) << ": "
              << (v.holds ? "holds" : "fails");
          if (v.counterexample) {
            out << "  counterexample " << format_tuple(g, *v.counterexample);
          }
          out << '\n';
        }
        return v.holds ? exit_ok : exit_failed;
      }
      auto const all = enumerate_ideals(g, kind, semiprime_only);
      if (c.json_output) {
        json list = json::array();
        for (auto const& s : all) {
          list.push_back(subset_json(g, s));
        }
        out << json{{"command", "ideals"},
                    {"kind", to_string(kind)},
                    {"semiprime_only", semiprime_only},
                    {"count", all.size()},
                    {"ideals", list}}
                   .dump(2)
            << '\n';
      } else {
        for (auto const& s : all) {
          out << format_subset(g, s) << '\n';
        }
        out << all.size() << ' ' << (semiprime_only ? "semiprime " : "")
            << to_string(kind) << " ideal(s)\n";
      }
      return exit_ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // witness
    ////////////////////////////////////////////////////////////////////////

    int cmd_witness(Common const&                     c,
                    std::string const&                path,
                    std::optional<std::string> const& element,
                    bool                              lemma34,
                    std::ostream&                     out) {
      Groupoid const            g = load_table(path);
      std::vector<element_type> elems;
      if (element) {
        elems.push_back(element_arg(g, *element));
      } else {
        for (element_type a = 0; a < g.order(); ++a) {
          elems.push_back(a);
        }
      }
      bool ok   = true;
      json list = json::array();
      for (auto a : elems) {
        auto const w = intra_regular_witness(g, a);
        ok           = ok && w.has_value();
        json e{{"element", g.label(a)}};
        if (w) {
          e["x"] = g.label(w->first);
          e["y"] = g.label(w->second);
        } else {
          e["witness"] = nullptr;
        }
        if (!c.json_output) {
          out << g.label(a) << ": ";
          if (w) {
            out << g.label(a) << " = (" << g.label(w->first) << " * "
                << g.label(a) << "^2) * " << g.label(w->second) << '\n';
          } else {
            out << "not intra-regular\n";
          }
        }
        if (lemma34 && w) {
          auto const ws = lemma34_witnesses(g, a);
          json       jc = json::object();
          for (auto clause : lemma34_clauses) {
            auto const& cw = ws[clause];
            ok             = ok && cw.has_value();
            jc[std::string(to_string(clause))]
                = cw ? tuple_json(g, *cw) : json(nullptr);
            if (!c.json_output) {
              out << "  " << std::left << std::setw(7) << to_string(clause)
                  << std::setw(24) << lemma34_identity(clause)
                  << (cw ? format_tuple(g, *cw) : std::string("no witness"))
                  << '\n';
            }
          }
          e["lemma34"] = jc;
        }
        list.push_back(e);
      }
      if (c.json_output) {
        out << json{{"command", "witness"}, {"all_found", ok}, {"elements", list}}
                   .dump(2)
            << '\n';
      }
      return ok ? exit_ok : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // fuzzy
    ////////////////////////////////////////////////////////////////////////

    int cmd_fuzzy(Common const&      c,
                  std::string const& table_path,
                  std::string const& fuzzy_path,
                  std::string const& k_text,
                  std::string const& kind_name,
                  bool               levels,
                  bool               pointwise,
                  std::ostream&      out) {
      Groupoid const g = load_table(table_path);
      FuzzySubset    f;
      try {
        f = parse_fuzzy(read_file(fuzzy_path), g);
      } catch (ParseError const& e) {
        throw Error(fuzzy_path + ": " + e.what());
      }
      KParam const    k    = KParam::parse(k_text);
      IdealKind const kind = kind_arg(kind_name);
      Verdict const   v    = is_fuzzy_ideal(g, f, k, kind);
      bool            ok   = v.holds;

      json doc{{"command", "fuzzy"},
               {"kind", to_string(kind)},
               {"k", k.str()},
               {"f", f.str()},
               {"holds", v.holds}};
      if (v.counterexample) {
        doc["counterexample"] = tuple_json(g, *v.counterexample);
      }
      std::ostringstream text;
      text << "fuzzy " << to_string(kind) << " ideal, k=" << k.str() << ": "
           << (v.holds ? "holds" : "fails");
      if (v.counterexample) {
        text << "  counterexample " << format_tuple(g, *v.counterexample);
      }
      text << '\n';
      if (pointwise) {
        bool const p     = is_fuzzy_ideal_pointwise(g, f, k, kind);
        ok               = ok && p == v.holds;
        doc["pointwise"] = {{"holds", p}, {"agrees", p == v.holds}};
        text << "fuzzy-point form: " << (p ? "holds" : "fails")
             << (p == v.holds ? "" : "  (DISAGREES)") << '\n';
      }
      if (levels) {
        auto const r = level_characterization_check(g, f, k, kind);
        ok           = ok && r.agree;
        json jl      = json::array();
        for (auto const& e : r.levels) {
          jl.push_back({{"t", e.threshold.str()},
                        {"level", subset_json(g, e.level)},
                        {"is_ideal", e.is_ideal}});
          text << "  U(f," << e.threshold.str() << ") = " << format_subset(g, e.level)
               << (e.is_ideal ? "  ideal" : "  not an ideal") << '\n';
        }
        doc["levels"] = {{"all_levels_ideal", r.levels_ok},
                         {"agrees", r.agree},
                         {"levels", jl}};
        text << "level characterization " << (r.agree ? "agrees" : "DISAGREES")
             << '\n';
      }
      out << (c.json_output ? doc.dump(2) + "\n" : text.str());
      return ok ? exit_ok : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify / corpus
    ////////////////////////////////////////////////////////////////////////

    struct FuzzyArgs {
      std::size_t   samples = 100;
      std::uint64_t seed    = 1;
      std::string   k_values = "0,1/2,9/10";

      FuzzyConfig config() const {
        FuzzyConfig cfg;
        cfg.samples = samples;
        cfg.seed    = seed;
        cfg.k_values.clear();
        for (auto const& k : split_list(k_values)) {
          cfg.k_values.push_back(KParam::parse(k));
        }
        return cfg;
      }
    };

    json config_json(FuzzyConfig const& cfg) {
      json ks = json::array();
      for (auto const& k : cfg.k_values) {
        ks.push_back(k.str());
      }
      return {{"samples", cfg.samples}, {"seed", cfg.seed}, {"k_values", ks}};
    }

    json report_json(ConditionReport const& r) {
      json conds = json::array();
      for (auto const& e : r.conditions) {
        json j{{"label", e.label},
               {"verdict", to_string(e.verdict)},
               {"decisive", e.decisive},
               {"sampled", e.sampled},
               {"informational", e.informational}};
        if (e.witness) {
          j["witness"] = *e.witness;
        }
        if (e.counterexample) {
          j["counterexample"] = *e.counterexample;
        }
        if (e.sample_size) {
          j["sample_size"] = *e.sample_size;
        }
        conds.push_back(j);
      }
      json out{{"statement", r.statement_id},
               {"title", r.title},
               {"shape", to_string(r.shape)},
               {"applicable", r.applicable}};
      if (!r.note.empty()) {
        out["note"] = r.note;
      }
      out["agreement"]  = r.agreement;
      out["conditions"] = conds;
      return out;
    }

    void report_text(ConditionReport const& r, std::ostream& out) {
      out << r.statement_id << "  " << r.title << "  [" << to_string(r.shape)
          << "]\n";
      if (!r.applicable) {
        out << "  not applicable: " << r.note << '\n';
        return;
      }
      for (auto const& e : r.conditions) {
        out << "  " << std::left << std::setw(16) << to_string(e.verdict)
            << e.label;
        if (e.informational) {
          out << "  (informational)";
        }
        if (e.sample_size) {
          out << "  [" << *e.sample_size << " samples]";
        }
        out << '\n';
        if (e.counterexample) {
          out << "      counterexample: " << *e.counterexample << '\n';
        }
        if (e.witness) {
          out << "      witnesses: " << *e.witness << '\n';
        }
      }
      out << "  agreement: " << yes_no(r.agreement) << '\n';
    }

    int cmd_verify(Common const&      c,
                   std::string const& path,
                   std::string const& list,
                   FuzzyArgs const&   fa,
                   std::ostream&      out) {
      Groupoid const g   = load_table(path);
      auto const     ids = statement_list(list);
      auto const     cfg = fa.config();
      bool           ok  = true;
      json           reports = json::array();
      for (auto const& id : ids) {
        auto const r = check_statement(g, id, cfg);
        ok           = ok && r.agreement;
        if (c.json_output) {
          reports.push_back(report_json(r));
        } else {
          report_text(r, out);
        }
      }
      if (c.json_output) {
        out << json{{"command", "verify"},
                    {"table", table_json(g)},
                    {"fuzzy", config_json(cfg)},
                    {"all_agree", ok},
                    {"reports", reports}}
                   .dump(2)
            << '\n';
      }
      return ok ? exit_ok : exit_failed;
    }

    int cmd_corpus(Common const&      c,
                   std::size_t        order_max,
                   std::string const& list,
                   FuzzyArgs const&   fa,
                   std::size_t        threads,
                   std::ostream&      out) {
      auto const ids = statement_list(list);
      auto const cfg = fa.config();
      auto const s   = corpus_verify(order_max, ids, cfg, threads);
      if (c.json_output) {
        json vs = json::array();
        for (auto const& v : s.violations) {
          vs.push_back({{"table", table_json(v.groupoid)},
                        {"report", report_json(v.report)}});
        }
        out << json{{"command", "corpus"},
                    {"order_max", order_max},
                    {"statements", ids},
                    {"fuzzy", config_json(cfg)},
                    {"groupoids_checked", s.groupoids_checked},
                    {"checks", s.checks},
                    {"agreements", s.agreements},
                    {"violations", vs}}
                   .dump(2)
            << '\n';
      } else {
        out << "groupoids checked " << s.groupoids_checked << '\n'
            << "checks            " << s.checks << '\n'
            << "agreements        " << s.agreements << '\n'
            << "violations        " << s.violations.size() << '\n';
        for (auto const& v : s.violations) {
          out << '\n' << serialize_table(v.groupoid);
          report_text(v.report, out);
        }
      }
      return s.violations.empty() ? exit_ok : exit_failed;
    }

    ////////////////////////////////////////////////////////////////////////
    // enum / group2ag
    ////////////////////////////////////////////////////////////////////////

    int cmd_enum(Common const&                     c,
                 SearchConstraints const&          sc,
                 bool                              count_only,
                 std::optional<std::string> const& resume,
                 std::size_t                       threads,
                 bool                              allow_order_6,
                 std::ostream&                     out) {
      SearchOptions opts;
      opts.threads       = threads;
      opts.allow_order_6 = allow_order_6;
      opts.checkpoint    = resume;
      json          list = json::array();
      std::uint64_t count;
      if (count_only) {
        count = count_ag(sc, opts);
      } else {
        count = for_each_ag(sc, opts, [&](Groupoid const& g) {
          if (c.json_output) {
            list.push_back(table_json(g));
          } else {
            out << serialize_table(g) << '\n';
          }
        });
      }
      if (c.json_output) {
        json doc{{"command", "enum"},
                 {"order", sc.order},
                 {"unitary", sc.require_unitary},
                 {"intra_regular", sc.require_intra_regular},
                 {"up_to_isomorphism", sc.up_to_isomorphism},
                 {"count", count}};
        if (!count_only) {
          doc["groupoids"] = list;
        }
        out << doc.dump(2) << '\n';
      } else {
        out << "count " << count << '\n';
      }
      return exit_ok;
    }

    int cmd_group2ag(Common const& c, std::string const& path, std::ostream& out) {
      Groupoid const g = from_abelian_group(load_table(path));
      bool const     assoc = is_associative(g);
      if (c.json_output) {
        out << json{{"command", "group2ag"},
                    {"table", table_json(g)},
                    {"associative", assoc},
                    {"unitary", is_unitary(g)},
                    {"intra_regular", is_intra_regular(g).holds}}
                   .dump(2)
            << '\n';
      } else {
        out << serialize_table(g);
        out << "# associative: " << yes_no(assoc) << '\n';
      }
      return exit_ok;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks Abel-Grassmann's groupoids, their ideals and fuzzy ideals",
                 "agcheck"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json_output, "Emit one JSON document");

    std::string table, fuzzy_file, kind = "two-sided", k_text = "0", list;
    std::optional<std::string> element, subset, resume;
    bool        semiprime_only = false, lemma34 = false, levels = false,
         pointwise = false, count_only = false, allow6 = false;
    FuzzyArgs         fa;
    SearchConstraints sc;
    std::size_t       order_max = 4, threads = 1;

    auto* check = app.add_subcommand("check", "Report the defining laws");
    check->add_option("table", table, "Table file")->required();

    auto* ideals = app.add_subcommand("ideals", "List or check ideals");
    ideals->add_option("table", table, "Table file")->required();
    ideals->add_option("--kind", kind, "Ideal kind")->required();
    ideals->add_flag("--semiprime-only", semiprime_only);
    ideals->add_option("--subset", subset, "Check one subset, e.g. 1,2");

    auto* witness = app.add_subcommand("witness", "Intra-regularity witnesses");
    witness->add_option("table", table, "Table file")->required();
    witness->add_option("--element", element, "Element label");
    witness->add_flag("--lemma34", lemma34, "Also find the eight identity witnesses");

    auto* fuzzy = app.add_subcommand("fuzzy", "Check a fuzzy subset");
    fuzzy->add_option("table", table, "Table file")->required();
    fuzzy->add_option("fuzzy", fuzzy_file, "Fuzzy subset file")->required();
    fuzzy->add_option("-k,--k", k_text, "k in [0,1) as p/q");
    fuzzy->add_option("--kind", kind, "Ideal kind")->required();
    fuzzy->add_flag("--levels", levels);
    fuzzy->add_flag("--pointwise", pointwise);

    auto add_fuzzy_args = [&](CLI::App* sub) {
      sub->add_option("--fuzzy-samples", fa.samples, "Samples per k value");
      sub->add_option("--seed", fa.seed);
      sub->add_option("--k-values", fa.k_values, "Comma-separated k values");
    };
    auto* verify = app.add_subcommand("verify", "Check statements on one table");
    verify->add_option("table", table, "Table file")->required();
    verify->add_option("--statements", list, "Comma-separated ids or all")
        ->required();
    add_fuzzy_args(verify);

    auto* corpus = app.add_subcommand("corpus", "Check statements on all small AG-groupoids");
    corpus->add_option("--order-max", order_max);
    corpus->add_option("--statements", list, "Comma-separated ids or all")
        ->required();
    corpus->add_option("--threads", threads);
    add_fuzzy_args(corpus);

    auto* en = app.add_subcommand("enum", "Enumerate AG-groupoids");
    en->add_option("--order", sc.order)->required();
    en->add_flag("--unitary", sc.require_unitary);
    en->add_flag("--intra-regular", sc.require_intra_regular);
    en->add_flag("--up-to-iso", sc.up_to_isomorphism);
    en->add_flag("--count-only", count_only);
    en->add_option("--resume", resume, "Checkpoint file");
    en->add_option("--threads", threads);
    en->add_flag("--allow-order-6", allow6);

    auto* g2a = app.add_subcommand("group2ag", "AG-groupoid x^-1 y of an abelian group");
    g2a->add_option("table", table, "Group table file")->required();

    for (auto* sub : app.get_subcommands({})) {
      sub->fallthrough();
    }

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
      app.parse(argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "agcheck: " << e.what() << '\n';
      return exit_invalid;
    }

    try {
      if (*check) {
        return cmd_check(common, table, out);
      }
      if (*ideals) {
        return cmd_ideals(common, table, kind, semiprime_only, subset, out);
      }
      if (*witness) {
        return cmd_witness(common, table, element, lemma34, out);
      }
      if (*fuzzy) {
        return cmd_fuzzy(common, table, fuzzy_file, k_text, kind, levels, pointwise, out);
      }
      if (*verify) {
        return cmd_verify(common, table, list, fa, out);
      }
      if (*corpus) {
        return cmd_corpus(common, order_max, list, fa, threads, out);
      }
      if (*en) {
        return cmd_enum(common, sc, count_only, resume, threads, allow6, out);
      }
      if (*g2a) {
        return cmd_group2ag(common, table, out);
      }
    } catch (Error const& e) {
      err << "agcheck: " << e.what() << '\n';
      return exit_invalid;
    }
    return exit_invalid;
  }

}  // namespace agcheck::cli
