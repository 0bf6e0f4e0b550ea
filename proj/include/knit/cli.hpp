#ifndef KNIT_CLI_HPP_
#define KNIT_CLI_HPP_

// The knit command line: subcommands over manifest files, a result manifest
// on stdout (or --out) and reports on stderr (or --report).
//
// Exit status: 0 when every check passes, 1 when a report lists a
// violation, 2 on unreadable input or bad usage.

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "knit/enumerate.hpp"
#include "knit/manifest.hpp"

namespace knit::cli {

  namespace mf = knit::manifest;

  struct Outcome {
    std::optional<mf::Manifest>     manifest;
    std::vector<VerificationReport> reports;

    bool passed() const {
      return std::all_of(reports.begin(), reports.end(), [](auto const& r) {
        return r.passed();
      });
    }

    void add(VerificationReport r, std::string const& label = "") {
      if (!label.empty()) {
        r.subject = label + ": " + r.subject;
      }
      reports.push_back(std::move(r));
    }
  };

  inline mf::json report_json(VerificationReport const& r) {
    mf::json violations = mf::json::array();
    for (auto const& v : r.violations) {
      violations.push_back({{"identity", v.identity},
                            {"detail", v.detail},
                            {"witness", v.witness_names},
                            {"lhs", v.lhs},
                            {"rhs", v.rhs}});
    }
    return {{"subject", r.subject},
            {"passed", r.passed()},
            {"checks", r.checks},
            {"notes", r.notes},
            {"violations", std::move(violations)}};
  }

  inline std::string render_reports(std::vector<VerificationReport> const& rs,
                                    std::string const&                     format) {
    if (format == "json") {
      mf::json all = mf::json::array();
      bool     ok  = true;
      for (auto const& r : rs) {
        all.push_back(report_json(r));
        ok = ok && r.passed();
      }
      return mf::json{{"passed", ok}, {"reports", std::move(all)}}.dump(2) + "\n";
    }
    std::string out;
    for (auto const& r : rs) {
      out += to_text(r);
    }
    return out;
  }

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InvalidInput("cannot read " + path);
      }
      return std::string(std::istreambuf_iterator<char>(in), {});
    }

    inline mf::Manifest load(std::string const& path, std::set<mf::Kind> kinds) {
      try {
        return mf::expect_kind(mf::parse_manifest(read_file(path)), kinds);
      } catch (mf::ManifestError const& e) {
        throw InvalidInput(path + ": " + e.what());
      }
    }

    inline std::vector<std::string> split_list(std::string const& s) {
      std::vector<std::string> out;
      std::string              cur;
      std::istringstream       in(s);
      while (std::getline(in, cur, ',')) {
        if (!cur.empty()) {
          out.push_back(cur);
        }
      }
      return out;
    }

    //! A failing report carrying a precondition message.
    inline VerificationReport precondition(std::string const& what) {
      VerificationReport r("precondition");
      r.expect(false, {"precondition", what, {}, {}, "", ""});
      return r;
    }

    inline void check_lie_factors(Outcome& o, KnitPairLie const& p,
                                  std::string const& label) {
      o.add(verify_graded_lie(p.A()), label + " A");
      o.add(verify_graded_lie(p.B()), label + " B");
      o.add(verify_knit_pair(p), label);
    }

    inline void check_group_factors(Outcome& o, KnitPairGroup const& p,
                                    std::string const& label) {
      o.add(verify_group_table(p.A()), label + " A");
      o.add(verify_group_table(p.B()), label + " B");
      o.add(verify_knit_actions(p), label);
    }

  }  // namespace detail

  struct Options {
    std::string              out;
    std::string              report;
    std::string              report_format = "text";
    bool                     allow_invalid = false;
    std::vector<std::string> files;
    std::array<std::string, 3> positional;
    std::string              a_list;
    std::string              b_list;
    bool                     generate      = false;
    bool                     assume_homs   = false;
    std::size_t              limit         = 0;
    std::size_t              max_order     = 32;
  };

  ////////////////////////////////////////////////////////////////////////
  // Lie subcommands
  ////////////////////////////////////////////////////////////////////////

  inline Outcome lie_verify(Options const& o) {
    auto    m = detail::load(o.files.at(0),
                             {mf::Kind::graded_lie, mf::Kind::knit_pair_lie});
    Outcome r;
    if (m.kind == mf::Kind::graded_lie) {
      r.add(verify_graded_lie(mf::decode_graded_lie(m.payload)));
    } else {
      detail::check_lie_factors(r, mf::decode_knit_pair_lie(m.payload), "pair");
    }
    r.manifest = std::move(m);
    return r;
  }

  inline Outcome lie_knit(Options const& o) {
    auto p = mf::decode_knit_pair_lie(
        detail::load(o.files.at(0), {mf::Kind::knit_pair_lie}).payload);
    Outcome r;
    detail::check_lie_factors(r, p, "pair");
    bool ok = r.passed();
    if (!ok && !o.allow_invalid) {
      return r;
    }
    auto C = knit_product(p, {true});
    r.add(verify_graded_lie(C), "product");
    r.manifest = mf::make_manifest(mf::Kind::graded_lie, C, !ok);
    return r;
  }

  inline Outcome lie_decompose(Options const& o) {
    auto C = mf::decode_graded_lie(
        detail::load(o.files.at(0), {mf::Kind::graded_lie}).payload);
    auto indices = [&](std::string const& list) {
      std::vector<std::size_t> ix;
      for (auto const& nm : detail::split_list(list)) {
        ix.push_back(C.basis().index_of(nm));
      }
      return ix;
    };
    auto    a = indices(o.a_list);
    auto    b = indices(o.b_list);
    Outcome r;
    r.add(verify_graded_lie(C), "input");
    KnitPairLie p;
    try {
      p = decompose_lie(C, a, b);
    } catch (PreconditionFailed const& e) {
      r.add(detail::precondition(e.what()));
      return r;
    }
    r.add(verify_knit_pair(p), "pair");
    r.add(is_graded_lie_hom(
              knit_product(p, {true}), C, recombination_map(p, C, a, b)),
          "recombination");
    r.manifest = mf::make_manifest(mf::Kind::knit_pair_lie, p);
    return r;
  }

  inline std::tuple<KnitPairLie, KnitPairLie, LieHomQuadruple, mf::Manifest>
  load_lie_quadruple(Options const& o) {
    auto src = mf::decode_knit_pair_lie(
        detail::load(o.files.at(0), {mf::Kind::knit_pair_lie}).payload);
    auto dst = mf::decode_knit_pair_lie(
        detail::load(o.files.at(1), {mf::Kind::knit_pair_lie}).payload);
    auto m = detail::load(o.files.at(2), {mf::Kind::quadruple});
    auto q = mf::decode_lie_quadruple(m.payload, src, dst);
    return {std::move(src), std::move(dst), std::move(q), std::move(m)};
  }

  inline Outcome lie_quad_check(Options const& o) {
    auto [src, dst, q, m] = load_lie_quadruple(o);
    Outcome r;
    detail::check_lie_factors(r, src, "source");
    detail::check_lie_factors(r, dst, "target");
    r.add(check_lie_quadruple(src, dst, q));
    r.manifest = std::move(m);
    return r;
  }

  inline Outcome lie_hom_assemble(Options const& o) {
    auto [src, dst, q, m] = load_lie_quadruple(o);
    Outcome r;
    detail::check_lie_factors(r, src, "source");
    detail::check_lie_factors(r, dst, "target");
    auto Phi = assemble_lie_hom(src, dst, q);
    r.add(is_graded_lie_hom(
        knit_product(src, {true}), knit_product(dst, {true}), Phi));
    r.manifest = mf::make_manifest(mf::Kind::map, Phi);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group subcommands
  ////////////////////////////////////////////////////////////////////////

  inline Outcome group_verify(Options const& o) {
    auto    m = detail::load(o.files.at(0),
                             {mf::Kind::group, mf::Kind::knit_pair_group});
    Outcome r;
    if (m.kind == mf::Kind::group) {
      r.add(verify_group_table(mf::decode_group(m.payload)));
    } else {
      detail::check_group_factors(
          r, mf::decode_knit_pair_group(m.payload), "pair");
    }
    r.manifest = std::move(m);
    return r;
  }

  inline Outcome group_knit(Options const& o) {
    auto p = mf::decode_knit_pair_group(
        detail::load(o.files.at(0), {mf::Kind::knit_pair_group}).payload);
    Outcome r;
    detail::check_group_factors(r, p, "pair");
    bool ok = r.passed();
    if (!ok && !o.allow_invalid) {
      return r;
    }
    auto G = knit_group_product(p, {true});
    r.add(verify_group_table(G), "product");
    r.manifest = mf::make_manifest(mf::Kind::group, G, !ok);
    return r;
  }

  inline Outcome group_decompose(Options const& o) {
    auto G = mf::decode_group(
        detail::load(o.files.at(0), {mf::Kind::group}).payload);
    auto select = [&](std::string const& list) {
      std::vector<Index> ix;
      for (auto const& nm : detail::split_list(list)) {
        ix.push_back(G.index_of(nm));
      }
      if (o.generate) {
        ix = generated_subgroup(G, ix);
      }
      return SubgroupSelection(G, std::move(ix));
    };
    auto    A = select(o.a_list);
    auto    B = select(o.b_list);
    Outcome r;
    r.add(verify_group_table(G), "input");
    r.add(is_subgroup(A), "A");
    r.add(is_subgroup(B), "B");
    if (!r.passed()) {
      return r;
    }
    KnitPairGroup p;
    try {
      p = decompose_group(G, A, B);
    } catch (PreconditionFailed const& e) {
      r.add(detail::precondition(e.what()));
      return r;
    }
    r.add(verify_knit_actions(p), "pair");
    auto P   = knit_group_product(p, {true});
    auto fac = factorization_map(P, G, A, B);
    r.add(is_group_hom(fac), "recombination");
    VerificationReport bij("recombination bijectivity");
    bij.expect(fac.is_bijective(),
               {"bijective", "(a, b) -> ab is a bijection", {}, {}, "", ""});
    r.add(std::move(bij));
    r.manifest = mf::make_manifest(mf::Kind::knit_pair_group, p);
    return r;
  }

  inline std::tuple<KnitPairGroup, KnitPairGroup, GroupHomQuadruple, mf::Manifest>
  load_group_quadruple(Options const& o) {
    auto src = mf::decode_knit_pair_group(
        detail::load(o.files.at(0), {mf::Kind::knit_pair_group}).payload);
    auto dst = mf::decode_knit_pair_group(
        detail::load(o.files.at(1), {mf::Kind::knit_pair_group}).payload);
    auto m = detail::load(o.files.at(2), {mf::Kind::quadruple});
    auto q = mf::decode_group_quadruple(m.payload, src, dst);
    return {std::move(src), std::move(dst), std::move(q), std::move(m)};
  }

  inline Outcome group_quad_check(Options const& o) {
    auto [src, dst, q, m] = load_group_quadruple(o);
    Outcome r;
    detail::check_group_factors(r, src, "source");
    detail::check_group_factors(r, dst, "target");
    try {
      r.add(check_group_quadruple(src, dst, q, o.assume_homs));
    } catch (PreconditionFailed const& e) {
      r.add(detail::precondition(e.what()));
    }
    r.manifest = std::move(m);
    return r;
  }

  inline Outcome group_hom_assemble(Options const& o) {
    auto [src, dst, q, m] = load_group_quadruple(o);
    Outcome r;
    detail::check_group_factors(r, src, "source");
    detail::check_group_factors(r, dst, "target");
    auto [Phi, rep] = assemble_group_hom(src, dst, q);
    r.add(std::move(rep));
    r.manifest = mf::make_manifest(mf::Kind::map, Phi);
    return r;
  }

  inline Outcome group_enumerate(Options const& o) {
    auto A = mf::decode_group(
        detail::load(o.files.at(0), {mf::Kind::group}).payload);
    auto B = mf::decode_group(
        detail::load(o.files.at(1), {mf::Kind::group}).payload);
    Outcome r;
    r.add(verify_group_table(A), "A");
    r.add(verify_group_table(B), "B");
    if (!r.passed()) {
      return r;
    }
    auto res = enumerate_knit_pairs(A, B, {o.limit, o.max_order});

    mf::EnumerationDocument doc{A, B, res.pairs, res.total, res.truncated, {}};
    VerificationReport      all("enumerated pairs");
    std::vector<FiniteGroup> reps;
    for (std::size_t k = 0; k < res.pairs.size(); ++k) {
      all.absorb(verify_knit_actions(res.pairs[k]));
      auto P     = knit_group_product(res.pairs[k], {true});
      bool found = false;
      for (std::size_t c = 0; c < reps.size() && !found; ++c) {
        if (are_isomorphic(reps[c], P)) {
          doc.product_classes[c].push_back(k);
          found = true;
        }
      }
      if (!found) {
        reps.push_back(std::move(P));
        doc.product_classes.push_back({k});
      }
    }
    all.notes.push_back(std::to_string(res.total) + " pairs found, "
                        + std::to_string(res.pairs.size()) + " listed, "
                        + std::to_string(doc.product_classes.size())
                        + " product isomorphism classes among those listed");
    r.add(std::move(all));
    r.manifest = mf::make_manifest(mf::Kind::enumeration, doc);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  inline void write_to(std::string const& path,
                       std::string const& text,
                       std::ostream&      fallback) {
    if (path.empty() || path == "-") {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
      throw InvalidInput("cannot write " + path);
    }
  }

  //! Runs one invocation; args excludes the program name.
  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    Options  o;
    CLI::App app{"Knit products of graded Lie algebras and finite groups",
                 "knit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    using Handler = Outcome (*)(Options const&);
    Handler handler = nullptr;

    auto common = [&](CLI::App* c) {
      c->add_option("--out", o.out, "Write the result manifest here");
      c->add_option("--report", o.report, "Write the report here");
      c->add_option("--report-format", o.report_format, "Report format")
          ->check(CLI::IsMember({"text", "json"}));
      c->add_flag("--allow-invalid",
                  o.allow_invalid,
                  "Build products of unverified pairs, marking the output");
    };
    auto sub = [&](CLI::App*          parent,
                   std::string const& name,
                   std::string const& help,
                   std::vector<std::string> const& files,
                   Handler            h) {
      auto* c = parent->add_subcommand(name, help);
      common(c);
      for (std::size_t k = 0; k < files.size(); ++k) {
        c->add_option(files[k], o.positional.at(k), files[k])->required();
      }
      c->callback([&handler, h] { handler = h; });
      return c;
    };
    auto* lie = app.add_subcommand("lie", "Graded Lie algebras");
    lie->require_subcommand(1);
    sub(lie, "verify", "Verify an algebra or a knitted pair", {"file"}, lie_verify);
    sub(lie, "knit", "Build the knit product of a pair", {"pair"}, lie_knit);
    auto* ld = sub(lie,
                   "decompose",
                   "Split an algebra along two complementary subalgebras",
                   {"algebra"},
                   lie_decompose);
    ld->add_option("--a", o.a_list, "Basis elements of A, comma separated")
        ->required();
    ld->add_option("--b", o.b_list, "Basis elements of B, comma separated")
        ->required();
    sub(lie,
        "quad-check",
        "Check the homomorphism equations for a quadruple",
        {"source", "target", "quadruple"},
        lie_quad_check);
    sub(lie,
        "hom-assemble",
        "Assemble a quadruple into a map of knit products",
        {"source", "target", "quadruple"},
        lie_hom_assemble);

    auto* grp = app.add_subcommand("group", "Finite groups");
    grp->require_subcommand(1);
    sub(grp, "verify", "Verify a group or a knitted pair", {"file"}, group_verify);
    sub(grp, "knit", "Build the knit product of a pair", {"pair"}, group_knit);
    auto* gd = sub(grp,
                   "decompose",
                   "Factor a group along two subgroups",
                   {"group"},
                   group_decompose);
    gd->add_option("--a", o.a_list, "Elements of A, comma separated")->required();
    gd->add_option("--b", o.b_list, "Elements of B, comma separated")->required();
    gd->add_flag("--generate", o.generate, "Treat --a and --b as generators");
    auto* gq = sub(grp,
                   "quad-check",
                   "Check the homomorphism equations for a quadruple",
                   {"source", "target", "quadruple"},
                   group_quad_check);
    gq->add_flag("--assume-homs",
                 o.assume_homs,
                 "Use the reduced equation (g') for f, g homomorphisms");
    sub(grp,
        "hom-assemble",
        "Assemble a quadruple into a map of knit products",
        {"source", "target", "quadruple"},
        group_hom_assemble);
    auto* ge = sub(grp,
                   "enumerate",
                   "List all knitted pairs of actions for two groups",
                   {"A", "B"},
                   group_enumerate);
    ge->add_option("--limit", o.limit, "Maximum number of pairs listed (0: all)");
    ge->add_option("--max-order", o.max_order, "Refuse when |A||B| exceeds this");

    try {
      std::vector<std::string> rev(args.rbegin(), args.rend());
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    for (auto const& f : o.positional) {
      if (!f.empty()) {
        o.files.push_back(f);
      }
    }

    Outcome result;
    try {
      result = handler(o);
    } catch (VerificationFailed const& e) {
      result.reports = {e.report()};
    } catch (PreconditionFailed const& e) {
      result.reports = {detail::precondition(e.what())};
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }

    try {
      if (result.manifest) {
        write_to(o.out, mf::emit_manifest(*result.manifest), out);
      }
      write_to(o.report, render_reports(result.reports, o.report_format), err);
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    return result.passed() ? 0 : 1;
  }

}  // namespace knit::cli

#endif  // KNIT_CLI_HPP_
