// lsf: exact-arithmetic toolkit for twist families, Seifert fibered
// L-spaces, positive braid censuses and surgery homology.

#include <CLI11.hpp>
#include <functional>
#include <cstdlib>
#include <iostream>

#include "io.hpp"
#include "lsf/twistalex.hpp"

namespace {

using lsf::io::json;

int default_jobs() {
  if (const char* env = std::getenv("LSF_JOBS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

void emit(const json& out, const std::string& format) {
  if (format == "table") {
    // flat key: value lines; arrays render on one line each
    for (const auto& [key, value] : out.items())
      std::cout << key << ": " << value.dump() << "\n";
  } else {
    std::cout << out.dump() << "\n";
  }
}

json verdict_json(const lsf::seifert::LSpaceResult& r) {
  json out;
  out["verdict"] = lsf::seifert::to_string(r.verdict);
  out["certificate"] = r.certificate;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-space twist family toolkit"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  int jobs = default_jobs();

  int exit_code = 0;
  auto run = [&](auto&& fn) {
    return [&, fn]() {
      try {
        fn();
      } catch (const lsf::io::ParseFailure& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        exit_code = 2;
      } catch (const lsf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        exit_code = 3;
      }
    };
  };

  // ------------------------------------------------------------- seifert
  auto* seifert_cmd = app.add_subcommand("seifert", "Seifert fibered spaces over S^2");
  seifert_cmd->require_subcommand(1);
  {
    auto* c = seifert_cmd->add_subcommand("lspace", "L-space decision with certificate");
    auto form = std::make_shared<std::string>();
    c->add_option("--form", *form, "\"b; r1,r2,...\" (inf for a degenerate fiber)")->required();
    c->callback(run([form, &format]() {
      emit(verdict_json(lsf::seifert::is_lspace(lsf::io::parse_form(*form))), format);
    }));
  }
  {
    auto* c = seifert_cmd->add_subcommand("h1", "first homology order (0 = infinite)");
    auto form = std::make_shared<std::string>();
    c->add_option("--form", *form)->required();
    c->callback(run([form, &format]() {
      json out;
      out["order"] = lsf::io::int_to_json(lsf::seifert::h1_order(lsf::io::parse_form(*form)));
      emit(out, format);
    }));
  }
  {
    auto* c = seifert_cmd->add_subcommand("family", "window sweep of a one-parameter family");
    auto fam = std::make_shared<std::string>();
    auto window = std::make_shared<std::string>();
    c->add_option("--family", *fam, "\"b; r1,...,r_{s-1}; t,u,v,w\"")->required();
    c->add_option("--window", *window, "\"min:max\"")->required();
    c->add_option("--jobs", jobs, "worker threads");
    c->callback(run([fam, window, &jobs, &format]() {
      const auto [lo, hi] = lsf::io::parse_window(*window);
      const auto rep =
          lsf::seifert::classify_family(lsf::io::parse_family(*fam), lo, hi, jobs);
      json out;
      json runs = json::array();
      for (const auto& r : rep.runs)
        runs.push_back(json::array({r.lo, r.hi, lsf::seifert::to_string(r.verdict)}));
      out["runs"] = runs;
      out["degenerate"] = rep.degenerate_members;
      out["limit"] = lsf::seifert::to_string(rep.limit);
      out["leftTail"] = lsf::seifert::to_string(rep.left_tail);
      out["rightTail"] = lsf::seifert::to_string(rep.right_tail);
      out["leftStable"] = rep.left_stable;
      out["rightStable"] = rep.right_stable;
      out["leftThreshold"] =
          rep.left_threshold ? json(*rep.left_threshold) : json(nullptr);
      out["rightThreshold"] =
          rep.right_threshold ? json(*rep.right_threshold) : json(nullptr);
      out["dichotomy"] = rep.dichotomy ? json(*rep.dichotomy) : json(nullptr);
      out["unstableWindow"] = rep.unstable_window;
      emit(out, format);
    }));
  }

  // ---------------------------------------------------------------- alex
  auto* alex_cmd = app.add_subcommand("alex", "Alexander polynomials of twist families");
  alex_cmd->require_subcommand(1);
  auto poly2_opt = [](CLI::App* c, std::shared_ptr<std::string> s) {
    c->add_option("--poly2", *s, "two-variable polynomial JSON or @file")->required();
  };
  {
    auto* c = alex_cmd->add_subcommand("verify", "Torres conditions T1-T3 and parity");
    auto p = std::make_shared<std::string>();
    auto omega = std::make_shared<std::int64_t>(0);
    auto dc = std::make_shared<std::string>();
    auto dk = std::make_shared<std::string>();
    poly2_opt(c, p);
    c->add_option("--omega", *omega, "linking number")->required();
    c->add_option("--delta-c", *dc, "Alexander polynomial of c (default 1)");
    c->add_option("--delta-k", *dk, "Alexander polynomial of K (optional check)");
    c->callback(run([p, omega, dc, dk, &format]() {
      const auto delta2 = lsf::io::parse_poly2(*p);
      const auto delta_c =
          dc->empty() ? lsf::KnotPoly1::one() : lsf::io::parse_poly1(*dc);
      std::optional<lsf::KnotPoly1> delta_k;
      if (!dk->empty()) delta_k = lsf::io::parse_poly1(*dk);
      const auto rep = lsf::twistalex::torres_verify(delta2, *omega, delta_c, delta_k);
      json out;
      out["t1"] = rep.t1;
      out["t2"] = rep.t2;
      out["t3"] = rep.t3;
      out["parity"] = rep.parity;
      out["pass"] = rep.pass();
      if (rep.t1) out["witness"] = json::array({rep.witness_m, rep.witness_n});
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("twist", "transport under n twists");
    auto p = std::make_shared<std::string>();
    auto omega = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    auto as_link = std::make_shared<bool>(false);
    poly2_opt(c, p);
    c->add_option("--omega", *omega)->required();
    c->add_option("--n", *n, "twist count")->required();
    c->add_flag("--link", *as_link, "emit the two-variable link polynomial");
    c->callback(run([p, omega, n, as_link, &format]() {
      const auto delta2 = lsf::io::parse_poly2(*p);
      if (*as_link)
        emit(lsf::io::poly2_to_json(lsf::twistalex::twist_link(delta2, *omega, *n)), format);
      else
        emit(lsf::io::poly1_to_json(lsf::twistalex::twist_knot(delta2, *omega, *n)), format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("classify", "twist family trichotomy");
    auto p = std::make_shared<std::string>();
    auto omega = std::make_shared<std::int64_t>(0);
    poly2_opt(c, p);
    c->add_option("--omega", *omega)->required();
    c->callback(run([p, omega, &format]() {
      const auto fc = lsf::twistalex::classify_family(lsf::io::parse_poly2(*p), *omega);
      json out;
      out["case"] = static_cast<int>(fc.tag);
      out["slope"] = fc.slope;
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("bound", "genus lower bound for K_n");
    auto p = std::make_shared<std::string>();
    auto omega = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    poly2_opt(c, p);
    c->add_option("--omega", *omega)->required();
    c->add_option("--n", *n)->required();
    c->callback(run([p, omega, n, &format]() {
      json out;
      out["bound"] = lsf::twistalex::genus_lower_bound(lsf::io::parse_poly2(*p), *omega, *n);
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("window", "necessary L-space surgery window");
    auto p = std::make_shared<std::string>();
    auto omega = std::make_shared<std::int64_t>(0);
    auto r0 = std::make_shared<std::string>();
    auto window = std::make_shared<std::string>();
    poly2_opt(c, p);
    c->add_option("--omega", *omega)->required();
    c->add_option("--r0", *r0, "base slope, rational \"a/b\"")->required();
    c->add_option("--window", *window, "\"min:max\"")->required();
    c->callback(run([p, omega, r0, window, &format]() {
      const auto [lo, hi] = lsf::io::parse_window(*window);
      const auto res = lsf::twistalex::lspace_window(
          lsf::io::parse_poly2(*p), *omega, lsf::io::parse_rational(*r0), lo, hi);
      json out;
      out["admissible"] = res.admissible;
      out["unbounded"] = res.unbounded;
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("cert", "L-space knot coefficient test");
    auto p = std::make_shared<std::string>();
    c->add_option("--poly", *p, "one-variable polynomial JSON or @file")->required();
    c->callback(run([p, &format]() {
      json out;
      out["candidate"] = lsf::twistalex::os_candidate_check(lsf::io::parse_poly1(*p));
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("staircase", "HFK staircase of an L-space knot");
    auto p = std::make_shared<std::string>();
    c->add_option("--poly", *p)->required();
    c->callback(run([p, &format]() {
      const auto gens = lsf::twistalex::staircase(lsf::io::parse_poly1(*p));
      json arr = json::array();
      for (const auto& g : gens) arr.push_back(json::array({g.alexander, g.maslov}));
      json out;
      out["generators"] = arr;
      emit(out, format);
    }));
  }
  {
    auto* c = alex_cmd->add_subcommand("enumerate", "candidate polynomials per genus");
    auto genus = std::make_shared<std::int64_t>(0);
    c->add_option("--genus", *genus)->required();
    c->callback(run([genus, &format]() {
      const auto polys = lsf::twistalex::enumerate_candidates(*genus);
      json arr = json::array();
      for (const auto& p : polys) arr.push_back(lsf::io::poly1_to_json(p));
      json out;
      out["genus"] = *genus;
      out["count"] = polys.size();
      out["candidates"] = arr;
      emit(out, format);
    }));
  }

  // --------------------------------------------------------------- braid
  auto* braid_cmd = app.add_subcommand("braid", "positive braids and censuses");
  braid_cmd->require_subcommand(1);
  {
    auto* c = braid_cmd->add_subcommand("genus", "Seifert genus of a positive braid knot");
    auto b = std::make_shared<std::string>();
    c->add_option("--braid", *b, "{\"strands\":n,\"letters\":[...]} or @file")->required();
    c->callback(run([b, &format]() {
      json out;
      out["genus"] = lsf::braid::genus_positive(lsf::io::parse_braid(*b));
      emit(out, format);
    }));
  }
  {
    auto* c = braid_cmd->add_subcommand("reduce", "Markov-style reduction");
    auto b = std::make_shared<std::string>();
    c->add_option("--braid", *b)->required();
    c->callback(run([b, &format]() {
      const auto res = lsf::braid::reduce(lsf::io::parse_braid(*b));
      json out;
      switch (res.tag) {
        case lsf::braid::ReduceTag::Reduced: out["result"] = "Reduced"; break;
        case lsf::braid::ReduceTag::Split: out["result"] = "Split"; break;
        case lsf::braid::ReduceTag::Irreducible: out["result"] = "Irreducible"; break;
      }
      if (res.tag == lsf::braid::ReduceTag::Reduced)
        out["word"] = lsf::io::braid_to_json(res.word);
      emit(out, format);
    }));
  }
  {
    auto* c = braid_cmd->add_subcommand("alexander", "Alexander polynomial of the closure");
    auto b = std::make_shared<std::string>();
    c->add_option("--braid", *b)->required();
    c->callback(run([b, &format]() {
      emit(lsf::io::poly1_to_json(lsf::braid::burau_alexander(lsf::io::parse_braid(*b))),
           format);
    }));
  }
  {
    auto* c = braid_cmd->add_subcommand("census", "positive braid knots of a given genus");
    auto genus = std::make_shared<std::int64_t>(0);
    c->add_option("--genus", *genus)->required();
    c->add_option("--jobs", jobs, "worker threads");
    c->callback(run([genus, &jobs, &format]() {
      const auto census = lsf::braid::enumerate_genus(*genus, jobs);
      for (const auto& e : census) {
        json line;
        line["genus"] = e.genus;
        line["alexander"] = lsf::io::poly1_to_json(e.alexander);
        line["word"] = lsf::io::braid_to_json(e.word);
        emit(line, format);
      }
    }));
  }
  {
    auto* c = braid_cmd->add_subcommand("torus", "torus braid (sigma_1...sigma_{q-1})^p");
    auto p = std::make_shared<std::int64_t>(0);
    auto q = std::make_shared<std::int64_t>(0);
    c->add_option("-p,--p", *p)->required();
    c->add_option("-q,--q", *q)->required();
    c->callback(run([p, q, &format]() {
      emit(lsf::io::braid_to_json(lsf::braid::torus_braid(*p, *q)), format);
    }));
  }
  {
    auto* c = braid_cmd->add_subcommand("twisted-torus", "braid form of T_{p,q,n}");
    auto p = std::make_shared<std::int64_t>(0);
    auto q = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    c->add_option("-p,--p", *p)->required();
    c->add_option("-q,--q", *q)->required();
    c->add_option("-n,--n", *n)->required();
    c->callback(run([p, q, n, &format]() {
      emit(lsf::io::braid_to_json(lsf::braid::twisted_torus_braid(*p, *q, *n)), format);
    }));
  }

  // ------------------------------------------------------------ homology
  auto* hom_cmd = app.add_subcommand("homology", "surgery presentations and SNF");
  hom_cmd->require_subcommand(1);
  {
    auto* c = hom_cmd->add_subcommand("snf", "Smith normal form U*M*V = D");
    auto m = std::make_shared<std::string>();
    c->add_option("--matrix", *m, "[[...],...] JSON or @file")->required();
    c->callback(run([m, &format]() {
      const auto res = lsf::homology::smith_normal_form(lsf::io::parse_matrix(*m));
      json out;
      out["d"] = lsf::io::matrix_to_json(res.d);
      out["u"] = lsf::io::matrix_to_json(res.u);
      out["v"] = lsf::io::matrix_to_json(res.v);
      emit(out, format);
    }));
  }
  {
    auto* c = hom_cmd->add_subcommand("h1", "group presented by the matrix");
    auto m = std::make_shared<std::string>();
    c->add_option("--matrix", *m)->required();
    c->callback(run([m, &format]() {
      const auto res = lsf::homology::h1_from_presentation(lsf::io::parse_matrix(*m));
      json out;
      out["order"] = lsf::io::int_to_json(res.order);
      json factors = json::array();
      for (const auto& f : res.invariant_factors) factors.push_back(lsf::io::int_to_json(f));
      out["invariantFactors"] = factors;
      emit(out, format);
    }));
  }
  {
    auto* c = hom_cmd->add_subcommand("surgery", "|H1| of a surgery description");
    auto s = std::make_shared<std::string>();
    c->add_option("--surgery", *s,
                  "{\"linking\":[[...]],\"framings\":[\"p/q\",...]} or @file")
        ->required();
    c->callback(run([s, &format]() {
      json out;
      out["order"] = lsf::io::int_to_json(lsf::homology::surgery_h1(lsf::io::parse_surgery(*s)));
      emit(out, format);
    }));
  }
  {
    auto* c = hom_cmd->add_subcommand("family-det", "|det M_n| of the twist presentation");
    auto a11 = std::make_shared<std::string>();
    auto a12 = std::make_shared<std::string>();
    auto a21 = std::make_shared<std::string>();
    auto p = std::make_shared<std::int64_t>(0);
    auto q = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::string>();
    auto range = std::make_shared<std::string>();
    c->add_option("--a11", *a11)->required();
    c->add_option("--a12", *a12)->required();
    c->add_option("--a21", *a21)->required();
    c->add_option("-p,--p", *p)->required();
    c->add_option("-q,--q", *q)->required();
    c->add_option("-n,--n", *n, "single n");
    c->add_option("--range", *range, "window \"min:max\" of n");
    c->callback(run([a11, a12, a21, p, q, n, range, &format]() {
      const lsf::Int va11(lsf::io::parse_rational(*a11).num());
      const lsf::Int va12(lsf::io::parse_rational(*a12).num());
      const lsf::Int va21(lsf::io::parse_rational(*a21).num());
      json out;
      if (!range->empty()) {
        const auto [lo, hi] = lsf::io::parse_window(*range);
        json values = json::array();
        for (std::int64_t i = lo; i <= hi; ++i)
          values.push_back(json::array(
              {i, lsf::io::int_to_json(lsf::homology::pseudoseiferter_det(
                      va11, va12, va21, lsf::Int(*p), lsf::Int(*q), lsf::Int(i)))}));
        out["values"] = values;
      } else if (!n->empty()) {
        out["det"] = lsf::io::int_to_json(lsf::homology::pseudoseiferter_det(
            va11, va12, va21, lsf::Int(*p), lsf::Int(*q),
            lsf::Int(lsf::io::parse_rational(*n).num())));
      } else {
        throw lsf::io::ParseFailure("family-det needs -n or --range");
      }
      emit(out, format);
    }));
  }

  // allow --format and other top-level flags after the subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return exit_code;
}
