#include "posetlab/cli.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "posetlab/analysis.h"
#include "posetlab/constructions.h"
#include "posetlab/document.h"
#include "posetlab/error.h"
#include "posetlab/families.h"
#include "posetlab/impartial.h"
#include "posetlab/nfree.h"
#include "posetlab/partisan.h"
#include "posetlab/random.h"
#include "posetlab/reductions.h"
#include "posetlab/service.h"

namespace posetlab {

namespace {

struct Globals {
  bool json = false;
  std::size_t budget_positions = SolveBudget{}.max_positions;
  std::size_t budget_ms = SolveBudget{}.max_millis;
  std::uint64_t seed = 1;
  std::string input = "-";

  SolveBudget budget() const { return {budget_positions, budget_ms}; }
};

class Context {
 public:
  Context(Globals& g, std::istream& in, std::ostream& out) : g_(g), in_(in), out_(out) {}

  Json read_document() const {
    std::stringstream text;
    if (g_.input == "-") {
      text << in_.rdbuf();
    } else {
      std::ifstream file(g_.input);
      if (!file) throw Error(ErrorKind::BadDocument, "cannot open '" + g_.input + "'");
      text << file.rdbuf();
    }
    return parse_json(text.str());
  }
  Poset read_poset() const { return poset_from_json(read_document()); }

  const Globals& globals() const { return g_; }
  std::ostream& out() const { return out_; }

  void emit(const Json& doc) const { out_ << doc.dump(2) << '\n'; }
  // --json prints `doc`, plain mode prints `text`.
  void report(const Json& doc, const std::string& text) const {
    if (g_.json)
      out_ << doc.dump() << '\n';
    else
      out_ << text << '\n';
  }

 private:
  Globals& g_;
  std::istream& in_;
  std::ostream& out_;
};

std::string join(const Json& labels) {
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : " ") + l.get<std::string>();
  return s;
}

std::string gset_text(const GSet& s) {
  std::string t = "{";
  for (auto x : s) t += (t.size() > 1 ? "," : "") + std::to_string(x);
  return t + "}";
}

Nimber fast_grundy(const Poset& p, SolveBudget budget) {
  if (!p.empty() && !find_n(p)) return grundy_nfree(p);
  return grundy(p, budget);
}

Poset recolor(const Poset& p, const std::string& spec, Rng& rng) {
  std::vector<Color> colors;
  if (spec == "random") {
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < p.size(); ++i) colors.push_back(coin(rng) ? Color::Black : Color::White);
  } else {
    if (spec.size() != p.size())
      throw Error(ErrorKind::BadParams, "--colors needs one of b/w per point (" + std::to_string(p.size()) + ")");
    for (char c : spec) {
      if (c != 'b' && c != 'w') throw Error(ErrorKind::BadParams, "--colors takes only 'b' and 'w'");
      colors.push_back(c == 'b' ? Color::Black : Color::White);
    }
  }
  return with_colors(p, colors);
}

void run_bench(const Context& ctx) {
  struct Case {
    std::string name;
    std::function<std::string()> run;
  };
  const SolveBudget budget = ctx.globals().budget();
  std::vector<Case> cases{
      {"chomp 4x5 grundy (search)", [&] { return std::to_string(grundy(chomp(4, 5), budget)); }},
      {"diamond 40 grundy (nfree)", [&] { return std::to_string(grundy_nfree(diamond(40))); }},
      {"random sp 200 grundy (nfree)",
       [&] {
         Rng rng(ctx.globals().seed);
         return std::to_string(grundy_nfree(evaluate(random_sp_tree(rng, 200))));
       }},
      {"flip of random 10-point poset",
       [&] {
         Rng rng(ctx.globals().seed);
         return std::to_string(grundy(flip(random_poset(rng, 10, 0.3)), budget));
       }},
      {"black-white value, 6 blacks under a white",
       [&] {
         Poset p = series(chain(1), antichain(6));
         std::vector<Color> colors;
         for (PointId x = 0; x < p.size(); ++x) colors.push_back(p.label(x) == "c0" ? Color::White : Color::Black);
         GameEngine e(budget);
         return e.value(e.from_bw_poset(with_colors(p, colors))).to_string();
       }},
      {"tqbf gadget n=2 m=3", [&] {
         return std::to_string(tqbf_to_bwposet({5, {{1, -2, 3}, {-3, 4, 5}, {2, -5}}}).report.total) + " points";
       }}};
  Json rows = Json::array();
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const std::string result = c.run();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back({{"name", c.name}, {"result", result}, {"millis", ms}});
    if (!ctx.globals().json) ctx.out() << c.name << ": " << result << " in " << ms << " ms\n";
  }
  if (ctx.globals().json) ctx.out() << rows.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poset game solver toolkit", "posetlab"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--budget-positions", g.budget_positions, "Position budget per solve");
  app.add_option("--budget-ms", g.budget_ms, "Time budget per solve in milliseconds");
  app.add_option("--seed", g.seed, "Seed for randomized helpers");

  Context ctx(g, in, out);
  std::function<void()> action;
  auto command = [&](const std::string& name, const std::string& help, bool reads_input = true) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (reads_input) sub->add_option("input", g.input, "Document path, or - for stdin");
    return sub;
  };

  std::string family, params, colors;
  auto* gen = command("gen", "Emit a poset document for a family", false);
  gen->add_option("family", family,
                  "chain, antichain, v, lambda, diamond, nim, chomp, divisors, forest, levels, random")
      ->required();
  gen->add_option("params", params, "Comma-separated parameters, e.g. 3,5,7");
  gen->add_option("--colors", colors, "One b/w per point, or 'random'");
  gen->callback([&] {
    action = [&] {
      Rng rng(g.seed);
      const auto values = parse_params(params);
      Poset p;
      if (family == "random") {
        if (values.size() != 1 || values[0] < 0) throw Error(ErrorKind::BadParams, "random expects a point count");
        p = random_poset(rng, static_cast<std::size_t>(values[0]), 0.3);
      } else {
        p = generate(family, values);
      }
      if (!colors.empty()) p = recolor(p, colors, rng);
      ctx.emit(poset_to_json(p));
    };
  });

  command("solve", "Outcome, g-number and winning moves (or black-white analysis)")->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      if (p.is_colored()) {
        Json r = bw_report(p, g.budget());
        ctx.report(r, "class " + r["outcomeClass"].get<std::string>() +
                          (r["value"].is_null() ? "" : ", value " + r["value"].get<std::string>()));
        return;
      }
      Json r = impartial_report(p, g.budget());
      ctx.report(r, r["outcome"].get<std::string>() + ", g = " + std::to_string(r["grundy"].get<Nimber>()) +
                        (r["winningMoves"].empty() ? "" : ", winning moves: " + join(r["winningMoves"])));
    };
  });

  command("grundy", "g-number")->callback([&] {
    action = [&] {
      const Nimber v = fast_grundy(ctx.read_poset(), g.budget());
      ctx.report({{"grundy", v}}, std::to_string(v));
    };
  });

  command("gset", "g-numbers of the options")->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      GSet s;
      if (!p.empty() && !find_n(p))
        s = gset_of(decompose(p));
      else
        s = gset(p, g.budget());
      ctx.report({{"gset", s.elements()}}, gset_text(s));
    };
  });

  command("moves", "Winning moves")->callback([&] {
    action = [&] {
      Json r = impartial_report(ctx.read_poset(), g.budget());
      ctx.report({{"winningMoves", r["winningMoves"]}}, join(r["winningMoves"]));
    };
  });

  command("value", "Value of a numeric black-white position")->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      GameEngine e(g.budget());
      const Dyadic v = e.value(e.from_bw_poset(p));
      ctx.report({{"value", v.to_string()}}, v.to_string());
    };
  });

  command("outcome-class", "P, L, R or N for a black-white position")->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      GameEngine e(g.budget());
      const std::string c(to_string(e.outcome_class(e.from_bw_poset(p))));
      ctx.report({{"outcomeClass", c}}, c);
    };
  });

  std::string color;
  auto* best = command("bestmove", "Winning move for the given color");
  best->add_option("--color", color, "black or white (black-white posets)");
  best->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      std::optional<PointId> move;
      if (p.is_colored()) {
        if (color.empty()) throw Error(ErrorKind::BadParams, "--color is required for black-white posets");
        if (auto m = best_move_bw(p, parse_color(color))) move = m->point;
      } else {
        auto wins = winning_moves(p, g.budget());
        if (!wins.empty()) move = wins.front();
      }
      ctx.report({{"move", move ? Json(p.label(*move)) : Json(nullptr)}}, move ? p.label(*move) : "none");
    };
  });

  command("decompose", "Series-parallel decomposition or an N witness")->callback([&] {
    action = [&] {
      Poset p = ctx.read_poset();
      if (auto w = find_n(p)) {
        Json witness = {p.label(w->a), p.label(w->b), p.label(w->c), p.label(w->d)};
        ctx.report({{"witness", witness}}, "N: " + join(witness));
        throw NotNFree(*w);
      }
      const std::string text = to_string(decompose(p));
      ctx.report({{"tree", text}}, text);
    };
  });

  command("flip", "Outcome-flipping construction")->callback([&] {
    action = [&] { ctx.emit(poset_to_json(flip(ctx.read_poset()))); };
  });

  std::size_t t = 1;
  auto* thr = command("threshold", "Threshold construction");
  thr->add_option("--t", t, "Threshold t >= 1")->required();
  thr->callback([&] {
    action = [&] { ctx.emit(poset_to_json(threshold(ctx.read_poset(), t))); };
  });

  auto* reduce = app.add_subcommand("reduce", "Hardness-reduction gadgets");
  reduce->require_subcommand(1);
  reduce->fallthrough();
  auto reduction = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = reduce->add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", g.input, "Document path, or - for stdin");
    return sub;
  };
  reduction("kayles", "Node Kayles graph to a three-level poset")->callback([&] {
    action = [&] { ctx.emit(poset_to_json(kayles_to_poset(graph_from_json(ctx.read_document()).simple()))); };
  });
  bool report_only = false;
  auto* tq = reduction("tqbf", "QBF to a black-white poset");
  tq->add_flag("--report", report_only, "Print only the structure report");
  tq->callback([&] {
    action = [&] {
      TqbfGadget gadget = tqbf_to_bwposet(qbf_from_json(ctx.read_document()));
      if (report_only)
        ctx.emit(tqbf_report_json(gadget.report));
      else
        ctx.emit(poset_to_json(gadget.poset));
    };
  });
  std::optional<std::size_t> from, to;
  auto endpoints = [&](const GraphDocument& doc) {
    auto a = from ? from : doc.s;
    auto b = to ? to : doc.t;
    if (!a || !b) throw Error(ErrorKind::BadDocument, "need both endpoints (document s/t or flags)");
    return std::pair{*a, *b};
  };
  auto* reach = reduction("reach", "s-t reachability to an AR poset game");
  reach->add_option("--s", from, "Source vertex (overrides the document)");
  reach->add_option("--t", to, "Target vertex (overrides the document)");
  reach->callback([&] {
    action = [&] {
      GraphDocument doc = graph_from_json(ctx.read_document());
      auto [s, tt] = endpoints(doc);
      ctx.emit(digraph_to_poset_json(reach_to_game(doc.digraph(), s, tt), Representation::AR));
    };
  });
  auto* ord = reduction("ord", "Order on a path to a four-chain game");
  ord->add_option("--x", from, "First vertex (default: document s)");
  ord->add_option("--y", to, "Second vertex (default: document t)");
  ord->callback([&] {
    action = [&] {
      GraphDocument doc = graph_from_json(ctx.read_document());
      auto [x, y] = endpoints(doc);
      ctx.emit(digraph_to_poset_json(ord_to_nim4(doc.digraph(), x, y), Representation::HD));
    };
  });

  ServiceConfig service;
  auto* serve = command("serve", "Run the HTTP service", false);
  serve->add_option("--port", service.port, "Port (0 picks a free one)");
  serve->add_option("--host", service.host, "Bind address");
  serve->add_option("--impartial-cap", service.impartial_node_cap, "Largest impartial poset solved");
  serve->add_option("--partisan-cap", service.partisan_node_cap, "Largest black-white poset solved");
  serve->callback([&] {
    action = [&] {
      service.budget = g.budget();
      Server server(service);
      const int port = server.bind();
      err << "listening on " << service.host << ":" << port << std::endl;
      server.listen();
    };
  });

  command("bench", "Time a fixed set of workloads", false)->callback([&] { action = [&] { run_bench(ctx); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const NotNFree& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 1;
  }
}

}  // namespace posetlab
