#include "posetlab/service.h"

#include <algorithm>
#include <chrono>

#include "httplib.h"
#include "posetlab/analysis.h"
#include "posetlab/error.h"
#include "posetlab/families.h"
#include "posetlab/reductions.h"

namespace posetlab {

namespace {

HttpReply error_reply(int status, std::string_view kind, const std::string& message) {
  return {status, {{"error", kind}, {"message", message}}};
}

struct CapExceeded {
  std::size_t size, cap;
};

SolveBudget request_budget(const ServiceConfig& config, const Json& req) {
  SolveBudget b = config.budget;
  if (req.is_object() && req.contains("budget")) {
    const Json& r = req["budget"];
    if (!r.is_object()) throw Error(ErrorKind::BadDocument, "budget must be an object");
    try {
      if (r.contains("positions")) b.max_positions = std::min(b.max_positions, r["positions"].get<std::size_t>());
      if (r.contains("millis")) b.max_millis = std::min(b.max_millis, r["millis"].get<std::size_t>());
    } catch (const Json::exception&) {
      throw Error(ErrorKind::BadDocument, "budget fields must be naturals");
    }
  }
  return b;
}

// A request is either a bare poset document or {"poset": doc, ...}.
Poset request_poset(const Json& req) {
  if (req.is_object() && req.contains("poset")) return poset_from_json(req["poset"]);
  return poset_from_json(req);
}

std::string string_field(const Json& req, const char* key) {
  if (!req.is_object() || !req.contains(key) || !req[key].is_string())
    throw Error(ErrorKind::BadDocument, std::string("missing string field '") + key + "'");
  return req[key].get<std::string>();
}

std::optional<Color> mover_of(const Json& req, const Poset& p) {
  if (!p.is_colored()) return std::nullopt;
  return parse_color(string_field(req, "toMove"));
}

void check_cap(const ServiceConfig& config, const Poset& p) {
  const std::size_t cap = p.is_colored() ? config.partisan_node_cap : config.impartial_node_cap;
  if (p.size() > cap) throw CapExceeded{p.size(), cap};
}

Json solve(const ServiceConfig& config, const Json& req) {
  Poset p = request_poset(req);
  check_cap(config, p);
  const SolveBudget budget = request_budget(config, req);
  Json r = p.is_colored() ? bw_report(p, budget) : impartial_report(p, budget);
  r["kind"] = p.is_colored() ? "black-white" : "impartial";
  r["digest"] = digest(p);
  return r;
}

Json bestmove(const ServiceConfig& config, const Json& req) {
  Poset p = request_poset(req);
  check_cap(config, p);
  auto mover = mover_of(req, p);
  MoveChoice m = choose_move(p, mover, request_budget(config, req));
  return {{"digest", digest(p)}, {"move", m.point ? Json(p.label(*m.point)) : Json(nullptr)}, {"winning", m.winning}};
}

Json whatif(const ServiceConfig& config, const Json& req) {
  Poset p = request_poset(req);
  check_cap(config, p);
  auto mover = mover_of(req, p);
  const PointId x = p.index_of(string_field(req, "move"));
  if (mover && p.color(x) != *mover)
    throw Error(ErrorKind::ColorMixing, "point '" + p.label(x) + "' is not " + std::string(to_string(*mover)));
  Poset next = play(p, x);
  const SolveBudget budget = request_budget(config, req);
  Json r{{"digest", digest(p)}, {"move", p.label(x)}, {"poset", poset_to_json(next)}, {"resultDigest", digest(next)}};
  if (mover) {
    r["moverWins"] = mover_wins_after(next, mover, budget);
    r["outcomeClass"] = bw_report(next, budget)["outcomeClass"];
  } else {
    const Json rep = impartial_report(next, budget);
    r["outcome"] = rep["outcome"];
    r["grundy"] = rep["grundy"];
    r["moverWins"] = rep["outcome"] == "forall";
  }
  return r;
}

std::size_t required(const std::optional<std::size_t>& v, const char* name) {
  if (!v) throw Error(ErrorKind::BadDocument, std::string("graph document needs '") + name + "'");
  return *v;
}

Json reduce(std::string_view which, const Json& req) {
  if (which == "kayles") return {{"poset", poset_to_json(kayles_to_poset(graph_from_json(req).simple()))}};
  if (which == "tqbf") {
    TqbfGadget g = tqbf_to_bwposet(qbf_from_json(req));
    return {{"poset", poset_to_json(g.poset)}, {"report", tqbf_report_json(g.report)}};
  }
  GraphDocument doc = graph_from_json(req);
  Digraph d = doc.digraph();
  const std::size_t s = required(doc.s, "s"), t = required(doc.t, "t");
  if (which == "reach") return {{"poset", digraph_to_poset_json(reach_to_game(d, s, t), Representation::AR)}};
  // For ord, s and t carry x and y.
  return {{"poset", digraph_to_poset_json(ord_to_nim4(d, s, t), Representation::HD)}};
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDocument: return 400;
    case ErrorKind::BudgetExceeded: return 408;
    default: return 422;
  }
}

HttpReply route(const ServiceConfig& config, std::string_view method, std::string_view path,
                const std::map<std::string, std::string>& query, std::string_view body) {
  auto get = [&] { return method == "GET"; };
  auto post = [&] { return method == "POST"; };
  auto wrong_method = [] { return error_reply(405, "MethodNotAllowed", "method not allowed"); };

  if (path == "/v1/health") {
    if (!get()) return wrong_method();
    return {200, {{"status", "ok"}}};
  }
  if (path == "/v1/generate") {
    if (!get()) return wrong_method();
    auto family = query.find("family");
    if (family == query.end()) throw Error(ErrorKind::BadParams, "missing query parameter 'family'");
    auto params = query.find("params");
    const auto values = parse_params(params == query.end() ? "" : params->second);
    return {200, poset_to_json(generate(family->second, values))};
  }
  static const std::map<std::string_view, Json (*)(const ServiceConfig&, const Json&)> posts{
      {"/v1/solve", solve}, {"/v1/bestmove", bestmove}, {"/v1/whatif", whatif}};
  if (auto it = posts.find(path); it != posts.end()) {
    if (!post()) return wrong_method();
    return {200, it->second(config, parse_json(body))};
  }
  constexpr std::string_view reduce_prefix = "/v1/reduce/";
  if (path.starts_with(reduce_prefix)) {
    const std::string_view which = path.substr(reduce_prefix.size());
    if (which == "kayles" || which == "tqbf" || which == "reach" || which == "ord") {
      if (!post()) return wrong_method();
      return {200, reduce(which, parse_json(body))};
    }
  }
  return error_reply(404, "NotFound", "no route for " + std::string(path));
}

HttpReply dispatch(const ServiceConfig& config, std::string_view method, std::string_view path,
                   const std::map<std::string, std::string>& query, std::string_view body) {
  try {
    return route(config, method, path, query, body);
  } catch (const BudgetExceeded& e) {
    HttpReply r = error_reply(408, to_string(e.kind()), e.what());
    r.body["positionsExplored"] = e.positions_explored();
    r.body["elapsedMillis"] = e.elapsed_millis();
    return r;
  } catch (const Error& e) {
    return error_reply(status_for(e.kind()), to_string(e.kind()), e.what());
  } catch (const CapExceeded& c) {
    HttpReply r = error_reply(422, "NodeCapExceeded",
                              "poset has " + std::to_string(c.size) + " points, cap is " + std::to_string(c.cap));
    r.body["size"] = c.size;
    r.body["cap"] = c.cap;
    return r;
  } catch (const Json::exception& e) {
    return error_reply(400, "BadDocument", e.what());
  }
}

}  // namespace

HttpReply handle(const ServiceConfig& config, std::string_view method, std::string_view path,
                 const std::map<std::string, std::string>& query, std::string_view body) {
  const auto start = std::chrono::steady_clock::now();
  HttpReply r = dispatch(config, method, path, query, body);
  r.elapsed_millis = static_cast<std::size_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

struct Server::Impl {
  ServiceConfig config;
  httplib::Server http;
};

Server::Server(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query(req.params.begin(), req.params.end());
    HttpReply r = handle(impl_->config, req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_header("X-Elapsed-Millis", std::to_string(r.elapsed_millis));
    res.set_content(r.body.dump(), "application/json");
  };
  // Unmatched routes still go through handle() so 404/405 bodies are JSON.
  impl_->http.Get(".*", handler);
  impl_->http.Post(".*", handler);
  impl_->http.Put(".*", handler);
  impl_->http.Delete(".*", handler);
  impl_->http.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  impl_->http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                   {"Access-Control-Allow-Headers", "Content-Type"},
                                   {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
}

Server::~Server() { stop(); }

int Server::bind() {
  auto& c = impl_->config;
  const int port = c.port == 0 ? impl_->http.bind_to_any_port(c.host)
                               : (impl_->http.bind_to_port(c.host, c.port) ? c.port : -1);
  if (port < 0) throw Error(ErrorKind::BindFailure, "cannot bind " + c.host + ":" + std::to_string(c.port));
  return port;
}

void Server::listen() { impl_->http.listen_after_bind(); }

void Server::wait_until_ready() { impl_->http.wait_until_ready(); }

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

}  // namespace posetlab
