#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "posetlab/budget.h"
#include "posetlab/document.h"

namespace posetlab {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t impartial_node_cap = 64;
  std::size_t partisan_node_cap = 200;
  // Per-request default; a request may lower it but not raise it.
  SolveBudget budget{2'000'000, 10'000};
};

// Bodies are a function of the request alone; wall time travels in the
// X-Elapsed-Millis header.
struct HttpReply {
  int status = 200;
  Json body;
  std::size_t elapsed_millis = 0;
};

// The whole protocol, minus sockets. Stateless.
HttpReply handle(const ServiceConfig& config, std::string_view method, std::string_view path,
                 const std::map<std::string, std::string>& query, std::string_view body);

class Server {
 public:
  explicit Server(ServiceConfig config);
  ~Server();

  // Binds config.port (0 picks a free port) and returns the bound port.
  // Throws Error(BindFailure).
  int bind();
  // Serves until stop(); call after bind().
  void listen();
  // Blocks until listen() is accepting connections.
  void wait_until_ready();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace posetlab
