// Copyright 2026 The GameBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef GAMEBENCH_SERVICE_HPP_
#define GAMEBENCH_SERVICE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "gamebench/games.hpp"
#include "gamebench/llm_gateway.hpp"
#include "json.hpp"

namespace gamebench {

struct ServiceOptions {
  GatewayOptions gateway;
  int max_poll_ms = 30000;  // upper bound on a long-poll view
};

// Status code plus JSON body. Errors carry {code, message, detail}.
struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Fields and bounds of the action the player must submit now, in the tagged
// form accepted by POST /sessions/{id}/actions. Null when not their turn.
nlohmann::json LegalActionSchema(const GameEngine& engine, PlayerId player);

class Session;

// Registry of live sessions. Each session has one owner thread that steps the
// engine; request handlers only read state or queue actions under the
// session's lock.
class SessionService {
 public:
  explicit SessionService(ServiceOptions options = {});
  ~SessionService();
  SessionService(const SessionService&) = delete;
  SessionService& operator=(const SessionService&) = delete;

  // Body: a match config. Returns {session_id, tokens: {"<player id>": token}}.
  ApiResponse CreateSession(const nlohmann::json& body);
  // Blocks up to timeout_ms while the session version equals `since`.
  ApiResponse View(const std::string& id, const std::string& token, std::optional<std::uint64_t> since,
                   int timeout_ms);
  // Body: {token?, action: {...}} or {token?, reply: "<raw JSON text>"}, with
  // an optional round guard. `bearer` is used when the body has no token.
  ApiResponse SubmitAction(const std::string& id, const nlohmann::json& body, const std::string& bearer);
  ApiResponse Score(const std::string& id);

 private:
  std::shared_ptr<Session> Find(const std::string& id);

  ServiceOptions options_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

// HTTP front end over a SessionService.
class HttpServer {
 public:
  explicit HttpServer(SessionService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Returns the bound port; throws Error(kIo) on failure.
  int Bind(const std::string& host, int port);
  int BindToAnyPort(const std::string& host);
  void Listen();  // blocks until Stop()
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Splits "host:port" (port required).
std::pair<std::string, int> ParseBindAddress(const std::string& address);

}  // namespace gamebench

#endif  // GAMEBENCH_SERVICE_HPP_
