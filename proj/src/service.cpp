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


#include "gamebench/service.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <random>
#include <thread>

#include "gamebench/config.hpp"
#include "gamebench/orchestrator.hpp"
#include "gamebench/prompts.hpp"
#include "gamebench/scoring.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

namespace gamebench {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

ApiResponse Fail(int status, std::string_view code, const std::string& message, json detail = json::object()) {
  return {status, json{{"code", code}, {"message", message}, {"detail", std::move(detail)}}};
}

std::string RandomHex(std::size_t digits) {
  static std::mutex mutex;
  static std::mt19937_64 engine{std::random_device{}()};
  const std::lock_guard lock(mutex);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  while (out.size() < digits) {
    std::uint64_t word = engine();
    for (int i = 0; i < 16 && out.size() < digits; ++i, word >>= 4) out += kHex[word & 15];
  }
  return out;
}

json IntegerField(std::int64_t lo, std::int64_t hi) { return json{{"kind", "integer"}, {"min", lo}, {"max", hi}}; }

json EnumField(std::initializer_list<const char*> values) {
  return json{{"kind", "enum"}, {"values", json(std::vector<std::string>(values.begin(), values.end()))}};
}

}  // namespace

json LegalActionSchema(const GameEngine& engine, PlayerId player) {
  const auto pending = engine.pending_players();
  if (engine.terminal() || std::find(pending.begin(), pending.end(), player) == pending.end()) return nullptr;
  const MatchConfig& config = engine.config();
  switch (engine.kind()) {
    case GameKind::kGuessAverage: {
      const auto& p = config.Get<GuessParams>();
      return json{{"type", "number"}, {"fields", {{"value", IntegerField(p.min, p.max)}}}};
    }
    case GameKind::kElFarolBar:
      return json{{"type", "bar"}, {"fields", {{"decision", EnumField({"go", "stay"})}}}};
    case GameKind::kDivideDollar:
      return json{{"type", "bid"}, {"fields", {{"amount", IntegerField(0, config.Get<DollarParams>().gold)}}}};
    case GameKind::kPublicGoods:
      return json{{"type", "contribution"}, {"fields", {{"tokens", IntegerField(0, engine.ContributionCap(player))}}}};
    case GameKind::kDinersDilemma:
      return json{{"type", "dish"}, {"fields", {{"dish", EnumField({"costly", "cheap"})}}}};
    case GameKind::kSealedBidAuction:
      return json{{"type", "auction_bid"}, {"fields", {{"amount", IntegerField(0, engine.Valuation(player))}}}};
    case GameKind::kBattleRoyale: {
      std::vector<PlayerId> targets;
      for (const PlayerId p : engine.alive_players()) {
        if (p != player || config.Get<RoyaleParams>().allow_self_target) targets.push_back(p);
      }
      return json{{"type", "shot"},
                  {"fields", {{"target", {{"kind", "player_or_null"}, {"values", targets}}}}}};
    }
    case GameKind::kPirateGame: {
      if (engine.step_kind() == StepKind::kVote) {
        return json{{"type", "vote"}, {"fields", {{"decision", EnumField({"accept", "reject"})}}}};
      }
      std::vector<PlayerId> players;
      for (PlayerId p = player; p < engine.n_players(); ++p) players.push_back(p);
      return json{{"type", "proposal"},
                  {"fields",
                   {{"allocation",
                     {{"kind", "allocation"}, {"players", players}, {"sum", engine.gold()}, {"min", 0}}}}}};
    }
  }
  return nullptr;
}

class Session {
 public:
  Session(std::string id, const MatchConfig& config, const ServiceOptions& options)
      : id_(std::move(id)), engine_(config) {
    for (std::size_t p = 0; p < config.roster.size(); ++p) {
      const AgentSpec& spec = config.roster[p];
      if (spec.kind == AgentKind::kHuman) {
        seats_.push_back(nullptr);
        const std::string token = RandomHex(32);
        tokens_.emplace(token, static_cast<PlayerId>(p));
        move_timeouts_[static_cast<PlayerId>(p)] = spec.move_timeout_ms;
      } else {
        seats_.push_back(MakeAgent(spec, options.gateway));
      }
    }
  }

  ~Session() {
    {
      const std::lock_guard lock(mutex_);
      stop_ = true;
    }
    inbox_.notify_all();
    changed_.notify_all();
    if (owner_.joinable()) owner_.join();
  }

  void Start() { owner_ = std::thread([this] { Run(); }); }

  json Tokens() const {
    json out = json::object();
    for (const auto& [token, player] : tokens_) out[std::to_string(player)] = token;
    return out;
  }

  std::optional<PlayerId> PlayerFor(const std::string& token) const {
    const auto it = tokens_.find(token);
    if (it == tokens_.end()) return std::nullopt;
    return it->second;
  }

  ApiResponse View(PlayerId player, std::optional<std::uint64_t> since, int timeout_ms) {
    std::unique_lock lock(mutex_);
    if (since && *since == version_ && timeout_ms > 0) {
      changed_.wait_for(lock, std::chrono::milliseconds(timeout_ms),
                        [&] { return stop_ || version_ != *since; });
    }
    const auto pending = engine_.pending_players();
    const bool to_move = !engine_.terminal() && std::find(pending.begin(), pending.end(), player) != pending.end();
    const bool submitted = submitted_.count(player) > 0;
    const auto waiting = static_cast<int>(
        std::count_if(pending.begin(), pending.end(), [&](PlayerId p) { return submitted_.count(p) == 0; }));

    const Observation observation = RenderObservation(engine_, player, engine_.config().prompt_version);
    json history = json::array();
    for (const Segment& s : observation.history) {
      history.push_back({{"role", s.role == Segment::Role::kUser ? "user" : "assistant"}, {"text", s.text}});
    }
    json view{{"session_id", id_},
              {"game", GameKindName(engine_.kind())},
              {"player", player},
              {"player_name", PlayerName(player)},
              {"phase", Phase()},
              {"version", version_},
              {"round", engine_.round()},
              {"step", engine_.terminal() ? "" : StepKindName(engine_.step_kind())},
              {"your_turn", to_move && !submitted},
              {"submitted", submitted},
              {"waiting_for", engine_.terminal() ? 0 : waiting},
              {"observation",
               {{"system", observation.system},
                {"history", history},
                {"request", to_move && !submitted ? observation.request : ""},
                {"text", observation.Text()}}},
              {"action_schema", to_move && !submitted ? LegalActionSchema(engine_, player) : json(nullptr)}};
    if (failed_) {
      view["status"] = "failed: " + failure_;
    } else if (engine_.terminal()) {
      view["status"] = "game over";
      view["score"] = score_ ? ScoreReportToJson(*score_) : json(nullptr);
    } else if (to_move && !submitted) {
      view["status"] = "your turn";
    } else {
      view["status"] = "waiting for " + std::to_string(waiting) + (waiting == 1 ? " player" : " players");
    }
    return {200, view};
  }

  ApiResponse Submit(PlayerId player, const json& body) {
    std::unique_lock lock(mutex_);
    if (failed_) return Fail(409, "SessionFailed", failure_);
    if (engine_.terminal()) return Fail(409, "GameOver", "the game has ended");
    if (body.contains("round") && body.at("round") != engine_.round()) {
      return Fail(409, "StaleRound", "the session is at round " + std::to_string(engine_.round()),
                  {{"round", engine_.round()}});
    }
    const auto pending = engine_.pending_players();
    if (std::find(pending.begin(), pending.end(), player) == pending.end()) {
      return Fail(409, "NotYourTurn", PlayerName(player) + " is not to move in this step");
    }
    if (submitted_.count(player)) {
      return Fail(409, "AlreadySubmitted", PlayerName(player) + " already acted in round " +
                                               std::to_string(engine_.round()));
    }
    Action action;
    if (body.contains("action")) {
      try {
        action = ActionFromJson(body.at("action"));
      } catch (const std::exception& e) {
        return Fail(400, "BadRequest", std::string("malformed action: ") + e.what());
      }
      if (const LegalCheck check = engine_.Legal(player, action); !check) {
        return Fail(422, "IllegalAction", check.message, {{"reason", IllegalReasonName(check.reason)}});
      }
    } else if (body.contains("reply") && body.at("reply").is_string()) {
      ParseResult parsed = ParseAction(body.at("reply").get<std::string>(), engine_, player);
      if (!parsed.ok()) {
        const int status = parsed.error == ParseErrorKind::kIllegalValue ? 422 : 400;
        return Fail(status, status == 422 ? "IllegalAction" : "BadRequest", parsed.message,
                    {{"reason", ParseErrorKindName(parsed.error)}});
      }
      action = *parsed.action;
    } else {
      return Fail(400, "BadRequest", "body needs an 'action' object or a 'reply' string");
    }
    submitted_.emplace(player, action);
    ++version_;
    changed_.notify_all();
    inbox_.notify_all();
    return {200, json{{"accepted", true}, {"round", engine_.round()}, {"version", version_}}};
  }

  ApiResponse Score() {
    const std::lock_guard lock(mutex_);
    if (failed_) return Fail(409, "SessionFailed", failure_);
    if (!engine_.terminal()) return Fail(409, "NotTerminal", "the game is still running");
    if (!score_) return Fail(409, "NotScored", score_note_);
    return {200, ScoreReportToJson(*score_)};
  }

 private:
  std::string Phase() const {
    if (failed_) return "failed";
    return engine_.terminal() ? "terminal" : "awaiting_actions";
  }

  void Bump() {
    ++version_;
    changed_.notify_all();
  }

  void Run() {
    std::unique_lock lock(mutex_);
    step_started_ = Clock::now();
    while (!stop_) {
      if (engine_.terminal()) {
        Finish();
        return;
      }
      const auto pending = engine_.pending_players();
      std::vector<PlayerId> bots;
      for (const PlayerId p : pending) {
        if (seats_.at(static_cast<std::size_t>(p)) && !submitted_.count(p)) bots.push_back(p);
      }
      if (!bots.empty()) {
        // Only this thread mutates the engine, so bots may read it unlocked.
        lock.unlock();
        std::vector<PlayerId> coerced;
        std::map<PlayerId, Action> actions;
        std::string failure;
        try {
          actions = CollectActions(engine_, seats_, bots, coerced);
        } catch (const std::exception& e) {
          failure = e.what();
        }
        lock.lock();
        if (!failure.empty()) {
          failed_ = true;
          failure_ = failure;
          Bump();
          return;
        }
        submitted_.insert(actions.begin(), actions.end());
        coerced_.insert(coerced_.end(), coerced.begin(), coerced.end());
        Bump();
        continue;
      }
      if (std::all_of(pending.begin(), pending.end(), [&](PlayerId p) { return submitted_.count(p) > 0; })) {
        engine_.Step(submitted_);
        for (const PlayerId p : coerced_) engine_.MarkCoerced(p);
        submitted_.clear();
        coerced_.clear();
        step_started_ = Clock::now();
        Bump();
        continue;
      }
      std::optional<Clock::time_point> deadline;
      for (const PlayerId p : pending) {
        if (submitted_.count(p)) continue;
        if (const auto& timeout = move_timeouts_[p]) {
          const auto at = step_started_ + std::chrono::milliseconds(*timeout);
          if (!deadline || at < *deadline) deadline = at;
        }
      }
      if (!deadline) {
        inbox_.wait(lock);
        continue;
      }
      if (inbox_.wait_until(lock, *deadline) == std::cv_status::timeout) {
        for (const PlayerId p : pending) {
          const auto& timeout = move_timeouts_[p];
          if (submitted_.count(p) || !timeout) continue;
          if (Clock::now() < step_started_ + std::chrono::milliseconds(*timeout)) continue;
          RngStream rng = AgentStream(engine_, p, kPurposeFallback);
          submitted_.emplace(p, RandomAction(engine_, p, rng));
          coerced_.push_back(p);
        }
        Bump();
      }
    }
  }

  void Finish() {
    if (IsScored(engine_.config())) {
      score_ = ScoreMatch(LogFromEngine(engine_));
      score_->run_id = id_;
    } else {
      score_note_ = "this game variant is not scored";
    }
    Bump();
  }

  const std::string id_;
  GameEngine engine_;
  std::vector<std::unique_ptr<Agent>> seats_;  // null for human seats
  std::map<std::string, PlayerId> tokens_;
  std::map<PlayerId, std::optional<int>> move_timeouts_;

  std::mutex mutex_;
  std::condition_variable inbox_;    // owner waits for submissions
  std::condition_variable changed_;  // long-polls wait for a new version
  std::map<PlayerId, Action> submitted_;
  std::vector<PlayerId> coerced_;
  std::uint64_t version_ = 0;
  Clock::time_point step_started_;
  bool stop_ = false;
  bool failed_ = false;
  std::string failure_;
  std::optional<ScoreReport> score_;
  std::string score_note_;
  std::thread owner_;
};

SessionService::SessionService(ServiceOptions options) : options_(std::move(options)) {}

SessionService::~SessionService() {
  std::map<std::string, std::shared_ptr<Session>> sessions;
  {
    const std::lock_guard lock(mutex_);
    sessions.swap(sessions_);
  }
}

std::shared_ptr<Session> SessionService::Find(const std::string& id) {
  const std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse SessionService::CreateSession(const json& body) {
  std::shared_ptr<Session> session;
  const std::string id = RandomHex(16);
  try {
    const json& config_json = body.is_object() && body.contains("config") ? body.at("config") : body;
    const MatchConfig config = ConfigFromJson(config_json);
    RequireValid(config);
    session = std::make_shared<Session>(id, config, options_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kConfigInvalid && e.code() != ErrorCode::kUnknownPromptVersion) throw;
    return Fail(400, "ConfigInvalid", e.what());
  }
  {
    const std::lock_guard lock(mutex_);
    sessions_.emplace(id, session);
  }
  session->Start();
  return {201, json{{"session_id", id}, {"tokens", session->Tokens()}}};
}

ApiResponse SessionService::View(const std::string& id, const std::string& token,
                                 std::optional<std::uint64_t> since, int timeout_ms) {
  const auto session = Find(id);
  if (!session) return Fail(404, "UnknownSession", "no session " + id);
  const auto player = session->PlayerFor(token);
  if (!player) return Fail(401, "BadToken", "token does not belong to this session");
  return session->View(*player, since, std::clamp(timeout_ms, 0, options_.max_poll_ms));
}

ApiResponse SessionService::SubmitAction(const std::string& id, const json& body, const std::string& bearer) {
  const auto session = Find(id);
  if (!session) return Fail(404, "UnknownSession", "no session " + id);
  if (!body.is_object()) return Fail(400, "BadRequest", "body must be a JSON object");
  const std::string token =
      body.contains("token") && body.at("token").is_string() ? body.at("token").get<std::string>() : bearer;
  const auto player = session->PlayerFor(token);
  if (!player) return Fail(401, "BadToken", "token does not belong to this session");
  return session->Submit(*player, body);
}

ApiResponse SessionService::Score(const std::string& id) {
  const auto session = Find(id);
  if (!session) return Fail(404, "UnknownSession", "no session " + id);
  return session->Score();
}

struct HttpServer::Impl {
  SessionService& service;
  httplib::Server server;
};

namespace {

void Send(httplib::Response& res, const ApiResponse& api) {
  res.status = api.status;
  res.set_content(api.body.dump(), "application/json");
}

std::string BearerToken(const httplib::Request& req) {
  if (req.has_param("token")) return req.get_param_value("token");
  const std::string header = req.get_header_value("Authorization");
  constexpr std::string_view kPrefix = "Bearer ";
  return header.rfind(kPrefix, 0) == 0 ? header.substr(kPrefix.size()) : std::string();
}

}  // namespace

HttpServer::HttpServer(SessionService& service) : impl_(new Impl{service, {}}) {
  auto& server = impl_->server;
  SessionService* svc = &service;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Authorization, Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
  server.Post("/sessions", [svc](const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) return Send(res, Fail(400, "BadRequest", "body is not valid JSON"));
    Send(res, svc->CreateSession(body));
  });
  server.Get(R"(/sessions/([^/]+)/view)", [svc](const httplib::Request& req, httplib::Response& res) {
    std::optional<std::uint64_t> since;
    int timeout_ms = 0;
    try {
      if (req.has_param("since")) since = std::stoull(req.get_param_value("since"));
      if (req.has_param("timeout_ms")) timeout_ms = std::stoi(req.get_param_value("timeout_ms"));
    } catch (const std::exception&) {
      return Send(res, Fail(400, "BadRequest", "since and timeout_ms must be integers"));
    }
    Send(res, svc->View(req.matches[1], BearerToken(req), since, timeout_ms));
  });
  server.Post(R"(/sessions/([^/]+)/actions)", [svc](const httplib::Request& req, httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded()) return Send(res, Fail(400, "BadRequest", "body is not valid JSON"));
    Send(res, svc->SubmitAction(req.matches[1], body, BearerToken(req)));
  });
  server.Get(R"(/sessions/([^/]+)/score)", [svc](const httplib::Request& req, httplib::Response& res) {
    Send(res, svc->Score(req.matches[1]));
  });
  server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    Send(res, Fail(500, "Internal", message));
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  if (!impl_->server.bind_to_port(host, port)) {
    throw Error(ErrorCode::kIo, "cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

int HttpServer::BindToAnyPort(const std::string& host) {
  const int port = impl_->server.bind_to_any_port(host);
  if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + host);
  return port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

std::pair<std::string, int> ParseBindAddress(const std::string& address) {
  const auto colon = address.rfind(':');
  if (colon == std::string::npos || colon + 1 == address.size()) {
    throw Error(ErrorCode::kConfigInvalid, "bind address must be host:port, got '" + address + "'");
  }
  try {
    std::size_t used = 0;
    const int port = std::stoi(address.substr(colon + 1), &used);
    if (used != address.size() - colon - 1 || port < 0 || port > 65535) throw std::out_of_range("port");
    return {address.substr(0, colon), port};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kConfigInvalid, "bad port in bind address '" + address + "'");
  }
}

}  // namespace gamebench
