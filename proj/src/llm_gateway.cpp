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


#include "gamebench/llm_gateway.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <map>
#include <cstdlib>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#include "json.hpp"

namespace gamebench {
namespace {

using nlohmann::json;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

struct SchemaError {
  std::string message;
};

const json* FindKey(const json& object, std::string_view key) {
  if (auto it = object.find(std::string(key)); it != object.end()) return &*it;
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (Lower(Trim(it.key())) == key) return &it.value();
  }
  return nullptr;
}

const json& RequireKey(const json& object, std::string_view key) {
  const json* value = FindKey(object, key);
  if (!value) throw SchemaError{"missing key \"" + std::string(key) + "\""};
  return *value;
}

std::int64_t ReadInteger(const json& value, std::string_view what) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float()) {
    const double d = value.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) return static_cast<std::int64_t>(d);
  }
  if (value.is_string()) {
    const std::string text = Trim(value.get<std::string>());
    std::int64_t out = 0;
    const char* begin = text.data();
    if (!text.empty() && text.front() == '+') ++begin;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec == std::errc() && ptr == end && begin != end) return out;
  }
  throw SchemaError{std::string(what) + " is not an integer: " + value.dump()};
}

std::string ReadWord(const json& value, std::string_view what) {
  if (!value.is_string()) throw SchemaError{std::string(what) + " must be a string: " + value.dump()};
  return Lower(Trim(value.get<std::string>()));
}

// "player_3", "Player 3", "3" and 3 all name player id 2.
std::optional<PlayerId> ReadPlayer(const json& value) {
  if (value.is_null()) return std::nullopt;
  std::string text;
  if (value.is_number()) {
    text = std::to_string(ReadInteger(value, "target"));
  } else if (value.is_string()) {
    text = Lower(Trim(value.get<std::string>()));
    if (text.empty() || text == "null" || text == "none" || text == "miss") return std::nullopt;
    for (const std::string_view prefix : {"player_", "player ", "player"}) {
      if (text.rfind(prefix, 0) == 0) {
        text = text.substr(prefix.size());
        break;
      }
    }
  } else {
    throw SchemaError{"target must be a player name or null: " + value.dump()};
  }
  std::int64_t rank = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), rank);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw SchemaError{"unknown target: " + value.dump()};
  return static_cast<PlayerId>(rank - 1);
}

PirateProposal ReadProposal(const json& value, const GameEngine& engine, PlayerId player) {
  const auto size = static_cast<std::size_t>(engine.n_players() - player);
  PirateProposal proposal;
  if (value.is_array()) {
    for (const auto& item : value) proposal.allocation.push_back(ReadInteger(item, "share"));
    return proposal;
  }
  if (!value.is_object()) throw SchemaError{"proposal must be an object keyed by rank"};
  proposal.allocation.assign(size, 0);
  std::vector<bool> seen(size, false);
  for (auto it = value.begin(); it != value.end(); ++it) {
    const auto rank = ReadPlayer(json(it.key()));
    if (!rank || *rank < player || *rank >= engine.n_players()) {
      throw SchemaError{"proposal key \"" + it.key() + "\" is not an alive pirate"};
    }
    const auto offset = static_cast<std::size_t>(*rank - player);
    if (seen[offset]) throw SchemaError{"proposal names pirate " + it.key() + " twice"};
    seen[offset] = true;
    proposal.allocation[offset] = ReadInteger(it.value(), "share");
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw SchemaError{"proposal must give a share to every pirate from " + std::to_string(player + 1) + " to " +
                      std::to_string(engine.n_players())};
  }
  return proposal;
}

Action ReadAction(const json& object, const GameEngine& engine, PlayerId player) {
  switch (engine.kind()) {
    case GameKind::kGuessAverage:
      return ChosenNumber{ReadInteger(RequireKey(object, "chosen_number"), "chosen_number")};
    case GameKind::kElFarolBar: {
      const std::string word = ReadWord(RequireKey(object, "decision"), "decision");
      if (word == "go") return BarDecision{BarChoice::kGo};
      if (word == "stay") return BarDecision{BarChoice::kStay};
      throw SchemaError{"decision must be \"go\" or \"stay\""};
    }
    case GameKind::kDivideDollar:
      return Bid{ReadInteger(RequireKey(object, "bid_amount"), "bid_amount")};
    case GameKind::kPublicGoods:
      return Contribution{ReadInteger(RequireKey(object, "tokens_contributed"), "tokens_contributed")};
    case GameKind::kDinersDilemma: {
      const std::string word = ReadWord(RequireKey(object, "chosen_dish"), "chosen_dish");
      if (word == "costly") return Dish{DishChoice::kCostly};
      if (word == "cheap") return Dish{DishChoice::kCheap};
      throw SchemaError{"chosen_dish must be \"costly\" or \"cheap\""};
    }
    case GameKind::kSealedBidAuction:
      return AuctionBid{ReadInteger(RequireKey(object, "bid"), "bid")};
    case GameKind::kBattleRoyale:
      return Shot{ReadPlayer(RequireKey(object, "target"))};
    case GameKind::kPirateGame: {
      if (engine.step_kind() == StepKind::kPropose) return ReadProposal(RequireKey(object, "proposal"), engine, player);
      const json& decision = RequireKey(object, "decision");
      if (decision.is_boolean()) return PirateVote{decision.get<bool>()};
      const std::string word = ReadWord(decision, "decision");
      if (word == "accept") return PirateVote{true};
      if (word == "reject") return PirateVote{false};
      throw SchemaError{"decision must be \"accept\" or \"reject\""};
    }
  }
  throw SchemaError{"unknown game"};
}

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing slash
};

ParsedUrl SplitUrl(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw TransportError("base_url has no scheme: " + url, false);
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.origin = url.substr(0, path_start);
  out.path = path_start == std::string::npos ? "" : url.substr(path_start);
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

// Process-wide cap on concurrent requests per endpoint.
class EndpointLimiter {
 public:
  static EndpointLimiter& Instance() {
    static EndpointLimiter limiter;
    return limiter;
  }

  void Acquire(const std::string& key, int limit) {
    std::unique_lock lock(mutex_);
    released_.wait(lock, [&] { return in_flight_[key] < std::max(1, limit); });
    ++in_flight_[key];
  }

  void Release(const std::string& key) {
    {
      const std::lock_guard lock(mutex_);
      --in_flight_[key];
    }
    released_.notify_all();
  }

 private:
  std::mutex mutex_;
  std::condition_variable released_;
  std::map<std::string, int> in_flight_;
};

class InFlight {
 public:
  InFlight(std::string key, int limit) : key_(std::move(key)) { EndpointLimiter::Instance().Acquire(key_, limit); }
  ~InFlight() { EndpointLimiter::Instance().Release(key_); }
  InFlight(const InFlight&) = delete;
  InFlight& operator=(const InFlight&) = delete;

 private:
  std::string key_;
};

class HttpChatClient : public ChatClient {
 public:
  std::string Complete(const EndpointDescriptor& endpoint, const std::string& body) override {
    const ParsedUrl url = SplitUrl(endpoint.base_url);
    httplib::Client client(url.origin);
    const auto timeout = std::chrono::milliseconds(endpoint.timeout_ms);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    client.set_tcp_nodelay(true);
    httplib::Headers headers;
    if (!endpoint.credential_env.empty()) {
      const char* token = std::getenv(endpoint.credential_env.c_str());
      if (!token) throw TransportError("environment variable " + endpoint.credential_env + " is not set", false);
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
    const auto result = client.Post(url.path + "/chat/completions", headers, body, "application/json");
    if (!result) throw TransportError("request failed: " + httplib::to_string(result.error()), true);
    if (result->status == 429 || result->status >= 500) {
      throw TransportError("HTTP " + std::to_string(result->status), true);
    }
    if (result->status != 200) {
      throw TransportError("HTTP " + std::to_string(result->status) + ": " + result->body.substr(0, 200), false);
    }
    const json reply = json::parse(result->body, nullptr, false);
    if (reply.is_discarded()) throw TransportError("response is not JSON", true);
    try {
      const json& content = reply.at("choices").at(0).at("message").at("content");
      return content.is_null() ? std::string() : content.get<std::string>();
    } catch (const json::exception&) {
      throw TransportError("response has no choices[0].message.content", true);
    }
  }
};

class LlmAgent : public Agent {
 public:
  LlmAgent(AgentSpec spec, GatewayOptions options) : spec_(std::move(spec)), options_(std::move(options)) {
    if (!spec_.endpoint) throw Error(ErrorCode::kConfigInvalid, "llm seat has no endpoint");
    if (!options_.client) options_.client = MakeHttpChatClient();
  }

  Action Act(const GameEngine& engine, PlayerId player) override {
    coerced_ = false;
    const Observation observation = RenderObservation(engine, player, engine.config().prompt_version);
    ChatTranscript transcript = BuildTranscript(observation, SystemPrefix(spec_));
    const Rational temperature = spec_.endpoint->temperature.value_or(engine.config().temperature);
    const int step = static_cast<int>(engine.history().size());
    for (int attempt = 0; attempt <= options_.max_reasks; ++attempt) {
      const std::string body = ChatRequestBody(spec_.endpoint->model, temperature, transcript);
      const std::string reply = QueryAgent(*spec_.endpoint, body, options_);
      ParseResult parsed = ParseAction(reply, engine, player);
      if (options_.sidecar) options_.sidecar->Record(player, step, attempt, body, reply, parsed.message);
      if (parsed.ok()) return *parsed.action;
      const std::string correction = Substitute(TemplateText(engine.kind(), observation.version, "correction"),
                                                {{"reason", parsed.message}});
      transcript.push_back({"assistant", reply});
      transcript.push_back({"user", correction + "\n" + observation.request});
    }
    coerced_ = true;
    RngStream rng = AgentStream(engine, player, kPurposeFallback);
    return RandomAction(engine, player, rng);
  }

  bool remote() const override { return true; }
  bool last_coerced() const override { return coerced_; }

 private:
  AgentSpec spec_;
  GatewayOptions options_;
  bool coerced_ = false;
};

}  // namespace

ChatTranscript BuildTranscript(const Observation& observation, std::string_view system_prefix) {
  ChatTranscript out;
  std::string system(system_prefix);
  if (!system.empty()) system += "\n\n";
  out.push_back({"system", system + observation.system});
  auto append_user = [&out](const std::string& text) {
    if (out.back().role == "user") {
      out.back().content += "\n" + text;
    } else {
      out.push_back({"user", text});
    }
  };
  for (const Segment& segment : observation.history) {
    if (segment.role == Segment::Role::kAssistant) {
      out.push_back({"assistant", segment.text});
    } else {
      append_user(segment.text);
    }
  }
  if (!observation.request.empty()) append_user(observation.request);
  return out;
}

std::string ChatRequestBody(const std::string& model, const Rational& temperature, const ChatTranscript& transcript) {
  json messages = json::array();
  for (const ChatMessage& m : transcript) messages.push_back({{"role", m.role}, {"content", m.content}});
  return json{{"model", model}, {"temperature", ToDouble(temperature)}, {"messages", std::move(messages)}}.dump();
}

std::string_view ParseErrorKindName(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kNone: return "None";
    case ParseErrorKind::kNoJsonFound: return "NoJsonFound";
    case ParseErrorKind::kSchemaMismatch: return "SchemaMismatch";
    case ParseErrorKind::kIllegalValue: return "IllegalValue";
  }
  return "?";
}

std::optional<std::string> ExtractJsonObject(std::string_view text) {
  for (std::size_t start = text.find('{'); start != std::string_view::npos; start = text.find('{', start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped) {
          escaped = false;
        } else if (c == '\\') {
          escaped = true;
        } else if (c == '"') {
          in_string = false;
        }
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}' && --depth == 0) {
        const std::string candidate(text.substr(start, i - start + 1));
        const json parsed = json::parse(candidate, nullptr, false);
        if (!parsed.is_discarded() && parsed.is_object()) return candidate;
        break;
      }
    }
  }
  return std::nullopt;
}

ParseResult ParseAction(std::string_view reply, const GameEngine& engine, PlayerId player) {
  ParseResult result;
  const auto object_text = ExtractJsonObject(reply);
  if (!object_text) {
    result.error = ParseErrorKind::kNoJsonFound;
    result.message = "no JSON object found";
    return result;
  }
  Action action;
  try {
    action = ReadAction(json::parse(*object_text), engine, player);
  } catch (const SchemaError& e) {
    result.error = ParseErrorKind::kSchemaMismatch;
    result.message = e.message;
    return result;
  }
  if (const LegalCheck check = engine.Legal(player, action); !check) {
    result.error = ParseErrorKind::kIllegalValue;
    result.message = check.message;
    return result;
  }
  result.action = std::move(action);
  return result;
}

std::shared_ptr<ChatClient> MakeHttpChatClient() { return std::make_shared<HttpChatClient>(); }

TranscriptSidecar::TranscriptSidecar(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::app);
  if (!out_) throw Error(ErrorCode::kIo, "cannot open " + path.string());
}

void TranscriptSidecar::Record(PlayerId player, int step, int attempt, const std::string& request,
                               const std::string& reply, const std::string& error) {
  json line{{"player", player}, {"step", step}, {"attempt", attempt}, {"reply", reply}};
  line["request"] = json::parse(request, nullptr, false);
  if (!error.empty()) line["error"] = error;
  const std::lock_guard lock(mutex_);
  out_ << line.dump() << '\n';
  out_.flush();
}

std::string QueryAgent(const EndpointDescriptor& endpoint, const std::string& body, const GatewayOptions& options) {
  const auto client = options.client ? options.client : MakeHttpChatClient();
  const int attempts = std::max(1, endpoint.max_retries);
  std::string last_error;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    try {
      const InFlight slot(endpoint.base_url, options.max_in_flight);
      return client->Complete(endpoint, body);
    } catch (const TransportError& e) {
      last_error = e.what();
      if (!e.retryable()) break;
    }
    if (attempt + 1 < attempts && options.backoff_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(static_cast<long>(options.backoff_ms) << attempt));
    }
  }
  throw Error(ErrorCode::kAgentFailure, endpoint.model + " at " + endpoint.base_url + ": " + last_error);
}

std::unique_ptr<Agent> MakeLlmAgent(const AgentSpec& spec, const GatewayOptions& options) {
  return std::make_unique<LlmAgent>(spec, options);
}

}  // namespace gamebench
