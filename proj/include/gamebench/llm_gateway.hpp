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


#ifndef GAMEBENCH_LLM_GATEWAY_HPP_
#define GAMEBENCH_LLM_GATEWAY_HPP_

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gamebench/agents.hpp"
#include "gamebench/error.hpp"
#include "gamebench/prompts.hpp"
#include "gamebench/types.hpp"

namespace gamebench {

struct ChatMessage {
  std::string role;  // system | user | assistant
  std::string content;
  bool operator==(const ChatMessage&) const = default;
};

using ChatTranscript = std::vector<ChatMessage>;

// System message first (prefix, blank line, rules), then the history with
// consecutive user segments merged, the request closing the last user turn.
ChatTranscript BuildTranscript(const Observation& observation, std::string_view system_prefix = {});

// {"messages": [...], "model": ..., "temperature": ...} with sorted keys.
std::string ChatRequestBody(const std::string& model, const Rational& temperature, const ChatTranscript& transcript);

enum class ParseErrorKind { kNone, kNoJsonFound, kSchemaMismatch, kIllegalValue };
std::string_view ParseErrorKindName(ParseErrorKind kind);

struct ParseResult {
  std::optional<Action> action;
  ParseErrorKind error = ParseErrorKind::kNone;
  std::string message;
  bool ok() const { return action.has_value(); }
};

// First well-formed JSON object in `reply`, read with the schema of the
// current step and checked against GameEngine::Legal. Numbers may be given as
// JSON numbers or numeric strings.
ParseResult ParseAction(std::string_view reply, const GameEngine& engine, PlayerId player);

// Returns the first balanced {...} substring that parses as a JSON object.
std::optional<std::string> ExtractJsonObject(std::string_view text);

// Transport failure. `retryable` covers timeouts, connection errors, HTTP 429
// and 5xx.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, bool retryable)
      : Error(ErrorCode::kTransport, message), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

// One chat completion. The default implementation POSTs to
// base_url + "/chat/completions" with a bearer token read from the named
// environment variable.
class ChatClient {
 public:
  virtual ~ChatClient() = default;
  // Returns choices[0].message.content. Throws TransportError.
  virtual std::string Complete(const EndpointDescriptor& endpoint, const std::string& body) = 0;
};

std::shared_ptr<ChatClient> MakeHttpChatClient();

// Thread-safe JSONL mirror of every request and reply.
class TranscriptSidecar {
 public:
  explicit TranscriptSidecar(const std::filesystem::path& path);
  void Record(PlayerId player, int step, int attempt, const std::string& request, const std::string& reply,
              const std::string& error);

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

struct GatewayOptions {
  int max_reasks = 3;         // re-asks after an unusable reply
  int backoff_ms = 500;       // first transport retry delay, doubled each time
  int max_in_flight = 4;      // concurrent requests per base_url
  std::shared_ptr<ChatClient> client;  // defaults to the HTTP client
  std::shared_ptr<TranscriptSidecar> sidecar;
};

// Sends `body`, retrying retryable transport errors up to
// endpoint.max_retries attempts in total. Throws Error(kAgentFailure) once
// they are exhausted. At most options.max_in_flight requests per base_url run
// at a time, across all matches in the process.
std::string QueryAgent(const EndpointDescriptor& endpoint, const std::string& body, const GatewayOptions& options);

// Remote model seat. Unusable replies are re-asked with a correction notice;
// after options.max_reasks the seat plays a uniform random legal action and
// reports itself coerced.
std::unique_ptr<Agent> MakeLlmAgent(const AgentSpec& spec, const GatewayOptions& options);

}  // namespace gamebench

#endif  // GAMEBENCH_LLM_GATEWAY_HPP_
