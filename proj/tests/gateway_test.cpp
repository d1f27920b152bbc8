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


#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <gtest/gtest.h>
#include <httplib.h>
#include "json.hpp"

#include <atomic>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <thread>

#include "gamebench/agents.hpp"
#include "gamebench/llm_gateway.hpp"
#include "test_support.hpp"

namespace gamebench {
namespace {

using nlohmann::json;
using testing::Config;
using testing::OracleSeat;
using testing::RandomSeat;

// Replies from a queue; an empty queue repeats the last entry.
class FakeClient : public ChatClient {
 public:
  using Reply = std::function<std::string(const std::string& body)>;
  explicit FakeClient(std::deque<Reply> replies) : replies_(std::move(replies)) {}

  std::string Complete(const EndpointDescriptor&, const std::string& body) override {
    std::lock_guard lock(mutex_);
    bodies.push_back(body);
    Reply reply = replies_.front();
    if (replies_.size() > 1) replies_.pop_front();
    return reply(body);
  }

  std::vector<std::string> bodies;

 private:
  std::mutex mutex_;
  std::deque<Reply> replies_;
};

FakeClient::Reply Say(std::string text) {
  return [text](const std::string&) { return text; };
}

FakeClient::Reply Fail(bool retryable) {
  return [retryable](const std::string&) -> std::string { throw TransportError("boom", retryable); };
}

EndpointDescriptor Endpoint(std::string base = "http://stub.invalid/v1") {
  EndpointDescriptor e;
  e.base_url = std::move(base);
  e.model = "stub-model";
  e.max_retries = 3;
  e.timeout_ms = 5000;
  return e;
}

GatewayOptions Options(std::shared_ptr<ChatClient> client) {
  GatewayOptions o;
  o.client = std::move(client);
  o.backoff_ms = 1;
  return o;
}

AgentSpec LlmSeat(std::string base = "http://stub.invalid/v1") {
  AgentSpec spec;
  spec.kind = AgentKind::kLlm;
  spec.endpoint = Endpoint(std::move(base));
  return spec;
}

// ---- Transcripts ----

TEST(Transcript, FirstRoundIsSystemAndRequest) {
  GameEngine engine(Config(GameKind::kGuessAverage, 10, 20, OracleSeat()));
  const auto t = BuildTranscript(RenderObservation(engine, 0, PromptVersion::kV1));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].role, "system");
  EXPECT_EQ(t[1].role, "user");
}

TEST(Transcript, ThirdRoundAlternatesRoles) {
  GameEngine engine(Config(GameKind::kGuessAverage, 3, 20, OracleSeat()));
  for (int r = 0; r < 2; ++r) engine.Step({{0, ChosenNumber{10}}, {1, ChosenNumber{20}}, {2, ChosenNumber{30}}});
  const auto t = BuildTranscript(RenderObservation(engine, 0, PromptVersion::kV1), "You are a pirate.");
  ASSERT_EQ(t.size(), 6u);
  const std::vector<std::string> roles = {"system", "user", "assistant", "user", "assistant", "user"};
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].role, roles[i]);
  EXPECT_EQ(t[0].content.rfind("You are a pirate.\n\n", 0), 0u);
  EXPECT_EQ(t[2].content, R"({"chosen_number": "10"})");
}

TEST(Transcript, RequestBodyShape) {
  const ChatTranscript t = {{"system", "s"}, {"user", "u"}};
  const json body = json::parse(ChatRequestBody("m", Rational(7, 10), t));
  EXPECT_EQ(body["model"], "m");
  EXPECT_DOUBLE_EQ(body["temperature"].get<double>(), 0.7);
  EXPECT_EQ(body["messages"].size(), 2u);
  EXPECT_EQ(body["messages"][1]["content"], "u");
}

// ---- Parsing ----

TEST(Parse, ExtractsJsonFromChatter) {
  GameEngine engine(Config(GameKind::kElFarolBar, 5, 2, OracleSeat()));
  const auto r = ParseAction(R"(Sure! {"decision":"go"} Hope that helps {"x":)", engine, 0);
  ASSERT_TRUE(r.ok()) << r.message;
  EXPECT_EQ(std::get<BarDecision>(*r.action).choice, BarChoice::kGo);
}

TEST(Parse, ErrorKinds) {
  GameEngine engine(Config(GameKind::kGuessAverage, 5, 2, OracleSeat()));
  EXPECT_EQ(ParseAction("I pick fifty", engine, 0).error, ParseErrorKind::kNoJsonFound);
  EXPECT_EQ(ParseAction(R"({"number": 5})", engine, 0).error, ParseErrorKind::kSchemaMismatch);
  EXPECT_EQ(ParseAction(R"({"chosen_number": 150})", engine, 0).error, ParseErrorKind::kIllegalValue);
  EXPECT_EQ(ParseAction(R"({"chosen_number": "abc"})", engine, 0).error, ParseErrorKind::kSchemaMismatch);
  const auto ok = ParseAction(R"({"Chosen_Number": "33"})", engine, 0);
  ASSERT_TRUE(ok.ok());
  EXPECT_EQ(std::get<ChosenNumber>(*ok.action).value, 33);
}

TEST(Parse, RoyaleTargets) {
  GameEngine engine(Config(GameKind::kBattleRoyale, 4, 1, OracleSeat()));
  const PlayerId actor = engine.pending_players().front();
  const PlayerId other = actor == 0 ? 1 : 0;
  for (const std::string& text : {R"({"target": "player_)" + std::to_string(other + 1) + "\"}",
                                 R"({"target": )" + std::to_string(other + 1) + "}"}) {
    const auto r = ParseAction(text, engine, actor);
    ASSERT_TRUE(r.ok()) << text << " " << r.message;
    EXPECT_EQ(std::get<Shot>(*r.action).target, other);
  }
  const auto miss = ParseAction(R"({"target": null})", engine, actor);
  ASSERT_TRUE(miss.ok());
  EXPECT_FALSE(std::get<Shot>(*miss.action).target.has_value());
}

TEST(Parse, ReplyTextRoundTripsForEveryGame) {
  for (const GameKind kind : kAllGames) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      GameEngine engine(Config(kind, 5, 4, RandomSeat(), seed));
      testing::PlayOut(engine, [](const GameEngine& e, PlayerId p) {
        RngStream rng = AgentStream(e, p);
        const Action action = RandomAction(e, p, rng);
        const PlayerId proposer = e.kind() == GameKind::kPirateGame ? e.proposer() : 0;
        const auto parsed = ParseAction(ReplyText(action, proposer), e, p);
        EXPECT_TRUE(parsed.ok()) << ReplyText(action, proposer) << ": " << parsed.message;
        if (parsed.ok()) {
          EXPECT_EQ(*parsed.action, action);
        }
        return action;
      });
    }
  }
}

// ---- Transport ----

TEST(Query, RetriesRetryableErrors) {
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{Fail(true), Fail(true), Say("ok")});
  EXPECT_EQ(QueryAgent(Endpoint(), "{}", Options(client)), "ok");
  EXPECT_EQ(client->bodies.size(), 3u);
}

TEST(Query, ExhaustedRetriesIsAgentFailure) {
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{Fail(true)});
  try {
    QueryAgent(Endpoint(), "{}", Options(client));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAgentFailure);
  }
  EXPECT_EQ(client->bodies.size(), 3u);
}

TEST(Query, NonRetryableStopsAtOnce) {
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{Fail(false), Say("never")});
  EXPECT_THROW(QueryAgent(Endpoint(), "{}", Options(client)), Error);
  EXPECT_EQ(client->bodies.size(), 1u);
}

TEST(Query, InFlightLimitPerEndpoint) {
  std::atomic<int> current{0};
  std::atomic<int> peak{0};
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{[&](const std::string&) {
    const int now = ++current;
    int seen = peak.load();
    while (now > seen && !peak.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    --current;
    return std::string("ok");
  }});
  GatewayOptions options = Options(client);
  options.max_in_flight = 2;
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] { QueryAgent(Endpoint("http://limited.invalid/v1"), "{}", options); });
  }
  for (auto& t : threads) t.join();
  EXPECT_LE(peak.load(), 2);
  EXPECT_GE(peak.load(), 1);
}

// ---- Agent ----

TEST(LlmAgent, ParsesGoodReply) {
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{Say(R"({"chosen_number": "0"})")});
  auto agent = MakeLlmAgent(LlmSeat(), Options(client));
  GameEngine engine(Config(GameKind::kGuessAverage, 3, 2, OracleSeat()));
  EXPECT_EQ(agent->Act(engine, 1), Action{ChosenNumber{0}});
  EXPECT_FALSE(agent->last_coerced());
  EXPECT_TRUE(agent->remote());
}

TEST(LlmAgent, ReasksWithCorrectionThenSucceeds) {
  auto client = std::make_shared<FakeClient>(
      std::deque<FakeClient::Reply>{Say("no idea"), Say(R"({"chosen_number": "12"})")});
  auto agent = MakeLlmAgent(LlmSeat(), Options(client));
  GameEngine engine(Config(GameKind::kGuessAverage, 3, 2, OracleSeat()));
  EXPECT_EQ(agent->Act(engine, 0), Action{ChosenNumber{12}});
  ASSERT_EQ(client->bodies.size(), 2u);
  const json second = json::parse(client->bodies[1]);
  ASSERT_EQ(second["messages"].size(), 4u);
  EXPECT_EQ(second["messages"][2]["content"], "no idea");
  EXPECT_NE(second["messages"][3]["content"].get<std::string>().find("could not be used"), std::string::npos);
}

TEST(LlmAgent, FallsBackAfterReasksAndMarksCoerced) {
  auto client = std::make_shared<FakeClient>(std::deque<FakeClient::Reply>{Say(R"({"chosen_number": 999})")});
  GatewayOptions options = Options(client);
  options.max_reasks = 2;
  auto agent = MakeLlmAgent(LlmSeat(), options);
  GameEngine engine(Config(GameKind::kGuessAverage, 3, 2, OracleSeat()));
  const Action a = agent->Act(engine, 0);
  EXPECT_TRUE(engine.Legal(0, a).ok());
  EXPECT_TRUE(agent->last_coerced());
  EXPECT_EQ(client->bodies.size(), 3u);
  RngStream rng = AgentStream(engine, 0, kPurposeFallback);
  EXPECT_EQ(a, RandomAction(engine, 0, rng));
}

TEST(LlmAgent, SidecarRecordsEveryAttempt) {
  testing::TempDir dir;
  auto client = std::make_shared<FakeClient>(
      std::deque<FakeClient::Reply>{Say("??"), Say(R"({"decision": "stay"})")});
  GatewayOptions options = Options(client);
  options.sidecar = std::make_shared<TranscriptSidecar>(dir.path() / "t.jsonl");
  auto agent = MakeLlmAgent(LlmSeat(), options);
  GameEngine engine(Config(GameKind::kElFarolBar, 3, 2, OracleSeat()));
  agent->Act(engine, 2);
  options.sidecar.reset();
  agent.reset();
  std::ifstream in(dir.path() / "t.jsonl");
  std::vector<json> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0]["attempt"], 0);
  EXPECT_FALSE(lines[0]["error"].get<std::string>().empty());
  EXPECT_EQ(lines[1]["reply"], R"({"decision": "stay"})");
}

// ---- HTTP client against a loopback stub ----

class StubServer {
 public:
  StubServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      ++hits;
      auth = req.get_header_value("Authorization");
      if (fail_first > 0) {
        --fail_first;
        res.status = status_on_fail;
        return;
      }
      const json body = json::parse(req.body);
      last_model = body["model"];
      res.set_content(json{{"choices", {{{"message", {{"role", "assistant"}, {"content", reply}}}}}}}.dump(),
                      "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~StubServer() {
    server_.stop();
    thread_.join();
  }
  std::string base() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1"; }

  std::atomic<int> hits{0};
  int fail_first = 0;
  int status_on_fail = 503;
  std::string reply = R"({"chosen_number": "7"})";
  std::string auth;
  std::string last_model;

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpClient, PostsToChatCompletionsWithBearer) {
  StubServer stub;
  ::setenv("GAMEBENCH_TEST_TOKEN", "sekret", 1);
  EndpointDescriptor e = Endpoint(stub.base());
  e.credential_env = "GAMEBENCH_TEST_TOKEN";
  GatewayOptions options;
  options.backoff_ms = 1;
  EXPECT_EQ(QueryAgent(e, ChatRequestBody("m1", 0, {{"user", "hi"}}), options), R"({"chosen_number": "7"})");
  EXPECT_EQ(stub.auth, "Bearer sekret");
  EXPECT_EQ(stub.last_model, "m1");
}

TEST(HttpClient, ServerErrorsRetriedClientErrorsNot) {
  StubServer stub;
  stub.fail_first = 2;
  GatewayOptions options;
  options.backoff_ms = 1;
  const std::string body = ChatRequestBody("m", 0, {{"user", "hi"}});
  EXPECT_EQ(QueryAgent(Endpoint(stub.base()), body, options), stub.reply);
  EXPECT_EQ(stub.hits.load(), 3);

  StubServer bad;
  bad.fail_first = 5;
  bad.status_on_fail = 400;
  EXPECT_THROW(QueryAgent(Endpoint(bad.base()), body, options), Error);
  EXPECT_EQ(bad.hits.load(), 1);
}

TEST(HttpClient, UnreachableEndpointIsAgentFailure) {
  EndpointDescriptor e = Endpoint("http://127.0.0.1:1/v1");
  e.timeout_ms = 500;
  e.max_retries = 2;
  GatewayOptions options;
  options.backoff_ms = 1;
  try {
    QueryAgent(e, "{}", options);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kAgentFailure);
  }
}

}  // namespace
}  // namespace gamebench
