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


#include "gamebench/error.hpp"

namespace gamebench {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kNotYourTurn: return "NotYourTurn";
    case ErrorCode::kGameOver: return "GameOver";
    case ErrorCode::kIncompleteLog: return "IncompleteLog";
    case ErrorCode::kNotScored: return "NotScored";
    case ErrorCode::kMalformedLog: return "MalformedLog";
    case ErrorCode::kReplayDivergence: return "ReplayDivergence";
    case ErrorCode::kUnknownPromptVersion: return "UnknownPromptVersion";
    case ErrorCode::kAgentFailure: return "AgentFailure";
    case ErrorCode::kTransport: return "Transport";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace gamebench
