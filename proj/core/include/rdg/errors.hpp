// Copyright 2026 The rdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RDG_ERRORS_HPP_
#define RDG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rdg {

// Error families map 1:1 onto CLI exit codes.
enum class ErrorFamily : int {
  kUsage = 2,
  kConfig = 3,
  kGateway = 4,
  kGeneration = 5,
  kPackaging = 6,
  kExperiment = 7,
  kStats = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorFamily family, std::string message)
      : std::runtime_error(std::move(message)), family_(family) {}

  ErrorFamily family() const { return family_; }
  int exit_code() const { return static_cast<int>(family_); }

 private:
  ErrorFamily family_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(std::string message)
      : Error(ErrorFamily::kConfig, std::move(message)) {}
};

class GatewayError : public Error {
 public:
  explicit GatewayError(std::string message)
      : Error(ErrorFamily::kGateway, std::move(message)) {}
};

// Transport failed after all retries were exhausted.
class TransportError : public GatewayError {
 public:
  explicit TransportError(std::string message)
      : GatewayError(std::move(message)) {}
};

// Provider answered with a non-2xx status; carries the provider message.
class ProviderError : public GatewayError {
 public:
  ProviderError(int status, std::string message)
      : GatewayError(std::move(message)), status_(status) {}
  int status() const { return status_; }

 private:
  int status_ = 0;
};

// Reply could not be parsed against its response contract, even after the
// single repair round-trip. Carries the raw reply text.
class StructuredOutputError : public GatewayError {
 public:
  StructuredOutputError(std::string message, std::string raw_reply)
      : GatewayError(std::move(message)), raw_reply_(std::move(raw_reply)) {}
  const std::string& raw_reply() const { return raw_reply_; }

 private:
  std::string raw_reply_;
};

class BudgetError : public GatewayError {
 public:
  explicit BudgetError(std::string message)
      : GatewayError(std::move(message)) {}
};

class GenerationError : public Error {
 public:
  explicit GenerationError(std::string message)
      : Error(ErrorFamily::kGeneration, std::move(message)) {}
};

class PackagingError : public Error {
 public:
  explicit PackagingError(std::string message)
      : Error(ErrorFamily::kPackaging, std::move(message)) {}
};

class ExperimentError : public Error {
 public:
  explicit ExperimentError(std::string message)
      : Error(ErrorFamily::kExperiment, std::move(message)) {}
};

class StatsError : public Error {
 public:
  explicit StatsError(std::string message)
      : Error(ErrorFamily::kStats, std::move(message)) {}
};

// Canonical decode failure; names the byte offset of the malformed input.
class DecodeError : public Error {
 public:
  DecodeError(std::string message, std::size_t byte_offset)
      : Error(ErrorFamily::kConfig, std::move(message)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_ = 0;
};

}  // namespace rdg

#endif  // RDG_ERRORS_HPP_
