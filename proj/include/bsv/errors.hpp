#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bsv {

// Domain failures carry a stable code plus the witness values, so callers
// (and the CLI) can act on structure rather than parse prose.
class DomainError : public std::runtime_error {
  public:
    using Data = std::vector<std::pair<std::string, std::string>>;

    DomainError(std::string code, const std::string& message, Data data = {})
        : std::runtime_error(message), code_(std::move(code)), data_(std::move(data)) {}

    const std::string& code() const { return code_; }
    const Data& data() const { return data_; }

  private:
    std::string code_;
    Data data_;
};

}  // namespace bsv
