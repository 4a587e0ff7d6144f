#pragma once

#include <stdexcept>
#include <string>

namespace sgc {

enum class Errc {
    parse = 1,
    domain,
    mismatch,
    uncolorable,
    capacity,
    malformed,
    corrupt_certificate,
    not_refinable,
    shape,
    internal,
    io,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what, int line = 0)
        : std::runtime_error(what), code_(code), line_(line) {}

    auto code() const noexcept -> Errc { return code_; }
    // Source line for parse errors, 0 otherwise.
    auto line() const noexcept -> int { return line_; }

  private:
    Errc code_;
    int line_;
};

} // namespace sgc
