#pragma once

#include <stdexcept>
#include <string>

namespace cineparse {

enum class Errc {
  bad_input,
  empty_manifest,
  non_contiguous_timeline,
  negative_duration,
  invalid_bin_count,
  layout_mismatch,
  empty_reference_histogram,
  missing_histogram,
  group_too_small,
  not_adjacent,
  non_contiguous_scene,
  cycle_detected,
  both_empty,
  unrealizable_spec,
  universe_mismatch,
};

// Errors raised on malformed inputs exit the CLI with status 2; errors that
// can only come from corrupted internal state exit with status 3.
enum class ErrorKind { validation, internal };

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }

  ErrorKind kind() const {
    switch (code_) {
      case Errc::non_contiguous_scene:
      case Errc::cycle_detected:
        return ErrorKind::internal;
      default:
        return ErrorKind::validation;
    }
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cineparse
